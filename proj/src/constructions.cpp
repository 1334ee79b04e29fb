#include "homalg/constructions.hpp"

#include <utility>

#include "homalg/errors.hpp"

namespace homalg {

namespace {

// Output re-validation: a failed invariant after the preconditions passed
// contradicts the theorem the constructor realizes.
template <class F>
auto validated(const char* what, F&& build) -> decltype(build()) {
  try {
    return build();
  } catch (const InvariantViolation& e) {
    throw InternalCheckFailure(std::string(what) + " produced an invalid object: " + e.what());
  }
}

void require_class(const HomAlgebra& a, AlgebraClass cls, const char* who) {
  if (!check_algebra(a, cls, {.witness_cap = 1}).ok)
    throw PreconditionFailed(to_string(cls), std::string(who) + ": the algebra does not pass the " +
                                                 to_string(cls) + " checker");
}

void require_kind(const Bimodule& v, ModuleKind kind, const char* who) {
  if (!check_module(v, kind, {.witness_cap = 1}).ok)
    throw PreconditionFailed(to_string(kind), std::string(who) + ": the bimodule does not pass the " +
                                                  to_string(kind) + " checker");
}

void require_same_parent(const HomAlgebra& a, const Bimodule& v, const char* who) {
  if (a != v.parent())
    throw PreconditionFailed("parent-match",
                             std::string(who) + ": the bimodule is not over the given algebra");
}

void require_output_class(const HomAlgebra& e, AlgebraClass cls, const char* who) {
  const Report r = check_algebra(e, cls, {.witness_cap = 1});
  if (!r.ok)
    throw InternalCheckFailure(std::string(who) + ": output fails " + to_string(cls) + " at (" +
                               (r.witnesses.empty() ? std::string("?")
                                                    : r.witnesses.front().identity) +
                               ")");
}

void require_output_kind(const Bimodule& v, ModuleKind kind, const char* who) {
  const Report r = check_module(v, kind, {.witness_cap = 1});
  if (!r.ok)
    throw InternalCheckFailure(std::string(who) + ": output fails " + to_string(kind));
}

}  // namespace

const char* to_string(BimoduleClass cls) {
  return cls == BimoduleClass::Alternative ? "alternative" : "jordan";
}

BimoduleClass bimodule_class_from_string(const std::string& name) {
  if (name == "alternative") return BimoduleClass::Alternative;
  if (name == "jordan") return BimoduleClass::Jordan;
  throw LookupError("unknown construction class: " + name + " (want alternative or jordan)");
}

HomAlgebra plus_algebra(const HomAlgebra& a, bool half_normalized) {
  Tensor3 plus = a.mul() + transpose01(a.mul());
  if (half_normalized) plus = make_rational(1, 2) * plus;
  return validated("plus_algebra", [&] { return HomAlgebra(plus, a.alpha(), a.labels()); });
}

HomAlgebra yau_twist(const HomAlgebra& a, const Mat& beta) {
  if (beta.rows() != a.dim() || beta.cols() != a.dim())
    throw DimensionMismatch("yau_twist: twisting map must be " + std::to_string(a.dim()) + "x" +
                            std::to_string(a.dim()));
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      const Vec lhs = apply_linear(beta, Vec(a.mul().fiber(i, j)));
      const Vec rhs = apply_bilinear(a.mul(), Vec(beta.col(i)), Vec(beta.col(j)));
      if (!exact_eq(lhs, rhs))
        throw PreconditionFailed("endomorphism", "yau_twist: the map is not an endomorphism of "
                                                 "the product at (" +
                                                     a.label(i) + ", " + a.label(j) + ")");
    }
  if (!exact_eq(Mat(beta * a.alpha()), Mat(a.alpha() * beta)))
    throw PreconditionFailed("twist-commutes",
                             "yau_twist: the map does not commute with the algebra twist");
  return validated("yau_twist", [&] {
    return HomAlgebra(postcompose(beta, a.mul()), Mat(beta * a.alpha()), a.labels());
  });
}

Bimodule regular_bimodule(const HomAlgebra& a) {
  return validated("regular_bimodule",
                   [&] { return Bimodule(a, a.alpha(), a.mul(), a.mul()); });
}

namespace {

void check_twist_compat(const HomAlgebra& a, const Bimodule& v, const Mat& beta_a,
                        const Mat& beta_v) {
  if (beta_v.rows() != v.mdim() || beta_v.cols() != v.mdim())
    throw DimensionMismatch("module twisting map must be " + std::to_string(v.mdim()) + "x" +
                            std::to_string(v.mdim()));
  for (Index i = 0; i < a.dim(); ++i)
    for (Index s = 0; s < v.mdim(); ++s) {
      const Vec lhs = apply_linear(beta_v, Vec(v.rho_l().fiber(i, s)));
      const Vec rhs = apply_bilinear(v.rho_l(), Vec(beta_a.col(i)), Vec(beta_v.col(s)));
      if (!exact_eq(lhs, rhs))
        throw PreconditionFailed("left-twist-compatibility",
                                 "beta_v(a . v) != beta_a(a) . beta_v(v) at (" + a.label(i) + ", " +
                                     v.module_label(s) + ")");
    }
  for (Index s = 0; s < v.mdim(); ++s)
    for (Index i = 0; i < a.dim(); ++i) {
      const Vec lhs = apply_linear(beta_v, Vec(v.rho_r().fiber(s, i)));
      const Vec rhs = apply_bilinear(v.rho_r(), Vec(beta_v.col(s)), Vec(beta_a.col(i)));
      if (!exact_eq(lhs, rhs))
        throw PreconditionFailed("right-twist-compatibility",
                                 "beta_v(v . a) != beta_v(v) . beta_a(a) at (" +
                                     v.module_label(s) + ", " + a.label(i) + ")");
    }
  if (!exact_eq(Mat(beta_v * v.alpha_v()), Mat(v.alpha_v() * beta_v)))
    throw PreconditionFailed("module-twist-commutes",
                             "the module twisting map does not commute with alphaV");
}

}  // namespace

Bimodule twist_bimodule(const HomAlgebra& a, const Bimodule& v, const Mat& beta_a,
                        const Mat& beta_v) {
  require_same_parent(a, v, "twist_bimodule");
  const HomAlgebra twisted = yau_twist(a, beta_a);
  check_twist_compat(a, v, beta_a, beta_v);
  return validated("twist_bimodule", [&] {
    return Bimodule(twisted, Mat(beta_v * v.alpha_v()), postcompose(beta_v, v.rho_l()),
                    postcompose(beta_v, v.rho_r()));
  });
}

Bimodule nth_shift_bimodule(const Bimodule& v, unsigned n, BimoduleClass cls) {
  if (cls == BimoduleClass::Jordan) {
    const Mat pw = mat_power(v.alpha_v(), n);
    if (!exact_eq(pw, Mat(Mat::Identity(v.mdim(), v.mdim()))))
      throw PreconditionFailed("module-twist-power",
                               "jordan shift requires alphaV^" + std::to_string(n) + " = Id");
  }
  const Mat an = mat_power(v.parent().alpha(), n);
  return validated("nth_shift_bimodule", [&] {
    return Bimodule(v.parent(), v.alpha_v(), precompose0(v.rho_l(), an),
                    precompose1(v.rho_r(), an));
  });
}

Bimodule corollary_twist(const HomAlgebra& a, const Bimodule& v, const Mat& beta_a,
                         const Mat& beta_v, unsigned n) {
  require_same_parent(a, v, "corollary_twist");
  const HomAlgebra twisted = yau_twist(a, beta_a);
  check_twist_compat(a, v, beta_a, beta_v);
  const Mat bn1 = mat_power(beta_a, n + 1);
  return validated("corollary_twist", [&] {
    return Bimodule(twisted, Mat(beta_v * v.alpha_v()),
                    precompose1(precompose0(v.rho_l(), bn1), beta_v),
                    precompose0(precompose1(v.rho_r(), bn1), beta_v));
  });
}

Bimodule special_to_bimodule(const HomAlgebra& a, const Tensor3& rho1, const Tensor3& rho2,
                             const Mat& alpha_v) {
  require_class(a, AlgebraClass::Jordan, "special_to_bimodule");
  const Index m = alpha_v.rows();
  if (rho1.extent0() != a.dim() || rho1.extent1() != m || rho1.extent2() != m)
    throw DimensionMismatch("special_to_bimodule: rho1 must be algebra x module x module");
  if (rho2.extent0() != m || rho2.extent1() != a.dim() || rho2.extent2() != m)
    throw DimensionMismatch("special_to_bimodule: rho2 must be module x algebra x module");

  // One-sided views (the unused side mirrors the given one, which satisfies
  // the same twist-compatibility condition).
  const auto left_view = [&] { return Bimodule(a, alpha_v, rho1, transpose01(rho1)); };
  const auto right_view = [&] { return Bimodule(a, alpha_v, transpose01(rho2), rho2); };
  Bimodule lv = [&] {
    try {
      return left_view();
    } catch (const InvariantViolation& e) {
      throw PreconditionFailed("special-left", std::string("special_to_bimodule: rho1: ") + e.what());
    }
  }();
  Bimodule rv = [&] {
    try {
      return right_view();
    } catch (const InvariantViolation& e) {
      throw PreconditionFailed("special-right", std::string("special_to_bimodule: rho2: ") + e.what());
    }
  }();
  if (!check_module(lv, ModuleKind::SpecialLeft, {.witness_cap = 1}).ok)
    throw PreconditionFailed("special-left", "special_to_bimodule: rho1 is not a left special action");
  if (!check_module(rv, ModuleKind::SpecialRight, {.witness_cap = 1}).ok)
    throw PreconditionFailed("special-right",
                             "special_to_bimodule: rho2 is not a right special action");

  // rho2 o (rho1 x alphaA) = rho1 o (alphaA x rho2).
  for (Index i = 0; i < a.dim(); ++i)
    for (Index s = 0; s < m; ++s)
      for (Index j = 0; j < a.dim(); ++j) {
        const Vec lhs =
            apply_bilinear(rho2, Vec(rho1.fiber(i, s)), Vec(a.alpha().col(j)));
        const Vec rhs =
            apply_bilinear(rho1, Vec(a.alpha().col(i)), Vec(rho2.fiber(s, j)));
        if (!exact_eq(lhs, rhs))
          throw PreconditionFailed("operator-commutativity",
                                   "special_to_bimodule: (a . v) . alphaA(b) != alphaA(a) . (v . b) "
                                   "at (" +
                                       a.label(i) + ", f" + std::to_string(s) + ", " + a.label(j) +
                                       ")");
      }

  Bimodule out = validated("special_to_bimodule", [&] {
    return Bimodule(a, alpha_v, rho1 + transpose01(rho2), transpose01(rho1) + rho2);
  });
  require_output_kind(out, ModuleKind::JordanBimodule, "special_to_bimodule");
  return out;
}

Bimodule plus_bimodule(const HomAlgebra& a, const Bimodule& v) {
  require_same_parent(a, v, "plus_bimodule");
  require_class(a, AlgebraClass::Associative, "plus_bimodule");
  require_kind(v, ModuleKind::AssocBimodule, "plus_bimodule");
  const HomAlgebra aplus = plus_algebra(a);
  Bimodule out = validated("plus_bimodule", [&] {
    return Bimodule(aplus, v.alpha_v(), v.rho_l() + transpose01(v.rho_r()),
                    transpose01(v.rho_l()) + v.rho_r());
  });
  require_output_kind(out, ModuleKind::JordanBimodule, "plus_bimodule");
  return out;
}

HomAlgebra split_null_extension(const HomAlgebra& a, const Bimodule& v, BimoduleClass cls) {
  require_same_parent(a, v, "split_null_extension");
  if (cls == BimoduleClass::Alternative) {
    require_class(a, AlgebraClass::Alternative, "split_null_extension");
    require_kind(v, ModuleKind::AltBimodule, "split_null_extension");
  } else {
    require_class(a, AlgebraClass::Jordan, "split_null_extension");
    require_kind(v, ModuleKind::JordanBimodule, "split_null_extension");
  }

  const Index n = a.dim(), m = v.mdim(), nm = n + m;
  Tensor3 mul(nm, nm, nm);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) mul(i, j, k) = a.mul()(i, j, k);
  for (Index i = 0; i < n; ++i)
    for (Index s = 0; s < m; ++s)
      for (Index t = 0; t < m; ++t) {
        mul(i, n + s, n + t) = v.rho_l()(i, s, t);   // a . w
        mul(n + s, i, n + t) = v.rho_r()(s, i, t);   // u . b
      }
  // module x module stays zero: V is a square-zero ideal.

  Mat alpha = Mat::Zero(nm, nm);
  alpha.topLeftCorner(n, n) = a.alpha();
  alpha.bottomRightCorner(m, m) = v.alpha_v();

  std::vector<std::string> labels = a.labels();
  for (Index s = 0; s < m; ++s) labels.push_back(v.module_label(s));

  HomAlgebra e = validated("split_null_extension",
                           [&] { return HomAlgebra(std::move(mul), std::move(alpha), labels); });
  require_output_class(e, cls == BimoduleClass::Alternative ? AlgebraClass::Alternative
                                                            : AlgebraClass::Jordan,
                       "split_null_extension");
  return e;
}

}  // namespace homalg
