#include "homalg/bimodule.hpp"

#include <functional>
#include <utility>

#include "homalg/errors.hpp"

namespace homalg {

Bimodule::Bimodule(HomAlgebra parent, Mat alpha_v, Tensor3 rho_l, Tensor3 rho_r)
    : parent_(std::move(parent)), mdim_(alpha_v.rows()), alpha_v_(std::move(alpha_v)),
      rho_l_(std::move(rho_l)), rho_r_(std::move(rho_r)) {
  const Index n = parent_.dim();
  if (alpha_v_.rows() != alpha_v_.cols())
    throw DimensionMismatch("module twist matrix must be square");
  if (rho_l_.extent0() != n || rho_l_.extent1() != mdim_ || rho_l_.extent2() != mdim_)
    throw DimensionMismatch("left structure tensor must be " + std::to_string(n) + "x" +
                            std::to_string(mdim_) + "x" + std::to_string(mdim_));
  if (rho_r_.extent0() != mdim_ || rho_r_.extent1() != n || rho_r_.extent2() != mdim_)
    throw DimensionMismatch("right structure tensor must be " + std::to_string(mdim_) + "x" +
                            std::to_string(n) + "x" + std::to_string(mdim_));

  // Structure maps are morphisms of Hom-modules.
  for (Index i = 0; i < n; ++i)
    for (Index s = 0; s < mdim_; ++s) {
      const Vec lhs = apply_linear(alpha_v_, Vec(rho_l_.fiber(i, s)));
      const Vec rhs =
          apply_bilinear(rho_l_, Vec(parent_.alpha().col(i)), Vec(alpha_v_.col(s)));
      if (!exact_eq(lhs, rhs))
        throw InvariantViolation("left-structure-morphism", {parent_.label(i), module_label(s)},
                                 "left-structure-morphism fails: alphaV(a . v) != "
                                 "alphaA(a) . alphaV(v) at (" +
                                     parent_.label(i) + ", " + module_label(s) + ")");
    }
  for (Index s = 0; s < mdim_; ++s)
    for (Index i = 0; i < n; ++i) {
      const Vec lhs = apply_linear(alpha_v_, Vec(rho_r_.fiber(s, i)));
      const Vec rhs =
          apply_bilinear(rho_r_, Vec(alpha_v_.col(s)), Vec(parent_.alpha().col(i)));
      if (!exact_eq(lhs, rhs))
        throw InvariantViolation("right-structure-morphism", {module_label(s), parent_.label(i)},
                                 "right-structure-morphism fails: alphaV(v . a) != "
                                 "alphaV(v) . alphaA(a) at (" +
                                     module_label(s) + ", " + parent_.label(i) + ")");
    }
}

Vec module_hom_associator(const Bimodule& v, AssocPattern pattern, const Vec& x, const Vec& y,
                          const Vec& z) {
  const HomAlgebra& a = v.parent();
  switch (pattern) {
    case AssocPattern::VAA:
      return v.act_right(v.act_right(x, y), a.twist(z)) - v.act_right(v.twist_v(x), a.product(y, z));
    case AssocPattern::AVA:
      return v.act_right(v.act_left(x, y), a.twist(z)) - v.act_left(a.twist(x), v.act_right(y, z));
    case AssocPattern::AAV:
      return v.act_left(a.product(x, y), v.twist_v(z)) - v.act_left(a.twist(x), v.act_left(y, z));
  }
  throw Error("unreachable associator pattern");
}

const char* to_string(ModuleKind kind) {
  switch (kind) {
    case ModuleKind::AssocLeft: return "assoc-left";
    case ModuleKind::AssocRight: return "assoc-right";
    case ModuleKind::AssocBimodule: return "assoc-bimodule";
    case ModuleKind::AltLeft: return "alt-left";
    case ModuleKind::AltRight: return "alt-right";
    case ModuleKind::AltBimodule: return "alt-bimodule";
    case ModuleKind::JordanLeft: return "jordan-left";
    case ModuleKind::JordanRight: return "jordan-right";
    case ModuleKind::JordanBimodule: return "jordan-bimodule";
    case ModuleKind::SpecialLeft: return "special-left";
    case ModuleKind::SpecialRight: return "special-right";
    case ModuleKind::OperatorCommutativity: return "operator-commutativity";
  }
  return "?";
}

ModuleKind module_kind_from_string(const std::string& name) {
  for (ModuleKind k :
       {ModuleKind::AssocLeft, ModuleKind::AssocRight, ModuleKind::AssocBimodule,
        ModuleKind::AltLeft, ModuleKind::AltRight, ModuleKind::AltBimodule, ModuleKind::JordanLeft,
        ModuleKind::JordanRight, ModuleKind::JordanBimodule, ModuleKind::SpecialLeft,
        ModuleKind::SpecialRight, ModuleKind::OperatorCommutativity})
    if (name == to_string(k)) return k;
  throw LookupError("unknown module kind: " + name);
}

namespace {

// Shared scratch for the scans below: cached basis vectors and twist powers.
struct Ctx {
  const Bimodule& v;
  const HomAlgebra& a;
  std::vector<Vec> ea;   // algebra basis
  std::vector<Vec> fv;   // module basis
  Mat alpha2;            // alphaA^2
  Mat alpha_v2;          // alphaV^2

  explicit Ctx(const Bimodule& v_)
      : v(v_), a(v_.parent()), alpha2(v_.parent().alpha() * v_.parent().alpha()),
        alpha_v2(v_.alpha_v() * v_.alpha_v()) {
    for (Index i = 0; i < a.dim(); ++i) ea.push_back(unit(a.dim(), i));
    for (Index s = 0; s < v.mdim(); ++s) fv.push_back(unit(v.mdim(), s));
  }

  Vec as(AssocPattern p, const Vec& x, const Vec& y, const Vec& z) const {
    return module_hom_associator(v, p, x, y, z);
  }
};

using Scan = std::function<void(const Ctx&, WitnessSink&)>;

// ---- associative-flavored conditions ----------------------------------

void scan_assoc_left(const Ctx& c, WitnessSink& sink) {
  // (a b) . alphaV(v) = alphaA(a) . (b . v), i.e. as(a, b, v) = 0.
  for (Index i = 0; i < c.a.dim() && !sink.full(); ++i)
    for (Index j = 0; j < c.a.dim() && !sink.full(); ++j)
      for (Index s = 0; s < c.v.mdim() && !sink.full(); ++s) {
        Vec d = c.as(AssocPattern::AAV, c.ea[i], c.ea[j], c.fv[s]);
        if (!is_zero(d))
          sink.add("left-hom-associativity", {c.a.label(i), c.a.label(j), c.v.module_label(s)},
                   std::move(d));
      }
}

void scan_assoc_right(const Ctx& c, WitnessSink& sink) {
  // alphaV(v) . (a b) = (v . a) . alphaA(b), i.e. as(v, a, b) = 0.
  for (Index s = 0; s < c.v.mdim() && !sink.full(); ++s)
    for (Index i = 0; i < c.a.dim() && !sink.full(); ++i)
      for (Index j = 0; j < c.a.dim() && !sink.full(); ++j) {
        Vec d = c.as(AssocPattern::VAA, c.fv[s], c.ea[i], c.ea[j]);
        if (!is_zero(d))
          sink.add("right-hom-associativity", {c.v.module_label(s), c.a.label(i), c.a.label(j)},
                   std::move(d));
      }
}

void scan_operator_commutativity(const Ctx& c, WitnessSink& sink) {
  // (a . v) . alphaA(b) = alphaA(a) . (v . b), i.e. as(a, v, b) = 0.
  for (Index i = 0; i < c.a.dim() && !sink.full(); ++i)
    for (Index s = 0; s < c.v.mdim() && !sink.full(); ++s)
      for (Index j = 0; j < c.a.dim() && !sink.full(); ++j) {
        Vec d = c.as(AssocPattern::AVA, c.ea[i], c.fv[s], c.ea[j]);
        if (!is_zero(d))
          sink.add("operator-commutativity", {c.a.label(i), c.v.module_label(s), c.a.label(j)},
                   std::move(d));
      }
}

// ---- alternative-flavored conditions ----------------------------------

void scan_alt_left(const Ctx& c, WitnessSink& sink) {
  // as(x, y, v) skew in x, y.
  for (Index i = 0; i < c.a.dim() && !sink.full(); ++i)
    for (Index j = 0; j < c.a.dim() && !sink.full(); ++j)
      for (Index s = 0; s < c.v.mdim() && !sink.full(); ++s) {
        Vec d = c.as(AssocPattern::AAV, c.ea[i], c.ea[j], c.fv[s]) +
                c.as(AssocPattern::AAV, c.ea[j], c.ea[i], c.fv[s]);
        if (!is_zero(d))
          sink.add("left-module-alternativity", {c.a.label(i), c.a.label(j), c.v.module_label(s)},
                   std::move(d));
      }
}

void scan_alt_right(const Ctx& c, WitnessSink& sink) {
  // as(v, x, y) skew in x, y.
  for (Index s = 0; s < c.v.mdim() && !sink.full(); ++s)
    for (Index i = 0; i < c.a.dim() && !sink.full(); ++i)
      for (Index j = 0; j < c.a.dim() && !sink.full(); ++j) {
        Vec d = c.as(AssocPattern::VAA, c.fv[s], c.ea[i], c.ea[j]) +
                c.as(AssocPattern::VAA, c.fv[s], c.ea[j], c.ea[i]);
        if (!is_zero(d))
          sink.add("right-module-alternativity", {c.v.module_label(s), c.a.label(i), c.a.label(j)},
                   std::move(d));
      }
}

void scan_alt_chain(const Ctx& c, WitnessSink& sink) {
  // The four-term chain as(a,v,b) = -as(v,a,b) = as(b,a,v) = -as(a,b,v),
  // checked as three pairwise equalities on every basis triple.
  for (Index i = 0; i < c.a.dim() && !sink.full(); ++i)
    for (Index s = 0; s < c.v.mdim() && !sink.full(); ++s)
      for (Index j = 0; j < c.a.dim() && !sink.full(); ++j) {
        const Vec avb = c.as(AssocPattern::AVA, c.ea[i], c.fv[s], c.ea[j]);
        const Vec vab = c.as(AssocPattern::VAA, c.fv[s], c.ea[i], c.ea[j]);
        const Vec bav = c.as(AssocPattern::AAV, c.ea[j], c.ea[i], c.fv[s]);
        const Vec abv = c.as(AssocPattern::AAV, c.ea[i], c.ea[j], c.fv[s]);
        const std::vector<std::string> tuple{c.a.label(i), c.v.module_label(s), c.a.label(j)};
        Vec d1 = avb + vab;
        if (!is_zero(d1) && !sink.add("as(a,v,b)+as(v,a,b)", tuple, std::move(d1))) return;
        Vec d2 = bav + vab;
        if (!is_zero(d2) && !sink.add("as(b,a,v)+as(v,a,b)", tuple, std::move(d2))) return;
        Vec d3 = bav + abv;
        if (!is_zero(d3) && !sink.add("as(b,a,v)+as(a,b,v)", tuple, std::move(d3))) return;
      }
}

// ---- Jordan-flavored conditions ----------------------------------------

// Cyclic left-hand side shared by the two right-module identities:
//   alphaV(v.a) . alphaA(bc) + alphaV(v.b) . alphaA(ca) + alphaV(v.c) . alphaA(ab)
Vec jordan_right_lhs(const Ctx& c, Index s, Index i, Index j, Index k) {
  const auto term = [&](Index x, Index y, Index z) {
    return c.v.act_right(c.v.twist_v(Vec(c.v.rho_r().fiber(s, x))),
                         c.a.twist(Vec(c.a.mul().fiber(y, z))));
  };
  return term(i, j, k) + term(j, k, i) + term(k, i, j);
}

// Right-module identity 1 (cyclic form):
//   lhs = (alphaV(v).bc).alphaA^2(a) + (alphaV(v).ca).alphaA^2(b) + (alphaV(v).ab).alphaA^2(c)
Vec jordan_right_cyclic_defect(const Ctx& c, Index s, Index i, Index j, Index k) {
  const Vec av = c.v.alpha_v().col(s);
  const auto rhs_term = [&](Index x, Index y, Index z) {
    return c.v.act_right(c.v.act_right(av, Vec(c.a.mul().fiber(y, z))), Vec(c.alpha2.col(x)));
  };
  return jordan_right_lhs(c, s, i, j, k) - (rhs_term(i, j, k) + rhs_term(j, k, i) + rhs_term(k, i, j));
}

// Right-module identity 2 (recombined form):
//   lhs = ((v.a).alphaA(b)).alphaA^2(c) + ((v.c).alphaA(b)).alphaA^2(a)
//         + alphaV^2(v).((ac)alphaA(b))
Vec jordan_right_recombined_defect(const Ctx& c, Index s, Index i, Index j, Index k) {
  const Vec ab = c.a.alpha().col(j);
  Vec rhs = c.v.act_right(c.v.act_right(Vec(c.v.rho_r().fiber(s, i)), ab), Vec(c.alpha2.col(k)));
  rhs += c.v.act_right(c.v.act_right(Vec(c.v.rho_r().fiber(s, k)), ab), Vec(c.alpha2.col(i)));
  rhs += c.v.act_right(Vec(c.alpha_v2.col(s)),
                       c.a.product(Vec(c.a.mul().fiber(i, k)), ab));
  return jordan_right_lhs(c, s, i, j, k) - rhs;
}

// Bimodule variant of identity 2: the last term acts from the left,
//   ((ac)alphaA(b)) . alphaV^2(v).
Vec jordan_bimodule_recombined_defect(const Ctx& c, Index s, Index i, Index j, Index k) {
  const Vec ab = c.a.alpha().col(j);
  Vec rhs = c.v.act_right(c.v.act_right(Vec(c.v.rho_r().fiber(s, i)), ab), Vec(c.alpha2.col(k)));
  rhs += c.v.act_right(c.v.act_right(Vec(c.v.rho_r().fiber(s, k)), ab), Vec(c.alpha2.col(i)));
  rhs += c.v.act_left(c.a.product(Vec(c.a.mul().fiber(i, k)), ab), Vec(c.alpha_v2.col(s)));
  return jordan_right_lhs(c, s, i, j, k) - rhs;
}

// Mirrored cyclic left-hand side for left modules:
//   alphaA(bc) . alphaV(a.v) + alphaA(ca) . alphaV(b.v) + alphaA(ab) . alphaV(c.v)
Vec jordan_left_lhs(const Ctx& c, Index s, Index i, Index j, Index k) {
  const auto term = [&](Index x, Index y, Index z) {
    return c.v.act_left(c.a.twist(Vec(c.a.mul().fiber(y, z))),
                        c.v.twist_v(Vec(c.v.rho_l().fiber(x, s))));
  };
  return term(i, j, k) + term(j, k, i) + term(k, i, j);
}

Vec jordan_left_cyclic_defect(const Ctx& c, Index s, Index i, Index j, Index k) {
  const Vec av = c.v.alpha_v().col(s);
  const auto rhs_term = [&](Index x, Index y, Index z) {
    return c.v.act_left(Vec(c.alpha2.col(x)), c.v.act_left(Vec(c.a.mul().fiber(y, z)), av));
  };
  return jordan_left_lhs(c, s, i, j, k) - (rhs_term(i, j, k) + rhs_term(j, k, i) + rhs_term(k, i, j));
}

Vec jordan_left_recombined_defect(const Ctx& c, Index s, Index i, Index j, Index k) {
  const Vec ab = c.a.alpha().col(j);
  Vec rhs = c.v.act_left(Vec(c.alpha2.col(k)), c.v.act_left(ab, Vec(c.v.rho_l().fiber(i, s))));
  rhs += c.v.act_left(Vec(c.alpha2.col(i)), c.v.act_left(ab, Vec(c.v.rho_l().fiber(k, s))));
  rhs += c.v.act_left(c.a.product(Vec(c.a.mul().fiber(i, k)), ab), Vec(c.alpha_v2.col(s)));
  return jordan_left_lhs(c, s, i, j, k) - rhs;
}

void scan_jordan_right(const Ctx& c, WitnessSink& sink, bool bimodule_form) {
  for (Index s = 0; s < c.v.mdim() && !sink.full(); ++s)
    for (Index i = 0; i < c.a.dim() && !sink.full(); ++i)
      for (Index j = 0; j < c.a.dim() && !sink.full(); ++j)
        for (Index k = 0; k < c.a.dim() && !sink.full(); ++k) {
          const std::vector<std::string> tuple{c.v.module_label(s), c.a.label(i), c.a.label(j),
                                               c.a.label(k)};
          Vec d1 = jordan_right_cyclic_defect(c, s, i, j, k);
          if (!is_zero(d1) && !sink.add("right-jordan-cyclic", tuple, std::move(d1))) return;
          Vec d2 = bimodule_form ? jordan_bimodule_recombined_defect(c, s, i, j, k)
                                 : jordan_right_recombined_defect(c, s, i, j, k);
          if (!is_zero(d2) && !sink.add("right-jordan-recombined", tuple, std::move(d2))) return;
        }
}

void scan_jordan_left(const Ctx& c, WitnessSink& sink) {
  for (Index s = 0; s < c.v.mdim() && !sink.full(); ++s)
    for (Index i = 0; i < c.a.dim() && !sink.full(); ++i)
      for (Index j = 0; j < c.a.dim() && !sink.full(); ++j)
        for (Index k = 0; k < c.a.dim() && !sink.full(); ++k) {
          const std::vector<std::string> tuple{c.v.module_label(s), c.a.label(i), c.a.label(j),
                                               c.a.label(k)};
          Vec d1 = jordan_left_cyclic_defect(c, s, i, j, k);
          if (!is_zero(d1) && !sink.add("left-jordan-cyclic", tuple, std::move(d1))) return;
          Vec d2 = jordan_left_recombined_defect(c, s, i, j, k);
          if (!is_zero(d2) && !sink.add("left-jordan-recombined", tuple, std::move(d2))) return;
        }
}

void scan_action_symmetry(const Ctx& c, WitnessSink& sink) {
  // a . v = v . a as tensors.
  for (Index i = 0; i < c.a.dim() && !sink.full(); ++i)
    for (Index s = 0; s < c.v.mdim() && !sink.full(); ++s) {
      Vec d = Vec(c.v.rho_l().fiber(i, s)) - Vec(c.v.rho_r().fiber(s, i));
      if (!is_zero(d))
        sink.add("action-symmetry", {c.a.label(i), c.v.module_label(s)}, std::move(d));
    }
}

// ---- special (one-sided) conditions ------------------------------------

void scan_special_right(const Ctx& c, WitnessSink& sink) {
  // Twist compatibility of the right action (also a construction invariant).
  for (Index s = 0; s < c.v.mdim() && !sink.full(); ++s)
    for (Index i = 0; i < c.a.dim() && !sink.full(); ++i) {
      Vec d = c.v.twist_v(Vec(c.v.rho_r().fiber(s, i))) -
              c.v.act_right(Vec(c.v.alpha_v().col(s)), Vec(c.a.alpha().col(i)));
      if (!is_zero(d) &&
          !sink.add("right-action-twist", {c.v.module_label(s), c.a.label(i)}, std::move(d)))
        return;
    }
  // alphaV(v) . (ab) = (v.a) . alphaA(b) + (v.b) . alphaA(a)
  for (Index s = 0; s < c.v.mdim() && !sink.full(); ++s)
    for (Index i = 0; i < c.a.dim() && !sink.full(); ++i)
      for (Index j = 0; j < c.a.dim() && !sink.full(); ++j) {
        Vec d = c.v.act_right(Vec(c.v.alpha_v().col(s)), Vec(c.a.mul().fiber(i, j))) -
                c.v.act_right(Vec(c.v.rho_r().fiber(s, i)), Vec(c.a.alpha().col(j))) -
                c.v.act_right(Vec(c.v.rho_r().fiber(s, j)), Vec(c.a.alpha().col(i)));
        if (!is_zero(d) &&
            !sink.add("right-special-rule", {c.v.module_label(s), c.a.label(i), c.a.label(j)},
                      std::move(d)))
          return;
      }
}

void scan_special_left(const Ctx& c, WitnessSink& sink) {
  for (Index i = 0; i < c.a.dim() && !sink.full(); ++i)
    for (Index s = 0; s < c.v.mdim() && !sink.full(); ++s) {
      Vec d = c.v.twist_v(Vec(c.v.rho_l().fiber(i, s))) -
              c.v.act_left(Vec(c.a.alpha().col(i)), Vec(c.v.alpha_v().col(s)));
      if (!is_zero(d) &&
          !sink.add("left-action-twist", {c.a.label(i), c.v.module_label(s)}, std::move(d)))
        return;
    }
  // (ab) . alphaV(v) = alphaA(a) . (b.v) + alphaA(b) . (a.v)
  for (Index i = 0; i < c.a.dim() && !sink.full(); ++i)
    for (Index j = 0; j < c.a.dim() && !sink.full(); ++j)
      for (Index s = 0; s < c.v.mdim() && !sink.full(); ++s) {
        Vec d = c.v.act_left(Vec(c.a.mul().fiber(i, j)), Vec(c.v.alpha_v().col(s))) -
                c.v.act_left(Vec(c.a.alpha().col(i)), Vec(c.v.rho_l().fiber(j, s))) -
                c.v.act_left(Vec(c.a.alpha().col(j)), Vec(c.v.rho_l().fiber(i, s)));
        if (!is_zero(d) &&
            !sink.add("left-special-rule", {c.a.label(i), c.a.label(j), c.v.module_label(s)},
                      std::move(d)))
          return;
      }
}

}  // namespace

Report check_module(const Bimodule& v, ModuleKind kind, const CheckOptions& opt) {
  Report report;
  WitnessSink sink(report, opt);
  Ctx c(v);
  switch (kind) {
    case ModuleKind::AssocLeft:
      scan_assoc_left(c, sink);
      break;
    case ModuleKind::AssocRight:
      scan_assoc_right(c, sink);
      break;
    case ModuleKind::AssocBimodule:
      scan_assoc_left(c, sink);
      if (!sink.full()) scan_assoc_right(c, sink);
      if (!sink.full()) scan_operator_commutativity(c, sink);
      break;
    case ModuleKind::AltLeft:
      scan_alt_left(c, sink);
      break;
    case ModuleKind::AltRight:
      scan_alt_right(c, sink);
      break;
    case ModuleKind::AltBimodule:
      scan_alt_chain(c, sink);
      break;
    case ModuleKind::JordanLeft:
      scan_jordan_left(c, sink);
      break;
    case ModuleKind::JordanRight:
      scan_jordan_right(c, sink, /*bimodule_form=*/false);
      break;
    case ModuleKind::JordanBimodule:
      scan_action_symmetry(c, sink);
      if (!sink.full()) scan_jordan_right(c, sink, /*bimodule_form=*/true);
      break;
    case ModuleKind::SpecialLeft:
      scan_special_left(c, sink);
      break;
    case ModuleKind::SpecialRight:
      scan_special_right(c, sink);
      break;
    case ModuleKind::OperatorCommutativity:
      scan_operator_commutativity(c, sink);
      break;
  }
  return report;
}

Report check_equiv_forms(const Bimodule& v, const CheckOptions& opt) {
  Ctx c(v);
  for (Index i = 0; i < c.a.dim(); ++i)
    for (Index s = 0; s < v.mdim(); ++s)
      if (!exact_eq(Vec(v.rho_l().fiber(i, s)), Vec(v.rho_r().fiber(s, i))))
        throw PreconditionFailed("action-symmetry",
                                 "equivalence of the two identity forms is only claimed when the "
                                 "left action is the flip of the right one; it fails at (" +
                                     c.a.label(i) + ", " + v.module_label(s) + ")");

  // Associator rewritings of the two bimodule identities.
  const auto cyclic_assoc_defect = [&](Index s, Index i, Index j, Index k) {
    const Vec av = c.v.alpha_v().col(s);
    const auto term = [&](Index x, Index y, Index z) {
      return c.as(AssocPattern::AVA, Vec(c.a.alpha().col(x)), av, Vec(c.a.mul().fiber(y, z)));
    };
    return Vec(term(i, j, k) + term(j, k, i) + term(k, i, j));
  };
  const auto recombined_assoc_defect = [&](Index s, Index i, Index j, Index k) {
    const Vec ab = c.a.alpha().col(j);
    Vec d = c.as(AssocPattern::VAA, Vec(v.rho_r().fiber(s, i)), ab, Vec(c.a.alpha().col(k)));
    d += c.as(AssocPattern::VAA, Vec(v.rho_r().fiber(s, k)), ab, Vec(c.a.alpha().col(i)));
    d += c.as(AssocPattern::AAV, Vec(c.a.mul().fiber(i, k)), ab, Vec(v.alpha_v().col(s)));
    return d;
  };

  bool cyclic_direct = true, cyclic_assoc = true;
  bool recombined_direct = true, recombined_assoc = true;
  Witness first_cyclic_direct, first_cyclic_assoc, first_recombined_direct, first_recombined_assoc;

  for (Index s = 0; s < v.mdim(); ++s)
    for (Index i = 0; i < c.a.dim(); ++i)
      for (Index j = 0; j < c.a.dim(); ++j)
        for (Index k = 0; k < c.a.dim(); ++k) {
          const std::vector<std::string> tuple{v.module_label(s), c.a.label(i), c.a.label(j),
                                               c.a.label(k)};
          if (cyclic_direct) {
            Vec d = jordan_right_cyclic_defect(c, s, i, j, k);
            if (!is_zero(d)) {
              cyclic_direct = false;
              first_cyclic_direct = {"jordan-cyclic", tuple, std::move(d)};
            }
          }
          if (cyclic_assoc) {
            Vec d = cyclic_assoc_defect(s, i, j, k);
            if (!is_zero(d)) {
              cyclic_assoc = false;
              first_cyclic_assoc = {"jordan-cyclic-associator-form", tuple, std::move(d)};
            }
          }
          if (recombined_direct) {
            Vec d = jordan_bimodule_recombined_defect(c, s, i, j, k);
            if (!is_zero(d)) {
              recombined_direct = false;
              first_recombined_direct = {"jordan-recombined", tuple, std::move(d)};
            }
          }
          if (recombined_assoc) {
            Vec d = recombined_assoc_defect(s, i, j, k);
            if (!is_zero(d)) {
              recombined_assoc = false;
              first_recombined_assoc = {"jordan-recombined-associator-form", tuple, std::move(d)};
            }
          }
        }

  Report report;
  WitnessSink sink(report, opt);
  if (cyclic_direct != cyclic_assoc) {
    const Witness& w = cyclic_direct ? first_cyclic_assoc : first_cyclic_direct;
    sink.add("cyclic-forms-disagree (" + w.identity + " fails alone)", w.tuple, w.defect);
  }
  if (recombined_direct != recombined_assoc) {
    const Witness& w = recombined_direct ? first_recombined_assoc : first_recombined_direct;
    sink.add("recombined-forms-disagree (" + w.identity + " fails alone)", w.tuple, w.defect);
  }
  return report;
}

bool is_bimodule_morphism(const Mat& f, const Bimodule& v, const Bimodule& w) {
  if (v.parent() != w.parent())
    throw PreconditionFailed("same-parent", "bimodule morphism requires a common parent algebra");
  if (f.rows() != w.mdim() || f.cols() != v.mdim())
    throw DimensionMismatch("morphism matrix must be " + std::to_string(w.mdim()) + "x" +
                            std::to_string(v.mdim()));
  if (!exact_eq(Mat(f * v.alpha_v()), Mat(w.alpha_v() * f))) return false;
  const Index n = v.parent().dim();
  for (Index i = 0; i < n; ++i)
    for (Index s = 0; s < v.mdim(); ++s) {
      const Vec lhs = apply_linear(f, Vec(v.rho_l().fiber(i, s)));
      const Vec rhs = w.act_left(unit(n, i), Vec(f.col(s)));
      if (!exact_eq(lhs, rhs)) return false;
    }
  for (Index s = 0; s < v.mdim(); ++s)
    for (Index i = 0; i < n; ++i) {
      const Vec lhs = apply_linear(f, Vec(v.rho_r().fiber(s, i)));
      const Vec rhs = w.act_right(Vec(f.col(s)), unit(n, i));
      if (!exact_eq(lhs, rhs)) return false;
    }
  return true;
}

}  // namespace homalg
