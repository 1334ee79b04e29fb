#include "homalg/hom_algebra.hpp"

#include <utility>

#include "homalg/errors.hpp"

namespace homalg {

HomAlgebra::HomAlgebra(Tensor3 mul, Mat alpha, std::vector<std::string> labels)
    : dim_(alpha.rows()), mul_(std::move(mul)), alpha_(std::move(alpha)), labels_(std::move(labels)) {
  if (alpha_.rows() != alpha_.cols())
    throw DimensionMismatch("twist matrix must be square, got " + std::to_string(alpha_.rows()) +
                            "x" + std::to_string(alpha_.cols()));
  if (mul_.extent0() != dim_ || mul_.extent1() != dim_ || mul_.extent2() != dim_)
    throw DimensionMismatch("product tensor extents do not match the algebra dimension");
  if (labels_.empty()) {
    labels_.reserve(static_cast<std::size_t>(dim_));
    for (Index i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i));
  }
  if (static_cast<Index>(labels_.size()) != dim_)
    throw DimensionMismatch("label list length does not match the algebra dimension");

  // alpha(ei ej) = alpha(ei) alpha(ej) on every basis pair.
  for (Index i = 0; i < dim_; ++i)
    for (Index j = 0; j < dim_; ++j) {
      const Vec lhs = apply_linear(alpha_, Vec(mul_.fiber(i, j)));
      const Vec rhs = apply_bilinear(mul_, Vec(alpha_.col(i)), Vec(alpha_.col(j)));
      if (!exact_eq(lhs, rhs))
        throw InvariantViolation(
            "multiplicativity", {label(i), label(j)},
            "multiplicativity fails: alpha(" + label(i) + " " + label(j) + ") != alpha(" +
                label(i) + ") alpha(" + label(j) + ")");
    }
}

const char* to_string(AlgebraClass cls) {
  switch (cls) {
    case AlgebraClass::Associative:
      return "associative";
    case AlgebraClass::Alternative:
      return "alternative";
    case AlgebraClass::Commutative:
      return "commutative";
    case AlgebraClass::Jordan:
      return "jordan";
  }
  return "?";
}

AlgebraClass algebra_class_from_string(const std::string& name) {
  if (name == "associative") return AlgebraClass::Associative;
  if (name == "alternative") return AlgebraClass::Alternative;
  if (name == "commutative") return AlgebraClass::Commutative;
  if (name == "jordan") return AlgebraClass::Jordan;
  throw LookupError("unknown algebra class: " + name);
}

Vec hom_associator(const HomAlgebra& a, const Vec& x, const Vec& y, const Vec& z) {
  const Vec left = apply_bilinear(a.mul(), apply_bilinear(a.mul(), x, y), a.twist(z));
  const Vec right = apply_bilinear(a.mul(), a.twist(x), apply_bilinear(a.mul(), y, z));
  return left - right;
}

namespace {

std::vector<Vec> basis_of(Index dim) {
  std::vector<Vec> e;
  e.reserve(static_cast<std::size_t>(dim));
  for (Index i = 0; i < dim; ++i) e.push_back(unit(dim, i));
  return e;
}

void scan_commutativity(const HomAlgebra& a, WitnessSink& sink) {
  const Index d = a.dim();
  for (Index i = 0; i < d && !sink.full(); ++i)
    for (Index j = i + 1; j < d && !sink.full(); ++j) {
      const Vec defect = Vec(a.mul().fiber(i, j)) - Vec(a.mul().fiber(j, i));
      if (!is_zero(defect)) sink.add("commutativity", {a.label(i), a.label(j)}, defect);
    }
}

void scan_associativity(const HomAlgebra& a, WitnessSink& sink) {
  const Index d = a.dim();
  const auto e = basis_of(d);
  for (Index i = 0; i < d && !sink.full(); ++i)
    for (Index j = 0; j < d && !sink.full(); ++j)
      for (Index k = 0; k < d && !sink.full(); ++k) {
        const Vec defect = hom_associator(a, e[i], e[j], e[k]);
        if (!is_zero(defect))
          sink.add("associativity", {a.label(i), a.label(j), a.label(k)}, defect);
      }
}

void scan_alternativity(const HomAlgebra& a, WitnessSink& sink) {
  const Index d = a.dim();
  const auto e = basis_of(d);
  // Linearizations of as(x,x,y) = 0 and as(x,y,y) = 0.
  for (Index i = 0; i < d && !sink.full(); ++i)
    for (Index j = 0; j < d && !sink.full(); ++j)
      for (Index k = 0; k < d && !sink.full(); ++k) {
        const Vec defect =
            hom_associator(a, e[i], e[j], e[k]) + hom_associator(a, e[j], e[i], e[k]);
        if (!is_zero(defect))
          sink.add("left-alternativity", {a.label(i), a.label(j), a.label(k)}, defect);
      }
  for (Index i = 0; i < d && !sink.full(); ++i)
    for (Index j = 0; j < d && !sink.full(); ++j)
      for (Index k = 0; k < d && !sink.full(); ++k) {
        const Vec defect =
            hom_associator(a, e[i], e[j], e[k]) + hom_associator(a, e[i], e[k], e[j]);
        if (!is_zero(defect))
          sink.add("right-alternativity", {a.label(i), a.label(j), a.label(k)}, defect);
      }
}

void scan_jordan_polarized(const HomAlgebra& a, WitnessSink& sink) {
  const Index d = a.dim();
  // Full polarization of as(x x, alpha(y), alpha(x)) = 0 in x; under
  // commutativity the six permutation terms collapse to this cyclic sum.
  for (Index i = 0; i < d && !sink.full(); ++i)
    for (Index j = 0; j < d && !sink.full(); ++j)
      for (Index k = 0; k < d && !sink.full(); ++k)
        for (Index l = 0; l < d && !sink.full(); ++l) {
          const Vec al = a.alpha().col(l);
          Vec defect = hom_associator(a, Vec(a.mul().fiber(i, j)), al, Vec(a.alpha().col(k)));
          defect += hom_associator(a, Vec(a.mul().fiber(j, k)), al, Vec(a.alpha().col(i)));
          defect += hom_associator(a, Vec(a.mul().fiber(k, i)), al, Vec(a.alpha().col(j)));
          if (!is_zero(defect))
            sink.add("jordan-identity", {a.label(i), a.label(j), a.label(k), a.label(l)},
                     std::move(defect));
        }
}

}  // namespace

Report check_algebra(const HomAlgebra& a, AlgebraClass cls, const CheckOptions& opt) {
  Report report;
  WitnessSink sink(report, opt);
  switch (cls) {
    case AlgebraClass::Associative:
      scan_associativity(a, sink);
      break;
    case AlgebraClass::Alternative:
      scan_alternativity(a, sink);
      break;
    case AlgebraClass::Commutative:
      scan_commutativity(a, sink);
      break;
    case AlgebraClass::Jordan:
      scan_commutativity(a, sink);
      if (!sink.full()) scan_jordan_polarized(a, sink);
      break;
  }
  return report;
}

bool is_algebra_morphism(const Mat& f, const HomAlgebra& a, const HomAlgebra& b) {
  if (f.rows() != b.dim() || f.cols() != a.dim())
    throw DimensionMismatch("morphism matrix must be " + std::to_string(b.dim()) + "x" +
                            std::to_string(a.dim()) + ", got " + std::to_string(f.rows()) + "x" +
                            std::to_string(f.cols()));
  if (!exact_eq(Mat(f * a.alpha()), Mat(b.alpha() * f))) return false;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      const Vec lhs = apply_linear(f, Vec(a.mul().fiber(i, j)));
      const Vec rhs = apply_bilinear(b.mul(), Vec(f.col(i)), Vec(f.col(j)));
      if (!exact_eq(lhs, rhs)) return false;
    }
  return true;
}

}  // namespace homalg
