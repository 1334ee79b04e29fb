#ifndef HOMALG_HOM_ALGEBRA_HPP
#define HOMALG_HOM_ALGEBRA_HPP

// A Hom-algebra is a vector space with a bilinear product mu and a linear
// twist map alpha, stored by structure constants over an explicit basis.
// Only multiplicative Hom-algebras are representable: the constructor
// rejects any triple with alpha(x y) != alpha(x) alpha(y) on some basis pair.

#include <string>
#include <vector>

#include "homalg/containers.hpp"
#include "homalg/report.hpp"

namespace homalg {

class HomAlgebra {
 public:
  /// Validates extents and multiplicativity; throws InvariantViolation
  /// naming the first offending basis pair. Labels default to e0, e1, ...
  HomAlgebra(Tensor3 mul, Mat alpha, std::vector<std::string> labels = {});

  Index dim() const { return dim_; }
  const Tensor3& mul() const { return mul_; }
  const Mat& alpha() const { return alpha_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Index i) const { return labels_[static_cast<std::size_t>(i)]; }

  /// mu(x, y), exact.
  Vec product(const Vec& x, const Vec& y) const { return apply_bilinear(mul_, x, y); }
  /// alpha(x).
  Vec twist(const Vec& x) const { return apply_linear(alpha_, x); }

  /// Structural equality: same dimension, product tensor and twist matrix.
  /// Labels are presentation only and do not participate.
  bool operator==(const HomAlgebra& o) const {
    return dim_ == o.dim_ && mul_ == o.mul_ && exact_eq(alpha_, o.alpha_);
  }
  bool operator!=(const HomAlgebra& o) const { return !(*this == o); }

 private:
  Index dim_;
  Tensor3 mul_;
  Mat alpha_;
  std::vector<std::string> labels_;
};

enum class AlgebraClass { Associative, Alternative, Commutative, Jordan };

const char* to_string(AlgebraClass cls);
AlgebraClass algebra_class_from_string(const std::string& name);

/// as(x, y, z) = mu(mu(x, y), alpha(z)) - mu(alpha(x), mu(y, z)).
Vec hom_associator(const HomAlgebra& a, const Vec& x, const Vec& y, const Vec& z);

/// Decides the defining identities of the class by exhaustive evaluation of
/// the fully linearized forms on basis tuples (complete and exact over a
/// field of characteristic zero):
///   Associative: as(ei, ej, ek) = 0.
///   Alternative: as(ei, ej, ek) + as(ej, ei, ek) = 0 and
///                as(ei, ej, ek) + as(ei, ek, ej) = 0.
///   Commutative: ei ej = ej ei.
///   Jordan:      commutativity, plus the polarized Jordan identity
///                as(ei ej, alpha(el), alpha(ek)) + as(ej ek, alpha(el), alpha(ei))
///                + as(ek ei, alpha(el), alpha(ej)) = 0.
Report check_algebra(const HomAlgebra& a, AlgebraClass cls, const CheckOptions& opt = {});

/// True iff f . alpha_A = alpha_B . f and f(ei ej) = f(ei) f(ej) for all
/// basis pairs. f must be B.dim x A.dim.
bool is_algebra_morphism(const Mat& f, const HomAlgebra& a, const HomAlgebra& b);

}  // namespace homalg

#endif
