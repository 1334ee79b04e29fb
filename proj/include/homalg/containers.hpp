#ifndef HOMALG_CONTAINERS_HPP
#define HOMALG_CONTAINERS_HPP

// Dense exact containers and the contraction primitives everything else
// builds on.
//
// Conventions, used identically in memory and in the file format:
//   Matrix   M(i, j)    = coefficient of output basis vector i in the image
//                         of input basis vector j, so the image of e_j is
//                         column j.
//   Tensor3  T(i, j, k) = coefficient of e_k in e_i * e_j; the output index
//                         is always last. For mixed products the first two
//                         indices range over the respective input spaces.

#include <Eigen/Dense>
#include <sstream>
#include <utility>
#include <vector>

#include "homalg/errors.hpp"
#include "homalg/rational.hpp"

namespace homalg {

using Index = Eigen::Index;

template <class Scalar>
using VecT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using MatT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vec = VecT<Rational>;
using Mat = MatT<Rational>;

/// Rank-3 array of exact scalars with fixed extents; the fiber over the
/// last (output) index is contiguous and exposed as an Eigen vector view.
template <class Scalar>
class Tensor3T {
 public:
  Tensor3T() : d0_(0), d1_(0), d2_(0) {}
  Tensor3T(Index d0, Index d1, Index d2)
      : d0_(d0), d1_(d1), d2_(d2),
        c_(static_cast<std::size_t>(d0 * d1 * d2), Scalar(0)) {}

  Index extent0() const { return d0_; }
  Index extent1() const { return d1_; }
  Index extent2() const { return d2_; }

  const Scalar& operator()(Index i, Index j, Index k) const { return c_[flat(i, j, k)]; }
  Scalar& operator()(Index i, Index j, Index k) { return c_[flat(i, j, k)]; }

  /// The output fiber T(i, j, .) as a read-only vector of length extent2().
  Eigen::Map<const VecT<Scalar>> fiber(Index i, Index j) const {
    return Eigen::Map<const VecT<Scalar>>(c_.data() + flat(i, j, 0), d2_);
  }
  Eigen::Map<VecT<Scalar>> fiber(Index i, Index j) {
    return Eigen::Map<VecT<Scalar>>(c_.data() + flat(i, j, 0), d2_);
  }

  bool operator==(const Tensor3T& o) const {
    return d0_ == o.d0_ && d1_ == o.d1_ && d2_ == o.d2_ && c_ == o.c_;
  }
  bool operator!=(const Tensor3T& o) const { return !(*this == o); }

 private:
  std::size_t flat(Index i, Index j, Index k) const {
    return static_cast<std::size_t>((i * d1_ + j) * d2_ + k);
  }

  Index d0_, d1_, d2_;
  std::vector<Scalar> c_;
};

using Tensor3 = Tensor3T<Rational>;

template <class Scalar>
bool exact_eq(const MatT<Scalar>& a, const MatT<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <class Scalar>
bool exact_eq(const VecT<Scalar>& a, const VecT<Scalar>& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

template <class Scalar>
bool is_zero(const VecT<Scalar>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

template <class Scalar>
VecT<Scalar> unit_vector(Index dim, Index i) {
  VecT<Scalar> e = VecT<Scalar>::Zero(dim);
  e(i) = Scalar(1);
  return e;
}

inline Vec unit(Index dim, Index i) { return unit_vector<Rational>(dim, i); }

/// Matrix-vector product with an explicit conformance check.
template <class Scalar>
VecT<Scalar> apply_linear(const MatT<Scalar>& m, const VecT<Scalar>& v) {
  if (m.cols() != v.size())
    throw DimensionMismatch("apply_linear: matrix is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", vector has length " +
                            std::to_string(v.size()));
  return m * v;
}

/// Bilinear evaluation out_k = sum_{i,j} x_i y_j T(i, j, k). Zero entries of
/// x and y are skipped; structure constants are sparse in practice and this
/// is the hot path of every checker.
template <class Scalar>
VecT<Scalar> apply_bilinear(const Tensor3T<Scalar>& t, const VecT<Scalar>& x,
                            const VecT<Scalar>& y) {
  if (x.size() != t.extent0() || y.size() != t.extent1())
    throw DimensionMismatch("apply_bilinear: tensor is " + std::to_string(t.extent0()) + "x" +
                            std::to_string(t.extent1()) + "x" + std::to_string(t.extent2()) +
                            ", inputs have lengths " + std::to_string(x.size()) + ", " +
                            std::to_string(y.size()));
  VecT<Scalar> out = VecT<Scalar>::Zero(t.extent2());
  for (Index i = 0; i < x.size(); ++i) {
    if (x(i) == 0) continue;
    for (Index j = 0; j < y.size(); ++j) {
      if (y(j) == 0) continue;
      out += (x(i) * y(j)) * t.fiber(i, j);
    }
  }
  return out;
}

/// T o (M tensor Id): feed slot 0 through M. R(i,j,k) = sum_s M(s,i) T(s,j,k).
template <class Scalar>
Tensor3T<Scalar> precompose0(const Tensor3T<Scalar>& t, const MatT<Scalar>& m) {
  if (m.rows() != t.extent0())
    throw DimensionMismatch("precompose0: slot size " + std::to_string(t.extent0()) +
                            " vs matrix rows " + std::to_string(m.rows()));
  Tensor3T<Scalar> r(m.cols(), t.extent1(), t.extent2());
  for (Index s = 0; s < m.rows(); ++s)
    for (Index i = 0; i < m.cols(); ++i) {
      if (m(s, i) == 0) continue;
      for (Index j = 0; j < t.extent1(); ++j) r.fiber(i, j) += m(s, i) * t.fiber(s, j);
    }
  return r;
}

/// T o (Id tensor M): feed slot 1 through M. R(i,j,k) = sum_s M(s,j) T(i,s,k).
template <class Scalar>
Tensor3T<Scalar> precompose1(const Tensor3T<Scalar>& t, const MatT<Scalar>& m) {
  if (m.rows() != t.extent1())
    throw DimensionMismatch("precompose1: slot size " + std::to_string(t.extent1()) +
                            " vs matrix rows " + std::to_string(m.rows()));
  Tensor3T<Scalar> r(t.extent0(), m.cols(), t.extent2());
  for (Index s = 0; s < m.rows(); ++s)
    for (Index j = 0; j < m.cols(); ++j) {
      if (m(s, j) == 0) continue;
      for (Index i = 0; i < t.extent0(); ++i) r.fiber(i, j) += m(s, j) * t.fiber(i, s);
    }
  return r;
}

/// M o T: feed the output through M. R(i,j,k) = sum_t M(k,t) T(i,j,t).
template <class Scalar>
Tensor3T<Scalar> postcompose(const MatT<Scalar>& m, const Tensor3T<Scalar>& t) {
  if (m.cols() != t.extent2())
    throw DimensionMismatch("postcompose: output size " + std::to_string(t.extent2()) +
                            " vs matrix cols " + std::to_string(m.cols()));
  Tensor3T<Scalar> r(t.extent0(), t.extent1(), m.rows());
  for (Index i = 0; i < t.extent0(); ++i)
    for (Index j = 0; j < t.extent1(); ++j) r.fiber(i, j) = m * t.fiber(i, j);
  return r;
}

/// Swap the two input slots. R(i,j,k) = T(j,i,k).
template <class Scalar>
Tensor3T<Scalar> transpose01(const Tensor3T<Scalar>& t) {
  Tensor3T<Scalar> r(t.extent1(), t.extent0(), t.extent2());
  for (Index i = 0; i < t.extent0(); ++i)
    for (Index j = 0; j < t.extent1(); ++j) r.fiber(j, i) = t.fiber(i, j);
  return r;
}

template <class Scalar>
Tensor3T<Scalar> operator+(const Tensor3T<Scalar>& a, const Tensor3T<Scalar>& b) {
  if (a.extent0() != b.extent0() || a.extent1() != b.extent1() || a.extent2() != b.extent2())
    throw DimensionMismatch("tensor sum of unequal extents");
  Tensor3T<Scalar> r(a.extent0(), a.extent1(), a.extent2());
  for (Index i = 0; i < a.extent0(); ++i)
    for (Index j = 0; j < a.extent1(); ++j) r.fiber(i, j) = a.fiber(i, j) + b.fiber(i, j);
  return r;
}

template <class Scalar>
Tensor3T<Scalar> operator*(const Scalar& c, const Tensor3T<Scalar>& t) {
  Tensor3T<Scalar> r(t.extent0(), t.extent1(), t.extent2());
  for (Index i = 0; i < t.extent0(); ++i)
    for (Index j = 0; j < t.extent1(); ++j) r.fiber(i, j) = c * t.fiber(i, j);
  return r;
}

/// M^n by repeated multiplication; M^0 = Id.
template <class Scalar>
MatT<Scalar> mat_power(const MatT<Scalar>& m, unsigned n) {
  if (m.rows() != m.cols()) throw DimensionMismatch("mat_power of a non-square matrix");
  MatT<Scalar> r = MatT<Scalar>::Identity(m.rows(), m.cols());
  for (unsigned k = 0; k < n; ++k) r = (r * m).eval();
  return r;
}

template <class Scalar>
std::string format_vector(const VecT<Scalar>& v) {
  std::ostringstream os;
  os << "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << Rational(v(i)).get_str();
  }
  os << ")";
  return os.str();
}

}  // namespace homalg

#endif
