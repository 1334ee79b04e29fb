#include "homalg/corpus.hpp"

#include <algorithm>
#include <utility>

#include "homalg/constructions.hpp"
#include "homalg/errors.hpp"

namespace homalg {

namespace {

// ---- Cayley-Dickson tower ------------------------------------------------
//
// One doubling step: on pairs (a, b) the product is
//   (a, b)(c, d) = (a c - conj(d) b, d a + b conj(c))
// and conjugation is (a, b)~ = (conj(a), -b). Basis of the double: the
// originals first, then their second-slot copies.

struct CdAlgebra {
  Tensor3 mul;
  Mat conj;
};

CdAlgebra cd_reals() {
  Tensor3 mul(1, 1, 1);
  mul(0, 0, 0) = 1;
  Mat conj = Mat::Identity(1, 1);
  return {std::move(mul), std::move(conj)};
}

CdAlgebra cd_double(const CdAlgebra& x) {
  const Index n = x.conj.rows();
  Tensor3 mul(2 * n, 2 * n, 2 * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        if (x.mul(i, j, k) != 0) mul(i, j, k) = x.mul(i, j, k);  // (a,0)(c,0) = (ac, 0)
        if (x.mul(j, i, k) != 0)
          mul(i, n + j, n + k) = x.mul(j, i, k);                 // (a,0)(0,d) = (0, da)
      }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index t = 0; t < n; ++t) {
        const Rational& c = x.conj(t, j);
        if (c == 0) continue;
        for (Index k = 0; k < n; ++k) {
          // (0,b)(c,0) = (0, b conj(c)) and (0,b)(0,d) = (-conj(d) b, 0)
          if (x.mul(i, t, k) != 0) mul(n + i, j, n + k) += c * x.mul(i, t, k);
          if (x.mul(t, i, k) != 0) mul(n + i, n + j, k) -= c * x.mul(t, i, k);
        }
      }
  Mat conj = Mat::Zero(2 * n, 2 * n);
  conj.topLeftCorner(n, n) = x.conj;
  conj.bottomRightCorner(n, n) = -Mat::Identity(n, n);
  return {std::move(mul), std::move(conj)};
}

CdAlgebra cd_tower(int doublings) {
  CdAlgebra a = cd_reals();
  for (int i = 0; i < doublings; ++i) a = cd_double(a);
  return a;
}

HomAlgebra make_quaternion() {
  CdAlgebra a = cd_tower(2);
  return HomAlgebra(std::move(a.mul), Mat::Identity(4, 4), {"1", "i", "j", "k"});
}

HomAlgebra make_octonion() {
  CdAlgebra a = cd_tower(3);
  return HomAlgebra(std::move(a.mul), Mat::Identity(8, 8));
}

// ---- matrix algebras -----------------------------------------------------

// Basis E11, E12, E21, E22 with Eab Ecd = delta_bc Ead.
HomAlgebra make_mat2() {
  const auto idx = [](Index a, Index b) { return 2 * a + b; };
  Tensor3 mul(4, 4, 4);
  for (Index a = 0; a < 2; ++a)
    for (Index b = 0; b < 2; ++b)
      for (Index c = 0; c < 2; ++c)
        for (Index d = 0; d < 2; ++d)
          if (b == c) mul(idx(a, b), idx(c, d), idx(a, d)) = 1;
  return HomAlgebra(std::move(mul), Mat::Identity(4, 4), {"E11", "E12", "E21", "E22"});
}

// Symmetric 2x2 matrices under x * y = x y + y x, with basis
// s11 = E11, s12 = E12 + E21, s22 = E22; coordinates derived from the
// mat2 table rather than typed in.
HomAlgebra make_sym2_jordan() {
  const HomAlgebra m2 = make_mat2();
  Mat basis(4, 3);
  basis.setZero();
  basis(0, 0) = 1;                    // E11
  basis(1, 1) = basis(2, 1) = 1;      // E12 + E21
  basis(3, 2) = 1;                    // E22
  Tensor3 mul(3, 3, 3);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) {
      const Vec x = basis.col(i), y = basis.col(j);
      const Vec p = m2.product(x, y) + m2.product(y, x);
      // A product of symmetric matrices symmetrized is symmetric, so p is
      // (w11, w12, w12, w22); read it off in the symmetric basis.
      if (p(1) != p(2)) throw InternalCheckFailure("sym2 product is not symmetric");
      mul(i, j, 0) = p(0);
      mul(i, j, 1) = p(1);
      mul(i, j, 2) = p(3);
    }
  return HomAlgebra(std::move(mul), Mat::Identity(3, 3), {"s11", "s12", "s22"});
}

// ---- maps ------------------------------------------------------------------

// Swap i <-> j, k -> -k, 1 -> 1; an automorphism of the quaternions.
Mat make_quaternion_swap() {
  Mat f = Mat::Zero(4, 4);
  f(0, 0) = 1;
  f(2, 1) = 1;
  f(1, 2) = 1;
  f(3, 3) = -1;
  return f;
}

// (a, b) -> (a, -b) on the doubled half of the octonions.
Mat make_octonion_flip() {
  Mat f = Mat::Identity(8, 8);
  for (Index i = 4; i < 8; ++i) f(i, i) = -1;
  return f;
}

// Conjugation by diag(1, -1): fixes E11, E22 and negates E12, E21.
Mat make_mat2_conj() {
  Mat f = Mat::Identity(4, 4);
  f(1, 1) = -1;
  f(2, 2) = -1;
  return f;
}

}  // namespace

std::vector<std::string> builtin_algebra_names() {
  return {"mat2", "quaternion", "octonion", "sym2-jordan", "mat2-plus", "octonion-plus"};
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names = builtin_algebra_names();
  for (const auto& map : {"quaternion-swap", "octonion-flip", "mat2-conj"}) names.push_back(map);
  for (const auto& alg : builtin_algebra_names()) names.push_back("regular:" + alg);
  return names;
}

CorpusObject builtin(const std::string& name) {
  if (name == "mat2") return make_mat2();
  if (name == "quaternion") return make_quaternion();
  if (name == "octonion") return make_octonion();
  if (name == "sym2-jordan") return make_sym2_jordan();
  if (name == "mat2-plus") return plus_algebra(make_mat2());
  if (name == "octonion-plus") return plus_algebra(make_octonion());
  if (name == "quaternion-swap") return make_quaternion_swap();
  if (name == "octonion-flip") return make_octonion_flip();
  if (name == "mat2-conj") return make_mat2_conj();
  if (name.rfind("regular:", 0) == 0) return regular_bimodule(builtin_algebra(name.substr(8)));
  throw LookupError("unknown builtin: " + name);
}

HomAlgebra builtin_algebra(const std::string& name) {
  CorpusObject o = builtin(name);
  if (auto* a = std::get_if<HomAlgebra>(&o)) return std::move(*a);
  throw LookupError("builtin " + name + " is not an algebra");
}

Bimodule builtin_bimodule(const std::string& name) {
  CorpusObject o = builtin(name);
  if (auto* v = std::get_if<Bimodule>(&o)) return std::move(*v);
  throw LookupError("builtin " + name + " is not a bimodule");
}

Mat builtin_map(const std::string& name) {
  CorpusObject o = builtin(name);
  if (auto* m = std::get_if<Mat>(&o)) return std::move(*m);
  throw LookupError("builtin " + name + " is not a linear map");
}

std::vector<Mat> search_diagonal_endomorphisms(const HomAlgebra& a, std::vector<Rational> entries) {
  const Index d = a.dim();
  if (d > 10)
    throw PreconditionFailed("enumeration-guard",
                             "diagonal endomorphism search is limited to dimension <= 10; "
                             "restrict the algebra or use a smaller entry set");
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
  if (entries.empty()) return {};

  std::vector<Mat> found;
  std::vector<std::size_t> pick(static_cast<std::size_t>(d), 0);
  while (true) {
    Mat diag = Mat::Zero(d, d);
    for (Index i = 0; i < d; ++i) diag(i, i) = entries[pick[static_cast<std::size_t>(i)]];
    if (is_algebra_morphism(diag, a, a)) found.push_back(std::move(diag));
    // odometer, most significant digit first
    Index pos = d - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] + 1 == entries.size()) {
      pick[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++pick[static_cast<std::size_t>(pos)];
  }
  return found;
}

}  // namespace homalg
