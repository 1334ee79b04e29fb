#include <doctest.h>

#include "homalg/constructions.hpp"
#include "homalg/corpus.hpp"
#include "oracle.hpp"

using namespace homalg;

namespace {

// 2-dim commutative nilpotent algebra: x.x = y, every other product 0.
// Jordan, and its product satisfies both special-module rules.
HomAlgebra nilpotent_line() {
  Tensor3 mul(2, 2, 2);
  mul(0, 0, 1) = 1;
  return HomAlgebra(mul, Mat(Mat::Identity(2, 2)), {"x", "y"});
}

}  // namespace

TEST_CASE("plus algebra") {
  const HomAlgebra sym2 = builtin_algebra("sym2-jordan");
  const HomAlgebra sp = plus_algebra(sym2);
  CHECK(sp.mul() == Rational(2) * sym2.mul());  // commutative input: x*y = 2xy

  CHECK(check_algebra(plus_algebra(builtin_algebra("mat2")), AlgebraClass::Jordan).ok);
  CHECK(check_algebra(plus_algebra(builtin_algebra("quaternion")), AlgebraClass::Jordan).ok);
  CHECK(check_algebra(plus_algebra(builtin_algebra("octonion")), AlgebraClass::Jordan).ok);

  // the plus product is commutative by construction
  for (const auto& name : builtin_algebra_names())
    CHECK(check_algebra(plus_algebra(builtin_algebra(name)), AlgebraClass::Commutative).ok);
}

TEST_CASE("half-normalized plus product preserves every verdict") {
  for (const auto& name : builtin_algebra_names()) {
    const HomAlgebra a = builtin_algebra(name);
    const HomAlgebra paper = plus_algebra(a);
    const HomAlgebra half = plus_algebra(a, /*half_normalized=*/true);
    CHECK(half.mul() == make_rational(1, 2) * paper.mul());
    for (AlgebraClass cls : {AlgebraClass::Associative, AlgebraClass::Alternative,
                             AlgebraClass::Commutative, AlgebraClass::Jordan})
      CHECK(check_algebra(paper, cls).ok == check_algebra(half, cls).ok);
  }
}

TEST_CASE("yau twist") {
  const HomAlgebra oct = builtin_algebra("octonion");
  CHECK(yau_twist(oct, Mat(Mat::Identity(8, 8))) == oct);

  const HomAlgebra twisted = yau_twist(oct, builtin_map("octonion-flip"));
  CHECK(check_algebra(twisted, AlgebraClass::Alternative).ok);
  CHECK_FALSE(twisted == oct);

  const HomAlgebra m2t = yau_twist(builtin_algebra("mat2"), builtin_map("mat2-conj"));
  CHECK(check_algebra(m2t, AlgebraClass::Associative).ok);

  Mat not_endo = Mat::Identity(8, 8);
  not_endo(0, 0) = 2;
  CHECK_THROWS_AS(yau_twist(oct, not_endo), PreconditionFailed);
}

TEST_CASE("twisting a bimodule") {
  const HomAlgebra oct = builtin_algebra("octonion");
  const Bimodule reg = regular_bimodule(oct);
  const Mat id8 = Mat::Identity(8, 8);
  CHECK(twist_bimodule(oct, reg, id8, id8) == reg);

  const Mat flip = builtin_map("octonion-flip");
  const Bimodule tw = twist_bimodule(oct, reg, flip, flip);
  CHECK(tw.parent() == yau_twist(oct, flip));
  CHECK(check_module(tw, ModuleKind::AltBimodule).ok);

  // Jordan flavor: mat2-plus with the conjugation twist in both slots
  const HomAlgebra mp = builtin_algebra("mat2-plus");
  const Mat conj = builtin_map("mat2-conj");
  const Bimodule jtw = twist_bimodule(mp, regular_bimodule(mp), conj, conj);
  CHECK(check_module(jtw, ModuleKind::JordanBimodule).ok);

  // incompatible module map: identity does not intertwine the flip
  CHECK_THROWS_AS(twist_bimodule(oct, reg, flip, id8), PreconditionFailed);
}

TEST_CASE("twisted associator is the squared twist of the original") {
  const HomAlgebra oct = builtin_algebra("octonion");
  const Bimodule reg = regular_bimodule(oct);
  const Mat flip = builtin_map("octonion-flip");
  const Bimodule tw = twist_bimodule(oct, reg, flip, flip);
  const Mat flip2 = mat_power(flip, 2);
  for (AssocPattern p : {AssocPattern::VAA, AssocPattern::AVA, AssocPattern::AAV})
    for (Index i = 0; i < 8; ++i)
      for (Index j = 0; j < 8; ++j)
        for (Index k = 0; k < 8; ++k) {
          const Vec orig = module_hom_associator(reg, p, unit(8, i), unit(8, j), unit(8, k));
          const Vec twisted = module_hom_associator(tw, p, unit(8, i), unit(8, j), unit(8, k));
          CHECK(exact_eq(twisted, apply_linear(flip2, orig)));
        }
}

TEST_CASE("shifted bimodules") {
  const HomAlgebra oct = builtin_algebra("octonion");
  const Mat flip = builtin_map("octonion-flip");
  const Bimodule tw = twist_bimodule(oct, regular_bimodule(oct), flip, flip);

  CHECK(nth_shift_bimodule(tw, 0, BimoduleClass::Alternative) == tw);
  for (unsigned n = 1; n <= 3; ++n)
    CHECK(check_module(nth_shift_bimodule(tw, n, BimoduleClass::Alternative),
                       ModuleKind::AltBimodule)
              .ok);

  // Jordan shift needs alphaV^n = Id
  const HomAlgebra jp = builtin_algebra("octonion-plus");
  const Bimodule jtw = twist_bimodule(jp, regular_bimodule(jp), flip, flip);
  CHECK_THROWS_AS(nth_shift_bimodule(jtw, 1, BimoduleClass::Jordan), PreconditionFailed);
  const Bimodule shifted = nth_shift_bimodule(jtw, 2, BimoduleClass::Jordan);
  CHECK(check_module(shifted, ModuleKind::JordanBimodule).ok);
}

TEST_CASE("one-step twist-and-shift agrees with the composed path") {
  const HomAlgebra oct = builtin_algebra("octonion");
  const Bimodule reg = regular_bimodule(oct);
  const Mat flip = builtin_map("octonion-flip");
  const Bimodule twisted = twist_bimodule(oct, reg, flip, flip);

  CHECK(corollary_twist(oct, reg, flip, flip, 0) == twisted);
  for (unsigned n = 0; n <= 2; ++n)
    CHECK(corollary_twist(oct, reg, flip, flip, n) ==
          nth_shift_bimodule(twisted, n, BimoduleClass::Alternative));
  CHECK(check_module(corollary_twist(oct, reg, flip, flip, 1), ModuleKind::AltBimodule).ok);
}

TEST_CASE("promoting special one-sided actions") {
  // commutative special instance: both actions are mu, output is 2 mu
  const HomAlgebra nil = nilpotent_line();
  REQUIRE(check_algebra(nil, AlgebraClass::Jordan).ok);
  const Bimodule out =
      special_to_bimodule(nil, nil.mul(), nil.mul(), Mat(Mat::Identity(2, 2)));
  CHECK(out.rho_l() == Rational(2) * nil.mul());
  CHECK(out.rho_r() == Rational(2) * nil.mul());
  CHECK(check_module(out, ModuleKind::JordanBimodule).ok);

  // associative route: quaternion actions over quaternion-plus
  const HomAlgebra quat = builtin_algebra("quaternion");
  const HomAlgebra qp = plus_algebra(quat);
  const Bimodule qout = special_to_bimodule(qp, quat.mul(), quat.mul(), Mat(Mat::Identity(4, 4)));
  CHECK(check_module(qout, ModuleKind::JordanBimodule).ok);
  // the symmetrized action is exactly the plus product acting on itself
  CHECK(qout == regular_bimodule(qp));

  // empty module
  const Bimodule empty =
      special_to_bimodule(qp, Tensor3(4, 0, 0), Tensor3(0, 4, 0), Mat(0, 0));
  CHECK(empty.mdim() == 0);

  // precondition failures: non-Jordan parent, non-special action
  CHECK_THROWS_AS(special_to_bimodule(builtin_algebra("mat2"), builtin_algebra("mat2").mul(),
                                      builtin_algebra("mat2").mul(), Mat(Mat::Identity(4, 4))),
                  PreconditionFailed);
  const HomAlgebra sym2 = builtin_algebra("sym2-jordan");
  CHECK_THROWS_AS(
      special_to_bimodule(sym2, sym2.mul(), sym2.mul(), Mat(Mat::Identity(3, 3))),
      PreconditionFailed);
}

TEST_CASE("plus bimodule") {
  const HomAlgebra m2 = builtin_algebra("mat2");
  const Bimodule pb = plus_bimodule(m2, regular_bimodule(m2));
  CHECK(pb.parent() == builtin_algebra("mat2-plus"));
  CHECK(check_module(pb, ModuleKind::JordanBimodule).ok);
  CHECK(pb == regular_bimodule(builtin_algebra("mat2-plus")));

  const HomAlgebra quat = builtin_algebra("quaternion");
  CHECK(check_module(plus_bimodule(quat, regular_bimodule(quat)), ModuleKind::JordanBimodule).ok);

  // one-dimensional zero algebra: all products vanish
  const HomAlgebra line(Tensor3(1, 1, 1), Mat(Mat::Identity(1, 1)));
  const Bimodule lb = plus_bimodule(line, regular_bimodule(line));
  CHECK(check_module(lb, ModuleKind::JordanBimodule).ok);

  const HomAlgebra oct = builtin_algebra("octonion");
  CHECK_THROWS_AS(plus_bimodule(oct, regular_bimodule(oct)), PreconditionFailed);
}

TEST_CASE("split null extension") {
  const HomAlgebra oct = builtin_algebra("octonion");

  // zero module: the extension is the algebra itself
  const Bimodule zero(oct, Mat(0, 0), Tensor3(8, 0, 0), Tensor3(0, 8, 0));
  CHECK(split_null_extension(oct, zero, BimoduleClass::Alternative) == oct);

  const HomAlgebra e = split_null_extension(oct, regular_bimodule(oct), BimoduleClass::Alternative);
  CHECK(e.dim() == 16);
  CHECK(check_algebra(e, AlgebraClass::Alternative).ok);

  // embedding and projection are morphisms; the module part squares to zero
  Mat embed = Mat::Zero(16, 8);
  embed.topLeftCorner(8, 8) = Mat::Identity(8, 8);
  CHECK(is_algebra_morphism(embed, oct, e));
  Mat proj = Mat::Zero(8, 16);
  proj.topLeftCorner(8, 8) = Mat::Identity(8, 8);
  CHECK(is_algebra_morphism(proj, e, oct));
  for (Index s = 0; s < 8; ++s)
    for (Index t = 0; t < 8; ++t)
      CHECK(is_zero(e.product(unit(16, 8 + s), unit(16, 8 + t))));

  const HomAlgebra sym2 = builtin_algebra("sym2-jordan");
  const HomAlgebra ej = split_null_extension(sym2, regular_bimodule(sym2), BimoduleClass::Jordan);
  CHECK(ej.dim() == 6);
  CHECK(check_algebra(ej, AlgebraClass::Jordan).ok);

  CHECK_THROWS_AS(split_null_extension(oct, regular_bimodule(oct), BimoduleClass::Jordan),
                  PreconditionFailed);
}

TEST_CASE("regular bimodule closures over the corpus") {
  for (const auto& name : builtin_algebra_names()) {
    const HomAlgebra a = builtin_algebra(name);
    const Bimodule reg = regular_bimodule(a);
    if (check_algebra(a, AlgebraClass::Alternative).ok)
      CHECK(check_module(reg, ModuleKind::AltBimodule).ok);
    if (check_algebra(a, AlgebraClass::Jordan).ok)
      CHECK(check_module(reg, ModuleKind::JordanBimodule).ok);
    if (check_algebra(a, AlgebraClass::Associative).ok) {
      CHECK(check_module(reg, ModuleKind::AssocBimodule).ok);
      CHECK(check_module(plus_bimodule(a, reg), ModuleKind::JordanBimodule).ok);
    }
  }
}

TEST_CASE("shifts of identity-twist bimodules are trivial but valid") {
  for (const char* name : {"mat2", "quaternion", "octonion"}) {
    const Bimodule reg = regular_bimodule(builtin_algebra(name));
    for (unsigned n = 1; n <= 3; ++n) {
      const Bimodule shifted = nth_shift_bimodule(reg, n, BimoduleClass::Alternative);
      CHECK(shifted == reg);
    }
  }
}
