#include <doctest.h>

#include <random>

#include "homalg/bimodule.hpp"
#include "homalg/constructions.hpp"
#include "homalg/corpus.hpp"
#include "oracle.hpp"

using namespace homalg;

namespace {

Bimodule twisted_octonion_bimodule() {
  const HomAlgebra oct = builtin_algebra("octonion");
  const Mat flip = builtin_map("octonion-flip");
  return twist_bimodule(oct, regular_bimodule(oct), flip, flip);
}

Bimodule twisted_jordan_bimodule() {
  const HomAlgebra jp = builtin_algebra("octonion-plus");
  const Mat flip = builtin_map("octonion-flip");
  return twist_bimodule(jp, regular_bimodule(jp), flip, flip);
}

// Random bimodule data over a parent with identity twists: the right action
// is free, the left action mirrors it, so construction invariants hold.
Bimodule random_symmetric_bimodule(std::mt19937_64& rng, const HomAlgebra& parent, Index m) {
  const Tensor3 rho_r = testing::random_tensor(rng, m, parent.dim(), m);
  return Bimodule(parent, Mat(Mat::Identity(m, m)), transpose01(rho_r), rho_r);
}

}  // namespace

TEST_CASE("module associator of the regular bimodule is the algebra associator") {
  for (const char* name : {"octonion", "sym2-jordan"}) {
    const HomAlgebra a = builtin_algebra(name);
    const Bimodule reg = regular_bimodule(a);
    const Index d = a.dim();
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j)
        for (Index k = 0; k < d; ++k) {
          const Vec expect = hom_associator(a, unit(d, i), unit(d, j), unit(d, k));
          for (AssocPattern p : {AssocPattern::VAA, AssocPattern::AVA, AssocPattern::AAV})
            CHECK(exact_eq(module_hom_associator(reg, p, unit(d, i), unit(d, j), unit(d, k)),
                           expect));
        }
  }
}

TEST_CASE("zero module and zero slots") {
  const HomAlgebra m2 = builtin_algebra("mat2");
  const Bimodule zero(m2, Mat(0, 0), Tensor3(4, 0, 0), Tensor3(0, 4, 0));
  CHECK(module_hom_associator(zero, AssocPattern::AAV, unit(4, 0), unit(4, 1), Vec(0)).size() == 0);
  for (ModuleKind k :
       {ModuleKind::AssocBimodule, ModuleKind::AltBimodule, ModuleKind::JordanBimodule,
        ModuleKind::SpecialLeft, ModuleKind::SpecialRight, ModuleKind::OperatorCommutativity})
    CHECK(check_module(zero, k).ok);

  std::mt19937_64 rng(5);
  const Bimodule reg = regular_bimodule(m2);
  CHECK(is_zero(module_hom_associator(reg, AssocPattern::VAA, Vec(Vec::Zero(4)),
                                      testing::random_vec(rng, 4), testing::random_vec(rng, 4))));
}

TEST_CASE("check_module classifies regular bimodules") {
  CHECK(check_module(regular_bimodule(builtin_algebra("octonion")), ModuleKind::AltBimodule).ok);
  CHECK(check_module(regular_bimodule(builtin_algebra("mat2")), ModuleKind::AssocBimodule).ok);
  CHECK(check_module(regular_bimodule(builtin_algebra("mat2-plus")), ModuleKind::JordanBimodule).ok);
  CHECK(check_module(regular_bimodule(builtin_algebra("octonion-plus")), ModuleKind::JordanLeft).ok);
  CHECK(check_module(regular_bimodule(builtin_algebra("octonion-plus")), ModuleKind::JordanRight).ok);
  CHECK_FALSE(
      check_module(regular_bimodule(builtin_algebra("octonion")), ModuleKind::AssocBimodule).ok);

  // one perturbed structure constant produces a witness
  const HomAlgebra oct = builtin_algebra("octonion");
  Tensor3 rho_l = oct.mul();
  rho_l(1, 2, 3) += 1;
  const Bimodule bad(oct, Mat(Mat::Identity(8, 8)), rho_l, oct.mul());
  const Report r = check_module(bad, ModuleKind::AltBimodule);
  CHECK_FALSE(r.ok);
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK_FALSE(is_zero(r.witnesses.front().defect));
}

TEST_CASE("verdict matrix over the regular bimodules") {
  const struct {
    const char* name;
    ModuleKind kind;
    bool mat2, octonion, sym2;
  } expected[] = {
      {"jordan-bimodule", ModuleKind::JordanBimodule, false, false, true},
      {"jordan-right", ModuleKind::JordanRight, false, false, true},
      {"jordan-left", ModuleKind::JordanLeft, false, false, true},
      {"alt-left", ModuleKind::AltLeft, true, true, false},
      {"alt-right", ModuleKind::AltRight, true, true, false},
      {"alt-bimodule", ModuleKind::AltBimodule, true, true, false},
      {"operator-commutativity", ModuleKind::OperatorCommutativity, true, false, false},
      {"special-left", ModuleKind::SpecialLeft, false, false, false},
      {"special-right", ModuleKind::SpecialRight, false, false, false},
      {"assoc-left", ModuleKind::AssocLeft, true, false, false},
      {"assoc-right", ModuleKind::AssocRight, true, false, false},
      {"assoc-bimodule", ModuleKind::AssocBimodule, true, false, false},
  };
  const Bimodule m2 = regular_bimodule(builtin_algebra("mat2"));
  const Bimodule oct = regular_bimodule(builtin_algebra("octonion"));
  const Bimodule sym2 = regular_bimodule(builtin_algebra("sym2-jordan"));
  for (const auto& row : expected) {
    INFO(row.name);
    CHECK(check_module(m2, row.kind).ok == row.mat2);
    CHECK(check_module(oct, row.kind).ok == row.octonion);
    CHECK(check_module(sym2, row.kind).ok == row.sym2);
  }
}

TEST_CASE("one-sided special structures over the plus algebra") {
  // the octonion regular actions, read over octonion-plus
  const HomAlgebra oct = builtin_algebra("octonion");
  const HomAlgebra jp = builtin_algebra("octonion-plus");
  const Bimodule v(jp, Mat(Mat::Identity(8, 8)), oct.mul(), oct.mul());
  CHECK(check_module(v, ModuleKind::SpecialLeft).ok);
  CHECK(check_module(v, ModuleKind::SpecialRight).ok);

  // the sym2 product is not special: the rule fails at (s11, s11, s11)
  const Bimodule sreg = regular_bimodule(builtin_algebra("sym2-jordan"));
  CHECK_FALSE(check_module(sreg, ModuleKind::SpecialLeft).ok);
  CHECK_FALSE(check_module(sreg, ModuleKind::SpecialRight).ok);
}

TEST_CASE("equivalent identity forms agree") {
  CHECK(check_equiv_forms(regular_bimodule(builtin_algebra("sym2-jordan"))).ok);
  CHECK(check_equiv_forms(regular_bimodule(builtin_algebra("mat2-plus"))).ok);
  CHECK(check_equiv_forms(regular_bimodule(builtin_algebra("octonion-plus"))).ok);
  CHECK(check_equiv_forms(twisted_jordan_bimodule()).ok);

  std::mt19937_64 rng(41);
  const HomAlgebra sym2 = builtin_algebra("sym2-jordan");
  for (int t = 0; t < 20; ++t)
    CHECK(check_equiv_forms(random_symmetric_bimodule(rng, sym2, 3)).ok);

  // the regular octonion bimodule violates the symmetry precondition
  CHECK_THROWS_AS(check_equiv_forms(regular_bimodule(builtin_algebra("octonion"))),
                  PreconditionFailed);
}

TEST_CASE("bimodule morphisms") {
  const Bimodule reg = regular_bimodule(builtin_algebra("mat2"));
  CHECK(is_bimodule_morphism(Mat(Mat::Identity(4, 4)), reg, reg));
  CHECK(is_bimodule_morphism(Mat(Rational(2) * Mat::Identity(4, 4)), reg, reg));
  CHECK(is_bimodule_morphism(Mat(Mat::Zero(4, 4)), reg, reg));
  // alphaV itself (here the identity) commutes with the structure maps
  CHECK(is_bimodule_morphism(reg.alpha_v(), reg, reg));

  Mat proj = Mat::Zero(4, 4);
  proj(0, 0) = 1;  // projection onto E11 is not equivariant
  CHECK_FALSE(is_bimodule_morphism(proj, reg, reg));

  const Bimodule other = regular_bimodule(builtin_algebra("quaternion"));
  CHECK_THROWS_AS(is_bimodule_morphism(Mat(Mat::Identity(4, 4)), reg, other), PreconditionFailed);
}

TEST_CASE("skew consequence holds on every corpus alternative bimodule") {
  // as(v, a, a) = 0, checked in linearized form
  std::vector<Bimodule> mods;
  for (const auto& name : builtin_algebra_names())
    mods.push_back(regular_bimodule(builtin_algebra(name)));
  mods.push_back(twisted_octonion_bimodule());
  for (const Bimodule& v : mods) {
    if (!check_module(v, ModuleKind::AltBimodule).ok) continue;
    const Index n = v.parent().dim(), m = v.mdim();
    for (Index s = 0; s < m; ++s)
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
          CHECK(is_zero(
              Vec(module_hom_associator(v, AssocPattern::VAA, unit(m, s), unit(n, i), unit(n, j)) +
                  module_hom_associator(v, AssocPattern::VAA, unit(m, s), unit(n, j), unit(n, i)))));
  }
}

namespace {

// Second checker variant for the alternating chain: two of the pairwise
// equalities plus the linearized as(a, a, v) = 0.
bool alt_chain_variant(const Bimodule& v) {
  const Index n = v.parent().dim(), m = v.mdim();
  for (Index i = 0; i < n; ++i)
    for (Index s = 0; s < m; ++s)
      for (Index j = 0; j < n; ++j) {
        const Vec avb = module_hom_associator(v, AssocPattern::AVA, unit(n, i), unit(m, s), unit(n, j));
        const Vec vab = module_hom_associator(v, AssocPattern::VAA, unit(m, s), unit(n, i), unit(n, j));
        const Vec bav = module_hom_associator(v, AssocPattern::AAV, unit(n, j), unit(n, i), unit(m, s));
        if (!is_zero(Vec(avb + vab))) return false;
        if (!is_zero(Vec(bav + vab))) return false;
        const Vec abv = module_hom_associator(v, AssocPattern::AAV, unit(n, i), unit(n, j), unit(m, s));
        const Vec bav2 = module_hom_associator(v, AssocPattern::AAV, unit(n, j), unit(n, i), unit(m, s));
        if (!is_zero(Vec(abv + bav2))) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("chain checker agrees with its characteristic-zero variant") {
  std::mt19937_64 rng(43);
  std::vector<Bimodule> mods;
  for (const auto& name : builtin_algebra_names())
    mods.push_back(regular_bimodule(builtin_algebra(name)));
  mods.push_back(twisted_octonion_bimodule());
  const HomAlgebra m2 = builtin_algebra("mat2");
  for (int t = 0; t < 20; ++t) mods.push_back(random_symmetric_bimodule(rng, m2, 3));
  for (const Bimodule& v : mods)
    CHECK(check_module(v, ModuleKind::AltBimodule).ok == alt_chain_variant(v));
}

TEST_CASE("cyclic form implies the polarized square form") {
  for (const Bimodule& v :
       {regular_bimodule(builtin_algebra("sym2-jordan")),
        regular_bimodule(builtin_algebra("octonion-plus")), twisted_jordan_bimodule()}) {
    REQUIRE(check_module(v, ModuleKind::JordanBimodule).ok);
    const HomAlgebra& a = v.parent();
    const Index n = a.dim(), m = v.mdim();
    // six-term polarization of as(alpha(a), alphaV(v), a a) in a
    for (Index s = 0; s < m; ++s)
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
          for (Index k = 0; k < n; ++k) {
            Vec sum = Vec::Zero(m);
            const Index tri[3] = {i, j, k};
            for (int p = 0; p < 3; ++p) {
              const Index x = tri[p], y = tri[(p + 1) % 3], z = tri[(p + 2) % 3];
              sum += module_hom_associator(v, AssocPattern::AVA, Vec(a.alpha().col(x)),
                                           v.twist_v(unit(m, s)), Vec(a.mul().fiber(y, z)));
              sum += module_hom_associator(v, AssocPattern::AVA, Vec(a.alpha().col(x)),
                                           v.twist_v(unit(m, s)), Vec(a.mul().fiber(z, y)));
            }
            CHECK(is_zero(sum));
          }
  }
}

TEST_CASE("twist powers move through the middle-slot associator") {
  for (const Bimodule& v : {regular_bimodule(builtin_algebra("octonion-plus")),
                            twisted_octonion_bimodule(), twisted_jordan_bimodule()}) {
    const HomAlgebra& a = v.parent();
    const Index n = a.dim(), m = v.mdim();
    for (unsigned p = 1; p <= 3; ++p) {
      const Mat an = mat_power(a.alpha(), p);
      const Mat vn = mat_power(v.alpha_v(), p);
      for (Index i = 0; i < n; ++i)
        for (Index s = 0; s < m; ++s)
          for (Index j = 0; j < n; ++j) {
            const Vec lhs = apply_linear(
                vn, module_hom_associator(v, AssocPattern::AVA, unit(n, i), unit(m, s), unit(n, j)));
            const Vec rhs = module_hom_associator(v, AssocPattern::AVA, Vec(an.col(i)),
                                                  Vec(vn.col(s)), Vec(an.col(j)));
            CHECK(exact_eq(lhs, rhs));
          }
    }
  }
}
