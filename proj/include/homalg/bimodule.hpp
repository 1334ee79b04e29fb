#ifndef HOMALG_BIMODULE_HPP
#define HOMALG_BIMODULE_HPP

// Bimodule data over a Hom-algebra: a module space with its own twist map
// and left/right structure tensors. Construction validates that both
// structure maps are morphisms of Hom-modules, i.e.
//   alphaV(a . v) = alphaA(a) . alphaV(v)   and
//   alphaV(v . a) = alphaV(v) . alphaA(a).
// The checkers below decide the class-specific associator identities; they
// never re-check the parent algebra (callers compose checks as needed).

#include <string>
#include <vector>

#include "homalg/hom_algebra.hpp"

namespace homalg {

class Bimodule {
 public:
  /// rho_l is n x m x m with rho_l(i, s, t) = coefficient of f_t in e_i . f_s;
  /// rho_r is m x n x m with rho_r(s, i, t) = coefficient of f_t in f_s . e_i.
  Bimodule(HomAlgebra parent, Mat alpha_v, Tensor3 rho_l, Tensor3 rho_r);

  const HomAlgebra& parent() const { return parent_; }
  Index mdim() const { return mdim_; }
  const Mat& alpha_v() const { return alpha_v_; }
  const Tensor3& rho_l() const { return rho_l_; }
  const Tensor3& rho_r() const { return rho_r_; }

  /// a . v for a in the algebra, v in the module.
  Vec act_left(const Vec& a, const Vec& v) const { return apply_bilinear(rho_l_, a, v); }
  /// v . a.
  Vec act_right(const Vec& v, const Vec& a) const { return apply_bilinear(rho_r_, v, a); }
  Vec twist_v(const Vec& v) const { return apply_linear(alpha_v_, v); }

  std::string module_label(Index s) const { return "f" + std::to_string(s); }

  bool operator==(const Bimodule& o) const {
    return parent_ == o.parent_ && mdim_ == o.mdim_ && exact_eq(alpha_v_, o.alpha_v_) &&
           rho_l_ == o.rho_l_ && rho_r_ == o.rho_r_;
  }
  bool operator!=(const Bimodule& o) const { return !(*this == o); }

 private:
  HomAlgebra parent_;
  Index mdim_;
  Mat alpha_v_;
  Tensor3 rho_l_;
  Tensor3 rho_r_;
};

/// Slot pattern of the module Hom-associator: which argument lives in the
/// module space (V) versus the algebra (A).
enum class AssocPattern { VAA, AVA, AAV };

/// The three slot-typed associator variants:
///   VAA: as(v, a, b) = (v . a) . alphaA(b) - alphaV(v) . (a b)
///   AVA: as(a, v, b) = (a . v) . alphaA(b) - alphaA(a) . (v . b)
///   AAV: as(a, b, v) = (a b) . alphaV(v) - alphaA(a) . (b . v)
Vec module_hom_associator(const Bimodule& v, AssocPattern pattern, const Vec& x, const Vec& y,
                          const Vec& z);

enum class ModuleKind {
  AssocLeft,
  AssocRight,
  AssocBimodule,
  AltLeft,
  AltRight,
  AltBimodule,
  JordanLeft,
  JordanRight,
  JordanBimodule,
  SpecialLeft,
  SpecialRight,
  OperatorCommutativity
};

const char* to_string(ModuleKind kind);
ModuleKind module_kind_from_string(const std::string& name);

/// Exhaustive basis evaluation of the identities named by the kind. Every
/// identity checked here is multilinear in distinct slots, so the basis scan
/// is exact and complete.
Report check_module(const Bimodule& v, ModuleKind kind, const CheckOptions& opt = {});

/// Cross-validates the two printed forms of the Jordan-bimodule identities:
/// the structure-map form against its module-associator rewriting, identity
/// by identity over all basis tuples. Requires the left action to be the
/// flip of the right one (throws PreconditionFailed otherwise); reports ok
/// when both pairs agree in truth value.
Report check_equiv_forms(const Bimodule& v, const CheckOptions& opt = {});

/// True iff f . alphaV = alphaW . f, f(a . v) = a . f(v) and
/// f(v . a) = f(v) . a on all basis pairs. V and W must share a parent.
bool is_bimodule_morphism(const Mat& f, const Bimodule& v, const Bimodule& w);

}  // namespace homalg

#endif
