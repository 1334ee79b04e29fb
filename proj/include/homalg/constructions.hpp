#ifndef HOMALG_CONSTRUCTIONS_HPP
#define HOMALG_CONSTRUCTIONS_HPP

// Constructors that turn validated objects into new validated objects:
// plus algebras, twists along endomorphisms, shifted bimodules, promotion
// of special one-sided modules, and split null extensions. Stated
// preconditions raise PreconditionFailed; every constructor re-validates
// its own output and raises InternalCheckFailure if that fails, which with
// valid inputs cannot happen.

#include "homalg/bimodule.hpp"
#include "homalg/hom_algebra.hpp"

namespace homalg {

enum class BimoduleClass { Alternative, Jordan };

const char* to_string(BimoduleClass cls);
BimoduleClass bimodule_class_from_string(const std::string& name);

/// (A, *, alpha) with x * y = x y + y x. With half_normalized the product is
/// scaled by 1/2; every checker verdict is invariant under that rescaling.
HomAlgebra plus_algebra(const HomAlgebra& a, bool half_normalized = false);

/// (A, beta o mu, beta o alpha). beta must be an endomorphism of (A, mu)
/// commuting with alpha.
HomAlgebra yau_twist(const HomAlgebra& a, const Mat& beta);

/// V = A acting on itself: alphaV = alpha, both actions = mu.
Bimodule regular_bimodule(const HomAlgebra& a);

/// Deforms a bimodule along (beta_a, beta_v) into a bimodule over
/// yau_twist(a, beta_a): actions beta_v o rho, module twist beta_v o alphaV.
/// Requires beta_v o rho_l = rho_l o (beta_a x beta_v) and
/// beta_v o rho_r = rho_r o (beta_v x beta_a); failures name the basis pair.
Bimodule twist_bimodule(const HomAlgebra& a, const Bimodule& v, const Mat& beta_a,
                        const Mat& beta_v);

/// V^(n): feeds the algebra slot of each action through alphaA^n. The
/// Jordan variant additionally requires alphaV^n = Id.
Bimodule nth_shift_bimodule(const Bimodule& v, unsigned n, BimoduleClass cls);

/// One-step form of twisting then shifting:
///   rho_l^(n) = rho_l o (beta_a^(n+1) x beta_v),
///   rho_r^(n) = rho_r o (beta_v x beta_a^(n+1)),
/// over yau_twist(a, beta_a). On the supported instances this equals
/// nth_shift_bimodule(twist_bimodule(...), n) tensor-exactly.
Bimodule corollary_twist(const HomAlgebra& a, const Bimodule& v, const Mat& beta_a,
                         const Mat& beta_v, unsigned n);

/// Promotes a pair of special one-sided module structures (rho1 left,
/// rho2 right) over a Jordan-checked algebra into a two-sided module with
///   rho_l = rho1 + rho2 o flip,  rho_r = rho1 o flip + rho2,
/// provided the operator commutativity rho2 o (rho1 x alphaA) =
/// rho1 o (alphaA x rho2) holds. Output is validated as a Jordan bimodule.
Bimodule special_to_bimodule(const HomAlgebra& a, const Tensor3& rho1, const Tensor3& rho2,
                             const Mat& alpha_v);

/// Bimodule over plus_algebra(a) built from an associative bimodule by the
/// same symmetrization as special_to_bimodule. Output is validated as a
/// Jordan bimodule.
Bimodule plus_bimodule(const HomAlgebra& a, const Bimodule& v);

/// A + V with (a + u)(b + w) = ab + a.w + u.b and the block-diagonal twist;
/// V becomes a square-zero ideal. Output is validated against the requested
/// class.
HomAlgebra split_null_extension(const HomAlgebra& a, const Bimodule& v, BimoduleClass cls);

}  // namespace homalg

#endif
