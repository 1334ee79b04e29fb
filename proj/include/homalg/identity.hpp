#ifndef HOMALG_IDENTITY_HPP
#define HOMALG_IDENTITY_HPP

// A small expression language for stating polynomial identities over an
// algebra and an optional module, with characteristic-zero polarization and
// exhaustive verification on basis tuples. Grammar:
//
//   input    := (("alg" | "mod") ident+ ";")*  identity
//   identity := expr "=" expr
//   expr     := ["-"] term (("+" | "-") term)*
//   term     := rational "*" prod | rational | prod      (bare rational: 0)
//   prod     := factor ("." factor)*
//   factor   := ident | "a(" expr ")" | "as(" expr "," expr "," expr ")"
//             | "(" expr ")"
//
// "." is the algebra product or a module action depending on sorts; "a(..)"
// is the twist map of the matching sort; "as(..)" is the (module)
// Hom-associator with the slot pattern inferred from sorts. Every free
// variable is implicitly universally quantified.

#include <map>
#include <string>
#include <vector>

#include "homalg/bimodule.hpp"
#include "homalg/hom_algebra.hpp"

namespace homalg {

enum class Sort { Algebra, Module };

struct IdentityExpr {
  enum class Kind { Var, Mul, Alpha, ScalarMul, Sum, Assoc };

  Kind kind = Kind::Sum;
  Sort sort = Sort::Algebra;           // assigned by the sort checker
  std::string var;                     // Var
  Rational coeff;                      // ScalarMul
  std::vector<IdentityExpr> children;  // Mul: 2, Alpha: 1, ScalarMul: 1, Assoc: 3
  std::size_t pos = 0;                 // source offset, for diagnostics

  bool is_zero() const { return kind == Kind::Sum && children.empty(); }
};

struct ParsedIdentity {
  // Declaration clauses exactly as written, for faithful printing.
  std::vector<std::pair<Sort, std::vector<std::string>>> decls;
  std::map<std::string, Sort> var_sorts;
  IdentityExpr lhs, rhs;

  bool uses_module() const;
};

/// Parses and sort-checks. Throws ParseError (with position) on syntax
/// errors and SortError on ill-sorted nodes or undeclared variables.
ParsedIdentity parse_identity(const std::string& text);

std::string to_string(const IdentityExpr& e);
std::string to_string(const ParsedIdentity& id);

/// Fully multilinear components of an identity, produced by replacing each
/// repeated variable x of degree d by x#1 + ... + x#d and keeping the
/// multidegree-(1,...,1) part; identities that are inhomogeneous in some
/// variable are split by degree first (each component must vanish
/// separately over a field of characteristic zero).
struct PolarizedIdentity {
  std::vector<IdentityExpr> components;                 // each read as "... = 0"
  std::vector<std::map<std::string, int>> occurrence;   // per component: var -> degree
};

/// Polarizes `expr` (a sort-checked expression read as expr = 0), starting
/// with `var` and iterating until every variable is multilinear. Fresh
/// variables are named var#1, var#2, ... and inherit the sort of var.
PolarizedIdentity polarize(const IdentityExpr& expr, const std::string& var);

/// Evaluates a sort-checked expression at an explicit assignment of
/// coordinate vectors (module-sorted variables need v). Used by the engine
/// and by randomized soundness checks.
Vec eval_identity_expr(const IdentityExpr& e, const std::map<std::string, Vec>& assignment,
                       const HomAlgebra& a, const Bimodule* v);

/// Polarizes lhs - rhs and evaluates every multilinear component on all
/// tuples of basis vectors; ok iff every defect vanishes. Witness tuples
/// list assignments as "x=e1". Throws PreconditionFailed when the identity
/// mentions module variables and no module is supplied.
Report verify_identity(const ParsedIdentity& id, const HomAlgebra& a, const Bimodule* v = nullptr,
                       const CheckOptions& opt = {});

/// Convenience: parse + verify.
Report verify_identity(const std::string& text, const HomAlgebra& a, const Bimodule* v = nullptr,
                       const CheckOptions& opt = {});

}  // namespace homalg

#endif
