#ifndef HOMALG_CORPUS_HPP
#define HOMALG_CORPUS_HPP

// The built-in example corpus and a brute-force search for diagonal
// endomorphisms usable as twisting maps. Multiplication tables are
// generated (Cayley-Dickson doubling, matrix units), never hand-typed.

#include <string>
#include <variant>
#include <vector>

#include "homalg/bimodule.hpp"
#include "homalg/hom_algebra.hpp"

namespace homalg {

using CorpusObject = std::variant<HomAlgebra, Bimodule, Mat>;

/// Names resolvable by builtin(): mat2, quaternion, octonion, sym2-jordan,
/// mat2-plus, octonion-plus, quaternion-swap, octonion-flip, mat2-conj and
/// regular:<algebra-name>.
std::vector<std::string> builtin_names();

/// Names of the builtin algebras alone (the corpus the test suites sweep).
std::vector<std::string> builtin_algebra_names();

CorpusObject builtin(const std::string& name);

/// Convenience accessors that throw LookupError when the name resolves to a
/// different kind of object.
HomAlgebra builtin_algebra(const std::string& name);
Bimodule builtin_bimodule(const std::string& name);
Mat builtin_map(const std::string& name);

/// All diagonal matrices D over the entry set with D o mu = mu o (D x D)
/// and D o alpha = alpha o D, in lexicographic order of their diagonals
/// (entries sorted ascending, first basis index most significant).
/// Guard: dim <= 10, otherwise the enumeration is refused.
std::vector<Mat> search_diagonal_endomorphisms(const HomAlgebra& a,
                                               std::vector<Rational> entries = {
                                                   Rational(-1), Rational(0), Rational(1)});

}  // namespace homalg

#endif
