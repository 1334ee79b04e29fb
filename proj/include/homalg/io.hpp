#ifndef HOMALG_IO_HPP
#define HOMALG_IO_HPP

// JSON interchange for algebras, bimodules and linear maps. Scalars are
// encoded as strings "p/q" in lowest terms ("p" for integers) so the files
// stay exact; key order and formatting are fixed so that canonically saved
// files re-serialize byte-identically.
//
// Schemas:
//   {"kind": "hom-algebra", "dim": n, "mul": [[[s]]], "alpha": [[s]],
//    "labels": [..]}                    mul[i][j][k], alpha[i][j]
//   {"kind": "hom-bimodule", "algebra": <object or path>, "mdim": m,
//    "alphaV": [[s]], "rhoL": [[[s]]], "rhoR": [[[s]]]}
//                                       rhoL[i][s][k], rhoR[s][i][k]
//   {"kind": "linear-map", "rows": r, "cols": c, "entries": [[s]]}

#include <string>
#include <variant>

#include "homalg/bimodule.hpp"
#include "homalg/hom_algebra.hpp"

namespace homalg {

using LoadedObject = std::variant<HomAlgebra, Bimodule, Mat>;

/// Parses and validates; throws ParseError (malformed document, wrong
/// extents, bad scalars, unknown kind) or InvariantViolation (the parsed
/// data violates a construction axiom, named in the error).
LoadedObject load(const std::string& path);

HomAlgebra load_algebra(const std::string& path);
Bimodule load_bimodule(const std::string& path);
Mat load_map(const std::string& path);

void save(const HomAlgebra& a, const std::string& path);
void save(const Bimodule& v, const std::string& path);
void save(const Mat& m, const std::string& path);
void save(const LoadedObject& o, const std::string& path);

/// Canonical document text (exactly what save() writes).
std::string to_json_text(const HomAlgebra& a);
std::string to_json_text(const Bimodule& v);
std::string to_json_text(const Mat& m);

}  // namespace homalg

#endif
