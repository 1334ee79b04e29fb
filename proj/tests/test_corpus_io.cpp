#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "homalg/constructions.hpp"
#include "homalg/corpus.hpp"
#include "homalg/io.hpp"
#include "oracle.hpp"

using namespace homalg;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "homalg-tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("every builtin passes its advertised checker") {
  CHECK(check_algebra(builtin_algebra("mat2"), AlgebraClass::Associative).ok);
  CHECK(check_algebra(builtin_algebra("quaternion"), AlgebraClass::Associative).ok);
  CHECK(check_algebra(builtin_algebra("octonion"), AlgebraClass::Alternative).ok);
  CHECK_FALSE(check_algebra(builtin_algebra("octonion"), AlgebraClass::Associative).ok);
  CHECK(check_algebra(builtin_algebra("sym2-jordan"), AlgebraClass::Jordan).ok);
  CHECK(check_algebra(builtin_algebra("mat2-plus"), AlgebraClass::Jordan).ok);
  CHECK(check_algebra(builtin_algebra("octonion-plus"), AlgebraClass::Jordan).ok);

  CHECK(is_algebra_morphism(builtin_map("quaternion-swap"), builtin_algebra("quaternion"),
                            builtin_algebra("quaternion")));
  CHECK(is_algebra_morphism(builtin_map("octonion-flip"), builtin_algebra("octonion"),
                            builtin_algebra("octonion")));
  CHECK(is_algebra_morphism(builtin_map("mat2-conj"), builtin_algebra("mat2"),
                            builtin_algebra("mat2")));
  // the flip is also an automorphism of the plus algebra
  CHECK(is_algebra_morphism(builtin_map("octonion-flip"), builtin_algebra("octonion-plus"),
                            builtin_algebra("octonion-plus")));

  CHECK_THROWS_AS(builtin("no-such-thing"), LookupError);
  CHECK_THROWS_AS(builtin_algebra("octonion-flip"), LookupError);
}

TEST_CASE("save and load round-trip every corpus object exactly") {
  int index = 0;
  for (const auto& name : builtin_names()) {
    const CorpusObject obj = builtin(name);
    const auto path = temp_file("roundtrip" + std::to_string(index++) + ".json");
    std::visit([&](const auto& x) { save(x, path.string()); }, obj);
    const LoadedObject back = load(path.string());

    if (const auto* a = std::get_if<HomAlgebra>(&obj)) {
      REQUIRE(std::holds_alternative<HomAlgebra>(back));
      CHECK(std::get<HomAlgebra>(back) == *a);
      CHECK(std::get<HomAlgebra>(back).labels() == a->labels());
    } else if (const auto* v = std::get_if<Bimodule>(&obj)) {
      REQUIRE(std::holds_alternative<Bimodule>(back));
      CHECK(std::get<Bimodule>(back) == *v);
    } else {
      REQUIRE(std::holds_alternative<Mat>(back));
      CHECK(exact_eq(std::get<Mat>(back), std::get<Mat>(obj)));
    }

    // canonical files re-serialize byte-identically
    const std::string first = slurp(path);
    const auto path2 = temp_file("roundtrip-again.json");
    save(back, path2.string());
    CHECK(slurp(path2) == first);
  }
}

TEST_CASE("bimodules can reference their parent algebra by path") {
  const HomAlgebra oct = builtin_algebra("octonion");
  const auto apath = temp_file("parent.json");
  save(oct, apath.string());

  const Bimodule reg = regular_bimodule(oct);
  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(to_json_text(reg));
  doc["algebra"] = "parent.json";  // relative to the bimodule file
  const auto bpath = temp_file("bimodule-ref.json");
  spit(bpath, doc.dump(2) + "\n");
  CHECK(load_bimodule(bpath.string()) == reg);
}

TEST_CASE("malformed documents are rejected with parse errors") {
  const auto path = temp_file("bad.json");

  spit(path, "{ not json ]");
  CHECK_THROWS_AS(load(path.string()), ParseError);

  spit(path, "{\"kind\": \"mystery\"}\n");
  CHECK_THROWS_AS(load(path.string()), ParseError);

  // wrong extents: drop one plane of the product tensor
  nlohmann::ordered_json doc =
      nlohmann::ordered_json::parse(to_json_text(builtin_algebra("quaternion")));
  doc["mul"].erase(2);
  spit(path, doc.dump(2));
  CHECK_THROWS_AS(load(path.string()), ParseError);

  // non-rational scalar
  doc = nlohmann::ordered_json::parse(to_json_text(builtin_algebra("quaternion")));
  doc["alpha"][0][0] = "1.5";
  spit(path, doc.dump(2));
  CHECK_THROWS_AS(load(path.string()), ParseError);

  doc = nlohmann::ordered_json::parse(to_json_text(builtin_algebra("quaternion")));
  doc["alpha"][0][0] = 1;  // numbers must be strings
  spit(path, doc.dump(2));
  CHECK_THROWS_AS(load(path.string()), ParseError);
}

TEST_CASE("documents violating construction axioms name the axiom") {
  // a twisted algebra has a nontrivial twist, so multiplicativity bites
  const HomAlgebra twisted =
      yau_twist(builtin_algebra("octonion"), builtin_map("octonion-flip"));
  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(to_json_text(twisted));
  doc["mul"][0][0][4] = "1";
  const auto path = temp_file("invariant.json");
  spit(path, doc.dump(2));
  try {
    load(path.string());
    FAIL("expected InvariantViolation");
  } catch (const InvariantViolation& e) {
    CHECK(e.axiom == "multiplicativity");
    CHECK(e.where == std::vector<std::string>{"e0", "e0"});
  }

  // same for the structure-map morphism condition of a twisted bimodule
  const HomAlgebra oct = builtin_algebra("octonion");
  const Mat flip = builtin_map("octonion-flip");
  const Bimodule tw = twist_bimodule(oct, regular_bimodule(oct), flip, flip);
  nlohmann::ordered_json bdoc = nlohmann::ordered_json::parse(to_json_text(tw));
  bdoc["rhoL"][0][0][4] = "1";
  spit(path, bdoc.dump(2));
  try {
    load(path.string());
    FAIL("expected InvariantViolation");
  } catch (const InvariantViolation& e) {
    CHECK(e.axiom == "left-structure-morphism");
  }
}

TEST_CASE("diagonal endomorphism search") {
  const HomAlgebra oct = builtin_algebra("octonion");

  const auto signs = search_diagonal_endomorphisms(oct, {Rational(-1), Rational(1)});
  CHECK(signs.size() == 8);
  bool has_id = false, has_flip = false;
  const Mat flip = builtin_map("octonion-flip");
  for (const auto& m : signs) {
    CHECK(is_algebra_morphism(m, oct, oct));
    if (exact_eq(m, Mat(Mat::Identity(8, 8)))) has_id = true;
    if (exact_eq(m, flip)) has_flip = true;
  }
  CHECK(has_id);
  CHECK(has_flip);

  // lexicographic order of the diagonals (entries sorted ascending)
  for (std::size_t t = 1; t < signs.size(); ++t) {
    bool less = false;
    for (Index i = 0; i < 8; ++i) {
      if (signs[t - 1](i, i) != signs[t](i, i)) {
        less = signs[t - 1](i, i) < signs[t](i, i);
        break;
      }
    }
    CHECK(less);
  }

  const auto with_zero = search_diagonal_endomorphisms(oct);
  bool has_zero = false;
  for (const auto& m : with_zero) {
    CHECK(is_algebra_morphism(m, oct, oct));
    if (exact_eq(m, Mat(Mat::Zero(8, 8)))) has_zero = true;
  }
  CHECK(has_zero);

  const auto m2 = search_diagonal_endomorphisms(builtin_algebra("mat2"));
  bool has_conj = false;
  for (const auto& m : m2) {
    CHECK(is_algebra_morphism(m, builtin_algebra("mat2"), builtin_algebra("mat2")));
    if (exact_eq(m, builtin_map("mat2-conj"))) has_conj = true;
  }
  CHECK(has_conj);

  // the guard refuses large enumerations
  const HomAlgebra big =
      split_null_extension(oct, regular_bimodule(oct), BimoduleClass::Alternative);
  CHECK_THROWS_AS(search_diagonal_endomorphisms(big), PreconditionFailed);
}
