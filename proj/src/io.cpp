#include "homalg/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "homalg/errors.hpp"

namespace homalg {

namespace {

using Json = nlohmann::ordered_json;

// ---- writing ---------------------------------------------------------------

Json scalar_json(const Rational& q) { return format_rational(q); }

Json matrix_json(const Mat& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json tensor_json(const Tensor3& t) {
  Json out = Json::array();
  for (Index i = 0; i < t.extent0(); ++i) {
    Json plane = Json::array();
    for (Index j = 0; j < t.extent1(); ++j) {
      Json fiber = Json::array();
      for (Index k = 0; k < t.extent2(); ++k) fiber.push_back(scalar_json(t(i, j, k)));
      plane.push_back(std::move(fiber));
    }
    out.push_back(std::move(plane));
  }
  return out;
}

Json algebra_json(const HomAlgebra& a) {
  Json doc;
  doc["kind"] = "hom-algebra";
  doc["dim"] = a.dim();
  doc["mul"] = tensor_json(a.mul());
  doc["alpha"] = matrix_json(a.alpha());
  doc["labels"] = a.labels();
  return doc;
}

Json bimodule_json(const Bimodule& v) {
  Json doc;
  doc["kind"] = "hom-bimodule";
  doc["algebra"] = algebra_json(v.parent());
  doc["mdim"] = v.mdim();
  doc["alphaV"] = matrix_json(v.alpha_v());
  doc["rhoL"] = tensor_json(v.rho_l());
  doc["rhoR"] = tensor_json(v.rho_r());
  return doc;
}

Json map_json(const Mat& m) {
  Json doc;
  doc["kind"] = "linear-map";
  doc["rows"] = m.rows();
  doc["cols"] = m.cols();
  doc["entries"] = matrix_json(m);
  return doc;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw Error("failed writing " + path);
}

// ---- reading ---------------------------------------------------------------

Rational scalar_from(const Json& j, const std::string& where) {
  if (!j.is_string())
    throw ParseError(where + ": scalars must be strings like \"p/q\", got " + j.dump());
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Index size_from(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw ParseError(where + ": expected a non-negative integer");
  return static_cast<Index>(j.get<long long>());
}

Mat matrix_from(const Json& j, Index rows, Index cols, const std::string& where) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows)
    throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
  Mat m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw ParseError(where + "[" + std::to_string(i) + "]: expected " + std::to_string(cols) +
                       " entries");
    for (Index k = 0; k < cols; ++k)
      m(i, k) = scalar_from(row[static_cast<std::size_t>(k)],
                            where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  }
  return m;
}

Tensor3 tensor_from(const Json& j, Index d0, Index d1, Index d2, const std::string& where) {
  if (!j.is_array() || static_cast<Index>(j.size()) != d0)
    throw ParseError(where + ": expected extent " + std::to_string(d0));
  Tensor3 t(d0, d1, d2);
  for (Index i = 0; i < d0; ++i) {
    const Json& plane = j[static_cast<std::size_t>(i)];
    if (!plane.is_array() || static_cast<Index>(plane.size()) != d1)
      throw ParseError(where + "[" + std::to_string(i) + "]: expected extent " +
                       std::to_string(d1));
    for (Index s = 0; s < d1; ++s) {
      const Json& fiber = plane[static_cast<std::size_t>(s)];
      if (!fiber.is_array() || static_cast<Index>(fiber.size()) != d2)
        throw ParseError(where + "[" + std::to_string(i) + "][" + std::to_string(s) +
                         "]: expected extent " + std::to_string(d2));
      for (Index k = 0; k < d2; ++k)
        t(i, s, k) = scalar_from(fiber[static_cast<std::size_t>(k)],
                                 where + "[" + std::to_string(i) + "][" + std::to_string(s) +
                                     "][" + std::to_string(k) + "]");
    }
  }
  return t;
}

const Json& field(const Json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

HomAlgebra algebra_from(const Json& doc) {
  const Index dim = size_from(field(doc, "dim"), "dim");
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const Json& lj = doc["labels"];
    if (!lj.is_array()) throw ParseError("labels: expected an array of strings");
    for (const auto& l : lj) {
      if (!l.is_string()) throw ParseError("labels: expected an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return HomAlgebra(tensor_from(field(doc, "mul"), dim, dim, dim, "mul"),
                    matrix_from(field(doc, "alpha"), dim, dim, "alpha"), std::move(labels));
}

HomAlgebra parent_from(const Json& j, const std::filesystem::path& base) {
  if (j.is_string()) {
    std::filesystem::path ref(j.get<std::string>());
    if (ref.is_relative()) ref = base / ref;
    return load_algebra(ref.string());
  }
  if (!j.is_object() || field(j, "kind") != "hom-algebra")
    throw ParseError("algebra: expected an inline hom-algebra or a path string");
  return algebra_from(j);
}

Bimodule bimodule_from(const Json& doc, const std::filesystem::path& base) {
  HomAlgebra parent = parent_from(field(doc, "algebra"), base);
  const Index n = parent.dim();
  const Index m = size_from(field(doc, "mdim"), "mdim");
  return Bimodule(std::move(parent), matrix_from(field(doc, "alphaV"), m, m, "alphaV"),
                  tensor_from(field(doc, "rhoL"), n, m, m, "rhoL"),
                  tensor_from(field(doc, "rhoR"), m, n, m, "rhoR"));
}

Mat map_from(const Json& doc) {
  const Index rows = size_from(field(doc, "rows"), "rows");
  const Index cols = size_from(field(doc, "cols"), "cols");
  return matrix_from(field(doc, "entries"), rows, cols, "entries");
}

std::string dump_doc(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string to_json_text(const HomAlgebra& a) { return dump_doc(algebra_json(a)); }
std::string to_json_text(const Bimodule& v) { return dump_doc(bimodule_json(v)); }
std::string to_json_text(const Mat& m) { return dump_doc(map_json(m)); }

void save(const HomAlgebra& a, const std::string& path) { write_text(path, to_json_text(a)); }
void save(const Bimodule& v, const std::string& path) { write_text(path, to_json_text(v)); }
void save(const Mat& m, const std::string& path) { write_text(path, to_json_text(m)); }

void save(const LoadedObject& o, const std::string& path) {
  std::visit([&](const auto& x) { save(x, path); }, o);
}

LoadedObject load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  Json doc;
  try {
    doc = Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what(), e.byte);
  }
  if (!doc.is_object()) throw ParseError(path + ": expected a JSON object");
  const Json& kind = field(doc, "kind");
  const std::filesystem::path base = std::filesystem::path(path).parent_path();
  if (kind == "hom-algebra") return algebra_from(doc);
  if (kind == "hom-bimodule") return bimodule_from(doc, base);
  if (kind == "linear-map") return map_from(doc);
  throw ParseError(path + ": unknown kind " + kind.dump());
}

HomAlgebra load_algebra(const std::string& path) {
  LoadedObject o = load(path);
  if (auto* a = std::get_if<HomAlgebra>(&o)) return std::move(*a);
  throw ParseError(path + ": expected a hom-algebra document");
}

Bimodule load_bimodule(const std::string& path) {
  LoadedObject o = load(path);
  if (auto* v = std::get_if<Bimodule>(&o)) return std::move(*v);
  throw ParseError(path + ": expected a hom-bimodule document");
}

Mat load_map(const std::string& path) {
  LoadedObject o = load(path);
  if (auto* m = std::get_if<Mat>(&o)) return std::move(*m);
  throw ParseError(path + ": expected a linear-map document");
}

}  // namespace homalg
