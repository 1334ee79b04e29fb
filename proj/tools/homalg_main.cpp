// Command-line front end: checkers, constructors, the identity DSL, the
// builtin corpus and the endomorphism search. Exit codes: 0 = pass/ok,
// 1 = a checked property fails, 2 = usage, parse or invariant errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "homalg/constructions.hpp"
#include "homalg/corpus.hpp"
#include "homalg/errors.hpp"
#include "homalg/identity.hpp"
#include "homalg/io.hpp"

namespace {

using namespace homalg;
using Json = nlohmann::ordered_json;

struct ObjectInput {
  std::string file;
  std::string builtin_name;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--file", file, "path to a JSON document");
    auto* b = cmd->add_option("--builtin", builtin_name, "name of a builtin object");
    f->excludes(b);
  }

  LoadedObject resolve() const {
    if (!file.empty() && !builtin_name.empty())
      throw PreconditionFailed("input", "give either --file or --builtin, not both");
    if (!file.empty()) return load(file);
    if (!builtin_name.empty()) {
      CorpusObject o = builtin(builtin_name);
      if (auto* a = std::get_if<HomAlgebra>(&o)) return std::move(*a);
      if (auto* v = std::get_if<Bimodule>(&o)) return std::move(*v);
      return std::move(std::get<Mat>(o));
    }
    throw PreconditionFailed("input", "an input object is required (--file or --builtin)");
  }

  std::string describe() const { return !file.empty() ? file : builtin_name; }

  HomAlgebra algebra() const {
    LoadedObject o = resolve();
    if (auto* a = std::get_if<HomAlgebra>(&o)) return std::move(*a);
    throw PreconditionFailed("input", describe() + " is not a hom-algebra");
  }

  Bimodule bimodule() const {
    LoadedObject o = resolve();
    if (auto* v = std::get_if<Bimodule>(&o)) return std::move(*v);
    throw PreconditionFailed("input", describe() + " is not a hom-bimodule");
  }
};

// A map or module argument: builtin name first, file path second.
Mat resolve_map(const std::string& spec) {
  try {
    return builtin_map(spec);
  } catch (const LookupError&) {
    return load_map(spec);
  }
}

Bimodule resolve_module(const std::string& spec) {
  try {
    return builtin_bimodule(spec);
  } catch (const LookupError&) {
    return load_bimodule(spec);
  }
}

Json witness_json(const Witness& w) {
  Json j;
  j["identity"] = w.identity;
  j["tuple"] = w.tuple;
  Json defect = Json::array();
  for (Index i = 0; i < w.defect.size(); ++i) defect.push_back(format_rational(w.defect(i)));
  j["defect"] = std::move(defect);
  return j;
}

Json report_json(const Report& r) {
  Json j;
  j["ok"] = r.ok;
  j["truncated"] = r.truncated;
  Json ws = Json::array();
  for (const auto& w : r.witnesses) ws.push_back(witness_json(w));
  j["witnesses"] = std::move(ws);
  return j;
}

void print_witnesses(const Report& r) {
  for (const auto& w : r.witnesses) {
    std::cout << "  " << w.identity << " at (";
    for (std::size_t i = 0; i < w.tuple.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << w.tuple[i];
    }
    std::cout << "): defect " << format_vector(w.defect) << "\n";
  }
  if (r.truncated) std::cout << "  ... witness cap reached, more may exist\n";
}

int emit_report(const Report& r, Json context, bool as_json) {
  if (as_json) {
    Json j = std::move(context);
    j.update(report_json(r));
    std::cout << j.dump(2) << "\n";
  } else {
    std::string head;
    for (auto& [k, v] : context.items())
      head += (head.empty() ? "" : ", ") + k + " " + (v.is_string() ? v.get<std::string>() : v.dump());
    std::cout << head << ": " << (r.ok ? "PASS" : "FAIL") << "\n";
    if (!r.ok) print_witnesses(r);
  }
  return r.ok ? 0 : 1;
}

int run(int argc, char** argv) {
  CLI::App app{"exact checkers and constructions for Hom-algebras and their bimodules"};
  app.require_subcommand(1);

  // ---- check ---------------------------------------------------------------
  auto* check = app.add_subcommand("check", "run an axiom checker");
  check->require_subcommand(1);

  ObjectInput check_alg_in;
  std::string check_class;
  bool check_alg_json = false, check_alg_all = false;
  auto* check_alg = check->add_subcommand("algebra", "check algebra identities");
  check_alg_in.attach(check_alg);
  check_alg->add_option("--class", check_class, "associative|alternative|commutative|jordan")
      ->required();
  check_alg->add_flag("--json", check_alg_json, "machine-readable report");
  check_alg->add_flag("--all-witnesses", check_alg_all, "lift the witness cap");

  ObjectInput check_bim_in;
  std::string check_kind;
  bool check_bim_json = false, check_bim_all = false;
  auto* check_bim = check->add_subcommand("bimodule", "check bimodule identities");
  check_bim_in.attach(check_bim);
  check_bim->add_option("--kind", check_kind,
                        "assoc-left|assoc-right|assoc-bimodule|alt-left|alt-right|alt-bimodule|"
                        "jordan-left|jordan-right|jordan-bimodule|special-left|special-right|"
                        "operator-commutativity")
      ->required();
  check_bim->add_flag("--json", check_bim_json, "machine-readable report");
  check_bim->add_flag("--all-witnesses", check_bim_all, "lift the witness cap");

  // ---- construct -----------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "run a construction and save the result");
  construct->require_subcommand(1);

  struct ConstructArgs {
    ObjectInput in;
    std::string out, map, map_v, module_spec, cls;
    unsigned n = 1;
    bool half = false;
  } ca;

  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", ca.out, "output path")->required();
  };

  auto* c_plus = construct->add_subcommand("plus", "symmetrized product x*y = xy + yx");
  ca.in.attach(c_plus);
  add_out(c_plus);
  c_plus->add_flag("--half", ca.half, "scale the plus product by 1/2");

  auto* c_regular = construct->add_subcommand("regular", "the algebra acting on itself");
  ca.in.attach(c_regular);
  add_out(c_regular);

  auto* c_twist = construct->add_subcommand("twist", "deform along an endomorphism");
  ca.in.attach(c_twist);
  add_out(c_twist);
  c_twist->add_option("--map", ca.map, "algebra twisting map (builtin name or path)")->required();
  c_twist->add_option("--module", ca.module_spec, "bimodule to twist alongside the algebra");
  c_twist->add_option("--map-v", ca.map_v, "module twisting map (required with --module)");

  auto* c_shift = construct->add_subcommand("shift", "feed algebra slots through alpha^n");
  ca.in.attach(c_shift);
  add_out(c_shift);
  c_shift->add_option("--n", ca.n, "shift exponent")->required();
  c_shift->add_option("--class", ca.cls, "alternative|jordan")->required();

  auto* c_split = construct->add_subcommand("split-null", "square-zero extension A + V");
  ca.in.attach(c_split);
  add_out(c_split);
  c_split->add_option("--class", ca.cls, "alternative|jordan")->required();

  auto* c_special = construct->add_subcommand(
      "special-to-bimodule", "promote special one-sided actions to a two-sided module");
  ca.in.attach(c_special);
  add_out(c_special);
  c_special->add_option("--module", ca.module_spec,
                        "document supplying alphaV, rhoL (left action) and rhoR (right action)")
      ->required();

  auto* c_plusbim =
      construct->add_subcommand("plus-bimodule", "associative bimodule over the plus algebra");
  ca.in.attach(c_plusbim);
  add_out(c_plusbim);

  // ---- identity ------------------------------------------------------------
  auto* identity = app.add_subcommand("identity", "identity DSL");
  identity->require_subcommand(1);
  std::string id_text, id_module;
  bool id_json = false;
  ObjectInput id_in;
  auto* id_verify = identity->add_subcommand("verify", "verify an identity on all basis tuples");
  id_verify->add_option("text", id_text, "identity, e.g. \"alg x y; as(x,x,y) = 0\"")->required();
  id_in.attach(id_verify);
  id_verify->add_option("--module", id_module, "bimodule for mod-sorted variables");
  id_verify->add_flag("--json", id_json, "machine-readable report");

  // ---- corpus ----------------------------------------------------------------
  auto* corpus = app.add_subcommand("corpus", "builtin example objects");
  corpus->require_subcommand(1);
  auto* corpus_list = corpus->add_subcommand("list", "list builtin names");
  std::string emit_name, emit_out;
  auto* corpus_emit = corpus->add_subcommand("emit", "save a builtin object");
  corpus_emit->add_option("name", emit_name, "builtin name")->required();
  corpus_emit->add_option("--out", emit_out, "output path")->required();

  // ---- search ----------------------------------------------------------------
  auto* search = app.add_subcommand("search", "brute-force searches");
  search->require_subcommand(1);
  ObjectInput search_in;
  std::string entries_text = "-1,0,1";
  bool search_json = false;
  auto* search_endos = search->add_subcommand("endos", "diagonal endomorphisms of an algebra");
  search_in.attach(search_endos);
  search_endos->add_option("--entries", entries_text, "comma-separated entry set, default -1,0,1");
  search_endos->add_flag("--json", search_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (check_alg->parsed()) {
    const HomAlgebra a = check_alg_in.algebra();
    const Report r = check_algebra(a, algebra_class_from_string(check_class),
                                   {.all_witnesses = check_alg_all});
    Json ctx;
    ctx["command"] = "check-algebra";
    ctx["object"] = check_alg_in.describe();
    ctx["class"] = check_class;
    return emit_report(r, std::move(ctx), check_alg_json);
  }

  if (check_bim->parsed()) {
    const Bimodule v = check_bim_in.bimodule();
    const Report r =
        check_module(v, module_kind_from_string(check_kind), {.all_witnesses = check_bim_all});
    Json ctx;
    ctx["command"] = "check-bimodule";
    ctx["object"] = check_bim_in.describe();
    ctx["kind"] = check_kind;
    return emit_report(r, std::move(ctx), check_bim_json);
  }

  if (construct->parsed()) {
    LoadedObject result = [&]() -> LoadedObject {
      if (c_plus->parsed()) return plus_algebra(ca.in.algebra(), ca.half);
      if (c_regular->parsed()) return regular_bimodule(ca.in.algebra());
      if (c_twist->parsed()) {
        const HomAlgebra a = ca.in.algebra();
        const Mat beta = resolve_map(ca.map);
        if (ca.module_spec.empty()) return yau_twist(a, beta);
        if (ca.map_v.empty())
          throw PreconditionFailed("map-v", "--map-v is required when twisting a bimodule");
        return twist_bimodule(a, resolve_module(ca.module_spec), beta, resolve_map(ca.map_v));
      }
      if (c_shift->parsed())
        return nth_shift_bimodule(ca.in.bimodule(), ca.n, bimodule_class_from_string(ca.cls));
      if (c_split->parsed()) {
        const Bimodule v = ca.in.bimodule();
        return split_null_extension(v.parent(), v, bimodule_class_from_string(ca.cls));
      }
      if (c_special->parsed()) {
        const HomAlgebra a = ca.in.algebra();
        const Bimodule data = resolve_module(ca.module_spec);
        return special_to_bimodule(a, data.rho_l(), data.rho_r(), data.alpha_v());
      }
      if (c_plusbim->parsed()) {
        const Bimodule v = ca.in.bimodule();
        return plus_bimodule(v.parent(), v);
      }
      throw PreconditionFailed("construct", "no construction selected");
    }();
    save(result, ca.out);
    std::cout << "wrote " << ca.out << "\n";
    return 0;
  }

  if (id_verify->parsed()) {
    const HomAlgebra a = id_in.algebra();
    std::optional<Bimodule> v;
    if (!id_module.empty()) v = resolve_module(id_module);
    const Report r = verify_identity(id_text, a, v ? &*v : nullptr);
    Json ctx;
    ctx["command"] = "identity-verify";
    ctx["identity"] = id_text;
    ctx["object"] = id_in.describe();
    return emit_report(r, std::move(ctx), id_json);
  }

  if (corpus_list->parsed()) {
    for (const auto& name : builtin_names()) {
      CorpusObject o = builtin(name);
      if (auto* a = std::get_if<HomAlgebra>(&o))
        std::cout << name << "  hom-algebra  dim " << a->dim() << "\n";
      else if (auto* v = std::get_if<Bimodule>(&o))
        std::cout << name << "  hom-bimodule  dim " << v->parent().dim() << " module dim "
                  << v->mdim() << "\n";
      else
        std::cout << name << "  linear-map  " << std::get<Mat>(o).rows() << "x"
                  << std::get<Mat>(o).cols() << "\n";
    }
    return 0;
  }

  if (corpus_emit->parsed()) {
    CorpusObject o = builtin(emit_name);
    std::visit([&](const auto& x) { save(x, emit_out); }, o);
    std::cout << "wrote " << emit_out << "\n";
    return 0;
  }

  if (search_endos->parsed()) {
    const HomAlgebra a = search_in.algebra();
    std::vector<Rational> entries;
    std::string tok;
    std::istringstream parts(entries_text);
    while (std::getline(parts, tok, ',')) {
      const auto b = tok.find_first_not_of(" \t");
      const auto e = tok.find_last_not_of(" \t");
      if (b == std::string::npos) continue;
      entries.push_back(parse_rational(tok.substr(b, e - b + 1)));
    }
    const auto found = search_diagonal_endomorphisms(a, entries);
    if (search_json) {
      Json j;
      j["command"] = "search-endos";
      j["object"] = search_in.describe();
      j["count"] = found.size();
      Json diags = Json::array();
      for (const auto& m : found) {
        Json d = Json::array();
        for (Index i = 0; i < m.rows(); ++i) d.push_back(format_rational(m(i, i)));
        diags.push_back(std::move(d));
      }
      j["diagonals"] = std::move(diags);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "found " << found.size() << " diagonal endomorphisms of "
                << search_in.describe() << ":\n";
      for (const auto& m : found) {
        std::cout << "  diag(";
        for (Index i = 0; i < m.rows(); ++i)
          std::cout << (i ? ", " : "") << format_rational(m(i, i));
        std::cout << ")\n";
      }
    }
    return 0;
  }

  throw PreconditionFailed("usage", "no subcommand selected");
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const homalg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 2;
  }
}
