#include "homalg/identity.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <utility>

#include "homalg/errors.hpp"

namespace homalg {

namespace {

using Kind = IdentityExpr::Kind;

Sort combine(Sort l, Sort r) {
  return (l == Sort::Algebra && r == Sort::Algebra) ? Sort::Algebra : Sort::Module;
}

// ---- parsing ---------------------------------------------------------------

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  ParsedIdentity parse() {
    ParsedIdentity id;
    parse_decls(id);
    id.lhs = expr();
    ws();
    expect('=', "'='");
    id.rhs = expr();
    ws();
    if (p_ != s_.size()) throw ParseError("trailing input after the identity", p_);
    return id;
  }

 private:
  void parse_decls(ParsedIdentity& id) {
    while (true) {
      ws();
      const std::size_t mark = p_;
      if (!at_word()) return;
      const std::string w = word();
      if (w != "alg" && w != "mod") {
        p_ = mark;
        return;
      }
      const Sort sort = (w == "alg") ? Sort::Algebra : Sort::Module;
      std::vector<std::string> names;
      while (true) {
        ws();
        if (accept(';')) break;
        if (!at_word()) throw ParseError("expected a variable name or ';'", p_);
        std::string name = word();
        if (name == "alg" || name == "mod")
          throw ParseError("'" + name + "' cannot be a variable name", p_);
        if (id.var_sorts.count(name))
          throw ParseError("variable '" + name + "' declared twice", p_);
        id.var_sorts.emplace(name, sort);
        names.push_back(std::move(name));
      }
      if (names.empty()) throw ParseError("empty declaration clause", mark);
      id.decls.emplace_back(sort, std::move(names));
    }
  }

  IdentityExpr expr() {
    ws();
    std::vector<IdentityExpr> terms;
    bool neg = accept('-');
    terms.push_back(neg ? negate(term()) : term());
    while (true) {
      ws();
      if (accept('+'))
        terms.push_back(term());
      else if (accept('-'))
        terms.push_back(negate(term()));
      else
        break;
    }
    if (terms.size() == 1) return std::move(terms.front());
    IdentityExpr e;
    e.kind = Kind::Sum;
    e.children = std::move(terms);
    return e;
  }

  IdentityExpr term() {
    ws();
    const std::size_t at = p_;
    if (at_number()) {
      const Rational q = number();
      ws();
      if (accept('*')) {
        IdentityExpr body = prod();
        if (q == 0) return IdentityExpr{};  // empty sum
        if (q == 1) return body;
        IdentityExpr e;
        e.kind = Kind::ScalarMul;
        e.coeff = q;
        e.pos = at;
        e.children.push_back(std::move(body));
        return e;
      }
      if (q != 0)
        throw ParseError("a bare scalar term must be 0 (expressions are vector-valued)", at);
      return IdentityExpr{};  // the zero expression
    }
    return prod();
  }

  IdentityExpr prod() {
    IdentityExpr e = factor();
    while (true) {
      ws();
      if (!accept('.')) break;
      IdentityExpr rhs = factor();
      IdentityExpr node;
      node.kind = Kind::Mul;
      node.pos = e.pos;
      node.children.push_back(std::move(e));
      node.children.push_back(std::move(rhs));
      e = std::move(node);
    }
    return e;
  }

  IdentityExpr factor() {
    ws();
    const std::size_t at = p_;
    if (accept('(')) {
      IdentityExpr e = expr();
      ws();
      expect(')', "')'");
      return e;
    }
    if (!at_word()) throw ParseError("expected a variable, 'a(', 'as(' or '('", p_);
    std::string w = word();
    ws();
    if ((w == "a" || w == "as") && peek() == '(') {
      expect('(', "'('");
      if (w == "a") {
        IdentityExpr e;
        e.kind = Kind::Alpha;
        e.pos = at;
        e.children.push_back(expr());
        ws();
        expect(')', "')'");
        return e;
      }
      IdentityExpr e;
      e.kind = Kind::Assoc;
      e.pos = at;
      e.children.push_back(expr());
      ws();
      expect(',', "','");
      e.children.push_back(expr());
      ws();
      expect(',', "','");
      e.children.push_back(expr());
      ws();
      expect(')', "')'");
      return e;
    }
    IdentityExpr e;
    e.kind = Kind::Var;
    e.var = std::move(w);
    e.pos = at;
    return e;
  }

  static IdentityExpr negate(IdentityExpr e) {
    if (e.kind == Kind::ScalarMul) {
      e.coeff = -e.coeff;
      if (e.coeff == 1) {
        IdentityExpr child = std::move(e.children.front());
        return child;
      }
      return e;
    }
    if (e.is_zero()) return e;
    IdentityExpr node;
    node.kind = Kind::ScalarMul;
    node.coeff = -1;
    node.pos = e.pos;
    node.children.push_back(std::move(e));
    return node;
  }

  void ws() {
    while (p_ < s_.size() && (s_[p_] == ' ' || s_[p_] == '\t' || s_[p_] == '\n' || s_[p_] == '\r'))
      ++p_;
  }
  char peek() const { return p_ < s_.size() ? s_[p_] : '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++p_;
    return true;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) throw ParseError(std::string("expected ") + what, p_);
  }
  static bool word_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }
  static bool word_char(char c) { return word_start(c) || (c >= '0' && c <= '9'); }
  bool at_word() const { return word_start(peek()); }
  bool at_number() const { return peek() >= '0' && peek() <= '9'; }

  std::string word() {
    std::size_t b = p_;
    while (p_ < s_.size() && word_char(s_[p_])) ++p_;
    return s_.substr(b, p_ - b);
  }

  Rational number() {
    const std::size_t at = p_;
    std::string digits;
    while (at_number()) digits += s_[p_++];
    std::string den;
    if (peek() == '/') {
      ++p_;
      if (!at_number()) throw ParseError("expected digits after '/'", p_);
      while (at_number()) den += s_[p_++];
    }
    try {
      return parse_rational(den.empty() ? digits : digits + "/" + den);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), at);
    }
  }

  const std::string& s_;
  std::size_t p_ = 0;
};

// ---- sort checking ---------------------------------------------------------

std::string describe(const IdentityExpr& e) {
  switch (e.kind) {
    case Kind::Var:
      return "variable '" + e.var + "'";
    case Kind::Mul:
      return "product at offset " + std::to_string(e.pos);
    case Kind::Alpha:
      return "twist application at offset " + std::to_string(e.pos);
    case Kind::ScalarMul:
      return "scalar multiple at offset " + std::to_string(e.pos);
    case Kind::Sum:
      return "sum at offset " + std::to_string(e.pos);
    case Kind::Assoc:
      return "associator at offset " + std::to_string(e.pos);
  }
  return "?";
}

void force_sort(IdentityExpr& e, Sort s) {
  e.sort = s;
  for (auto& c : e.children) force_sort(c, s);
}

// Returns the definite sort, or nullopt for structurally-zero subtrees
// (which adopt any sort from context).
std::optional<Sort> infer_sort(IdentityExpr& e, const std::map<std::string, Sort>& vars) {
  switch (e.kind) {
    case Kind::Var: {
      auto it = vars.find(e.var);
      if (it == vars.end()) throw SortError("undeclared variable '" + e.var + "'");
      e.sort = it->second;
      return e.sort;
    }
    case Kind::Alpha:
    case Kind::ScalarMul: {
      auto s = infer_sort(e.children.front(), vars);
      e.sort = s.value_or(Sort::Algebra);
      return s;
    }
    case Kind::Sum: {
      std::optional<Sort> known;
      for (auto& c : e.children) {
        auto s = infer_sort(c, vars);
        if (!s) continue;
        if (known && *known != *s)
          throw SortError("mixed sorts in a sum: " + describe(e));
        known = s;
      }
      if (known)
        for (auto& c : e.children)
          if (!infer_sort(c, vars)) force_sort(c, *known);
      e.sort = known.value_or(Sort::Algebra);
      return known;
    }
    case Kind::Mul: {
      auto l = infer_sort(e.children[0], vars);
      auto r = infer_sort(e.children[1], vars);
      if (l && r && *l == Sort::Module && *r == Sort::Module)
        throw SortError("ill-sorted product of two module elements: " + describe(e));
      e.sort = combine(l.value_or(Sort::Algebra), r.value_or(Sort::Algebra));
      return e.sort;
    }
    case Kind::Assoc: {
      int modules = 0;
      for (auto& c : e.children) {
        auto s = infer_sort(c, vars);
        if (s && *s == Sort::Module) ++modules;
      }
      if (modules > 1)
        throw SortError("associator with more than one module slot: " + describe(e));
      e.sort = modules == 1 ? Sort::Module : Sort::Algebra;
      return e.sort;
    }
  }
  throw Error("unreachable expression kind");
}

void sort_check(ParsedIdentity& id) {
  auto ls = infer_sort(id.lhs, id.var_sorts);
  auto rs = infer_sort(id.rhs, id.var_sorts);
  if (ls && rs && *ls != *rs)
    throw SortError("the two sides of the identity have different sorts");
  if (ls && !rs) force_sort(id.rhs, *ls);
  if (rs && !ls) force_sort(id.lhs, *rs);
}

// ---- printing --------------------------------------------------------------

std::string print_expr(const IdentityExpr& e);

std::string print_factor(const IdentityExpr& e) {
  switch (e.kind) {
    case Kind::Var:
      return e.var;
    case Kind::Alpha:
      return "a(" + print_expr(e.children.front()) + ")";
    case Kind::Assoc:
      return "as(" + print_expr(e.children[0]) + "," + print_expr(e.children[1]) + "," +
             print_expr(e.children[2]) + ")";
    default:
      return "(" + print_expr(e) + ")";
  }
}

std::string print_prod(const IdentityExpr& e) {
  if (e.kind != Kind::Mul) return print_factor(e);
  const IdentityExpr& l = e.children[0];
  const IdentityExpr& r = e.children[1];
  return (l.kind == Kind::Mul ? print_prod(l) : print_factor(l)) + "." + print_factor(r);
}

// A term rendered without its sign, plus whether it is negative.
std::pair<bool, std::string> print_term(const IdentityExpr& e) {
  if (e.kind == Kind::ScalarMul) {
    Rational q = e.coeff;
    const bool neg = q < 0;
    if (neg) q = -q;
    if (q == 1) return {neg, print_prod(e.children.front())};
    return {neg, format_rational(q) + " * " + print_prod(e.children.front())};
  }
  return {false, print_prod(e)};
}

std::string print_expr(const IdentityExpr& e) {
  if (e.is_zero()) return "0";
  if (e.kind != Kind::Sum) {
    auto [neg, body] = print_term(e);
    return neg ? "-" + body : body;
  }
  std::string out;
  for (std::size_t i = 0; i < e.children.size(); ++i) {
    auto [neg, body] = print_term(e.children[i]);
    if (i == 0)
      out += (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

// ---- monomial form ---------------------------------------------------------

// A monomial is a product tree with twist powers on the nodes; sums and
// scalar factors have been pushed out. Nonassociativity rules out any
// flattening: the tree shape is the term.
struct MTree {
  Sort sort = Sort::Algebra;
  unsigned alpha = 0;
  std::string var;           // leaf iff non-empty
  std::vector<MTree> kids;   // empty or exactly {left, right}
};

using Term = std::pair<Rational, MTree>;
using Poly = std::vector<Term>;

Poly expand(const IdentityExpr& e) {
  switch (e.kind) {
    case Kind::Var: {
      MTree t;
      t.sort = e.sort;
      t.var = e.var;
      return {{Rational(1), std::move(t)}};
    }
    case Kind::ScalarMul: {
      Poly p = expand(e.children.front());
      for (auto& [c, t] : p) c *= e.coeff;
      return p;
    }
    case Kind::Sum: {
      Poly p;
      for (const auto& c : e.children) {
        Poly q = expand(c);
        p.insert(p.end(), std::make_move_iterator(q.begin()), std::make_move_iterator(q.end()));
      }
      return p;
    }
    case Kind::Alpha: {
      Poly p = expand(e.children.front());
      for (auto& [c, t] : p) ++t.alpha;
      return p;
    }
    case Kind::Mul: {
      const Poly l = expand(e.children[0]);
      const Poly r = expand(e.children[1]);
      Poly p;
      p.reserve(l.size() * r.size());
      for (const auto& [cl, tl] : l)
        for (const auto& [cr, tr] : r) {
          MTree t;
          t.sort = combine(tl.sort, tr.sort);
          t.kids = {tl, tr};
          p.emplace_back(cl * cr, std::move(t));
        }
      return p;
    }
    case Kind::Assoc: {
      // as(x, y, z) = (x.y).a(z) - a(x).(y.z), with sorts carried through.
      const IdentityExpr& x = e.children[0];
      const IdentityExpr& y = e.children[1];
      const IdentityExpr& z = e.children[2];
      const auto mul = [](IdentityExpr l, IdentityExpr r) {
        IdentityExpr m;
        m.kind = Kind::Mul;
        m.sort = combine(l.sort, r.sort);
        m.children = {std::move(l), std::move(r)};
        return m;
      };
      const auto tw = [](IdentityExpr c) {
        IdentityExpr t;
        t.kind = Kind::Alpha;
        t.sort = c.sort;
        t.children = {std::move(c)};
        return t;
      };
      Poly p = expand(mul(mul(x, y), tw(z)));
      Poly q = expand(mul(tw(x), mul(y, z)));
      for (auto& [c, t] : q) p.emplace_back(-c, std::move(t));
      return p;
    }
  }
  throw Error("unreachable expression kind");
}

int degree(const MTree& t, const std::string& var) {
  if (!t.var.empty()) return t.var == var ? 1 : 0;
  int d = 0;
  for (const auto& k : t.kids) d += degree(k, var);
  return d;
}

void collect_leaves(MTree& t, const std::string& var, std::vector<MTree*>& out) {
  if (!t.var.empty()) {
    if (t.var == var) out.push_back(&t);
    return;
  }
  for (auto& k : t.kids) collect_leaves(k, var, out);
}

void collect_vars(const MTree& t, std::map<std::string, Sort>& out) {
  if (!t.var.empty()) {
    out.emplace(t.var, t.sort);
    return;
  }
  for (const auto& k : t.kids) collect_vars(k, out);
}

unsigned max_alpha(const MTree& t) {
  unsigned m = t.alpha;
  for (const auto& k : t.kids) m = std::max(m, max_alpha(k));
  return m;
}

// Replace var (degree d >= 2 in every monomial of the group) by the sum of
// d fresh copies and keep the multilinear part: one monomial per bijection
// between occurrences and copies.
Poly polarize_group(const Poly& group, const std::string& var, int d) {
  Poly out;
  std::vector<int> perm(static_cast<std::size_t>(d));
  for (const auto& [coeff, tree] : group) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      MTree copy = tree;
      std::vector<MTree*> leaves;
      collect_leaves(copy, var, leaves);
      for (std::size_t i = 0; i < leaves.size(); ++i)
        leaves[i]->var = var + "#" + std::to_string(perm[i] + 1);
      out.emplace_back(coeff, std::move(copy));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

struct Component {
  Poly poly;
  std::map<std::string, int> occurrence;  // original var -> degree (>= 1)
};

// Split by degree and polarize until every variable occurs at most once per
// monomial; `first` is processed before the remaining variables.
std::vector<Component> multilinearize(Poly start, const std::string& first = {}) {
  std::map<std::string, Sort> vars;
  for (const auto& [c, t] : start) collect_vars(t, vars);
  std::vector<std::string> order;
  if (!first.empty() && vars.count(first)) order.push_back(first);
  for (const auto& [name, sort] : vars)
    if (name != first) order.push_back(name);

  std::vector<Component> comps{{std::move(start), {}}};
  for (const auto& var : order) {
    std::vector<Component> next;
    for (auto& comp : comps) {
      std::map<int, Poly> groups;
      for (auto& term : comp.poly) groups[degree(term.second, var)].push_back(std::move(term));
      for (auto& [d, g] : groups) {
        Component c2{d >= 2 ? polarize_group(g, var, d) : std::move(g), comp.occurrence};
        if (d >= 1) c2.occurrence[var] = d;
        next.push_back(std::move(c2));
      }
    }
    comps = std::move(next);
  }
  return comps;
}

IdentityExpr tree_to_expr(const MTree& t) {
  IdentityExpr e;
  if (!t.var.empty()) {
    e.kind = Kind::Var;
    e.var = t.var;
    e.sort = t.sort;
  } else {
    e.kind = Kind::Mul;
    e.sort = t.sort;
    e.children = {tree_to_expr(t.kids[0]), tree_to_expr(t.kids[1])};
  }
  for (unsigned k = 0; k < t.alpha; ++k) {
    IdentityExpr w;
    w.kind = Kind::Alpha;
    w.sort = e.sort;
    w.children = {std::move(e)};
    e = std::move(w);
  }
  return e;
}

IdentityExpr poly_to_expr(const Poly& p) {
  IdentityExpr sum;
  sum.kind = Kind::Sum;
  for (const auto& [c, t] : p) {
    IdentityExpr body = tree_to_expr(t);
    if (c == 1) {
      sum.children.push_back(std::move(body));
    } else {
      IdentityExpr sm;
      sm.kind = Kind::ScalarMul;
      sm.coeff = c;
      sm.sort = body.sort;
      sm.children = {std::move(body)};
      sum.children.push_back(std::move(sm));
    }
  }
  if (sum.children.size() == 1) return std::move(sum.children.front());
  return sum;
}

// ---- evaluation ------------------------------------------------------------

struct EvalCtx {
  const HomAlgebra& a;
  const Bimodule* v;
  std::vector<Mat> pa, pv;  // twist powers 0..maxp

  EvalCtx(const HomAlgebra& a_, const Bimodule* v_, unsigned maxp) : a(a_), v(v_) {
    pa.push_back(Mat::Identity(a.dim(), a.dim()));
    for (unsigned k = 1; k <= maxp; ++k) pa.push_back(Mat(pa.back() * a.alpha()));
    if (v) {
      pv.push_back(Mat::Identity(v->mdim(), v->mdim()));
      for (unsigned k = 1; k <= maxp; ++k) pv.push_back(Mat(pv.back() * v->alpha_v()));
    }
  }

  Index dim(Sort s) const { return s == Sort::Algebra ? a.dim() : v->mdim(); }
  const Mat& pow(Sort s, unsigned k) const { return s == Sort::Algebra ? pa[k] : pv[k]; }

  const Tensor3& tensor(Sort l, Sort r) const {
    if (l == Sort::Algebra && r == Sort::Algebra) return a.mul();
    if (l == Sort::Algebra) return v->rho_l();
    return v->rho_r();
  }

  std::string label(Sort s, Index i) const {
    return s == Sort::Algebra ? a.label(i) : v->module_label(i);
  }
};

Vec eval_tree(const MTree& t, const std::map<std::string, Index>& asg, const EvalCtx& ctx) {
  if (!t.var.empty()) return ctx.pow(t.sort, t.alpha).col(asg.at(t.var));
  const Vec u = eval_tree(t.kids[0], asg, ctx);
  const Vec w = eval_tree(t.kids[1], asg, ctx);
  Vec out = apply_bilinear(ctx.tensor(t.kids[0].sort, t.kids[1].sort), u, w);
  if (t.alpha > 0) out = ctx.pow(t.sort, t.alpha) * out;
  return out;
}

bool mentions_module(const IdentityExpr& e) {
  if (e.kind == Kind::Var && e.sort == Sort::Module) return true;
  for (const auto& c : e.children)
    if (mentions_module(c)) return true;
  return false;
}

}  // namespace

bool ParsedIdentity::uses_module() const { return mentions_module(lhs) || mentions_module(rhs); }

ParsedIdentity parse_identity(const std::string& text) {
  ParsedIdentity id = Parser(text).parse();
  sort_check(id);
  return id;
}

std::string to_string(const IdentityExpr& e) { return print_expr(e); }

std::string to_string(const ParsedIdentity& id) {
  std::string out;
  for (const auto& [sort, names] : id.decls) {
    out += (sort == Sort::Algebra) ? "alg" : "mod";
    for (const auto& n : names) out += " " + n;
    out += "; ";
  }
  return out + print_expr(id.lhs) + " = " + print_expr(id.rhs);
}

PolarizedIdentity polarize(const IdentityExpr& expr, const std::string& var) {
  PolarizedIdentity out;
  for (auto& comp : multilinearize(expand(expr), var)) {
    out.components.push_back(poly_to_expr(comp.poly));
    out.occurrence.push_back(std::move(comp.occurrence));
  }
  return out;
}

Vec eval_identity_expr(const IdentityExpr& e, const std::map<std::string, Vec>& assignment,
                       const HomAlgebra& a, const Bimodule* v) {
  const auto dim_of = [&](Sort s) {
    if (s == Sort::Module && !v) throw PreconditionFailed("module-required", "no module supplied");
    return s == Sort::Algebra ? a.dim() : v->mdim();
  };
  const auto twist = [&](Sort s, const Vec& x) {
    return s == Sort::Algebra ? a.twist(x) : v->twist_v(x);
  };
  const auto tensor = [&](Sort l, Sort r) -> const Tensor3& {
    if (l == Sort::Algebra && r == Sort::Algebra) return a.mul();
    if (l == Sort::Module && !v)
      throw PreconditionFailed("module-required", "no module supplied");
    if (!v) throw PreconditionFailed("module-required", "no module supplied");
    return l == Sort::Algebra ? v->rho_l() : v->rho_r();
  };
  switch (e.kind) {
    case Kind::Var: {
      auto it = assignment.find(e.var);
      if (it == assignment.end())
        throw PreconditionFailed("assignment", "no value for variable '" + e.var + "'");
      return it->second;
    }
    case Kind::Alpha:
      return twist(e.sort, eval_identity_expr(e.children.front(), assignment, a, v));
    case Kind::ScalarMul:
      return Vec(e.coeff * eval_identity_expr(e.children.front(), assignment, a, v));
    case Kind::Sum: {
      Vec out = Vec::Zero(dim_of(e.sort));
      for (const auto& c : e.children) out += eval_identity_expr(c, assignment, a, v);
      return out;
    }
    case Kind::Mul: {
      const Vec l = eval_identity_expr(e.children[0], assignment, a, v);
      const Vec r = eval_identity_expr(e.children[1], assignment, a, v);
      return apply_bilinear(tensor(e.children[0].sort, e.children[1].sort), l, r);
    }
    case Kind::Assoc: {
      const IdentityExpr& x = e.children[0];
      const IdentityExpr& y = e.children[1];
      const IdentityExpr& z = e.children[2];
      const Vec xv = eval_identity_expr(x, assignment, a, v);
      const Vec yv = eval_identity_expr(y, assignment, a, v);
      const Vec zv = eval_identity_expr(z, assignment, a, v);
      const Sort xy = combine(x.sort, y.sort);
      const Sort yz = combine(y.sort, z.sort);
      const Vec left = apply_bilinear(tensor(xy, z.sort), apply_bilinear(tensor(x.sort, y.sort), xv, yv),
                                      twist(z.sort, zv));
      const Vec right = apply_bilinear(tensor(x.sort, yz), twist(x.sort, xv),
                                       apply_bilinear(tensor(y.sort, z.sort), yv, zv));
      return left - right;
    }
  }
  throw Error("unreachable expression kind");
}

Report verify_identity(const ParsedIdentity& id, const HomAlgebra& a, const Bimodule* v,
                       const CheckOptions& opt) {
  if (id.uses_module() && !v)
    throw PreconditionFailed("module-required",
                             "the identity mentions module variables but no module was supplied");
  if (v && v->parent() != a)
    throw PreconditionFailed("parent-match", "the supplied module is not over the given algebra");

  Poly norm = expand(id.lhs);
  {
    Poly r = expand(id.rhs);
    for (auto& [c, t] : r) norm.emplace_back(-c, std::move(t));
  }

  Report report;
  WitnessSink sink(report, opt);
  for (const auto& comp : multilinearize(std::move(norm))) {
    if (sink.full()) break;
    const std::string name = to_string(poly_to_expr(comp.poly)) + " = 0";

    std::map<std::string, Sort> vars;
    unsigned maxp = 0;
    for (const auto& [c, t] : comp.poly) {
      collect_vars(t, vars);
      maxp = std::max(maxp, max_alpha(t));
    }
    EvalCtx ctx(a, v, maxp);

    std::vector<std::pair<std::string, Sort>> order(vars.begin(), vars.end());
    std::vector<Index> dims;
    for (const auto& [n, s] : order) dims.push_back(ctx.dim(s));
    if (std::find(dims.begin(), dims.end(), 0) != dims.end()) continue;  // vacuous

    std::vector<Index> tuple(order.size(), 0);
    while (true) {
      std::map<std::string, Index> asg;
      for (std::size_t i = 0; i < order.size(); ++i) asg[order[i].first] = tuple[i];

      Vec defect;
      bool started = false;
      for (const auto& [c, t] : comp.poly) {
        Vec term = eval_tree(t, asg, ctx);
        if (!started) {
          defect = Vec(c * term);
          started = true;
        } else {
          defect += c * term;
        }
      }
      if (started && !is_zero(defect)) {
        std::vector<std::string> where;
        for (std::size_t i = 0; i < order.size(); ++i)
          where.push_back(order[i].first + "=" + ctx.label(order[i].second, tuple[i]));
        if (!sink.add(name, std::move(where), std::move(defect))) break;
      }

      // odometer over the basis tuple, last variable fastest
      std::size_t pos = order.size();
      while (pos > 0 && tuple[pos - 1] + 1 == dims[pos - 1]) tuple[--pos] = 0;
      if (pos == 0) break;
      ++tuple[pos - 1];
    }
  }
  return report;
}

Report verify_identity(const std::string& text, const HomAlgebra& a, const Bimodule* v,
                       const CheckOptions& opt) {
  return verify_identity(parse_identity(text), a, v, opt);
}

}  // namespace homalg
