#include "synorder/logic.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "synorder/structured.hpp"

namespace synorder {

namespace {

Formula node(FormulaNode n) {
  return std::make_shared<const FormulaNode>(std::move(n));
}

using Kind = FormulaNode::Kind;

}  // namespace

Formula f_true() { return node({Kind::True}); }
Formula f_false() { return node({Kind::False}); }

Formula f_diff(std::string a, std::string b, UPSet set) {
  FormulaNode n{Kind::Diff};
  n.lhs = std::move(a);
  n.rhs = std::move(b);
  n.set = std::move(set);
  return node(std::move(n));
}

Formula f_eq(std::string a, std::string b) {
  FormulaNode n{Kind::Eq};
  n.lhs = std::move(a);
  n.rhs = std::move(b);
  return node(std::move(n));
}

Formula f_not(Formula f) {
  FormulaNode n{Kind::Not};
  n.kids = {std::move(f)};
  return node(std::move(n));
}

Formula f_and(Formula a, Formula b) {
  FormulaNode n{Kind::And};
  n.kids = {std::move(a), std::move(b)};
  return node(std::move(n));
}

Formula f_or(Formula a, Formula b) {
  FormulaNode n{Kind::Or};
  n.kids = {std::move(a), std::move(b)};
  return node(std::move(n));
}

Formula f_exists(std::string var, Formula f) {
  FormulaNode n{Kind::Exists};
  n.var = std::move(var);
  n.kids = {std::move(f)};
  return node(std::move(n));
}

Formula f_forall(std::string var, Formula f) {
  FormulaNode n{Kind::Forall};
  n.var = std::move(var);
  n.kids = {std::move(f)};
  return node(std::move(n));
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Token {
  enum Type { Ident, Zero, LParen, RParen, Dot, Minus, Greater, Equal,
              UpLiteral, End };
  Type type;
  std::string text;
  std::size_t pos;
};

bool is_keyword(const std::string& s) {
  return s == "EX" || s == "ALL" || s == "OR" || s == "AND" || s == "NOT" ||
         s == "IN" || s == "TRUE" || s == "FALSE";
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw Error(Errc::ParseError,
                what + " at offset " + std::to_string(i));
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (c == '(') { out.push_back({Token::LParen, "(", i++}); continue; }
    if (c == ')') { out.push_back({Token::RParen, ")", i++}); continue; }
    if (c == '.') { out.push_back({Token::Dot, ".", i++}); continue; }
    if (c == '-') { out.push_back({Token::Minus, "-", i++}); continue; }
    if (c == '>') { out.push_back({Token::Greater, ">", i++}); continue; }
    if (c == '=') { out.push_back({Token::Equal, "=", i++}); continue; }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      std::string num = text.substr(start, i - start);
      if (num != "0") fail("only the constant 0 may appear as a term");
      out.push_back({Token::Zero, num, start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      std::string word = text.substr(start, i - start);
      if (word == "UP" && i < text.size() && text[i] == '(') {
        std::size_t depth = 0, lit = i;
        do {
          if (text[lit] == '(') ++depth;
          else if (text[lit] == ')') --depth;
          ++lit;
          if (lit > text.size()) { i = start; fail("unterminated set literal"); }
        } while (depth > 0);
        out.push_back({Token::UpLiteral, text.substr(start, lit - start), start});
        i = lit;
        continue;
      }
      out.push_back({Token::Ident, word, start});
      continue;
    }
    fail(std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::End, "", text.size()});
  return out;
}

struct Parser {
  const std::vector<Token>& toks;
  const std::map<std::string, UPSet>& named;
  std::size_t i = 0;
  std::set<std::string> bound;

  const Token& peek() const { return toks[i]; }
  Token take() { return toks[i++]; }

  [[noreturn]] void fail(const std::string& what, const Token& t) {
    throw Error(Errc::ParseError,
                what + " at offset " + std::to_string(t.pos));
  }

  bool at_ident(const char* word) const {
    return peek().type == Token::Ident && peek().text == word;
  }

  Formula formula() {
    if (at_ident("EX") || at_ident("ALL")) return quantified();
    return disjunction();
  }

  Formula quantified() {
    Token q = take();
    Token v = take();
    if (v.type != Token::Ident || is_keyword(v.text))
      fail("expected a variable name", v);
    if (bound.count(v.text)) fail("variable '" + v.text + "' is already bound", v);
    Token dot = take();
    if (dot.type != Token::Dot) fail("expected '.'", dot);
    bound.insert(v.text);
    Formula body = formula();
    bound.erase(v.text);
    return q.text == "EX" ? f_exists(v.text, body) : f_forall(v.text, body);
  }

  Formula disjunction() {
    Formula l = conjunction();
    while (at_ident("OR")) {
      take();
      l = f_or(l, conjunction());
    }
    return l;
  }

  Formula conjunction() {
    Formula l = negation();
    while (at_ident("AND")) {
      take();
      l = f_and(l, negation());
    }
    return l;
  }

  Formula negation() {
    if (at_ident("NOT")) {
      take();
      return f_not(negation());
    }
    return primary();
  }

  Formula primary() {
    if (peek().type == Token::LParen) {
      take();
      Formula f = formula();
      Token r = take();
      if (r.type != Token::RParen) fail("expected ')'", r);
      return f;
    }
    if (at_ident("EX") || at_ident("ALL")) return quantified();
    if (at_ident("TRUE")) { take(); return f_true(); }
    if (at_ident("FALSE")) { take(); return f_false(); }
    return atom();
  }

  std::string term() {
    Token t = take();
    if (t.type == Token::Zero) return "0";
    if (t.type == Token::Ident && !is_keyword(t.text)) return t.text;
    fail("expected a variable or 0", t);
  }

  Formula atom() {
    Token start = peek();
    std::string lhs = term();
    Token op = take();
    if (op.type == Token::Equal) {
      if (lhs == "0") fail("equality takes variables, not 0", start);
      Token r = take();
      if (r.type != Token::Ident || is_keyword(r.text))
        fail("expected a variable name", r);
      return f_eq(lhs, r.text);
    }
    if (op.type != Token::Minus) fail("expected '-' or '='", op);
    std::string rhs = term();
    Token what = take();
    if (what.type == Token::Greater) {
      Token z = take();
      if (z.type != Token::Zero) fail("expected 0 after '>'", z);
      return f_diff(lhs, rhs, UPSet::positives());
    }
    if (what.type != Token::Ident || what.text != "IN")
      fail("expected 'IN'", what);
    Token set = take();
    if (set.type == Token::UpLiteral)
      return f_diff(lhs, rhs, UPSet::parse(set.text));
    if (set.type == Token::Ident && !is_keyword(set.text)) {
      auto it = named.find(set.text);
      if (it == named.end()) fail("unknown set name '" + set.text + "'", set);
      return f_diff(lhs, rhs, it->second);
    }
    fail("expected a set name or literal", set);
  }
};

}  // namespace

Formula parse_formula(const std::string& text,
                      const std::map<std::string, UPSet>& named_sets) {
  auto toks = lex(text);
  Parser p{toks, named_sets};
  Formula f = p.formula();
  if (p.peek().type != Token::End) p.fail("trailing input", p.peek());
  return f;
}

// ---------------------------------------------------------------------------
// printing

namespace {

bool is_atomic(const Formula& f) {
  switch (f->kind) {
    case Kind::True:
    case Kind::False:
    case Kind::Diff:
    case Kind::Eq:
      return true;
    default:
      return false;
  }
}

void print(const Formula& f, std::ostream& os) {
  auto wrap = [&](const Formula& k) {
    if (is_atomic(k)) {
      print(k, os);
    } else {
      os << "(";
      print(k, os);
      os << ")";
    }
  };
  switch (f->kind) {
    case Kind::True: os << "TRUE"; break;
    case Kind::False: os << "FALSE"; break;
    case Kind::Diff:
      os << f->lhs << " - " << f->rhs << " IN " << f->set.to_string();
      break;
    case Kind::Eq: os << f->lhs << " = " << f->rhs; break;
    case Kind::Not:
      os << "NOT ";
      wrap(f->kids[0]);
      break;
    case Kind::And:
      wrap(f->kids[0]);
      os << " AND ";
      wrap(f->kids[1]);
      break;
    case Kind::Or:
      wrap(f->kids[0]);
      os << " OR ";
      wrap(f->kids[1]);
      break;
    case Kind::Exists:
    case Kind::Forall:
      os << (f->kind == Kind::Exists ? "EX " : "ALL ") << f->var << " . ";
      print(f->kids[0], os);
      break;
  }
}

}  // namespace

std::string to_string(const Formula& f) {
  std::ostringstream os;
  print(f, os);
  return os.str();
}

// ---------------------------------------------------------------------------
// compilation

namespace {

void collect_free(const Formula& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (f->kind) {
    case Kind::Diff:
    case Kind::Eq:
      if (f->lhs != "0" && !bound.count(f->lhs)) out.insert(f->lhs);
      if (f->rhs != "0" && !bound.count(f->rhs)) out.insert(f->rhs);
      break;
    case Kind::Exists:
    case Kind::Forall: {
      bool added = bound.insert(f->var).second;
      collect_free(f->kids[0], bound, out);
      if (added) bound.erase(f->var);
      break;
    }
    default:
      for (const auto& k : f->kids) collect_free(k, bound, out);
  }
}

// A compiled subformula: an automaton over its sorted free variables, or a
// plain truth value when the subformula is closed.
struct Compiled {
  std::vector<std::string> vars;
  SyncAutomaton machine{1};
  bool closed = false;
  bool value = false;
};

Compiled closed_value(bool v) {
  Compiled c;
  c.closed = true;
  c.value = v;
  return c;
}

SyncAutomaton universal(int arity) { return complement(SyncAutomaton(arity)); }

// {(u,v) : u - v in set, u >= v} or the mirror image
SyncAutomaton difference_automaton(const UPSet& set, bool excess_left) {
  StructuredBinary s;
  s.loop_target = 0;
  UPSet tail = subtract(set, UPSet::finite({0}));
  s.left = {excess_left ? tail : UPSet()};
  s.right = {excess_left ? UPSet() : tail};
  s.equal_accepted = {set.contains(0)};
  return to_automaton(s);
}

SyncAutomaton diagonal_automaton() {
  StructuredBinary s;
  s.loop_target = 0;
  s.left = {UPSet()};
  s.right = {UPSet()};
  s.equal_accepted = {true};
  return to_automaton(s);
}

// Cylindrify `c` until its variable list equals `target` (a superset).
void align(Compiled& c, const std::vector<std::string>& target) {
  for (std::size_t k = 0; k < target.size(); ++k) {
    if (k < c.vars.size() && c.vars[k] == target[k]) continue;
    c.machine = cylindrify(c.machine, static_cast<int>(k) + 1);
    c.vars.insert(c.vars.begin() + static_cast<long>(k), target[k]);
  }
}

Compiled compile(const Formula& f);

Compiled compile_diff(const Formula& f) {
  const std::string& a = f->lhs;
  const std::string& b = f->rhs;
  const UPSet& set = f->set;
  if (a == "0" && b == "0") return closed_value(set.contains(0));
  Compiled c;
  if (a == b) {  // x - x is zero
    c.vars = {a};
    c.machine = set.contains(0) ? universal(1) : SyncAutomaton(1);
    return c;
  }
  if (b == "0") {  // membership of a in the set
    c.vars = {a};
    c.machine = from_upset(set);
    return c;
  }
  if (a == "0") {  // 0 - b is defined only when b is 0
    c.vars = {b};
    c.machine = set.contains(0) ? from_upset(UPSet::finite({0}))
                                : SyncAutomaton(1);
    return c;
  }
  bool a_first = a < b;
  c.vars = a_first ? std::vector<std::string>{a, b}
                   : std::vector<std::string>{b, a};
  c.machine = difference_automaton(set, a_first);
  return c;
}

Compiled compile_binary(const Formula& f, BoolOp op) {
  Compiled l = compile(f->kids[0]);
  Compiled r = compile(f->kids[1]);
  bool drop_l = op == BoolOp::Intersection ? (l.closed && l.value)
                                           : (l.closed && !l.value);
  bool drop_r = op == BoolOp::Intersection ? (r.closed && r.value)
                                           : (r.closed && !r.value);
  if (l.closed && r.closed)
    return closed_value(op == BoolOp::Intersection ? (l.value && r.value)
                                                   : (l.value || r.value));
  if (l.closed) {
    if (drop_l) return r;
    r.machine = op == BoolOp::Intersection
                    ? SyncAutomaton(r.machine.arity())
                    : universal(r.machine.arity());
    return r;
  }
  if (r.closed) {
    if (drop_r) return l;
    l.machine = op == BoolOp::Intersection
                    ? SyncAutomaton(l.machine.arity())
                    : universal(l.machine.arity());
    return l;
  }
  std::vector<std::string> merged;
  std::set_union(l.vars.begin(), l.vars.end(), r.vars.begin(), r.vars.end(),
                 std::back_inserter(merged));
  if (merged.size() > static_cast<std::size_t>(kMaxArity))
    throw Error(Errc::ArityExceeded,
                "formula uses " + std::to_string(merged.size()) +
                    " free variables; the bound is " + std::to_string(kMaxArity));
  align(l, merged);
  align(r, merged);
  Compiled out;
  out.vars = merged;
  out.machine = product(l.machine, r.machine, op);
  return out;
}

Compiled compile(const Formula& f) {
  switch (f->kind) {
    case Kind::True: return closed_value(true);
    case Kind::False: return closed_value(false);
    case Kind::Diff: return compile_diff(f);
    case Kind::Eq: {
      Compiled c;
      if (f->lhs == f->rhs) {
        c.vars = {f->lhs};
        c.machine = universal(1);
        return c;
      }
      bool l_first = f->lhs < f->rhs;
      c.vars = l_first ? std::vector<std::string>{f->lhs, f->rhs}
                       : std::vector<std::string>{f->rhs, f->lhs};
      c.machine = diagonal_automaton();
      return c;
    }
    case Kind::Not: {
      Compiled c = compile(f->kids[0]);
      if (c.closed) return closed_value(!c.value);
      c.machine = complement(c.machine);
      return c;
    }
    case Kind::And: return compile_binary(f, BoolOp::Intersection);
    case Kind::Or: return compile_binary(f, BoolOp::Union);
    case Kind::Exists: {
      Compiled c = compile(f->kids[0]);
      if (c.closed) return c;
      auto it = std::find(c.vars.begin(), c.vars.end(), f->var);
      if (it == c.vars.end()) return c;
      if (c.vars.size() == 1) return closed_value(!is_empty(c.machine));
      int pos = static_cast<int>(it - c.vars.begin()) + 1;
      c.machine = project(c.machine, pos);
      c.vars.erase(it);
      return c;
    }
    case Kind::Forall:
      return compile(f_not(f_exists(f->var, f_not(f->kids[0]))));
  }
  throw Error(Errc::BadParameters, "unknown formula node");
}

}  // namespace

std::vector<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound, free;
  collect_free(f, bound, free);
  return {free.begin(), free.end()};
}

SyncAutomaton compile_formula(const Formula& f) {
  if (free_variables(f).size() > static_cast<std::size_t>(kMaxArity))
    throw Error(Errc::ArityExceeded, "too many free variables");
  Compiled c = compile(f);
  if (c.closed) return c.value ? universal(1) : SyncAutomaton(1);
  return c.machine;
}

// ---------------------------------------------------------------------------
// automaton to formula

namespace {

std::string coord_name(int i) { return "x" + std::to_string(i + 1); }

Formula and_all(const std::vector<Formula>& fs) {
  Formula out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = f_and(out, fs[i]);
  return out;
}

Formula or_all(const std::vector<Formula>& fs) {
  Formula out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = f_or(out, fs[i]);
  return out;
}

// One clause per support shape and anchor sequence: coordinates ending at
// the same segment are tied together, the representative of each segment is
// a partial sum, and consecutive partial sums differ by a path length.
struct ClauseBuilder {
  const SyncAutomaton& a;
  std::vector<Formula> clauses;

  void shapes(std::vector<Letter>& shape) {
    if (!shape.empty()) anchors(shape);
    for (Letter e = 1; e <= full_support(a.arity()); ++e) {
      // supports must strictly shrink along the shape
      if (!shape.empty() && (e == shape.back() || (e & ~shape.back()) != 0))
        continue;
      shape.push_back(e);
      shapes(shape);
      shape.pop_back();
    }
  }

  void anchors(const std::vector<Letter>& shape) {
    std::vector<UPSet> lengths(shape.size());
    walk_anchor(shape, 0, a.initial(), lengths);
  }

  void walk_anchor(const std::vector<Letter>& shape, std::size_t k, int from,
                   std::vector<UPSet>& lengths) {
    if (k == shape.size()) {
      if (a.is_final(from)) emit(shape, lengths);
      return;
    }
    for (int q = 0; q < a.state_count(); ++q) {
      UPSet len = subtract(lengths_reaching(a, from, shape[k], q),
                           UPSet::finite({0}));
      if (len.empty()) continue;
      lengths[k] = len;
      walk_anchor(shape, k + 1, q, lengths);
    }
  }

  void emit(const std::vector<Letter>& shape, const std::vector<UPSet>& lengths) {
    int n = a.arity();
    std::vector<Formula> parts;
    std::string prev = "0";
    for (std::size_t k = 0; k < shape.size(); ++k) {
      Letter ending = k + 1 < shape.size() ? shape[k] & ~shape[k + 1] : shape[k];
      std::vector<int> coords;
      for (int i = 0; i < n; ++i)
        if (ending & (1u << i)) coords.push_back(i);
      for (std::size_t j = 1; j < coords.size(); ++j)
        parts.push_back(f_eq(coord_name(coords[0]), coord_name(coords[j])));
      std::string rep = coord_name(coords.front());
      parts.push_back(f_diff(rep, prev, lengths[k]));
      prev = rep;
    }
    for (int i = 0; i < n; ++i)
      if ((shape.front() & (1u << i)) == 0)
        parts.push_back(f_diff(coord_name(i), "0", UPSet::finite({0})));
    clauses.push_back(and_all(parts));
  }
};

}  // namespace

Formula automaton_to_formula(const SyncAutomaton& a) {
  const int n = a.arity();
  ClauseBuilder builder{a, {}};
  if (a.is_final(a.initial())) {
    std::vector<Formula> zeros;
    for (int i = 0; i < n; ++i)
      zeros.push_back(f_diff(coord_name(i), "0", UPSet::finite({0})));
    builder.clauses.push_back(and_all(zeros));
  }
  // enumerate strictly decreasing support sequences
  std::vector<Letter> shape;
  builder.shapes(shape);
  // a guard naming every coordinate keeps the variable set intact even for
  // the empty disjunction
  std::vector<Formula> guard;
  for (int i = 0; i < n; ++i)
    guard.push_back(f_diff(coord_name(i), "0", UPSet::naturals()));
  Formula body =
      builder.clauses.empty() ? f_false() : or_all(builder.clauses);
  return f_and(and_all(guard), body);
}

}  // namespace synorder
