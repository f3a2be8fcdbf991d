#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "synorder/sync_automaton.hpp"
#include "synorder/upset.hpp"

namespace synorder {

// Formulas over atoms "a - b IN L" with L an ultimately periodic set, plus
// variable equality. The difference atom holds when a >= b and a - b is in
// L; it is false when a < b. The name "0" denotes the zero constant.
struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
  enum class Kind { True, False, Diff, Eq, Not, And, Or, Exists, Forall };
  Kind kind;
  std::string lhs, rhs;  // Diff and Eq operands; "0" is the zero constant
  UPSet set;             // Diff
  std::string var;       // Exists and Forall
  std::vector<Formula> kids;
};

Formula f_true();
Formula f_false();
Formula f_diff(std::string a, std::string b, UPSet set);
Formula f_eq(std::string a, std::string b);
Formula f_not(Formula f);
Formula f_and(Formula a, Formula b);
Formula f_or(Formula a, Formula b);
Formula f_exists(std::string var, Formula f);
Formula f_forall(std::string var, Formula f);

// Grammar:
//   f    := "EX" var "." f | "ALL" var "." f | f "OR" f | f "AND" f
//         | "NOT" f | "(" f ")" | atom
//   atom := term "-" term "IN" (name | UP-literal) | term "-" term "> 0"
//         | var "=" var | "TRUE" | "FALSE"
//   term := var | "0"
// NOT binds tighter than AND, AND tighter than OR; quantifiers extend
// right. Names resolve through `named_sets`.
Formula parse_formula(const std::string& text,
                      const std::map<std::string, UPSet>& named_sets = {});

// Prints in the grammar above; parses back to the same tree shape.
std::string to_string(const Formula& f);

// Free variables in their coordinate order (lexicographic).
std::vector<std::string> free_variables(const Formula& f);

// Automaton over the free variables accepting exactly the satisfying
// assignments. A closed formula compiles to a unary automaton accepting
// everything or nothing. Throws ArityExceeded past kMaxArity variables.
SyncAutomaton compile_formula(const Formula& f);

// Defining formula over variables x1..xn obtained from the path shapes of
// the automaton: a disjunction over descending support sequences and anchor
// states, each clause tying coordinates that end together and constraining
// consecutive partial sums by the path-length sets between anchors.
Formula automaton_to_formula(const SyncAutomaton& a);

}  // namespace synorder
