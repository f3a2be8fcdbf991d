#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "synorder/algebra.hpp"
#include "synorder/structured.hpp"
#include "synorder/sync_automaton.hpp"

namespace synorder {

enum class TermKind { Omega, OmegaStar, Finite };

struct Term {
  TermKind kind;
  std::uint64_t count = 0;  // used by Finite
  bool operator==(const Term&) const = default;
};

// Finite sum of the order types omega, omega* and n. The empty sum is the
// type of the empty order.
struct PoorSum {
  std::vector<Term> terms;
  bool operator==(const PoorSum&) const = default;
};

Term omega();
Term omega_star();
Term fin(std::uint64_t n);

// Rewrites to the unique reduced form: finite terms merge, a finite term
// vanishes into a following omega, and into a preceding omega*.
PoorSum reduce(const PoorSum& s);

// Grammar: sum := "0" | term { " + " term }, term := "w" | "w*" | <nat>
std::string to_string(const PoorSum& s);
PoorSum parse_poor_sum(const std::string& text);

// The type of the inverse order: terms reversed, omega and omega* swapped.
PoorSum reversed_starred(const PoorSum& s);

// One periodic congruence class of a normalized linear order, read as a
// chain. Queries address its tail {residue + k*period : k >= 2}; the first
// two elements are handled as individual points by the assembly.
struct ChainHandle {
  std::uint64_t residue;
  Direction direction;
};

enum class TailOrder { Before, After, Interleaved };
enum class PointPlace { Before, After, Inside };

// Relates the tails of two chains; requires a.residue < b.residue.
// Interleaved only occurs for equal directions.
TailOrder compare_tails(const NormalForm& n, const ChainHandle& a,
                        const ChainHandle& b);

// Places a support element relative to the tail of one chain.
PointPlace locate_point(const NormalForm& n, std::uint64_t point,
                        const ChainHandle& chain);

struct OrderAnalysis {
  NormalForm normal;
  std::vector<ChainHandle> chains;
  // interleaving classes of chain indices, in their final left-to-right order
  std::vector<std::vector<std::size_t>> classes;
  std::vector<Direction> class_direction;
  // points.size() == classes.size() + 1; slot k precedes class k
  std::vector<std::vector<std::uint64_t>> points;
  // points swallowed by the class they fall inside of
  std::vector<std::pair<std::uint64_t, std::size_t>> absorbed;
  PoorSum type;
};

// Full assembly for a linear strict order. Throws NotAnOrder, NotLinear or
// InconsistentOrder.
OrderAnalysis analyze_order(const SyncAutomaton& a);

PoorSum order_type(const SyncAutomaton& a);

bool equivalent_orders(const SyncAutomaton& a, const SyncAutomaton& b);

}  // namespace synorder
