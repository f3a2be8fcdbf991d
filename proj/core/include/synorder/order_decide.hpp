#pragma once

#include <cstdint>
#include <optional>

#include "synorder/algebra.hpp"
#include "synorder/sync_automaton.hpp"

namespace synorder {

// Transitive and without loops: R;R inside R and R disjoint from its inverse.
bool is_strict_order(const SyncAutomaton& a);

// Every two distinct support elements are comparable. Throws NotAnOrder.
bool is_linear(const SyncAutomaton& a);

// The support is all of the naturals.
bool is_complete(const SyncAutomaton& a);

struct ChainWitness {
  std::uint64_t start;
  std::uint64_t step;
};

struct ChainVerdict {
  bool exists = false;
  std::optional<ChainWitness> witness;
};

// Ascending: a chain start < start+step < ... with each element below the
// next; descending: each element above the next. Throws NotAnOrder.
ChainVerdict has_infinite_chain(const SyncAutomaton& a, Direction dir);

// Infinitely many pairwise incomparable support elements. Throws NotAnOrder.
bool has_infinite_antichain(const SyncAutomaton& a);

// When no infinite antichain exists, every antichain has at most
// 2*(t+p) + 2 elements for the normal form (t, p) of the relation.
// Throws InfiniteAntichain otherwise.
std::uint64_t antichain_bound(const SyncAutomaton& a);

enum class Side { Max, Min };

struct ExtremalVerdict {
  bool exists = false;
  std::optional<std::uint64_t> witness;  // the least qualifying element
};

ExtremalVerdict extremal_element(const SyncAutomaton& a, Side side);

}  // namespace synorder
