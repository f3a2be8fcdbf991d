#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "synorder/algebra.hpp"
#include "synorder/sync_automaton.hpp"

namespace synorder {

// Brute-force semantics on finite prefixes, computed by running the raw
// automaton only. Independent of the structured forms and the automaton
// algebra it is used to check.
class PairTable {
 public:
  PairTable(std::uint64_t max, std::vector<bool> bits)
      : max_(max), bits_(std::move(bits)) {}

  std::uint64_t max() const { return max_; }
  bool at(std::uint64_t k, std::uint64_t l) const {
    return bits_[k * (max_ + 1) + l];
  }

 private:
  std::uint64_t max_;
  std::vector<bool> bits_;
};

// Membership of every pair with both coordinates at most `max`.
PairTable pair_table(const SyncAutomaton& a, std::uint64_t max);

std::vector<std::pair<std::uint64_t, std::uint64_t>> enumerate_pairs(
    const SyncAutomaton& a, std::uint64_t max);

// Exact support membership: a witness partner, when one exists, needs at
// most state_count() extra steps past x on the exhausted-coordinate walk.
bool support_contains(const SyncAutomaton& a, std::uint64_t x);

// Vertices on the longest path of the relation restricted to {0..max};
// 1 when the restricted support is nonempty but edgeless, 0 when empty.
// Throws NotAnOrder when the prefix violates the order axioms.
std::uint64_t longest_chain_prefix(const SyncAutomaton& a, std::uint64_t max);

// Longest chain that also increases as naturals: ascending follows edges
// k -> l with k < l and k below l, descending k < l with l below k.
std::uint64_t longest_directed_chain_prefix(const SyncAutomaton& a,
                                            std::uint64_t max, Direction dir);

// Exact maximum antichain on the prefix via a minimum chain cover
// (vertex count minus a maximum bipartite matching).
std::uint64_t max_antichain_prefix(const SyncAutomaton& a, std::uint64_t max);

struct Divergence {
  std::string check;
  std::string input;
  std::string expected;
  std::string got;
};

// Recomputes the order and linearity verdicts on the prefix and lists every
// disagreement with the decision procedures. A prefix can only refute a
// positive verdict, so a negative verdict with a clean prefix is not a
// divergence.
std::vector<Divergence> verify_against_brute_force(const SyncAutomaton& a,
                                                   std::uint64_t max);

std::string divergences_to_json(const std::vector<Divergence>& divs);

}  // namespace synorder
