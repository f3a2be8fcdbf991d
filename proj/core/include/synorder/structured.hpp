#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "synorder/sync_automaton.hpp"
#include "synorder/upset.hpp"

namespace synorder {

// Diagonal-lasso view of a binary relation. The (1,1)-run from the initial
// state is a lasso over diag states 0..n-1 looping back to loop_target; the
// pairs hanging off diag state i are stored as distance sets: right[i] holds
// the d > 0 with (k, k+d) in R for k in class i, left[i] the d > 0 with
// (k+d, k) in R, and equal_accepted[i] whether (k, k) is in R.
struct StructuredBinary {
  int loop_target = 0;
  std::vector<UPSet> left;
  std::vector<UPSet> right;
  std::vector<bool> equal_accepted;

  int diag_states() const { return static_cast<int>(left.size()); }

  int index_of(std::uint64_t k) const {
    auto n = static_cast<std::uint64_t>(diag_states());
    auto tau = static_cast<std::uint64_t>(loop_target);
    if (k < n) return static_cast<int>(k);
    return static_cast<int>(tau + (k - tau) % (n - tau));
  }

  bool member(std::uint64_t k, std::uint64_t l) const {
    if (k == l) return equal_accepted[index_of(k)];
    if (k < l) return right[index_of(k)].contains(l - k);
    return left[index_of(l)].contains(k - l);
  }
};

// StructuredBinary whose shape is aligned on one shared period:
//   - the diagonal lasso has transient t and period p with n = t + p,
//   - p exceeds t and the transient of every distance set,
//   - the period of every distance set divides p,
//   - each periodic class lies entirely inside or outside the support.
struct NormalForm {
  StructuredBinary core;
  int transient = 0;
  int period = 1;
};

StructuredBinary to_structured(const SyncAutomaton& a);  // arity 2
SyncAutomaton to_automaton(const StructuredBinary& s);
NormalForm normalize(const StructuredBinary& s);

std::string dump(const NormalForm& n);

}  // namespace synorder
