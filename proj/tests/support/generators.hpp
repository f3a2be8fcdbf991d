#pragma once

#include <random>
#include <vector>

#include "synorder/algebra.hpp"
#include "synorder/order_type.hpp"
#include "synorder/structured.hpp"
#include "synorder/sync_automaton.hpp"

namespace synorder::testing {

using Rng = std::mt19937_64;

inline std::uint64_t pick(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

inline bool flip(Rng& rng) { return pick(rng, 0, 1) == 1; }

inline UPSet random_upset(Rng& rng) {
  std::uint64_t t = pick(rng, 0, 2);
  std::uint64_t p = pick(rng, 1, 3);
  std::vector<bool> head(t), res(p);
  for (std::uint64_t i = 0; i < t; ++i) head[i] = flip(rng);
  for (std::uint64_t i = 0; i < p; ++i) res[i] = flip(rng);
  return UPSet::from_masks(t, std::move(head), std::move(res));
}

inline UPSet random_positive_upset(Rng& rng) {
  return subtract(random_upset(rng), UPSet::finite({0}));
}

inline StructuredBinary random_structured(Rng& rng) {
  StructuredBinary s;
  int n = static_cast<int>(pick(rng, 1, 4));
  s.loop_target = static_cast<int>(pick(rng, 0, n - 1));
  for (int i = 0; i < n; ++i) {
    s.left.push_back(random_positive_upset(rng));
    s.right.push_back(random_positive_upset(rng));
    s.equal_accepted.push_back(flip(rng));
  }
  return s;
}

// Deterministic binary automaton generated in the natural diagonal shape:
// a diagonal lasso with optional exhausted-coordinate tails hanging off it.
inline SyncAutomaton random_binary_automaton(Rng& rng, int max_states = 8) {
  SyncAutomaton a(2);
  std::vector<int> diag{0};
  a.set_final(0, pick(rng, 0, 5) == 0);
  int budget = max_states - 1;
  int diag_len = static_cast<int>(pick(rng, 1, 3));
  for (int i = 1; i < diag_len && budget > 0; ++i, --budget)
    diag.push_back(a.add_state(pick(rng, 0, 5) == 0));
  for (std::size_t i = 0; i + 1 < diag.size(); ++i)
    a.add_transition(diag[i], 3, diag[i + 1]);
  if (flip(rng))
    a.add_transition(diag.back(), 3,
                     diag[pick(rng, 0, diag.size() - 1)]);
  for (int d : diag) {
    for (Letter side : {1u, 2u}) {
      if (budget <= 0 || !flip(rng)) continue;
      int len = static_cast<int>(pick(rng, 1, std::min(budget, 2)));
      int prev = d;
      std::vector<int> tail;
      for (int i = 0; i < len; ++i, --budget) {
        int s = a.add_state(flip(rng));
        tail.push_back(s);
        a.add_transition(prev, side, s);
        prev = s;
      }
      if (flip(rng))
        a.add_transition(prev, side, tail[pick(rng, 0, tail.size() - 1)]);
    }
  }
  return a;
}

inline PoorSum random_poor_sum(Rng& rng, std::size_t max_len = 8,
                               std::uint64_t max_fin = 9) {
  PoorSum s;
  std::size_t len = pick(rng, 0, max_len);
  for (std::size_t i = 0; i < len; ++i) {
    switch (pick(rng, 0, 2)) {
      case 0: s.terms.push_back(omega()); break;
      case 1: s.terms.push_back(omega_star()); break;
      default: s.terms.push_back(fin(pick(rng, 1, max_fin))); break;
    }
  }
  return s;
}

struct LinearOrderCase {
  SyncAutomaton automaton;
  PoorSum expected;  // reduced
};

// Builds a linear order whose type is the given sum: finite terms draw
// their elements from the region below the infinite terms' residue
// classes, and every earlier allocation sits below every later one. The
// parts are glued over the allocated element sets directly, so singleton
// terms survive even though their standalone order is empty.
inline LinearOrderCase build_poor_order(const std::vector<Term>& terms,
                                        bool complete_support = false) {
  std::size_t infinite = 0;
  std::uint64_t fin_total = 0;
  for (const Term& t : terms) {
    if (t.kind == TermKind::Finite)
      fin_total += t.count;
    else
      ++infinite;
  }
  std::uint64_t modulus = std::max<std::uint64_t>(infinite, 1);
  std::uint64_t start = fin_total;  // finite terms live below this line
  std::vector<UPSet> allocated;
  std::vector<SyncAutomaton> parts;
  std::uint64_t fin_used = 0, inf_used = 0;
  for (const Term& t : terms) {
    if (t.kind == TermKind::Finite) {
      std::vector<std::uint64_t> elems;
      for (std::uint64_t i = 0; i < t.count; ++i) elems.push_back(fin_used++);
      allocated.push_back(UPSet::finite(elems));
      parts.push_back(
          natural_order_on(allocated.back(), Direction::Ascending));
    } else {
      allocated.push_back(UPSet::residue_class(start, modulus, inf_used++));
      parts.push_back(natural_order_on(allocated.back(),
                                       t.kind == TermKind::Omega
                                           ? Direction::Ascending
                                           : Direction::Descending));
    }
  }
  SyncAutomaton acc(2);  // empty relation
  for (const SyncAutomaton& p : parts) acc = product(acc, p, BoolOp::Union);
  for (std::size_t i = 0; i < allocated.size(); ++i)
    for (std::size_t j = i + 1; j < allocated.size(); ++j)
      acc = product(acc, cross_product(allocated[i], allocated[j]),
                    BoolOp::Union);
  if (!complete_support && infinite == modulus && infinite > 0) {
    // shift everything into the even numbers to free up a class
    acc = scale(acc, 2, 0);
  }
  return {acc, reduce(PoorSum{terms})};
}

inline LinearOrderCase random_linear_order(Rng& rng) {
  std::size_t len = pick(rng, 1, 3);
  std::vector<Term> terms;
  for (std::size_t i = 0; i < len; ++i) {
    switch (pick(rng, 0, 2)) {
      case 0: terms.push_back(omega()); break;
      case 1: terms.push_back(omega_star()); break;
      default: terms.push_back(fin(pick(rng, 1, 3))); break;
    }
  }
  return build_poor_order(terms);
}

// A complete strict order with bounded antichains: parallel copies of the
// natural or reversed order, one per congruence class, glued as a union.
inline SyncAutomaton random_parallel_chains(Rng& rng) {
  std::uint64_t m = pick(rng, 1, 4);
  SyncAutomaton acc(2);
  for (std::uint64_t r = 0; r < m; ++r) {
    SyncAutomaton part = natural_order_on(
        UPSet::residue_class(0, m, r),
        flip(rng) ? Direction::Ascending : Direction::Descending);
    acc = r == 0 ? part : product(acc, part, BoolOp::Union);
  }
  return acc;
}

}  // namespace synorder::testing
