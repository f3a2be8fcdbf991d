#pragma once

#include <cstdint>

#include "synorder/sync_automaton.hpp"
#include "synorder/upset.hpp"

namespace synorder {

enum class Direction { Ascending, Descending };

// {(y,x) : (x,y) in R}
SyncAutomaton inverse(const SyncAutomaton& a);

// {x : some y with (x,y) or (y,x) in R}
UPSet support(const SyncAutomaton& a);

// R, then S, with everything in supp(R) below everything in supp(S).
// Requires disjoint supports.
SyncAutomaton sum_disjoint(const SyncAutomaton& a, const SyncAutomaton& b);

// {(m*x + r, m*y + r) : (x,y) in R}; requires m > r.
SyncAutomaton scale(const SyncAutomaton& a, std::uint64_t m, std::uint64_t r);

// The natural order of the naturals restricted to E, or its inverse.
SyncAutomaton natural_order_on(const UPSet& set, Direction dir);

// Appends the natural (or reversed) order on the complement of the support,
// which must be infinite, making the result complete.
SyncAutomaton complete_with(const SyncAutomaton& a, Direction dir);

// Squeezes out the finitely many elements missing from the support; the
// result is complete and order-isomorphic to the input.
SyncAutomaton collapse_finite_complement(const SyncAutomaton& a);

// {(x,z) : some y with (x,y) in R and (y,z) in S}
SyncAutomaton compose(const SyncAutomaton& a, const SyncAutomaton& b);

// {(k,k) : k in the naturals}
SyncAutomaton equality_relation();

// supp_a x supp_b as a binary relation
SyncAutomaton cross_product(const UPSet& a, const UPSet& b);

}  // namespace synorder
