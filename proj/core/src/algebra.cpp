#include "synorder/algebra.hpp"

#include <algorithm>

#include "synorder/structured.hpp"

namespace synorder {

namespace {

void require_binary(const SyncAutomaton& a, const char* what) {
  if (a.arity() != 2)
    throw Error(Errc::ArityMismatch, std::string(what) + " needs a binary relation");
}

Letter swap_pair(Letter e) {
  Letter b1 = e & 1, b2 = (e >> 1) & 1;
  return (b1 << 1) | b2;
}

// {(u,v) : u - v in dist, u >= v} when excess is on the left coordinate,
// the mirror image otherwise.
SyncAutomaton difference_relation(const UPSet& dist, bool excess_left) {
  StructuredBinary s;
  s.loop_target = 0;
  UPSet tail = subtract(dist, UPSet::finite({0}));
  s.left = {excess_left ? tail : UPSet()};
  s.right = {excess_left ? UPSet() : tail};
  s.equal_accepted = {dist.contains(0)};
  return to_automaton(s);
}

}  // namespace

SyncAutomaton inverse(const SyncAutomaton& a) {
  require_binary(a, "inverse");
  SyncAutomaton out(2);
  out.set_final(0, false);
  for (int q = 1; q < a.state_count(); ++q) out.add_state(false);
  for (int q = 0; q < a.state_count(); ++q) out.set_final(q, a.is_final(q));
  out.set_initial(a.initial());
  for (int q = 0; q < a.state_count(); ++q)
    for (auto [e, to] : a.transitions_from(q))
      out.add_transition(q, swap_pair(e), to);
  return canonicalized(out);
}

UPSet support(const SyncAutomaton& a) {
  require_binary(a, "support");
  return to_upset(product(project(a, 2), project(a, 1), BoolOp::Union));
}

SyncAutomaton equality_relation() {
  StructuredBinary s;
  s.loop_target = 0;
  s.left = {UPSet()};
  s.right = {UPSet()};
  s.equal_accepted = {true};
  return to_automaton(s);
}

SyncAutomaton cross_product(const UPSet& a, const UPSet& b) {
  return product(cylindrify(from_upset(a), 2), cylindrify(from_upset(b), 1),
                 BoolOp::Intersection);
}

SyncAutomaton sum_disjoint(const SyncAutomaton& a, const SyncAutomaton& b) {
  require_binary(a, "sum");
  require_binary(b, "sum");
  UPSet sa = support(a), sb = support(b);
  if (!intersect(sa, sb).empty())
    throw Error(Errc::OverlappingSupports, "summands must have disjoint supports");
  return product(product(a, b, BoolOp::Union), cross_product(sa, sb),
                 BoolOp::Union);
}

SyncAutomaton scale(const SyncAutomaton& a, std::uint64_t m, std::uint64_t r) {
  if (m == 0 || r >= m)
    throw Error(Errc::BadParameters, "scaling needs m > r >= 0");
  SyncAutomaton out(a.arity());
  out.set_final(0, false);
  for (int q = 1; q < a.state_count(); ++q) out.add_state(false);
  for (int q = 0; q < a.state_count(); ++q) out.set_final(q, a.is_final(q));
  // every step becomes m steps on the same letter
  for (int q = 0; q < a.state_count(); ++q)
    for (auto [e, to] : a.transitions_from(q)) {
      int cur = q;
      for (std::uint64_t j = 1; j < m; ++j) {
        int mid = out.add_state(false);
        out.add_transition(cur, e, mid);
        cur = mid;
      }
      out.add_transition(cur, e, to);
    }
  // shifting all coordinates by r prepends r full-support letters
  int entry = a.initial();
  for (std::uint64_t j = 0; j < r; ++j) {
    int pre = out.add_state(false);
    out.add_transition(pre, full_support(a.arity()), entry);
    entry = pre;
  }
  out.set_initial(entry);
  return canonicalized(out);
}

SyncAutomaton natural_order_on(const UPSet& set, Direction dir) {
  StructuredBinary s;
  std::uint64_t n = set.transient() + set.period();
  s.loop_target = static_cast<int>(set.transient());
  s.left.resize(n);
  s.right.resize(n);
  s.equal_accepted.assign(n, false);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!set.contains(i)) continue;
    UPSet ahead = subtract(shift_down(set, i), UPSet::finite({0}));
    if (dir == Direction::Ascending)
      s.right[i] = ahead;
    else
      s.left[i] = ahead;
  }
  return to_automaton(s);
}

SyncAutomaton complete_with(const SyncAutomaton& a, Direction dir) {
  require_binary(a, "completion");
  UPSet missing = complement(support(a));
  if (missing.is_finite())
    throw Error(Errc::ComplementNotInfinite,
                "the support complement is finite");
  return sum_disjoint(a, natural_order_on(missing, dir));
}

SyncAutomaton compose(const SyncAutomaton& a, const SyncAutomaton& b) {
  require_binary(a, "composition");
  require_binary(b, "composition");
  return project(product(cylindrify(a, 3), cylindrify(b, 1), BoolOp::Intersection), 2);
}

SyncAutomaton collapse_finite_complement(const SyncAutomaton& a) {
  require_binary(a, "collapse");
  UPSet missing = complement(support(a));
  if (!missing.is_finite())
    throw Error(Errc::ComplementNotFinite, "the support complement is infinite");
  SyncAutomaton cur = a;
  auto gaps = classify(missing).elements;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    missing = complement(support(cur));
    std::uint64_t gap = *classify(missing).min;
    // the graph of k -> k for k < gap and k -> k-1 for k > gap
    SyncAutomaton keep = product(equality_relation(),
                                 cylindrify(from_upset(UPSet::below(gap)), 2),
                                 BoolOp::Intersection);
    SyncAutomaton shift =
        product(difference_relation(UPSet::finite({1}), true),
                cylindrify(from_upset(UPSet::residue_class(gap, 1, 0)), 1),
                BoolOp::Intersection);
    SyncAutomaton graph = product(keep, shift, BoolOp::Union);
    cur = compose(compose(inverse(graph), cur), graph);
  }
  return cur;
}

}  // namespace synorder
