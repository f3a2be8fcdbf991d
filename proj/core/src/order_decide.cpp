#include "synorder/order_decide.hpp"

#include "synorder/structured.hpp"

namespace synorder {

namespace {

void require_order(const SyncAutomaton& a) {
  if (!is_strict_order(a))
    throw Error(Errc::NotAnOrder, "the relation is not a strict order");
}

}  // namespace

bool is_strict_order(const SyncAutomaton& a) {
  if (a.arity() != 2)
    throw Error(Errc::ArityMismatch, "order test needs a binary relation");
  if (!includes(a, compose(a, a))) return false;
  return is_empty(product(a, inverse(a), BoolOp::Intersection));
}

bool is_linear(const SyncAutomaton& a) {
  require_order(a);
  UPSet supp = support(a);
  SyncAutomaton required =
      product(cross_product(supp, supp), complement(equality_relation()),
              BoolOp::Intersection);
  return includes(product(a, inverse(a), BoolOp::Union), required);
}

bool is_complete(const SyncAutomaton& a) {
  return support(a) == UPSet::naturals();
}

ChainVerdict has_infinite_chain(const SyncAutomaton& a, Direction dir) {
  require_order(a);
  NormalForm n = normalize(to_structured(a));
  std::uint64_t t = n.transient, p = n.period;
  for (std::uint64_t i = t; i < t + p; ++i) {
    const UPSet& tail =
        dir == Direction::Ascending ? n.core.right[i] : n.core.left[i];
    if (tail.contains(p)) return {true, ChainWitness{i, p}};
  }
  return {false, std::nullopt};
}

bool has_infinite_antichain(const SyncAutomaton& a) {
  require_order(a);
  NormalForm n = normalize(to_structured(a));
  UPSet supp = support(a);
  std::uint64_t t = n.transient, p = n.period;
  for (std::uint64_t i = t; i < t + p; ++i) {
    if (!supp.contains(i)) continue;
    if (!n.core.right[i].contains(p) && !n.core.left[i].contains(p))
      return true;
  }
  return false;
}

std::uint64_t antichain_bound(const SyncAutomaton& a) {
  if (has_infinite_antichain(a))
    throw Error(Errc::InfiniteAntichain, "antichains are unbounded");
  NormalForm n = normalize(to_structured(a));
  return 2 * (static_cast<std::uint64_t>(n.transient) + n.period) + 2;
}

ExtremalVerdict extremal_element(const SyncAutomaton& a, Side side) {
  require_order(a);
  UPSet supp = support(a);
  UPSet covered =
      side == Side::Max ? to_upset(project(a, 2)) : to_upset(project(a, 1));
  UPSet candidates = subtract(supp, covered);
  ExtremalVerdict v;
  v.exists = !candidates.empty();
  v.witness = candidates.min_element();
  return v;
}

}  // namespace synorder
