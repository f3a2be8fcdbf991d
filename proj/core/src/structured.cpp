#include "synorder/structured.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace synorder {

namespace {

constexpr Letter kDiag = 3;   // (1,1)
constexpr Letter kLeft = 1;   // (1,0)
constexpr Letter kRight = 2;  // (0,1)

UPSet drop_zero(const UPSet& s) { return subtract(s, UPSet::finite({0})); }

std::pair<std::vector<int>, int> diagonal_walk(const SyncAutomaton& a) {
  std::vector<int> seq{a.initial()};
  std::map<int, int> seen{{a.initial(), 0}};
  for (;;) {
    int nq = a.step(seq.back(), kDiag);
    if (nq < 0) return {seq, -1};
    auto it = seen.find(nq);
    if (it != seen.end()) return {seq, it->second};
    seen.emplace(nq, static_cast<int>(seq.size()));
    seq.push_back(nq);
  }
}

}  // namespace

StructuredBinary to_structured(const SyncAutomaton& a) {
  if (a.arity() != 2)
    throw Error(Errc::ArityMismatch, "structured form needs a binary automaton");
  auto [diag, loop] = diagonal_walk(a);
  StructuredBinary s;
  int n = static_cast<int>(diag.size());
  if (loop < 0) {
    // the diagonal dies; a sentinel class carries the empty tails
    s.loop_target = n;
    ++n;
    diag.push_back(-1);
  } else {
    s.loop_target = loop;
  }
  s.left.resize(n);
  s.right.resize(n);
  s.equal_accepted.resize(n, false);
  for (int i = 0; i < n; ++i) {
    if (diag[i] < 0) continue;
    s.equal_accepted[i] = a.is_final(diag[i]);
    s.left[i] = drop_zero(accepted_lengths(a, diag[i], kLeft));
    s.right[i] = drop_zero(accepted_lengths(a, diag[i], kRight));
  }
  return s;
}

namespace {

void attach_tail(SyncAutomaton& a, int from, Letter step, const UPSet& dist) {
  if (dist.empty()) return;
  std::uint64_t start = std::max<std::uint64_t>(dist.transient(), 1);
  std::uint64_t last = start + dist.period() - 1;
  std::vector<int> states(last + 1, -1);
  for (std::uint64_t d = 1; d <= last; ++d) states[d] = a.add_state(dist.contains(d));
  a.add_transition(from, step, states[1]);
  for (std::uint64_t d = 1; d < last; ++d) a.add_transition(states[d], step, states[d + 1]);
  a.add_transition(states[last], step, states[start]);
}

}  // namespace

SyncAutomaton to_automaton(const StructuredBinary& s) {
  SyncAutomaton a(2);
  int n = s.diag_states();
  std::vector<int> diag(n);
  a.set_final(0, s.equal_accepted[0]);
  diag[0] = 0;
  for (int i = 1; i < n; ++i) diag[i] = a.add_state(s.equal_accepted[i]);
  for (int i = 0; i + 1 < n; ++i) a.add_transition(diag[i], kDiag, diag[i + 1]);
  a.add_transition(diag[n - 1], kDiag, diag[s.loop_target]);
  for (int i = 0; i < n; ++i) {
    attach_tail(a, diag[i], kLeft, s.left[i]);
    attach_tail(a, diag[i], kRight, s.right[i]);
  }
  return canonicalized(a);
}

NormalForm normalize(const StructuredBinary& s) {
  SyncAutomaton a = to_automaton(s);
  UPSet supp = to_upset(product(project(a, 2), project(a, 1), BoolOp::Union));

  std::uint64_t diag_period = s.diag_states() - s.loop_target;
  std::uint64_t base = std::lcm(diag_period, supp.period());
  std::uint64_t max_tail_transient = 0;
  for (int i = 0; i < s.diag_states(); ++i) {
    base = std::lcm(base, std::lcm(s.left[i].period(), s.right[i].period()));
    max_tail_transient = std::max({max_tail_transient, s.left[i].transient(),
                                   s.right[i].transient()});
  }
  std::uint64_t t =
      std::max<std::uint64_t>(s.loop_target, supp.transient());
  std::uint64_t need = std::max(t, max_tail_transient);
  std::uint64_t p = base * (need / base + 1);
  if (t + p > 200000)
    throw Error(Errc::BadParameters, "normal form too large");

  NormalForm out;
  out.transient = static_cast<int>(t);
  out.period = static_cast<int>(p);
  out.core.loop_target = static_cast<int>(t);
  std::uint64_t total = t + p;
  out.core.left.reserve(total);
  out.core.right.reserve(total);
  out.core.equal_accepted.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) {
    int j = s.index_of(i);
    out.core.left.push_back(s.left[j]);
    out.core.right.push_back(s.right[j]);
    out.core.equal_accepted.push_back(s.equal_accepted[j]);
  }
  return out;
}

std::string dump(const NormalForm& n) {
  std::ostringstream os;
  os << "diag t=" << n.transient << " p=" << n.period << "\n";
  for (int i = 0; i < n.core.diag_states(); ++i) {
    os << i << ": DL=" << n.core.left[i].to_string()
       << " DR=" << n.core.right[i].to_string()
       << " EQ=" << (n.core.equal_accepted[i] ? 1 : 0) << "\n";
  }
  return os.str();
}

}  // namespace synorder
