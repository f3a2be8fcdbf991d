#include "synorder/sync_automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace synorder {

Letter full_support(int arity) { return (1u << arity) - 1u; }

bool letter_valid(Letter a, int arity) {
  return a != 0 && (a & ~full_support(arity)) == 0;
}

Letter contract_bit(Letter a, int position) {
  Letter low = a & ((1u << (position - 1)) - 1u);
  Letter high = a >> position;
  return low | (high << (position - 1));
}

Letter insert_bit(Letter a, int position, bool value) {
  Letter low = a & ((1u << (position - 1)) - 1u);
  Letter high = a >> (position - 1);
  return low | ((value ? 1u : 0u) << (position - 1)) | (high << position);
}

std::vector<Letter> encode(const std::vector<std::uint64_t>& vec) {
  std::uint64_t top = 0;
  for (auto v : vec) top = std::max(top, v);
  std::vector<Letter> word;
  word.reserve(top);
  for (std::uint64_t k = 1; k <= top; ++k) {
    Letter a = 0;
    for (std::size_t i = 0; i < vec.size(); ++i)
      if (vec[i] >= k) a |= 1u << i;
    word.push_back(a);
  }
  return word;
}

SyncAutomaton::SyncAutomaton(int arity) : arity_(arity) {
  if (arity < 1 || arity > kMaxArity)
    throw Error(Errc::ArityExceeded,
                "arity " + std::to_string(arity) + " outside [1, " +
                    std::to_string(kMaxArity) + "]");
  add_state(false);
}

int SyncAutomaton::add_state(bool final_state) {
  finals_.push_back(final_state);
  next_.emplace_back();
  next_.back().fill(-1);
  return static_cast<int>(next_.size()) - 1;
}

void SyncAutomaton::add_transition(int from, Letter a, int to) {
  if (!letter_valid(a, arity_))
    throw Error(Errc::InvalidAutomaton, "invalid letter for arity");
  if (next_[from][a] != -1)
    throw Error(Errc::InvalidAutomaton,
                "nondeterministic: duplicate transition from state " +
                    std::to_string(from));
  next_[from][a] = to;
}

bool SyncAutomaton::accepts(const std::vector<std::uint64_t>& vec) const {
  if (static_cast<int>(vec.size()) != arity_)
    throw Error(Errc::ArityMismatch, "tuple arity does not match automaton");
  int q = initial_;
  for (Letter a : encode(vec)) {
    q = next_[q][a];
    if (q < 0) return false;
  }
  return finals_[q];
}

std::vector<std::pair<Letter, int>> SyncAutomaton::transitions_from(int q) const {
  std::vector<std::pair<Letter, int>> out;
  for (Letter a = 1; a <= full_support(arity_); ++a)
    if (next_[q][a] >= 0) out.emplace_back(a, next_[q][a]);
  return out;
}

// ---------------------------------------------------------------------------
// canonical form

namespace {

SyncAutomaton empty_automaton(int arity) { return SyncAutomaton(arity); }

// Split states by the support of the letter that reaches them, so every
// state has a well-defined set of allowed next letters.
SyncAutomaton refine_by_entry_support(const SyncAutomaton& a) {
  const Letter top = full_support(a.arity());
  std::map<std::pair<int, Letter>, int> id;
  std::deque<std::pair<int, Letter>> queue;
  SyncAutomaton out(a.arity());
  out.set_final(0, a.is_final(a.initial()));
  id[{a.initial(), top}] = 0;
  queue.push_back({a.initial(), top});
  while (!queue.empty()) {
    auto [q, sup] = queue.front();
    queue.pop_front();
    int from = id[{q, sup}];
    for (Letter e = 1; e <= top; ++e) {
      if ((e & ~sup) != 0) continue;
      int nq = a.step(q, e);
      if (nq < 0) continue;
      auto key = std::make_pair(nq, e);
      auto it = id.find(key);
      if (it == id.end()) {
        int s = out.add_state(a.is_final(nq));
        it = id.emplace(key, s).first;
        queue.push_back(key);
      }
      out.add_transition(from, e, it->second);
    }
  }
  return out;
}

SyncAutomaton trim(const SyncAutomaton& a) {
  int n = a.state_count();
  const Letter top = full_support(a.arity());
  // all states are reachable when built by breadth-first constructions, but
  // be safe and recompute
  std::vector<bool> reach(n, false);
  std::deque<int> queue{a.initial()};
  reach[a.initial()] = true;
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    for (Letter e = 1; e <= top; ++e) {
      int nq = a.step(q, e);
      if (nq >= 0 && !reach[nq]) {
        reach[nq] = true;
        queue.push_back(nq);
      }
    }
  }
  std::vector<std::vector<int>> rev(n);
  for (int q = 0; q < n; ++q)
    for (Letter e = 1; e <= top; ++e) {
      int nq = a.step(q, e);
      if (nq >= 0) rev[nq].push_back(q);
    }
  std::vector<bool> live(n, false);
  for (int q = 0; q < n; ++q)
    if (reach[q] && a.is_final(q)) {
      live[q] = true;
      queue.push_back(q);
    }
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    for (int p : rev[q])
      if (reach[p] && !live[p]) {
        live[p] = true;
        queue.push_back(p);
      }
  }
  if (!live[a.initial()]) return empty_automaton(a.arity());
  std::vector<int> remap(n, -1);
  SyncAutomaton out(a.arity());
  out.set_final(0, a.is_final(a.initial()));
  remap[a.initial()] = 0;
  for (int q = 0; q < n; ++q)
    if (live[q] && remap[q] < 0) remap[q] = out.add_state(a.is_final(q));
  for (int q = 0; q < n; ++q) {
    if (remap[q] < 0) continue;
    for (Letter e = 1; e <= top; ++e) {
      int nq = a.step(q, e);
      if (nq >= 0 && remap[nq] >= 0) out.add_transition(remap[q], e, remap[nq]);
    }
  }
  return out;
}

SyncAutomaton minimize(const SyncAutomaton& a) {
  int n = a.state_count();
  const Letter top = full_support(a.arity());
  std::vector<int> cls(n);
  for (int q = 0; q < n; ++q) cls[q] = a.is_final(q) ? 1 : 0;
  // refinement only splits classes, so a stable count means a fixpoint
  std::size_t count = 0;
  for (;;) {
    std::map<std::vector<int>, int> sig_id;
    std::vector<int> next_cls(n);
    for (int q = 0; q < n; ++q) {
      std::vector<int> sig;
      sig.reserve(top + 1);
      sig.push_back(cls[q]);
      for (Letter e = 1; e <= top; ++e) {
        int nq = a.step(q, e);
        sig.push_back(nq >= 0 ? cls[nq] : -1);
      }
      auto it = sig_id.find(sig);
      if (it == sig_id.end()) it = sig_id.emplace(sig, static_cast<int>(sig_id.size())).first;
      next_cls[q] = it->second;
    }
    cls = next_cls;
    if (sig_id.size() == count) break;
    count = sig_id.size();
  }
  std::vector<int> rep(count, -1);
  for (int q = 0; q < n; ++q)
    if (rep[cls[q]] < 0) rep[cls[q]] = q;
  SyncAutomaton out(a.arity());
  out.set_final(0, a.is_final(rep[cls[a.initial()]]));
  std::vector<int> remap(count, -1);
  remap[cls[a.initial()]] = 0;
  for (std::size_t c = 0; c < count; ++c)
    if (remap[c] < 0) remap[c] = out.add_state(a.is_final(rep[c]));
  for (std::size_t c = 0; c < count; ++c)
    for (Letter e = 1; e <= top; ++e) {
      int nq = a.step(rep[c], e);
      if (nq >= 0) out.add_transition(remap[c], e, remap[cls[nq]]);
    }
  return out;
}

SyncAutomaton renumber_bfs(const SyncAutomaton& a) {
  const Letter top = full_support(a.arity());
  std::vector<int> order;
  std::vector<int> pos(a.state_count(), -1);
  std::deque<int> queue{a.initial()};
  pos[a.initial()] = 0;
  order.push_back(a.initial());
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    for (Letter e = 1; e <= top; ++e) {
      int nq = a.step(q, e);
      if (nq >= 0 && pos[nq] < 0) {
        pos[nq] = static_cast<int>(order.size());
        order.push_back(nq);
        queue.push_back(nq);
      }
    }
  }
  SyncAutomaton out(a.arity());
  out.set_final(0, a.is_final(a.initial()));
  for (std::size_t i = 1; i < order.size(); ++i) out.add_state(a.is_final(order[i]));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Letter e = 1; e <= top; ++e) {
      int nq = a.step(order[i], e);
      if (nq >= 0) out.add_transition(static_cast<int>(i), e, pos[nq]);
    }
  return out;
}

}  // namespace

SyncAutomaton canonicalized(const SyncAutomaton& a) {
  SyncAutomaton t = trim(refine_by_entry_support(a));
  if (t.state_count() == 1 && t.transitions_from(0).empty() && !t.is_final(0))
    return t;
  return renumber_bfs(minimize(t));
}

// ---------------------------------------------------------------------------
// boolean operations

namespace {

// Completed product over the valid-word domain: -1 is the sink leg, and the
// tracked support restricts which letters may still appear.
SyncAutomaton completed_product(const SyncAutomaton& x, const SyncAutomaton& y,
                                BoolOp op) {
  const int arity = x.arity();
  const Letter top = full_support(arity);
  auto final_of = [&](int qa, int qb) {
    bool fa = qa >= 0 && x.is_final(qa);
    bool fb = qb >= 0 && y.is_final(qb);
    return op == BoolOp::Union ? (fa || fb) : (fa && fb);
  };
  std::map<std::tuple<int, int, Letter>, int> id;
  std::deque<std::tuple<int, int, Letter>> queue;
  SyncAutomaton out(arity);
  out.set_final(0, final_of(x.initial(), y.initial()));
  id[{x.initial(), y.initial(), top}] = 0;
  queue.push_back({x.initial(), y.initial(), top});
  while (!queue.empty()) {
    auto [qa, qb, sup] = queue.front();
    queue.pop_front();
    int from = id[{qa, qb, sup}];
    for (Letter e = 1; e <= top; ++e) {
      if ((e & ~sup) != 0) continue;
      int na = qa >= 0 ? x.step(qa, e) : -1;
      int nb = qb >= 0 ? y.step(qb, e) : -1;
      auto key = std::make_tuple(na, nb, e);
      auto it = id.find(key);
      if (it == id.end()) {
        int s = out.add_state(final_of(na, nb));
        it = id.emplace(key, s).first;
        queue.push_back(key);
      }
      out.add_transition(from, e, it->second);
    }
  }
  return out;
}

}  // namespace

SyncAutomaton product(const SyncAutomaton& a, const SyncAutomaton& b,
                      BoolOp op) {
  if (a.arity() != b.arity())
    throw Error(Errc::ArityMismatch, "product of automata of different arity");
  return canonicalized(completed_product(a, b, op));
}

SyncAutomaton complement(const SyncAutomaton& a) {
  const Letter top = full_support(a.arity());
  std::map<std::pair<int, Letter>, int> id;
  std::deque<std::pair<int, Letter>> queue;
  SyncAutomaton out(a.arity());
  auto final_of = [&](int q) { return !(q >= 0 && a.is_final(q)); };
  out.set_final(0, final_of(a.initial()));
  id[{a.initial(), top}] = 0;
  queue.push_back({a.initial(), top});
  while (!queue.empty()) {
    auto [q, sup] = queue.front();
    queue.pop_front();
    int from = id[{q, sup}];
    for (Letter e = 1; e <= top; ++e) {
      if ((e & ~sup) != 0) continue;
      int nq = q >= 0 ? a.step(q, e) : -1;
      auto key = std::make_pair(nq, e);
      auto it = id.find(key);
      if (it == id.end()) {
        int s = out.add_state(final_of(nq));
        it = id.emplace(key, s).first;
        queue.push_back(key);
      }
      out.add_transition(from, e, it->second);
    }
  }
  return canonicalized(out);
}

SyncAutomaton project(const SyncAutomaton& a, int coordinate) {
  const int n = a.arity();
  if (n < 2) throw Error(Errc::BadParameters, "projection needs arity two or more");
  if (coordinate < 1 || coordinate > n)
    throw Error(Errc::BadParameters, "projected coordinate out of range");
  const Letter eps = 1u << (coordinate - 1);
  auto closure = [&](std::set<int> s) {
    std::deque<int> queue(s.begin(), s.end());
    while (!queue.empty()) {
      int q = queue.front();
      queue.pop_front();
      int nq = a.step(q, eps);
      if (nq >= 0 && !s.count(nq)) {
        s.insert(nq);
        queue.push_back(nq);
      }
    }
    return s;
  };
  auto any_final = [&](const std::set<int>& s) {
    return std::any_of(s.begin(), s.end(), [&](int q) { return a.is_final(q); });
  };
  const int m = n - 1;
  const Letter mtop = full_support(m);
  std::map<std::set<int>, int> id;
  std::deque<std::set<int>> queue;
  SyncAutomaton out(m);
  std::set<int> start = closure({a.initial()});
  out.set_final(0, any_final(start));
  id[start] = 0;
  queue.push_back(start);
  while (!queue.empty()) {
    std::set<int> s = queue.front();
    queue.pop_front();
    int from = id[s];
    for (Letter e = 1; e <= mtop; ++e) {
      std::set<int> target;
      for (Letter bit : {0u, 1u}) {
        Letter pre = insert_bit(e, coordinate, bit != 0);
        for (int q : s) {
          int nq = a.step(q, pre);
          if (nq >= 0) target.insert(nq);
        }
      }
      if (target.empty()) continue;
      target = closure(std::move(target));
      auto it = id.find(target);
      if (it == id.end()) {
        int st = out.add_state(any_final(target));
        it = id.emplace(target, st).first;
        queue.push_back(target);
      }
      out.add_transition(from, e, it->second);
    }
  }
  return canonicalized(out);
}

SyncAutomaton cylindrify(const SyncAutomaton& a, int position) {
  const int n = a.arity();
  if (n + 1 > kMaxArity)
    throw Error(Errc::ArityExceeded, "cylindrification exceeds the arity bound");
  if (position < 1 || position > n + 1)
    throw Error(Errc::BadParameters, "insertion position out of range");
  // tag 0: fresh coordinate still running; tag 1: fresh coordinate done;
  // tag 2: the old word is done, only the fresh coordinate continues
  enum { Alive = 0, Dead = 1, Tail = 2 };
  const Letter top = full_support(n + 1);
  const Letter fresh = 1u << (position - 1);
  std::map<std::pair<int, int>, int> id;
  std::deque<std::pair<int, int>> queue;
  SyncAutomaton out(n + 1);
  out.set_final(0, a.is_final(a.initial()));
  id[{a.initial(), Alive}] = 0;
  queue.push_back({a.initial(), Alive});
  auto intern = [&](int q, int tag) {
    auto key = std::make_pair(q, tag);
    auto it = id.find(key);
    if (it == id.end()) {
      int s = out.add_state(a.is_final(q));
      it = id.emplace(key, s).first;
      queue.push_back(key);
    }
    return it->second;
  };
  while (!queue.empty()) {
    auto [q, tag] = queue.front();
    queue.pop_front();
    int from = id[{q, tag}];
    if (tag == Tail) {
      out.add_transition(from, fresh, intern(q, Tail));
      continue;
    }
    for (Letter e = 1; e <= top; ++e) {
      bool has_fresh = (e & fresh) != 0;
      if (tag == Dead && has_fresh) continue;
      Letter rest = contract_bit(e, position);
      if (rest == 0) {
        out.add_transition(from, e, intern(q, Tail));
        continue;
      }
      int nq = a.step(q, rest);
      if (nq < 0) continue;
      out.add_transition(from, e, intern(nq, has_fresh ? Alive : Dead));
    }
  }
  return canonicalized(out);
}

// ---------------------------------------------------------------------------
// decisions

bool is_empty(const SyncAutomaton& a) {
  const Letter top = full_support(a.arity());
  std::vector<bool> seen(a.state_count(), false);
  std::deque<int> queue{a.initial()};
  seen[a.initial()] = true;
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    if (a.is_final(q)) return false;
    for (Letter e = 1; e <= top; ++e) {
      int nq = a.step(q, e);
      if (nq >= 0 && !seen[nq]) {
        seen[nq] = true;
        queue.push_back(nq);
      }
    }
  }
  return true;
}

bool includes(const SyncAutomaton& a, const SyncAutomaton& b) {
  if (a.arity() != b.arity())
    throw Error(Errc::ArityMismatch, "inclusion of automata of different arity");
  return is_empty(product(b, complement(a), BoolOp::Intersection));
}

bool equivalent(const SyncAutomaton& a, const SyncAutomaton& b) {
  return includes(a, b) && includes(b, a);
}

bool decide(const SyncAutomaton& a, const SyncAutomaton* b, Decision query) {
  switch (query) {
    case Decision::IsEmpty: return is_empty(a);
    case Decision::Includes:
      if (!b) throw Error(Errc::BadParameters, "inclusion needs two automata");
      return includes(a, *b);
    case Decision::Equivalent:
      if (!b) throw Error(Errc::BadParameters, "equivalence needs two automata");
      return equivalent(a, *b);
  }
  throw Error(Errc::BadParameters, "unknown decision query");
}

// ---------------------------------------------------------------------------
// single-letter walks and unary conversions

namespace {

// Follow one letter from `from` until the walk dies or revisits a state.
// Returns the visited states and the loop entry index (-1 when the walk
// dies after the last state).
std::pair<std::vector<int>, int> walk(const SyncAutomaton& a, int from,
                                      Letter step) {
  std::vector<int> seq{from};
  std::map<int, int> seen{{from, 0}};
  for (;;) {
    int nq = a.step(seq.back(), step);
    if (nq < 0) return {seq, -1};
    auto it = seen.find(nq);
    if (it != seen.end()) return {seq, it->second};
    seen.emplace(nq, static_cast<int>(seq.size()));
    seq.push_back(nq);
  }
}

template <typename Pred>
UPSet position_set(const std::vector<int>& seq, int loop, Pred pred) {
  if (loop < 0) {
    std::vector<bool> head(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) head[i] = pred(seq[i]);
    return UPSet::from_masks(seq.size(), std::move(head), {false});
  }
  std::uint64_t t = loop;
  std::uint64_t p = seq.size() - loop;
  std::vector<bool> head(t), res(p);
  for (std::uint64_t i = 0; i < t; ++i) head[i] = pred(seq[i]);
  for (std::uint64_t r = 0; r < p; ++r) {
    std::uint64_t j = t + (r + p - t % p) % p;  // the position in [t, t+p) with j ≡ r (mod p)
    res[r] = pred(seq[j]);
  }
  return UPSet::from_masks(t, std::move(head), std::move(res));
}

}  // namespace

UPSet accepted_lengths(const SyncAutomaton& a, int from, Letter step) {
  auto [seq, loop] = walk(a, from, step);
  return position_set(seq, loop, [&](int q) { return a.is_final(q); });
}

UPSet lengths_reaching(const SyncAutomaton& a, int from, Letter step,
                       int target) {
  auto [seq, loop] = walk(a, from, step);
  return position_set(seq, loop, [&](int q) { return q == target; });
}

UPSet to_upset(const SyncAutomaton& a) {
  if (a.arity() != 1)
    throw Error(Errc::ArityMismatch, "set conversion needs a unary automaton");
  return accepted_lengths(a, a.initial(), 1);
}

SyncAutomaton from_upset(const UPSet& s) {
  SyncAutomaton out(1);
  std::uint64_t n = s.transient() + s.period();
  out.set_final(0, s.contains(0));
  for (std::uint64_t j = 1; j < n; ++j) out.add_state(s.contains(j));
  for (std::uint64_t j = 0; j < n; ++j) {
    std::uint64_t to = j + 1 < n ? j + 1 : s.transient();
    out.add_transition(static_cast<int>(j), 1, static_cast<int>(to));
  }
  return canonicalized(out);
}

// ---------------------------------------------------------------------------
// validation and serialization

void validate(const SyncAutomaton& a) {
  const Letter top = full_support(a.arity());
  std::set<std::pair<int, Letter>> seen;
  std::deque<std::pair<int, Letter>> queue;
  seen.insert({a.initial(), top});
  queue.push_back({a.initial(), top});
  while (!queue.empty()) {
    auto [q, sup] = queue.front();
    queue.pop_front();
    for (Letter e = 1; e <= top; ++e) {
      int nq = a.step(q, e);
      if (nq < 0) continue;
      if ((e & ~sup) != 0)
        throw Error(Errc::InvalidAutomaton,
                    "support grows along a path at state " + std::to_string(q));
      if (seen.insert({nq, e}).second) queue.push_back({nq, e});
    }
  }
}

SyncAutomaton load_automaton_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw Error(Errc::ParseError, std::string("bad JSON: ") + e.what());
  }
  auto need_uint = [&](const char* key) -> std::uint64_t {
    if (!j.contains(key) || !j[key].is_number_unsigned())
      throw Error(Errc::InvalidAutomaton,
                  std::string("missing or invalid field '") + key + "'");
    return j[key].get<std::uint64_t>();
  };
  std::uint64_t arity = need_uint("arity");
  std::uint64_t states = need_uint("states");
  std::uint64_t initial = need_uint("initial");
  if (arity < 1 || arity > static_cast<std::uint64_t>(kMaxArity))
    throw Error(Errc::ArityExceeded, "arity outside the supported range");
  if (states < 1) throw Error(Errc::InvalidAutomaton, "no states");
  if (initial >= states) throw Error(Errc::InvalidAutomaton, "initial state out of range");
  SyncAutomaton out(static_cast<int>(arity));
  for (std::uint64_t q = 1; q < states; ++q) out.add_state(false);
  out.set_initial(static_cast<int>(initial));
  if (!j.contains("finals") || !j["finals"].is_array())
    throw Error(Errc::InvalidAutomaton, "missing or invalid field 'finals'");
  for (const auto& f : j["finals"]) {
    if (!f.is_number_unsigned() || f.get<std::uint64_t>() >= states)
      throw Error(Errc::InvalidAutomaton, "final state out of range");
    out.set_final(f.get<int>(), true);
  }
  if (!j.contains("transitions") || !j["transitions"].is_array())
    throw Error(Errc::InvalidAutomaton, "missing or invalid field 'transitions'");
  for (const auto& t : j["transitions"]) {
    if (!t.is_object() || !t.contains("from") || !t.contains("letter") ||
        !t.contains("to") || !t["from"].is_number_unsigned() ||
        !t["to"].is_number_unsigned() || !t["letter"].is_array())
      throw Error(Errc::InvalidAutomaton, "malformed transition");
    std::uint64_t from = t["from"].get<std::uint64_t>();
    std::uint64_t to = t["to"].get<std::uint64_t>();
    if (from >= states || to >= states)
      throw Error(Errc::InvalidAutomaton, "transition state out of range");
    if (t["letter"].size() != arity)
      throw Error(Errc::InvalidAutomaton, "letter length does not match arity");
    Letter a = 0;
    for (std::size_t i = 0; i < arity; ++i) {
      const auto& b = t["letter"][i];
      if (!b.is_number_unsigned() || b.get<std::uint64_t>() > 1)
        throw Error(Errc::InvalidAutomaton, "letter entries must be 0 or 1");
      if (b.get<std::uint64_t>() == 1) a |= 1u << i;
    }
    if (a == 0)
      throw Error(Errc::InvalidAutomaton, "letter must have a nonempty support");
    out.add_transition(static_cast<int>(from), a, static_cast<int>(to));
  }
  validate(out);
  return out;
}

std::string dump_automaton_json(const SyncAutomaton& a) {
  nlohmann::ordered_json j;
  j["arity"] = a.arity();
  j["states"] = a.state_count();
  j["initial"] = a.initial();
  std::vector<int> finals;
  for (int q = 0; q < a.state_count(); ++q)
    if (a.is_final(q)) finals.push_back(q);
  j["finals"] = finals;
  j["transitions"] = nlohmann::ordered_json::array();
  for (int q = 0; q < a.state_count(); ++q)
    for (auto [e, to] : a.transitions_from(q)) {
      nlohmann::ordered_json t;
      t["from"] = q;
      std::vector<int> letter(a.arity());
      for (int i = 0; i < a.arity(); ++i) letter[i] = (e >> i) & 1;
      t["letter"] = letter;
      t["to"] = to;
      j["transitions"].push_back(t);
    }
  return j.dump(2) + "\n";
}

std::string to_dot(const SyncAutomaton& a) {
  std::ostringstream os;
  os << "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
  os << "  __start [shape=point];\n";
  for (int q = 0; q < a.state_count(); ++q)
    if (a.is_final(q)) os << "  q" << q << " [shape=doublecircle];\n";
  os << "  __start -> q" << a.initial() << ";\n";
  for (int q = 0; q < a.state_count(); ++q)
    for (auto [e, to] : a.transitions_from(q)) {
      os << "  q" << q << " -> q" << to << " [label=\"(";
      for (int i = 0; i < a.arity(); ++i) {
        if (i) os << ",";
        os << ((e >> i) & 1);
      }
      os << ")\"];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace synorder
