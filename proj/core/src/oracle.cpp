#include "synorder/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "synorder/order_decide.hpp"
#include "json.hpp"

namespace synorder {

namespace {

constexpr Letter kDiag = 3;
constexpr Letter kLeft = 1;
constexpr Letter kRight = 2;

void require_binary(const SyncAutomaton& a) {
  if (a.arity() != 2)
    throw Error(Errc::ArityMismatch, "prefix oracle needs a binary relation");
}

}  // namespace

PairTable pair_table(const SyncAutomaton& a, std::uint64_t max) {
  require_binary(a);
  const std::uint64_t n = max + 1;
  std::vector<bool> bits(n * n, false);
  int diag = a.initial();
  for (std::uint64_t k = 0; k <= max && diag >= 0; ++k) {
    if (a.is_final(diag)) bits[k * n + k] = true;
    int s = diag;
    for (std::uint64_t d = 1; k + d <= max && s >= 0; ++d) {
      s = a.step(s, kRight);
      if (s >= 0 && a.is_final(s)) bits[k * n + (k + d)] = true;
    }
    s = diag;
    for (std::uint64_t d = 1; k + d <= max && s >= 0; ++d) {
      s = a.step(s, kLeft);
      if (s >= 0 && a.is_final(s)) bits[(k + d) * n + k] = true;
    }
    diag = a.step(diag, kDiag);
  }
  return PairTable(max, std::move(bits));
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> enumerate_pairs(
    const SyncAutomaton& a, std::uint64_t max) {
  PairTable t = pair_table(a, max);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t k = 0; k <= max; ++k)
    for (std::uint64_t l = 0; l <= max; ++l)
      if (t.at(k, l)) out.emplace_back(k, l);
  return out;
}

bool support_contains(const SyncAutomaton& a, std::uint64_t x) {
  require_binary(a);
  // A partner, when one exists, lies within state_count() steps past x on
  // the exhausted-coordinate walk, so one bounded table decides membership.
  std::uint64_t ext = x + a.state_count() + 1;
  PairTable t = pair_table(a, ext);
  for (std::uint64_t y = 0; y <= ext; ++y)
    if (t.at(x, y) || t.at(y, x)) return true;
  return false;
}

namespace {

struct Prefix {
  std::uint64_t max;
  PairTable table;  // extends past max so support membership is exact
  std::vector<bool> in_support;

  bool at(std::uint64_t k, std::uint64_t l) const { return table.at(k, l); }
};

Prefix build_prefix(const SyncAutomaton& a, std::uint64_t max) {
  std::uint64_t ext = max + a.state_count() + 1;
  Prefix p{max, pair_table(a, ext), std::vector<bool>(max + 1, false)};
  for (std::uint64_t x = 0; x <= max; ++x)
    for (std::uint64_t y = 0; y <= ext && !p.in_support[x]; ++y)
      if (p.table.at(x, y) || p.table.at(y, x)) p.in_support[x] = true;
  return p;
}

// first order violation on the prefix, or an empty string
std::string order_violation(const Prefix& p) {
  const std::uint64_t n = p.max + 1;
  for (std::uint64_t x = 0; x < n; ++x)
    if (p.table.at(x, x))
      return "(" + std::to_string(x) + "," + std::to_string(x) + ") is a loop";
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = x + 1; y < n; ++y)
      if (p.table.at(x, y) && p.table.at(y, x))
        return "(" + std::to_string(x) + "," + std::to_string(y) +
               ") relates both ways";
  // transitivity through row inclusion
  std::uint64_t words = (n + 63) / 64;
  std::vector<std::uint64_t> rows(n * words, 0);
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y)
      if (p.table.at(x, y)) rows[x * words + y / 64] |= 1ull << (y % 64);
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y) {
      if (!p.table.at(x, y)) continue;
      for (std::uint64_t w = 0; w < words; ++w) {
        std::uint64_t missing = rows[y * words + w] & ~rows[x * words + w];
        if (missing) {
          std::uint64_t z = w * 64 + static_cast<std::uint64_t>(
                                         std::countr_zero(missing));
          return "(" + std::to_string(x) + "," + std::to_string(y) + ") and (" +
                 std::to_string(y) + "," + std::to_string(z) + ") but not (" +
                 std::to_string(x) + "," + std::to_string(z) + ")";
        }
      }
    }
  return "";
}

void require_prefix_order(const Prefix& p) {
  std::string v = order_violation(p);
  if (!v.empty())
    throw Error(Errc::NotAnOrder, "prefix violates the order axioms: " + v);
}

}  // namespace

std::uint64_t longest_chain_prefix(const SyncAutomaton& a, std::uint64_t max) {
  Prefix p = build_prefix(a, max);
  require_prefix_order(p);
  // Longest path over the relation edges, counting vertices. The relation
  // is transitive on the prefix, so the predecessor count is a topological
  // key: z below x forces preds(z) to be a proper subset of preds(x).
  const std::uint64_t n = max + 1;
  std::vector<std::uint64_t> indeg(n, 0);
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t z = 0; z < n; ++z)
      if (p.at(z, x)) ++indeg[x];
  std::vector<std::uint64_t> order(n);
  for (std::uint64_t x = 0; x < n; ++x) order[x] = x;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint64_t x, std::uint64_t y) {
                     return indeg[x] < indeg[y];
                   });
  std::vector<std::uint64_t> best(n, 0);
  std::uint64_t answer = 0;
  for (std::uint64_t x : order) {
    if (!p.in_support[x]) continue;
    best[x] = 1;
    for (std::uint64_t z = 0; z < n; ++z)
      if (p.at(z, x) && best[z] + 1 > best[x]) best[x] = best[z] + 1;
    answer = std::max(answer, best[x]);
  }
  return answer;
}

std::uint64_t longest_directed_chain_prefix(const SyncAutomaton& a,
                                            std::uint64_t max, Direction dir) {
  Prefix p = build_prefix(a, max);
  require_prefix_order(p);
  const std::uint64_t n = max + 1;
  std::vector<std::uint64_t> best(n, 0);
  std::uint64_t answer = 0;
  for (std::uint64_t x = 0; x < n; ++x) {
    if (!p.in_support[x]) continue;
    best[x] = 1;
    for (std::uint64_t z = 0; z < x; ++z) {
      bool edge = dir == Direction::Ascending ? p.table.at(z, x)
                                              : p.table.at(x, z);
      if (edge && best[z] + 1 > best[x]) best[x] = best[z] + 1;
    }
    answer = std::max(answer, best[x]);
  }
  return answer;
}

namespace {

// augmenting-path maximum matching
struct Matcher {
  std::vector<std::vector<int>> adj;
  std::vector<int> match_left, match_right;
  std::vector<bool> seen;

  explicit Matcher(int n) : adj(n), match_left(n, -1), match_right(n, -1) {}

  bool augment(int u) {
    for (int v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = true;
      if (match_right[v] < 0 || augment(match_right[v])) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    return false;
  }

  int solve() {
    int total = 0;
    for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
      seen.assign(adj.size(), false);
      if (augment(u)) ++total;
    }
    return total;
  }
};

}  // namespace

std::uint64_t max_antichain_prefix(const SyncAutomaton& a, std::uint64_t max) {
  Prefix p = build_prefix(a, max);
  require_prefix_order(p);
  // minimum chain cover of the support vertices; the relation is transitive
  // on the prefix, so chains and paths coincide
  std::vector<int> vertices;
  for (std::uint64_t x = 0; x <= max; ++x)
    if (p.in_support[x]) vertices.push_back(static_cast<int>(x));
  std::vector<int> id(max + 1, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) id[vertices[i]] = static_cast<int>(i);
  Matcher m(static_cast<int>(vertices.size()));
  for (int u : vertices)
    for (int v : vertices)
      if (p.table.at(u, v)) m.adj[id[u]].push_back(id[v]);
  return vertices.size() - static_cast<std::uint64_t>(m.solve());
}

std::vector<Divergence> verify_against_brute_force(const SyncAutomaton& a,
                                                   std::uint64_t max) {
  std::vector<Divergence> out;
  Prefix p = build_prefix(a, max);
  std::string violation = order_violation(p);
  bool module_order = is_strict_order(a);
  if (module_order && !violation.empty())
    out.push_back({"strict-order", violation, "no violation on the prefix",
                   "violated"});
  if (!module_order) return out;
  bool module_linear = is_linear(a);
  if (module_linear)
    for (std::uint64_t x = 0; x <= max; ++x)
      for (std::uint64_t y = x + 1; y <= max; ++y) {
        if (!p.in_support[x] || !p.in_support[y]) continue;
        if (!p.table.at(x, y) && !p.table.at(y, x)) {
          out.push_back({"linear",
                         "(" + std::to_string(x) + "," + std::to_string(y) + ")",
                         "comparable support elements", "incomparable"});
          return out;
        }
      }
  return out;
}

std::string divergences_to_json(const std::vector<Divergence>& divs) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& d : divs) {
    nlohmann::ordered_json r;
    r["check"] = d.check;
    r["input"] = d.input;
    r["expected"] = d.expected;
    r["got"] = d.got;
    j.push_back(r);
  }
  return j.dump() + "\n";
}

}  // namespace synorder
