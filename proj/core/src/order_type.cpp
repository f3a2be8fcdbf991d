#include "synorder/order_type.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "synorder/order_decide.hpp"

namespace synorder {

Term omega() { return {TermKind::Omega, 0}; }
Term omega_star() { return {TermKind::OmegaStar, 0}; }
Term fin(std::uint64_t n) { return {TermKind::Finite, n}; }

PoorSum reduce(const PoorSum& s) {
  std::vector<Term> out;
  for (Term t : s.terms) {
    if (t.kind == TermKind::Finite && t.count == 0) continue;
    if (!out.empty()) {
      if (out.back().kind == TermKind::Finite && t.kind == TermKind::Finite) {
        out.back().count += t.count;
        continue;
      }
      if (out.back().kind == TermKind::Finite && t.kind == TermKind::Omega)
        out.pop_back();  // a finite prefix vanishes into omega
      else if (out.back().kind == TermKind::OmegaStar &&
               t.kind == TermKind::Finite)
        continue;  // a finite suffix vanishes into omega*
    }
    out.push_back(t);
  }
  return {out};
}

std::string to_string(const PoorSum& s) {
  if (s.terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < s.terms.size(); ++i) {
    if (i) os << " + ";
    switch (s.terms[i].kind) {
      case TermKind::Omega: os << "w"; break;
      case TermKind::OmegaStar: os << "w*"; break;
      case TermKind::Finite: os << s.terms[i].count; break;
    }
  }
  return os.str();
}

PoorSum parse_poor_sum(const std::string& text) {
  if (text == "0") return {};
  PoorSum s;
  std::size_t pos = 0;
  for (;;) {
    if (pos >= text.size())
      throw Error(Errc::ParseError, "expected a term at offset " + std::to_string(pos));
    if (text[pos] == 'w') {
      ++pos;
      if (pos < text.size() && text[pos] == '*') {
        s.terms.push_back(omega_star());
        ++pos;
      } else {
        s.terms.push_back(omega());
      }
    } else if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::uint64_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      if (v == 0)
        throw Error(Errc::ParseError, "finite terms must be positive");
      s.terms.push_back(fin(v));
    } else {
      throw Error(Errc::ParseError, "unexpected character at offset " + std::to_string(pos));
    }
    if (pos == text.size()) return s;
    if (text.compare(pos, 3, " + ") != 0)
      throw Error(Errc::ParseError, "expected ' + ' at offset " + std::to_string(pos));
    pos += 3;
  }
}

PoorSum reversed_starred(const PoorSum& s) {
  PoorSum out;
  for (auto it = s.terms.rbegin(); it != s.terms.rend(); ++it) {
    Term t = *it;
    if (t.kind == TermKind::Omega) t = omega_star();
    else if (t.kind == TermKind::OmegaStar) t = omega();
    out.terms.push_back(t);
  }
  return out;
}

namespace {

// -1 when x is below y, 1 when above; incomparable support pairs break
// linearity.
int cmp(const NormalForm& n, std::uint64_t x, std::uint64_t y) {
  bool below = n.core.member(x, y);
  bool above = n.core.member(y, x);
  if (below && above)
    throw Error(Errc::InconsistentOrder, "a pair relates in both directions");
  if (below) return -1;
  if (above) return 1;
  throw Error(Errc::NotLinear, "incomparable support elements " +
                                   std::to_string(x) + " and " + std::to_string(y));
}

}  // namespace

TailOrder compare_tails(const NormalForm& n, const ChainHandle& a,
                        const ChainHandle& b) {
  if (a.residue >= b.residue)
    throw Error(Errc::BadParameters, "chain handles must be given in residue order");
  const std::uint64_t alpha = a.residue, beta = b.residue;
  const std::uint64_t p = n.period;
  bool a_asc = a.direction == Direction::Ascending;
  bool b_asc = b.direction == Direction::Ascending;
  // Each cmp either settles the queried pair or rejects the order as
  // non-linear, so every branch below has its case fully established.
  if (a_asc && b_asc) {
    if (cmp(n, beta + p, alpha) < 0) return TailOrder::After;
    if (cmp(n, alpha + 2 * p, beta) < 0) return TailOrder::Before;
    return TailOrder::Interleaved;
  }
  if (!a_asc && !b_asc) {
    if (cmp(n, alpha, beta + p) < 0) return TailOrder::Before;
    if (cmp(n, beta, alpha + 2 * p) < 0) return TailOrder::After;
    return TailOrder::Interleaved;
  }
  if (a_asc && !b_asc) {
    if (cmp(n, beta, alpha + 2 * p) < 0) return TailOrder::After;
    if (cmp(n, alpha, beta + p) < 0) return TailOrder::Before;
    return TailOrder::After;
  }
  // descending then ascending
  if (cmp(n, alpha + 2 * p, beta) < 0) return TailOrder::Before;
  if (cmp(n, alpha, beta + p) < 0) return TailOrder::Before;
  return TailOrder::After;
}

PointPlace locate_point(const NormalForm& n, std::uint64_t point,
                        const ChainHandle& chain) {
  const std::uint64_t alpha = chain.residue;
  const std::uint64_t p = n.period;
  // least k with alpha + k*p > point; beyond k+1 the answer is stable
  std::uint64_t k = point < alpha ? 0 : (point - alpha) / p + 1;
  std::uint64_t last = std::max<std::uint64_t>(k + 1, 2);
  bool all_below = true, all_above = true;
  for (std::uint64_t j = 2; j <= last; ++j) {
    if (cmp(n, point, alpha + j * p) < 0)
      all_above = false;
    else
      all_below = false;
  }
  if (all_below) return PointPlace::Before;
  if (all_above) return PointPlace::After;
  return PointPlace::Inside;
}

namespace {

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void merge(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

TailOrder flip(TailOrder o) {
  if (o == TailOrder::Before) return TailOrder::After;
  if (o == TailOrder::After) return TailOrder::Before;
  return o;
}

[[noreturn]] void inconsistent(const char* what) {
  throw Error(Errc::InconsistentOrder, what);
}

}  // namespace

OrderAnalysis analyze_order(const SyncAutomaton& a) {
  if (!is_strict_order(a))
    throw Error(Errc::NotAnOrder, "the relation is not a strict order");
  if (!is_linear(a))
    throw Error(Errc::NotLinear, "the order is not linear");

  OrderAnalysis res;
  res.normal = normalize(to_structured(a));
  const NormalForm& n = res.normal;
  const std::uint64_t t = n.transient, p = n.period;
  UPSet supp = support(a);

  for (std::uint64_t i = t; i < t + p; ++i) {
    if (!supp.contains(i)) continue;
    bool asc = n.core.right[i].contains(p);
    bool desc = n.core.left[i].contains(p);
    if (asc == desc) inconsistent("a support class has no direction");
    res.chains.push_back(
        {i, asc ? Direction::Ascending : Direction::Descending});
  }

  const std::size_t c = res.chains.size();
  std::vector<std::vector<TailOrder>> rel(c, std::vector<TailOrder>(c));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = i + 1; j < c; ++j) {
      rel[i][j] = compare_tails(n, res.chains[i], res.chains[j]);
      rel[j][i] = flip(rel[i][j]);
    }

  Dsu dsu(c);
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = i + 1; j < c; ++j)
      if (rel[i][j] == TailOrder::Interleaved) {
        if (res.chains[i].direction != res.chains[j].direction)
          inconsistent("chains of opposite direction interleave");
        dsu.merge(i, j);
      }

  std::vector<std::vector<std::size_t>> classes;
  {
    std::vector<long> class_of(c, -1);
    for (std::size_t i = 0; i < c; ++i) {
      std::size_t root = dsu.find(i);
      if (class_of[root] < 0) {
        class_of[root] = static_cast<long>(classes.size());
        classes.emplace_back();
      }
      classes[class_of[root]].push_back(i);
    }
  }
  // interleaving must hold across every merged pair, and every cross-class
  // pair must agree on one side
  for (const auto& cls : classes)
    for (std::size_t x : cls)
      for (std::size_t y : cls)
        if (x < y && rel[x][y] != TailOrder::Interleaved)
          inconsistent("merged chains do not pairwise interleave");
  for (std::size_t x = 0; x < classes.size(); ++x)
    for (std::size_t y = x + 1; y < classes.size(); ++y) {
      TailOrder v = rel[classes[x][0]][classes[y][0]];
      if (v == TailOrder::Interleaved)
        inconsistent("separated classes interleave");
      for (std::size_t i : classes[x])
        for (std::size_t j : classes[y])
          if (rel[i][j] != v) inconsistent("cross-class verdicts disagree");
    }

  std::sort(classes.begin(), classes.end(),
            [&](const auto& x, const auto& y) {
              return rel[x[0]][y[0]] == TailOrder::Before;
            });
  for (std::size_t x = 0; x < classes.size(); ++x)
    for (std::size_t y = x + 1; y < classes.size(); ++y)
      if (rel[classes[x][0]][classes[y][0]] != TailOrder::Before)
        inconsistent("class order is not total");

  res.classes = classes;
  for (const auto& cls : classes)
    res.class_direction.push_back(res.chains[cls[0]].direction);

  res.points.assign(classes.size() + 1, {});
  for (std::uint64_t g = 0; g < t + 2 * p; ++g) {
    if (!supp.contains(g)) continue;
    // the verdicts along the sorted classes must read After* Inside? Before*
    std::size_t inside = classes.size();
    std::size_t slot = classes.size();
    int phase = 0;
    for (std::size_t k = 0; k < classes.size(); ++k) {
      bool all_before = true, all_after = true;
      for (std::size_t i : classes[k]) {
        PointPlace pl = locate_point(n, g, res.chains[i]);
        if (pl != PointPlace::Before) all_before = false;
        if (pl != PointPlace::After) all_after = false;
      }
      if (all_after) {
        if (phase != 0) inconsistent("a point lies after a later class");
      } else if (all_before) {
        if (phase < 2) slot = std::min(slot, k);
        phase = 2;
      } else {
        if (phase != 0) inconsistent("a point lies inside two classes");
        inside = k;
        phase = 1;
      }
    }
    if (inside != classes.size()) {
      res.absorbed.emplace_back(g, inside);
      continue;
    }
    res.points[slot].push_back(g);
  }

  for (auto& slot : res.points) {
    for (std::size_t i = 0; i < slot.size(); ++i)
      for (std::size_t j = i + 1; j < slot.size(); ++j)
        cmp(n, slot[i], slot[j]);
    std::sort(slot.begin(), slot.end(), [&](std::uint64_t x, std::uint64_t y) {
      return cmp(n, x, y) < 0;
    });
  }

  PoorSum sum;
  for (std::size_t k = 0; k <= classes.size(); ++k) {
    if (!res.points[k].empty()) sum.terms.push_back(fin(res.points[k].size()));
    if (k < classes.size())
      sum.terms.push_back(res.class_direction[k] == Direction::Ascending
                              ? omega()
                              : omega_star());
  }
  res.type = reduce(sum);
  return res;
}

PoorSum order_type(const SyncAutomaton& a) { return analyze_order(a).type; }

bool equivalent_orders(const SyncAutomaton& a, const SyncAutomaton& b) {
  return order_type(a) == order_type(b);
}

}  // namespace synorder
