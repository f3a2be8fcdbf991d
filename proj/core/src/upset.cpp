#include "synorder/upset.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace synorder {

UPSet::UPSet() : transient_(0), period_(1), head_(), residues_(1, false) {}

UPSet UPSet::from_masks(std::uint64_t transient, std::vector<bool> head,
                        std::vector<bool> residues) {
  if (residues.empty()) throw Error(Errc::BadParameters, "period must be positive");
  UPSet s;
  s.transient_ = static_cast<std::uint32_t>(transient);
  s.period_ = static_cast<std::uint32_t>(residues.size());
  s.head_ = std::move(head);
  s.residues_ = std::move(residues);
  s.head_.resize(transient, false);
  s.canonicalize();
  return s;
}

UPSet UPSet::from(std::uint64_t transient, std::uint64_t period,
                  const std::vector<std::uint64_t>& head,
                  const std::vector<std::uint64_t>& residues) {
  if (period == 0) throw Error(Errc::BadParameters, "period must be positive");
  std::vector<bool> h(transient, false), r(period, false);
  for (auto n : head) {
    if (n >= transient)
      throw Error(Errc::BadParameters, "head element outside [0, t)");
    h[n] = true;
  }
  for (auto n : residues) {
    if (n >= period)
      throw Error(Errc::BadParameters, "residue outside [0, p)");
    r[n] = true;
  }
  return from_masks(transient, std::move(h), std::move(r));
}

UPSet UPSet::finite(const std::vector<std::uint64_t>& elements) {
  if (elements.empty()) return UPSet();
  std::uint64_t m = *std::max_element(elements.begin(), elements.end());
  std::vector<bool> h(m + 1, false);
  for (auto n : elements) h[n] = true;
  return from_masks(m + 1, std::move(h), {false});
}

UPSet UPSet::below(std::uint64_t bound) {
  return from_masks(bound, std::vector<bool>(bound, true), {false});
}

UPSet UPSet::naturals() { return from_masks(0, {}, {true}); }

UPSet UPSet::positives() { return from_masks(1, {false}, {true}); }

UPSet UPSet::residue_class(std::uint64_t start, std::uint64_t modulus,
                           std::uint64_t residue) {
  if (modulus == 0) throw Error(Errc::BadParameters, "modulus must be positive");
  std::vector<bool> r(modulus, false);
  r[residue % modulus] = true;
  return from_masks(start, std::vector<bool>(start, false), std::move(r));
}

bool UPSet::contains(std::uint64_t n) const {
  if (n < transient_) return head_[n];
  return residues_[n % period_];
}

void UPSet::canonicalize() {
  // minimal period: smallest divisor of the current one that the residue
  // pattern repeats with
  for (std::uint32_t d = 1; d <= period_; ++d) {
    if (period_ % d != 0) continue;
    bool ok = true;
    for (std::uint32_t r = 0; r < period_ && ok; ++r)
      ok = residues_[r] == residues_[r % d];
    if (ok) {
      residues_.resize(d);
      period_ = d;
      break;
    }
  }
  // minimal transient: fold head entries that already match the pattern
  while (transient_ > 0 &&
         head_[transient_ - 1] == residues_[(transient_ - 1) % period_]) {
    head_.pop_back();
    --transient_;
  }
}

bool UPSet::empty() const {
  return std::none_of(head_.begin(), head_.end(), [](bool b) { return b; }) &&
         std::none_of(residues_.begin(), residues_.end(),
                      [](bool b) { return b; });
}

bool UPSet::is_finite() const {
  return std::none_of(residues_.begin(), residues_.end(),
                      [](bool b) { return b; });
}

std::optional<std::uint64_t> UPSet::min_element() const {
  for (std::uint64_t n = 0; n < transient_ + period_; ++n)
    if (contains(n)) return n;
  return std::nullopt;
}

static UPSet pointwise(const UPSet& a, const UPSet& b, bool (*op)(bool, bool)) {
  std::uint64_t t = std::max(a.transient(), b.transient());
  std::uint64_t p = std::lcm(a.period(), b.period());
  std::vector<bool> head(t), res(p);
  for (std::uint64_t n = 0; n < t; ++n) head[n] = op(a.contains(n), b.contains(n));
  for (std::uint64_t r = 0; r < p; ++r)
    res[r] = op(a.residues()[r % a.period()], b.residues()[r % b.period()]);
  return UPSet::from_masks(t, std::move(head), std::move(res));
}

UPSet unite(const UPSet& a, const UPSet& b) {
  return pointwise(a, b, [](bool x, bool y) { return x || y; });
}

UPSet intersect(const UPSet& a, const UPSet& b) {
  return pointwise(a, b, [](bool x, bool y) { return x && y; });
}

UPSet subtract(const UPSet& a, const UPSet& b) {
  return pointwise(a, b, [](bool x, bool y) { return x && !y; });
}

UPSet complement(const UPSet& a) {
  return pointwise(a, a, [](bool x, bool) { return !x; });
}

UPSet shift_down(const UPSet& a, std::uint64_t amount) {
  std::uint64_t t = a.transient() > amount ? a.transient() - amount : 0;
  std::uint64_t p = a.period();
  std::vector<bool> head(t), res(p);
  for (std::uint64_t n = 0; n < t; ++n) head[n] = a.contains(n + amount);
  for (std::uint64_t r = 0; r < p; ++r) res[r] = a.residues()[(r + amount) % p];
  return UPSet::from_masks(t, std::move(head), std::move(res));
}

UPSet combine(const UPSet& a, const UPSet& b, SetOp op) {
  switch (op) {
    case SetOp::Union: return unite(a, b);
    case SetOp::Intersection: return intersect(a, b);
    case SetOp::Difference: return subtract(a, b);
    case SetOp::ComplementOfFirst: return complement(a);
  }
  throw Error(Errc::BadParameters, "unknown set operation");
}

Classification classify(const UPSet& s) {
  Classification c;
  c.min = s.min_element();
  if (s.is_finite()) {
    for (std::uint64_t n = 0; n < s.transient(); ++n)
      if (s.contains(n)) c.elements.push_back(n);
    c.kind = c.elements.empty() ? SetClass::Empty : SetClass::Finite;
    return c;
  }
  if (complement(s).is_finite()) {
    c.kind = SetClass::Cofinite;
    for (std::uint64_t n = 0; n < s.transient(); ++n)
      if (!s.contains(n)) c.elements.push_back(n);
    return c;
  }
  c.kind = SetClass::Mixed;
  return c;
}

std::string UPSet::to_string() const {
  std::ostringstream os;
  os << "UP(t=" << transient_ << ";p=" << period_ << ";head={";
  bool first = true;
  for (std::uint32_t n = 0; n < transient_; ++n)
    if (head_[n]) {
      if (!first) os << ",";
      os << n;
      first = false;
    }
  os << "};res={";
  first = true;
  for (std::uint32_t r = 0; r < period_; ++r)
    if (residues_[r]) {
      if (!first) os << ",";
      os << r;
      first = false;
    }
  os << "})";
  return os.str();
}

namespace {

struct LiteralParser {
  const std::string& text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw Error(Errc::ParseError,
                what + " at offset " + std::to_string(pos) + " in set literal");
  }
  void ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  void expect(const std::string& tok) {
    ws();
    if (text.compare(pos, tok.size(), tok) != 0) fail("expected '" + tok + "'");
    pos += tok.size();
  }
  std::uint64_t number() {
    ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a number");
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + (text[pos++] - '0');
    return v;
  }
  std::vector<std::uint64_t> number_set() {
    std::vector<std::uint64_t> out;
    expect("{");
    ws();
    if (pos < text.size() && text[pos] == '}') {
      ++pos;
      return out;
    }
    out.push_back(number());
    ws();
    while (pos < text.size() && text[pos] == ',') {
      ++pos;
      out.push_back(number());
      ws();
    }
    expect("}");
    return out;
  }
};

}  // namespace

UPSet UPSet::parse(const std::string& text) {
  LiteralParser p{text};
  p.expect("UP");
  p.expect("(");
  p.expect("t");
  p.expect("=");
  std::uint64_t t = p.number();
  p.expect(";");
  p.expect("p");
  p.expect("=");
  std::uint64_t per = p.number();
  p.expect(";");
  p.expect("head");
  p.expect("=");
  auto head = p.number_set();
  p.expect(";");
  p.expect("res");
  p.expect("=");
  auto res = p.number_set();
  p.expect(")");
  p.ws();
  if (p.pos != text.size()) p.fail("trailing characters");
  if (per == 0) p.fail("period must be positive");
  try {
    return UPSet::from(t, per, head, res);
  } catch (const Error& e) {
    throw Error(Errc::ParseError, std::string(e.what()) + " in set literal");
  }
}

}  // namespace synorder
