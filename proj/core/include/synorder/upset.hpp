#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "synorder/error.hpp"

namespace synorder {

// Ultimately periodic subset of the naturals: an explicit pattern on
// [0, transient) followed by a residue pattern modulo the period.
// Membership in the periodic zone keys on n mod period. Every instance is
// canonical (minimal period, then minimal transient for that period), so
// extensional equality is field equality.
class UPSet {
 public:
  UPSet();  // the empty set

  static UPSet from(std::uint64_t transient, std::uint64_t period,
                    const std::vector<std::uint64_t>& head,
                    const std::vector<std::uint64_t>& residues);
  static UPSet from_masks(std::uint64_t transient, std::vector<bool> head,
                          std::vector<bool> residues);
  static UPSet finite(const std::vector<std::uint64_t>& elements);
  static UPSet below(std::uint64_t bound);  // {0, ..., bound-1}
  static UPSet naturals();
  static UPSet positives();
  // {x : x >= start and x ≡ residue (mod modulus)}
  static UPSet residue_class(std::uint64_t start, std::uint64_t modulus,
                             std::uint64_t residue);

  bool contains(std::uint64_t n) const;
  std::uint64_t transient() const { return transient_; }
  std::uint64_t period() const { return period_; }
  const std::vector<bool>& head() const { return head_; }
  const std::vector<bool>& residues() const { return residues_; }

  bool empty() const;
  bool is_finite() const;  // residue pattern all false
  std::optional<std::uint64_t> min_element() const;

  bool operator==(const UPSet&) const = default;

  // Literal syntax: UP(t=<nat>;p=<nat>;head={n,...};res={n,...})
  std::string to_string() const;
  static UPSet parse(const std::string& text);

 private:
  std::uint32_t transient_ = 0;
  std::uint32_t period_ = 1;
  std::vector<bool> head_;      // size transient_
  std::vector<bool> residues_;  // size period_
  void canonicalize();
};

UPSet unite(const UPSet& a, const UPSet& b);
UPSet intersect(const UPSet& a, const UPSet& b);
UPSet subtract(const UPSet& a, const UPSet& b);
UPSet complement(const UPSet& a);
// {d : a.contains(d + amount)}
UPSet shift_down(const UPSet& a, std::uint64_t amount);

enum class SetOp { Union, Intersection, Difference, ComplementOfFirst };
UPSet combine(const UPSet& a, const UPSet& b, SetOp op);

enum class SetClass { Empty, Finite, Cofinite, Mixed };

struct Classification {
  SetClass kind;
  // the members when finite, the missing elements when cofinite
  std::vector<std::uint64_t> elements;
  std::optional<std::uint64_t> min;
};

Classification classify(const UPSet& s);

}  // namespace synorder
