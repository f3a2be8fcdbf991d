#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "synorder/error.hpp"
#include "synorder/upset.hpp"

namespace synorder {

// Composition of two binary relations passes through arity 3; one spare.
inline constexpr int kMaxArity = 4;

// A letter is a nonempty support vector over the coordinates, packed as a
// bitmask with bit i-1 holding coordinate i. The letter (1,0) is mask 1.
using Letter = unsigned;

Letter full_support(int arity);
bool letter_valid(Letter a, int arity);
// Drop coordinate `position` (1-based) from the mask.
Letter contract_bit(Letter a, int position);
// Insert a coordinate with the given value at `position` (1-based).
Letter insert_bit(Letter a, int position, bool value);

// The unique factorization of a tuple of naturals into support letters:
// the k-th letter carries the coordinates that are still at least k.
// The zero tuple encodes as the empty word.
std::vector<Letter> encode(const std::vector<std::uint64_t>& vec);

// Deterministic automaton over support-vector letters. Supports never grow
// along a path, so every accepted word is the encoding of a tuple and the
// recognized language is a relation on tuples of naturals.
class SyncAutomaton {
 public:
  explicit SyncAutomaton(int arity);  // one non-final state, empty relation

  int arity() const { return arity_; }
  int state_count() const { return static_cast<int>(next_.size()); }
  int initial() const { return initial_; }
  bool is_final(int q) const { return finals_[q]; }
  // -1 when the transition is undefined
  int step(int q, Letter a) const { return next_[q][a]; }

  bool accepts(const std::vector<std::uint64_t>& vec) const;

  int add_state(bool final_state);
  void set_final(int q, bool f) { finals_[q] = f; }
  void set_initial(int q) { initial_ = q; }
  void add_transition(int from, Letter a, int to);

  // transitions from q, sorted by letter
  std::vector<std::pair<Letter, int>> transitions_from(int q) const;

  bool operator==(const SyncAutomaton&) const = default;

 private:
  int arity_;
  int initial_ = 0;
  std::vector<bool> finals_;
  std::vector<std::array<int, 1 << kMaxArity>> next_;
};

enum class BoolOp { Union, Intersection };

SyncAutomaton product(const SyncAutomaton& a, const SyncAutomaton& b,
                      BoolOp op);
// Complement relative to the encodings of tuples, not to all letter words.
SyncAutomaton complement(const SyncAutomaton& a);
// Existential projection of one coordinate; arity drops by one.
SyncAutomaton project(const SyncAutomaton& a, int coordinate);
// Inverse of projection: a fresh unconstrained coordinate at `position`.
SyncAutomaton cylindrify(const SyncAutomaton& a, int position);

// Entry-support refinement, trim, minimization and breadth-first
// renumbering. Two equivalent canonical automata are equal as values.
SyncAutomaton canonicalized(const SyncAutomaton& a);

bool is_empty(const SyncAutomaton& a);
bool includes(const SyncAutomaton& a, const SyncAutomaton& b);  // b subset of a
bool equivalent(const SyncAutomaton& a, const SyncAutomaton& b);

enum class Decision { IsEmpty, Includes, Equivalent };
bool decide(const SyncAutomaton& a, const SyncAutomaton* b, Decision query);

// Conversions between unary automata and ultimately periodic sets.
UPSet to_upset(const SyncAutomaton& a);  // arity 1
SyncAutomaton from_upset(const UPSet& s);

// Lengths d such that reading `step` d times from `from` lands on a final
// state (resp. on `target`). Length 0 is included when `from` qualifies.
UPSet accepted_lengths(const SyncAutomaton& a, int from, Letter step);
UPSet lengths_reaching(const SyncAutomaton& a, int from, Letter step,
                       int target);

// Rejects letters whose support grows along any reachable path.
void validate(const SyncAutomaton& a);

SyncAutomaton load_automaton_json(const std::string& text);
std::string dump_automaton_json(const SyncAutomaton& a);
std::string to_dot(const SyncAutomaton& a);

}  // namespace synorder
