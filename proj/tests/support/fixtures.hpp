#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "synorder/algebra.hpp"
#include "synorder/structured.hpp"
#include "synorder/sync_automaton.hpp"

namespace synorder::testing {

// 0 < 1 < 2 < ...
inline SyncAutomaton make_omega() {
  SyncAutomaton a(2);
  int fin = a.add_state(true);
  a.add_transition(0, 3, 0);
  a.add_transition(0, 2, fin);
  a.add_transition(fin, 2, fin);
  return a;
}

// ... < 2 < 1 < 0
inline SyncAutomaton make_omega_star() {
  SyncAutomaton a(2);
  int fin = a.add_state(true);
  a.add_transition(0, 3, 0);
  a.add_transition(0, 1, fin);
  a.add_transition(fin, 1, fin);
  return a;
}

// exactly {(1,0), (2,0), (2,1)}, the chain 2 < 1 < 0
inline SyncAutomaton make_three() {
  SyncAutomaton a(2);
  int q1 = a.add_state(false);
  int q2 = a.add_state(true);
  int q3 = a.add_state(true);
  a.add_transition(0, 3, q1);
  a.add_transition(0, 1, q3);
  a.add_transition(q3, 1, q2);
  a.add_transition(q1, 1, q2);
  return a;
}

// exactly {(2m, 2m+1)}
inline SyncAutomaton make_evenodd() {
  SyncAutomaton a(2);
  int odd = a.add_state(false);
  int fin = a.add_state(true);
  a.add_transition(0, 3, odd);
  a.add_transition(odd, 3, 0);
  a.add_transition(0, 2, fin);
  return a;
}

// every pair of naturals
inline SyncAutomaton make_full() {
  SyncAutomaton a(2);
  a.set_final(0, true);
  int l = a.add_state(true);
  int r = a.add_state(true);
  a.add_transition(0, 3, 0);
  a.add_transition(0, 1, l);
  a.add_transition(l, 1, l);
  a.add_transition(0, 2, r);
  a.add_transition(r, 2, r);
  return a;
}

inline UPSet evens() { return UPSet::residue_class(0, 2, 0); }
inline UPSet odds() { return UPSet::residue_class(0, 2, 1); }

// the natural order restricted to the even numbers
inline SyncAutomaton make_evens_order() {
  return natural_order_on(evens(), Direction::Ascending);
}

inline std::string fixture_path(const std::string& name) {
  return std::string(SYNORDER_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace synorder::testing
