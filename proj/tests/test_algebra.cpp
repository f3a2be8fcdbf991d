#include "doctest.h"

#include "synorder/algebra.hpp"
#include "synorder/oracle.hpp"
#include "synorder/order_type.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace synorder;
using namespace synorder::testing;

TEST_CASE("inverse") {
  SyncAutomaton w = make_omega(), w_star = make_omega_star();
  CHECK(equivalent(inverse(w), w_star));
  CHECK(equivalent(inverse(inverse(make_evenodd())), make_evenodd()));
  CHECK(inverse(make_evenodd()).accepts({3, 2}));
  PairTable t = pair_table(make_evenodd(), 20);
  PairTable ti = pair_table(inverse(make_evenodd()), 20);
  for (std::uint64_t k = 0; k <= 20; ++k)
    for (std::uint64_t l = 0; l <= 20; ++l)
      CHECK(ti.at(k, l) == t.at(l, k));
}

TEST_CASE("support") {
  CHECK(support(make_omega()) == UPSet::naturals());
  CHECK(support(make_evenodd()) == UPSet::naturals());
  CHECK(support(make_three()) == UPSet::finite({0, 1, 2}));
  CHECK(support(SyncAutomaton(2)).empty());
}

TEST_CASE("disjoint sum") {
  SyncAutomaton three2 = scale(make_three(), 2, 0);
  SyncAutomaton w_odd = scale(make_omega(), 2, 1);
  SyncAutomaton sum = sum_disjoint(three2, w_odd);
  PairTable t = pair_table(sum, 40);
  // membership: the scaled three-chain, the odd ascending part, and every
  // cross pair from {0,2,4} to the odds
  for (std::uint64_t k = 0; k <= 40; ++k)
    for (std::uint64_t l = 0; l <= 40; ++l) {
      bool in_three = (k == 2 && l == 0) || (k == 4 && l == 0) || (k == 4 && l == 2);
      bool in_w = k % 2 == 1 && l % 2 == 1 && k < l;
      bool cross = (k == 0 || k == 2 || k == 4) && l % 2 == 1;
      CHECK(t.at(k, l) == (in_three || in_w || cross));
    }
  CHECK(equivalent(sum_disjoint(make_omega(), SyncAutomaton(2)), make_omega()));
  CHECK_THROWS_AS(sum_disjoint(make_omega(), make_omega()), Error);
}

TEST_CASE("scaling") {
  SyncAutomaton s = scale(make_omega(), 2, 0);
  CHECK(s.accepts({0, 2}));
  CHECK(!s.accepts({1, 3}));
  CHECK(equivalent(scale(make_omega(), 1, 0), make_omega()));
  CHECK_THROWS_AS(scale(make_omega(), 2, 2), Error);
  PairTable t = pair_table(scale(make_evenodd(), 3, 1), 40);
  PairTable base = pair_table(make_evenodd(), 13);
  for (std::uint64_t k = 0; k <= 40; ++k)
    for (std::uint64_t l = 0; l <= 40; ++l) {
      bool expected = k % 3 == 1 && l % 3 == 1 && base.at(k / 3, l / 3);
      CHECK(t.at(k, l) == expected);
    }
}

TEST_CASE("trace of the natural order") {
  SyncAutomaton ev = make_evens_order();
  CHECK(ev.accepts({2, 6}));
  CHECK(!ev.accepts({6, 2}));
  CHECK(!ev.accepts({1, 3}));
  CHECK(equivalent(natural_order_on(UPSet::naturals(), Direction::Ascending),
                   make_omega()));
  CHECK(equivalent(natural_order_on(evens(), Direction::Descending),
                   inverse(ev)));
  PairTable t = pair_table(ev, 50);
  for (std::uint64_t k = 0; k <= 50; ++k)
    for (std::uint64_t l = 0; l <= 50; ++l)
      CHECK(t.at(k, l) == (k % 2 == 0 && l % 2 == 0 && k < l));
}

TEST_CASE("completion by the complement of the support") {
  SyncAutomaton done = complete_with(make_evens_order(), Direction::Ascending);
  CHECK(support(done) == UPSet::naturals());
  PairTable t = pair_table(done, 40);
  for (std::uint64_t k = 0; k <= 40; ++k)
    for (std::uint64_t l = 0; l <= 40; ++l) {
      bool within_evens = k % 2 == 0 && l % 2 == 0 && k < l;
      bool within_odds = k % 2 == 1 && l % 2 == 1 && k < l;
      bool cross = k % 2 == 0 && l % 2 == 1;
      CHECK(t.at(k, l) == (within_evens || within_odds || cross));
    }
  CHECK_THROWS_AS(complete_with(make_omega(), Direction::Ascending), Error);
  // a cofinite but proper support complement is infinite enough
  SyncAutomaton t3 = complete_with(make_three(), Direction::Ascending);
  CHECK(support(t3) == UPSet::naturals());
}

TEST_CASE("collapse of a finite support complement") {
  // delete the element 1 from the natural order
  UPSet keep = complement(UPSet::finite({1}));
  SyncAutomaton gap = natural_order_on(keep, Direction::Ascending);
  SyncAutomaton packed = collapse_finite_complement(gap);
  CHECK(support(packed) == UPSet::naturals());
  CHECK(equivalent(packed, make_omega()));
  CHECK(equivalent(collapse_finite_complement(make_omega()), make_omega()));
  CHECK_THROWS_AS(collapse_finite_complement(make_evens_order()), Error);
}

TEST_CASE("composition") {
  SyncAutomaton ww = compose(make_omega(), make_omega());
  PairTable t = pair_table(ww, 50);
  for (std::uint64_t x = 0; x <= 50; ++x)
    for (std::uint64_t z = 0; z <= 50; ++z)
      CHECK(t.at(x, z) == (z >= x + 2));
  CHECK(is_empty(compose(make_omega(), SyncAutomaton(2))));
  CHECK(is_empty(compose(make_evenodd(), make_evenodd())));
}

TEST_CASE("composition agrees with the pointwise definition") {
  Rng rng(401);
  for (int trial = 0; trial < 8; ++trial) {
    SyncAutomaton a = random_binary_automaton(rng, 5);
    SyncAutomaton b = random_binary_automaton(rng, 5);
    PairTable ta = pair_table(a, 60), tb = pair_table(b, 60);
    PairTable tc = pair_table(compose(a, b), 30);
    for (std::uint64_t x = 0; x <= 30; ++x)
      for (std::uint64_t z = 0; z <= 30; ++z) {
        bool expected = false;
        for (std::uint64_t y = 0; y <= 60 && !expected; ++y)
          expected = ta.at(x, y) && tb.at(y, z);
        REQUIRE(tc.at(x, z) == expected);
      }
  }
}

TEST_CASE("sum and scale preserve order types") {
  LinearOrderCase a = build_poor_order({omega(), fin(2)});
  LinearOrderCase b = build_poor_order({fin(1), omega_star()});
  SyncAutomaton sa = scale(a.automaton, 2, 0);
  SyncAutomaton sb = scale(b.automaton, 2, 1);
  PoorSum sum_type = order_type(sum_disjoint(sa, sb));
  PoorSum expected;
  for (auto t : a.expected.terms) expected.terms.push_back(t);
  for (auto t : b.expected.terms) expected.terms.push_back(t);
  CHECK(sum_type == reduce(expected));

  for (std::uint64_t m : {2ull, 3ull})
    for (std::uint64_t r = 0; r < m; ++r)
      CHECK(order_type(scale(a.automaton, m, r)) == a.expected);
}
