#include "doctest.h"

#include <random>

#include "synorder/sync_automaton.hpp"
#include "synorder/upset.hpp"
#include "support/generators.hpp"

using namespace synorder;
using synorder::testing::Rng;

TEST_CASE("membership follows the head and residue pattern") {
  UPSet evens = UPSet::residue_class(0, 2, 0);
  CHECK(evens.contains(4));
  CHECK(!evens.contains(7));
  UPSet s = UPSet::from(3, 2, {1}, {0});
  CHECK(s.contains(1));
  CHECK(!s.contains(0));
  CHECK(!s.contains(3));
  CHECK(s.contains(4));
}

TEST_CASE("boolean operations") {
  UPSet evens = UPSet::residue_class(0, 2, 0);
  UPSet odds = complement(evens);
  CHECK(odds == UPSet::residue_class(0, 2, 1));
  CHECK(unite(evens, odds) == UPSet::naturals());
  UPSet sixes = intersect(UPSet::residue_class(0, 2, 0),
                          UPSet::residue_class(0, 3, 0));
  for (std::uint64_t n = 0; n <= 40; ++n)
    CHECK(sixes.contains(n) == (n % 6 == 0));
}

TEST_CASE("combine matches pointwise booleans exhaustively") {
  Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    UPSet a = testing::random_upset(rng);
    UPSet b = testing::random_upset(rng);
    std::uint64_t bound =
        3 * std::lcm(a.period(), b.period()) + a.transient() + b.transient();
    for (std::uint64_t n = 0; n <= bound; ++n) {
      CHECK(unite(a, b).contains(n) == (a.contains(n) || b.contains(n)));
      CHECK(intersect(a, b).contains(n) == (a.contains(n) && b.contains(n)));
      CHECK(subtract(a, b).contains(n) == (a.contains(n) && !b.contains(n)));
      CHECK(complement(a).contains(n) == !a.contains(n));
    }
    CHECK(combine(a, b, SetOp::Union) == unite(a, b));
    CHECK(combine(a, b, SetOp::ComplementOfFirst) == complement(a));
  }
}

TEST_CASE("canonical form is a fixpoint and identifies equal sets") {
  // the same set presented with a bloated period and transient
  UPSet bloated = UPSet::from(4, 6, {0, 2}, {0, 2, 4});
  UPSet plain = UPSet::residue_class(0, 2, 0);
  CHECK(bloated == plain);
  CHECK(bloated.period() == 2);
  CHECK(bloated.transient() == 0);
  Rng rng(102);
  for (int trial = 0; trial < 50; ++trial) {
    UPSet s = testing::random_upset(rng);
    UPSet again = UPSet::from_masks(s.transient(),
                                    s.head(), s.residues());
    CHECK(again == s);
  }
}

TEST_CASE("classification") {
  auto fin = classify(UPSet::from(2, 1, {0, 1}, {}));
  CHECK(fin.kind == SetClass::Finite);
  CHECK(fin.elements == std::vector<std::uint64_t>{0, 1});
  CHECK(fin.min == 0);

  auto mixed = classify(UPSet::residue_class(0, 2, 0));
  CHECK(mixed.kind == SetClass::Mixed);
  CHECK(mixed.min == 0);

  auto all = classify(UPSet::naturals());
  CHECK(all.kind == SetClass::Cofinite);
  CHECK(all.elements.empty());
  CHECK(all.min == 0);

  CHECK(classify(UPSet()).kind == SetClass::Empty);
  CHECK(!classify(UPSet()).min.has_value());
}

TEST_CASE("literal syntax round trip") {
  UPSet s = UPSet::from(3, 2, {1}, {0});
  CHECK(s.to_string() == "UP(t=3;p=2;head={1};res={0})");
  CHECK(UPSet::parse(s.to_string()) == s);
  CHECK(UPSet::parse("UP(t=0;p=2;head={};res={0})") ==
        UPSet::residue_class(0, 2, 0));
  CHECK_THROWS_AS(UPSet::parse("UP(t=0;p=0;head={};res={})"), Error);
  CHECK_THROWS_AS(UPSet::parse("UP(t=1;p=1;head={})"), Error);
  Rng rng(103);
  for (int trial = 0; trial < 40; ++trial) {
    UPSet t = testing::random_upset(rng);
    CHECK(UPSet::parse(t.to_string()) == t);
  }
}

TEST_CASE("unary automaton round trip") {
  Rng rng(104);
  for (int trial = 0; trial < 60; ++trial) {
    UPSet s = testing::random_upset(rng);
    CHECK(to_upset(from_upset(s)) == s);
  }
}

TEST_CASE("shift_down") {
  UPSet s = UPSet::from(0, 3, {}, {1});
  UPSet d = shift_down(s, 2);
  for (std::uint64_t n = 0; n <= 30; ++n) CHECK(d.contains(n) == s.contains(n + 2));
}
