#include "doctest.h"

#include "synorder/oracle.hpp"
#include "support/fixtures.hpp"

using namespace synorder;
using namespace synorder::testing;

TEST_CASE("pair enumeration") {
  auto pairs = enumerate_pairs(make_omega(), 3);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> expected{
      {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  CHECK(pairs == expected);
  CHECK(enumerate_pairs(make_three(), 5) ==
        std::vector<std::pair<std::uint64_t, std::uint64_t>>{
            {1, 0}, {2, 0}, {2, 1}});
  CHECK(enumerate_pairs(SyncAutomaton(2), 10).empty());
}

TEST_CASE("pair tables match plain acceptance") {
  PairTable t = pair_table(make_evenodd(), 25);
  for (std::uint64_t k = 0; k <= 25; ++k)
    for (std::uint64_t l = 0; l <= 25; ++l)
      CHECK(t.at(k, l) == make_evenodd().accepts({k, l}));
}

TEST_CASE("support membership") {
  CHECK(support_contains(make_three(), 0));
  CHECK(support_contains(make_three(), 2));
  CHECK(!support_contains(make_three(), 3));
  CHECK(support_contains(make_evenodd(), 101));
}

TEST_CASE("longest chains on prefixes") {
  CHECK(longest_chain_prefix(make_evenodd(), 100) == 2);
  CHECK(longest_chain_prefix(make_omega(), 10) == 11);
  CHECK(longest_chain_prefix(SyncAutomaton(2), 10) == 0);
  CHECK(longest_chain_prefix(make_three(), 10) == 3);
  CHECK_THROWS_AS(longest_chain_prefix(make_full(), 10), Error);
}

TEST_CASE("direction-restricted chains") {
  CHECK(longest_directed_chain_prefix(make_omega(), 20, Direction::Ascending) ==
        21);
  CHECK(longest_directed_chain_prefix(make_omega(), 20,
                                      Direction::Descending) == 1);
  CHECK(longest_directed_chain_prefix(make_omega_star(), 20,
                                      Direction::Ascending) == 1);
}

TEST_CASE("maximum antichains on prefixes") {
  CHECK(max_antichain_prefix(make_evenodd(), 10) == 6);
  CHECK(max_antichain_prefix(make_omega(), 50) == 1);
  CHECK(max_antichain_prefix(make_evens_order(), 9) == 1);
}

TEST_CASE("verification reports") {
  CHECK(verify_against_brute_force(make_omega(), 100).empty());
  CHECK(verify_against_brute_force(make_evenodd(), 100).empty());
  CHECK(verify_against_brute_force(make_full(), 20).empty());
  CHECK(divergences_to_json({}) == "[]\n");
  auto divs = std::vector<Divergence>{{"linear", "(0,2)", "comparable", "incomparable"}};
  CHECK(divergences_to_json(divs).find("\"check\":\"linear\"") != std::string::npos);
}
