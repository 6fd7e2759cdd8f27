#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "lls/lls.hpp"

using lls::Congruence;
using lls::Partition;

TEST_CASE("congruence construction validates compatibility") {
  auto t4 = testkit::load_fixture("table4");
  CHECK_NOTHROW(
      Congruence(t4, testkit::blocks_by_names(t4, {{"x", "b"}, {"y", "c"}})));
  CHECK_THROWS_AS(
      Congruence(t4,
                 testkit::blocks_by_names(t4, {{"x", "y"}, {"b"}, {"c"}})),
      lls::PreconditionError);
  CHECK_THROWS_AS(Congruence(t4, Partition::singletons(3)),
                  std::invalid_argument);

  auto viol = lls::congruence_violation(
      t4, testkit::blocks_by_names(t4, {{"x", "y"}, {"b"}, {"c"}}));
  REQUIRE(viol.has_value());
  CHECK(!viol->left);  // x*a = b but y*a = c
}

TEST_CASE("principal congruences") {
  auto t4 = testkit::load_fixture("table4");
  CHECK(lls::principal_congruence(t4, 0, 1) ==
        testkit::blocks_by_names(t4, {{"x", "y"}, {"b", "c"}}));
  CHECK(lls::principal_congruence(t4, 0, 2) ==
        testkit::blocks_by_names(t4, {{"x", "b"}, {"y"}, {"c"}}));
  CHECK(lls::principal_congruence(t4, 0, 0) == Partition::singletons(4));

  // merging x with e drags f's products along only as far as needed
  auto t3 = testkit::load_fixture("table3");
  CHECK(lls::principal_congruence(t3, 0, 1) ==
        testkit::blocks_by_names(t3, {{"x", "e"}, {"f"}, {"g"}, {"h"}}));
}

TEST_CASE("congruences of small standard semigroups") {
  // in a zero semigroup every partition is compatible: Bell numbers
  CHECK(lls::enumerate_congruences(testkit::zero_semigroup(2)).size() == 2);
  CHECK(lls::enumerate_congruences(testkit::zero_semigroup(3)).size() == 5);
  CHECK(lls::enumerate_congruences(testkit::zero_semigroup(4)).size() == 15);
  // same for a left zero semigroup
  CHECK(lls::enumerate_congruences(testkit::left_zero(4)).size() == 15);
  // the one element semigroup has just the identity relation
  CHECK(lls::enumerate_congruences(testkit::chain_semilattice(1)).size() == 1);
  // congruences of Z_4 = subgroups: 1, Z_2, Z_4
  CHECK(lls::enumerate_congruences(testkit::cyclic_group(4)).size() == 3);
}

TEST_CASE("congruence lattice of table 4") {
  auto t4 = testkit::load_fixture("table4");
  auto all = lls::enumerate_congruences(t4);
  CHECK(all.size() == 9);

  // every reported partition really is compatible
  for (const auto& c : all) {
    CHECK(!lls::congruence_violation(t4, c.partition()).has_value());
  }

  // identity and universal are present
  auto contains = [&](const Partition& p) {
    return std::any_of(all.begin(), all.end(), [&](const Congruence& c) {
      return c.partition() == p;
    });
  };
  CHECK(contains(Partition::singletons(4)));
  CHECK(contains(Partition::universal(4)));
  // the Rees congruence of the ideal {b, c} and the left zero kernel
  auto rees = testkit::blocks_by_names(t4, {{"b", "c"}, {"x"}, {"y"}});
  auto kernel = testkit::blocks_by_names(t4, {{"x", "b"}, {"y", "c"}});
  CHECK(contains(rees));
  CHECK(contains(kernel));
  CHECK(Partition::meet(rees, kernel) == Partition::singletons(4));

  // closed under pairwise join, and joins stay in the list
  for (const auto& a : all) {
    for (const auto& b : all) {
      CHECK(contains(Partition::join(a.partition(), b.partition())));
    }
  }

  // deterministic order: block count descending, then encoding
  for (std::size_t i = 1; i < all.size(); ++i) {
    const auto& prev = all[i - 1].partition();
    const auto& cur = all[i].partition();
    bool ordered = prev.block_count() > cur.block_count() ||
                   (prev.block_count() == cur.block_count() &&
                    prev.encoding() < cur.encoding());
    CHECK(ordered);
  }
  CHECK(lls::enumerate_congruences(t4) == all);  // reproducible
}

TEST_CASE("congruence enumeration is exhaustive at order 3") {
  // brute force over all partitions of a three element table
  auto exhaustive = [](const lls::CayleyTable& t) {
    std::vector<Partition> out;
    const std::vector<std::vector<std::vector<int>>> partitions = {
        {{0}, {1}, {2}}, {{0, 1}, {2}}, {{0, 2}, {1}},
        {{0}, {1, 2}},   {{0, 1, 2}},
    };
    for (const auto& blocks : partitions) {
      Partition p = Partition::from_blocks(3, blocks);
      if (!lls::congruence_violation(t, p).has_value()) {
        out.push_back(p);
      }
    }
    return out;
  };
  lls::EnumerationOptions opt;
  opt.up_to_iso = true;
  for (const auto& t : lls::enumerate_semigroups(3, opt)) {
    auto brute = exhaustive(t);
    auto fast = lls::enumerate_congruences(t);
    REQUIRE(brute.size() == fast.size());
    for (const auto& p : brute) {
      CHECK(std::any_of(fast.begin(), fast.end(), [&](const Congruence& c) {
        return c.partition() == p;
      }));
    }
  }
}

TEST_CASE("subdirect irreducibility") {
  CHECK(lls::is_subdirectly_irreducible(testkit::zero_semigroup(2)));
  CHECK(lls::is_subdirectly_irreducible(testkit::left_zero(2)));
  CHECK(!lls::is_subdirectly_irreducible(testkit::load_fixture("table4")));
  CHECK(!lls::is_subdirectly_irreducible(testkit::chain_semilattice(1)));
  // zero semigroups of order 3+ decompose: distinct pair merges meet in
  // the identity relation
  CHECK(!lls::is_subdirectly_irreducible(testkit::zero_semigroup(3)));
  CHECK(!lls::is_subdirectly_irreducible(testkit::zero_semigroup(4)));
  CHECK(!lls::is_subdirectly_irreducible(testkit::zero_semigroup(5)));
  // Z_4 has the unique minimal congruence from the subgroup of order 2
  CHECK(lls::is_subdirectly_irreducible(testkit::cyclic_group(4)));
  CHECK(!lls::is_subdirectly_irreducible(testkit::cyclic_group(6)));
}

TEST_CASE("least semilattice congruence") {
  auto t3 = testkit::load_fixture("table3");
  auto eta3 = lls::least_semilattice_congruence(t3);
  CHECK(eta3.partition() ==
        testkit::blocks_by_names(t3, {{"x", "e", "f"}, {"g", "h"}}));

  CHECK(lls::least_semilattice_congruence(testkit::chain_semilattice(4))
            .partition() == Partition::singletons(4));
  CHECK(lls::least_semilattice_congruence(testkit::left_zero(3)).partition() ==
        Partition::universal(3));
  CHECK(lls::least_semilattice_congruence(testkit::cyclic_group(4))
            .partition() == Partition::universal(4));

  // agrees with eta and tau on the left legal fixtures
  for (const char* stem : {"table1", "table3", "table4", "table5"}) {
    auto t = testkit::load_fixture(stem);
    auto least = lls::least_semilattice_congruence(t).partition();
    CHECK(least == lls::eta_relation(t).relation);
    CHECK(least == lls::tau_relation(t).relation);
  }
}

TEST_CASE("congruence routines enforce the order bound") {
  auto big = testkit::left_zero(9);
  CHECK_THROWS_AS(lls::enumerate_congruences(big), lls::SizeError);
  CHECK_THROWS_AS(lls::is_subdirectly_irreducible(big), lls::SizeError);
  CHECK_THROWS_AS(lls::least_semilattice_congruence(big), lls::SizeError);
  // the bound is a parameter
  CHECK(lls::least_semilattice_congruence(big, 9).partition() ==
        Partition::universal(9));
}
