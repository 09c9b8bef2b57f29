#include <doctest.h>

#include <random>

#include "arrangeclass/core.hpp"
#include "arrangeclass/errors.hpp"
#include "oracles.hpp"

using namespace arrangeclass;

TEST_CASE("apply_pair reflects inside the segment only") {
  CHECK(apply_pair(Pair(2, 4), 3) == 3);
  CHECK(apply_pair(Pair(2, 4), 2) == 4);
  CHECK(apply_pair(Pair(2, 4), 4) == 2);
  CHECK(apply_pair(Pair(1, 3), 5) == 5);
}

TEST_CASE("pair masks and disjointness") {
  CHECK(disjoint(Pair(1, 2), Pair(3, 4)));
  CHECK_FALSE(disjoint(Pair(1, 3), Pair(3, 4)));
  CHECK_FALSE(disjoint(Pair(2, 4), Pair(2, 4)));
  CHECK(Pair(2, 4).multiplicity() == 3);
  CHECK(Pair(2, 4).shifted(1) == Pair(3, 5));
}

TEST_CASE("permutations") {
  const auto id = Permutation::identity(5);
  const auto j = Permutation::reversal(5);
  CHECK(j(1) == 5);
  CHECK(j(3) == 3);
  CHECK(j.after(j) == id);
  CHECK(id.then(Pair(1, 2)).images() == std::vector<int>{2, 1, 3, 4, 5});
  const auto p = Permutation::from_images(std::vector<int>{3, 1, 2});
  CHECK(p.after(p.inverse()) == Permutation::identity(3));
  CHECK_THROWS_AS(Permutation::from_images(std::vector<int>{1, 1}), InputError);
}

TEST_CASE("composite permutation") {
  CHECK(composite_permutation(LefschetzList(2, {{1, 2}})).images() == std::vector<int>{2, 1});
  CHECK(composite_permutation(LefschetzList(4, {})) == Permutation::identity(4));

  const LefschetzList five = LefschetzList::parse("l=5 (2,3)(2,4)(4,5)(1,3)(3,4)");
  const bool is_reversal = composite_permutation(five) == Permutation::reversal(5);
  CHECK(check_uip(five) == (is_reversal && oracle::unique_intersections(five)));
  CHECK_FALSE(check_uip(five));
}

TEST_CASE("unique intersection property") {
  CHECK(check_uip(LefschetzList::parse("l=3 (1,2)(2,3)(1,2)")));
  CHECK_FALSE(check_uip(LefschetzList::parse("l=3 (1,2)(1,2)(1,2)")));
  CHECK(check_uip(LefschetzList::parse("l=4 (1,4)")));
  CHECK_FALSE(check_uip(LefschetzList::parse("l=3 (1,2)(2,3)")));
}

TEST_CASE("check_uip agrees with pairwise crossing counts") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int l = 2 + static_cast<int>(rng() % 5);
    std::vector<Pair> pairs;
    const int p = static_cast<int>(rng() % 8);
    for (int k = 0; k < p; ++k) {
      const int a = 1 + static_cast<int>(rng() % static_cast<unsigned>(l - 1));
      const int b = a + 1 + static_cast<int>(rng() % static_cast<unsigned>(l - a));
      pairs.emplace_back(a, b);
    }
    const LefschetzList list(l, pairs);
    CHECK(check_uip(list) == oracle::unique_intersections(list));
  }
  for (int trial = 0; trial < 500; ++trial) {
    const LefschetzList list = oracle::random_uip(2 + static_cast<int>(rng() % 7), rng);
    CHECK(check_uip(list));
    CHECK(oracle::unique_intersections(list));
  }
}

TEST_CASE("list parsing and printing") {
  const LefschetzList l = LefschetzList::parse("l=3 (1,2)(2,3)(1,2)");
  CHECK(l.lines() == 3);
  CHECK(l.size() == 3);
  CHECK(LefschetzList::parse(l.to_string()) == l);
  CHECK_THROWS_AS(LefschetzList::parse("l=3 (2,2)"), InputError);
  CHECK_THROWS_AS(LefschetzList::parse("l=3 (2,4)"), InputError);
  CHECK_THROWS_AS(LefschetzList::parse("(1,2)"), InputError);
  CHECK_THROWS_AS(LefschetzList::parse("l=3 (1,2"), InputError);
}

TEST_CASE("signatures") {
  CHECK(signature_of(LefschetzList::parse("l=4 (1,4)")).to_string() == "4^1");
  CHECK(signature_of(LefschetzList::parse("l=5 (2,3)(2,4)(4,5)(1,3)(3,4)")).to_string() == "2^3 3^2");

  const Signature s = Signature::parse("2^4 4^1");
  CHECK(s.lines() == 5);
  CHECK(s.points() == 5);
  CHECK(s.multiple_points() == 1);
  CHECK(s.crossings() == 10);
  CHECK(Signature::parse("[2^4 4^1]") == s);
  CHECK(Signature::parse(s.to_string()) == s);
  CHECK(Signature::parse("3^2").lines() == 4);
  CHECK(Signature::parse("2^2").lines() == -1);
  CHECK_THROWS_AS(Signature::parse("1^3"), InputError);
  CHECK_THROWS_AS(Signature::parse("2^x"), InputError);

  const LefschetzList five_lines = LefschetzList::parse("l=5 (1,4)(4,5)(3,4)(2,3)(1,2)");
  REQUIRE(check_uip(five_lines));
  CHECK(signature_of(five_lines) == s);
}
