#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "arrangeclass/enumerate.hpp"
#include "arrangeclass/groupcmp.hpp"
#include "arrangeclass/pi1.hpp"
#include "oracles.hpp"

using namespace arrangeclass;

namespace {

const LefschetzList kFivePoints = LefschetzList::parse("l=5 (2,3)(2,4)(4,5)(1,3)(3,4)");

}  // namespace

TEST_CASE("skeleton of the fifth point") {
  CHECK(compute_skeleton(kFivePoints, 5).to_string() == "1° 2⁻ 3⁻ 3⁺ 2⁻ 2⁺ 3⁺ 4⁺ 5°");
  CHECK(compute_skeleton(kFivePoints, 5).to_string(false) == "1o 2- 3- 3+ 2- 2+ 3+ 4+ 5o");
  CHECK(compute_skeleton(kFivePoints, 5).endpoints() == std::vector<int>{1, 5});
}

TEST_CASE("intermediate skeleton gives the conjugated commutator") {
  const SkeletonPath mid = compute_skeleton(kFivePoints, 5, 2);
  const auto rel = vankampen_relations(mid, 2);
  REQUIRE(rel.size() == 1);
  const Word expected = {3, 2, 1, -2, -3, 5, 3, 2, -1, -2, -3, -5};
  CHECK(same_cyclic_word(rel[0], expected));
}

TEST_CASE("initial skeletons") {
  CHECK(compute_skeleton(kFivePoints, 1).to_string() == "2° 3°");
  CHECK(initial_skeleton(Pair(2, 4)).endpoints() == std::vector<int>{2, 3, 4});
  CHECK_THROWS_AS(compute_skeleton(kFivePoints, 0), InputError);
  CHECK_THROWS_AS(compute_skeleton(kFivePoints, 6), InputError);
  CHECK_THROWS_AS(SkeletonPath({{1, Mark::Above, Mark::Below}}), InputError);
}

TEST_CASE("relations of straight skeletons") {
  const auto simple = vankampen_relations(initial_skeleton(Pair(2, 3)), 2);
  REQUIRE(simple.size() == 1);
  CHECK(same_cyclic_word(simple[0], {2, 3, -2, -3}));

  const auto triple = vankampen_relations(initial_skeleton(Pair(1, 3)), 3);
  REQUIRE(triple.size() == 2);
  // G3 G2 G1 = G1 G3 G2 = G2 G1 G3.
  CHECK(same_cyclic_word(triple[0], {1, 3, 2, -1, -2, -3}));
  CHECK(same_cyclic_word(triple[1], {2, 1, 3, -1, -2, -3}));
  CHECK_THROWS_AS(vankampen_relations(initial_skeleton(Pair(1, 3)), 2), InputError);
}

TEST_CASE("word reduction") {
  CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(cyclic_reduce({-1, 2, 3, 1}) == Word{2, 3});
  CHECK(inverse({1, -2, 3}) == Word{-3, 2, -1});
  CHECK(same_cyclic_word({1, 2, 3}, {3, 1, 2}));
  CHECK(same_cyclic_word({1, 2, 3}, {-2, -1, -3}));
  CHECK_FALSE(same_cyclic_word({1, 2, 3}, {1, 3, 2}));
}

TEST_CASE("skeleton tokens are well formed") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 300; ++trial) {
    const LefschetzList list = oracle::random_uip(3 + static_cast<int>(rng() % 6), rng, 0.4);
    for (std::size_t i = 1; i <= list.size(); ++i) {
      const SkeletonPath s = compute_skeleton(list, i);
      const auto ends = s.endpoints();
      const int m = list[i - 1].multiplicity();
      REQUIRE(static_cast<int>(ends.size()) == m);
      CHECK(std::set<int>(ends.begin(), ends.end()).size() == ends.size());
      for (int e : ends) CHECK((1 <= e && e <= list.lines()));
      for (const Token& t : s.tokens()) CHECK((1 <= t.point && t.point <= list.lines()));
      CHECK(s.tokens().front().mark == Mark::On);
      CHECK(s.tokens().back().mark == Mark::On);
    }
  }
}

TEST_CASE("presentations") {
  const GroupPresentation two = presentation(LefschetzList::parse("l=2 (1,2)"), GroupMode::Affine);
  CHECK(two.generators == 2);
  REQUIRE(two.relators.size() == 1);
  CHECK(same_cyclic_word(two.relators[0], {1, 2, -1, -2}));

  const GroupPresentation three = presentation(LefschetzList::parse("l=3 (1,3)"), GroupMode::Projective);
  CHECK(three.relators.back() == Word{3, 2, 1});
  CHECK(abelianization(three).rank == 2);

  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const int l = 2 + static_cast<int>(rng() % 7);
    const LefschetzList list = oracle::random_uip(l, rng, 0.4);
    std::size_t expected = 0;
    for (const Pair& p : list.pairs()) expected += static_cast<std::size_t>(p.multiplicity() - 1);
    const GroupPresentation aff = presentation(list, GroupMode::Affine);
    CHECK(aff.relators.size() == expected);
    for (const Word& r : aff.relators) CHECK_FALSE(free_reduce(r).empty());
    CHECK(abelianization(aff).rank == l);
    CHECK(abelianization(aff).torsion.empty());
    const GroupPresentation proj = presentation(list, GroupMode::Projective);
    CHECK(abelianization(proj).rank == l - 1);
    CHECK(abelianization(proj).torsion.empty());
  }
}

TEST_CASE("plain and gap formats") {
  const GroupPresentation p = presentation(LefschetzList::parse("l=3 (1,2)(2,3)(1,2)"), GroupMode::Projective);
  std::istringstream in(p.to_plain());
  const GroupPresentation back = GroupPresentation::parse_plain(in);
  CHECK(back.generators == p.generators);
  CHECK(back.relators == p.relators);
  CHECK(p.to_gap().find("FreeGroup(3)") != std::string::npos);

  std::istringstream commented("# comment\ngens: 2\n\n1 2 -1 -2\n");
  CHECK(GroupPresentation::parse_plain(commented).relators.size() == 1);
  std::istringstream out_of_range("gens: 2\n1 3\n");
  CHECK_THROWS_AS(GroupPresentation::parse_plain(out_of_range), InputError);
  std::istringstream headless("1 2\n");
  CHECK_THROWS_AS(GroupPresentation::parse_plain(headless), InputError);
}
