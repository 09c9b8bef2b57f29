#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "arrangeclass/errors.hpp"
#include "arrangeclass/groupcmp.hpp"
#include "oracles.hpp"

using namespace arrangeclass;

namespace {

GroupPresentation make(int gens, std::vector<Word> rels) {
  GroupPresentation p;
  p.generators = gens;
  p.relators = std::move(rels);
  return p;
}

Word power(int g, int e) { return Word(static_cast<std::size_t>(e), g); }

GroupPresentation free_product(const GroupPresentation& x, const GroupPresentation& y) {
  GroupPresentation out = x;
  out.generators += y.generators;
  for (Word r : y.relators) {
    for (int& letter : r) letter += letter > 0 ? x.generators : -x.generators;
    out.relators.push_back(std::move(r));
  }
  return out;
}

Word concat(const Word& x, const Word& y) {
  Word out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

// Presentation moves that keep the group: rotate or invert a relator,
// multiply one relator by a conjugate of another, add a redundant
// generator.
GroupPresentation tietze_shuffle(GroupPresentation p, std::mt19937_64& rng) {
  if (p.relators.empty()) return p;
  const std::size_t n = p.relators.size();
  for (int step = 0; step < 4; ++step) {
    const std::size_t i = rng() % n;
    Word& r = p.relators[i];
    switch (rng() % 4) {
      case 0:
        if (!r.empty()) std::rotate(r.begin(), r.begin() + static_cast<long>(rng() % r.size()), r.end());
        break;
      case 1:
        r = inverse(r);
        break;
      case 2: {
        const std::size_t j = rng() % n;
        if (j == i) break;
        const int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(p.generators));
        r = free_reduce(concat(concat(concat(r, {g}), p.relators[j]), {-g}));
        break;
      }
      default: {
        const int fresh = ++p.generators;
        const int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(fresh - 1));
        const int h = 1 + static_cast<int>(rng() % static_cast<unsigned>(fresh - 1));
        p.relators.push_back({-fresh, g, h, -g});
      }
    }
  }
  return p;
}

bool is_group(const FiniteGroup& g) {
  const auto n = static_cast<std::uint8_t>(g.order);
  for (std::uint8_t x = 0; x < n; ++x) {
    if (g(0, x) != x || g(x, 0) != x || g(x, g.inv[x]) != 0) return false;
    for (std::uint8_t y = 0; y < n; ++y) {
      if (g.abelian && g(x, y) != g(y, x)) return false;
      for (std::uint8_t z = 0; z < n; ++z) {
        if (g(g(x, y), z) != g(x, g(y, z))) return false;
      }
    }
  }
  return true;
}

int involutions(const FiniteGroup& g) {
  int count = 0;
  for (std::uint8_t x = 1; x < g.order; ++x) count += g(x, x) == 0;
  return count;
}

}  // namespace

TEST_CASE("smith normal form") {
  CHECK(abelianization(make(1, {power(1, 3)})) == Abelianization{0, {"3"}});
  CHECK(abelianization(make(1, {power(1, 3)})).to_string() == "Z/3");
  CHECK(abelianization(make(2, {power(1, 6), power(2, 4)})) == Abelianization{0, {"2", "12"}});
  CHECK(abelianization(make(3, {{1, 2, -1, -2}})).to_string() == "Z^3");
  CHECK(abelianization(make(2, {{1, 1, 2}, {2, 2, 1}})) == Abelianization{0, {"3"}});
  CHECK(abelianization(make(1, {{1, -1}})).to_string() == "Z");
  CHECK(abelianization(make(1, {{1}})).to_string() == "0");
}

TEST_CASE("torsion beyond 64 bits") {
  const std::vector<int> primes = {1009, 1013, 1019, 1021, 1031, 1033, 1039};
  GroupPresentation p;
  p.generators = static_cast<int>(primes.size());
  boost::multiprecision::cpp_int product = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    p.relators.push_back(power(static_cast<int>(i) + 1, primes[i]));
    product *= primes[i];
  }
  const Abelianization a = abelianization(p);
  CHECK(a.rank == 0);
  REQUIRE(a.torsion.size() == 1);
  CHECK(a.torsion[0] == product.str());
  CHECK(product > std::numeric_limits<std::int64_t>::max());
}

TEST_CASE("target groups") {
  const std::vector<std::pair<std::string, int>> orders = {
      {"Z2", 2}, {"Z3", 3}, {"Z4", 4}, {"Z2xZ2", 4}, {"S3", 6}, {"D4", 8}, {"Q8", 8}, {"Z8", 8}};
  for (const auto& [tag, order] : orders) {
    const FiniteGroup g = finite_group(tag);
    CHECK(g.order == order);
    CHECK(is_group(g));
  }
  CHECK(involutions(finite_group("Q8")) == 1);
  CHECK(involutions(finite_group("D4")) == 5);
  CHECK(involutions(finite_group("Z2xZ2")) == 3);
  CHECK(involutions(finite_group("S3")) == 3);
  CHECK_FALSE(finite_group("S3").abelian);
  CHECK(finite_group("Z8").abelian);
  CHECK_THROWS_AS(finite_group("A5"), InputError);
}

TEST_CASE("homomorphism counts of small groups") {
  const GroupPresentation f2 = make(2, {});
  const GroupPresentation z2 = make(2, {{1, 2, -1, -2}});
  CHECK(quotient_count(f2, finite_group("S3")) == QuotientCount{"S3", 36, 18});
  CHECK(quotient_count(z2, finite_group("S3")) == QuotientCount{"S3", 18, 0});
  CHECK(quotient_count(f2, finite_group("Q8")) == QuotientCount{"Q8", 64, 24});
  CHECK(quotient_count(z2, finite_group("Q8")) == QuotientCount{"Q8", 40, 0});
  CHECK(quotient_count(z2, finite_group("Z2xZ2")) == QuotientCount{"Z2xZ2", 16, 6});
  CHECK(quotient_count(make(1, {power(1, 4)}), finite_group("Z8")) == QuotientCount{"Z8", 4, 0});
}

TEST_CASE("abelian shortcut agrees with search") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    const LefschetzList list = oracle::random_uip(3 + static_cast<int>(rng() % 3), rng, 0.5);
    for (GroupMode mode : {GroupMode::Affine, GroupMode::Projective}) {
      const GroupPresentation p = presentation(list, mode);
      for (const char* tag : {"Z2", "Z3", "Z4", "Z2xZ2"}) {
        const FiniteGroup g = finite_group(tag);
        CHECK(quotient_count(p, g) == quotient_count_search(p, g));
      }
    }
  }
  const GroupPresentation torsion = make(2, {power(1, 6), {1, 2, 2, -1, 2}});
  for (const char* tag : {"Z2", "Z3", "Z4", "Z8", "Z2xZ2"}) {
    CHECK(quotient_count(torsion, finite_group(tag)) == quotient_count_search(torsion, finite_group(tag)));
  }
}

TEST_CASE("counts multiply over free products") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const GroupPresentation x = presentation(oracle::random_uip(3, rng, 0.5), GroupMode::Projective);
    const GroupPresentation y = presentation(oracle::random_uip(4, rng, 0.5), GroupMode::Projective);
    for (const char* tag : {"S3", "D4", "Q8"}) {
      const FiniteGroup g = finite_group(tag);
      CHECK(quotient_count(free_product(x, y), g).homs == quotient_count(x, g).homs * quotient_count(y, g).homs);
    }
  }
}

TEST_CASE("profiles survive tietze moves") {
  std::mt19937_64 rng(67);
  ProfileOptions opts;
  opts.lcs_depth = 3;
  for (int trial = 0; trial < 15; ++trial) {
    const GroupPresentation p = presentation(oracle::random_uip(3 + static_cast<int>(rng() % 3), rng, 0.5),
                                             trial % 2 ? GroupMode::Affine : GroupMode::Projective);
    const GroupPresentation q = tietze_shuffle(p, rng);
    CHECK(invariant_profile(p, opts) == invariant_profile(q, opts));
    CHECK(profiles_match(p, q, opts) == Verdict::Indistinguishable);
  }
}

TEST_CASE("lower central series ranks") {
  CHECK(lcs_ranks(make(2, {}), 4) == std::vector<int>{2, 1, 2, 3});
  CHECK(lcs_ranks(make(3, {}), 3) == std::vector<int>{3, 3, 8});
  CHECK(lcs_ranks(make(2, {{1, 2, -1, -2}}), 3) == std::vector<int>{2, 0, 0});
  CHECK(lcs_ranks(structured_group_presentation(StructuredGroup({2}, 1)), 3) == std::vector<int>{3, 1, 2});
  CHECK(lcs_ranks(structured_group_presentation(StructuredGroup({2, 2}, 0)), 3) == std::vector<int>{4, 2, 4});
  CHECK(lcs_ranks(make(1, {power(1, 3)}), 2) == std::vector<int>{0, 0});
  CHECK_THROWS_AS(lcs_ranks(make(2, {}), 5), InputError);
}

TEST_CASE("distinguishing groups") {
  const GroupPresentation f2 = make(2, {});
  const GroupPresentation z2 = make(2, {{1, 2, -1, -2}});
  CHECK(profiles_match(f2, z2) == Verdict::Distinguished);
  CHECK(profiles_match(f2, f2) == Verdict::Indistinguishable);
  const auto a = structured_group_presentation(StructuredGroup({2, 2}, 1));
  const auto b = structured_group_presentation(StructuredGroup({3}, 2));
  CHECK(abelianization(a) == abelianization(b));
  CHECK(profiles_match(a, b) == Verdict::Distinguished);
}

TEST_CASE("search budget") {
  std::mt19937_64 rng(71);
  const GroupPresentation p = presentation(oracle::random_uip(6, rng, 0.3), GroupMode::Affine);
  CHECK_THROWS_AS(quotient_count_search(p, finite_group("D4"), 5), ResourceError);
}
