#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "arrangeclass/enumerate.hpp"
#include "arrangeclass/moves.hpp"
#include "arrangeclass/sigs.hpp"
#include "oracles.hpp"

using namespace arrangeclass;

namespace {

std::set<LefschetzList> as_set(const OmegaList& omega) {
  std::set<LefschetzList> out;
  for (std::size_t i = 0; i < omega.size(); ++i) out.insert(omega.at(i));
  return out;
}

std::filesystem::path scratch_dir(const char* name) {
  auto dir = std::filesystem::temp_directory_path() / ("arrangeclass-test-" + std::string(name));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("dissections") {
  const auto two = dissections(Signature::parse("2^2"), 1);
  REQUIRE(two.size() == 1);
  CHECK(two[0].first == Signature::parse("2^1"));
  CHECK(two[0].second == Signature::parse("2^1"));

  const auto mixed = dissections(Signature::parse("2^1 3^1"), 1);
  CHECK(mixed.size() == 2);

  // 2^16 3^4 with 10 points on the left: n3 on the left ranges over 0..4.
  CHECK(dissections(Signature::parse("2^16 3^4"), 10).size() == 5);
  CHECK_THROWS_AS(dissections(Signature::parse("2^3"), 3), InputError);
}

TEST_CASE("meet in the middle matches brute force up to five lines") {
  for (int l = 2; l <= 5; ++l) {
    for (const Signature& sig : admissible_signatures(l)) {
      CAPTURE(sig.to_string());
      const OmegaList omega = enumerate_omega(sig);
      CHECK(as_set(omega) == oracle::brute_force_omega(l, sig.counts()));
    }
  }
}

TEST_CASE("meet in the middle matches the direct search at six lines") {
  for (const Signature& sig : admissible_signatures(6)) {
    CAPTURE(sig.to_string());
    const OmegaList omega = enumerate_omega(sig);
    CHECK(omega == enumerate_omega_direct(sig));
    for (std::size_t i = 0; i < omega.size(); ++i) {
      CHECK(is_class_min(omega.at(i)));
      CHECK(check_uip(omega.at(i)));
    }
  }
}

TEST_CASE("every split point gives the same list") {
  const Signature sig = Signature::parse("2^6 3^3");
  const OmegaList reference = enumerate_omega(sig);
  CHECK(reference.size() == 304);
  for (int p0 = 1; p0 <= sig.points(); ++p0) {
    EnumerateOptions opts;
    opts.p0 = p0;
    CAPTURE(p0);
    CHECK(enumerate_omega(sig, opts) == reference);
  }
}

TEST_CASE("class counts at six lines") {
  CHECK(enumerate_omega(Signature::parse("2^3 3^4")).size() == 16);
  CHECK(enumerate_omega(Signature::parse("2^6 3^3")).size() == 304);
}

TEST_CASE("half classes") {
  CHECK(count_half_classes(Signature::parse("2^1"), 1) == 1);
  for (const char* text : {"2^6 3^3", "2^9 3^2", "2^3 3^4"}) {
    const Signature sig = Signature::parse(text);
    const std::size_t classes = enumerate_omega(sig).size();
    for (int p0 = 1; p0 < sig.points(); ++p0) CHECK(count_half_classes(sig, p0) >= classes);
  }
}

TEST_CASE("memory budget") {
  EnumerateOptions opts;
  opts.p0 = 10;
  opts.mem_gb = 1e-9;
  CHECK_THROWS_AS(enumerate_omega(Signature::parse("2^12 3^1"), opts), ResourceError);
  opts.p0 = 0;
  EnumerateStats stats;
  opts.mem_gb = 2.0;
  CHECK(enumerate_omega(Signature::parse("2^12 3^1"), opts, &stats).size() == 2144);
  CHECK(stats.p0 >= 1);
}

TEST_CASE("size estimates") {
  const OmegaList single = enumerate_omega(Signature::parse("5^1"));
  const SizeEstimate exact = estimate_ws_size(single, 50, 1);
  CHECK(exact.estimate == doctest::Approx(1.0));
  CHECK(exact.std_error == doctest::Approx(0.0));

  const OmegaList omega = enumerate_omega(Signature::parse("2^6 3^3"));
  double total = 0;
  for (std::size_t i = 0; i < omega.size(); ++i) total += static_cast<double>(equiv_class_size(omega.at(i)));
  CHECK(total == doctest::Approx(static_cast<double>(oracle::all_uip_lists(6, omega.signature().counts()).size())));
  const SizeEstimate est = estimate_ws_size(omega, 4000, 42);
  CHECK(std::abs(est.estimate - total) < 5 * est.std_error + 1e-9);
  CHECK(est.log10() == doctest::Approx(std::log10(est.estimate)));
  CHECK(estimate_ws_size(omega, 100, 7).estimate == estimate_ws_size(omega, 100, 7).estimate);
}

TEST_CASE("representative files round trip") {
  const OmegaList omega = enumerate_omega(Signature::parse("2^9 3^2"));
  std::stringstream text;
  write_omega(text, omega);
  CHECK(read_omega(text) == omega);

  std::istringstream bad("something else\n");
  CHECK_THROWS_AS(read_omega(bad), InputError);
  std::istringstream truncated("arrangeclass-omega v1 2^3 3 3 2\nl=3 (1,2)(2,3)(1,2)\n");
  CHECK_THROWS_AS(read_omega(truncated), InputError);
}

TEST_CASE("cache") {
  const auto dir = scratch_dir("cache");
  const Signature sig = Signature::parse("2^6 3^3");
  CHECK_FALSE(load_omega_cache(dir, sig).has_value());
  const OmegaList omega = enumerate_omega(sig);
  save_omega_cache(dir, omega);
  CHECK(std::filesystem::exists(omega_cache_path(dir, sig)));
  const auto loaded = load_omega_cache(dir, sig);
  REQUIRE(loaded.has_value());
  CHECK(*loaded == omega);
  CHECK(omega_cache_path(dir, sig) != omega_cache_path(dir, Signature::parse("2^3 3^4")));
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    (void)entry;
    ++files;
  }
  CHECK(files == 1);
  std::filesystem::remove_all(dir);
}
