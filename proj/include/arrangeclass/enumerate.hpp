#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "arrangeclass/core.hpp"

namespace arrangeclass {

/// Sorted list of the least members of all ≡-classes with one signature.
/// Stored flat (one fixed-length row of pairs per representative) so that
/// multi-million entry lists stay compact.
class OmegaList {
 public:
  OmegaList() = default;
  OmegaList(Signature sig, int lines);

  const Signature& signature() const { return signature_; }
  int lines() const { return lines_; }
  std::size_t points() const { return points_; }
  std::size_t size() const { return points_ == 0 ? 0 : data_.size() / points_; }
  bool empty() const { return size() == 0; }

  std::span<const Pair> word(std::size_t i) const {
    return {data_.data() + i * points_, points_};
  }
  LefschetzList at(std::size_t i) const;

  /// Index of w by binary search, or nullopt.
  std::optional<std::size_t> index_of(std::span<const Pair> w) const;
  std::optional<std::size_t> index_of(const LefschetzList& list) const;

  void append(std::span<const Pair> w);
  void reserve(std::size_t n) { data_.reserve(n * points_); }
  /// Sorts rows and removes duplicates.
  void normalize();

  friend bool operator==(const OmegaList&, const OmegaList&) = default;

 private:
  Signature signature_;
  int lines_ = 0;
  std::size_t points_ = 0;
  std::vector<Pair> data_;
};

struct EnumerateOptions {
  /// Split point; 0 selects it automatically, starting from p/2 and lowering
  /// it while the first-half table does not fit the memory budget.
  int p0 = 0;
  double mem_gb = 2.0;
};

struct EnumerateStats {
  int p0 = 0;
  std::size_t dissections = 0;
  /// Joined (first half, second half) pairs with product J, before the seam
  /// check: the number of ≡½-classes.
  std::uint64_t half_classes = 0;
  std::size_t largest_table = 0;
};

/// All S = S0 + S1 with S0 carrying p0 points. Pairs with an empty side are
/// omitted, so 1 <= p0 < p is required.
std::vector<std::pair<Signature, Signature>> dissections(const Signature& sig, int p0);

/// ω_S by meet in the middle. Throws ResourceError if a first-half table
/// exceeds the memory budget (naming the dissection).
OmegaList enumerate_omega(const Signature& sig, const EnumerateOptions& opts = {},
                          EnumerateStats* stats = nullptr);

/// Number of ≡½-classes for the split at p0.
std::uint64_t count_half_classes(const Signature& sig, int p0, double mem_gb = 2.0);

/// ω_S by one depth-first search over whole words in normal form. Independent
/// of the split machinery; practical up to 7 lines.
OmegaList enumerate_omega_direct(const Signature& sig);

struct SizeEstimate {
  double estimate = 0;
  double std_error = 0;
  std::size_t samples = 0;
  double log10() const;
};

/// |W_S| estimated as (mean sampled class size) * |ω_S|. Samples are drawn
/// with replacement from ω_S using a seeded generator.
SizeEstimate estimate_ws_size(const OmegaList& omega, std::size_t samples, std::uint64_t seed);

// ---------------------------------------------------------------- persistence

void write_omega(std::ostream& out, const OmegaList& omega);
/// Throws InputError on a malformed stream.
OmegaList read_omega(std::istream& in);

std::filesystem::path omega_cache_path(const std::filesystem::path& dir, const Signature& sig);
/// Writes to a temporary file and renames it into place.
void save_omega_cache(const std::filesystem::path& dir, const OmegaList& omega);
/// nullopt when no cache entry exists for sig.
std::optional<OmegaList> load_omega_cache(const std::filesystem::path& dir, const Signature& sig);

}  // namespace arrangeclass
