#pragma once

// Wiring diagrams as lists of Lefschetz pairs.
//
// A Lefschetz pair <a,b> records an intersection point of a wiring diagram:
// the wires at local positions a..b (numbered bottom to top, 1-based) meet
// there and leave in reversed order. A list of pairs, read left to right,
// is the whole diagram.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arrangeclass/errors.hpp"

namespace arrangeclass {

inline constexpr int kMaxLines = 16;

struct Pair {
  std::uint8_t a = 1;
  std::uint8_t b = 2;

  constexpr Pair() = default;
  constexpr Pair(int first, int last)
      : a(static_cast<std::uint8_t>(first)), b(static_cast<std::uint8_t>(last)) {}

  /// Number of wires meeting at the point.
  constexpr int multiplicity() const { return b - a + 1; }

  /// Bit i set for every local index a <= i <= b.
  constexpr std::uint32_t mask() const {
    return ((std::uint32_t{1} << (b + 1)) - 1) ^ ((std::uint32_t{1} << a) - 1);
  }

  constexpr Pair shifted(int by) const { return Pair(a + by, b + by); }

  friend constexpr auto operator<=>(const Pair&, const Pair&) = default;
};

/// True iff the integral segments [a,b] and [c,d] do not meet.
constexpr bool disjoint(Pair p, Pair q) { return (p.mask() & q.mask()) == 0; }

/// The involution a+b-x on [a,b], identity elsewhere. Throws InputError for
/// x outside 1..kMaxLines.
int apply_pair(Pair pair, int x);

/// Permutation of 1..n (n <= 16), packed as 4-bit nibbles into one word so it
/// can be hashed and sorted cheaply.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n);
  /// J(i) = n + 1 - i.
  static Permutation reversal(int n);
  static Permutation from_images(std::span<const int> images);

  int size() const { return size_; }
  int operator()(int i) const {
    return static_cast<int>((packed_ >> (4 * (i - 1))) & 0xF) + 1;
  }
  std::vector<int> images() const;
  std::uint64_t key() const { return packed_; }

  /// (*this) o other : apply other first.
  Permutation after(const Permutation& other) const;
  Permutation inverse() const;
  /// Left-multiply by the pair permutation: result = <a,b> o (*this).
  Permutation then(Pair pair) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::uint64_t packed_ = 0;
  int size_ = 0;
};

class LefschetzList {
 public:
  LefschetzList() = default;
  /// Throws InputError unless every pair satisfies 1 <= a < b <= lines.
  LefschetzList(int lines, std::vector<Pair> pairs);

  int lines() const { return lines_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const std::vector<Pair>& pairs() const { return pairs_; }
  const Pair& operator[](std::size_t i) const { return pairs_[i]; }

  /// Parses `l=6 (2,3)(2,4)(4,5)(1,3)(3,4)`.
  static LefschetzList parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const LefschetzList&, const LefschetzList&) = default;
  /// Lexicographic on the pair sequences (leftmost differing pair decides).
  friend std::strong_ordering operator<=>(const LefschetzList& x, const LefschetzList& y);

 private:
  int lines_ = 0;
  std::vector<Pair> pairs_;
};

/// Multiset [2^{n2} 3^{n3} ...] of intersection multiplicities.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::map<int, int> counts);

  /// Parses `2^9 3^2`; a bare `4` means `4^1`. Brackets are tolerated.
  static Signature parse(std::string_view text);
  std::string to_string() const;

  const std::map<int, int>& counts() const { return counts_; }
  int count(int multiplicity) const;
  int points() const;
  /// Number of multiple points (multiplicity >= 3).
  int multiple_points() const;
  /// Sum of n_k * C(k,2).
  long crossings() const;
  /// The l with C(l,2) = crossings(), or -1 when there is none.
  int lines() const;
  int max_multiplicity() const;
  bool empty() const { return counts_.empty(); }

  /// Widths as a non-decreasing list, e.g. [2,2,3].
  std::vector<int> widths() const;

  friend auto operator<=>(const Signature&, const Signature&) = default;

 private:
  std::map<int, int> counts_;
};

/// <a_p,b_p> ... <a_1,b_1>: the wire at position i before the first point is
/// at position result(i) after the last one.
Permutation composite_permutation(const LefschetzList& list);

/// Unique intersection property: product equals J and the crossing count
/// identity sum n_k C(k,2) = C(l,2) holds.
bool check_uip(const LefschetzList& list);

Signature signature_of(const LefschetzList& list);

inline long binomial2(long k) { return k * (k - 1) / 2; }

}  // namespace arrangeclass
