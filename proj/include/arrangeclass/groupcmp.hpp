#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arrangeclass/lattice.hpp"
#include "arrangeclass/pi1.hpp"

namespace arrangeclass {

struct Abelianization {
  int rank = 0;
  /// Nontrivial elementary divisors in divisibility order, as decimal
  /// strings (they may exceed 64 bits).
  std::vector<std::string> torsion;

  std::string to_string() const;
  friend bool operator==(const Abelianization&, const Abelianization&) = default;
};

/// Smith normal form of the exponent-sum matrix. 64-bit arithmetic with a
/// switch to arbitrary precision on overflow.
Abelianization abelianization(const GroupPresentation& pres);

/// A small finite group given by its multiplication table; element 0 is the
/// identity.
struct FiniteGroup {
  std::string tag;
  int order = 0;
  std::vector<std::uint8_t> mul;
  std::vector<std::uint8_t> inv;
  bool abelian = false;

  std::uint8_t operator()(std::uint8_t x, std::uint8_t y) const {
    return mul[static_cast<std::size_t>(x) * static_cast<std::size_t>(order) + y];
  }
};

/// Z<n> (n <= 64), Z2xZ2, S3, D4, Q8. Input error for an unknown tag.
FiniteGroup finite_group(const std::string& tag);
const std::vector<std::string>& default_targets();

struct QuotientCount {
  std::string target;
  std::uint64_t homs = 0;
  std::uint64_t surjections = 0;

  friend bool operator==(const QuotientCount&, const QuotientCount&) = default;
};

inline constexpr std::uint64_t kDefaultAssignmentBudget = 200'000'000;

/// Homomorphisms into the target and how many are onto. Abelian targets are
/// counted from the abelianization; others by backtracking over generator
/// images, checking each relator once its generators are assigned.
QuotientCount quotient_count(const GroupPresentation& pres, const FiniteGroup& target,
                             std::uint64_t budget = kDefaultAssignmentBudget);

/// Backtracking count for any target, never using the abelianization.
QuotientCount quotient_count_search(const GroupPresentation& pres, const FiniteGroup& target,
                                    std::uint64_t budget = kDefaultAssignmentBudget);

/// Ranks of the successive lower central quotients (tensored with Q) for
/// degrees 1..depth, from the Malcev Lie algebra truncated at depth.
std::vector<int> lcs_ranks(const GroupPresentation& pres, int depth = 3);

struct ProfileOptions {
  std::vector<std::string> targets = default_targets();
  int lcs_depth = 3;
  std::uint64_t budget = kDefaultAssignmentBudget;
};

struct InvariantProfile {
  Abelianization abelian;
  std::vector<QuotientCount> quotients;
  std::vector<int> lcs;

  std::string to_string() const;
  friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

InvariantProfile invariant_profile(const GroupPresentation& pres, const ProfileOptions& opts = {});

/// Generators split per factor; commutators between generators of
/// different factors and among the abelian generators.
GroupPresentation structured_group_presentation(const StructuredGroup& group);

enum class Verdict { Distinguished, Indistinguishable };
const char* to_string(Verdict v);

/// Distinguished when some invariant differs (the groups are then not
/// isomorphic); indistinguishable otherwise, which is not a proof of
/// isomorphism.
Verdict profiles_match(const GroupPresentation& x, const GroupPresentation& y,
                       const ProfileOptions& opts = {});

}  // namespace arrangeclass
