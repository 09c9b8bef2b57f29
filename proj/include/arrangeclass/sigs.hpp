#pragma once

#include <string>
#include <vector>

#include "arrangeclass/core.hpp"

namespace arrangeclass {

/// All nonzero solutions of sum n_k C(k,2) = C(l,2), ordered
/// lexicographically by (n_2, n_3, ..., n_l).
std::vector<Signature> solve_suip(int lines);

/// Necessary condition for a large point. For every point P of multiplicity
/// l-c, the remaining points must satisfy sum n_k C(k-1,2) <= C(c,2).
bool largepoint_filter(const Signature& sig, int lines);

/// A solution of the counting identity known not to occur for other reasons.
struct Exclusion {
  Signature signature;
  int lines;
  std::string reason;
  /// Set when the exclusion is an empirical result that enumeration must
  /// reproduce (an empty representative list).
  bool verified_by_enumeration = false;
};

const std::vector<Exclusion>& exclusion_table();

struct SignatureVerdict {
  Signature signature;
  bool admissible = true;
  /// Empty for admissible signatures.
  std::string reason;
};

/// Every solution of the counting identity together with its verdict.
std::vector<SignatureVerdict> classify_signatures(int lines);

/// The admissible subset of classify_signatures, in the same order.
std::vector<Signature> admissible_signatures(int lines);

}  // namespace arrangeclass
