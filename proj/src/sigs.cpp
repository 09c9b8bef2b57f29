#include "arrangeclass/sigs.hpp"

#include <algorithm>
#include <functional>

namespace arrangeclass {

namespace {

void collect(int k, int lines, long remaining, std::vector<int>& counts,
             std::vector<std::vector<int>>& out) {
  if (k > lines) {
    if (remaining == 0) out.push_back(counts);
    return;
  }
  const long weight = binomial2(k);
  for (long n = 0; n * weight <= remaining; ++n) {
    counts[static_cast<std::size_t>(k - 2)] = static_cast<int>(n);
    collect(k + 1, lines, remaining - n * weight, counts, out);
  }
  counts[static_cast<std::size_t>(k - 2)] = 0;
}

Signature from_counts(const std::vector<int>& counts) {
  std::map<int, int> m;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0) m[static_cast<int>(i) + 2] = counts[i];
  }
  return Signature(std::move(m));
}

/// The c of the first violated instance of the large-point inequality, taking
/// the largest points first, or -1.
int largepoint_violation(const Signature& sig, int lines) {
  for (auto it = sig.counts().rbegin(); it != sig.counts().rend(); ++it) {
    const int m = it->first;
    const int c = lines - m;
    if (c < 0) return c;
    long rest = 0;
    for (auto [k, nk] : sig.counts()) {
      const long others = (k == m) ? nk - 1 : nk;
      rest += others * binomial2(k - 1);
    }
    if (rest > binomial2(c)) return c;
  }
  return -1;
}

}  // namespace

std::vector<Signature> solve_suip(int lines) {
  if (lines < 2) throw InputError("need at least 2 lines");
  if (lines > kMaxLines) throw InputError("at most 16 lines supported");
  std::vector<std::vector<int>> raw;
  std::vector<int> counts(static_cast<std::size_t>(lines - 1), 0);
  collect(2, lines, binomial2(lines), counts, raw);
  std::sort(raw.begin(), raw.end());
  std::vector<Signature> out;
  out.reserve(raw.size());
  for (const auto& c : raw) out.push_back(from_counts(c));
  return out;
}

bool largepoint_filter(const Signature& sig, int lines) {
  return largepoint_violation(sig, lines) < 0;
}

const std::vector<Exclusion>& exclusion_table() {
  static const std::vector<Exclusion> table = {
      {Signature::parse("3^5"), 6,
       "parity: a line would meet its five neighbours two at a time", false},
      {Signature::parse("3^7"), 7,
       "projective plane of order 2 (Fano) does not embed in the real plane", false},
      {Signature::parse("2^10 4^3"), 8,
       "two quadruple points sharing a line leave one line with at most three "
       "simple crossings; disjoint ones force 2^16 4^2",
       false},
      {Signature::parse("2^1 3^9"), 8,
       "each line carries at most three triple points, so at most 8 triple points", false},
      {Signature::parse("2^4 3^8"), 8, "no wiring diagram found by exhaustive enumeration",
       true},
  };
  return table;
}

std::vector<SignatureVerdict> classify_signatures(int lines) {
  std::vector<SignatureVerdict> out;
  for (Signature& s : solve_suip(lines)) {
    SignatureVerdict v{std::move(s), true, {}};
    if (const int c = largepoint_violation(v.signature, lines); c >= 0) {
      v.admissible = false;
      v.reason = "large point with c=" + std::to_string(c);
    } else {
      for (const Exclusion& e : exclusion_table()) {
        if (e.lines == lines && e.signature == v.signature) {
          v.admissible = false;
          v.reason = e.reason;
        }
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Signature> admissible_signatures(int lines) {
  std::vector<Signature> out;
  for (SignatureVerdict& v : classify_signatures(lines)) {
    if (v.admissible) out.push_back(std::move(v.signature));
  }
  return out;
}

}  // namespace arrangeclass
