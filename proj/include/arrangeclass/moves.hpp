#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "arrangeclass/core.hpp"

namespace arrangeclass {

inline constexpr std::size_t kDefaultClassCap = 1'000'000;

// ---------------------------------------------------------------- relation ≡
//
// Swapping adjacent disjoint pairs generates a partially commutative monoid:
// an ≡-class is the set of linear extensions of the "heap" order in which
// two positions are comparable when their segments overlap.

/// Every list reachable by one swap of adjacent disjoint pairs.
std::vector<LefschetzList> equiv_neighbors(const LefschetzList& list);

/// Lexicographically least member of the ≡-class. Computed greedily: the
/// next pair is always the smallest one that can still be moved to the front.
LefschetzList equiv_class_min(const LefschetzList& list);

/// True iff list is the least member of its ≡-class.
bool is_class_min(const LefschetzList& list);

/// All members of the ≡-class, sorted, by breadth-first closure over
/// equiv_neighbors. Throws ResourceError past `cap` members.
std::vector<LefschetzList> equiv_class(const LefschetzList& list,
                                       std::size_t cap = kDefaultClassCap);

/// |[list]|, the number of linear extensions of the heap order, counted by
/// dynamic programming over order ideals. Throws ResourceError on overflow.
std::uint64_t equiv_class_size(const LefschetzList& list);

// ------------------------------------------------------------------- actions

/// Reverse the pair order.
LefschetzList tau(const LefschetzList& list);

/// Rotation action: split by the scan of line 1 into L+, L0, L- and emit
/// (L+ - 1) ++ reverse(L0) ++ (L- + 1). Computed on the class minimum and
/// returned as a class minimum. Throws InternalError if the scan meets a
/// segment in its interior (only possible without the unique intersection
/// property).
LefschetzList mu(const LefschetzList& list);

/// The scan result (L+ - 1) ++ reverse(L0) ++ (L- + 1) for this exact list,
/// without canonicalization.
LefschetzList mu_raw(const LefschetzList& list);

/// Drop the first pair <a,b> and append <l+1-b, l+1-a>. Input error if empty.
LefschetzList sigma(const LefschetzList& list);

/// {equiv_class_min(sigma(a')) : a' ≡ rep}, sorted. Only the leftmost pair
/// of a' matters, so one member per movable-to-front pair suffices.
std::vector<LefschetzList> sigma_class_targets(const LefschetzList& rep);

// ------------------------------------------------------------- triangle moves

inline constexpr int kMinTriangleSize = 2;

enum class TriangleDirection { UpToDown, DownToUp };

struct TriangleMove {
  int offset = 1;
  int i = 0;
  int t = 0;
  /// UpToDown replaces an upper window by the lower one.
  TriangleDirection direction = TriangleDirection::UpToDown;
  /// Index of the first window pair in the member of the class that exhibits
  /// the window contiguously (the member is the one the move was read from).
  std::size_t position = 0;
  /// Class minimum of the list after replacement.
  LefschetzList result;
};

/// c + tru(i,t): the line passes above the t-fold point.
std::vector<Pair> tru(int c, int i, int t);
/// c + trd(i,t): the line passes below the t-fold point.
std::vector<Pair> trd(int c, int i, int t);

/// Every window occurrence of c+tru(i,t) or c+trd(i,t) (t >= min_t) that is
/// contiguous in some member of [rep], with the replaced class minimum.
/// Windows are found directly on the heap order, without listing the class.
std::vector<TriangleMove> triangle_windows(const LefschetzList& rep,
                                           int min_t = kMinTriangleSize);

/// Sorted distinct results of triangle_windows.
std::vector<LefschetzList> triangle_moves(const LefschetzList& rep,
                                          int min_t = kMinTriangleSize);

/// Same set as triangle_moves, computed by listing the whole class and
/// scanning each member for contiguous windows. Throws ResourceError past
/// `cap` members.
std::vector<LefschetzList> triangle_moves_by_closure(const LefschetzList& rep,
                                                     int min_t = kMinTriangleSize,
                                                     std::size_t cap = kDefaultClassCap);

}  // namespace arrangeclass
