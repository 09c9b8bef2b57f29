#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrangeclass/core.hpp"

namespace arrangeclass {

enum class GroupMode { Affine, Projective };

GroupMode parse_group_mode(std::string_view text);
const char* to_string(GroupMode mode);

/// Lines 1..l and intersection points; point j lists the lines through it.
class IncidenceLattice {
 public:
  IncidenceLattice() = default;
  /// Throws InputError if a point has fewer than two lines, a line number is
  /// out of range, or two points share two lines.
  IncidenceLattice(int lines, std::vector<std::vector<int>> points);

  int lines() const { return lines_; }
  std::size_t points() const { return points_.size(); }
  const std::vector<int>& point(std::size_t j) const { return points_[j]; }
  const std::vector<std::vector<int>>& point_lines() const { return points_; }
  int multiplicity(std::size_t j) const { return static_cast<int>(points_[j].size()); }
  bool incident(int line, std::size_t j) const;

  /// l x p 0/1 matrix, row i is line i+1.
  std::vector<std::vector<std::uint8_t>> matrix() const;

  /// Lines through no point of multiplicity >= 3.
  std::vector<int> simple_lines() const;
  /// The arrangement with `line` deleted; lines above it are renumbered down.
  IncidenceLattice without_line(int line) const;

 private:
  int lines_ = 0;
  std::vector<std::vector<int>> points_;
};

/// Incidences read from the prefix permutations: the lines through point i
/// are the wires at positions a_i..b_i after the first i-1 points.
IncidenceLattice lattice_of(const LefschetzList& list);

struct CanonicalLattice {
  /// Rows of 0/1 characters; multiple-point columns first.
  std::vector<std::string> rows;
  /// line_order[k] = original line placed at row k.
  std::vector<int> line_order;
  /// point_order[k] = original point placed at column k.
  std::vector<std::size_t> point_order;

  friend bool operator==(const CanonicalLattice& x, const CanonicalLattice& y) {
    return x.rows == y.rows;
  }
};

/// Lexicographically greatest relabelling found by colour refinement plus
/// exhaustive branching on tied lines. Exact: equal forms iff isomorphic.
CanonicalLattice canonical_form(const IncidenceLattice& lattice);

bool lattices_isomorphic(const IncidenceLattice& x, const IncidenceLattice& y);

struct MultiPointGraph {
  /// Lattice point index of each vertex.
  std::vector<std::size_t> points;
  std::vector<int> multiplicities;
  struct Edge {
    std::size_t u, v;
    int line;
  };
  /// Each line through k >= 2 vertices contributes a path of k-1 edges.
  std::vector<Edge> edges;

  bool acyclic() const;
  /// Vertex sets of the connected components.
  std::vector<std::vector<std::size_t>> components() const;
};

MultiPointGraph multipoint_graph(const IncidenceLattice& lattice);

/// F_{r_1} + ... + F_{r_k} + Z^r with every r_i >= 2.
struct StructuredGroup {
  std::vector<int> free_ranks;
  int abelian_rank = 0;

  StructuredGroup() = default;
  StructuredGroup(std::vector<int> free, int abelian);

  /// Parses the to_string() form, e.g. "Z^2 + F2 + F3", "F2", "1".
  static StructuredGroup parse(std::string_view text);
  std::string to_string() const;
  /// Abelianization rank.
  int rank() const;

  friend auto operator<=>(const StructuredGroup&, const StructuredGroup&) = default;
};

/// The direct-sum group guaranteed when the multiple-point graph is acyclic
/// (projective) or each component is collinear (affine). Simple lines are
/// peeled off first, each contributing one Z. nullopt when neither applies.
std::optional<StructuredGroup> structured_group_oracle(const IncidenceLattice& lattice,
                                                       GroupMode mode);

}  // namespace arrangeclass
