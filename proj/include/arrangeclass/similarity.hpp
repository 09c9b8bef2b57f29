#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "arrangeclass/enumerate.hpp"

namespace arrangeclass {

/// Which relations join ≡-classes, in addition to ≡ itself.
struct RelationSet {
  bool sigma = true;
  bool tau = true;
  bool mu = true;
  bool triangle = true;

  static RelationSet none() { return {false, false, false, false}; }
  /// Letters s, t, m, x enable σ, τ, μ, ⋈; "-" or "" enables nothing.
  static RelationSet parse(std::string_view letters);
  /// Four +/- marks in the order σ τ μ ⋈, e.g. "+-+-".
  std::string marks() const;

  friend bool operator==(const RelationSet&, const RelationSet&) = default;
};

/// The 16 relation subsets in table order (---- first, ++++ last, σ slowest).
std::vector<RelationSet> all_relation_sets();

/// Class minima adjacent to rep under the enabled relations.
std::vector<LefschetzList> similarity_edges(const LefschetzList& rep, const RelationSet& rels);

/// Union-find over indices 0..n-1.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::uint32_t find(std::uint32_t x);
  /// True if x and y were in different sets.
  bool unite(std::uint32_t x, std::uint32_t y);
  std::size_t size() const { return parent_.size(); }
  std::size_t components() const { return components_; }

 private:
  std::vector<std::uint32_t> parent_;
  std::size_t components_;
};

class SimilarityClassification {
 public:
  SimilarityClassification(Signature sig, RelationSet rels, DisjointSets sets);

  const Signature& signature() const { return signature_; }
  const RelationSet& relations() const { return relations_; }
  std::size_t size() const { return representatives_.size(); }
  /// Index into the representative list of the least member of each
  /// component, ascending.
  const std::vector<std::size_t>& representatives() const { return representatives_; }
  /// Component number (0-based, ordered like representatives()) of entry i.
  std::uint32_t component_of(std::size_t i) const { return component_[i]; }
  std::vector<std::size_t> members(std::uint32_t component) const;

 private:
  Signature signature_;
  RelationSet relations_;
  std::vector<std::uint32_t> component_;
  std::vector<std::size_t> representatives_;
};

/// Connected components of the similarity graph on omega. Throws
/// InternalError if an edge leaves omega.
SimilarityClassification classify(const OmegaList& omega, const RelationSet& rels = {});

struct RelationTableRow {
  RelationSet relations;
  std::size_t classes = 0;
};

/// Class counts for all 16 relation subsets. Each single relation is
/// resolved once; subsets join the resulting partitions.
std::vector<RelationTableRow> relation_table(const OmegaList& omega);

}  // namespace arrangeclass
