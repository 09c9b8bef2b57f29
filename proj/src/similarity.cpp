#include "arrangeclass/similarity.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "arrangeclass/moves.hpp"

namespace arrangeclass {

namespace {

enum class Relation { Sigma, Tau, Mu, Triangle };

std::vector<LefschetzList> single_edges(const LefschetzList& rep, Relation r) {
  switch (r) {
    case Relation::Sigma:
      return sigma_class_targets(rep);
    case Relation::Tau:
      return {equiv_class_min(tau(rep))};
    case Relation::Mu:
      return {mu(rep)};
    case Relation::Triangle:
      return triangle_moves(rep);
  }
  return {};
}

std::vector<Relation> enabled(const RelationSet& rels) {
  std::vector<Relation> out;
  if (rels.sigma) out.push_back(Relation::Sigma);
  if (rels.tau) out.push_back(Relation::Tau);
  if (rels.mu) out.push_back(Relation::Mu);
  if (rels.triangle) out.push_back(Relation::Triangle);
  return out;
}

void add_edges(const OmegaList& omega, Relation r, DisjointSets& sets) {
  for (std::size_t i = 0; i < omega.size(); ++i) {
    const LefschetzList rep = omega.at(i);
    for (const LefschetzList& target : single_edges(rep, r)) {
      const auto j = omega.index_of(target);
      if (!j) {
        throw InternalError("similarity edge from " + rep.to_string() + " reaches " +
                            target.to_string() + ", which is not a listed representative");
      }
      sets.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(*j));
    }
  }
}

}  // namespace

RelationSet RelationSet::parse(std::string_view letters) {
  RelationSet r = none();
  for (char c : letters) {
    switch (c) {
      case 's': r.sigma = true; break;
      case 't': r.tau = true; break;
      case 'm': r.mu = true; break;
      case 'x': r.triangle = true; break;
      case '-': break;
      default:
        throw InputError(std::string("unknown relation letter '") + c + "' (use s, t, m, x)");
    }
  }
  return r;
}

std::string RelationSet::marks() const {
  std::string out;
  for (bool b : {sigma, tau, mu, triangle}) out += b ? '+' : '-';
  return out;
}

std::vector<RelationSet> all_relation_sets() {
  std::vector<RelationSet> out;
  for (int bits = 0; bits < 16; ++bits) {
    out.push_back({(bits & 8) != 0, (bits & 4) != 0, (bits & 2) != 0, (bits & 1) != 0});
  }
  return out;
}

std::vector<LefschetzList> similarity_edges(const LefschetzList& rep, const RelationSet& rels) {
  std::vector<LefschetzList> out;
  for (Relation r : enabled(rels)) {
    auto part = single_edges(rep, r);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --------------------------------------------------------------- DisjointSets

DisjointSets::DisjointSets(std::size_t n) : parent_(n), components_(n) {
  std::iota(parent_.begin(), parent_.end(), 0u);
}

std::uint32_t DisjointSets::find(std::uint32_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::uint32_t x, std::uint32_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (y < x) std::swap(x, y);
  parent_[y] = x;
  --components_;
  return true;
}

// -------------------------------------------------- SimilarityClassification

SimilarityClassification::SimilarityClassification(Signature sig, RelationSet rels, DisjointSets sets)
    : signature_(std::move(sig)), relations_(rels), component_(sets.size()) {
  std::vector<std::uint32_t> label(sets.size(), UINT32_MAX);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::uint32_t root = sets.find(static_cast<std::uint32_t>(i));
    if (label[root] == UINT32_MAX) {
      label[root] = static_cast<std::uint32_t>(representatives_.size());
      representatives_.push_back(i);
    }
    component_[i] = label[root];
  }
}

std::vector<std::size_t> SimilarityClassification::members(std::uint32_t component) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < component_.size(); ++i) {
    if (component_[i] == component) out.push_back(i);
  }
  return out;
}

SimilarityClassification classify(const OmegaList& omega, const RelationSet& rels) {
  DisjointSets sets(omega.size());
  for (Relation r : enabled(rels)) add_edges(omega, r, sets);
  return SimilarityClassification(omega.signature(), rels, std::move(sets));
}

std::vector<RelationTableRow> relation_table(const OmegaList& omega) {
  const std::size_t n = omega.size();
  constexpr std::array<Relation, 4> order = {Relation::Sigma, Relation::Tau, Relation::Mu,
                                             Relation::Triangle};
  std::array<std::vector<std::uint32_t>, 4> roots;
  for (std::size_t r = 0; r < 4; ++r) {
    DisjointSets sets(n);
    add_edges(omega, order[r], sets);
    roots[r].resize(n);
    for (std::size_t i = 0; i < n; ++i) roots[r][i] = sets.find(static_cast<std::uint32_t>(i));
  }
  std::vector<RelationTableRow> out;
  for (const RelationSet& rels : all_relation_sets()) {
    const std::array<bool, 4> on = {rels.sigma, rels.tau, rels.mu, rels.triangle};
    DisjointSets sets(n);
    for (std::size_t r = 0; r < 4; ++r) {
      if (!on[r]) continue;
      for (std::size_t i = 0; i < n; ++i) sets.unite(static_cast<std::uint32_t>(i), roots[r][i]);
    }
    out.push_back({rels, sets.components()});
  }
  return out;
}

}  // namespace arrangeclass
