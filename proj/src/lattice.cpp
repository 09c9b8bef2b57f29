#include "arrangeclass/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <numeric>

#include "arrangeclass/similarity.hpp"

namespace arrangeclass {

GroupMode parse_group_mode(std::string_view text) {
  if (text == "affine") return GroupMode::Affine;
  if (text == "projective") return GroupMode::Projective;
  throw InputError("mode must be 'affine' or 'projective', got '" + std::string(text) + "'");
}

const char* to_string(GroupMode mode) {
  return mode == GroupMode::Affine ? "affine" : "projective";
}

// ----------------------------------------------------------- IncidenceLattice

IncidenceLattice::IncidenceLattice(int lines, std::vector<std::vector<int>> points)
    : lines_(lines), points_(std::move(points)) {
  if (lines < 1 || lines > kMaxLines) throw InputError("line count out of range");
  std::vector<std::uint32_t> masks;
  for (auto& pt : points_) {
    std::sort(pt.begin(), pt.end());
    if (pt.size() < 2) throw InputError("a point needs at least two lines");
    std::uint32_t m = 0;
    for (std::size_t k = 0; k < pt.size(); ++k) {
      if (pt[k] < 1 || pt[k] > lines) throw InputError("line number out of range");
      if (k > 0 && pt[k] == pt[k - 1]) throw InputError("line repeated at a point");
      m |= 1u << (pt[k] - 1);
    }
    for (std::uint32_t other : masks) {
      if (std::popcount(m & other) > 1) throw InputError("two points share two lines");
    }
    masks.push_back(m);
  }
}

bool IncidenceLattice::incident(int line, std::size_t j) const {
  return std::binary_search(points_[j].begin(), points_[j].end(), line);
}

std::vector<std::vector<std::uint8_t>> IncidenceLattice::matrix() const {
  std::vector<std::vector<std::uint8_t>> m(static_cast<std::size_t>(lines_),
                                           std::vector<std::uint8_t>(points_.size(), 0));
  for (std::size_t j = 0; j < points_.size(); ++j) {
    for (int line : points_[j]) m[static_cast<std::size_t>(line - 1)][j] = 1;
  }
  return m;
}

std::vector<int> IncidenceLattice::simple_lines() const {
  std::vector<char> multiple(static_cast<std::size_t>(lines_) + 1, 0);
  for (const auto& pt : points_) {
    if (pt.size() >= 3) {
      for (int line : pt) multiple[static_cast<std::size_t>(line)] = 1;
    }
  }
  std::vector<int> out;
  for (int line = 1; line <= lines_; ++line) {
    if (!multiple[static_cast<std::size_t>(line)]) out.push_back(line);
  }
  return out;
}

IncidenceLattice IncidenceLattice::without_line(int line) const {
  if (line < 1 || line > lines_) throw InputError("line number out of range");
  std::vector<std::vector<int>> pts;
  for (const auto& pt : points_) {
    std::vector<int> rest;
    for (int x : pt) {
      if (x != line) rest.push_back(x > line ? x - 1 : x);
    }
    if (rest.size() >= 2) pts.push_back(std::move(rest));
  }
  return IncidenceLattice(lines_ - 1, std::move(pts));
}

IncidenceLattice lattice_of(const LefschetzList& list) {
  const int l = list.lines();
  std::vector<int> order(static_cast<std::size_t>(l));
  std::iota(order.begin(), order.end(), 1);
  std::vector<std::vector<int>> points;
  points.reserve(list.size());
  for (const Pair& q : list.pairs()) {
    points.emplace_back(order.begin() + (q.a - 1), order.begin() + q.b);
    std::reverse(order.begin() + (q.a - 1), order.begin() + q.b);
  }
  return IncidenceLattice(l, std::move(points));
}

// ------------------------------------------------------------- canonical form

namespace {

using Cells = std::vector<std::vector<int>>;

class Canonicalizer {
 public:
  explicit Canonicalizer(const IncidenceLattice& lat) : lat_(lat), l_(lat.lines()) {
    std::vector<char> relevant(static_cast<std::size_t>(l_) + 1, 0);
    for (std::size_t j = 0; j < lat.points(); ++j) {
      if (lat.multiplicity(j) >= 3) {
        multi_.push_back(j);
        for (int line : lat.point(j)) relevant[static_cast<std::size_t>(line)] = 1;
      }
    }
    Cells start(1);
    for (int line = 1; line <= l_; ++line) {
      if (relevant[static_cast<std::size_t>(line)]) {
        start[0].push_back(line);
      } else {
        isolated_.push_back(line);
      }
    }
    if (start[0].empty()) start.clear();
    search(std::move(start));
  }

  CanonicalLattice result() const {
    CanonicalLattice out;
    out.line_order = best_order_;
    std::vector<int> label(static_cast<std::size_t>(l_) + 1);
    for (std::size_t k = 0; k < best_order_.size(); ++k) {
      label[static_cast<std::size_t>(best_order_[k])] = static_cast<int>(k);
    }
    std::vector<std::pair<std::uint32_t, std::size_t>> multi_cols, simple_cols;
    for (std::size_t j = 0; j < lat_.points(); ++j) {
      const std::uint32_t m = relabelled(j, label);
      (lat_.multiplicity(j) >= 3 ? multi_cols : simple_cols).emplace_back(m, j);
    }
    std::sort(multi_cols.rbegin(), multi_cols.rend());
    std::sort(simple_cols.rbegin(), simple_cols.rend());
    std::vector<std::uint32_t> cols;
    for (const auto* group : {&multi_cols, &simple_cols}) {
      for (auto [m, j] : *group) {
        cols.push_back(m);
        out.point_order.push_back(j);
      }
    }
    for (int k = 0; k < l_; ++k) {
      std::string row;
      for (std::uint32_t m : cols) row += (m >> (l_ - 1 - k) & 1u) ? '1' : '0';
      out.rows.push_back(std::move(row));
    }
    return out;
  }

 private:
  std::uint32_t relabelled(std::size_t j, const std::vector<int>& label) const {
    std::uint32_t m = 0;
    for (int line : lat_.point(j)) m |= 1u << (l_ - 1 - label[static_cast<std::size_t>(line)]);
    return m;
  }

  void refine(Cells& cells) const {
    std::vector<int> cell_of(static_cast<std::size_t>(l_) + 1, -1);
    for (;;) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        for (int line : cells[c]) cell_of[static_cast<std::size_t>(line)] = static_cast<int>(c);
      }
      std::vector<std::vector<std::vector<int>>> key(static_cast<std::size_t>(l_) + 1);
      for (std::size_t j : multi_) {
        std::vector<int> desc;
        for (int line : lat_.point(j)) desc.push_back(cell_of[static_cast<std::size_t>(line)]);
        std::sort(desc.begin(), desc.end());
        for (int line : lat_.point(j)) key[static_cast<std::size_t>(line)].push_back(desc);
      }
      for (auto& k : key) std::sort(k.begin(), k.end());
      Cells next;
      for (const auto& cell : cells) {
        std::vector<int> sorted = cell;
        std::stable_sort(sorted.begin(), sorted.end(), [&](int x, int y) {
          return key[static_cast<std::size_t>(x)] < key[static_cast<std::size_t>(y)];
        });
        std::size_t start = 0;
        for (std::size_t k = 1; k <= sorted.size(); ++k) {
          if (k == sorted.size() ||
              key[static_cast<std::size_t>(sorted[k])] != key[static_cast<std::size_t>(sorted[start])]) {
            next.emplace_back(sorted.begin() + static_cast<std::ptrdiff_t>(start),
                              sorted.begin() + static_cast<std::ptrdiff_t>(k));
            start = k;
          }
        }
      }
      const bool stable = next.size() == cells.size();
      cells = std::move(next);
      if (stable) return;
    }
  }

  void search(Cells cells) {
    refine(cells);
    auto open = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (open == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t at = static_cast<std::size_t>(open - cells.begin());
    for (int v : cells[at]) {
      Cells branch;
      branch.reserve(cells.size() + 1);
      branch.insert(branch.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(at));
      branch.push_back({v});
      std::vector<int> rest;
      for (int w : cells[at]) {
        if (w != v) rest.push_back(w);
      }
      branch.push_back(std::move(rest));
      branch.insert(branch.end(), cells.begin() + static_cast<std::ptrdiff_t>(at) + 1, cells.end());
      search(std::move(branch));
    }
  }

  void leaf(const Cells& cells) {
    std::vector<int> order;
    for (const auto& c : cells) order.push_back(c[0]);
    order.insert(order.end(), isolated_.begin(), isolated_.end());
    std::vector<int> label(static_cast<std::size_t>(l_) + 1);
    for (std::size_t k = 0; k < order.size(); ++k) label[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
    std::vector<std::uint32_t> code;
    code.reserve(multi_.size());
    for (std::size_t j : multi_) code.push_back(relabelled(j, label));
    std::sort(code.rbegin(), code.rend());
    if (best_order_.empty() || code > best_code_) {
      best_code_ = std::move(code);
      best_order_ = std::move(order);
    }
  }

  const IncidenceLattice& lat_;
  int l_;
  std::vector<std::size_t> multi_;
  std::vector<int> isolated_;
  std::vector<std::uint32_t> best_code_;
  std::vector<int> best_order_;
};

}  // namespace

CanonicalLattice canonical_form(const IncidenceLattice& lattice) {
  return Canonicalizer(lattice).result();
}

bool lattices_isomorphic(const IncidenceLattice& x, const IncidenceLattice& y) {
  if (x.lines() != y.lines() || x.points() != y.points()) return false;
  return canonical_form(x) == canonical_form(y);
}

// ----------------------------------------------------------- multipoint graph

MultiPointGraph multipoint_graph(const IncidenceLattice& lattice) {
  MultiPointGraph g;
  std::vector<std::vector<std::size_t>> on_line(static_cast<std::size_t>(lattice.lines()) + 1);
  for (std::size_t j = 0; j < lattice.points(); ++j) {
    if (lattice.multiplicity(j) < 3) continue;
    const std::size_t v = g.points.size();
    g.points.push_back(j);
    g.multiplicities.push_back(lattice.multiplicity(j));
    for (int line : lattice.point(j)) on_line[static_cast<std::size_t>(line)].push_back(v);
  }
  for (int line = 1; line <= lattice.lines(); ++line) {
    const auto& vs = on_line[static_cast<std::size_t>(line)];
    for (std::size_t k = 1; k < vs.size(); ++k) g.edges.push_back({vs[k - 1], vs[k], line});
  }
  return g;
}

bool MultiPointGraph::acyclic() const {
  DisjointSets sets(points.size());
  for (const Edge& e : edges) {
    if (!sets.unite(static_cast<std::uint32_t>(e.u), static_cast<std::uint32_t>(e.v))) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> MultiPointGraph::components() const {
  DisjointSets sets(points.size());
  for (const Edge& e : edges) sets.unite(static_cast<std::uint32_t>(e.u), static_cast<std::uint32_t>(e.v));
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> slot(points.size(), SIZE_MAX);
  for (std::size_t v = 0; v < points.size(); ++v) {
    const std::uint32_t root = sets.find(static_cast<std::uint32_t>(v));
    if (slot[root] == SIZE_MAX) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(v);
  }
  return out;
}

// ----------------------------------------------------------- StructuredGroup

StructuredGroup::StructuredGroup(std::vector<int> free, int abelian)
    : free_ranks(std::move(free)), abelian_rank(abelian) {
  for (int r : free_ranks) {
    if (r < 2) throw InputError("free factors must have rank at least 2");
  }
  if (abelian_rank < 0) throw InputError("negative abelian rank");
  std::sort(free_ranks.begin(), free_ranks.end());
}

StructuredGroup StructuredGroup::parse(std::string_view text) {
  std::vector<int> free;
  int abelian = 0;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    auto number = [&](std::string_view digits) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
      if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw InputError("bad group factor '" + token + "'");
      }
      return v;
    };
    if (token == "1") {
    } else if (token[0] == 'F') {
      free.push_back(number(std::string_view(token).substr(1)));
    } else if (token == "Z") {
      abelian += 1;
    } else if (token.rfind("Z^", 0) == 0) {
      abelian += number(std::string_view(token).substr(2));
    } else {
      throw InputError("bad group factor '" + token + "'");
    }
    token.clear();
  };
  for (char c : text) {
    if (c == '+' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return StructuredGroup(std::move(free), abelian);
}

std::string StructuredGroup::to_string() const {
  std::vector<std::string> parts;
  if (abelian_rank == 1) parts.push_back("Z");
  if (abelian_rank > 1) parts.push_back("Z^" + std::to_string(abelian_rank));
  for (int r : free_ranks) parts.push_back("F" + std::to_string(r));
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k) out += " + " + parts[k];
  return out;
}

int StructuredGroup::rank() const {
  return std::accumulate(free_ranks.begin(), free_ranks.end(), abelian_rank);
}

std::optional<StructuredGroup> structured_group_oracle(const IncidenceLattice& lattice, GroupMode mode) {
  if (const auto simple = lattice.simple_lines(); !simple.empty() && lattice.lines() > 1) {
    auto sub = structured_group_oracle(lattice.without_line(simple.front()), mode);
    if (!sub) return std::nullopt;
    sub->abelian_rank += 1;
    return sub;
  }
  const MultiPointGraph g = multipoint_graph(lattice);
  if (mode == GroupMode::Projective) {
    if (!g.acyclic()) return std::nullopt;
  } else {
    for (const auto& comp : g.components()) {
      std::vector<int> common = lattice.point(g.points[comp[0]]);
      for (std::size_t v : comp) {
        const auto& pt = lattice.point(g.points[v]);
        std::vector<int> keep;
        std::set_intersection(common.begin(), common.end(), pt.begin(), pt.end(),
                              std::back_inserter(keep));
        common = std::move(keep);
      }
      if (common.empty()) return std::nullopt;
    }
  }
  std::vector<int> free;
  int used = 0;
  for (int m : g.multiplicities) {
    free.push_back(m - 1);
    used += m - 1;
  }
  const int abelian = lattice.lines() - used - (mode == GroupMode::Projective ? 1 : 0);
  if (abelian < 0) return std::nullopt;
  return StructuredGroup(std::move(free), abelian);
}

}  // namespace arrangeclass
