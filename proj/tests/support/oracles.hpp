#pragma once

// Reference implementations used only by the tests. They trade speed for
// being obviously correct.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "arrangeclass/core.hpp"
#include "arrangeclass/moves.hpp"

namespace oracle {

using arrangeclass::LefschetzList;
using arrangeclass::Pair;

/// Wire order bottom to top after each pair; 1-based wire labels.
inline std::vector<int> final_order(const LefschetzList& list) {
  std::vector<int> at(static_cast<std::size_t>(list.lines()));
  for (int k = 0; k < list.lines(); ++k) at[static_cast<std::size_t>(k)] = k + 1;
  for (const Pair& p : list.pairs()) std::reverse(at.begin() + p.a - 1, at.begin() + p.b);
  return at;
}

/// Every two wires meet exactly once.
inline bool unique_intersections(const LefschetzList& list) {
  const int l = list.lines();
  std::vector<int> at(static_cast<std::size_t>(l));
  for (int k = 0; k < l; ++k) at[static_cast<std::size_t>(k)] = k;
  std::vector<std::vector<int>> met(static_cast<std::size_t>(l), std::vector<int>(static_cast<std::size_t>(l), 0));
  for (const Pair& p : list.pairs()) {
    for (int x = p.a; x <= p.b; ++x) {
      for (int y = x + 1; y <= p.b; ++y) {
        ++met[static_cast<std::size_t>(at[static_cast<std::size_t>(x - 1)])][static_cast<std::size_t>(at[static_cast<std::size_t>(y - 1)])];
        ++met[static_cast<std::size_t>(at[static_cast<std::size_t>(y - 1)])][static_cast<std::size_t>(at[static_cast<std::size_t>(x - 1)])];
      }
    }
    std::reverse(at.begin() + p.a - 1, at.begin() + p.b);
  }
  for (int x = 0; x < l; ++x) {
    for (int y = 0; y < l; ++y) {
      if (x != y && met[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] != 1) return false;
    }
  }
  return true;
}

/// Multiplicity histogram.
inline std::map<int, int> widths(const LefschetzList& list) {
  std::map<int, int> out;
  for (const Pair& p : list.pairs()) ++out[p.multiplicity()];
  return out;
}

/// Random UIP list: repeatedly reverse a random block of wires that are
/// still in increasing order. Longer blocks are drawn with probability
/// `merge` at each extension step.
template <class Rng>
LefschetzList random_uip(int lines, Rng& rng, double merge = 0.3) {
  std::vector<int> at(static_cast<std::size_t>(lines));
  for (int k = 0; k < lines; ++k) at[static_cast<std::size_t>(k)] = k;
  std::vector<Pair> pairs;
  std::bernoulli_distribution extend(merge);
  for (;;) {
    std::vector<int> starts;
    for (int k = 0; k + 1 < lines; ++k) {
      if (at[static_cast<std::size_t>(k)] < at[static_cast<std::size_t>(k + 1)]) starts.push_back(k);
    }
    if (starts.empty()) break;
    const int a = starts[std::uniform_int_distribution<std::size_t>(0, starts.size() - 1)(rng)];
    int b = a + 1;
    while (b + 1 < lines && at[static_cast<std::size_t>(b)] < at[static_cast<std::size_t>(b + 1)] && extend(rng)) ++b;
    std::reverse(at.begin() + a, at.begin() + b + 1);
    pairs.emplace_back(a + 1, b + 1);
  }
  return LefschetzList(lines, std::move(pairs));
}

/// Every UIP list whose multiplicity histogram is `target`, by exhaustive
/// search over pair sequences.
inline std::vector<LefschetzList> all_uip_lists(int lines, const std::map<int, int>& target) {
  std::vector<LefschetzList> out;
  std::vector<int> at(static_cast<std::size_t>(lines));
  for (int k = 0; k < lines; ++k) at[static_cast<std::size_t>(k)] = k;
  std::map<int, int> left = target;
  std::vector<Pair> pairs;
  auto rec = [&](auto&& self) -> void {
    bool done = true;
    for (int k = 0; k + 1 < lines; ++k) {
      if (at[static_cast<std::size_t>(k)] < at[static_cast<std::size_t>(k + 1)]) done = false;
    }
    if (done) {
      if (std::all_of(left.begin(), left.end(), [](auto& kv) { return kv.second == 0; })) {
        out.emplace_back(lines, pairs);
      }
      return;
    }
    for (int a = 1; a < lines; ++a) {
      for (int b = a + 1; b <= lines; ++b) {
        if (at[static_cast<std::size_t>(b - 2)] > at[static_cast<std::size_t>(b - 1)]) break;
        const int m = b - a + 1;
        auto it = left.find(m);
        if (it == left.end() || it->second == 0) continue;
        --it->second;
        std::reverse(at.begin() + a - 1, at.begin() + b);
        pairs.emplace_back(a, b);
        self(self);
        pairs.pop_back();
        std::reverse(at.begin() + a - 1, at.begin() + b);
        ++it->second;
      }
    }
  };
  rec(rec);
  return out;
}

/// Closure under swaps of adjacent disjoint pairs, as a sorted set.
inline std::set<LefschetzList> swap_closure(const LefschetzList& start) {
  std::set<LefschetzList> seen{start};
  std::vector<LefschetzList> todo{start};
  while (!todo.empty()) {
    const LefschetzList cur = todo.back();
    todo.pop_back();
    auto pairs = cur.pairs();
    for (std::size_t k = 0; k + 1 < pairs.size(); ++k) {
      if (pairs[k].b < pairs[k + 1].a || pairs[k + 1].b < pairs[k].a) {
        std::swap(pairs[k], pairs[k + 1]);
        LefschetzList next(cur.lines(), pairs);
        if (seen.insert(next).second) todo.push_back(next);
        std::swap(pairs[k], pairs[k + 1]);
      }
    }
  }
  return seen;
}

/// Class minima of every UIP list with the given histogram.
inline std::set<LefschetzList> brute_force_omega(int lines, const std::map<int, int>& target) {
  std::set<LefschetzList> mins;
  std::set<LefschetzList> covered;
  for (const LefschetzList& l : all_uip_lists(lines, target)) {
    if (covered.count(l)) continue;
    const auto cls = swap_closure(l);
    covered.insert(cls.begin(), cls.end());
    mins.insert(*cls.begin());
  }
  return mins;
}

/// Literal scan for the rotation action, without any class handling.
inline LefschetzList rotation_scan(const LefschetzList& list) {
  std::vector<Pair> plus, zero, minus;
  int x = 1;
  for (const Pair& p : list.pairs()) {
    if (p.a <= x && x <= p.b) {
      zero.push_back(p);
      x = p.a + p.b - x;
    } else if (x > p.b) {
      minus.push_back(p);
    } else {
      plus.push_back(p);
    }
  }
  std::vector<Pair> out;
  for (const Pair& p : plus) out.push_back(p.shifted(-1));
  out.insert(out.end(), zero.rbegin(), zero.rend());
  for (const Pair& p : minus) out.push_back(p.shifted(1));
  return LefschetzList(list.lines(), out);
}

}  // namespace oracle
