#include "arrangeclass/moves.hpp"

#include <algorithm>
#include <bitset>
#include <deque>
#include <set>
#include <unordered_map>

namespace arrangeclass {

namespace {

using Bits = std::bitset<128>;

/// The heap order of a pair list: succ[x] holds every later position that
/// must stay after x in all members of the class.
struct Heap {
  std::vector<Bits> succ;
  std::vector<Bits> pred;
};

Heap build_heap(const std::vector<Pair>& v) {
  const std::size_t n = v.size();
  if (n > 128) throw InputError("pair list too long");
  Heap h{std::vector<Bits>(n), std::vector<Bits>(n)};
  for (std::size_t x = n; x-- > 0;) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (!disjoint(v[x], v[y]) && !h.succ[x][y]) {
        h.succ[x].set(y);
        h.succ[x] |= h.succ[y];
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (h.succ[x][y]) h.pred[y].set(x);
    }
  }
  return h;
}

std::vector<Pair> greedy_min(const std::vector<Pair>& v) {
  const std::size_t n = v.size();
  std::vector<char> used(n, 0);
  std::vector<Pair> out;
  out.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::uint32_t blocked = 0;
    std::size_t best = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      if ((v[j].mask() & blocked) == 0 && (best == n || v[j] < v[best])) best = j;
      blocked |= v[j].mask();
    }
    used[best] = 1;
    out.push_back(v[best]);
  }
  return out;
}

LefschetzList with_pairs(const LefschetzList& like, std::vector<Pair> pairs) {
  return LefschetzList(like.lines(), std::move(pairs));
}

bool window_matches(const std::vector<Pair>& v, std::size_t at, const std::vector<Pair>& w) {
  if (at + w.size() > v.size()) return false;
  return std::equal(w.begin(), w.end(), v.begin() + static_cast<std::ptrdiff_t>(at));
}

struct WindowSpec {
  int c, i, t;
  TriangleDirection dir;
  std::vector<Pair> from;
  std::vector<Pair> to;
};

std::vector<WindowSpec> window_specs(int lines, int min_t) {
  std::vector<WindowSpec> out;
  for (int t = std::max(min_t, 2); t <= lines - 1; ++t) {
    for (int c = 1; c + t <= lines; ++c) {
      for (int i = 0; i <= t; ++i) {
        auto up = tru(c, i, t);
        auto down = trd(c, i, t);
        out.push_back({c, i, t, TriangleDirection::UpToDown, up, down});
        out.push_back({c, i, t, TriangleDirection::DownToUp, std::move(down), std::move(up)});
      }
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- relation ≡

std::vector<LefschetzList> equiv_neighbors(const LefschetzList& list) {
  std::vector<LefschetzList> out;
  const auto& v = list.pairs();
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    if (disjoint(v[k], v[k + 1])) {
      auto w = v;
      std::swap(w[k], w[k + 1]);
      out.push_back(with_pairs(list, std::move(w)));
    }
  }
  return out;
}

LefschetzList equiv_class_min(const LefschetzList& list) {
  return with_pairs(list, greedy_min(list.pairs()));
}

bool is_class_min(const LefschetzList& list) {
  const auto& v = list.pairs();
  for (std::size_t k = 1; k < v.size(); ++k) {
    for (std::size_t j = k; j-- > 0;) {
      if (!disjoint(v[j], v[k])) break;
      if (v[k] < v[j]) return false;
    }
  }
  return true;
}

std::vector<LefschetzList> equiv_class(const LefschetzList& list, std::size_t cap) {
  std::set<std::vector<Pair>> seen{list.pairs()};
  std::deque<std::vector<Pair>> work{list.pairs()};
  while (!work.empty()) {
    auto cur = std::move(work.front());
    work.pop_front();
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      if (!disjoint(cur[k], cur[k + 1])) continue;
      auto w = cur;
      std::swap(w[k], w[k + 1]);
      if (seen.insert(w).second) {
        if (seen.size() > cap) {
          throw ResourceError("equivalence class exceeds cap of " + std::to_string(cap));
        }
        work.push_back(std::move(w));
      }
    }
  }
  std::vector<LefschetzList> out;
  out.reserve(seen.size());
  for (const auto& w : seen) out.push_back(with_pairs(list, w));
  return out;
}

std::uint64_t equiv_class_size(const LefschetzList& list) {
  const auto& v = list.pairs();
  const std::size_t n = v.size();
  if (n > 128) throw InputError("pair list too long");
  std::vector<Bits> direct_pred(n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < y; ++x) {
      if (!disjoint(v[x], v[y])) direct_pred[y].set(x);
    }
  }
  std::unordered_map<Bits, std::uint64_t> memo;
  auto count = [&](auto&& self, const Bits& taken) -> std::uint64_t {
    if (taken.count() == n) return 1;
    if (auto it = memo.find(taken); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (taken[x] || (direct_pred[x] & ~taken).any()) continue;
      Bits next = taken;
      next.set(x);
      if (__builtin_add_overflow(total, self(self, next), &total)) {
        throw ResourceError("equivalence class size overflows 64 bits");
      }
    }
    memo.emplace(taken, total);
    return total;
  };
  return count(count, Bits{});
}

// ------------------------------------------------------------------- actions

LefschetzList tau(const LefschetzList& list) {
  auto w = list.pairs();
  std::reverse(w.begin(), w.end());
  return with_pairs(list, std::move(w));
}

LefschetzList mu_raw(const LefschetzList& list) {
  std::vector<Pair> plus, zero, minus;
  int x = 1;
  for (const Pair& q : list.pairs()) {
    if (q.a <= x && x <= q.b) {
      if (x != q.a) {
        throw InternalError("rotation scan met " + list.to_string() +
                            " inside a segment; list lacks the unique intersection property");
      }
      zero.push_back(q);
      x = q.a + q.b - x;
    } else if (x > q.b) {
      minus.push_back(q);
    } else {
      plus.push_back(q);
    }
  }
  std::vector<Pair> out;
  out.reserve(list.size());
  for (const Pair& q : plus) out.push_back(q.shifted(-1));
  out.insert(out.end(), zero.rbegin(), zero.rend());
  for (const Pair& q : minus) out.push_back(q.shifted(1));
  return with_pairs(list, std::move(out));
}

LefschetzList mu(const LefschetzList& list) {
  return equiv_class_min(mu_raw(equiv_class_min(list)));
}

LefschetzList sigma(const LefschetzList& list) {
  if (list.empty()) throw InputError("sigma of an empty list");
  const int l = list.lines();
  std::vector<Pair> w(list.pairs().begin() + 1, list.pairs().end());
  const Pair first = list[0];
  w.emplace_back(l + 1 - first.b, l + 1 - first.a);
  return with_pairs(list, std::move(w));
}

std::vector<LefschetzList> sigma_class_targets(const LefschetzList& rep) {
  const auto& v = rep.pairs();
  std::set<LefschetzList> out;
  std::uint32_t blocked = 0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if ((v[j].mask() & blocked) == 0) {
      std::vector<Pair> member;
      member.reserve(v.size());
      member.push_back(v[j]);
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (k != j) member.push_back(v[k]);
      }
      out.insert(equiv_class_min(sigma(with_pairs(rep, std::move(member)))));
    }
    blocked |= v[j].mask();
  }
  return {out.begin(), out.end()};
}

// ------------------------------------------------------------- triangle moves

std::vector<Pair> tru(int c, int i, int t) {
  std::vector<Pair> w;
  for (int j = i; j <= t - 1; ++j) w.emplace_back(c + j, c + j + 1);
  w.emplace_back(c, c + t - 1);
  for (int j = t - 1; j >= t - i; --j) w.emplace_back(c + j, c + j + 1);
  return w;
}

std::vector<Pair> trd(int c, int i, int t) {
  std::vector<Pair> w;
  for (int j = i - 1; j >= 0; --j) w.emplace_back(c + j, c + j + 1);
  w.emplace_back(c + 1, c + t);
  for (int j = 0; j <= t - 1 - i; ++j) w.emplace_back(c + j, c + j + 1);
  return w;
}

std::vector<TriangleMove> triangle_windows(const LefschetzList& rep, int min_t) {
  const auto& v = rep.pairs();
  const std::size_t n = v.size();
  const int l = rep.lines();
  const Heap heap = build_heap(v);
  std::vector<TriangleMove> out;

  auto try_window = [&](std::size_t center, int c, int i, int t, TriangleDirection dir) {
    const auto from = dir == TriangleDirection::UpToDown ? tru(c, i, t) : trd(c, i, t);
    const auto to = dir == TriangleDirection::UpToDown ? trd(c, i, t) : tru(c, i, t);
    const std::size_t mid = dir == TriangleDirection::UpToDown ? static_cast<std::size_t>(t - i)
                                                               : static_cast<std::size_t>(i);
    std::vector<std::size_t> chain(from.size());
    chain[mid] = center;
    for (std::size_t k = mid; k-- > 0;) {
      std::size_t j = chain[k + 1];
      do {
        if (j == 0) return;
        --j;
      } while (v[j] != from[k]);
      chain[k] = j;
    }
    for (std::size_t k = mid + 1; k < from.size(); ++k) {
      std::size_t j = chain[k - 1];
      do {
        if (++j >= n) return;
      } while (v[j] != from[k]);
      chain[k] = j;
    }
    Bits in_window;
    for (std::size_t x : chain) in_window.set(x);
    const std::size_t x0 = chain.front();
    const Bits between = heap.succ[x0] & heap.pred[chain.back()];
    if ((between & ~in_window).any()) return;

    std::vector<Pair> member;
    member.reserve(n);
    for (std::size_t y = 0; y < n; ++y) {
      if (y != x0 && !heap.succ[x0][y]) member.push_back(v[y]);
    }
    const std::size_t position = member.size();
    member.insert(member.end(), to.begin(), to.end());
    for (std::size_t y = 0; y < n; ++y) {
      if (heap.succ[x0][y] && !in_window[y]) member.push_back(v[y]);
    }
    out.push_back({c, i, t, dir, position, equiv_class_min(with_pairs(rep, std::move(member)))});
  };

  for (std::size_t m = 0; m < n; ++m) {
    const int t = v[m].multiplicity();
    if (t < std::max(min_t, 2)) continue;
    if (v[m].b + 1 <= l) {
      for (int i = 0; i <= t; ++i) try_window(m, v[m].a, i, t, TriangleDirection::UpToDown);
    }
    if (v[m].a - 1 >= 1) {
      for (int i = 0; i <= t; ++i) try_window(m, v[m].a - 1, i, t, TriangleDirection::DownToUp);
    }
  }
  return out;
}

std::vector<LefschetzList> triangle_moves(const LefschetzList& rep, int min_t) {
  std::set<LefschetzList> out;
  for (auto& mv : triangle_windows(rep, min_t)) out.insert(std::move(mv.result));
  return {out.begin(), out.end()};
}

std::vector<LefschetzList> triangle_moves_by_closure(const LefschetzList& rep, int min_t,
                                                     std::size_t cap) {
  const auto specs = window_specs(rep.lines(), min_t);
  std::set<LefschetzList> out;
  for (const LefschetzList& member : equiv_class(rep, cap)) {
    const auto& v = member.pairs();
    for (std::size_t at = 0; at < v.size(); ++at) {
      for (const WindowSpec& s : specs) {
        if (!window_matches(v, at, s.from)) continue;
        auto w = v;
        std::copy(s.to.begin(), s.to.end(), w.begin() + static_cast<std::ptrdiff_t>(at));
        out.insert(equiv_class_min(with_pairs(rep, std::move(w))));
      }
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace arrangeclass
