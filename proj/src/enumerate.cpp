#include "arrangeclass/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <unistd.h>

#include "arrangeclass/moves.hpp"

namespace arrangeclass {

namespace {

using Order = std::array<std::uint8_t, kMaxLines>;

std::uint64_t pack(const Order& order, int lines) {
  std::uint64_t key = 0;
  for (int i = 0; i < lines; ++i) key |= std::uint64_t(order[static_cast<std::size_t>(i)]) << (4 * i);
  return key;
}

/// Depth-first search over reduced words in lexicographic normal form with a
/// prescribed multiset of pair widths. Words are produced in increasing
/// lexicographic order. `order[pos]` is the label of the wire at `pos`, with
/// labels equal to the starting positions (0-based).
class WordSearch {
 public:
  WordSearch(int lines, const std::map<int, int>& widths) : lines_(lines) {
    remaining_.fill(0);
    length_ = 0;
    for (auto [k, n] : widths) {
      remaining_[static_cast<std::size_t>(k)] = n;
      length_ += static_cast<std::size_t>(n);
    }
    for (int a = 1; a < lines; ++a) {
      for (int b = a + 1; b <= lines; ++b) {
        if (widths.count(b - a + 1)) letters_.emplace_back(a, b);
      }
    }
    for (int i = 0; i < kMaxLines; ++i) order_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    word_.reserve(length_);
  }

  std::size_t length() const { return length_; }

  template <class Visit>
  void run(Visit&& visit) {
    dfs(visit);
  }

 private:
  template <class Visit>
  void dfs(Visit& visit) {
    if (word_.size() == length_) {
      visit(static_cast<const std::vector<Pair>&>(word_), static_cast<const Order&>(order_));
      return;
    }
    for (const Pair x : letters_) {
      auto& left = remaining_[static_cast<std::size_t>(x.multiplicity())];
      if (left == 0) continue;
      if (!segment_increasing(x)) continue;
      if (!normal_after(x)) continue;
      --left;
      std::reverse(order_.begin() + (x.a - 1), order_.begin() + x.b);
      word_.push_back(x);
      dfs(visit);
      word_.pop_back();
      std::reverse(order_.begin() + (x.a - 1), order_.begin() + x.b);
      ++left;
    }
  }

  bool segment_increasing(Pair x) const {
    for (int i = x.a; i < x.b; ++i) {
      if (order_[static_cast<std::size_t>(i - 1)] > order_[static_cast<std::size_t>(i)]) return false;
    }
    return true;
  }

  bool normal_after(Pair x) const {
    for (std::size_t j = word_.size(); j-- > 0;) {
      if (!disjoint(word_[j], x)) return true;
      if (x < word_[j]) return false;
    }
    return true;
  }

  int lines_;
  std::size_t length_;
  std::array<int, kMaxLines + 1> remaining_{};
  std::vector<Pair> letters_;
  std::vector<Pair> word_;
  Order order_{};
};

int lines_of(const Signature& sig) {
  if (sig.empty()) throw InputError("empty signature");
  const int l = sig.lines();
  if (l < 2) throw InputError("signature " + sig.to_string() + " does not satisfy the counting identity");
  if (l > kMaxLines) throw InputError("signature needs more than 16 lines");
  return l;
}

void split(const std::vector<std::pair<int, int>>& items, std::size_t at, int left,
           std::map<int, int>& first, std::vector<std::map<int, int>>& out) {
  if (at == items.size()) {
    if (left == 0) out.push_back(first);
    return;
  }
  const auto [k, n] = items[at];
  for (int take = std::min(n, left); take >= 0; --take) {
    if (take > 0) first[k] = take; else first.erase(k);
    split(items, at + 1, left - take, first, out);
  }
  first.erase(k);
}

std::vector<std::map<int, int>> first_parts(const Signature& sig, int p0) {
  std::vector<std::pair<int, int>> items(sig.counts().begin(), sig.counts().end());
  std::vector<std::map<int, int>> out;
  std::map<int, int> first;
  split(items, 0, p0, first, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::map<int, int> minus(const Signature& sig, const std::map<int, int>& part) {
  std::map<int, int> rest;
  for (auto [k, n] : sig.counts()) {
    const int r = n - (part.count(k) ? part.at(k) : 0);
    if (r > 0) rest[k] = r;
  }
  return rest;
}

std::string describe(const std::map<int, int>& part) {
  return part.empty() ? std::string("[]") : "[" + Signature(part).to_string() + "]";
}

/// One meet-in-the-middle pass with first halves of p0 points (1 <= p0 <= p).
OmegaList meet_in_middle(const Signature& sig, int p0, double mem_gb, EnumerateStats& stats) {
  const int l = lines_of(sig);
  const std::size_t p = static_cast<std::size_t>(sig.points());
  const std::size_t h = static_cast<std::size_t>(p0);
  const double budget = mem_gb * 1024.0 * 1024.0 * 1024.0;
  const double entry_bytes = 8.0 + 4.0 + 2.0 * static_cast<double>(h);

  OmegaList omega(sig, l);
  stats = EnumerateStats{};
  stats.p0 = p0;
  std::vector<Pair> joined(p);

  for (const auto& part0 : first_parts(sig, p0)) {
    const auto part1 = minus(sig, part0);
    ++stats.dissections;

    std::vector<std::uint64_t> keys;
    std::vector<Pair> words;
    WordSearch(l, part0).run([&](const std::vector<Pair>& w, const Order& order) {
      keys.push_back(pack(order, l));
      words.insert(words.end(), w.begin(), w.end());
      if (static_cast<double>(keys.size()) * entry_bytes > budget) {
        throw ResourceError("first-half table for dissection " + describe(part0) + " + " +
                            describe(part1) + " exceeds the memory budget of " +
                            std::to_string(mem_gb) + " GB");
      }
    });
    stats.largest_table = std::max(stats.largest_table, keys.size());

    std::vector<std::uint32_t> idx(keys.size());
    std::iota(idx.begin(), idx.end(), 0u);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::uint32_t x, std::uint32_t y) { return keys[x] < keys[y]; });
    std::vector<std::uint64_t> sorted_keys(keys.size());
    std::vector<Pair> sorted_words(words.size());
    for (std::size_t r = 0; r < idx.size(); ++r) {
      sorted_keys[r] = keys[idx[r]];
      std::copy_n(words.begin() + static_cast<std::ptrdiff_t>(idx[r] * h), h,
                  sorted_words.begin() + static_cast<std::ptrdiff_t>(r * h));
    }
    keys = {};
    words = {};
    idx = {};

    std::vector<Pair> front;
    WordSearch(l, part1).run([&](const std::vector<Pair>& v, const Order& order) {
      Order target{};
      for (int pos = 0; pos < l; ++pos) {
        target[order[static_cast<std::size_t>(pos)]] = static_cast<std::uint8_t>(l - 1 - pos);
      }
      const std::uint64_t key = pack(target, l);
      auto [lo, hi] = std::equal_range(sorted_keys.begin(), sorted_keys.end(), key);
      if (lo == hi) return;

      front.clear();
      std::uint32_t blocked = 0;
      for (const Pair x : v) {
        if ((x.mask() & blocked) == 0) front.push_back(x);
        blocked |= x.mask();
      }
      std::copy(v.begin(), v.end(), joined.begin() + static_cast<std::ptrdiff_t>(h));
      for (auto it = lo; it != hi; ++it) {
        ++stats.half_classes;
        const Pair* u = sorted_words.data() + static_cast<std::size_t>(it - sorted_keys.begin()) * h;
        bool minimal = true;
        for (const Pair x : front) {
          for (std::size_t j = h; j-- > 0;) {
            if (!disjoint(u[j], x)) break;
            if (x < u[j]) {
              minimal = false;
              break;
            }
          }
          if (!minimal) break;
        }
        if (!minimal) continue;
        std::copy(u, u + h, joined.begin());
        omega.append(joined);
      }
    });
  }
  omega.normalize();
  return omega;
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

constexpr std::string_view kCacheMagic = "arrangeclass-omega";
constexpr std::string_view kCacheVersion = "v1";

}  // namespace

// ------------------------------------------------------------------ OmegaList

OmegaList::OmegaList(Signature sig, int lines)
    : signature_(std::move(sig)), lines_(lines),
      points_(static_cast<std::size_t>(signature_.points())) {}

LefschetzList OmegaList::at(std::size_t i) const {
  auto w = word(i);
  return LefschetzList(lines_, {w.begin(), w.end()});
}

std::optional<std::size_t> OmegaList::index_of(std::span<const Pair> w) const {
  if (w.size() != points_) return std::nullopt;
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto m = word(mid);
    if (std::lexicographical_compare(m.begin(), m.end(), w.begin(), w.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < size() && std::equal(w.begin(), w.end(), word(lo).begin())) return lo;
  return std::nullopt;
}

std::optional<std::size_t> OmegaList::index_of(const LefschetzList& list) const {
  if (list.lines() != lines_) return std::nullopt;
  return index_of(std::span<const Pair>(list.pairs()));
}

void OmegaList::append(std::span<const Pair> w) {
  if (w.size() != points_) throw InternalError("row length does not match signature");
  data_.insert(data_.end(), w.begin(), w.end());
}

void OmegaList::normalize() {
  const std::size_t n = size();
  if (n == 0) return;
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  auto less = [&](std::size_t x, std::size_t y) {
    auto a = word(x);
    auto b = word(y);
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  };
  std::sort(idx.begin(), idx.end(), less);
  std::vector<Pair> sorted;
  sorted.reserve(data_.size());
  for (std::size_t r = 0; r < n; ++r) {
    if (r > 0 && !less(idx[r - 1], idx[r])) continue;
    auto w = word(idx[r]);
    sorted.insert(sorted.end(), w.begin(), w.end());
  }
  data_ = std::move(sorted);
}

// -------------------------------------------------------------- enumeration

std::vector<std::pair<Signature, Signature>> dissections(const Signature& sig, int p0) {
  const int p = sig.points();
  if (p0 < 1 || p0 >= p) {
    throw InputError("split point must satisfy 1 <= p0 < " + std::to_string(p));
  }
  std::vector<std::pair<Signature, Signature>> out;
  for (const auto& part : first_parts(sig, p0)) {
    out.emplace_back(Signature(part), Signature(minus(sig, part)));
  }
  return out;
}

OmegaList enumerate_omega(const Signature& sig, const EnumerateOptions& opts, EnumerateStats* stats) {
  const int p = sig.points();
  lines_of(sig);
  EnumerateStats local;
  EnumerateStats& st = stats ? *stats : local;
  if (opts.p0 != 0) {
    if (opts.p0 < 1 || opts.p0 > p) {
      throw InputError("split point must satisfy 1 <= p0 <= " + std::to_string(p));
    }
    return meet_in_middle(sig, opts.p0, opts.mem_gb, st);
  }
  for (int p0 = std::max(1, p / 2);; --p0) {
    try {
      return meet_in_middle(sig, p0, opts.mem_gb, st);
    } catch (const ResourceError&) {
      if (p0 == 1) throw;
    }
  }
}

std::uint64_t count_half_classes(const Signature& sig, int p0, double mem_gb) {
  EnumerateStats st;
  EnumerateOptions opts;
  opts.p0 = p0;
  opts.mem_gb = mem_gb;
  enumerate_omega(sig, opts, &st);
  return st.half_classes;
}

OmegaList enumerate_omega_direct(const Signature& sig) {
  const int l = lines_of(sig);
  OmegaList omega(sig, l);
  WordSearch(l, sig.counts()).run([&](const std::vector<Pair>& w, const Order& order) {
    for (int pos = 0; pos < l; ++pos) {
      if (order[static_cast<std::size_t>(pos)] != l - 1 - pos) return;
    }
    omega.append(w);
  });
  omega.normalize();
  return omega;
}

double SizeEstimate::log10() const { return std::log10(estimate); }

SizeEstimate estimate_ws_size(const OmegaList& omega, std::size_t samples, std::uint64_t seed) {
  if (omega.empty()) throw InputError("cannot estimate from an empty representative list");
  if (samples == 0) throw InputError("need at least one sample");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, omega.size() - 1);
  double sum = 0, sum_sq = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const double size = static_cast<double>(equiv_class_size(omega.at(pick(rng))));
    sum += size;
    sum_sq += size * size;
  }
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  double var = samples > 1 ? (sum_sq - n * mean * mean) / (n - 1) : 0.0;
  if (var < 0) var = 0;
  const double count = static_cast<double>(omega.size());
  return {mean * count, std::sqrt(var / n) * count, samples};
}

// ---------------------------------------------------------------- persistence

void write_omega(std::ostream& out, const OmegaList& omega) {
  out << kCacheMagic << ' ' << kCacheVersion << ' ' << omega.signature().to_string() << ' '
      << omega.lines() << ' ' << omega.points() << ' ' << omega.size() << '\n';
  for (std::size_t i = 0; i < omega.size(); ++i) out << omega.at(i).to_string() << '\n';
}

OmegaList read_omega(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw InputError("empty representative file");
  std::istringstream hs(header);
  std::vector<std::string> tokens;
  for (std::string tok; hs >> tok;) tokens.push_back(tok);
  if (tokens.size() < 6 || tokens[0] != kCacheMagic || tokens[1] != kCacheVersion) {
    throw InputError("bad representative file header: " + header);
  }
  std::string sig_text;
  for (std::size_t i = 2; i + 3 < tokens.size(); ++i) sig_text += tokens[i] + ' ';
  const Signature sig = Signature::parse(sig_text);
  std::size_t lines = 0, points = 0, count = 0;
  try {
    lines = std::stoul(tokens[tokens.size() - 3]);
    points = std::stoul(tokens[tokens.size() - 2]);
    count = std::stoul(tokens[tokens.size() - 1]);
  } catch (const std::exception&) {
    throw InputError("bad representative file header: " + header);
  }
  if (static_cast<int>(lines) != sig.lines() || static_cast<int>(points) != sig.points()) {
    throw InputError("representative file header is inconsistent: " + header);
  }
  OmegaList omega(sig, static_cast<int>(lines));
  omega.reserve(count);
  std::string row;
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::getline(in, row)) throw InputError("representative file truncated");
    const LefschetzList list = LefschetzList::parse(row);
    if (list.lines() != static_cast<int>(lines) || list.size() != points) {
      throw InputError("representative does not match header: " + row);
    }
    omega.append(list.pairs());
  }
  return omega;
}

std::filesystem::path omega_cache_path(const std::filesystem::path& dir, const Signature& sig) {
  const std::string key = std::string(kCacheVersion) + "|" + sig.to_string();
  std::ostringstream name;
  name << "omega-" << std::hex << fnv1a(key) << ".txt";
  return dir / name.str();
}

void save_omega_cache(const std::filesystem::path& dir, const OmegaList& omega) {
  std::filesystem::create_directories(dir);
  const auto target = omega_cache_path(dir, omega.signature());
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    if (!out) throw ResourceError("cannot write cache file " + tmp.string());
    write_omega(out, omega);
    if (!out.flush()) throw ResourceError("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

std::optional<OmegaList> load_omega_cache(const std::filesystem::path& dir, const Signature& sig) {
  const auto path = omega_cache_path(dir, sig);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  OmegaList omega = read_omega(in);
  if (omega.signature() != sig) return std::nullopt;
  return omega;
}

}  // namespace arrangeclass
