#include "arrangeclass/groupcmp.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace arrangeclass {

namespace {

using BigInt = boost::multiprecision::cpp_int;

// -------------------------------------------------------------- Smith form

struct Overflow {};

std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t t = 0;
  if (__builtin_mul_overflow(q, b, &t) || __builtin_sub_overflow(a, t, &t)) throw Overflow{};
  return t;
}
BigInt sub_mul(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t t = 0;
  if (__builtin_add_overflow(a, b, &t)) throw Overflow{};
  return t;
}
BigInt add(const BigInt& a, const BigInt& b) { return a + b; }

std::int64_t magnitude(std::int64_t a) {
  if (a == INT64_MIN) throw Overflow{};
  return a < 0 ? -a : a;
}
BigInt magnitude(const BigInt& a) { return abs(a); }

template <class Int>
std::vector<Int> elementary_divisors(std::vector<std::vector<Int>> m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<Int> diag;
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (auto& row : m) std::swap(row[x], row[y]);
  };
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] != 0 && (pi == rows || magnitude(m[i][j]) < magnitude(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) break;
    std::swap(m[t], m[pi]);
    swap_cols(t, pj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const Int q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] = sub_mul(m[i][j], q, m[t][j]);
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const Int q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] = sub_mul(m[i][j], q, m[i][t]);
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t; i < rows; ++i) {
          if (m[i][t] != 0 && magnitude(m[i][t]) < magnitude(m[bi][bj])) { bi = i; bj = t; }
        }
        for (std::size_t j = t; j < cols; ++j) {
          if (m[t][j] != 0 && magnitude(m[t][j]) < magnitude(m[bi][bj])) { bi = t; bj = j; }
        }
        std::swap(m[t], m[bi]);
        swap_cols(t, bj);
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] = add(m[t][k], m[i][k]);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diag.push_back(magnitude(m[t][t]));
  }
  return diag;
}

std::vector<std::vector<std::int64_t>> exponent_matrix(const GroupPresentation& pres) {
  std::vector<std::vector<std::int64_t>> m;
  for (const Word& r : pres.relators) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(pres.generators), 0);
    for (int x : r) row[static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;
    m.push_back(std::move(row));
  }
  return m;
}

// ------------------------------------------------------------- finite groups

using Perm = std::vector<std::uint8_t>;

FiniteGroup from_generators(std::string tag, const std::vector<Perm>& gens) {
  const std::size_t deg = gens.at(0).size();
  Perm id(deg);
  std::iota(id.begin(), id.end(), std::uint8_t{0});
  auto compose = [](const Perm& x, const Perm& y) {
    Perm z(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) z[k] = x[y[k]];
    return z;
  };
  std::vector<Perm> elems{id};
  std::map<Perm, std::uint8_t> index{{id, 0}};
  for (std::size_t at = 0; at < elems.size(); ++at) {
    for (const Perm& g : gens) {
      Perm z = compose(elems[at], g);
      if (!index.count(z)) {
        if (elems.size() >= 64) throw InputError("target group too large: " + tag);
        index.emplace(z, static_cast<std::uint8_t>(elems.size()));
        elems.push_back(std::move(z));
      }
    }
  }
  FiniteGroup g;
  g.tag = std::move(tag);
  g.order = static_cast<int>(elems.size());
  const std::size_t n = elems.size();
  g.mul.resize(n * n);
  g.inv.resize(n);
  g.abelian = true;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      g.mul[x * n + y] = index.at(compose(elems[x], elems[y]));
      if (g.mul[x * n + y] == 0) g.inv[x] = static_cast<std::uint8_t>(y);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (g.mul[x * n + y] != g.mul[y * n + x]) g.abelian = false;
    }
  }
  return g;
}

Perm cycle(std::size_t n) {
  Perm p(n);
  for (std::size_t k = 0; k < n; ++k) p[k] = static_cast<std::uint8_t>((k + 1) % n);
  return p;
}

Perm quaternion_left(int unit) {
  // Element s*4+u stands for (-1)^s times unit u of {1, i, j, k}.
  static const int table_unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int table_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  Perm p(8);
  for (int s = 0; s < 2; ++s) {
    for (int u = 0; u < 4; ++u) {
      const int sign = s ^ table_sign[unit][u];
      p[static_cast<std::size_t>(s * 4 + u)] = static_cast<std::uint8_t>(sign * 4 + table_unit[unit][u]);
    }
  }
  return p;
}

std::uint64_t generated_mask(const FiniteGroup& g, std::uint64_t gens) {
  std::uint64_t seen = 1;
  std::vector<std::uint8_t> stack{0};
  while (!stack.empty()) {
    const std::uint8_t x = stack.back();
    stack.pop_back();
    for (std::uint64_t rest = gens; rest; rest &= rest - 1) {
      const auto y = static_cast<std::uint8_t>(std::countr_zero(rest));
      const std::uint8_t z = g(x, y);
      if (!(seen >> z & 1u)) {
        seen |= std::uint64_t{1} << z;
        stack.push_back(z);
      }
    }
  }
  return seen;
}

std::uint64_t full_mask(const FiniteGroup& g) {
  return g.order == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order) - 1;
}

int element_order(const FiniteGroup& g, std::uint8_t x) {
  int k = 1;
  for (std::uint8_t y = x; y != 0; y = g(y, x)) ++k;
  return k;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t t = 0;
  if (__builtin_mul_overflow(a, b, &t)) throw ResourceError("homomorphism count overflows 64 bits");
  return t;
}

/// Drops generators that occur exactly once in all relators together with
/// the relator holding them; renumbers the rest.
GroupPresentation eliminate_once(GroupPresentation p) {
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> seen(static_cast<std::size_t>(p.generators) + 1, 0);
    for (const Word& r : p.relators) {
      for (int x : r) ++seen[static_cast<std::size_t>(std::abs(x))];
    }
    for (int g = 1; g <= p.generators && !changed; ++g) {
      if (seen[static_cast<std::size_t>(g)] != 1) continue;
      auto it = std::find_if(p.relators.begin(), p.relators.end(), [&](const Word& r) {
        return std::any_of(r.begin(), r.end(), [&](int x) { return std::abs(x) == g; });
      });
      p.relators.erase(it);
      for (Word& r : p.relators) {
        for (int& x : r) {
          if (std::abs(x) > g) x += x > 0 ? -1 : 1;
        }
      }
      --p.generators;
      changed = true;
    }
  }
  return p;
}

class HomSearch {
 public:
  HomSearch(const GroupPresentation& pres, const FiniteGroup& g, std::uint64_t budget)
      : p_(eliminate_once(pres)), g_(g), budget_(budget),
        vals_(static_cast<std::size_t>(p_.generators) + 1, 0),
        at_level_(static_cast<std::size_t>(p_.generators) + 1) {
    for (const Word& w : p_.relators) {
      Word r = free_reduce(w);
      if (r.empty()) continue;
      int level = 0;
      for (int x : r) level = std::max(level, std::abs(x));
      at_level_[static_cast<std::size_t>(level)].push_back(std::move(r));
    }
  }

  QuotientCount run() {
    QuotientCount out;
    out.target = g_.tag;
    if (p_.generators == 0) {
      out.homs = 1;
      out.surjections = g_.order == 1 ? 1 : 0;
      return out;
    }
    recurse(1, out);
    return out;
  }

 private:
  bool satisfied(int level) const {
    for (const Word& r : at_level_[static_cast<std::size_t>(level)]) {
      std::uint8_t x = 0;
      for (int l : r) {
        const std::uint8_t v = vals_[static_cast<std::size_t>(std::abs(l))];
        x = g_(x, l > 0 ? v : g_.inv[v]);
      }
      if (x != 0) return false;
    }
    return true;
  }

  void recurse(int gen, QuotientCount& out) {
    if (gen > p_.generators) {
      ++out.homs;
      std::uint64_t mask = 0;
      for (int k = 1; k <= p_.generators; ++k) mask |= std::uint64_t{1} << vals_[static_cast<std::size_t>(k)];
      auto it = onto_.find(mask);
      if (it == onto_.end()) it = onto_.emplace(mask, generated_mask(g_, mask) == full_mask(g_)).first;
      if (it->second) ++out.surjections;
      return;
    }
    for (int v = 0; v < g_.order; ++v) {
      if (++nodes_ > budget_) {
        throw ResourceError("homomorphism search into " + g_.tag + " exceeds budget of " +
                            std::to_string(budget_) + " assignments");
      }
      vals_[static_cast<std::size_t>(gen)] = static_cast<std::uint8_t>(v);
      if (satisfied(gen)) recurse(gen + 1, out);
    }
  }

  GroupPresentation p_;
  const FiniteGroup& g_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint8_t> vals_;
  std::vector<std::vector<Word>> at_level_;
  std::unordered_map<std::uint64_t, bool> onto_;
};

QuotientCount abelian_quotient_count(const GroupPresentation& pres, const FiniteGroup& g) {
  const Abelianization ab = abelianization(pres);
  std::vector<BigInt> divisors;
  for (const auto& d : ab.torsion) divisors.emplace_back(d);

  std::vector<std::uint64_t> subgroups{1};
  for (std::size_t at = 0; at < subgroups.size(); ++at) {
    for (int x = 0; x < g.order; ++x) {
      if (subgroups[at] >> x & 1u) continue;
      const std::uint64_t h = generated_mask(g, subgroups[at] | std::uint64_t{1} << x);
      if (std::find(subgroups.begin(), subgroups.end(), h) == subgroups.end()) subgroups.push_back(h);
    }
  }
  std::vector<int> orders(static_cast<std::size_t>(g.order));
  for (int x = 0; x < g.order; ++x) orders[static_cast<std::size_t>(x)] = element_order(g, static_cast<std::uint8_t>(x));

  auto homs_into = [&](std::uint64_t h) {
    std::uint64_t count = 1;
    const auto size = static_cast<std::uint64_t>(std::popcount(h));
    for (int k = 0; k < ab.rank; ++k) count = checked_mul(count, size);
    for (const BigInt& d : divisors) {
      std::uint64_t fits = 0;
      for (int x = 0; x < g.order; ++x) {
        if ((h >> x & 1u) && d % orders[static_cast<std::size_t>(x)] == 0) ++fits;
      }
      count = checked_mul(count, fits);
    }
    return count;
  };

  std::sort(subgroups.begin(), subgroups.end(), [](std::uint64_t x, std::uint64_t y) {
    return std::popcount(x) > std::popcount(y);
  });
  std::vector<__int128> mobius(subgroups.size(), 0);
  __int128 surj = 0;
  for (std::size_t k = 0; k < subgroups.size(); ++k) {
    if (k == 0) {
      mobius[k] = 1;
    } else {
      __int128 sum = 0;
      for (std::size_t j = 0; j < k; ++j) {
        if ((subgroups[j] & subgroups[k]) == subgroups[k] && subgroups[j] != subgroups[k]) sum += mobius[j];
      }
      mobius[k] = -sum;
    }
    surj += mobius[k] * static_cast<__int128>(homs_into(subgroups[k]));
  }
  return {g.tag, homs_into(full_mask(g)), static_cast<std::uint64_t>(surj)};
}

// ------------------------------------------------- lower central series ranks

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(z >> 61) + static_cast<std::uint64_t>(z & kPrime);
  if (r >= kPrime) r -= kPrime;
  return r;
}
std::uint64_t mod_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  return r >= kPrime ? r - kPrime : r;
}
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mod_mul(a, a)) {
    if (e & 1) r = mod_mul(r, a);
  }
  return r;
}
std::uint64_t mod_inv(std::uint64_t a) { return mod_pow(a, kPrime - 2); }

/// Noncommuting polynomials in X_1..X_n modulo terms of degree > depth.
class Truncated {
 public:
  Truncated(int n, int depth) : n_(n), depth_(depth) {
    std::size_t size = 1;
    for (int d = 0; d <= depth; ++d) {
      offset_.push_back(total_);
      total_ += size;
      width_.push_back(size);
      size *= static_cast<std::size_t>(n);
    }
  }
  std::size_t total() const { return total_; }
  std::size_t offset(int d) const { return offset_[static_cast<std::size_t>(d)]; }
  std::size_t width(int d) const { return width_[static_cast<std::size_t>(d)]; }

  using Elem = std::vector<std::uint64_t>;

  Elem zero() const { return Elem(total_, 0); }
  Elem one() const {
    Elem e = zero();
    e[0] = 1;
    return e;
  }

  Elem mul(const Elem& x, const Elem& y) const {
    Elem z = zero();
    for (int d1 = 0; d1 <= depth_; ++d1) {
      for (int d2 = 0; d1 + d2 <= depth_; ++d2) {
        const std::size_t w2 = width(d2);
        const std::size_t base = offset(d1 + d2);
        for (std::size_t a = 0; a < width(d1); ++a) {
          const std::uint64_t xa = x[offset(d1) + a];
          if (xa == 0) continue;
          for (std::size_t b = 0; b < w2; ++b) {
            const std::uint64_t yb = y[offset(d2) + b];
            if (yb == 0) continue;
            auto& slot = z[base + a * w2 + b];
            slot = mod_add(slot, mod_mul(xa, yb));
          }
        }
      }
    }
    return z;
  }

  /// exp(+-X_g).
  Elem exp_gen(int g, bool inverse) const {
    Elem e = zero();
    std::uint64_t fact = 1;
    std::size_t index = 0;
    for (int d = 0; d <= depth_; ++d) {
      if (d > 0) {
        fact = mod_mul(fact, static_cast<std::uint64_t>(d));
        index = index * static_cast<std::size_t>(n_) + static_cast<std::size_t>(g);
      }
      std::uint64_t c = mod_inv(fact);
      if (inverse && d % 2 == 1) c = mod_sub(0, c);
      e[offset(d) + index] = c;
    }
    return e;
  }

  Elem log(const Elem& x) const {
    Elem y = x;
    y[0] = mod_sub(y[0], 1);
    Elem out = zero();
    Elem power = y;
    for (int k = 1; k <= depth_; ++k) {
      std::uint64_t c = mod_inv(static_cast<std::uint64_t>(k));
      if (k % 2 == 0) c = mod_sub(0, c);
      for (std::size_t i = 0; i < total_; ++i) out[i] = mod_add(out[i], mod_mul(c, power[i]));
      power = mul(power, y);
    }
    return out;
  }

  /// X_g v - v X_g.
  Elem bracket_gen(int g, const Elem& v) const {
    Elem z = zero();
    for (int d = 0; d < depth_; ++d) {
      const std::size_t w = width(d);
      for (std::size_t a = 0; a < w; ++a) {
        const std::uint64_t c = v[offset(d) + a];
        if (c == 0) continue;
        auto& left = z[offset(d + 1) + static_cast<std::size_t>(g) * w + a];
        left = mod_add(left, c);
        auto& right = z[offset(d + 1) + a * static_cast<std::size_t>(n_) + static_cast<std::size_t>(g)];
        right = mod_sub(right, c);
      }
    }
    return z;
  }

  int degree_of(std::size_t index) const {
    int d = 0;
    while (d < depth_ && index >= offset(d + 1)) ++d;
    return d;
  }

 private:
  int n_;
  int depth_;
  std::size_t total_ = 0;
  std::vector<std::size_t> offset_;
  std::vector<std::size_t> width_;
};

long witt(int n, int k) {
  auto mu = [](int d) {
    int result = 1;
    for (int q = 2; q * q <= d; ++q) {
      if (d % q == 0) {
        d /= q;
        if (d % q == 0) return 0;
        result = -result;
      }
    }
    if (d > 1) result = -result;
    return result;
  };
  long sum = 0;
  for (int d = 1; d <= k; ++d) {
    if (k % d) continue;
    long p = 1;
    for (int e = 0; e < k / d; ++e) p *= n;
    sum += mu(d) * p;
  }
  return sum / k;
}

}  // namespace

// ---------------------------------------------------------------- public API

std::string Abelianization::to_string() const {
  std::string out = rank == 0 ? "" : (rank == 1 ? "Z" : "Z^" + std::to_string(rank));
  for (const auto& d : torsion) out += (out.empty() ? "" : " + ") + ("Z/" + d);
  return out.empty() ? "0" : out;
}

Abelianization abelianization(const GroupPresentation& pres) {
  const auto m = exponent_matrix(pres);
  const auto cols = static_cast<std::size_t>(pres.generators);
  std::vector<std::string> divisors;
  try {
    for (std::int64_t d : elementary_divisors(m, cols)) divisors.push_back(std::to_string(d));
  } catch (const Overflow&) {
    divisors.clear();
    std::vector<std::vector<BigInt>> big;
    for (const auto& row : m) big.emplace_back(row.begin(), row.end());
    for (const BigInt& d : elementary_divisors(big, cols)) divisors.push_back(d.str());
  }
  Abelianization out;
  out.rank = pres.generators - static_cast<int>(divisors.size());
  for (auto& d : divisors) {
    if (d != "1") out.torsion.push_back(std::move(d));
  }
  return out;
}

FiniteGroup finite_group(const std::string& tag) {
  if (tag == "Z2xZ2") return from_generators(tag, {{1, 0, 2, 3}, {0, 1, 3, 2}});
  if (tag == "S3") return from_generators(tag, {{1, 0, 2}, {1, 2, 0}});
  if (tag == "D4") return from_generators(tag, {{1, 2, 3, 0}, {0, 3, 2, 1}});
  if (tag == "Q8") return from_generators(tag, {quaternion_left(1), quaternion_left(2)});
  if (tag.size() >= 2 && tag[0] == 'Z' && std::all_of(tag.begin() + 1, tag.end(), ::isdigit)) {
    const int n = std::stoi(tag.substr(1));
    if (n >= 1 && n <= 64) return from_generators(tag, {n == 1 ? Perm{0} : cycle(static_cast<std::size_t>(n))});
  }
  throw InputError("unknown target group '" + tag + "' (use Z<n>, Z2xZ2, S3, D4, Q8)");
}

const std::vector<std::string>& default_targets() {
  static const std::vector<std::string> targets = {"Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8", "Z8"};
  return targets;
}

QuotientCount quotient_count_search(const GroupPresentation& pres, const FiniteGroup& target,
                                    std::uint64_t budget) {
  return HomSearch(pres, target, budget).run();
}

QuotientCount quotient_count(const GroupPresentation& pres, const FiniteGroup& target,
                             std::uint64_t budget) {
  if (target.abelian) return abelian_quotient_count(pres, target);
  return quotient_count_search(pres, target, budget);
}

std::vector<int> lcs_ranks(const GroupPresentation& pres, int depth) {
  if (depth < 1 || depth > 4) throw InputError("lower central depth must be between 1 and 4");
  const int n = pres.generators;
  const Truncated alg(n, depth);

  std::map<std::size_t, Truncated::Elem> basis;
  std::vector<Truncated::Elem> queue;
  auto insert = [&](Truncated::Elem v) {
    for (std::size_t col = 1; col < v.size(); ++col) {
      if (v[col] == 0) continue;
      auto it = basis.find(col);
      if (it == basis.end()) {
        const std::uint64_t scale = mod_inv(v[col]);
        for (std::size_t k = col; k < v.size(); ++k) v[k] = mod_mul(v[k], scale);
        queue.push_back(v);
        basis.emplace(col, std::move(v));
        return;
      }
      const std::uint64_t c = v[col];
      const auto& row = it->second;
      for (std::size_t k = col; k < v.size(); ++k) {
        if (row[k] != 0) v[k] = mod_sub(v[k], mod_mul(c, row[k]));
      }
    }
  };

  for (const Word& r : pres.relators) {
    Truncated::Elem prod = alg.one();
    for (int x : r) prod = alg.mul(prod, alg.exp_gen(std::abs(x) - 1, x < 0));
    insert(alg.log(prod));
  }
  while (!queue.empty()) {
    const Truncated::Elem v = std::move(queue.back());
    queue.pop_back();
    for (int g = 0; g < n; ++g) insert(alg.bracket_gen(g, v));
  }

  std::vector<int> pivots(static_cast<std::size_t>(depth) + 1, 0);
  for (const auto& [col, row] : basis) ++pivots[static_cast<std::size_t>(alg.degree_of(col))];
  std::vector<int> out;
  for (int k = 1; k <= depth; ++k) {
    out.push_back(static_cast<int>(witt(n, k)) - pivots[static_cast<std::size_t>(k)]);
  }
  return out;
}

std::string InvariantProfile::to_string() const {
  std::ostringstream out;
  out << "abelianization " << abelian.to_string() << "\n";
  for (const auto& q : quotients) out << "hom " << q.target << " " << q.homs << " onto " << q.surjections << "\n";
  out << "lcs";
  for (int r : lcs) out << " " << r;
  out << "\n";
  return out.str();
}

InvariantProfile invariant_profile(const GroupPresentation& pres, const ProfileOptions& opts) {
  InvariantProfile p;
  p.abelian = abelianization(pres);
  for (const auto& tag : opts.targets) p.quotients.push_back(quotient_count(pres, finite_group(tag), opts.budget));
  if (opts.lcs_depth > 0) p.lcs = lcs_ranks(pres, opts.lcs_depth);
  return p;
}

GroupPresentation structured_group_presentation(const StructuredGroup& group) {
  std::vector<int> factor;
  int id = 0;
  for (int r : group.free_ranks) {
    factor.insert(factor.end(), static_cast<std::size_t>(r), id);
    ++id;
  }
  for (int k = 0; k < group.abelian_rank; ++k) factor.push_back(id++);
  GroupPresentation p;
  p.generators = static_cast<int>(factor.size());
  for (int x = 1; x <= p.generators; ++x) {
    for (int y = x + 1; y <= p.generators; ++y) {
      if (factor[static_cast<std::size_t>(x - 1)] != factor[static_cast<std::size_t>(y - 1)]) {
        p.relators.push_back({x, y, -x, -y});
      }
    }
  }
  return p;
}

const char* to_string(Verdict v) {
  return v == Verdict::Distinguished ? "distinguished" : "indistinguishable";
}

Verdict profiles_match(const GroupPresentation& x, const GroupPresentation& y, const ProfileOptions& opts) {
  return invariant_profile(x, opts) == invariant_profile(y, opts) ? Verdict::Indistinguishable
                                                                  : Verdict::Distinguished;
}

}  // namespace arrangeclass
