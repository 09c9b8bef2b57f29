#include "arrangeclass/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace arrangeclass {

namespace {

void check_index(int x) {
  if (x < 1 || x > kMaxLines) {
    throw InputError("local index " + std::to_string(x) + " out of range 1.." +
                     std::to_string(kMaxLines));
  }
}

void check_lines(int n) {
  if (n < 0 || n > kMaxLines) {
    throw InputError("line count " + std::to_string(n) + " out of range 0.." +
                     std::to_string(kMaxLines));
  }
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  int number() {
    skip_space();
    int value = 0;
    auto* first = text_.data() + pos_;
    auto* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{}) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError(what + " at offset " + std::to_string(pos_) + " in '" +
                     std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

int apply_pair(Pair pair, int x) {
  check_index(x);
  if (pair.a <= x && x <= pair.b) return pair.a + pair.b - x;
  return x;
}

// ---------------------------------------------------------------- Permutation

Permutation Permutation::identity(int n) {
  check_lines(n);
  Permutation p;
  p.size_ = n;
  for (int i = 0; i < n; ++i) p.packed_ |= std::uint64_t(i) << (4 * i);
  return p;
}

Permutation Permutation::reversal(int n) {
  check_lines(n);
  Permutation p;
  p.size_ = n;
  for (int i = 0; i < n; ++i) p.packed_ |= std::uint64_t(n - 1 - i) << (4 * i);
  return p;
}

Permutation Permutation::from_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  check_lines(n);
  Permutation p;
  p.size_ = n;
  std::uint32_t seen = 0;
  for (int i = 0; i < n; ++i) {
    const int v = images[static_cast<std::size_t>(i)];
    if (v < 1 || v > n || (seen >> v & 1u)) throw InputError("not a permutation");
    seen |= 1u << v;
    p.packed_ |= std::uint64_t(v - 1) << (4 * i);
  }
  return p;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(static_cast<std::size_t>(size_));
  for (int i = 1; i <= size_; ++i) out[static_cast<std::size_t>(i - 1)] = (*this)(i);
  return out;
}

Permutation Permutation::after(const Permutation& other) const {
  if (other.size_ != size_) throw InputError("permutation sizes differ");
  Permutation p;
  p.size_ = size_;
  for (int i = 1; i <= size_; ++i) {
    p.packed_ |= std::uint64_t((*this)(other(i)) - 1) << (4 * (i - 1));
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.size_ = size_;
  for (int i = 1; i <= size_; ++i) {
    p.packed_ |= std::uint64_t(i - 1) << (4 * ((*this)(i) - 1));
  }
  return p;
}

Permutation Permutation::then(Pair pair) const {
  Permutation p;
  p.size_ = size_;
  for (int i = 1; i <= size_; ++i) {
    const int v = (*this)(i);
    const int w = (pair.a <= v && v <= pair.b) ? pair.a + pair.b - v : v;
    p.packed_ |= std::uint64_t(w - 1) << (4 * (i - 1));
  }
  return p;
}

// -------------------------------------------------------------- LefschetzList

LefschetzList::LefschetzList(int lines, std::vector<Pair> pairs)
    : lines_(lines), pairs_(std::move(pairs)) {
  check_lines(lines);
  for (const Pair& q : pairs_) {
    if (!(1 <= q.a && q.a < q.b && q.b <= lines)) {
      throw InputError("pair (" + std::to_string(q.a) + "," + std::to_string(q.b) +
                       ") invalid for l=" + std::to_string(lines));
    }
  }
}

LefschetzList LefschetzList::parse(std::string_view text) {
  Cursor cur(text);
  cur.expect('l');
  cur.expect('=');
  const int lines = cur.number();
  std::vector<Pair> pairs;
  while (!cur.done()) {
    cur.expect('(');
    const int a = cur.number();
    cur.expect(',');
    const int b = cur.number();
    cur.expect(')');
    if (a < 1 || b > kMaxLines || a >= b) cur.fail("bad pair");
    pairs.emplace_back(a, b);
  }
  return LefschetzList(lines, std::move(pairs));
}

std::string LefschetzList::to_string() const {
  std::string out = "l=" + std::to_string(lines_);
  if (!pairs_.empty()) out += ' ';
  for (const Pair& q : pairs_) {
    out += '(';
    out += std::to_string(q.a);
    out += ',';
    out += std::to_string(q.b);
    out += ')';
  }
  return out;
}

std::strong_ordering operator<=>(const LefschetzList& x, const LefschetzList& y) {
  if (auto c = x.lines_ <=> y.lines_; c != 0) return c;
  return std::lexicographical_compare_three_way(x.pairs_.begin(), x.pairs_.end(),
                                                y.pairs_.begin(), y.pairs_.end());
}

// ------------------------------------------------------------------ Signature

Signature::Signature(std::map<int, int> counts) {
  for (auto [k, n] : counts) {
    if (k < 2) throw InputError("multiplicity below 2 in signature");
    if (n < 0) throw InputError("negative count in signature");
    if (n > 0) counts_[k] = n;
  }
}

Signature Signature::parse(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (c == '[' || c == ']' || c == ',') c = ' ';
    cleaned += c;
  }
  Cursor cur(cleaned);
  std::map<int, int> counts;
  while (!cur.done()) {
    const int k = cur.number();
    int n = 1;
    if (cur.accept('^')) n = cur.number();
    if (k < 2) cur.fail("multiplicity below 2");
    counts[k] += n;
  }
  if (counts.empty()) throw InputError("empty signature");
  return Signature(std::move(counts));
}

std::string Signature::to_string() const {
  std::string out;
  for (auto [k, n] : counts_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(k) + "^" + std::to_string(n);
  }
  return out;
}

int Signature::count(int multiplicity) const {
  auto it = counts_.find(multiplicity);
  return it == counts_.end() ? 0 : it->second;
}

int Signature::points() const {
  int total = 0;
  for (auto [k, n] : counts_) total += n;
  return total;
}

int Signature::multiple_points() const {
  int total = 0;
  for (auto [k, n] : counts_) {
    if (k >= 3) total += n;
  }
  return total;
}

long Signature::crossings() const {
  long total = 0;
  for (auto [k, n] : counts_) total += n * binomial2(k);
  return total;
}

int Signature::lines() const {
  const long c = crossings();
  for (int l = 2; binomial2(l) <= c; ++l) {
    if (binomial2(l) == c) return l;
  }
  return -1;
}

int Signature::max_multiplicity() const { return counts_.empty() ? 0 : counts_.rbegin()->first; }

std::vector<int> Signature::widths() const {
  std::vector<int> out;
  for (auto [k, n] : counts_) out.insert(out.end(), static_cast<std::size_t>(n), k);
  return out;
}

// ------------------------------------------------------------------ functions

Permutation composite_permutation(const LefschetzList& list) {
  Permutation p = Permutation::identity(list.lines());
  for (const Pair& q : list.pairs()) p = p.then(q);
  return p;
}

bool check_uip(const LefschetzList& list) {
  if (composite_permutation(list) != Permutation::reversal(list.lines())) return false;
  return signature_of(list).crossings() == binomial2(list.lines());
}

Signature signature_of(const LefschetzList& list) {
  std::map<int, int> counts;
  for (const Pair& q : list.pairs()) ++counts[q.multiplicity()];
  return Signature(std::move(counts));
}

}  // namespace arrangeclass
