#include "arrangeclass/pi1.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace arrangeclass {

namespace {

Mark flip(Mark m) {
  switch (m) {
    case Mark::Above: return Mark::Below;
    case Mark::Below: return Mark::Above;
    case Mark::On: return Mark::On;
  }
  return m;
}

bool cancels(const Token& x, const Token& y) {
  return x.mark != Mark::On && x.point == y.point && x.mark == y.mark;
}

std::vector<Token> reduce_tokens(std::vector<Token> in) {
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Token> stack;
    stack.reserve(in.size());
    for (const Token& t : in) {
      if (!stack.empty() && cancels(stack.back(), t)) {
        stack.pop_back();
        changed = true;
      } else {
        stack.push_back(t);
      }
    }
    in = std::move(stack);
    if (in.size() >= 2 && in[0].mark == Mark::On && in[1].mark != Mark::On &&
        in[1].point == in[0].point) {
      in.erase(in.begin() + 1);
      changed = true;
    }
    const std::size_t n = in.size();
    if (n >= 2 && in[n - 1].mark == Mark::On && in[n - 2].mark != Mark::On &&
        in[n - 2].point == in[n - 1].point) {
      in.erase(in.end() - 2);
      changed = true;
    }
  }
  return in;
}

void pass(std::vector<Token>& out, int from, int to, Mark mark) {
  const int step = from <= to ? 1 : -1;
  for (int k = from;; k += step) {
    out.push_back({k, mark, Mark::Below});
    if (k == to) break;
  }
}

}  // namespace

// --------------------------------------------------------------- SkeletonPath

SkeletonPath::SkeletonPath(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty() || tokens_.front().mark != Mark::On || tokens_.back().mark != Mark::On) {
    throw InputError("a skeleton must start and end at a point it runs through");
  }
  for (const Token& t : tokens_) {
    if (t.point < 1 || t.point > kMaxLines) throw InputError("skeleton point out of range");
  }
}

std::vector<int> SkeletonPath::endpoints() const {
  std::vector<int> out;
  for (const Token& t : tokens_) {
    if (t.mark == Mark::On) out.push_back(t.point);
  }
  return out;
}

std::string SkeletonPath::to_string(bool unicode) const {
  std::string out;
  for (const Token& t : tokens_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(t.point);
    switch (t.mark) {
      case Mark::On: out += unicode ? "°" : "o"; break;
      case Mark::Above: out += unicode ? "⁺" : "+"; break;
      case Mark::Below: out += unicode ? "⁻" : "-"; break;
    }
  }
  return out;
}

SkeletonPath SkeletonPath::rotated(Pair region) const {
  const int a = region.a;
  const int b = region.b;
  auto inside = [&](const Token& t) { return a <= t.point && t.point <= b; };
  std::vector<Token> out;
  const std::size_t n = tokens_.size();
  for (std::size_t k = 0; k < n;) {
    if (!inside(tokens_[k])) {
      out.push_back(tokens_[k++]);
      continue;
    }
    const std::size_t start = k;
    while (k < n && inside(tokens_[k])) ++k;
    if (start > 0) {
      if (tokens_[start - 1].point < a) {
        pass(out, a, b, Mark::Below);
      } else {
        pass(out, b, a, Mark::Above);
      }
    }
    for (std::size_t j = start; j < k; ++j) {
      Token t = tokens_[j];
      t.point = a + b - t.point;
      t.mark = flip(t.mark);
      if (t.mark == Mark::On) t.side = flip(t.side);
      out.push_back(t);
    }
    if (k < n) {
      if (tokens_[k].point > b) {
        pass(out, a, b, Mark::Above);
      } else {
        pass(out, b, a, Mark::Below);
      }
    }
  }
  return SkeletonPath(reduce_tokens(std::move(out)));
}

SkeletonPath initial_skeleton(Pair pair) {
  std::vector<Token> tokens;
  for (int k = pair.a; k <= pair.b; ++k) tokens.push_back({k, Mark::On, Mark::Below});
  return SkeletonPath(std::move(tokens));
}

SkeletonPath compute_skeleton(const LefschetzList& list, std::size_t i, std::size_t upto) {
  if (i < 1 || i > list.size()) {
    throw InputError("point index " + std::to_string(i) + " out of range 1.." +
                     std::to_string(list.size()));
  }
  SkeletonPath path = initial_skeleton(list[i - 1]);
  std::size_t done = 0;
  for (std::size_t j = i - 1; j >= 1 && done < upto; --j, ++done) {
    path = path.rotated(list[j - 1]);
  }
  return path;
}

// ---------------------------------------------------------------------- words

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (x == 0) throw InputError("generator index 0 in word");
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

bool same_cyclic_word(const Word& x, const Word& y) {
  const Word cx = cyclic_reduce(x);
  for (const Word& cand : {cyclic_reduce(y), cyclic_reduce(inverse(y))}) {
    if (cand.size() != cx.size()) continue;
    if (cx.empty()) return true;
    Word doubled = cand;
    doubled.insert(doubled.end(), cand.begin(), cand.end());
    if (std::search(doubled.begin(), doubled.end(), cx.begin(), cx.end()) != doubled.end()) return true;
  }
  return false;
}

// --------------------------------------------------------------- van Kampen

std::vector<Word> skeleton_loops(const SkeletonPath& skeleton) {
  const auto& tokens = skeleton.tokens();
  Word conj;
  std::vector<Word> loops{{tokens[0].point}};
  int dir = 0;
  int prev = tokens[0].point;
  for (std::size_t k = 1; k < tokens.size(); ++k) {
    const Token& t = tokens[k];
    if (t.point > prev) {
      dir = 1;
    } else if (t.point < prev) {
      dir = -1;
    } else {
      dir = dir == 0 ? 1 : -dir;
    }
    prev = t.point;
    const bool above = t.mark == Mark::Above || (t.mark == Mark::On && t.side == Mark::Above);
    if (t.mark == Mark::On) {
      Word loop = conj;
      loop.push_back(t.point);
      const Word back = inverse(conj);
      loop.insert(loop.end(), back.begin(), back.end());
      loops.push_back(free_reduce(loop));
    }
    if (above) conj.push_back(dir > 0 ? -t.point : t.point);
  }
  return loops;
}

std::vector<Word> vankampen_relations(const SkeletonPath& skeleton, int multiplicity) {
  const auto loops = skeleton_loops(skeleton);
  if (static_cast<int>(loops.size()) != multiplicity) {
    throw InputError("skeleton runs through " + std::to_string(loops.size()) +
                     " points, expected " + std::to_string(multiplicity));
  }
  std::vector<Word> out;
  if (multiplicity == 2) {
    Word r = loops[0];
    r.insert(r.end(), loops[1].begin(), loops[1].end());
    const Word i0 = inverse(loops[0]), i1 = inverse(loops[1]);
    r.insert(r.end(), i0.begin(), i0.end());
    r.insert(r.end(), i1.begin(), i1.end());
    out.push_back(cyclic_reduce(r));
    return out;
  }
  const std::size_t m = loops.size();
  auto product = [&](std::size_t j) {
    Word w;
    for (std::size_t s = 0; s < m; ++s) {
      const std::size_t r = (j + m - 1 - s) % m;
      w.insert(w.end(), loops[r].begin(), loops[r].end());
    }
    return w;
  };
  const Word full_inv = inverse(product(0));
  for (std::size_t j = 1; j < m; ++j) {
    Word r = product(j);
    r.insert(r.end(), full_inv.begin(), full_inv.end());
    out.push_back(cyclic_reduce(r));
  }
  return out;
}

// ------------------------------------------------------------- presentations

std::string GroupPresentation::to_plain() const {
  std::ostringstream out;
  out << "gens: " << generators << '\n';
  for (const Word& r : relators) {
    for (std::size_t k = 0; k < r.size(); ++k) out << (k ? " " : "") << r[k];
    out << '\n';
  }
  return out.str();
}

std::string GroupPresentation::to_gap() const {
  std::ostringstream out;
  out << "F := FreeGroup(" << generators << ");;\n";
  out << "G := F / [";
  for (std::size_t i = 0; i < relators.size(); ++i) {
    out << (i ? ",\n  " : "\n  ");
    const Word& r = relators[i];
    if (r.empty()) out << "One(F)";
    for (std::size_t k = 0; k < r.size(); ++k) {
      out << (k ? "*" : "") << "F." << std::abs(r[k]);
      if (r[k] < 0) out << "^-1";
    }
  }
  out << "\n];;\n";
  return out.str();
}

GroupPresentation GroupPresentation::parse_plain(std::istream& in) {
  GroupPresentation p;
  std::string line;
  bool have_gens = false;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!have_gens) {
      std::string tag;
      ls >> tag >> p.generators;
      if (tag != "gens:" || !ls || p.generators < 0) {
        throw InputError("presentation must start with 'gens: <count>'");
      }
      have_gens = true;
      continue;
    }
    Word w;
    for (std::string tok; ls >> tok;) {
      int x = 0;
      try {
        x = std::stoi(tok);
      } catch (const std::exception&) {
        throw InputError("bad relator letter '" + tok + "'");
      }
      if (x == 0 || std::abs(x) > p.generators) throw InputError("relator letter out of range: " + tok);
      w.push_back(x);
    }
    p.relators.push_back(std::move(w));
  }
  if (!have_gens) throw InputError("presentation must start with 'gens: <count>'");
  return p;
}

GroupPresentation presentation(const LefschetzList& list, GroupMode mode) {
  GroupPresentation p;
  p.generators = list.lines();
  p.mode = mode;
  for (std::size_t i = 1; i <= list.size(); ++i) {
    auto rels = vankampen_relations(compute_skeleton(list, i), list[i - 1].multiplicity());
    p.relators.insert(p.relators.end(), rels.begin(), rels.end());
  }
  if (mode == GroupMode::Projective) {
    Word r;
    for (int k = list.lines(); k >= 1; --k) r.push_back(k);
    p.relators.push_back(r);
  }
  return p;
}

}  // namespace arrangeclass
