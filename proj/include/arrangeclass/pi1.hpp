#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "arrangeclass/core.hpp"
#include "arrangeclass/lattice.hpp"

namespace arrangeclass {

enum class Mark : std::uint8_t { On, Above, Below };

/// One step of a skeleton path: it passes above or below `point`, or
/// runs through it. Intermediate points of a multiple skeleton are run
/// through but the path is perturbed slightly to one side of them; `side`
/// records which (Above or Below) and flips under rotation.
struct Token {
  int point = 1;
  Mark mark = Mark::On;
  Mark side = Mark::Below;

  friend bool operator==(const Token&, const Token&) = default;
};

class SkeletonPath {
 public:
  SkeletonPath() = default;
  explicit SkeletonPath(std::vector<Token> tokens);

  const std::vector<Token>& tokens() const { return tokens_; }
  /// Points the path runs through, in path order.
  std::vector<int> endpoints() const;
  /// "1° 2⁻ 3⁺ 4°" (unicode) or "1o 2- 3+ 4o" (ascii).
  std::string to_string(bool unicode = true) const;

  /// The image under a counterclockwise half-twist of the disk holding the
  /// points a..b, freely reduced.
  SkeletonPath rotated(Pair region) const;

 private:
  std::vector<Token> tokens_;
};

/// Straight chain through local points a..b.
SkeletonPath initial_skeleton(Pair pair);

/// The skeleton of point i (1-based), transported back to the start of the
/// list by half-twists for pairs i-1, ..., 1. Input error if i is out of
/// range. `upto` limits the transport to the first `upto` twists (default:
/// all of them).
SkeletonPath compute_skeleton(const LefschetzList& list, std::size_t i,
                              std::size_t upto = static_cast<std::size_t>(-1));

/// Words are signed 1-based generator indices; -k is the inverse of Γ_k.
using Word = std::vector<int>;

Word inverse(const Word& w);
Word free_reduce(const Word& w);
/// Free reduction followed by removal of cancelling first/last letters.
Word cyclic_reduce(const Word& w);
/// True if x and y agree up to cyclic rotation and inversion.
bool same_cyclic_word(const Word& x, const Word& y);

/// The loops a_1..a_m around the points a skeleton runs through, as
/// conjugates of generators, read with the base point below the line.
std::vector<Word> skeleton_loops(const SkeletonPath& skeleton);

/// [a_1,a_2] for m = 2; for m >= 3 the m-1 relators equating each cyclic
/// rotation of a_m...a_1 with a_m...a_1. Input error if the skeleton runs
/// through a different number of points than m.
std::vector<Word> vankampen_relations(const SkeletonPath& skeleton, int multiplicity);

struct GroupPresentation {
  int generators = 0;
  std::vector<Word> relators;
  GroupMode mode = GroupMode::Affine;

  /// "gens: l" followed by one relator per line.
  std::string to_plain() const;
  /// A FreeGroup quotient readable by computer algebra systems.
  std::string to_gap() const;
  /// Parses to_plain() output; lines starting with '#' are ignored.
  static GroupPresentation parse_plain(std::istream& in);
};

/// Generators Γ_1..Γ_l, all van Kampen relators (cyclically reduced), and
/// Γ_l...Γ_1 in projective mode.
GroupPresentation presentation(const LefschetzList& list, GroupMode mode);

}  // namespace arrangeclass
