#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "popboards/board.hpp"
#include "popboards/errors.hpp"

namespace popboards {

// A strict partial order on the labels 1..m, stored transitively closed.
// above(x, y) means any occurrence must carry a larger value at label x than
// at label y; incomparable labels leave their values unconstrained.
class Pop {
 public:
  static constexpr int kMaxSize = 16;

  // relations lists (x, y) pairs meaning "x above y"; any generating set is
  // accepted. Throws InvalidParam, LabelOutOfRange, CycleDetected.
  Pop(int size, std::span<const std::pair<int, int>> relations);

  // One label above all the others, the rest mutually incomparable.
  static Pop claw(int size, int apex);

  // The chain realized by a classical pattern: label x above label y exactly
  // when pattern[x-1] > pattern[y-1].
  static Pop from_pattern(std::span<const int> pattern);

  int size() const { return size_; }
  bool above(int x, int y) const { return (above_[x - 1] >> (y - 1)) & 1u; }
  std::vector<std::pair<int, int>> relations() const;

  bool operator==(const Pop&) const = default;

 private:
  Pop() = default;
  int size_ = 0;
  std::vector<std::uint32_t> above_;
};

// The k+1 claws of size m with apex labels a, a+d, ..., a+kd. A transversal
// avoids the family when no m columns inside the board put their maximum
// value at one of the apex positions.
struct ClawFamily {
  int m = 0;
  int k = 0;
  int d = 0;
  int a = 0;

  // Validates and normalizes d to 0 when k = 0 (a singleton family).
  // Throws InvalidParam, ApexOutOfRange.
  ClawFamily(int m, int k, int d, int a);

  int apex(int j) const { return a + j * d; }
  int claw_count() const { return k + 1; }
  std::vector<Pop> claws() const;
  bool same_shape(const ClawFamily& o) const {
    return m == o.m && k == o.k && d == o.d;
  }

  bool operator==(const ClawFamily&) const = default;
};

struct OccurrenceWitness {
  std::vector<int> columns;  // strictly increasing
  std::vector<int> values;

  bool operator==(const OccurrenceWitness&) const = default;
};

// Every sigma in S_m realizing each relation of the pop, lexicographically
// sorted. Avoiding the pop is avoiding all of these classical patterns.
std::vector<std::vector<int>> pop_to_patterns(const Pop& pop);

// All occurrences of the pop in a permutation, in lexicographic order of the
// index subsets.
std::vector<OccurrenceWitness> find_occurrences(std::span<const int> perm,
                                                const Pop& pop);

// Lexicographically least column subset of t realizing the pop with the full
// cell rectangle inside the board. Because row lengths grow downward, the
// rectangle fits iff its top-right corner cell does.
std::optional<OccurrenceWitness> find_occurrence(const Transversal& t,
                                                 const Pop& pop);

// Same search but checking every cell of the rectangle; slow reference kept
// for cross-checking the corner test.
std::optional<OccurrenceWitness> find_occurrence_all_cells(const Transversal& t,
                                                           const Pop& pop);

bool avoids(const Transversal& t, const Pop& pop);
bool avoids(const Transversal& t, std::span<const Pop> pops);
bool avoids(const Transversal& t, const ClawFamily& fam);

// Claw-family occurrence test over a partial filling: values_by_column[c-1]
// is the value in column c, or 0 while the column is still empty. Occurrences
// only ever use filled columns, so a hit on a prefix persists in every
// completion.
bool family_occurs_in_partial(const FerrersBoard& board,
                              std::span<const int> values_by_column,
                              const ClawFamily& fam);

}  // namespace popboards
