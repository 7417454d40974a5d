#pragma once

#include <span>
#include <vector>

#include "popboards/board.hpp"
#include "popboards/pop.hpp"

namespace popboards {

// Snapshot of one insertion step: the white columns of the current top row.
struct EncodingStep {
  int step = 0;                    // 1-based
  std::vector<int> white_columns;  // board columns, strictly increasing

  int white_count() const { return static_cast<int>(white_columns.size()); }
  // How far the white row extends past the minimum window of a size-m claw.
  int slack(int m) const { return white_count() - m + 1; }
};

// State of the top-down insertion: values n, n-1, ... are restored one per
// step, each into the top row of the still-white subboard, and the row and
// column of each restored 1 turn gray.
class InsertionState {
 public:
  explicit InsertionState(FerrersBoard board);

  // Rebuild a mid-process state from the columns that already hold the top
  // values, in placement order. Throws StateInconsistent.
  InsertionState(FerrersBoard board, std::span<const int> placed_columns);

  const FerrersBoard& board() const { return board_; }
  bool complete() const { return placed_ == board_.order(); }
  int next_step() const { return placed_ + 1; }
  int next_value() const { return board_.order() - placed_; }

  EncodingStep current_step() const;      // requires !complete()
  std::vector<int> white_columns() const;

  // Place the next value at the given 1-based index into the white row.
  InsertionState place_white_index(int index) const;

  // Column holding each value so far; 0 marks an empty column.
  std::span<const int> values_by_column() const { return values_by_column_; }

  Transversal to_transversal() const;     // requires complete()

 private:
  FerrersBoard board_;
  std::vector<int> values_by_column_;
  int placed_ = 0;
};

// Indices (1-based within a white row of width l) where the next value can
// go without being forced into an occurrence of the family. Below width m
// every index qualifies; from width m on, an index is excluded exactly when
// some apex window around it fits inside the row.
std::vector<int> valid_positions_formula(int l, const ClawFamily& fam);

// Number of valid positions for a white row of width l >= m; depends only on
// (l, m, k, d). Throws InvalidParam when l < m.
long valid_position_count(int l, int m, int k, int d);

// Exhaustive-search reference for the valid set: index i is included iff
// placing there leaves at least one completion avoiding the family.
// Throws InvalidParam on a complete state.
std::vector<int> valid_positions_oracle(const InsertionState& state,
                                        const ClawFamily& fam);

// Replay the insertion of t and record, per step, the rank of its column
// inside the step's valid set; 0 marks a forced step. Letters range over
// {0, ..., n}. Throws NotAvoiding, SoundnessViolation.
std::vector<int> encode(const Transversal& t, const ClawFamily& fam);

// Rebuild the transversal a word describes, reading positions from the valid
// sets of fam. Rejects words that break the forced-step convention. Throws
// InfeasibleBoard, InvalidParam, EmptyValidSet, LetterOutOfRange (detail =
// step).
Transversal decode(std::span<const int> word, const FerrersBoard& board,
                   const ClawFamily& fam);

// The avoider of `to` sharing t's word: decode(encode(t, from), to). The two
// families must agree on (m, k, d); throws ParamMismatch otherwise.
Transversal transfer(const Transversal& t, const ClawFamily& from,
                     const ClawFamily& to);

}  // namespace popboards
