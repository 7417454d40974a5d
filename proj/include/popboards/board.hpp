#pragma once

#include <functional>
#include <span>
#include <vector>

#include "popboards/errors.hpp"

namespace popboards {

// A Ferrers board drawn with row lengths growing from the top row down.
// parts[v-1] is the length of the row that value v occupies, so parts is
// weakly decreasing: value n (the largest, placed first) sits in the top and
// therefore shortest row. Row t counted from the top has length
// row_length(t) = parts[n - t].
class FerrersBoard {
 public:
  // Throws InvalidParam (empty), NonPositivePart, NotWeaklyDecreasing.
  explicit FerrersBoard(std::vector<int> parts);

  int order() const { return static_cast<int>(parts_.size()); }
  std::span<const int> parts() const { return parts_; }
  int part(int value) const { return parts_[value - 1]; }
  int row_length(int top_down_row) const { return parts_[order() - top_down_row]; }

  bool contains_cell(int value, int column) const {
    return column >= 1 && column <= part(value);
  }

  // Transversals exist iff the bottom row spans all n columns and row i
  // (bottom-up) spans at least n-i+1 of them.
  bool transversal_feasible() const;

  // Width of the top white row at each step of the top-down insertion:
  // row_length(t) - (t - 1), always >= 1. Throws InfeasibleBoard.
  std::vector<int> white_profile() const;

  bool operator==(const FerrersBoard&) const = default;

 private:
  std::vector<int> parts_;
};

inline FerrersBoard square_board(int n) {
  return FerrersBoard(std::vector<int>(static_cast<std::size_t>(n), n));
}

// A 0-1 filling with one 1 per row and column; values[c-1] is the value
// whose row holds the 1 of column c. Value v sits in top-down row n+1-v.
class Transversal {
 public:
  // Throws NotAPermutation, CellOutsideBoard (detail = offending column).
  Transversal(FerrersBoard board, std::vector<int> values);

  const FerrersBoard& board() const { return board_; }
  int order() const { return board_.order(); }
  std::span<const int> values() const { return values_; }
  int value_at(int column) const { return values_[column - 1]; }
  int column_of(int value) const;

  bool operator==(const Transversal&) const = default;

 private:
  FerrersBoard board_;
  std::vector<int> values_;
};

// Calls fn with the value sequence of every transversal of the board, in
// lexicographic order. Return false from fn to stop early. Infeasible boards
// produce no calls.
void for_each_transversal(const FerrersBoard& board,
                          const std::function<bool(std::span<const int>)>& fn);

// Materialized variant; intended for small boards.
std::vector<Transversal> enumerate_transversals(const FerrersBoard& board);

// All transversal-feasible boards of the given order, in lexicographic order
// of their parts sequences.
std::vector<FerrersBoard> feasible_boards(int n);

}  // namespace popboards
