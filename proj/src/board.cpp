#include "popboards/board.hpp"

#include <algorithm>
#include <string>

namespace popboards {

FerrersBoard::FerrersBoard(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) fail(Errc::InvalidParam, "board needs at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      fail(Errc::NonPositivePart,
           "part " + std::to_string(i + 1) + " is " + std::to_string(parts_[i]),
           static_cast<long>(i + 1));
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      fail(Errc::NotWeaklyDecreasing,
           "part " + std::to_string(i + 1) + " exceeds part " + std::to_string(i),
           static_cast<long>(i + 1));
    }
  }
}

bool FerrersBoard::transversal_feasible() const {
  const int n = order();
  if (parts_[0] != n) return false;
  for (int i = 2; i <= n; ++i) {
    if (parts_[i - 1] < n - i + 1) return false;
  }
  return true;
}

std::vector<int> FerrersBoard::white_profile() const {
  if (!transversal_feasible()) {
    fail(Errc::InfeasibleBoard, "board admits no transversal");
  }
  const int n = order();
  std::vector<int> profile(n);
  for (int t = 1; t <= n; ++t) profile[t - 1] = row_length(t) - (t - 1);
  return profile;
}

Transversal::Transversal(FerrersBoard board, std::vector<int> values)
    : board_(std::move(board)), values_(std::move(values)) {
  const int n = board_.order();
  if (static_cast<int>(values_.size()) != n) {
    fail(Errc::NotAPermutation, "expected " + std::to_string(n) + " values, got " +
                                    std::to_string(values_.size()));
  }
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v]) {
      fail(Errc::NotAPermutation, "values are not a permutation of 1.." + std::to_string(n));
    }
    seen[v] = 1;
  }
  for (int c = 1; c <= n; ++c) {
    if (!board_.contains_cell(values_[c - 1], c)) {
      fail(Errc::CellOutsideBoard,
           "column " + std::to_string(c) + " with value " + std::to_string(values_[c - 1]) +
               " lies outside a row of length " + std::to_string(board_.part(values_[c - 1])),
           c);
    }
  }
}

int Transversal::column_of(int value) const {
  for (int c = 1; c <= order(); ++c) {
    if (values_[c - 1] == value) return c;
  }
  fail(Errc::InvalidParam, "value " + std::to_string(value) + " out of range");
}

void for_each_transversal(const FerrersBoard& board,
                          const std::function<bool(std::span<const int>)>& fn) {
  if (!board.transversal_feasible()) return;
  const int n = board.order();
  std::vector<int> values(static_cast<std::size_t>(n), 0);
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  // Column by column, values ascending, gives lexicographic order.
  auto rec = [&](auto&& self, int col) -> bool {
    if (col > n) return fn(values);
    for (int v = 1; v <= n; ++v) {
      if (used[v] || !board.contains_cell(v, col)) continue;
      used[v] = 1;
      values[col - 1] = v;
      const bool keep_going = self(self, col + 1);
      used[v] = 0;
      values[col - 1] = 0;
      if (!keep_going) return false;
    }
    return true;
  };
  rec(rec, 1);
}

std::vector<Transversal> enumerate_transversals(const FerrersBoard& board) {
  std::vector<Transversal> out;
  for_each_transversal(board, [&](std::span<const int> values) {
    out.emplace_back(board, std::vector<int>(values.begin(), values.end()));
    return true;
  });
  return out;
}

std::vector<FerrersBoard> feasible_boards(int n) {
  if (n < 1) fail(Errc::InvalidParam, "order must be positive");
  std::vector<FerrersBoard> out;
  std::vector<int> parts(static_cast<std::size_t>(n));
  parts[0] = n;  // the bottom row must span every column
  auto rec = [&](auto&& self, int i) -> void {
    if (i > n) {
      out.emplace_back(parts);
      return;
    }
    for (int len = n - i + 1; len <= parts[i - 2]; ++len) {
      parts[i - 1] = len;
      self(self, i + 1);
    }
  };
  if (n == 1) {
    out.emplace_back(parts);
  } else {
    rec(rec, 2);
  }
  return out;
}

}  // namespace popboards
