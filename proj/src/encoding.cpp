#include "popboards/encoding.hpp"

#include <algorithm>
#include <string>

namespace popboards {

InsertionState::InsertionState(FerrersBoard board)
    : board_(std::move(board)),
      values_by_column_(static_cast<std::size_t>(board_.order()), 0) {}

InsertionState::InsertionState(FerrersBoard board, std::span<const int> placed_columns)
    : InsertionState(std::move(board)) {
  const int n = board_.order();
  if (static_cast<int>(placed_columns.size()) > n) {
    fail(Errc::StateInconsistent, "more placements than rows");
  }
  for (int i = 0; i < static_cast<int>(placed_columns.size()); ++i) {
    const int step = i + 1;
    const int column = placed_columns[i];
    if (column < 1 || column > board_.row_length(step)) {
      fail(Errc::StateInconsistent,
           "step " + std::to_string(step) + " column " + std::to_string(column) +
               " outside the top white row",
           step);
    }
    if (values_by_column_[column - 1] != 0) {
      fail(Errc::StateInconsistent, "column " + std::to_string(column) + " used twice", step);
    }
    values_by_column_[column - 1] = n + 1 - step;
    ++placed_;
  }
}

std::vector<int> InsertionState::white_columns() const {
  std::vector<int> out;
  const int reach = board_.row_length(next_step());
  for (int c = 1; c <= reach; ++c) {
    if (values_by_column_[c - 1] == 0) out.push_back(c);
  }
  return out;
}

EncodingStep InsertionState::current_step() const {
  if (complete()) fail(Errc::InvalidParam, "insertion already complete");
  return EncodingStep{next_step(), white_columns()};
}

InsertionState InsertionState::place_white_index(int index) const {
  if (complete()) fail(Errc::InvalidParam, "insertion already complete");
  const auto white = white_columns();
  if (index < 1 || index > static_cast<int>(white.size())) {
    fail(Errc::InvalidParam, "white index " + std::to_string(index) + " out of range");
  }
  InsertionState next = *this;
  next.values_by_column_[white[index - 1] - 1] = next_value();
  ++next.placed_;
  return next;
}

Transversal InsertionState::to_transversal() const {
  if (!complete()) fail(Errc::InvalidParam, "insertion not complete");
  return Transversal(board_, values_by_column_);
}

std::vector<int> valid_positions_formula(int l, const ClawFamily& fam) {
  if (l < 1) fail(Errc::InvalidParam, "white row width must be positive");
  std::vector<int> out;
  if (l < fam.m) {
    // No window of m columns fits, so nothing can be forced: every index works.
    out.resize(static_cast<std::size_t>(l));
    for (int i = 1; i <= l; ++i) out[i - 1] = i;
    return out;
  }
  for (int i = 1; i <= l; ++i) {
    if (i < fam.a) {
      out.push_back(i);
      continue;
    }
    bool valid = true;
    for (int j = 0; j <= fam.k && valid; ++j) {
      const int apex = fam.apex(j);
      // Index i completes an apex window iff apex-1 columns fit on its left
      // and m-apex on its right.
      if (i == apex || (apex < i && l - i >= fam.m - apex)) valid = false;
    }
    if (valid) out.push_back(i);
  }
  return out;
}

long valid_position_count(int l, int m, int k, int d) {
  if (l < m) fail(Errc::InvalidParam, "count requires width >= m");
  return m - static_cast<long>(k) * d - 1 +
         static_cast<long>(k) * std::max(0, d - l + m - 1);
}

namespace {

// Depth-first search for any avoiding completion. Prefixes stay
// occurrence-free at every node, so reaching a full placement certifies an
// avoider.
bool completion_exists(const FerrersBoard& board, const ClawFamily& fam,
                       std::vector<int>& values_by_column, int placed) {
  const int n = board.order();
  if (placed == n) return true;
  const int step = placed + 1;
  const int value = n - placed;
  const int reach = board.row_length(step);
  for (int c = 1; c <= reach; ++c) {
    if (values_by_column[c - 1] != 0) continue;
    values_by_column[c - 1] = value;
    const bool ok = !family_occurs_in_partial(board, values_by_column, fam) &&
                    completion_exists(board, fam, values_by_column, placed + 1);
    values_by_column[c - 1] = 0;
    if (ok) return true;
  }
  return false;
}

}  // namespace

std::vector<int> valid_positions_oracle(const InsertionState& state, const ClawFamily& fam) {
  if (state.complete()) fail(Errc::InvalidParam, "state is already complete");
  const auto& board = state.board();
  std::vector<int> values(state.values_by_column().begin(), state.values_by_column().end());
  const auto white = state.white_columns();
  const int value = state.next_value();
  std::vector<int> out;
  for (int i = 1; i <= static_cast<int>(white.size()); ++i) {
    values[white[i - 1] - 1] = value;
    if (!family_occurs_in_partial(board, values, fam) &&
        completion_exists(board, fam, values, state.next_step())) {
      out.push_back(i);
    }
    values[white[i - 1] - 1] = 0;
  }
  return out;
}

std::vector<int> encode(const Transversal& t, const ClawFamily& fam) {
  if (!avoids(t, fam)) {
    fail(Errc::NotAvoiding, "transversal contains the family; it has no word");
  }
  const auto& board = t.board();
  const int n = board.order();
  std::vector<char> column_used(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(n));
  for (int step = 1; step <= n; ++step) {
    const int value = n + 1 - step;
    const int target = t.column_of(value);
    std::vector<int> white;
    const int reach = board.row_length(step);
    for (int c = 1; c <= reach; ++c) {
      if (!column_used[c]) white.push_back(c);
    }
    const auto valid = valid_positions_formula(static_cast<int>(white.size()), fam);
    const auto white_it = std::find(white.begin(), white.end(), target);
    const int white_index = static_cast<int>(white_it - white.begin()) + 1;
    const auto valid_it = std::find(valid.begin(), valid.end(), white_index);
    if (white_it == white.end() || valid_it == valid.end()) {
      fail(Errc::SoundnessViolation,
           "avoider sits outside the valid set at step " + std::to_string(step), step);
    }
    const int rank = static_cast<int>(valid_it - valid.begin()) + 1;
    word.push_back(valid.size() == 1 ? 0 : rank);
    column_used[target] = 1;
  }
  return word;
}

Transversal decode(std::span<const int> word, const FerrersBoard& board, const ClawFamily& fam) {
  const int n = board.order();
  if (!board.transversal_feasible()) {
    fail(Errc::InfeasibleBoard, "board admits no transversal");
  }
  if (static_cast<int>(word.size()) != n) {
    fail(Errc::InvalidParam, "word length " + std::to_string(word.size()) +
                                 " does not match board order " + std::to_string(n));
  }
  std::vector<int> values_by_column(static_cast<std::size_t>(n), 0);
  for (int step = 1; step <= n; ++step) {
    std::vector<int> white;
    const int reach = board.row_length(step);
    for (int c = 1; c <= reach; ++c) {
      if (values_by_column[c - 1] == 0) white.push_back(c);
    }
    const auto valid = valid_positions_formula(static_cast<int>(white.size()), fam);
    if (valid.empty()) {
      fail(Errc::EmptyValidSet, "no valid position at step " + std::to_string(step), step);
    }
    const int letter = word[step - 1];
    int index;
    if (letter == 0) {
      if (valid.size() != 1) {
        fail(Errc::LetterOutOfRange,
             "letter 0 at step " + std::to_string(step) + " but the step is not forced", step);
      }
      index = valid.front();
    } else {
      // Forced steps must be written as 0, never as rank 1, so that words
      // and transversals stay in bijection.
      if (valid.size() == 1 || letter < 0 || letter > static_cast<int>(valid.size())) {
        fail(Errc::LetterOutOfRange,
             "letter " + std::to_string(letter) + " invalid for a valid set of size " +
                 std::to_string(valid.size()) + " at step " + std::to_string(step),
             step);
      }
      index = valid[letter - 1];
    }
    values_by_column[white[index - 1] - 1] = n + 1 - step;
  }
  return Transversal(board, std::move(values_by_column));
}

Transversal transfer(const Transversal& t, const ClawFamily& from, const ClawFamily& to) {
  if (!from.same_shape(to)) {
    fail(Errc::ParamMismatch, "families must share (m, k, d) to exchange words");
  }
  return decode(encode(t, from), t.board(), to);
}

}  // namespace popboards
