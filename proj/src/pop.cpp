#include "popboards/pop.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace popboards {

Pop::Pop(int size, std::span<const std::pair<int, int>> relations) : size_(size) {
  if (size < 1 || size > kMaxSize) {
    fail(Errc::InvalidParam, "pop size must be in 1.." + std::to_string(kMaxSize));
  }
  above_.assign(static_cast<std::size_t>(size_), 0u);
  for (auto [x, y] : relations) {
    if (x < 1 || x > size_ || y < 1 || y > size_) {
      fail(Errc::LabelOutOfRange, "relation label outside 1.." + std::to_string(size_));
    }
    if (x == y) fail(Errc::CycleDetected, "label " + std::to_string(x) + " above itself");
    above_[x - 1] |= 1u << (y - 1);
  }
  for (int mid = 1; mid <= size_; ++mid) {
    for (int x = 1; x <= size_; ++x) {
      if (above(x, mid)) above_[x - 1] |= above_[mid - 1];
    }
  }
  for (int x = 1; x <= size_; ++x) {
    if (above(x, x)) {
      fail(Errc::CycleDetected, "relations form a cycle through label " + std::to_string(x));
    }
  }
}

Pop Pop::claw(int size, int apex) {
  if (apex < 1 || apex > size) {
    fail(Errc::LabelOutOfRange, "apex " + std::to_string(apex) + " outside 1.." + std::to_string(size));
  }
  std::vector<std::pair<int, int>> relations;
  relations.reserve(static_cast<std::size_t>(size));
  for (int y = 1; y <= size; ++y) {
    if (y != apex) relations.emplace_back(apex, y);
  }
  return Pop(size, relations);
}

Pop Pop::from_pattern(std::span<const int> pattern) {
  const int m = static_cast<int>(pattern.size());
  std::vector<char> seen(static_cast<std::size_t>(m) + 1, 0);
  for (int p : pattern) {
    if (p < 1 || p > m || seen[p]) {
      fail(Errc::InvalidParam, "pattern is not a permutation of 1.." + std::to_string(m));
    }
    seen[p] = 1;
  }
  std::vector<std::pair<int, int>> relations;
  for (int x = 1; x <= m; ++x) {
    for (int y = 1; y <= m; ++y) {
      if (pattern[x - 1] > pattern[y - 1]) relations.emplace_back(x, y);
    }
  }
  return Pop(m, relations);
}

std::vector<std::pair<int, int>> Pop::relations() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 1; x <= size_; ++x) {
    for (int y = 1; y <= size_; ++y) {
      if (above(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

ClawFamily::ClawFamily(int m_, int k_, int d_, int a_) : m(m_), k(k_), d(d_), a(a_) {
  if (m < 1 || k < 0 || d < 0 || a < 1) {
    fail(Errc::InvalidParam, "family needs m >= 1, k >= 0, d >= 0, a >= 1");
  }
  if (a + k * d > m) {
    fail(Errc::ApexOutOfRange, "apex " + std::to_string(a + k * d) + " exceeds m = " + std::to_string(m));
  }
  if (k == 0) d = 0;  // singleton family: the spacing is meaningless
}

std::vector<Pop> ClawFamily::claws() const {
  std::vector<Pop> out;
  out.reserve(static_cast<std::size_t>(claw_count()));
  for (int j = 0; j <= k; ++j) out.push_back(Pop::claw(m, apex(j)));
  return out;
}

namespace {

// Relations hold at an index subset iff every "x above y" sees a larger
// value at position x.
bool realizes(const Pop& pop, std::span<const int> vals) {
  const int m = pop.size();
  for (int x = 1; x <= m; ++x) {
    for (int y = 1; y <= m; ++y) {
      if (pop.above(x, y) && vals[x - 1] <= vals[y - 1]) return false;
    }
  }
  return true;
}

// Visit m-subsets of 1..n in lexicographic order; stop when visit returns true.
template <typename Visit>
void for_each_subset(int n, int m, Visit&& visit) {
  if (m > n) return;
  std::vector<int> idx(static_cast<std::size_t>(m));
  std::iota(idx.begin(), idx.end(), 1);
  for (;;) {
    if (visit(idx)) return;
    int i = m - 1;
    while (i >= 0 && idx[i] == n - (m - 1 - i)) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

template <typename Contained>
std::optional<OccurrenceWitness> find_in_transversal(const Transversal& t, const Pop& pop,
                                                     Contained&& contained) {
  const int n = t.order();
  const int m = pop.size();
  std::optional<OccurrenceWitness> found;
  std::vector<int> vals(static_cast<std::size_t>(m));
  for_each_subset(n, m, [&](const std::vector<int>& cols) {
    for (int i = 0; i < m; ++i) vals[i] = t.value_at(cols[i]);
    if (!realizes(pop, vals)) return false;
    if (!contained(cols, vals)) return false;
    found = OccurrenceWitness{cols, vals};
    return true;
  });
  return found;
}

}  // namespace

std::vector<std::vector<int>> pop_to_patterns(const Pop& pop) {
  const int m = pop.size();
  std::vector<int> sigma(static_cast<std::size_t>(m));
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    if (realizes(pop, sigma)) out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::vector<OccurrenceWitness> find_occurrences(std::span<const int> perm, const Pop& pop) {
  const int n = static_cast<int>(perm.size());
  const int m = pop.size();
  std::vector<OccurrenceWitness> out;
  std::vector<int> vals(static_cast<std::size_t>(m));
  for_each_subset(n, m, [&](const std::vector<int>& idx) {
    for (int i = 0; i < m; ++i) vals[i] = perm[idx[i] - 1];
    if (realizes(pop, vals)) out.push_back(OccurrenceWitness{idx, vals});
    return false;
  });
  return out;
}

std::optional<OccurrenceWitness> find_occurrence(const Transversal& t, const Pop& pop) {
  return find_in_transversal(t, pop, [&](const std::vector<int>& cols, const std::vector<int>& vals) {
    // top-right corner: the row of the largest value is the shortest involved
    return t.board().contains_cell(*std::max_element(vals.begin(), vals.end()), cols.back());
  });
}

std::optional<OccurrenceWitness> find_occurrence_all_cells(const Transversal& t, const Pop& pop) {
  return find_in_transversal(t, pop, [&](const std::vector<int>& cols, const std::vector<int>& vals) {
    for (int v : vals) {
      for (int c : cols) {
        if (!t.board().contains_cell(v, c)) return false;
      }
    }
    return true;
  });
}

bool avoids(const Transversal& t, const Pop& pop) {
  return !find_occurrence(t, pop).has_value();
}

bool avoids(const Transversal& t, std::span<const Pop> pops) {
  for (const Pop& pop : pops) {
    if (!avoids(t, pop)) return false;
  }
  return true;
}

bool avoids(const Transversal& t, const ClawFamily& fam) {
  return !family_occurs_in_partial(t.board(), t.values(), fam);
}

bool family_occurs_in_partial(const FerrersBoard& board,
                              std::span<const int> values_by_column,
                              const ClawFamily& fam) {
  const int n = board.order();
  // An occurrence of the claw with apex offset x needs x-1 smaller values
  // left of the apex column and m-x smaller ones to its right, all within
  // the apex value's row length (the corner containment test).
  for (int ca = 1; ca <= n; ++ca) {
    const int va = values_by_column[ca - 1];
    if (va == 0) continue;
    int left = 0;
    for (int c = 1; c < ca; ++c) {
      const int v = values_by_column[c - 1];
      left += v != 0 && v < va;
    }
    int right = 0;
    const int reach = board.part(va);
    for (int c = ca + 1; c <= reach; ++c) {
      const int v = values_by_column[c - 1];
      right += v != 0 && v < va;
    }
    for (int j = 0; j <= fam.k; ++j) {
      const int apex = fam.apex(j);
      if (left >= apex - 1 && right >= fam.m - apex) return true;
    }
  }
  return false;
}

}  // namespace popboards
