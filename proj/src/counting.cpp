#include "popboards/counting.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace popboards {

namespace {

constexpr int kHardCap = 20;  // n! must stay inside uint64

void check_cap(const FerrersBoard& board, int cap) {
  if (cap < 1 || cap > kHardCap) {
    fail(Errc::InvalidParam, "cap must be in 1.." + std::to_string(kHardCap));
  }
  if (board.order() > cap) {
    fail(Errc::CapExceeded, "board order " + std::to_string(board.order()) +
                                " exceeds the brute-force cap " + std::to_string(cap));
  }
}

Count factorial(int n) {
  Count f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

// Count completions of a column prefix; prefixes that already contain the
// family are never extended.
std::uint64_t count_completions(const FerrersBoard& board, const ClawFamily& fam,
                                std::vector<int>& values_by_column,
                                std::uint32_t used_values, int col) {
  const int n = board.order();
  if (col > n) return 1;
  std::uint64_t total = 0;
  for (int v = 1; v <= n; ++v) {
    if ((used_values >> v) & 1u) continue;
    if (!board.contains_cell(v, col)) continue;
    values_by_column[col - 1] = v;
    if (!family_occurs_in_partial(board, values_by_column, fam)) {
      total += count_completions(board, fam, values_by_column, used_values | (1u << v), col + 1);
    }
    values_by_column[col - 1] = 0;
  }
  return total;
}

}  // namespace

std::uint64_t count_avoiders_bruteforce(const FerrersBoard& board, const ClawFamily& fam,
                                        const BruteForceOptions& opt) {
  check_cap(board, opt.cap);
  if (opt.jobs < 0) fail(Errc::InvalidParam, "jobs must be >= 0");
  if (!board.transversal_feasible()) return 0;
  const int n = board.order();

  // Seed tasks from the first two columns so the parallel loop has enough
  // slack to balance.
  struct Prefix {
    int v1;
    int v2;  // 0 when n == 1
  };
  std::vector<Prefix> prefixes;
  std::vector<int> values(static_cast<std::size_t>(n), 0);
  for (int v1 = 1; v1 <= n; ++v1) {
    values[0] = v1;
    if (family_occurs_in_partial(board, values, fam)) continue;
    if (n == 1) {
      prefixes.push_back({v1, 0});
      continue;
    }
    for (int v2 = 1; v2 <= n; ++v2) {
      if (v2 == v1 || !board.contains_cell(v2, 2)) continue;
      values[1] = v2;
      if (!family_occurs_in_partial(board, values, fam)) prefixes.push_back({v1, v2});
      values[1] = 0;
    }
  }
  values[0] = 0;

  std::uint64_t total = 0;
  const auto run_prefix = [&](const Prefix& p) {
    std::vector<int> local(static_cast<std::size_t>(n), 0);
    local[0] = p.v1;
    std::uint32_t used = 1u << p.v1;
    int col = 2;
    if (p.v2 != 0) {
      local[1] = p.v2;
      used |= 1u << p.v2;
      col = 3;
    }
    return count_completions(board, fam, local, used, col);
  };

#ifdef _OPENMP
  const int threads = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) reduction(+ : total) num_threads(threads)
  for (long i = 0; i < static_cast<long>(prefixes.size()); ++i) {
    total += run_prefix(prefixes[i]);
  }
#else
  for (const Prefix& p : prefixes) total += run_prefix(p);
#endif
  return total;
}

std::uint64_t count_avoiders_reference(const FerrersBoard& board, const ClawFamily& fam,
                                       int cap) {
  check_cap(board, cap);
  const auto claws = fam.claws();
  std::uint64_t total = 0;
  for_each_transversal(board, [&](std::span<const int> values) {
    Transversal t(board, std::vector<int>(values.begin(), values.end()));
    bool clean = true;
    for (const Pop& claw : claws) {
      if (find_occurrence_all_cells(t, claw)) {
        clean = false;
        break;
      }
    }
    total += clean;
    return true;
  });
  return total;
}

Count count_avoiders_formula(const FerrersBoard& board, const ClawFamily& fam) {
  Count product = 1;
  for (int l : board.white_profile()) {
    product *= l < fam.m ? l : valid_position_count(l, fam.m, fam.k, fam.d);
    if (product == 0) return product;
  }
  return product;
}

Count count_square_formula(int n, int m, int k, int d) {
  if (n < 1) fail(Errc::InvalidParam, "n must be positive");
  if (m < 1 || k < 0 || d < 0) fail(Errc::InvalidParam, "need m >= 1, k >= 0, d >= 0");
  if (k * d + 1 > m) {
    fail(Errc::InvalidParam, "no legal apex base: k*d + 1 exceeds m");
  }
  if (n < m) return factorial(n);
  // Widths n down to m contribute the valid-position count, widths below m
  // contribute themselves; the tail products below are split by whether the
  // width-dependent term is active.
  const long base = m - static_cast<long>(k) * d - 1;
  Count product = factorial(m - 1);
  for (int l = m; l <= std::min(d + m - 1, n); ++l) {
    product *= base + static_cast<long>(k) * (d - l + m - 1);
  }
  if (n > d + m - 1) {
    Count power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(n - (d + m - 1)));
    product *= power;
  }
  return product;
}

Count count_single_claw(int n, int m) {
  if (n < 1 || m < 1) fail(Errc::InvalidParam, "n and m must be positive");
  if (n < m) return factorial(n);
  Count power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(m - 1),
                static_cast<unsigned long>(n - m + 1));
  return factorial(m - 1) * power;
}

CountReport equivalence_check(const FerrersBoard& board, const ClawFamily& a,
                              const ClawFamily& b, const BruteForceOptions& opt) {
  if (!a.same_shape(b)) {
    fail(Errc::ParamMismatch, "families must share (m, k, d)");
  }
  check_cap(board, opt.cap);

  std::vector<std::vector<int>> avoiders_a;
  std::set<std::vector<int>> avoiders_b;
  for_each_transversal(board, [&](std::span<const int> values) {
    std::vector<int> vals(values.begin(), values.end());
    if (!family_occurs_in_partial(board, vals, a)) avoiders_a.push_back(vals);
    if (!family_occurs_in_partial(board, vals, b)) avoiders_b.insert(std::move(vals));
    return true;
  });

  if (avoiders_a.size() != avoiders_b.size()) {
    fail(Errc::EquivalenceViolated,
         "avoider counts differ: " + std::to_string(avoiders_a.size()) + " vs " +
             std::to_string(avoiders_b.size()));
  }

  std::set<std::vector<int>> images;
  for (const auto& vals : avoiders_a) {
    Transversal t(board, vals);
    Transversal image = transfer(t, a, b);
    const std::vector<int> image_vals(image.values().begin(), image.values().end());
    if (!avoiders_b.count(image_vals)) {
      fail(Errc::EquivalenceViolated, "transfer image is not an avoider of the target family");
    }
    if (!images.insert(image_vals).second) {
      fail(Errc::EquivalenceViolated, "transfer is not injective");
    }
    Transversal back = transfer(image, b, a);
    if (!std::equal(back.values().begin(), back.values().end(), vals.begin(), vals.end())) {
      fail(Errc::EquivalenceViolated, "transfer round trip is not the identity");
    }
  }

  CountReport report{board, a, b, "bruteforce+transfer",
                     Count(static_cast<unsigned long>(avoiders_a.size())),
                     Count(static_cast<unsigned long>(avoiders_b.size())),
                     true, avoiders_a.size()};
  return report;
}

std::optional<Distinguisher> distinguishing_board_search(const ClawFamily& a,
                                                         const ClawFamily& b, int max_n,
                                                         const DistinguisherOptions& opt) {
  if (max_n < 1) fail(Errc::InvalidParam, "max_n must be positive");
  if (max_n > 14) {
    fail(Errc::CapExceeded, "max_n > 14: the number of boards per order grows too fast");
  }
  for (int n = 1; n <= max_n; ++n) {
    std::vector<FerrersBoard> boards;
    boards.push_back(square_board(n));
    for (auto& candidate : feasible_boards(n)) {
      if (candidate != boards.front()) boards.push_back(std::move(candidate));
    }
    for (const auto& board : boards) {
      const Count count_a = count_avoiders_formula(board, a);
      const Count count_b = count_avoiders_formula(board, b);
      if (count_a == count_b) continue;
      if (opt.confirm_cap >= 0 && n <= opt.confirm_cap) {
        BruteForceOptions brute{std::min(opt.confirm_cap, kHardCap), 0};
        if (Count(count_avoiders_bruteforce(board, a, brute)) != count_a ||
            Count(count_avoiders_bruteforce(board, b, brute)) != count_b) {
          fail(Errc::EquivalenceViolated,
               "formula count disagrees with enumeration on a found board");
        }
      }
      return Distinguisher{board, count_a, count_b};
    }
  }
  return std::nullopt;
}

}  // namespace popboards
