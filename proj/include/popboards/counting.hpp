#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "popboards/board.hpp"
#include "popboards/encoding.hpp"
#include "popboards/pop.hpp"

namespace popboards {

// Counts grow like (m-1)^n, so they are kept exact and unbounded.
using Count = mpz_class;

struct BruteForceOptions {
  int cap = 8;   // largest board order enumerated exhaustively (max 20)
  int jobs = 0;  // OpenMP thread count; 0 picks the runtime default
};

// Exhaustive count of family-avoiding transversals. Work splits over the
// first two column choices; partial sums combine by addition, so the result
// does not depend on the schedule. Throws InvalidParam, CapExceeded.
std::uint64_t count_avoiders_bruteforce(const FerrersBoard& board,
                                        const ClawFamily& fam,
                                        const BruteForceOptions& opt = {});

// Serial baseline: enumerate every transversal of the board and filter with
// the all-cells pattern-set occurrence check. Slow on purpose; kept as the
// independent route the fast kernel is tested against.
std::uint64_t count_avoiders_reference(const FerrersBoard& board,
                                       const ClawFamily& fam, int cap = 8);

// Product over the white profile of the per-step valid-position counts.
// Throws InfeasibleBoard.
Count count_avoiders_formula(const FerrersBoard& board, const ClawFamily& fam);

// Avoider count on the n x n board, from (m, k, d) alone:
// n! below m, afterwards the per-width factors of the square's white profile.
// Throws InvalidParam (n < 1, or no legal apex base exists).
Count count_square_formula(int n, int m, int k, int d);

// Single-claw count: n! below m, then (m-1)! * (m-1)^(n-m+1).
Count count_single_claw(int n, int m);

struct CountReport {
  FerrersBoard board;
  ClawFamily family_a;
  std::optional<ClawFamily> family_b;
  std::string method;
  Count count_a;
  std::optional<Count> count_b;
  bool certified = false;
  std::uint64_t pairs_checked = 0;
};

// Counts the avoiders of both families by brute force, requires the counts
// to match, and certifies that transfer maps the avoiders of a bijectively
// onto the avoiders of b (distinct images, image avoids b, round trip is the
// identity). Throws ParamMismatch, CapExceeded, EquivalenceViolated.
CountReport equivalence_check(const FerrersBoard& board, const ClawFamily& a,
                              const ClawFamily& b,
                              const BruteForceOptions& opt = {});

struct Distinguisher {
  FerrersBoard board;
  Count count_a;
  Count count_b;
};

struct DistinguisherOptions {
  // Found boards up to this order are re-counted by brute force as a guard;
  // negative disables the confirmation.
  int confirm_cap = 8;
};

// First board on which the two families have different avoider counts, or
// nullopt if none exists up to order max_n. Scan order: for each n, the
// square first, then the remaining feasible boards lexicographically.
// Throws InvalidParam, CapExceeded (max_n > 14: the board space explodes).
std::optional<Distinguisher> distinguishing_board_search(
    const ClawFamily& a, const ClawFamily& b, int max_n,
    const DistinguisherOptions& opt = {});

}  // namespace popboards
