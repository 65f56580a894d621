#pragma once

#include <string>
#include <vector>

#include "cremona/lattice.hpp"

// Bertini involution matrix, the powers (nu B)^(2a) and the homaloidal
// types Lambda_a = (36a^2+1; 12a^2+6a, (12a^2)^7, 12a^2-6a).
//
// Matrices in this header are written in the basis (e_0, ..., e_9), i.e.
// the first column of B is (17, 0, -6, ..., -6). Use
// flip_multiplicity_signs() to move to the (d; m) coordinates used by the
// lattice module.
namespace cremona::halphen {

/// The 10x10 Bertini matrix B. It fixes e_1.
IntegerMatrix bertini_matrix();

/// Transposition of e_1 and e_2 on 10 coordinates.
IntegerMatrix nu_matrix();

/// (nu B)^(2a) by repeated multiplication; negative a uses (nu B)^-1 = B nu.
IntegerMatrix nu_b_power(Int a);

/// The closed form of (nu B)^(2a): a 36a^2 / 12a^2 / 4a^2 block pattern plus I.
IntegerMatrix nu_b_closed_form(Int a);

/// Lambda_a for a >= 1.
HomaloidalType lambda_a(Int a);

/// The base-point degrees n_1..n_9 of Lambda_a, in the order
/// (12a^2+6a, 12a^2 x7, 12a^2-6a).
std::vector<Int> lambda_multiplicities(Int a);

struct ObstructionSolution {
    std::vector<Int> epsilon;  // 9 entries in [0, k]
    std::vector<Int> extras;   // non-increasing entries in [1, k]
    HomaloidalType type;       // (d+k; n_i + eps_i, extras)
    bool proper = false;
};

struct ObstructionReport {
    Int a = 1;
    Int k = 1;
    Int degree = 0;  // 36a^2 + 1
    std::vector<ObstructionSolution> solutions;
    bool all_r9 = true;
    std::vector<HomaloidalType> proper_candidates;  // distinct, descending
    std::string verdict;
};

/// Exhaustive search for the multiplicity increments a degeneration of a
/// map of type Lambda_a into degree d + k would need:
///   sum eps + sum mu = 3k,
///   sum_{i<=9} (2 n_i eps_i + eps_i^2) + sum mu^2 = 2dk + k^2,
/// with eps_i in [0, k] and extra entries mu in [1, k]. Solutions are
/// ordered by eps ascending (lexicographic), then extras descending.
///
/// verdict:
///   "no-candidates"                no solution gives a proper type;
///   "r9-only-geometric-exclusion"  every solution has r = 9 and the proper
///                                  ones are excluded only by the
///                                  irreducibility argument, not checked here;
///   "unobstructed-candidates"      some proper candidate has extra points.
ObstructionReport obstruction_candidates(Int a, Int k, unsigned threads = 1);

/// Upper bound on k accepted by obstruction_candidates (search-space guard).
inline constexpr Int kMaxObstructionK = 6;

}  // namespace cremona::halphen
