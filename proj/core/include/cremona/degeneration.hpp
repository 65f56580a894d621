#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cremona/lattice.hpp"

namespace cremona {

/// Largest degree the degeneration routines will enumerate. Anything that
/// needs the full list of proper types beyond this throws HorizonError.
inline constexpr Int kMaxEnumeratedDegree = 20;

// Offsets k such that a general map of the given type lies in the closure
// of the maps of degree d + k. All functions below require a proper type
// and throw ImproperTypeError otherwise.

/// {d - m_i - m_j : i != j} together with {d - m_i}, positive values only.
/// Degree 1 is special: two general points (multiplicity 0) give {1}.
std::set<Int> pair_offsets(const HomaloidalType& t);

/// {2k : some five multiplicities sum to 2d - k, k >= 1}; empty if r < 5.
std::set<Int> quintic_offsets(const HomaloidalType& t);

/// {k : m1 + m2 + m3 + 2 m4 + 2 m5 = 3d - k, k >= 1} over choices of five
/// distinct points, the first three collinear. Only some special maps of
/// the type degenerate this way; never use this for the whole component.
std::set<Int> collinear_offsets(const HomaloidalType& t);

/// Exact criterion for the component of the type to lie in the closure of
/// degree d + 1: some m_i + m_j = d - 1 or some m_i = d - 1.
bool in_closure_plus_one(const HomaloidalType& t);

/// min(pair_offsets ∪ quintic_offsets).
Int min_general_offset(const HomaloidalType& t);

/// Multisets of three or four multiplicities summing to d - 1 (values only).
/// Necessary for a map with only proper base-points to degenerate from
/// degree d + 1 when the points are collinear; informational.
std::vector<std::vector<Int>> collinear_plus_one_candidates(const HomaloidalType& t);

/// Largest m_i + m_j < d over distinct points, zero multiplicities allowed.
Int best_pair_sum(const HomaloidalType& t);

/// Checks best_pair_sum against the degree-dependent bounds:
/// d - 1 for d in {1..7, 9, 11}; [d-2, d-1] for d = 8; [d-3, d-1] for d = 10;
/// 2d/3 < s < d for d >= 12.
bool best_pair_bound_check(const HomaloidalType& t);

struct PlusOneResult {
    bool holds = true;
    std::vector<HomaloidalType> failing;
};

/// Whether every proper type of degree d satisfies in_closure_plus_one.
PlusOneResult degree_plus_one_holds(Int degree, unsigned threads = 1);

/// Closure-chain reasoning over degrees. Results are memoised per instance,
/// so one solver should be reused across related queries.
class ReachSolver {
public:
    explicit ReachSolver(unsigned threads = 1) : threads_(threads) {}

    /// Degrees in (d, limit] whose closure provably contains the general
    /// map of type t. Seeds with d + pair/quintic offsets, then adds
    /// class_reach(e, limit) for every reached e.
    std::set<Int> reach(const HomaloidalType& t, Int limit);

    /// Degrees f in (e, limit] with Bir_e contained in closure(Bir_f) by
    /// the rules: the intersection of reach(T, limit) over proper T of
    /// degree e.
    const std::set<Int>& class_reach(Int degree, Int limit);

    const std::vector<HomaloidalType>& proper_types(Int degree);

private:
    unsigned threads_;
    std::map<Int, std::vector<HomaloidalType>> proper_;
    std::map<std::pair<Int, Int>, std::set<Int>> class_reach_;
};

/// reachable degrees within (d, d + horizon]. Throws HorizonError when the
/// chaining would need enumeration above kMaxEnumeratedDegree.
std::set<Int> reachable_degrees(const HomaloidalType& t, Int horizon, unsigned threads = 1);

struct DegenerationReport {
    HomaloidalType type;
    std::set<Int> pair_offsets;
    std::set<Int> quintic_offsets;
    std::set<Int> collinear_offsets;
    bool plus_one = false;
    Int min_general_offset = 0;
    Int horizon = 0;
    std::set<Int> reachable;
    std::vector<std::vector<Int>> collinear_plus_one_candidates;
};

DegenerationReport analyze(const HomaloidalType& t, Int horizon, unsigned threads = 1);

/// Whether closure(Bir_d) equals Bir_{<= d}, as far as the rules decide it.
enum class ClosureVerdict { Equal, NotEqual, Undecided };

struct ClosureEqualityRow {
    Int degree = 1;
    ClosureVerdict verdict = ClosureVerdict::Undecided;
    /// For NotEqual: proper types of degree d - 1 failing the +1 criterion.
    std::vector<HomaloidalType> witnesses;
    /// For Equal/Undecided: lower degrees whose class is not shown to reach d.
    std::vector<Int> unreached_lower_degrees;
};

/// Rows for d = 1..max_degree. Equal when every lower degree class reaches
/// d; NotEqual when some type of degree d - 1 fails the exact +1 criterion.
std::vector<ClosureEqualityRow> closure_equality_table(Int max_degree, unsigned threads = 1);

std::string to_string(ClosureVerdict v);

/// Every proper type of degree `from` has an offset k <= to - from among
/// its pair offsets (and quintic offsets when allowed).
struct ChainCheck {
    Int from = 0;
    Int to = 0;
    bool use_quintic = false;
    bool holds = true;
    /// Per type, the smallest usable offset.
    std::vector<std::pair<HomaloidalType, Int>> offsets;
    std::vector<HomaloidalType> uncovered;
};

ChainCheck chain_check(Int from, Int to, bool use_quintic, unsigned threads = 1);

struct PlusOneFailures {
    Int degree = 0;
    std::vector<HomaloidalType> enumerated;  // proper types failing +1
    HomaloidalType family_member;            // the 3m-family type of this degree
    bool family_member_fails = false;
};

struct Theorem1Report {
    ChainCheck chain_8_10;
    ChainCheck chain_10_12;
    std::vector<PlusOneFailures> beyond_12;  // degrees 13..max_degree
    std::vector<ClosureEqualityRow> table;   // degrees 1..max_degree
    /// Table verdicts are Equal exactly for d <= 8 and d in {10, 12}, both
    /// chains hold and every degree above 12 has a failing type.
    bool consistent = false;
};

Theorem1Report theorem1_battery(Int max_degree = 16, unsigned threads = 1);

}  // namespace cremona
