#include "cremona/halphen.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "cremona/parallel.hpp"

namespace cremona::halphen {

namespace {

constexpr std::size_t kDim = 10;

IntegerMatrix power(IntegerMatrix base, Int exponent) {
    IntegerMatrix result = IntegerMatrix::identity(base.dimension());
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

// Partitions of `sum` into parts in [1, cap], non-increasing, whose squares
// add up to `square_sum`. Larger leading parts first.
void partitions_with_square_sum(Int sum, Int square_sum, Int cap, std::vector<Int>& current,
                                std::vector<std::vector<Int>>& out) {
    if (sum == 0) {
        if (square_sum == 0) out.push_back(current);
        return;
    }
    for (Int p = std::min(cap, sum); p >= 1; --p) {
        const Int rest = sum - p;
        const Int rest_sq = square_sum - p * p;
        if (rest_sq < rest || rest_sq > p * rest) continue;
        current.push_back(p);
        partitions_with_square_sum(rest, rest_sq, p, current, out);
        current.pop_back();
    }
}

}  // namespace

IntegerMatrix bertini_matrix() {
    IntegerMatrix b(kDim);
    b(0, 0) = 17;
    b(1, 1) = 1;
    for (std::size_t j = 2; j < kDim; ++j) b(0, j) = 6;
    for (std::size_t i = 2; i < kDim; ++i) {
        b(i, 0) = -6;
        for (std::size_t j = 2; j < kDim; ++j) b(i, j) = i == j ? -3 : -2;
    }
    return b;
}

IntegerMatrix nu_matrix() {
    IntegerMatrix n = IntegerMatrix::identity(kDim);
    n(1, 1) = n(2, 2) = 0;
    n(1, 2) = n(2, 1) = 1;
    return n;
}

IntegerMatrix nu_b_power(Int a) {
    const IntegerMatrix forward = nu_matrix() * bertini_matrix();
    if (a >= 0) return power(forward, checked::mul(2, a));
    // nu and B are involutions, so (nu B)^-1 = B nu.
    const IntegerMatrix backward = bertini_matrix() * nu_matrix();
    return power(backward, checked::mul(-2, a));
}

IntegerMatrix nu_b_closed_form(Int a) {
    using namespace checked;
    const Int a2 = square(a);
    const Int n36 = mul(36, a2), n12 = mul(12, a2), n4 = mul(4, a2);
    const Int six_a = mul(6, a), four_a = mul(4, a), two_a = mul(2, a);

    IntegerMatrix m(kDim);
    // Row 0.
    m(0, 0) = n36;
    m(0, 1) = sub(n12, six_a);
    m(0, 2) = add(n12, six_a);
    for (std::size_t j = 3; j < kDim; ++j) m(0, j) = n12;
    // Row 1.
    m(1, 0) = neg(add(n12, six_a));
    m(1, 1) = neg(n4);
    m(1, 2) = sub(neg(n4), four_a);
    for (std::size_t j = 3; j < kDim; ++j) m(1, j) = sub(neg(n4), two_a);
    // Row 2.
    m(2, 0) = add(neg(n12), six_a);
    m(2, 1) = add(neg(n4), four_a);
    m(2, 2) = neg(n4);
    for (std::size_t j = 3; j < kDim; ++j) m(2, j) = add(neg(n4), two_a);
    // Rows 3..9.
    for (std::size_t i = 3; i < kDim; ++i) {
        m(i, 0) = neg(n12);
        m(i, 1) = add(neg(n4), two_a);
        m(i, 2) = sub(neg(n4), two_a);
        for (std::size_t j = 3; j < kDim; ++j) m(i, j) = neg(n4);
    }
    for (std::size_t i = 0; i < kDim; ++i) m(i, i) = add(m(i, i), 1);
    return m;
}

std::vector<Int> lambda_multiplicities(Int a) {
    if (a < 1) throw DomainError("Lambda_a needs a >= 1");
    using namespace checked;
    const Int n12 = mul(12, square(a));
    const Int six_a = mul(6, a);
    std::vector<Int> n{add(n12, six_a)};
    n.insert(n.end(), 7, n12);
    n.push_back(sub(n12, six_a));
    return n;
}

HomaloidalType lambda_a(Int a) {
    const auto n = lambda_multiplicities(a);
    return HomaloidalType::make(checked::add(checked::mul(36, checked::square(a)), 1), n);
}

ObstructionReport obstruction_candidates(Int a, Int k, unsigned threads) {
    if (a < 1) throw DomainError("obstruction search needs a >= 1");
    if (k < 1) throw DomainError("obstruction search needs k >= 1");
    if (k > kMaxObstructionK)
        throw PreconditionError("obstruction search limited to k <= " + std::to_string(kMaxObstructionK));

    using namespace checked;
    const auto n = lambda_multiplicities(a);
    const Int d = add(mul(36, square(a)), 1);
    const Int total_sum = mul(3, k);
    const Int target = add(mul(mul(2, d), k), square(k));

    // Branch on eps_1; within a branch eps_2..eps_9 are enumerated in
    // lexicographic order with running-budget pruning.
    auto branch = [&](std::size_t first) {
        std::vector<ObstructionSolution> found;
        std::vector<Int> eps(9, 0);
        std::vector<std::vector<Int>> extras_list;
        std::vector<Int> scratch;

        auto emit = [&](Int sum_used, Int quad_used) {
            const Int s_rem = total_sum - sum_used;
            const Int q_rem = target - quad_used;
            extras_list.clear();
            partitions_with_square_sum(s_rem, q_rem, k, scratch, extras_list);
            for (auto& extras : extras_list) {
                std::vector<Int> mults;
                for (std::size_t i = 0; i < 9; ++i) mults.push_back(add(n[i], eps[i]));
                mults.insert(mults.end(), extras.begin(), extras.end());
                // The two constraints are exactly the Noether equalities in
                // degree d + k; make() re-checks them.
                ObstructionSolution sol{.epsilon = eps, .extras = extras,
                                        .type = HomaloidalType::make(add(d, k), std::move(mults))};
                sol.proper = is_proper(sol.type);
                found.push_back(std::move(sol));
            }
        };

        std::function<void(std::size_t, Int, Int)> rec = [&](std::size_t i, Int sum_used, Int quad_used) {
            if (i == 9) {
                emit(sum_used, quad_used);
                return;
            }
            for (Int e = 0; e <= k; ++e) {
                const Int s = sum_used + e;
                const Int q = add(quad_used, add(mul(mul(2, n[i]), e), square(e)));
                if (s > total_sum || q > target) break;
                eps[i] = e;
                rec(i + 1, s, q);
            }
            eps[i] = 0;
        };

        const Int e1 = static_cast<Int>(first);
        const Int q1 = add(mul(mul(2, n[0]), e1), square(e1));
        if (e1 <= total_sum && q1 <= target) {
            eps[0] = e1;
            rec(1, e1, q1);
        }
        return found;
    };

    const auto branches =
        cremona::detail::ordered_parallel_map<std::vector<ObstructionSolution>>(static_cast<std::size_t>(k + 1), threads, branch);

    ObstructionReport report{.a = a, .k = k, .degree = d};
    std::set<HomaloidalType, std::greater<>> proper;
    bool proper_with_extras = false;
    for (const auto& b : branches)
        for (const auto& sol : b) {
            if (!sol.extras.empty()) report.all_r9 = false;
            if (sol.proper) {
                proper.insert(sol.type);
                if (!sol.extras.empty()) proper_with_extras = true;
            }
            report.solutions.push_back(sol);
        }
    report.proper_candidates.assign(proper.begin(), proper.end());

    if (report.proper_candidates.empty())
        report.verdict = "no-candidates";
    else if (!proper_with_extras && report.all_r9)
        report.verdict = "r9-only-geometric-exclusion";
    else
        report.verdict = "unobstructed-candidates";
    return report;
}

}  // namespace cremona::halphen
