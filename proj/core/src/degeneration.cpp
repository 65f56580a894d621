#include "cremona/degeneration.hpp"

#include <algorithm>
#include <functional>

#include "cremona/enumeration.hpp"

namespace cremona {

namespace {

void require_proper(const HomaloidalType& t) {
    if (!is_proper(t)) throw ImproperTypeError("type " + to_literal(t) + " is improper");
}

// Distinct multiplicity values (descending) with their counts.
std::vector<std::pair<Int, int>> value_counts(const HomaloidalType& t) {
    std::vector<std::pair<Int, int>> vc;
    for (Int m : t.mults()) {
        if (!vc.empty() && vc.back().first == m)
            ++vc.back().second;
        else
            vc.emplace_back(m, 1);
    }
    return vc;
}

// Calls visit(chosen) for every sub-multiset of `size` entries, chosen as
// a non-increasing list of values.
void for_each_submultiset(const std::vector<std::pair<Int, int>>& vc, int size,
                          const std::function<void(const std::vector<Int>&)>& visit) {
    std::vector<Int> chosen;
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
        if (left == 0) {
            visit(chosen);
            return;
        }
        if (idx == vc.size()) return;
        const int most = std::min(left, vc[idx].second);
        for (int c = most; c >= 0; --c) {
            chosen.insert(chosen.end(), static_cast<std::size_t>(c), vc[idx].first);
            rec(idx + 1, left - c);
            chosen.resize(chosen.size() - static_cast<std::size_t>(c));
        }
    };
    rec(0, size);
}

}  // namespace

std::set<Int> pair_offsets(const HomaloidalType& t) {
    require_proper(t);
    const Int d = t.degree();
    if (d == 1) return {1};
    std::set<Int> out;
    const auto m = t.mults();
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (d - m[i] > 0) out.insert(d - m[i]);
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            const Int k = d - m[i] - m[j];
            if (k > 0) out.insert(k);
        }
    }
    return out;
}

std::set<Int> quintic_offsets(const HomaloidalType& t) {
    require_proper(t);
    std::set<Int> out;
    if (t.num_points() < 5) return out;
    const Int two_d = checked::mul(2, t.degree());
    for_each_submultiset(value_counts(t), 5, [&](const std::vector<Int>& five) {
        Int s = 0;
        for (Int x : five) s = checked::add(s, x);
        const Int k = two_d - s;
        if (k >= 1) out.insert(checked::mul(2, k));
    });
    return out;
}

std::set<Int> collinear_offsets(const HomaloidalType& t) {
    require_proper(t);
    std::set<Int> out;
    if (t.num_points() < 5) return out;
    const Int three_d = checked::mul(3, t.degree());
    for_each_submultiset(value_counts(t), 5, [&](const std::vector<Int>& five) {
        Int s = 0;
        for (Int x : five) s = checked::add(s, x);
        // The two doubled points: any two of the five entries.
        for (std::size_t a = 0; a < five.size(); ++a)
            for (std::size_t b = a + 1; b < five.size(); ++b) {
                const Int k = three_d - (s + five[a] + five[b]);
                if (k >= 1) out.insert(k);
            }
    });
    return out;
}

bool in_closure_plus_one(const HomaloidalType& t) {
    require_proper(t);
    if (t.degree() < 2) throw PreconditionError("the +1 criterion needs degree >= 2");
    return pair_offsets(t).contains(1);
}

Int min_general_offset(const HomaloidalType& t) {
    auto offsets = pair_offsets(t);
    const auto q = quintic_offsets(t);
    offsets.insert(q.begin(), q.end());
    if (offsets.empty()) throw std::logic_error("no degeneration offset for " + to_literal(t));
    return *offsets.begin();
}

std::vector<std::vector<Int>> collinear_plus_one_candidates(const HomaloidalType& t) {
    std::vector<std::vector<Int>> out;
    const auto vc = value_counts(t);
    for (int size : {3, 4}) {
        for_each_submultiset(vc, size, [&](const std::vector<Int>& pick) {
            Int s = 0;
            for (Int x : pick) s += x;
            if (s == t.degree() - 1) out.push_back(pick);
        });
    }
    return out;
}

Int best_pair_sum(const HomaloidalType& t) {
    const Int d = t.degree();
    const auto m = t.mults();
    Int best = 0;  // two general points
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] < d) best = std::max(best, m[i]);
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m[i] + m[j] < d) best = std::max(best, m[i] + m[j]);
    }
    return best;
}

bool best_pair_bound_check(const HomaloidalType& t) {
    require_proper(t);
    const Int d = t.degree();
    const Int s = best_pair_sum(t);
    if (d == 8) return d - 2 <= s && s <= d - 1;
    if (d == 10) return d - 3 <= s && s <= d - 1;
    if (d >= 12) return checked::mul(3, s) > checked::mul(2, d) && s < d;
    return s == d - 1;
}

PlusOneResult degree_plus_one_holds(Int degree, unsigned threads) {
    if (degree < 1) throw PreconditionError("degree must be positive");
    if (degree > kMaxEnumeratedDegree)
        throw HorizonError("degree " + std::to_string(degree) + " exceeds the enumeration horizon " +
                           std::to_string(kMaxEnumeratedDegree));
    PlusOneResult r;
    if (degree == 1) return r;  // linear maps are limits of quadratic ones
    for (const auto& t : enumerate_proper(degree, threads)) {
        if (!in_closure_plus_one(t)) {
            r.holds = false;
            r.failing.push_back(t);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Chaining

const std::vector<HomaloidalType>& ReachSolver::proper_types(Int degree) {
    auto it = proper_.find(degree);
    if (it != proper_.end()) return it->second;
    if (degree > kMaxEnumeratedDegree)
        throw HorizonError("closure chaining needs the proper types of degree " + std::to_string(degree) +
                           ", beyond the enumeration horizon " + std::to_string(kMaxEnumeratedDegree));
    return proper_.emplace(degree, enumerate_proper(degree, threads_)).first->second;
}

std::set<Int> ReachSolver::reach(const HomaloidalType& t, Int limit) {
    const Int d = t.degree();
    std::vector<Int> work;
    for (Int k : pair_offsets(t))
        if (d + k <= limit) work.push_back(d + k);
    for (Int k : quintic_offsets(t))
        if (d + k <= limit) work.push_back(d + k);

    std::set<Int> reached;
    while (!work.empty()) {
        const Int e = work.back();
        work.pop_back();
        if (!reached.insert(e).second || e >= limit) continue;
        for (Int f : class_reach(e, limit))
            if (!reached.contains(f)) work.push_back(f);
    }
    return reached;
}

const std::set<Int>& ReachSolver::class_reach(Int degree, Int limit) {
    const auto key = std::make_pair(degree, limit);
    if (auto it = class_reach_.find(key); it != class_reach_.end()) return it->second;

    std::set<Int> common;
    if (degree < limit) {
        bool first = true;
        for (const auto& t : proper_types(degree)) {
            auto r = reach(t, limit);
            if (first) {
                common = std::move(r);
                first = false;
            } else {
                std::set<Int> both;
                std::set_intersection(common.begin(), common.end(), r.begin(), r.end(),
                                      std::inserter(both, both.end()));
                common = std::move(both);
            }
            if (common.empty()) break;
        }
    }
    return class_reach_.emplace(key, std::move(common)).first->second;
}

std::set<Int> reachable_degrees(const HomaloidalType& t, Int horizon, unsigned threads) {
    require_proper(t);
    if (horizon < 0) throw PreconditionError("horizon must be non-negative");
    const Int limit = checked::add(t.degree(), horizon);
    // class_reach(e) for e in (d, limit) enumerates degree e.
    if (horizon > 1 && limit - 1 > kMaxEnumeratedDegree)
        throw HorizonError("horizon reaches degree " + std::to_string(limit - 1) +
                           ", beyond the enumeration horizon " + std::to_string(kMaxEnumeratedDegree));
    ReachSolver solver(threads);
    return solver.reach(t, limit);
}

DegenerationReport analyze(const HomaloidalType& t, Int horizon, unsigned threads) {
    require_proper(t);
    DegenerationReport r{.type = t};
    r.pair_offsets = pair_offsets(t);
    r.quintic_offsets = quintic_offsets(t);
    r.collinear_offsets = collinear_offsets(t);
    r.plus_one = r.pair_offsets.contains(1);
    r.min_general_offset = min_general_offset(t);
    r.horizon = horizon;
    r.reachable = reachable_degrees(t, horizon, threads);
    r.collinear_plus_one_candidates = collinear_plus_one_candidates(t);
    return r;
}

std::vector<ClosureEqualityRow> closure_equality_table(Int max_degree, unsigned threads) {
    if (max_degree < 1) throw PreconditionError("max degree must be positive");
    if (max_degree - 1 > kMaxEnumeratedDegree)
        throw HorizonError("closure table needs enumeration up to degree " + std::to_string(max_degree - 1));
    ReachSolver solver(threads);
    std::vector<ClosureEqualityRow> rows;
    for (Int d = 1; d <= max_degree; ++d) {
        ClosureEqualityRow row{.degree = d};
        for (Int e = 1; e < d; ++e)
            if (!solver.class_reach(e, d).contains(d)) row.unreached_lower_degrees.push_back(e);
        if (d >= 2) {
            for (const auto& t : solver.proper_types(d - 1))
                if (d - 1 >= 2 && !in_closure_plus_one(t)) row.witnesses.push_back(t);
        }
        if (row.unreached_lower_degrees.empty())
            row.verdict = ClosureVerdict::Equal;
        else if (!row.witnesses.empty())
            row.verdict = ClosureVerdict::NotEqual;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string to_string(ClosureVerdict v) {
    switch (v) {
        case ClosureVerdict::Equal: return "equal";
        case ClosureVerdict::NotEqual: return "not-equal";
        case ClosureVerdict::Undecided: return "undecided";
    }
    return "undecided";
}

ChainCheck chain_check(Int from, Int to, bool use_quintic, unsigned threads) {
    if (from < 1 || to <= from) throw PreconditionError("chain check needs 1 <= from < to");
    if (from > kMaxEnumeratedDegree) throw HorizonError("degree " + std::to_string(from) + " beyond the enumeration horizon");
    ChainCheck c{.from = from, .to = to, .use_quintic = use_quintic};
    for (const auto& t : enumerate_proper(from, threads)) {
        auto offsets = pair_offsets(t);
        if (use_quintic) {
            const auto q = quintic_offsets(t);
            offsets.insert(q.begin(), q.end());
        }
        if (!offsets.empty() && *offsets.begin() <= to - from) {
            c.offsets.emplace_back(t, *offsets.begin());
        } else {
            c.holds = false;
            c.uncovered.push_back(t);
        }
    }
    return c;
}

Theorem1Report theorem1_battery(Int max_degree, unsigned threads) {
    if (max_degree < 12) throw PreconditionError("the Theorem 1 battery needs max degree >= 12");
    if (max_degree > kMaxEnumeratedDegree)
        throw HorizonError("max degree " + std::to_string(max_degree) + " beyond the enumeration horizon");
    Theorem1Report r{.chain_8_10 = chain_check(8, 10, false, threads), .chain_10_12 = chain_check(10, 12, true, threads)};
    r.table = closure_equality_table(max_degree, threads);

    bool ok = r.chain_8_10.holds && r.chain_10_12.holds;
    for (const auto& row : r.table) {
        const bool expect_equal = row.degree <= 8 || row.degree == 10 || row.degree == 12;
        if ((row.verdict == ClosureVerdict::Equal) != expect_equal) ok = false;
    }
    for (Int d = 13; d <= max_degree; ++d) {
        const ThreeMFamily fam = family_3m(d / 3);
        const HomaloidalType& member =
            d % 3 == 0 ? fam.degree_3m : (d % 3 == 1 ? fam.degree_3m_plus_1 : fam.degree_3m_plus_2);
        PlusOneFailures f{.degree = d, .family_member = member, .family_member_fails = !in_closure_plus_one(member)};
        for (const auto& t : enumerate_proper(d, threads))
            if (!in_closure_plus_one(t)) f.enumerated.push_back(t);
        if (f.enumerated.empty() && !f.family_member_fails) ok = false;
        r.beyond_12.push_back(std::move(f));
    }
    r.consistent = ok;
    return r;
}

}  // namespace cremona
