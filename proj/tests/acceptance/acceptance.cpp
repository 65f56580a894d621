// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "cremona/degeneration.hpp"
#include "cremona/enumeration.hpp"
#include "cremona/errors.hpp"
#include "cremona/halphen.hpp"
#include "cremona/json_io.hpp"
#include "cremona/lattice.hpp"
#include "cremona/maps.hpp"
#include "golden.hpp"
#include "property_suites.hpp"

using namespace cremona;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (pass) detail = what;
            pass = false;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

HomaloidalType T(const std::string& s) { return parse_homaloidal_type(s); }

Outcome table_one() {
    Outcome o;
    const auto start = Clock::now();
    const std::vector<std::size_t> counts{1, 1, 2, 3, 4, 5, 9, 10, 17, 19};
    for (Int d = 2; d <= 11; ++d) {
        std::ostringstream out, err;
        const int code =
            cli::run({"enum", std::to_string(d), "--proper-only", "--no-cache", "--json"}, out, err);
        o.require(code == 0, "enum exited with " + std::to_string(code));
        std::set<HomaloidalType> got;
        std::size_t n = 0;
        for (const auto& item : nlohmann::json::parse(out.str())) {
            got.insert(homaloidal_type_from_json(item));
            ++n;
        }
        o.require(got == testing::golden_set(d), "set mismatch at degree " + std::to_string(d));
        o.require(n == counts[d - 2], "count mismatch at degree " + std::to_string(d));
    }
    const double s = seconds_since(start);
    o.require(s < 10.0, "took " + std::to_string(s) + " s");
    return o;
}

Outcome improperness() {
    Outcome o;
    const auto a = hudson_test(parse_type_literal("5;3,3,1^6"));
    o.require(!a.proper && a.witness.has_negative_multiplicity(), "(5;3,3,1^6) not rejected");
    const auto b = hudson_test(parse_type_literal("3;1^7,-1"));
    o.require(!b.proper && b.word.sigma_count() == 0, "(3;1^7,-1) not rejected immediately");
    bool rejected_as_type = false;
    try {
        (void)HomaloidalType::make(3, {1, 1, 1, 1, 1, 1, 1, -1});
    } catch (const PreconditionError&) {
        rejected_as_type = true;
    }
    o.require(rejected_as_type, "(3;1^7,-1) accepted as a type");
    return o;
}

Outcome duality() {
    Outcome o;
    o.require(dual_type(T("6;4,2^4,1^3")) == T("6;3^3,2,1^4"), "dual of (6;4,2^4,1^3)");
    for (Int d = 1; d <= 11; ++d) {
        const auto proper = enumerate_proper(d);
        const std::set<HomaloidalType> same_degree(proper.begin(), proper.end());
        for (const auto& t : proper) {
            const auto dual = dual_type(t);
            o.require(dual_type(dual) == t, "dual not an involution at " + to_literal(t));
            o.require(same_degree.contains(dual), "dual outside the table at " + to_literal(t));
        }
    }
    return o;
}

Outcome plus_one() {
    Outcome o;
    const auto start = Clock::now();
    const std::set<Int> holds{2, 3, 4, 5, 6, 7, 9, 11};
    for (Int d = 2; d <= 12; ++d)
        o.require(degree_plus_one_holds(d).holds == holds.contains(d), "wrong verdict at " + std::to_string(d));
    const auto r8 = degree_plus_one_holds(8).failing;
    o.require(std::set<HomaloidalType>(r8.begin(), r8.end()) ==
                  std::set<HomaloidalType>{T("8;4^3,2^3,1^3"), T("8;3^7")},
              "failing set at 8");
    o.require(degree_plus_one_holds(10).failing.size() == 7, "failing count at 10");
    const double s = seconds_since(start);
    o.require(s < 10.0, "took " + std::to_string(s) + " s");
    return o;
}

Outcome theorem_one() {
    Outcome o;
    const auto c1 = chain_check(8, 10, false);
    o.require(c1.holds, "chain 8 -> 10");
    for (const auto& [t, k] : c1.offsets) o.require(k == 1 || k == 2, "offset outside {1,2} for " + to_literal(t));
    const auto c2 = chain_check(10, 12, true);
    o.require(c2.holds, "chain 10 -> 12");
    bool found = false;
    for (const auto& [t, k] : c2.offsets)
        if (t == T("10;5^3,2^6")) found = k == 2;
    o.require(found, "(10;5^3,2^6) not covered with offset 2");
    for (Int d = 13; d <= 16; ++d) {
        bool fails = !degree_plus_one_holds(d).holds;
        const Int m = d / 3;
        const auto fam = family_3m(m);
        const auto& member = d % 3 == 0 ? fam.degree_3m : (d % 3 == 1 ? fam.degree_3m_plus_1 : fam.degree_3m_plus_2);
        fails = fails || !in_closure_plus_one(member);
        o.require(fails, "no +1 failure at " + std::to_string(d));
    }
    o.require(theorem1_battery(16).consistent, "battery inconsistent");
    return o;
}

Outcome kkover3() {
    Outcome o;
    for (Int d = 1; d <= 12; ++d)
        for (const auto& t : enumerate_proper(d))
            o.require(min_general_offset(t) <= std::max<Int>(1, d / 3), "bound fails at " + to_literal(t));
    return o;
}

Outcome halphen_checks() {
    Outcome o;
    const auto start = Clock::now();
    for (Int a = -5; a <= 5; ++a)
        o.require(halphen::nu_b_power(a) == halphen::nu_b_closed_form(a), "closed form at a=" + std::to_string(a));
    const auto b = halphen::bertini_matrix();
    o.require((b * b).is_identity(), "B^2 != I");
    for (Int a = 1; a <= 5; ++a) {
        const auto t = halphen::lambda_a(a);
        o.require(is_proper(t) && dual_type(t) == t, "Lambda_" + std::to_string(a));
    }
    for (Int a = 1; a <= 3; ++a)
        for (Int k = 1; k <= a; ++k)
            o.require(halphen::obstruction_candidates(a, k).all_r9,
                      "all_r9 fails at a=" + std::to_string(a) + ", k=" + std::to_string(k));
    const double s = seconds_since(start);
    o.require(s < 60.0, "took " + std::to_string(s) + " s");
    return o;
}

std::string canon(const MapTriple& f) { return to_string(canonical(f)); }
std::string canon(const HPoly& p) { return to_string(canonical(p)); }

Outcome symbolic() {
    Outcome o;
    const auto [f, g] = cubic_example_pair();
    o.require(is_inverse_pair(f, g), "cubic pair is not inverse");
    o.require(canon(jacobian(f)) == canon(parse_poly("3*x*y*(3y - z)*(z - y)*(2y - z)^2")), "J(f)");
    const auto pt = [](long a, long b, long c) { return ProjPoint::of(a, b, c); };
    o.require(is_contracted(f, parse_poly("x"), pt(1, 0, 0)) && is_contracted(f, parse_poly("y"), pt(0, 1, 0)) &&
                  is_contracted(f, parse_poly("3y - z"), pt(0, 0, 1)) &&
                  is_contracted(f, parse_poly("z - y"), pt(2, 2, 1)) &&
                  is_contracted(f, parse_poly("2y - z"), pt(1, 0, 0)),
              "contraction targets");
    o.require(verify_jacobian_factorization(f, {{parse_poly("x"), pt(1, 0, 0)},
                                                {parse_poly("y"), pt(0, 1, 0)},
                                                {parse_poly("3y - z"), pt(0, 0, 1)},
                                                {parse_poly("z - y"), pt(2, 2, 1)},
                                                {parse_poly("2y - z"), pt(1, 0, 0)},
                                                {parse_poly("2y - z"), pt(1, 0, 0)}}),
              "Jacobian factorization");

    const auto [r1, h1] = primitive_part(compose(substitute_t(kappa_tilde_family(), 0), standard_sigma()));
    o.require(canon(h1) == "x*y" && canon(r1) == canon(parse_map("[-y*z : -x*z : x*y]")), "first composition");
    const auto [r2, h2] = primitive_part(substitute_t(sigma2_sigma1_family(), 0));
    o.require(canon(h2) == "x - z" && canon(r2) == canon(parse_map("[-y*z : (x - y)*z : (x - z)*y]")),
              "second composition");
    const auto k0 = primitive_part(substitute_t(kappa_family(), 0)).first;
    o.require(canon(k0) == "[x : y : -z]", "kappa(0) = " + canon(k0));
    return o;
}

Outcome properties() {
    Outcome o;
    constexpr int kCases = 1000;
    const std::pair<const char*, testing::SuiteResult> suites[] = {
        {"sigma0 involution", testing::sigma0_involution_suite(kCases, 11)},
        {"Noether preservation", testing::noether_preservation_suite(kCases, 12)},
        {"form preservation", testing::form_preservation_suite(kCases, 13)},
        {"multiplicity oracle", testing::multiplicity_oracle_suite(kCases, 14)},
    };
    for (const auto& [name, r] : suites) {
        o.require(r.cases >= kCases, std::string(name) + ": only " + std::to_string(r.cases) + " cases");
        o.require(r.failures == 0, std::string(name) + ": " + r.first_failure);
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"Table 1 reproduction", table_one},
        {"improper types rejected", improperness},
        {"duality", duality},
        {"+1 closure by degree", plus_one},
        {"chains and failures above 12", theorem_one},
        {"general offset bound", kkover3},
        {"Bertini and Lambda_a", halphen_checks},
        {"symbolic examples", symbolic},
        {"randomized property suites", properties},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::cout << "criterion " << i + 1 << " (" << criteria[i].first << "): " << (o.pass ? "PASS" : "FAIL");
        if (!o.pass) std::cout << " - " << o.detail;
        std::cout << '\n';
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
