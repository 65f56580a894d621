#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "cremona/cache.hpp"
#include "cremona/degeneration.hpp"
#include "cremona/enumeration.hpp"
#include "cremona/errors.hpp"
#include "cremona/halphen.hpp"
#include "cremona/json_io.hpp"
#include "cremona/lattice.hpp"
#include "cremona/maps.hpp"

namespace cremona::cli {

namespace {

using nlohmann::json;

struct Options {
    unsigned threads = 1;
    bool json = false;
};

std::string join(const std::set<Int>& values) {
    std::ostringstream s;
    bool first = true;
    for (Int v : values) {
        s << (first ? "" : " ") << v;
        first = false;
    }
    return first ? "-" : s.str();
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// A map argument is either a file holding the literal or the literal itself.
std::string read_argument(const std::string& arg) {
    std::error_code ec;
    if (arg.find('[') == std::string::npos && std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }
    return arg;
}

mpq_class parse_rational(const std::string& text) {
    const Poly p = parse_poly(text);
    if (!p.is_constant()) throw ParseError("expected a rational number: '" + text + "'");
    return p.is_zero() ? mpq_class(0) : p.leading_coefficient();
}

MapTriple load_map(const std::string& arg, const std::optional<std::string>& t0) {
    MapTriple f = parse_map(read_argument(arg));
    if (t0) f = substitute_t(f, parse_rational(*t0));
    return f;
}

// ---------------------------------------------------------------------------

void cmd_type_check(const Options& o, const std::string& text, std::ostream& out) {
    const LatticeVector v = parse_type_literal(text);
    const HudsonResult h = hudson_test(v);
    if (o.json) {
        json trace = json::array();
        for (const auto& s : h.trace) trace.push_back(s);
        emit(out, {{"input", v},
                   {"proper", h.proper},
                   {"sigma_steps", h.word.sigma_count()},
                   {"witness", h.proper ? json(nullptr) : json(h.witness)},
                   {"trace", trace}});
        return;
    }
    out << (h.proper ? "proper" : "improper") << '\n';
    if (!h.proper) out << "witness (" << to_literal(h.witness) << ")\n";
}

void cmd_type_dual(const Options& o, const std::string& text, std::ostream& out) {
    const HomaloidalType t = parse_homaloidal_type(text);
    const HomaloidalType d = dual_type(t);
    if (o.json)
        emit(out, {{"type", t}, {"dual", d}});
    else
        out << d << '\n';
}

void cmd_type_matrix(const Options& o, const std::string& text, std::ostream& out) {
    const HomaloidalType t = parse_homaloidal_type(text);
    const IntegerMatrix m = characteristic_matrix(t);
    if (o.json)
        emit(out, {{"type", t}, {"matrix", m}});
    else
        out << m;
}

void cmd_enum(const Options& o, Int degree, bool proper_only, const std::string& cache_dir, bool no_cache,
              std::ostream& out) {
    if (degree < 1) throw PreconditionError("degree must be positive");
    std::optional<EnumerationCache> cache;
    if (!no_cache) cache.emplace(cache_dir);
    const auto kind = proper_only ? EnumerationKind::Proper : EnumerationKind::Noether;
    const auto types = enumerate_cached(kind, degree, cache ? &*cache : nullptr, o.threads);
    if (o.json) {
        out << types_to_json_text(types);
        return;
    }
    for (const auto& t : types) out << t << '\n';
}

void cmd_degen_analyze(const Options& o, const std::string& text, Int horizon, std::ostream& out) {
    const HomaloidalType t = parse_homaloidal_type(text);
    const DegenerationReport r = analyze(t, horizon, o.threads);
    if (o.json) {
        emit(out, {{"type", t},
                   {"pair_offsets", r.pair_offsets},
                   {"quintic_offsets", r.quintic_offsets},
                   {"collinear_offsets", r.collinear_offsets},
                   {"plus_one", r.plus_one},
                   {"min_general_offset", r.min_general_offset},
                   {"horizon", r.horizon},
                   {"reachable_degrees", r.reachable},
                   {"collinear_plus_one_candidates", r.collinear_plus_one_candidates}});
        return;
    }
    out << "type " << t << '\n'
        << "pair offsets: " << join(r.pair_offsets) << '\n'
        << "quintic offsets: " << join(r.quintic_offsets) << '\n'
        << "collinear offsets (special maps only): " << join(r.collinear_offsets) << '\n'
        << "in closure of degree d+1: " << (r.plus_one ? "yes" : "no") << '\n'
        << "min general offset: " << r.min_general_offset << '\n'
        << "reachable degrees within " << horizon << ": " << join(r.reachable) << '\n';
    out << "collinear +1 candidates:";
    if (r.collinear_plus_one_candidates.empty()) out << " -";
    for (const auto& c : r.collinear_plus_one_candidates) {
        out << " {";
        for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
        out << "}";
    }
    out << '\n';
}

void cmd_degen_plus_one(const Options& o, Int degree, std::ostream& out) {
    const PlusOneResult r = degree_plus_one_holds(degree, o.threads);
    if (o.json) {
        emit(out, {{"degree", degree}, {"holds", r.holds}, {"failing", r.failing}});
        return;
    }
    out << (r.holds ? "holds" : "fails") << '\n';
    for (const auto& t : r.failing) out << t << '\n';
}

json chain_json(const ChainCheck& c) {
    json offsets = json::array();
    for (const auto& [t, k] : c.offsets) offsets.push_back({{"type", t}, {"offset", k}});
    return {{"from", c.from},       {"to", c.to},           {"use_quintic", c.use_quintic},
            {"holds", c.holds},     {"offsets", offsets},   {"uncovered", c.uncovered}};
}

void print_chain(const ChainCheck& c, std::ostream& out) {
    out << "chain " << c.from << " -> " << c.to << (c.use_quintic ? " (pair and quintic offsets): " : " (pair offsets): ")
        << (c.holds ? "holds" : "fails") << '\n';
    for (const auto& [t, k] : c.offsets)
        if (k > 1) out << "  " << t << " offset " << k << '\n';
    for (const auto& t : c.uncovered) out << "  uncovered " << t << '\n';
}

void cmd_theorem1(const Options& o, Int max_degree, std::ostream& out) {
    const Theorem1Report r = theorem1_battery(max_degree, o.threads);
    if (o.json) {
        json beyond = json::array();
        for (const auto& f : r.beyond_12)
            beyond.push_back({{"degree", f.degree},
                              {"failing", f.enumerated},
                              {"family_member", f.family_member},
                              {"family_member_fails", f.family_member_fails}});
        json table = json::array();
        for (const auto& row : r.table)
            table.push_back({{"degree", row.degree},
                             {"verdict", to_string(row.verdict)},
                             {"witnesses", row.witnesses},
                             {"unreached_lower_degrees", row.unreached_lower_degrees}});
        emit(out, {{"chain_8_10", chain_json(r.chain_8_10)},
                   {"chain_10_12", chain_json(r.chain_10_12)},
                   {"beyond_12", beyond},
                   {"table", table},
                   {"consistent", r.consistent}});
        return;
    }
    print_chain(r.chain_8_10, out);
    print_chain(r.chain_10_12, out);
    for (const auto& f : r.beyond_12)
        out << "degree " << f.degree << ": " << f.enumerated.size() << " proper types fail +1; " << f.family_member
            << (f.family_member_fails ? " fails" : " passes") << '\n';
    out << "closure table:\n";
    for (const auto& row : r.table) out << "  " << row.degree << " " << to_string(row.verdict) << '\n';
    out << "consistent: " << (r.consistent ? "yes" : "no") << '\n';
}

void cmd_halphen_lambda(const Options& o, Int a, std::ostream& out) {
    const HomaloidalType t = halphen::lambda_a(a);
    const bool proper = is_proper(t);
    const bool self_dual = proper && dual_type(t) == t;
    if (o.json) {
        emit(out, {{"a", a}, {"type", t}, {"proper", proper}, {"self_dual", self_dual}});
        return;
    }
    out << t << '\n' << (proper ? "proper" : "improper") << (self_dual ? ", self-dual" : "") << '\n';
}

void cmd_halphen_matrix(const Options& o, Int a, std::ostream& out) {
    const IntegerMatrix m = halphen::nu_b_power(a);
    const bool matches = m == halphen::nu_b_closed_form(a);
    if (o.json) {
        emit(out, {{"a", a}, {"matrix", m}, {"matches_closed_form", matches}});
        return;
    }
    out << m << "closed form: " << (matches ? "matches" : "differs") << '\n';
}

void cmd_halphen_obstruct(const Options& o, Int a, Int k, std::ostream& out) {
    const auto r = halphen::obstruction_candidates(a, k, o.threads);
    if (o.json) {
        json sols = json::array();
        for (const auto& s : r.solutions)
            sols.push_back({{"epsilon", s.epsilon}, {"extras", s.extras}, {"type", s.type}, {"proper", s.proper}});
        json j{{"a", r.a},
               {"k", r.k},
               {"degree", r.degree},
               {"all_r9", r.all_r9},
               {"solutions", sols},
               {"proper_candidates", r.proper_candidates},
               {"verdict", r.verdict}};
        if (r.verdict == "r9-only-geometric-exclusion")
            j["exclusion"] = "irreducibility of the limit linear system; not decided here";
        emit(out, j);
        return;
    }
    out << "Lambda_" << a << " = " << halphen::lambda_a(a) << ", k = " << k << '\n'
        << "solutions: " << r.solutions.size() << '\n'
        << "all r = 9: " << (r.all_r9 ? "yes" : "no") << '\n'
        << "proper candidates: " << r.proper_candidates.size() << '\n';
    for (const auto& t : r.proper_candidates) out << "  " << t << '\n';
    out << "verdict: " << r.verdict << '\n';
}

void cmd_map_degree(const Options& o, const MapTriple& f, std::ostream& out) {
    const auto [reduced, h] = primitive_part(f);
    if (o.json) {
        emit(out, {{"formal_degree", f.degree}, {"degree", reduced.degree}});
        return;
    }
    out << reduced.degree << '\n';
}

void cmd_map_jacobian(const Options& o, const MapTriple& f, std::ostream& out) {
    const HPoly j = jacobian(f);
    if (o.json) {
        json factors = json::array();
        for (const auto& [form, mult] : linear_factors(j)) factors.push_back({{"factor", to_string(form)}, {"multiplicity", mult}});
        emit(out, {{"jacobian", to_string(j)}, {"linear_factors", factors}});
        return;
    }
    out << to_string(j) << '\n';
}

void cmd_map_compose(const Options& o, const MapTriple& f, const MapTriple& g, bool reduce, std::ostream& out) {
    MapTriple c = compose(f, g);
    Poly h(1);
    if (reduce) std::tie(c, h) = primitive_part(c);
    if (o.json) {
        json j{{"map", to_string(c)}, {"degree", c.degree}};
        if (reduce) j["common_factor"] = to_string(h);
        emit(out, j);
        return;
    }
    out << to_string(c) << '\n';
    if (reduce) out << "common factor: " << to_string(h) << '\n';
}

void cmd_map_reduce(const Options& o, const MapTriple& f, std::ostream& out) {
    const auto [reduced, h] = primitive_part(f);
    const MapTriple c = canonical(reduced);
    if (o.json) {
        emit(out, {{"map", to_string(c)}, {"degree", c.degree}, {"common_factor", to_string(h)}});
        return;
    }
    out << to_string(c) << '\n' << "common factor: " << to_string(h) << '\n';
}

void print_bool(const Options& o, const char* key, bool value, std::ostream& out) {
    if (o.json)
        emit(out, {{key, value}});
    else
        out << (value ? "true" : "false") << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Homaloidal types and plane Cremona maps", "cremona"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--threads", o.threads, "Worker threads for enumeration and search")->check(CLI::Range(1u, 256u));
    app.add_flag("--json", o.json, "Machine-readable output");

    std::function<void()> action;
    std::string type_text, cache_dir = ".cremona-cache";
    Int degree = 0, horizon = 2, max_degree = 16, a = 1, k = 1;
    bool proper_only = false, no_cache = false, reduce = false;
    std::string map1, map2, extra;
    std::optional<std::string> t0;

    auto* type = app.add_subcommand("type", "Hudson's test, duals and characteristic matrices");
    type->require_subcommand(1);
    auto* check = type->add_subcommand("check", "Properness by Hudson's test");
    check->add_option("type", type_text, "Type literal such as \"5;2^6\"")->required();
    check->callback([&] { action = [&] { cmd_type_check(o, type_text, out); }; });
    auto* dual = type->add_subcommand("dual", "Type of the inverse map");
    dual->add_option("type", type_text)->required();
    dual->callback([&] { action = [&] { cmd_type_dual(o, type_text, out); }; });
    auto* matrix = type->add_subcommand("matrix", "Characteristic matrix in (d; m) coordinates");
    matrix->add_option("type", type_text)->required();
    matrix->callback([&] { action = [&] { cmd_type_matrix(o, type_text, out); }; });

    auto* en = app.add_subcommand("enum", "All Noether (or proper) types of a degree");
    en->add_option("degree", degree)->required();
    en->add_flag("--proper-only", proper_only);
    en->add_option("--cache", cache_dir, "Cache directory")->capture_default_str();
    en->add_flag("--no-cache", no_cache, "Neither read nor write the cache");
    en->add_flag("--json", o.json);
    en->callback([&] { action = [&] { cmd_enum(o, degree, proper_only, cache_dir, no_cache, out); }; });

    auto* degen = app.add_subcommand("degen", "Degeneration offsets and the +1 criterion");
    degen->require_subcommand(1);
    auto* analyze_cmd = degen->add_subcommand("analyze", "Offsets and reachable degrees of a proper type");
    analyze_cmd->add_option("type", type_text)->required();
    analyze_cmd->add_option("--horizon", horizon)->capture_default_str()->check(CLI::NonNegativeNumber);
    analyze_cmd->callback([&] { action = [&] { cmd_degen_analyze(o, type_text, horizon, out); }; });
    auto* plus_one = degen->add_subcommand("plus-one", "Whether every proper type of degree d passes the +1 criterion");
    plus_one->add_option("degree", degree)->required();
    plus_one->callback([&] { action = [&] { cmd_degen_plus_one(o, degree, out); }; });

    auto* thm = app.add_subcommand("theorem1", "Chains, +1 failures and the closure table");
    thm->add_option("--max-degree", max_degree)->capture_default_str();
    thm->callback([&] { action = [&] { cmd_theorem1(o, max_degree, out); }; });

    auto* hal = app.add_subcommand("halphen", "Bertini matrix powers and the Lambda_a family");
    hal->require_subcommand(1);
    auto* lam = hal->add_subcommand("lambda", "The type Lambda_a");
    lam->add_option("a", a)->required();
    lam->callback([&] { action = [&] { cmd_halphen_lambda(o, a, out); }; });
    auto* hm = hal->add_subcommand("matrix", "(nu B)^(2a) in the e-basis");
    hm->add_option("a", a)->required();
    hm->callback([&] { action = [&] { cmd_halphen_matrix(o, a, out); }; });
    auto* ob = hal->add_subcommand("obstruct", "Exhaustive obstruction search");
    ob->add_option("a", a)->required();
    ob->add_option("k", k)->required();
    ob->callback([&] { action = [&] { cmd_halphen_obstruct(o, a, k, out); }; });

    auto* mp = app.add_subcommand("map", "Exact computations with rational maps");
    mp->require_subcommand(1);
    auto add_map_cmd = [&](const char* name, const char* help, int maps, const char* extra_name) {
        auto* c = mp->add_subcommand(name, help);
        c->add_option("map", map1, "Map literal [f0 : f1 : f2] or a file holding one")->required();
        if (maps > 1) c->add_option("second", map2)->required();
        if (extra_name) c->add_option(extra_name, extra)->required();
        c->add_option("--at-t", t0, "Substitute a rational value for t first");
        return c;
    };
    add_map_cmd("degree", "Degree after removing common factors", 1, nullptr)->callback([&] {
        action = [&] { cmd_map_degree(o, load_map(map1, t0), out); };
    });
    add_map_cmd("jacobian", "Canonical Jacobian determinant", 1, nullptr)->callback([&] {
        action = [&] { cmd_map_jacobian(o, load_map(map1, t0), out); };
    });
    auto* comp = add_map_cmd("compose", "f o g by substitution", 2, nullptr);
    comp->add_flag("--reduce", reduce, "Also remove the common factor");
    comp->callback([&] {
        action = [&] { cmd_map_compose(o, load_map(map1, t0), load_map(map2, t0), reduce, out); };
    });
    add_map_cmd("inverse-check", "Whether g o f is the identity", 2, nullptr)->callback([&] {
        action = [&] { print_bool(o, "inverse", is_inverse_pair(load_map(map1, t0), load_map(map2, t0)), out); };
    });
    add_map_cmd("mult", "Multiplicity at a point", 1, "point")->callback([&] {
        action = [&] {
            const int m = multiplicity_at(load_map(map1, t0), parse_point(extra));
            if (o.json)
                emit(out, {{"multiplicity", m}});
            else
                out << m << '\n';
        };
    });
    add_map_cmd("contracted", "Whether the map contracts a curve onto a point", 2, "point")->callback([&] {
        action = [&] {
            print_bool(o, "contracted", is_contracted(load_map(map1, t0), parse_poly(map2), parse_point(extra)), out);
        };
    });
    add_map_cmd("reduce", "Remove the common factor", 1, nullptr)->callback([&] {
        action = [&] { cmd_map_reduce(o, load_map(map1, t0), out); };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (action) action();
        return 0;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        err << "precondition: " << e.what() << '\n';
        return 3;
    } catch (const OverflowError& e) {
        err << "overflow: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 4;
    }
}

}  // namespace cremona::cli
