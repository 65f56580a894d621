#include "cremona/maps.hpp"

#include <numeric>
#include <sstream>

#include "cremona/errors.hpp"

namespace cremona {

namespace {

const Poly& x_() {
    static const Poly p = Poly::var(X);
    return p;
}
const Poly& y_() {
    static const Poly p = Poly::var(Y);
    return p;
}
const Poly& z_() {
    static const Poly p = Poly::var(Z);
    return p;
}
Poly t_() { return Poly::var(T); }

// Sign convention shared by maps and Jacobians: look at the coefficient (a
// polynomial in t) of the graded-lex-leading monomial in x, y, z; use its
// value at t = 0, or its leading coefficient when that value is zero.
int leading_sign(const Poly& p) {
    const auto coeffs = p.xyz_coefficients();
    if (coeffs.empty()) return 0;
    // xyz_coefficients is ordered lexicographically; homogeneous input makes
    // this the graded-lex order too.
    const Poly& c = coeffs.begin()->second;
    const mpq_class at0 = c.evaluate({0, 0, 0, 0});
    if (at0 != 0) return sgn(at0);
    return sgn(c.leading_coefficient());
}

void require_constant(const ProjPoint& p, const char* what) {
    if (!p.is_constant()) throw PreconditionError(std::string(what) + " needs a point with constant coordinates");
}

Poly linear_form(const std::array<Poly, 3>& coeffs) {
    return coeffs[0] * x_() + coeffs[1] * y_() + coeffs[2] * z_();
}

// Coefficient of v in a linear form (a polynomial in t).
Poly linear_coefficient(const Poly& f, Var v) {
    Poly out;
    for (const auto& [e, c] : f.terms()) {
        if (e[v] != 1) continue;
        Exponent te{};
        te[T] = e[T];
        out += Poly::monomial(te, c);
    }
    return out;
}

MapTriple reduced_of(const MapTriple& f) { return primitive_part(f).first; }

}  // namespace

MapTriple MapTriple::make(std::array<HPoly, 3> components, bool reduced) {
    std::optional<int> degree;
    for (const auto& c : components) {
        if (c.is_zero()) continue;
        const auto d = c.homogeneous_degree();
        if (!d) throw PreconditionError("map component " + to_string(c) + " is not homogeneous in x, y, z");
        if (degree && *degree != *d) throw PreconditionError("map components have different degrees");
        degree = d;
    }
    if (!degree) throw PreconditionError("map with three zero components");
    return make(*degree, std::move(components), reduced);
}

MapTriple MapTriple::make(int degree, std::array<HPoly, 3> components, bool reduced) {
    bool any = false;
    for (const auto& c : components) {
        if (c.is_zero()) continue;
        any = true;
        if (c.homogeneous_degree() != degree)
            throw PreconditionError("map component " + to_string(c) + " is not of degree " + std::to_string(degree));
    }
    if (!any) throw PreconditionError("map with three zero components");
    MapTriple m;
    m.degree = degree;
    m.components = std::move(components);
    m.reduced = reduced;
    return m;
}

ProjPoint ProjPoint::make(std::array<Poly, 3> coords) {
    bool any = false;
    for (const auto& c : coords) {
        if (c.depends_on_xyz()) throw PreconditionError("point coordinates may only involve t");
        any = any || !c.is_zero();
    }
    if (!any) throw PreconditionError("point [0:0:0]");
    return ProjPoint{std::move(coords)};
}

ProjPoint ProjPoint::of(long a, long b, long c) { return make({Poly(a), Poly(b), Poly(c)}); }

bool ProjPoint::is_constant() const {
    for (const auto& c : coords)
        if (!c.is_constant()) return false;
    return true;
}

bool projectively_equal(const ProjPoint& p, const ProjPoint& q) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!(p.coords[i] * q.coords[j] == p.coords[j] * q.coords[i])) return false;
    return true;
}

bool projectively_equal(const MapTriple& f, const MapTriple& g) {
    if (f.degree != g.degree) return false;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!(f[i] * g[j] == f[j] * g[i])) return false;
    return true;
}

HPoly canonical(const HPoly& p) {
    if (p.is_zero()) return p;
    mpq_class scale = 1 / p.rational_content();
    if (leading_sign(p) < 0) scale = -scale;
    return p * scale;
}

MapTriple canonical(const MapTriple& f) {
    mpz_class num = 0, den = 1;
    for (const auto& c : f.components) {
        if (c.is_zero()) continue;
        const mpq_class q = c.rational_content();
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    }
    mpq_class scale(den, num);
    scale.canonicalize();
    for (const auto& c : f.components)
        if (!c.is_zero()) {
            if (leading_sign(c) < 0) scale = -scale;
            break;
        }
    MapTriple out = f;
    for (auto& c : out.components) c *= scale;
    return out;
}

MapTriple identity_map() { return MapTriple::make(1, {x_(), y_(), z_()}, true); }

MapTriple standard_sigma() { return MapTriple::make(2, {y_() * z_(), x_() * z_(), x_() * y_()}, true); }

MapTriple compose(const MapTriple& f, const MapTriple& g) {
    std::array<HPoly, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = f[i].substitute_xyz(g.components);
    return MapTriple::make(f.degree * g.degree, std::move(out), false);
}

std::pair<MapTriple, HPoly> primitive_part(const MapTriple& f) {
    Poly h;
    for (const auto& c : f.components) h = gcd(h, c);
    std::array<HPoly, 3> reduced;
    for (int i = 0; i < 3; ++i) reduced[i] = *divide_exact(f[i], h);
    const int hd = h.homogeneous_degree().value_or(0);
    return {MapTriple::make(f.degree - hd, std::move(reduced), true), h};
}

HPoly jacobian(const MapTriple& f) {
    std::array<std::array<Poly, 3>, 3> m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = f[i].derivative(static_cast<Var>(j));
    const Poly det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return canonical(det);
}

bool divides(const HPoly& h, const HPoly& p) {
    if (h.is_zero()) throw PreconditionError("divisibility by the zero polynomial");
    if (p.is_zero()) return true;
    // Over Q(t) only the part of h involving x, y, z matters; once the
    // t-content is removed, divisibility over Q[t] is the same thing.
    const Poly primitive = *divide_exact(h, t_content(h));
    return divide_exact(p, primitive).has_value();
}

bool is_contracted(const MapTriple& f, const HPoly& h, const ProjPoint& q) {
    if (h.is_zero() || !h.homogeneous_degree()) throw PreconditionError("contracted curve must be nonzero and homogeneous");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!divides(h, q.coords[i] * f[j] - q.coords[j] * f[i])) return false;
    return true;
}

int multiplicity_at(const MapTriple& f, const ProjPoint& p) {
    require_constant(p, "multiplicity_at");
    std::array<mpq_class, 3> v;
    for (int i = 0; i < 3; ++i) v[i] = p.coords[i].is_zero() ? mpq_class(0) : p.coords[i].leading_coefficient();
    int chart = 0;
    while (v[chart] == 0) ++chart;

    // Affine chart {var_chart = 1}, centred at p.
    std::array<Poly, 3> images;
    for (int i = 0; i < 3; ++i)
        images[i] = i == chart ? Poly(1) : Poly::var(static_cast<Var>(i)) + Poly(mpq_class(v[i] / v[chart]));

    int order = -1;
    for (const auto& c : f.components) {
        if (c.is_zero()) continue;
        const Poly local = c.substitute_xyz(images);
        int low = -1;
        for (const auto& [e, coeff] : local.terms()) {
            const int s = e[X] + e[Y] + e[Z];
            if (low < 0 || s < low) low = s;
        }
        if (order < 0 || low < order) order = low;
    }
    return order;
}

bool verify_jacobian_factorization(const MapTriple& f, const std::vector<std::pair<HPoly, ProjPoint>>& factors) {
    Poly product(1);
    for (const auto& [h, q] : factors) product *= h;
    if (!(canonical(product) == jacobian(f))) return false;
    for (const auto& [h, q] : factors)
        if (!is_contracted(f, h, q)) return false;
    return true;
}

bool is_inverse_pair(const MapTriple& f, const MapTriple& g) {
    const MapTriple gf = compose(g, f);
    const std::array<Poly, 3> vars{x_(), y_(), z_()};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!(gf[i] * vars[j] == gf[j] * vars[i])) return false;
    return true;
}

MapTriple substitute_t(const MapTriple& f, const mpq_class& t0) {
    std::array<HPoly, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = f[i].substitute(T, Poly(t0));
    return MapTriple::make(f.degree, std::move(out), false);
}

ProjPoint substitute_t(const ProjPoint& p, const mpq_class& t0) {
    std::array<Poly, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = p.coords[i].substitute(T, Poly(t0));
    return ProjPoint::make(std::move(out));
}

std::vector<std::pair<HPoly, int>> linear_factors(const HPoly& p, int box) {
    std::vector<std::pair<HPoly, int>> out;
    if (p.is_zero()) return out;
    for (int a = 0; a <= box; ++a)
        for (int b = a == 0 ? 0 : -box; b <= box; ++b)
            for (int c = (a == 0 && b == 0) ? 1 : -box; c <= box; ++c) {
                if (std::gcd(std::gcd(a, b), c) != 1) continue;
                if (a == 0 && b < 0) continue;
                const Poly form = linear_form({Poly(a), Poly(b), Poly(c)});
                int mult = 0;
                Poly rest = p;
                while (auto q = divide_exact(rest, form)) {
                    rest = *q;
                    ++mult;
                }
                if (mult > 0) out.emplace_back(form, mult);
            }
    return out;
}

std::optional<ProjPoint> apply(const MapTriple& f, const ProjPoint& p) {
    std::array<Poly, 3> image;
    bool any = false;
    for (int i = 0; i < 3; ++i) {
        image[i] = f[i].substitute_xyz(p.coords);
        any = any || !image[i].is_zero();
    }
    if (!any) return std::nullopt;
    return ProjPoint::make(std::move(image));
}

MapTriple linear_inverse(const MapTriple& f) {
    if (f.degree != 1) throw PreconditionError("linear_inverse needs a degree 1 map");
    std::array<std::array<Poly, 3>, 3> m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = linear_coefficient(f[i], static_cast<Var>(j));
    auto cof = [&](int r, int c) {
        const int r0 = (r + 1) % 3, r1 = (r + 2) % 3, c0 = (c + 1) % 3, c1 = (c + 2) % 3;
        return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    };
    const Poly det = m[0][0] * cof(0, 0) + m[0][1] * cof(0, 1) + m[0][2] * cof(0, 2);
    if (det.is_zero()) throw PreconditionError("linear map is not invertible");
    std::array<HPoly, 3> inv;
    for (int i = 0; i < 3; ++i) inv[i] = linear_form({cof(0, i), cof(1, i), cof(2, i)});
    return MapTriple::make(1, std::move(inv), true);
}

// ---------------------------------------------------------------------------
// Families

MapTriple kappa_family() {
    const Poly t = t_();
    const Poly a = t * y_() - z_(), b = t * x_() - z_();
    return MapTriple::make(2, {a * x_(), b * y_(), b * a}, true);
}

MapTriple kappa_infnear_family() {
    return MapTriple::make(2, {-(x_() * z_()) + t_() * y_().pow(2), y_() * z_(), z_().pow(2)}, true);
}

MapTriple quartic_rho_family() {
    const Poly l = y_() * t_() + z_();
    return MapTriple::make(2, {x_() * l, y_() * z_(), -(z_() * l)}, true);
}

MapTriple quartic_tau_family(const mpq_class& a) {
    const Poly at = Poly(a) + t_();
    return MapTriple::make(1, {at * y_() + z_(), Poly(mpq_class(a - 1)) * y_(), Poly(a) * x_() - at * y_()}, true);
}

MapTriple quartic_collinear_family(const mpq_class& a) {
    if (a == 0 || a == 1) throw DomainError("quartic_collinear_family needs a not in {0, 1}");
    const MapTriple rho = quartic_rho_family(), tau = quartic_tau_family(a), kappa = kappa_family();
    const MapTriple rho0 = reduced_of(substitute_t(rho, 0));
    const MapTriple tau0_inv = linear_inverse(substitute_t(tau, 0));
    const MapTriple kappa0 = reduced_of(substitute_t(kappa, 0));
    const MapTriple linear = compose(rho0, compose(tau0_inv, kappa0));
    const MapTriple moving = compose(kappa, compose(tau, rho));
    return primitive_part(compose(linear, moving)).first;
}

MapTriple sigma1() {
    return MapTriple::make(2, {(x_() - y_()) * (x_() - z_()), y_() * (z_() - x_()), z_() * (y_() - x_())}, true);
}

MapTriple sigma2_family() {
    const Poly t = t_();
    const Poly xzt = x_() - z_() * t;
    return MapTriple::make(2, {y_() * (t * x_() + z_() * (Poly(1) - t * t)), z_() * xzt, y_() * xzt}, true);
}

MapTriple sigma2_sigma1_family() {
    const Poly t = t_();
    const Poly xz = x_() - z_();
    const Poly l = x_() + z_() * (t - Poly(1));
    return MapTriple::make(
        3, {xz * y_() * (t * x_() + z_() * (t * t - t - Poly(1))), (x_() - y_()) * l * z_(), xz * y_() * l}, true);
}

std::pair<MapTriple, MapTriple> cubic_example_pair() {
    const Poly x = x_(), y = y_(), z = z_();
    const Poly two_y_z = Poly(2) * y - z, three_y_z = Poly(3) * y - z;
    const MapTriple f = MapTriple::make(3, {(x + y - z) * y * three_y_z, two_y_z * x * three_y_z, two_y_z * x * y}, true);
    const Poly q = x * y - x * z - y * z;
    // The last component is q(3z - y); with q(y - 3z) instead, g o f is
    // [x : y : -z] rather than the identity.
    const MapTriple g = MapTriple::make(3, {(y - Poly(2) * z) * y * z, q * z, q * (Poly(3) * z - y)}, true);
    return {f, g};
}

MapTriple kappa_tilde_family() {
    const Poly x = x_(), y = y_(), z = z_(), t = t_();
    return MapTriple::make(
        2, {t * (x * x - y * y) - x * z, -(y * z), (t * (x + y) - z) * (t * (x - y) - z)}, true);
}

MapTriple pair_degeneration(const MapTriple& gamma, const ProjPoint& p1, const ProjPoint& p2) {
    require_constant(p1, "pair_degeneration");
    require_constant(p2, "pair_degeneration");
    if (projectively_equal(p1, p2)) throw PreconditionError("pair_degeneration needs two distinct points");
    const int d = gamma.degree;
    const int m1 = multiplicity_at(gamma, p1), m2 = multiplicity_at(gamma, p2);
    if (m1 + m2 >= d)
        throw PreconditionError("pair_degeneration needs m1 + m2 < d (got " + std::to_string(m1) + " + " +
                                std::to_string(m2) + " with d = " + std::to_string(d) + ")");

    // A = [p1 | c p2 | q]; the scale c keeps A[1:1:0], the limit of the
    // third base-point, off the base locus of gamma.
    const std::array<ProjPoint, 3> units{ProjPoint::of(1, 0, 0), ProjPoint::of(0, 1, 0), ProjPoint::of(0, 0, 1)};
    for (long c = 1; c <= 64; ++c) {
        for (const auto& q : units) {
            std::array<Poly, 3> rows;
            for (int i = 0; i < 3; ++i)
                rows[i] = linear_form({p1.coords[i], p2.coords[i] * mpq_class(c), q.coords[i]});
            const MapTriple a = MapTriple::make(1, rows, true);
            MapTriple a_inv;
            try {
                a_inv = linear_inverse(a);
            } catch (const PreconditionError&) {
                continue;
            }
            std::array<Poly, 3> mid;
            for (int i = 0; i < 3; ++i) mid[i] = p1.coords[i] + p2.coords[i] * mpq_class(c);
            if (multiplicity_at(gamma, ProjPoint::make(mid)) != 0) break;

            const MapTriple kappa = kappa_family();
            const MapTriple kappa0 = reduced_of(substitute_t(kappa, 0));
            const MapTriple chain = compose(gamma, compose(a, compose(kappa0, compose(kappa, a_inv))));
            return primitive_part(chain).first;
        }
    }
    throw PreconditionError("pair_degeneration could not place the third base-point");
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::vector<std::string> bracket_fields(const std::string& text, const char* what) {
    const auto open = text.find('[');
    const auto close = text.rfind(']');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw ParseError(std::string(what) + " must be written as [a : b : c]: '" + text + "'");
    for (std::size_t i = 0; i < text.size(); ++i)
        if ((i < open || i > close) && !std::isspace(static_cast<unsigned char>(text[i])))
            throw ParseError(std::string("stray text around ") + what + ": '" + text + "'");
    std::vector<std::string> fields;
    std::string cur;
    for (std::size_t i = open + 1; i < close; ++i) {
        if (text[i] == ':') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += text[i];
        }
    }
    fields.push_back(cur);
    if (fields.size() != 3) throw ParseError(std::string(what) + " needs exactly three entries: '" + text + "'");
    return fields;
}

}  // namespace

MapTriple parse_map(const std::string& text) {
    const auto fields = bracket_fields(text, "map");
    std::array<HPoly, 3> comps;
    for (int i = 0; i < 3; ++i) comps[i] = parse_poly(fields[i]);
    try {
        return MapTriple::make(std::move(comps));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

ProjPoint parse_point(const std::string& text) {
    const auto fields = bracket_fields(text, "point");
    std::array<Poly, 3> coords;
    for (int i = 0; i < 3; ++i) coords[i] = parse_poly(fields[i]);
    try {
        return ProjPoint::make(std::move(coords));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

std::string to_string(const MapTriple& f) {
    return "[" + to_string(f[0]) + " : " + to_string(f[1]) + " : " + to_string(f[2]) + "]";
}

std::string to_string(const ProjPoint& p) {
    return "[" + to_string(p.coords[0]) + " : " + to_string(p.coords[1]) + " : " + to_string(p.coords[2]) + "]";
}

}  // namespace cremona
