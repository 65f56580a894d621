#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cremona/poly.hpp"

// Rational maps of the plane given by three homogeneous polynomials in
// x, y, z whose coefficients may depend polynomially on t.
namespace cremona {

using HPoly = Poly;

struct MapTriple {
    int degree = 0;
    std::array<HPoly, 3> components;
    bool reduced = false;

    /// Validates equal degrees and a nonzero component.
    static MapTriple make(std::array<HPoly, 3> components, bool reduced = false);
    /// make() with the degree given explicitly (needed when components vanish).
    static MapTriple make(int degree, std::array<HPoly, 3> components, bool reduced = false);

    const HPoly& operator[](std::size_t i) const { return components[i]; }
};

struct ProjPoint {
    std::array<Poly, 3> coords;  // polynomials in t only

    static ProjPoint make(std::array<Poly, 3> coords);
    static ProjPoint of(long a, long b, long c);
    bool is_constant() const;
};

bool projectively_equal(const ProjPoint& p, const ProjPoint& q);
/// Components proportional over Q(t).
bool projectively_equal(const MapTriple& f, const MapTriple& g);

/// Scalar representative: integer coefficients with gcd 1, sign fixed by
/// the leading coefficient (see canonical_sign_positive).
MapTriple canonical(const MapTriple& f);
HPoly canonical(const HPoly& p);

MapTriple identity_map();
/// [yz : xz : xy]
MapTriple standard_sigma();

/// f o g by substitution; degree deg f * deg g, never reduced.
MapTriple compose(const MapTriple& f, const MapTriple& g);

/// (f / h, h) with h the normalized gcd of the components.
std::pair<MapTriple, HPoly> primitive_part(const MapTriple& f);

/// Determinant of the partial derivatives, scaled to canonical form.
HPoly jacobian(const MapTriple& f);

/// h | P over Q(t)[x, y, z].
bool divides(const HPoly& h, const HPoly& p);

/// q_i f_j - q_j f_i divisible by h for all i, j.
bool is_contracted(const MapTriple& f, const HPoly& h, const ProjPoint& q);

/// Multiplicity of the generic member of the linear system at a point with
/// constant coordinates: min over components of the vanishing order.
int multiplicity_at(const MapTriple& f, const ProjPoint& p);

/// Product of the factors equals J(f) up to a scalar and each factor is
/// contracted onto its point.
bool verify_jacobian_factorization(const MapTriple& f, const std::vector<std::pair<HPoly, ProjPoint>>& factors);

/// g o f = [x h : y h : z h], checked by g_i(f) x_j = g_j(f) x_i.
bool is_inverse_pair(const MapTriple& f, const MapTriple& g);

MapTriple substitute_t(const MapTriple& f, const mpq_class& t0);
ProjPoint substitute_t(const ProjPoint& p, const mpq_class& t0);

/// Linear forms ax + by + cz with |a|,|b|,|c| <= box dividing p, each with
/// its multiplicity. Forms are primitive with first nonzero entry positive.
std::vector<std::pair<HPoly, int>> linear_factors(const HPoly& p, int box = 20);

/// Image of a point with constant coordinates (all components vanish -> nullopt).
std::optional<ProjPoint> apply(const MapTriple& f, const ProjPoint& p);

// ---------------------------------------------------------------------------
// Families

/// [(ty - z)x : (tx - z)y : (tx - z)(ty - z)]
MapTriple kappa_family();
/// [-xz + ty^2 : yz : z^2]
MapTriple kappa_infnear_family();
/// The degree 4 family nu(t) through [0:0:1], [1:1:1], [1:1:a] (simple) and
/// [0:1:0], [1:0:0] (double); reduced. a must avoid {0, 1}.
MapTriple quartic_collinear_family(const mpq_class& a);
/// Pieces of the quartic construction: kappa, rho, tau (all in t).
MapTriple quartic_rho_family();
MapTriple quartic_tau_family(const mpq_class& a);
/// [(x - y)(x - z) : y(z - x) : z(y - x)]
MapTriple sigma1();
/// [y(tx + z(1 - t^2)) : z(x - zt) : y(x - zt)]
MapTriple sigma2_family();
/// The reduced cubic sigma2(t) o sigma1 as displayed.
MapTriple sigma2_sigma1_family();
/// Inverse cubic pair (f, g) of type (3; 2, 1^4).
std::pair<MapTriple, MapTriple> cubic_example_pair();
/// [t(x^2 - y^2) - xz : -yz : (t(x + y) - z)(t(x - y) - z)]
MapTriple kappa_tilde_family();

/// rho(t) = gamma o A o kappa(0) o kappa(t) o A^-1 where A sends [1:0:0],
/// [0:1:0] to p1, p2. Requires distinct constant points with
/// m1 + m2 < deg gamma; the result is reduced with rho(0) = gamma and
/// generic degree 2d - m1 - m2.
MapTriple pair_degeneration(const MapTriple& gamma, const ProjPoint& p1, const ProjPoint& p2);

/// Adjugate of an invertible linear map (its inverse up to scalar).
MapTriple linear_inverse(const MapTriple& f);

// ---------------------------------------------------------------------------
// Text form: "[f0 : f1 : f2]" and points "[a : b : c]".

MapTriple parse_map(const std::string& text);
ProjPoint parse_point(const std::string& text);
std::string to_string(const MapTriple& f);
std::string to_string(const ProjPoint& p);

}  // namespace cremona
