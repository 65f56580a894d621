#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

// Sparse polynomials with rational coefficients in x, y, z and the family
// parameter t. Terms are kept in lexicographic order x > y > z > t,
// largest first.
namespace cremona {

enum Var : int { X = 0, Y = 1, Z = 2, T = 3 };
inline constexpr int kNumVars = 4;

using Exponent = std::array<int, kNumVars>;

struct ExponentGreater {
    bool operator()(const Exponent& a, const Exponent& b) const { return a > b; }
};

class Poly {
public:
    using Terms = std::map<Exponent, mpq_class, ExponentGreater>;

    Poly() = default;
    Poly(long c);  // NOLINT: constants convert implicitly
    Poly(const mpq_class& c);  // NOLINT

    static Poly var(Var v, int power = 1);
    static Poly monomial(const Exponent& e, const mpq_class& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t size() const { return terms_.size(); }

    /// Largest exponent of v; -1 for the zero polynomial.
    int degree_in(Var v) const;
    /// Largest x+y+z exponent sum; -1 for zero.
    int xyz_degree() const;
    /// The common x+y+z degree when every term agrees (zero -> nullopt).
    std::optional<int> homogeneous_degree() const;
    bool depends_on_xyz() const { return xyz_degree() > 0; }

    const Exponent& leading_exponent() const;
    const mpq_class& leading_coefficient() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const mpq_class& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const mpq_class& c) { return a *= c; }
    Poly operator-() const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly pow(int n) const;
    Poly derivative(Var v) const;

    /// Replace v by q everywhere.
    Poly substitute(Var v, const Poly& q) const;
    /// Replace x, y, z simultaneously (t is kept).
    Poly substitute_xyz(const std::array<Poly, 3>& images) const;
    /// Rational value when every variable is given a value.
    mpq_class evaluate(const std::array<mpq_class, kNumVars>& point) const;

    /// Coefficients of v^0, v^1, ... as polynomials free of v.
    std::vector<Poly> coefficients_in(Var v) const;
    /// Coefficients of each x^i y^j z^k as polynomials in t alone.
    std::map<Exponent, Poly, ExponentGreater> xyz_coefficients() const;

    /// Positive rational c with this/c having coprime integer coefficients.
    mpq_class rational_content() const;
    /// Integer coefficients with gcd 1 and positive leading coefficient.
    Poly normalized() const;

private:
    void add_term(const Exponent& e, const mpq_class& c);
    Terms terms_;
};

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Greatest common divisor, normalized (gcd(0, 0) = 0).
Poly gcd(const Poly& a, const Poly& b);

/// gcd of the t-polynomial coefficients of p viewed in x, y, z.
Poly t_content(const Poly& p);

/// Human form, e.g. "t*x^2 - 3/2*y*z". Terms in graded lex order on
/// (x, y, z), then by descending power of t.
std::string to_string(const Poly& p);

/// Parses an expression in x, y, z, t with integer or rational numbers,
/// + - * ^ and parentheses; '*' may be omitted. Division only by numbers.
Poly parse_poly(const std::string& text);

}  // namespace cremona
