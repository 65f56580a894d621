#include "cremona/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "cremona/errors.hpp"

namespace cremona {

namespace {

constexpr const char* kVarNames[kNumVars] = {"x", "y", "z", "t"};

Exponent add_exp(const Exponent& a, const Exponent& b) {
    Exponent e{};
    for (int i = 0; i < kNumVars; ++i) e[i] = a[i] + b[i];
    return e;
}

bool divides(const Exponent& a, const Exponent& b) {
    for (int i = 0; i < kNumVars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

int xyz_sum(const Exponent& e) { return e[X] + e[Y] + e[Z]; }

}  // namespace

Poly::Poly(long c) {
    if (c != 0) terms_.emplace(Exponent{}, mpq_class(c));
}

Poly::Poly(const mpq_class& c) {
    if (c != 0) terms_.emplace(Exponent{}, c);
}

Poly Poly::var(Var v, int power) {
    Exponent e{};
    e[v] = power;
    return monomial(e, 1);
}

Poly Poly::monomial(const Exponent& e, const mpq_class& c) {
    Poly p;
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

void Poly::add_term(const Exponent& e, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{}); }

int Poly::degree_in(Var v) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
}

int Poly::xyz_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, xyz_sum(e));
    return d;
}

std::optional<int> Poly::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = xyz_sum(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (xyz_sum(e) != d) return std::nullopt;
    return d;
}

const Exponent& Poly::leading_exponent() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const mpq_class& Poly::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.begin()->second;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(add_exp(ea, eb), ca * cb);
    return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, v] : r.terms_) v = -v;
    return r;
}

Poly Poly::pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative power");
    Poly result(1), base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

Poly Poly::derivative(Var v) const {
    Poly r;
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Exponent f = e;
        --f[v];
        r.add_term(f, c * e[v]);
    }
    return r;
}

Poly Poly::substitute(Var v, const Poly& q) const {
    std::vector<Poly> powers{Poly(1)};
    Poly r;
    for (const auto& [e, c] : terms_) {
        while (static_cast<int>(powers.size()) <= e[v]) powers.push_back(powers.back() * q);
        Exponent rest = e;
        rest[v] = 0;
        r += powers[e[v]] * monomial(rest, c);
    }
    return r;
}

Poly Poly::substitute_xyz(const std::array<Poly, 3>& images) const {
    std::array<std::vector<Poly>, 3> powers;
    for (auto& p : powers) p.push_back(Poly(1));
    Poly r;
    for (const auto& [e, c] : terms_) {
        Exponent te{};
        te[T] = e[T];
        Poly term = monomial(te, c);
        for (int i = 0; i < 3; ++i) {
            while (static_cast<int>(powers[i].size()) <= e[i]) powers[i].push_back(powers[i].back() * images[i]);
            term *= powers[i][e[i]];
        }
        r += term;
    }
    return r;
}

mpq_class Poly::evaluate(const std::array<mpq_class, kNumVars>& point) const {
    mpq_class total = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class term = c;
        for (int i = 0; i < kNumVars; ++i)
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        total += term;
    }
    return total;
}

std::vector<Poly> Poly::coefficients_in(Var v) const {
    std::vector<Poly> out(static_cast<std::size_t>(std::max(degree_in(v) + 1, 0)));
    for (const auto& [e, c] : terms_) {
        Exponent rest = e;
        rest[v] = 0;
        out[e[v]].add_term(rest, c);
    }
    return out;
}

std::map<Exponent, Poly, ExponentGreater> Poly::xyz_coefficients() const {
    std::map<Exponent, Poly, ExponentGreater> out;
    for (const auto& [e, c] : terms_) {
        Exponent m = e, te{};
        m[T] = 0;
        te[T] = e[T];
        out[m].add_term(te, c);
    }
    return out;
}

mpq_class Poly::rational_content() const {
    if (terms_.empty()) return 0;
    mpz_class num = 0, den = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

Poly Poly::normalized() const {
    if (terms_.empty()) return *this;
    mpq_class scale = 1 / rational_content();
    if (leading_coefficient() < 0) scale = -scale;
    return *this * scale;
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    const Exponent& lb = b.leading_exponent();
    const mpq_class& cb = b.leading_coefficient();
    Poly q, r = a;
    while (!r.is_zero()) {
        const Exponent lr = r.leading_exponent();
        if (!divides(lb, lr)) return std::nullopt;
        Exponent e{};
        for (int i = 0; i < kNumVars; ++i) e[i] = lr[i] - lb[i];
        const Poly step = Poly::monomial(e, r.leading_coefficient() / cb);
        q += step;
        r -= step * b;
    }
    return q;
}

namespace {

// Smallest-index variable present in a or b; -1 if both are constants.
int main_variable(const Poly& a, const Poly& b) {
    for (int v = 0; v < kNumVars; ++v)
        if (a.degree_in(static_cast<Var>(v)) > 0 || b.degree_in(static_cast<Var>(v)) > 0) return v;
    return -1;
}

Poly content_in(const Poly& p, Var v) {
    Poly c;
    for (const auto& coeff : p.coefficients_in(v)) {
        if (coeff.is_zero()) continue;
        c = gcd(c, coeff);
        if (c.is_constant()) break;
    }
    return c;
}

Poly primitive_in(const Poly& p, Var v) {
    if (p.is_zero()) return p;
    return *divide_exact(p, content_in(p, v));
}

Poly pseudo_remainder(Poly r, const Poly& q, Var v) {
    const int dq = q.degree_in(v);
    const Poly lq = q.coefficients_in(v).back();
    while (!r.is_zero() && r.degree_in(v) >= dq) {
        const int dr = r.degree_in(v);
        const Poly lr = r.coefficients_in(v).back();
        r = lq * r - lr * Poly::var(v, dr - dq) * q;
    }
    return r;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    const int mv = main_variable(a, b);
    if (mv < 0) return Poly(1);
    const Var v = static_cast<Var>(mv);

    const Poly ca = content_in(a, v), cb = content_in(b, v);
    const Poly c = gcd(ca, cb);
    Poly p = *divide_exact(a, ca), q = *divide_exact(b, cb);
    if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);

    // Primitive remainder sequence.
    while (!q.is_zero()) {
        if (q.degree_in(v) == 0) {
            p = Poly(1);
            break;
        }
        Poly r = pseudo_remainder(p, q, v);
        p = std::move(q);
        q = primitive_in(r, v);
    }
    return (c * primitive_in(p, v)).normalized();
}

Poly t_content(const Poly& p) {
    Poly c;
    for (const auto& [m, coeff] : p.xyz_coefficients()) {
        c = gcd(c, coeff);
        if (c.is_constant()) break;
    }
    return c;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

bool graded_before(const Exponent& a, const Exponent& b) {
    const int da = xyz_sum(a), db = xyz_sum(b);
    if (da != db) return da > db;
    for (int i = 0; i < kNumVars; ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

}  // namespace

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Exponent, mpq_class>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return graded_before(a.first, b.first); });

    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        mpq_class mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;

        std::vector<std::string> factors;
        for (int v : {T, X, Y, Z}) {
            if (e[v] == 0) continue;
            factors.push_back(e[v] == 1 ? kVarNames[v] : std::string(kVarNames[v]) + "^" + std::to_string(e[v]));
        }
        if (factors.empty() || mag != 1) factors.insert(factors.begin(), mag.get_str());
        for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? "*" : "") << factors[i];
    }
    return out.str();
}

namespace {

class PolyParser {
public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    Poly parse_all() {
        Poly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("polynomial '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
    }

    Poly expr() {
        Poly p;
        char c = peek();
        if (c == '+' || c == '-') {
            ++pos_;
            p = c == '-' ? -term() : term();
        } else {
            p = term();
        }
        for (c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            if (c == '+')
                p += term();
            else
                p -= term();
        }
        return p;
    }

    bool starts_factor(char c) {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'x' || c == 'y' || c == 'z' || c == 't';
    }

    Poly term() {
        Poly p = factor();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                p *= factor();
            } else if (c == '/') {
                ++pos_;
                const mpz_class n = integer();
                if (n == 0) fail("division by zero");
                p *= mpq_class(1, n);
            } else if (starts_factor(c)) {
                p *= factor();
            } else {
                return p;
            }
        }
    }

    Poly factor() {
        if (peek() == '-') {
            ++pos_;
            return -factor();
        }
        Poly base = primary();
        if (peek() == '^') {
            ++pos_;
            const mpz_class n = integer();
            if (n > 1000) fail("exponent too large");
            base = base.pow(static_cast<int>(n.get_si()));
        }
        return base;
    }

    mpz_class integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return mpz_class(s_.substr(start, pos_ - start));
    }

    Poly primary() {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return Poly(mpq_class(integer()));
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        for (int v = 0; v < kNumVars; ++v)
            if (c == kVarNames[v][0]) {
                ++pos_;
                return Poly::var(static_cast<Var>(v));
            }
        fail(c ? "unexpected '" + std::string(1, c) + "'" : std::string("unexpected end"));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text) { return PolyParser(text).parse_all(); }

}  // namespace cremona
