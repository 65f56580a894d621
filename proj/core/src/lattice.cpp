#include "cremona/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

namespace cremona {

namespace {

Int sum_of(std::span<const Int> xs) {
    Int s = 0;
    for (Int x : xs) s = checked::add(s, x);
    return s;
}

Int sum_of_squares(std::span<const Int> xs) {
    Int s = 0;
    for (Int x : xs) s = checked::add(s, checked::square(x));
    return s;
}

// Stable descending order of the entries at indices 1..n-1.
Permutation sorting_permutation(std::span<const Int> v) {
    Permutation p;
    p.source.resize(v.size());
    std::iota(p.source.begin(), p.source.end(), std::size_t{0});
    std::stable_sort(p.source.begin() + 1, p.source.end(),
                     [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
    return p;
}

bool is_identity_permutation(const Permutation& p) {
    for (std::size_t i = 0; i < p.source.size(); ++i)
        if (p.source[i] != i) return false;
    return true;
}

void apply_step_in_place(const WeylStep& step, std::vector<Int>& v) {
    if (std::holds_alternative<Sigma0>(step)) {
        const Int eps = checked::sub(checked::add(checked::add(v[1], v[2]), v[3]), v[0]);
        for (std::size_t i = 0; i < 4; ++i) v[i] = checked::sub(v[i], eps);
        return;
    }
    const auto& src = std::get<Permutation>(step).source;
    std::vector<Int> out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[j] = v[src[j]];
    v = std::move(out);
}

IntegerMatrix step_matrix(const WeylStep& step, std::size_t n) {
    if (std::holds_alternative<Sigma0>(step)) return sigma0_matrix(n);
    const auto& src = std::get<Permutation>(step).source;
    IntegerMatrix m(n);
    for (std::size_t j = 0; j < n; ++j) m(j, src[j]) = 1;
    return m;
}

bool has_invalid_entry(std::span<const Int> v) {
    if (v.empty() || v[0] < 1) return true;
    return std::any_of(v.begin() + 1, v.end(), [](Int m) { return m < 0; });
}

Int parse_int(std::string_view s, const std::string& context) {
    Int value = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (!s.empty() && s.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) throw OverflowError("integer out of range in '" + context + "'");
    if (ec != std::errc() || ptr != last || first == last)
        throw ParseError("bad integer '" + std::string(s) + "' in type literal '" + context + "'");
    return value;
}

}  // namespace

// ---------------------------------------------------------------------------
// LatticeVector

LatticeVector::LatticeVector(std::vector<Int> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

LatticeVector::LatticeVector(Int degree, std::span<const Int> mults) {
    coeffs_.reserve(mults.size() + 1);
    coeffs_.push_back(degree);
    coeffs_.insert(coeffs_.end(), mults.begin(), mults.end());
    trim();
}

LatticeVector LatticeVector::unit(std::size_t index) {
    std::vector<Int> c(index + 1, 0);
    c[index] = 1;
    return LatticeVector(std::move(c));
}

std::vector<Int> LatticeVector::padded(std::size_t n) const {
    if (n < coeffs_.size()) throw PreconditionError("padding below the support of a lattice vector");
    std::vector<Int> out(coeffs_);
    out.resize(n, 0);
    return out;
}

std::vector<Int> LatticeVector::mults() const {
    if (coeffs_.size() <= 1) return {};
    return {coeffs_.begin() + 1, coeffs_.end()};
}

bool LatticeVector::has_negative_multiplicity() const {
    return coeffs_.size() > 1 && std::any_of(coeffs_.begin() + 1, coeffs_.end(), [](Int m) { return m < 0; });
}

void LatticeVector::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool noether_check(Int degree, std::span<const Int> mults) {
    const Int linear = checked::mul(3, checked::sub(degree, 1));
    const Int quadratic = checked::sub(checked::square(degree), 1);
    return sum_of(mults) == linear && sum_of_squares(mults) == quadratic;
}

bool noether_check(const LatticeVector& v) {
    const auto m = v.mults();
    return noether_check(v.degree(), m);
}

// ---------------------------------------------------------------------------
// HomaloidalType

HomaloidalType HomaloidalType::make(Int degree, std::vector<Int> mults) {
    if (degree < 1) throw PreconditionError("homaloidal type needs degree >= 1");
    if (std::any_of(mults.begin(), mults.end(), [](Int m) { return m < 0; }))
        throw PreconditionError("homaloidal type with a negative multiplicity");
    std::erase(mults, Int{0});
    std::sort(mults.begin(), mults.end(), std::greater<>());
    if (!noether_check(degree, mults))
        throw PreconditionError("Noether equalities fail for " + to_literal(LatticeVector(degree, mults)));
    return HomaloidalType(degree, std::move(mults));
}

HomaloidalType HomaloidalType::from_lattice(const LatticeVector& v) { return make(v.degree(), v.mults()); }

// ---------------------------------------------------------------------------
// IntegerMatrix

IntegerMatrix::IntegerMatrix(std::size_t n, std::vector<Int> row_major) : n_(n), data_(std::move(row_major)) {
    if (data_.size() != n * n) throw PreconditionError("matrix data does not match dimension");
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::form(std::size_t n) {
    IntegerMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = i == 0 ? 1 : -1;
    return m;
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

LatticeVector IntegerMatrix::apply(const LatticeVector& v) const {
    if (v.size() > n_) throw PreconditionError("vector support exceeds matrix dimension");
    const auto x = v.padded(n_);
    std::vector<Int> y(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) y[i] = checked::fma(y[i], (*this)(i, j), x[j]);
    return LatticeVector(std::move(y));
}

std::vector<Int> IntegerMatrix::column(std::size_t col) const {
    std::vector<Int> c(n_);
    for (std::size_t i = 0; i < n_; ++i) c[i] = (*this)(i, col);
    return c;
}

bool IntegerMatrix::is_identity() const { return *this == identity(n_); }

bool IntegerMatrix::is_permutation() const {
    std::vector<int> col_hits(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
        int row_hits = 0;
        for (std::size_t j = 0; j < n_; ++j) {
            const Int x = (*this)(i, j);
            if (x == 0) continue;
            if (x != 1) return false;
            ++row_hits;
            ++col_hits[j];
        }
        if (row_hits != 1) return false;
    }
    return std::all_of(col_hits.begin(), col_hits.end(), [](int h) { return h == 1; });
}

IntegerMatrix IntegerMatrix::extended(std::size_t n) const {
    if (n < n_) throw PreconditionError("cannot shrink a matrix by extension");
    IntegerMatrix m = identity(n);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
    return m;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.n_ != b.n_) throw PreconditionError("matrix dimension mismatch");
    const std::size_t n = a.n_;
    IntegerMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Int aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) = checked::fma(c(i, j), aik, b(k, j));
        }
    return c;
}

IntegerMatrix flip_multiplicity_signs(const IntegerMatrix& m) {
    IntegerMatrix out = m;
    const std::size_t n = m.dimension();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((i == 0) != (j == 0)) out(i, j) = checked::neg(m(i, j));
    return out;
}

bool preserves_form(const IntegerMatrix& m) {
    const auto j = IntegerMatrix::form(m.dimension());
    return m.transposed() * j * m == j;
}

bool preserves_canonical_pairing(const IntegerMatrix& m) {
    // Row vector c = (3, -1, ..., -1); require c * M == c.
    const std::size_t n = m.dimension();
    for (std::size_t j = 0; j < n; ++j) {
        Int s = 0;
        for (std::size_t i = 0; i < n; ++i) s = checked::fma(s, i == 0 ? 3 : -1, m(i, j));
        if (s != (j == 0 ? 3 : -1)) return false;
    }
    return true;
}

namespace {

// Column-assignment search used by equal_up_to_point_permutations.
class PermutationMatcher {
public:
    PermutationMatcher(const IntegerMatrix& a, const IntegerMatrix& b)
        : a_(a), b_(b), n_(a.dimension()), assigned_(n_, n_), used_(n_, false) {
        for (std::size_t j = 0; j < n_; ++j) {
            signature_a_.push_back(signature(a_, j));
            signature_b_.push_back(signature(b_, j));
        }
    }

    bool run() {
        if (a_(0, 0) != b_(0, 0) || signature_a_[0] != signature_b_[0]) return false;
        assigned_[0] = 0;
        used_[0] = true;
        return assign(1);
    }

private:
    // Row-0 entry followed by the sorted remaining entries of a column.
    static std::vector<Int> signature(const IntegerMatrix& m, std::size_t col) {
        std::vector<Int> s;
        for (std::size_t i = 1; i < m.dimension(); ++i) s.push_back(m(i, col));
        std::sort(s.begin(), s.end());
        s.insert(s.begin(), m(0, col));
        return s;
    }

    bool assign(std::size_t col_b) {
        if (col_b == n_) return rows_match();
        std::vector<std::vector<Int>> tried;
        for (std::size_t col_a = 1; col_a < n_; ++col_a) {
            if (used_[col_a] || signature_a_[col_a] != signature_b_[col_b]) continue;
            auto full = a_.column(col_a);
            if (std::find(tried.begin(), tried.end(), full) != tried.end()) continue;
            tried.push_back(std::move(full));
            used_[col_a] = true;
            assigned_[col_b] = col_a;
            if (assign(col_b + 1)) return true;
            used_[col_a] = false;
        }
        return false;
    }

    bool rows_match() const {
        std::vector<std::vector<Int>> rows_a, rows_b;
        for (std::size_t i = 0; i < n_; ++i) {
            std::vector<Int> ra(n_), rb(n_);
            for (std::size_t j = 0; j < n_; ++j) {
                ra[j] = a_(i, assigned_[j]);
                rb[j] = b_(i, j);
            }
            if (i == 0) {
                if (ra != rb) return false;
                continue;
            }
            rows_a.push_back(std::move(ra));
            rows_b.push_back(std::move(rb));
        }
        std::sort(rows_a.begin(), rows_a.end());
        std::sort(rows_b.begin(), rows_b.end());
        return rows_a == rows_b;
    }

    const IntegerMatrix& a_;
    const IntegerMatrix& b_;
    std::size_t n_;
    std::vector<std::size_t> assigned_;
    std::vector<bool> used_;
    std::vector<std::vector<Int>> signature_a_, signature_b_;
};

}  // namespace

bool equal_up_to_point_permutations(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.dimension() != b.dimension()) return false;
    if (a.dimension() == 0) return true;
    return PermutationMatcher(a, b).run();
}

// ---------------------------------------------------------------------------
// sigma_0 and Weyl words

LatticeVector apply_sigma0(const LatticeVector& v) {
    auto c = v.padded(std::max<std::size_t>(v.size(), 4));
    apply_step_in_place(Sigma0{}, c);
    return LatticeVector(std::move(c));
}

IntegerMatrix sigma0_matrix(std::size_t n) {
    if (n < 4) throw PreconditionError("sigma_0 needs at least four coordinates");
    IntegerMatrix m = IntegerMatrix::identity(n);
    // d' = 2d - m1 - m2 - m3,  m_i' = d - (sum of the other two).
    const Int rows[4][4] = {{2, -1, -1, -1}, {1, 0, -1, -1}, {1, -1, 0, -1}, {1, -1, -1, 0}};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = rows[i][j];
    return m;
}

std::size_t WeylWord::sigma_count() const {
    return static_cast<std::size_t>(
        std::count_if(steps_.begin(), steps_.end(), [](const WeylStep& s) { return std::holds_alternative<Sigma0>(s); }));
}

void WeylWord::append(WeylStep step) {
    if (std::holds_alternative<Sigma0>(step)) {
        if (dimension_ < 4) throw PreconditionError("sigma_0 needs at least four coordinates");
    } else {
        const auto& src = std::get<Permutation>(step).source;
        if (src.size() != dimension_ || src.empty() || src[0] != 0)
            throw PreconditionError("permutation does not match word dimension or moves index 0");
        std::vector<bool> seen(dimension_, false);
        for (auto s : src) {
            if (s >= dimension_ || seen[s]) throw PreconditionError("not a permutation");
            seen[s] = true;
        }
    }
    steps_.push_back(std::move(step));
}

LatticeVector WeylWord::apply(const LatticeVector& v) const {
    auto c = v.padded(dimension_);
    for (const auto& step : steps_) apply_step_in_place(step, c);
    return LatticeVector(std::move(c));
}

IntegerMatrix WeylWord::matrix() const {
    IntegerMatrix m = IntegerMatrix::identity(dimension_);
    for (const auto& step : steps_) m = step_matrix(step, dimension_) * m;
    return m;
}

WeylWord WeylWord::inverse() const {
    WeylWord inv(dimension_);
    for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
        if (std::holds_alternative<Sigma0>(*it)) {
            inv.steps_.push_back(Sigma0{});
            continue;
        }
        const auto& src = std::get<Permutation>(*it).source;
        Permutation p;
        p.source.resize(src.size());
        for (std::size_t j = 0; j < src.size(); ++j) p.source[src[j]] = j;
        inv.steps_.push_back(std::move(p));
    }
    return inv;
}

// ---------------------------------------------------------------------------
// Hudson's test

HudsonResult hudson_test(const LatticeVector& v) {
    if (!noether_check(v)) throw PreconditionError("Hudson's test needs a vector satisfying the Noether equalities");

    const std::size_t n = std::max<std::size_t>(v.size(), 4);
    HudsonResult result;
    result.word = WeylWord(n);
    auto cur = v.padded(n);

    for (;;) {
        if (has_invalid_entry(cur)) {
            result.witness = LatticeVector(cur);
            return result;
        }
        auto order = sorting_permutation(cur);
        if (!is_identity_permutation(order)) {
            apply_step_in_place(order, cur);
            result.word.append(std::move(order));
        }
        result.trace.emplace_back(cur);

        if (cur[0] == 1) {
            // Noether with d = 1 forces every multiplicity to vanish.
            result.proper = true;
            return result;
        }
        // For d >= 2 and sorted non-negative multiplicities the Noether
        // equalities give m1 + m2 + m3 >= d + 1, so the degree drops.
        const Int eps = checked::sub(checked::add(checked::add(cur[1], cur[2]), cur[3]), cur[0]);
        if (eps < 1) throw std::logic_error("Noether inequality m1+m2+m3 >= d+1 violated during Hudson's test");
        apply_step_in_place(Sigma0{}, cur);
        result.word.append(Sigma0{});
    }
}

HudsonResult hudson_test(const HomaloidalType& t) { return hudson_test(t.to_lattice()); }

bool is_proper(const HomaloidalType& t) { return hudson_test(t).proper; }

// The word h found by Hudson's test satisfies h(v_T) = e0, so g = h^-1 is
// the element of W attached to T and the inverse map has type g^-1(e0) =
// h(e0). The word is only determined up to an element s of W fixing e0.
// Such an s preserves the intersection form and the canonical pairing, so
// it maps each e_i (i >= 1) to a vector x with x.x = -1 and K.x = -1 that
// is orthogonal to e0; the only such vectors are the e_j. Hence s permutes
// the e_i and h(e0) is well defined as a multiset.
HomaloidalType dual_type(const HomaloidalType& t) {
    const auto h = hudson_test(t);
    if (!h.proper) throw ImproperTypeError("dual of an improper type " + to_literal(t));
    return HomaloidalType::from_lattice(h.word.apply(LatticeVector::unit(0)));
}

IntegerMatrix characteristic_matrix(const HomaloidalType& t) {
    const auto h = hudson_test(t);
    if (!h.proper) throw ImproperTypeError("characteristic matrix of an improper type " + to_literal(t));
    const IntegerMatrix full = h.word.inverse().matrix();
    const std::size_t n = t.num_points() + 1;
    if (n >= full.dimension()) return full;
    IntegerMatrix m(n);
    for (std::size_t i = 0; i < full.dimension(); ++i)
        for (std::size_t j = 0; j < full.dimension(); ++j) {
            if (i < n && j < n) {
                m(i, j) = full(i, j);
            } else if (full(i, j) != (i == j ? 1 : 0)) {
                throw std::logic_error("characteristic matrix does not restrict to the type's support");
            }
        }
    return m;
}

bool in_weyl_group(const IntegerMatrix& m) {
    if (m.dimension() == 0) return false;
    const IntegerMatrix mm = m.extended(std::max<std::size_t>(m.dimension(), 4));
    const LatticeVector image_of_e0(mm.column(0));
    if (!noether_check(image_of_e0)) return false;
    const auto h = hudson_test(image_of_e0);
    if (!h.proper) return false;
    WeylWord word(mm.dimension());
    for (const auto& s : h.word.steps()) {
        if (const auto* p = std::get_if<Permutation>(&s)) {
            Permutation q = *p;
            for (std::size_t i = q.source.size(); i < mm.dimension(); ++i) q.source.push_back(i);
            word.append(std::move(q));
        } else {
            word.append(s);
        }
    }
    const IntegerMatrix residual = word.matrix() * mm;
    return residual.is_permutation() && residual(0, 0) == 1;
}

// ---------------------------------------------------------------------------
// Literals

LatticeVector parse_type_literal(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s.empty()) throw ParseError("empty type literal");

    const auto semi = s.find(';');
    const std::string degree_part = s.substr(0, semi);
    const std::string rest = semi == std::string::npos ? std::string() : s.substr(semi + 1);
    if (rest.find(';') != std::string::npos) throw ParseError("more than one ';' in type literal '" + text + "'");

    std::vector<Int> c{parse_int(degree_part, text)};
    if (!rest.empty()) {
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            const auto comma = rest.find(',', pos);
            const std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (item.empty()) throw ParseError("empty entry in type literal '" + text + "'");
            const auto caret = item.find('^');
            const Int value = parse_int(std::string_view(item).substr(0, caret), text);
            Int count = 1;
            if (caret != std::string::npos) {
                count = parse_int(std::string_view(item).substr(caret + 1), text);
                if (count < 1) throw ParseError("repeat count must be positive in '" + text + "'");
                if (count > 100000) throw ParseError("repeat count too large in '" + text + "'");
            }
            c.insert(c.end(), static_cast<std::size_t>(count), value);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    // Keep the position of interior zeros but drop trailing ones.
    return LatticeVector(std::move(c));
}

HomaloidalType parse_homaloidal_type(const std::string& text) {
    return HomaloidalType::from_lattice(parse_type_literal(text));
}

namespace {

std::string compressed(Int degree, std::span<const Int> mults) {
    std::ostringstream os;
    os << degree << ';';
    for (std::size_t i = 0; i < mults.size();) {
        std::size_t j = i;
        while (j < mults.size() && mults[j] == mults[i]) ++j;
        if (i > 0) os << ',';
        os << mults[i];
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

}  // namespace

std::string to_literal(const HomaloidalType& t) { return compressed(t.degree(), t.mults()); }

std::string to_literal(const LatticeVector& v) {
    const auto m = v.mults();
    return compressed(v.degree(), m);
}

std::ostream& operator<<(std::ostream& os, const HomaloidalType& t) { return os << '(' << to_literal(t) << ')'; }

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << '(' << to_literal(v) << ')'; }

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m) {
    std::size_t width = 1;
    for (std::size_t i = 0; i < m.dimension(); ++i)
        for (std::size_t j = 0; j < m.dimension(); ++j) width = std::max(width, std::to_string(m(i, j)).size());
    for (std::size_t i = 0; i < m.dimension(); ++i) {
        for (std::size_t j = 0; j < m.dimension(); ++j) os << (j ? " " : "") << std::setw(static_cast<int>(width)) << m(i, j);
        os << '\n';
    }
    return os;
}

}  // namespace cremona
