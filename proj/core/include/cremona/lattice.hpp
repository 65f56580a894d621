#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cremona/checked.hpp"

namespace cremona {

using checked::Int;

// Sign convention. A lattice element d*e0 - sum m_i*e_i is stored by its
// coordinates (d; m_1, ..., m_r), i.e. the multiplicities are stored as
// positive numbers. Matrices in this library act on these coordinates.
// They differ from matrices written in the basis (e_0, e_1, ...) by
// conjugation with diag(1, -1, ..., -1); see flip_multiplicity_signs().

/// Finitely supported integer vector; index 0 is the degree, index i >= 1
/// the multiplicity at the i-th point. Trailing zeros are trimmed.
class LatticeVector {
public:
    LatticeVector() = default;
    explicit LatticeVector(std::vector<Int> coefficients);
    LatticeVector(Int degree, std::span<const Int> mults);

    /// The unit vector e_i.
    static LatticeVector unit(std::size_t index);

    Int degree() const { return coeffs_.empty() ? 0 : coeffs_[0]; }
    /// Coefficient at `index`, zero outside the stored support.
    Int operator[](std::size_t index) const { return index < coeffs_.size() ? coeffs_[index] : 0; }
    std::size_t size() const { return coeffs_.size(); }
    std::span<const Int> coefficients() const { return coeffs_; }
    /// Coefficients 0..n-1, zero padded. n must cover the support.
    std::vector<Int> padded(std::size_t n) const;
    /// The multiplicities m_1, ..., m_r (index 1 onward).
    std::vector<Int> mults() const;

    bool has_negative_multiplicity() const;

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

private:
    void trim();
    std::vector<Int> coeffs_;
};

/// Sum m_i = 3(d-1) and sum m_i^2 = d^2 - 1. Overflow throws.
bool noether_check(Int degree, std::span<const Int> mults);
bool noether_check(const LatticeVector& v);

/// A degree with a multiset of positive multiplicities satisfying the
/// Noether equalities, kept sorted in descending order.
class HomaloidalType {
public:
    /// Validates and canonicalises: sorts, drops zeros, rejects negative
    /// entries, a degree below 1, or failing Noether equalities.
    static HomaloidalType make(Int degree, std::vector<Int> mults);
    static HomaloidalType from_lattice(const LatticeVector& v);

    Int degree() const { return degree_; }
    std::span<const Int> mults() const { return mults_; }
    std::size_t num_points() const { return mults_.size(); }
    LatticeVector to_lattice() const { return LatticeVector(degree_, mults_); }

    friend bool operator==(const HomaloidalType&, const HomaloidalType&) = default;
    /// Lexicographic on (degree, mults).
    friend auto operator<=>(const HomaloidalType&, const HomaloidalType&) = default;

private:
    HomaloidalType(Int degree, std::vector<Int> mults) : degree_(degree), mults_(std::move(mults)) {}
    Int degree_ = 1;
    std::vector<Int> mults_;
};

/// Square integer matrix with overflow-checked products.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    explicit IntegerMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
    IntegerMatrix(std::size_t n, std::vector<Int> row_major);

    static IntegerMatrix identity(std::size_t n);
    /// diag(1, -1, ..., -1), the intersection form.
    static IntegerMatrix form(std::size_t n);

    std::size_t dimension() const { return n_; }
    Int& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
    Int operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }

    IntegerMatrix transposed() const;
    LatticeVector apply(const LatticeVector& v) const;
    std::vector<Int> column(std::size_t col) const;
    bool is_identity() const;
    bool is_permutation() const;
    /// Embeds into a larger identity matrix (extra coordinates fixed).
    IntegerMatrix extended(std::size_t n) const;

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Int> data_;
};

/// Conjugation by diag(1, -1, ..., -1); converts between the coordinate
/// convention used here and the e_i basis. It is its own inverse.
IntegerMatrix flip_multiplicity_signs(const IntegerMatrix& m);

/// M^T J M == J.
bool preserves_form(const IntegerMatrix& m);
/// The functional (d; m) -> 3d - sum m_i is invariant under M.
bool preserves_canonical_pairing(const IntegerMatrix& m);

/// True if `a` can be turned into `b` by permuting the rows with index >= 1
/// and, independently, the columns with index >= 1.
bool equal_up_to_point_permutations(const IntegerMatrix& a, const IntegerMatrix& b);

/// The reflection sigma_0 acting on indices 1, 2, 3:
/// (d; m1, m2, m3, rest) -> (d - e; m1 - e, m2 - e, m3 - e, rest), e = m1 + m2 + m3 - d.
LatticeVector apply_sigma0(const LatticeVector& v);
/// Matrix of sigma_0 on n >= 4 coordinates.
IntegerMatrix sigma0_matrix(std::size_t n);

struct Sigma0 {
    friend bool operator==(Sigma0, Sigma0) { return true; }
};

/// Relabelling of points: the image has coefficient v[source[j]] at index j.
/// source[0] == 0 always.
struct Permutation {
    std::vector<std::size_t> source;
    friend bool operator==(const Permutation&, const Permutation&) = default;
};

using WeylStep = std::variant<Sigma0, Permutation>;

/// A word in sigma_0 and point permutations acting on a fixed number of
/// coordinates. Steps are applied in order (steps()[0] first).
class WeylWord {
public:
    WeylWord() = default;
    explicit WeylWord(std::size_t dimension) : dimension_(dimension) {}

    std::size_t dimension() const { return dimension_; }
    std::span<const WeylStep> steps() const { return steps_; }
    bool empty() const { return steps_.empty(); }
    std::size_t sigma_count() const;

    void append(WeylStep step);
    LatticeVector apply(const LatticeVector& v) const;
    /// The accumulated matrix, product of the step matrices.
    IntegerMatrix matrix() const;
    WeylWord inverse() const;

private:
    std::size_t dimension_ = 0;
    std::vector<WeylStep> steps_;
};

struct HudsonResult {
    bool proper = false;
    /// When proper, word.apply(input) == e0. Otherwise the steps taken
    /// before the witness was reached.
    WeylWord word;
    /// First intermediate vector with a negative multiplicity or a degree
    /// below 1; empty when proper.
    LatticeVector witness;
    /// Sorted intermediate vectors, starting with the sorted input.
    std::vector<LatticeVector> trace;
};

/// Hudson's test. The input must satisfy the Noether equalities
/// (PreconditionError otherwise); negative multiplicities are allowed and
/// give an immediate witness.
HudsonResult hudson_test(const LatticeVector& v);
HudsonResult hudson_test(const HomaloidalType& t);
bool is_proper(const HomaloidalType& t);

/// Type of the inverse map. Throws ImproperTypeError.
HomaloidalType dual_type(const HomaloidalType& t);

/// Matrix of g = h^-1 where h is the Hudson word of t, on coordinates
/// 0..r. Column 0 is (d; m_1, ..., m_r). Throws ImproperTypeError.
IntegerMatrix characteristic_matrix(const HomaloidalType& t);

/// Decides whether m (in this library's coordinates) lies in the group
/// generated by sigma_0 and point permutations: runs Hudson's test on
/// column 0 and checks that what is left is a permutation matrix.
bool in_weyl_group(const IntegerMatrix& m);

// Type literals: "d;m1[^e1],m2[^e2],...", whitespace ignored.
LatticeVector parse_type_literal(const std::string& text);
HomaloidalType parse_homaloidal_type(const std::string& text);
/// Compressed literal, e.g. "8;4^3,2^3,1^3".
std::string to_literal(const HomaloidalType& t);
std::string to_literal(const LatticeVector& v);

std::ostream& operator<<(std::ostream& os, const HomaloidalType& t);
std::ostream& operator<<(std::ostream& os, const LatticeVector& v);
std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

}  // namespace cremona
