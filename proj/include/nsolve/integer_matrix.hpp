#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace nsolve {

/// Coordinates, determinants and volumes. Every operation on these goes
/// through the checked helpers below and throws on overflow instead of
/// wrapping.
using Int = std::int64_t;

struct OverflowError : std::overflow_error {
    OverflowError() : std::overflow_error("integer overflow in exact arithmetic") {}
};

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
    return r;
}
inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
    return r;
}
inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
    return r;
}

Int gcd(Int a, Int b);

/// Extended gcd: returns g = gcd(a, b) >= 0 and sets x, y with a*x + b*y = g.
Int extended_gcd(Int a, Int b, Int& x, Int& y);

/// Floor division for possibly negative operands.
Int floor_div(Int a, Int b);

using IntVector = std::vector<Int>;

Int dot(const IntVector& a, const IntVector& b);
Int content(const IntVector& v);  // gcd of entries, 0 for the zero vector
bool is_primitive(const IntVector& v);
IntVector primitive_part(const IntVector& v);  // v / content(v); zero stays zero

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    Int operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector col(std::size_t j) const;
    IntMatrix transposed() const;
    bool is_zero() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /// row_i <- row_i + f * row_j
    void add_row_multiple(std::size_t i, std::size_t j, Int f);
    /// col_i <- col_i + f * col_j
    void add_col_multiple(std::size_t i, std::size_t j, Int f);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> a_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
/// Row vector times matrix.
IntVector operator*(const IntVector& v, const IntMatrix& m);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Exact determinant (fraction-free elimination).
Int determinant(const IntMatrix& m);
/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);
/// Inverse of a unimodular matrix; throws std::invalid_argument otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);
/// Adjugate: adj(m) * m = det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

struct HermiteSmith {
    IntMatrix hermite;            // row Hermite form H = hermite_left * M
    IntMatrix hermite_left;       // unimodular
    IntMatrix smith;              // diagonal S = smith_left * M * smith_right
    IntMatrix smith_left;         // unimodular U
    IntMatrix smith_right;        // unimodular V
    IntMatrix smith_right_inverse;  // V^{-1}
    std::size_t rank = 0;
    /// Non-zero invariant factors d1 | d2 | ... | d_rank, all positive.
    IntVector invariants() const;
};

/// Row-style Hermite form: upper staircase, positive pivots, entries above
/// each pivot reduced into [0, pivot).
IntMatrix hermite_form(const IntMatrix& m, IntMatrix* left = nullptr);

HermiteSmith hermite_smith(const IntMatrix& m);

}  // namespace nsolve
