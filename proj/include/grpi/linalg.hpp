#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "grpi/rational.hpp"

namespace grpi {

using Vec = std::vector<Rational>;

/// Dense matrix over Rational, row major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows);
    static Matrix from_cols(const std::vector<Vec>& cols);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    [[nodiscard]] const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    [[nodiscard]] Vec row(std::size_t r) const;
    [[nodiscard]] Vec col(std::size_t c) const;
    void set_col(std::size_t c, const Vec& v);

    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] bool is_identity() const;
    [[nodiscard]] bool is_zero() const;

    /// Row-major flattening, used to treat operators as vectors.
    [[nodiscard]] Vec flatten() const { return a_; }

    Matrix operator*(const Matrix& o) const;
    [[nodiscard]] Vec apply(const Vec& x) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    [[nodiscard]] Matrix scaled(const Rational& c) const;

    bool operator==(const Matrix& o) const = default;

    [[nodiscard]] std::optional<Matrix> inverse() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

/// Reduced row echelon form. Deterministic pivoting: leftmost eligible column,
/// topmost nonzero row.
struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
    [[nodiscard]] std::size_t rank() const { return pivot_cols.size(); }
};
RrefResult rref(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Basis of {x : a x = 0}, one vector per free column in increasing column order.
std::vector<Vec> kernel(const Matrix& a);

/// Full affine solution set of a x = b. b may carry several right-hand sides as
/// columns; they share the homogeneous kernel.
struct SolveResult {
    bool feasible = false;
    Matrix particular;        // valid only when feasible
    std::vector<Vec> kernel;  // basis of homogeneous solutions
};
SolveResult solve(const Matrix& a, const Matrix& b);

/// Incremental row-space accumulator. Records which input rows were kept as pivot
/// rows and can express any in-span vector over those kept rows.
class RowBasis {
public:
    explicit RowBasis(std::size_t width) : width_(width), owner_(width, -1) {}

    /// True when the row was independent of the current span (and is kept).
    bool add(const Vec& row);

    /// Coefficients over the kept rows, in kept order; nullopt when out of span.
    [[nodiscard]] std::optional<Vec> express(const Vec& row) const;

    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] std::size_t width() const { return width_; }

    /// Kept rows in reduced (echelon) form; pivots normalized to 1.
    [[nodiscard]] const Vec& reduced_row(std::size_t i) const { return entries_[i].reduced; }

private:
    struct Entry {
        Vec reduced;    // pivot entry equals 1
        std::size_t pivot;
        Vec combo;      // expression of `reduced` over kept input rows
    };
    std::size_t width_;
    std::vector<Entry> entries_;
    std::vector<long> owner_;  // column -> entry index holding that pivot, or -1
};

}
