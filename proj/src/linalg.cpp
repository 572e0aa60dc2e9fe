#include "grpi/linalg.hpp"

#include <cassert>

#include "grpi/errors.hpp"

namespace grpi {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw InputError("ragged rows in matrix");
        for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_cols(const std::vector<Vec>& cols) {
    if (cols.empty()) return Matrix();
    Matrix m(cols[0].size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != m.rows_) throw InputError("ragged columns in matrix");
        for (std::size_t r = 0; r < m.rows_; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

Vec Matrix::row(std::size_t r) const {
    return Vec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

Vec Matrix::col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

void Matrix::set_col(std::size_t c, const Vec& v) {
    assert(v.size() == rows_);
    for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (at(r, c) != (r == c ? Rational(1) : Rational(0))) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix product shape mismatch");
    Matrix m(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& x = at(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) {
                if (o.at(k, c).is_zero()) continue;
                m.at(r, c) += x * o.at(k, c);
            }
        }
    return m;
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw InputError("matrix apply shape mismatch");
    Vec y(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (x[c].is_zero()) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (at(r, c).is_zero()) continue;
            y[r] += at(r, c) * x[c];
        }
    }
    return y;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum shape mismatch");
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix difference shape mismatch");
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

Matrix Matrix::scaled(const Rational& c) const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * c;
    return m;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    // Gauss-Jordan on [A | I]; pivots must land in the left block.
    Matrix aug(rows_, 2 * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = 1;
    }
    RrefResult rr = rref(aug);
    if (rr.rank() < rows_) return std::nullopt;
    for (std::size_t i = 0; i < rows_; ++i)
        if (rr.pivot_cols[i] != i) return std::nullopt;
    Matrix inv(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) inv.at(r, c) = rr.reduced.at(r, cols_ + c);
    return inv;
}

RrefResult rref(const Matrix& a) {
    RrefResult out;
    out.reduced = a;
    Matrix& m = out.reduced;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
        std::size_t p = next_row;
        while (p < m.rows() && m.at(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != next_row)
            for (std::size_t k = c; k < m.cols(); ++k) std::swap(m.at(p, k), m.at(next_row, k));
        Rational lead = m.at(next_row, c);
        for (std::size_t k = c; k < m.cols(); ++k)
            if (!m.at(next_row, k).is_zero()) m.at(next_row, k) /= lead;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == next_row || m.at(r, c).is_zero()) continue;
            Rational f = m.at(r, c);
            for (std::size_t k = c; k < m.cols(); ++k) {
                if (m.at(next_row, k).is_zero()) continue;
                m.at(r, k) -= f * m.at(next_row, k);
            }
        }
        out.pivot_cols.push_back(c);
        ++next_row;
    }
    return out;
}

std::size_t rank(const Matrix& a) { return rref(a).rank(); }

std::vector<Vec> kernel(const Matrix& a) {
    RrefResult rr = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(a.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
            v[rr.pivot_cols[i]] = -rr.reduced.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

SolveResult solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw InputError("solve shape mismatch");
    const std::size_t n = a.cols(), nb = b.cols();
    Matrix aug(a.rows(), n + nb);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
        for (std::size_t c = 0; c < nb; ++c) aug.at(r, n + c) = b.at(r, c);
    }
    RrefResult rr = rref(aug);
    SolveResult out;
    for (std::size_t c : rr.pivot_cols)
        if (c >= n) return out;  // a pivot in the right block: inconsistent system
    out.feasible = true;
    out.particular = Matrix(n, nb);
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
        for (std::size_t c = 0; c < nb; ++c)
            out.particular.at(rr.pivot_cols[i], c) = rr.reduced.at(i, n + c);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec v(n);
        v[free] = 1;
        for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
            v[rr.pivot_cols[i]] = -rr.reduced.at(i, free);
        out.kernel.push_back(std::move(v));
    }
#ifndef NDEBUG
    // Every returned solution is re-multiplied against the system.
    assert(a * out.particular == b);
    for (const Vec& k : out.kernel) {
        Vec r = a.apply(k);
        for (const auto& x : r) assert(x.is_zero());
    }
#endif
    return out;
}

bool RowBasis::add(const Vec& row) {
    assert(row.size() == width_);
    Vec v = row;
    Vec combo(entries_.size());
    std::size_t p = 0;
    while (p < width_) {
        if (v[p].is_zero()) {
            ++p;
            continue;
        }
        long e = owner_[p];
        if (e < 0) break;
        const Entry& ent = entries_[static_cast<std::size_t>(e)];
        Rational f = v[p];
        for (std::size_t c = p; c < width_; ++c)
            if (!ent.reduced[c].is_zero()) v[c] -= f * ent.reduced[c];
        for (std::size_t i = 0; i < ent.combo.size(); ++i) combo[i] += f * ent.combo[i];
    }
    if (p == width_) return false;
    Rational lead = v[p];
    Entry ent;
    ent.pivot = p;
    ent.reduced.resize(width_);
    for (std::size_t c = p; c < width_; ++c)
        if (!v[c].is_zero()) ent.reduced[c] = v[c] / lead;
    // reduced = (row - combo . kept) / lead, so over kept rows: (e_self - combo) / lead
    ent.combo.resize(entries_.size() + 1);
    for (std::size_t i = 0; i < combo.size(); ++i) ent.combo[i] = -combo[i] / lead;
    ent.combo[entries_.size()] = Rational(1) / lead;
    owner_[p] = static_cast<long>(entries_.size());
    entries_.push_back(std::move(ent));
    return true;
}

std::optional<Vec> RowBasis::express(const Vec& row) const {
    assert(row.size() == width_);
    Vec v = row;
    Vec coeffs(entries_.size());
    std::size_t p = 0;
    while (p < width_) {
        if (v[p].is_zero()) {
            ++p;
            continue;
        }
        long e = owner_[p];
        if (e < 0) return std::nullopt;
        const Entry& ent = entries_[static_cast<std::size_t>(e)];
        Rational f = v[p];
        for (std::size_t c = p; c < width_; ++c)
            if (!ent.reduced[c].is_zero()) v[c] -= f * ent.reduced[c];
        for (std::size_t i = 0; i < ent.combo.size(); ++i) coeffs[i] += f * ent.combo[i];
    }
    return coeffs;
}

}
