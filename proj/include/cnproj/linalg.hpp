// Dense exact linear algebra over F_p: row reduction, solving, nullspaces,
// inversion.  Desk-scale dimensions, row-major storage, Gaussian elimination
// with first-nonzero pivoting.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cnproj/field.hpp"

namespace cnproj {

class Matrix {
public:
    Matrix() : F_(), rows_(0), cols_(0) {}
    Matrix(PrimeField F, size_t rows, size_t cols)
        : F_(F), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Matrix identity(PrimeField F, size_t n) {
        Matrix m(F, n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const PrimeField& field() const { return F_; }

    uint32_t& operator()(size_t r, size_t c) { return a_[r * cols_ + c]; }
    uint32_t operator()(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const {
        for (uint32_t v : a_)
            if (v) return false;
        return true;
    }

    Matrix operator*(const Matrix& o) const {
        Matrix r(F_, rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                uint32_t v = (*this)(i, k);
                if (!v) continue;
                for (size_t j = 0; j < o.cols_; ++j)
                    r(i, j) = F_.add(r(i, j), F_.mul(v, o(k, j)));
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        Matrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_.add(r.a_[i], o.a_[i]);
        return r;
    }

    void add_scaled(const Matrix& o, uint32_t c) {
        for (size_t i = 0; i < a_.size(); ++i) a_[i] = F_.add(a_[i], F_.mul(c, o.a_[i]));
    }

    std::vector<uint32_t> col(size_t j) const {
        std::vector<uint32_t> v(rows_);
        for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

private:
    PrimeField F_;
    size_t rows_, cols_;
    std::vector<uint32_t> a_;
};

// Reduced row echelon form in place; returns the pivot column of each pivot
// row (rank = pivots.size()).
inline std::vector<size_t> rref(Matrix& m) {
    const PrimeField& F = m.field();
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (size_t j = c; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        uint32_t s = F.inv(m(r, c));
        for (size_t j = c; j < m.cols(); ++j) m(r, j) = F.mul(m(r, j), s);
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            uint32_t f = m(i, c);
            for (size_t j = c; j < m.cols(); ++j)
                m(i, j) = F.sub(m(i, j), F.mul(f, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t rank(Matrix m) { return rref(m).size(); }

// Basis of {x : A x = 0}, one column vector per basis element.
inline std::vector<std::vector<uint32_t>> nullspace(Matrix a) {
    const PrimeField F = a.field();
    std::vector<size_t> pivots = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<uint32_t>> basis;
    for (size_t fc = 0; fc < a.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<uint32_t> v(a.cols(), 0);
        v[fc] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(a(i, fc));
        basis.push_back(std::move(v));
    }
    return basis;
}

struct LinearSolution {
    std::vector<uint32_t> particular;
    std::vector<std::vector<uint32_t>> nullspace;
};

// Solve A x = b; nullopt when b is not in the column span of A.
inline std::optional<LinearSolution> solve_linear(const Matrix& a, const std::vector<uint32_t>& b) {
    const PrimeField F = a.field();
    Matrix aug(F, a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    std::vector<size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    LinearSolution sol;
    sol.particular.assign(a.cols(), 0);
    for (size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = aug(i, a.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    for (size_t fc = 0; fc < a.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<uint32_t> v(a.cols(), 0);
        v[fc] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = F.neg(aug(i, fc));
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

// Inverse, or nullopt when singular.  Requires a square matrix.
inline std::optional<Matrix> invert(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("invert: matrix not square");
    const PrimeField F = a.field();
    size_t n = a.rows();
    Matrix aug(F, n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    // invertible iff all pivots land in the left block
    std::vector<size_t> piv = rref(aug);
    if (piv.size() < n || piv[n - 1] >= n) return std::nullopt;
    Matrix inv(F, n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

inline bool is_invertible(const Matrix& a) {
    if (a.rows() != a.cols()) return false;
    return rank(a) == a.rows();
}

}  // namespace cnproj
