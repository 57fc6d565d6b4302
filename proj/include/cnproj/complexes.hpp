// Objects of C_n(proj Lambda): complexes of projectives of fixed size.
// Cells are multiplicity vectors over the vertices; differentials are block
// matrices whose (r, c) entry lives in Hom(P_{u_c}, P_{w_r}).  Summand order
// inside a cell is always canonical vertex order, multiplicity-expanded.
#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "cnproj/algebra.hpp"
#include "cnproj/errors.hpp"

namespace cnproj {

struct Cell {
    std::vector<int> mult;  // one count per vertex

    explicit Cell(size_t nv = 0) : mult(nv, 0) {}

    bool is_zero() const {
        for (int m : mult)
            if (m) return false;
        return true;
    }
    // Vertices repeated by multiplicity, in canonical order.
    std::vector<int> summands() const {
        std::vector<int> s;
        for (size_t v = 0; v < mult.size(); ++v)
            for (int k = 0; k < mult[v]; ++k) s.push_back(static_cast<int>(v));
        return s;
    }
    size_t num_summands() const {
        size_t n = 0;
        for (int m : mult) n += size_t(m);
        return n;
    }
    size_t k_dim(const PathAlgebra& A) const {
        size_t d = 0;
        for (size_t v = 0; v < mult.size(); ++v) d += size_t(mult[v]) * A.proj_dim(static_cast<int>(v));
        return d;
    }
    bool operator==(const Cell& o) const { return mult == o.mult; }
};

// Block matrix of algebra elements; rows index the target cell's summands,
// columns the source cell's summands.
struct BlockMat {
    size_t rows = 0, cols = 0;
    std::vector<Elem> e;  // row-major

    BlockMat() = default;
    BlockMat(size_t r, size_t c) : rows(r), cols(c), e(r * c) {}
    Elem& at(size_t r, size_t c) { return e[r * cols + c]; }
    const Elem& at(size_t r, size_t c) const { return e[r * cols + c]; }
    bool is_zero() const {
        for (const Elem& x : e)
            if (!x.empty()) return false;
        return true;
    }
    bool operator==(const BlockMat& o) const { return rows == o.rows && cols == o.cols && e == o.e; }
};

// Product g * f of block matrices (g after f), entrywise algebra products.
inline BlockMat block_mul(const PathAlgebra& A, const BlockMat& g, const BlockMat& f) {
    BlockMat out(g.rows, f.cols);
    for (size_t r = 0; r < g.rows; ++r)
        for (size_t c = 0; c < f.cols; ++c) {
            Elem acc;
            for (size_t k = 0; k < g.cols; ++k) {
                if (g.at(r, k).empty() || f.at(k, c).empty()) continue;
                acc = PathAlgebra::add(A.field(), acc, A.multiply(g.at(r, k), f.at(k, c)));
            }
            out.at(r, c) = std::move(acc);
        }
    return out;
}

class ProjComplex {
public:
    ProjComplex() = default;

    // Validated constructor; `n >= 1` (size-1 complexes are used only as
    // strong-global-dimension witnesses in the semisimple case).
    static ProjComplex make(const PathAlgebra& A, std::vector<Cell> cells,
                            std::vector<BlockMat> diffs) {
        ProjComplex X;
        X.cells_ = std::move(cells);
        X.diffs_ = std::move(diffs);
        X.validate(A);
        return X;
    }

    // For the enumerator, which constructs d^2 = 0 by solving for it.
    static ProjComplex make_unchecked(std::vector<Cell> cells, std::vector<BlockMat> diffs) {
        ProjComplex X;
        X.cells_ = std::move(cells);
        X.diffs_ = std::move(diffs);
        return X;
    }

    size_t n() const { return cells_.size(); }
    const Cell& cell(size_t i) const { return cells_[i]; }            // 0-based
    const BlockMat& diff(size_t i) const { return diffs_[i]; }        // cell i -> cell i+1
    const std::vector<Cell>& cells() const { return cells_; }
    const std::vector<BlockMat>& diffs() const { return diffs_; }

    bool is_zero() const {
        for (const Cell& c : cells_)
            if (!c.is_zero()) return false;
        return true;
    }

    // 1-based indices of the first/last nonzero cell; {0, 0} for the zero
    // complex.
    std::pair<size_t, size_t> support() const {
        size_t a = 0, b = 0;
        for (size_t i = 0; i < cells_.size(); ++i)
            if (!cells_[i].is_zero()) {
                if (!a) a = i + 1;
                b = i + 1;
            }
        return {a, b};
    }

    bool has_interval_support() const {
        auto [a, b] = support();
        if (!a) return false;
        for (size_t i = a - 1; i < b; ++i)
            if (cells_[i].is_zero()) return false;
        return true;
    }

    bool is_minimal(const PathAlgebra& A) const {
        for (const BlockMat& d : diffs_)
            for (const Elem& x : d.e)
                if (!A.is_radical(x)) return false;
        return true;
    }

    void validate(const PathAlgebra& A) const {
        if (cells_.empty()) throw Error(ErrKind::NotAComplex, "complex has no cells");
        if (diffs_.size() + 1 != cells_.size())
            throw Error(ErrKind::NotAComplex, "expected n-1 differentials");
        for (const Cell& c : cells_)
            if (c.mult.size() != A.num_vertices())
                throw Error(ErrKind::NotAComplex, "cell multiplicity vector has wrong length");
        for (size_t i = 0; i < diffs_.size(); ++i) {
            const BlockMat& d = diffs_[i];
            std::vector<int> src = cells_[i].summands();
            std::vector<int> tgt = cells_[i + 1].summands();
            if (d.rows != tgt.size() || d.cols != src.size())
                throw Error(ErrKind::NotAComplex, "differential " + std::to_string(i + 1) +
                                                      " has wrong block shape");
            for (size_t r = 0; r < d.rows; ++r)
                for (size_t c = 0; c < d.cols; ++c)
                    for (const auto& [pi, coeff] : d.at(r, c)) {
                        const Path& p = A.path(pi);
                        // entry in Hom(P_src, P_tgt) = paths source tgt, target src
                        if (p.src != tgt[r] || p.tgt != src[c])
                            throw Error(ErrKind::BadEntry,
                                        "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                            ") of differential " + std::to_string(i + 1) +
                                            " lies in the wrong hom component");
                        if (coeff == 0 || coeff >= A.field().p())
                            throw Error(ErrKind::BadEntry, "coefficient out of range");
                    }
        }
        for (size_t i = 0; i + 1 < diffs_.size(); ++i)
            if (!block_mul(A, diffs_[i + 1], diffs_[i]).is_zero())
                throw Error(ErrKind::NotAComplex,
                            "d" + std::to_string(i + 2) + " after d" + std::to_string(i + 1) +
                                " is nonzero");
    }

    bool operator==(const ProjComplex& o) const {
        return cells_ == o.cells_ && diffs_ == o.diffs_;
    }

private:
    std::vector<Cell> cells_;
    std::vector<BlockMat> diffs_;
};

// ---- structural functors -------------------------------------------------

// Drop the first cell (size n-1).
inline ProjComplex truncate_left(const PathAlgebra& A, const ProjComplex& X) {
    if (X.n() < 2) throw Error(ErrKind::MalformedInput, "cannot truncate a 1-cell complex");
    std::vector<Cell> cells(X.cells().begin() + 1, X.cells().end());
    std::vector<BlockMat> diffs(X.diffs().begin() + 1, X.diffs().end());
    return ProjComplex::make(A, std::move(cells), std::move(diffs));
}

// Drop the last cell.
inline ProjComplex truncate_right(const PathAlgebra& A, const ProjComplex& X) {
    if (X.n() < 2) throw Error(ErrKind::MalformedInput, "cannot truncate a 1-cell complex");
    std::vector<Cell> cells(X.cells().begin(), X.cells().end() - 1);
    std::vector<BlockMat> diffs(X.diffs().begin(), X.diffs().end() - 1);
    return ProjComplex::make(A, std::move(cells), std::move(diffs));
}

// Prepend a zero cell (the shift).
inline ProjComplex include_left(const PathAlgebra& A, const ProjComplex& X) {
    std::vector<Cell> cells;
    cells.emplace_back(A.num_vertices());
    cells.insert(cells.end(), X.cells().begin(), X.cells().end());
    std::vector<BlockMat> diffs;
    diffs.emplace_back(X.cell(0).num_summands(), 0);
    diffs.insert(diffs.end(), X.diffs().begin(), X.diffs().end());
    return ProjComplex::make(A, std::move(cells), std::move(diffs));
}

// Append a zero cell (the natural inclusion).
inline ProjComplex include_right(const PathAlgebra& A, const ProjComplex& X) {
    std::vector<Cell> cells = X.cells();
    cells.emplace_back(A.num_vertices());
    std::vector<BlockMat> diffs = X.diffs();
    diffs.emplace_back(0, X.cell(X.n() - 1).num_summands());
    return ProjComplex::make(A, std::move(cells), std::move(diffs));
}

// Blockwise direct sum, re-sorted into canonical summand order.
inline ProjComplex direct_sum(const PathAlgebra& A, const ProjComplex& X, const ProjComplex& Y) {
    if (X.n() != Y.n()) throw Error(ErrKind::MalformedInput, "direct sum of different sizes");
    size_t n = X.n();
    size_t nv = A.num_vertices();
    std::vector<Cell> cells;
    // perm[i][k] = position in the canonical order of the k-th stacked
    // summand (X's summands first, then Y's).
    std::vector<std::vector<size_t>> perm(n);
    for (size_t i = 0; i < n; ++i) {
        Cell c(nv);
        for (size_t v = 0; v < nv; ++v) c.mult[v] = X.cell(i).mult[v] + Y.cell(i).mult[v];
        cells.push_back(c);
        std::vector<int> sx = X.cell(i).summands();
        std::vector<int> sy = Y.cell(i).summands();
        std::vector<std::pair<int, int>> stacked;  // (vertex, origin 0/1) in stack order
        for (int v : sx) stacked.emplace_back(v, 0);
        for (int v : sy) stacked.emplace_back(v, 1);
        // canonical order groups by vertex; X-summands precede Y-summands
        // within a vertex (stable)
        std::vector<size_t> order(stacked.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](size_t a, size_t b) { return stacked[a].first < stacked[b].first; });
        perm[i].assign(stacked.size(), 0);
        for (size_t pos = 0; pos < order.size(); ++pos) perm[i][order[pos]] = pos;
    }
    std::vector<BlockMat> diffs;
    for (size_t i = 0; i + 1 < n; ++i) {
        size_t rx = X.cell(i + 1).num_summands(), cx = X.cell(i).num_summands();
        size_t ry = Y.cell(i + 1).num_summands(), cy = Y.cell(i).num_summands();
        BlockMat d(rx + ry, cx + cy);
        for (size_t r = 0; r < rx; ++r)
            for (size_t c = 0; c < cx; ++c)
                d.at(perm[i + 1][r], perm[i][c]) = X.diff(i).at(r, c);
        for (size_t r = 0; r < ry; ++r)
            for (size_t c = 0; c < cy; ++c)
                d.at(perm[i + 1][rx + r], perm[i][cx + c]) = Y.diff(i).at(r, c);
        diffs.push_back(std::move(d));
    }
    return ProjComplex::make(A, std::move(cells), std::move(diffs));
}

// Stalk concentrated in (1-based) cell k of a size-n complex.
inline ProjComplex stalk_complex(const PathAlgebra& A, size_t n, size_t k, int v) {
    std::vector<Cell> cells(n, Cell(A.num_vertices()));
    cells[k - 1].mult[size_t(v)] = 1;
    std::vector<BlockMat> diffs;
    for (size_t i = 0; i + 1 < n; ++i)
        diffs.emplace_back(cells[i + 1].num_summands(), cells[i].num_summands());
    return ProjComplex::make(A, std::move(cells), std::move(diffs));
}

// J_k(P_v): P_v in cells k and k+1 joined by the identity.
inline ProjComplex contractible_complex(const PathAlgebra& A, size_t n, size_t k, int v) {
    std::vector<Cell> cells(n, Cell(A.num_vertices()));
    cells[k - 1].mult[size_t(v)] = 1;
    cells[k].mult[size_t(v)] = 1;
    std::vector<BlockMat> diffs;
    for (size_t i = 0; i + 1 < n; ++i) {
        BlockMat d(cells[i + 1].num_summands(), cells[i].num_summands());
        if (i == k - 1) d.at(0, 0) = Elem{{A.trivial_path(v), 1}};
        diffs.push_back(std::move(d));
    }
    return ProjComplex::make(A, std::move(cells), std::move(diffs));
}

// Pad with zero cells so the support starts at `offset` (1-based) in a
// size-n complex.
inline ProjComplex pad_complex(const PathAlgebra& A, const ProjComplex& X, size_t n, size_t offset) {
    ProjComplex Y = X;
    for (size_t i = 1; i < offset; ++i) Y = include_left(A, Y);
    while (Y.n() < n) Y = include_right(A, Y);
    return Y;
}

// Length: last minus first nonzero cell for minimal complexes, zero for
// contractibles (handled by callers that know the classification).
inline size_t minimal_length(const ProjComplex& X) {
    auto [a, b] = X.support();
    return a ? b - a : 0;
}

}  // namespace cnproj
