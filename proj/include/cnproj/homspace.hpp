// Chain maps and the solved linear space of all chain maps between two
// complexes.  The chain-map equations d_Y f^i = f^{i+1} d_X are linearized
// over the path coordinates of every block entry and solved as one
// nullspace computation over F_p.
#pragma once

#include <vector>

#include "cnproj/complexes.hpp"
#include "cnproj/linalg.hpp"

namespace cnproj {

struct ChainMap {
    std::vector<BlockMat> comp;  // comp[i]: X^i -> Y^i

    bool is_zero() const {
        for (const BlockMat& b : comp)
            if (!b.is_zero()) return false;
        return true;
    }
};

inline ChainMap identity_map(const PathAlgebra& A, const ProjComplex& X) {
    ChainMap f;
    for (size_t i = 0; i < X.n(); ++i) {
        std::vector<int> s = X.cell(i).summands();
        BlockMat b(s.size(), s.size());
        for (size_t k = 0; k < s.size(); ++k) b.at(k, k) = Elem{{A.trivial_path(s[k]), 1}};
        f.comp.push_back(std::move(b));
    }
    return f;
}

inline ChainMap compose(const PathAlgebra& A, const ChainMap& g, const ChainMap& f) {
    ChainMap h;
    for (size_t i = 0; i < g.comp.size(); ++i) h.comp.push_back(block_mul(A, g.comp[i], f.comp[i]));
    return h;
}

inline bool is_chain_map(const PathAlgebra& A, const ProjComplex& X, const ProjComplex& Y,
                         const ChainMap& f) {
    for (size_t i = 0; i + 1 < X.n(); ++i) {
        BlockMat lhs = block_mul(A, Y.diff(i), f.comp[i]);
        BlockMat rhs = block_mul(A, f.comp[i + 1], X.diff(i));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

// Coordinate layout of Hom(X, Y): one unknown per (component, target
// summand, source summand, hom-basis path).
class HomLayout {
public:
    HomLayout(const PathAlgebra& A, const ProjComplex& X, const ProjComplex& Y) {
        n_ = X.n();
        total_ = 0;
        for (size_t i = 0; i < n_; ++i) {
            std::vector<int> xs = X.cell(i).summands();
            std::vector<int> ys = Y.cell(i).summands();
            comp_.push_back({});
            auto& entries = comp_.back();
            entries.resize(ys.size() * xs.size());
            for (size_t r = 0; r < ys.size(); ++r)
                for (size_t c = 0; c < xs.size(); ++c) {
                    EntryInfo& ei = entries[r * xs.size() + c];
                    ei.offset = total_;
                    ei.paths = &A.hom_paths(xs[c], ys[r]);
                    total_ += ei.paths->size();
                }
            xsum_.push_back(std::move(xs));
            ysum_.push_back(std::move(ys));
        }
    }

    size_t total() const { return total_; }
    size_t n() const { return n_; }
    const std::vector<int>& xsum(size_t i) const { return xsum_[i]; }
    const std::vector<int>& ysum(size_t i) const { return ysum_[i]; }

    size_t offset(size_t i, size_t r, size_t c) const {
        return comp_[i][r * xsum_[i].size() + c].offset;
    }
    const std::vector<int>& paths(size_t i, size_t r, size_t c) const {
        return *comp_[i][r * xsum_[i].size() + c].paths;
    }

    ChainMap to_chain_map(const PrimeField& F, const std::vector<uint32_t>& vec) const {
        ChainMap f;
        for (size_t i = 0; i < n_; ++i) {
            BlockMat b(ysum_[i].size(), xsum_[i].size());
            for (size_t r = 0; r < ysum_[i].size(); ++r)
                for (size_t c = 0; c < xsum_[i].size(); ++c) {
                    const std::vector<int>& ps = paths(i, r, c);
                    size_t off = offset(i, r, c);
                    Elem e;
                    for (size_t k = 0; k < ps.size(); ++k)
                        if (vec[off + k]) e.emplace_back(ps[k], vec[off + k]);
                    std::sort(e.begin(), e.end());
                    b.at(r, c) = std::move(e);
                }
            f.comp.push_back(std::move(b));
        }
        (void)F;
        return f;
    }

private:
    struct EntryInfo {
        size_t offset = 0;
        const std::vector<int>* paths = nullptr;
    };
    size_t n_ = 0;
    size_t total_ = 0;
    std::vector<std::vector<EntryInfo>> comp_;
    std::vector<std::vector<int>> xsum_, ysum_;
};

struct HomSpace {
    std::vector<ChainMap> basis;
    size_t dim() const { return basis.size(); }
};

// All chain maps X -> Y as the nullspace of the assembled linear system.
inline HomSpace hom_space(const PathAlgebra& A, const ProjComplex& X, const ProjComplex& Y) {
    if (X.n() != Y.n()) throw Error(ErrKind::MalformedInput, "hom of complexes of different size");
    const PrimeField& F = A.field();
    HomLayout L(A, X, Y);

    // Equation rows: for each interface i, target summand r of Y^{i+1},
    // source summand c of X^i, one scalar equation per basis path of
    // Hom(P_{x_c}, P_{y_r}).
    struct EqBlock {
        size_t offset;
        std::vector<int> paths;  // path index -> slot via lookup
    };
    size_t eq_total = 0;
    std::vector<std::vector<EqBlock>> eq(X.n() > 0 ? X.n() - 1 : 0);
    for (size_t i = 0; i + 1 < X.n(); ++i) {
        const auto& xs = L.xsum(i);
        const auto& ys1 = L.ysum(i + 1);
        eq[i].resize(ys1.size() * xs.size());
        for (size_t r = 0; r < ys1.size(); ++r)
            for (size_t c = 0; c < xs.size(); ++c) {
                EqBlock& b = eq[i][r * xs.size() + c];
                b.offset = eq_total;
                b.paths = A.hom_paths(xs[c], ys1[r]);
                eq_total += b.paths.size();
            }
    }
    auto eq_slot = [&](size_t i, size_t r, size_t c, int path) -> size_t {
        const EqBlock& b = eq[i][r * L.xsum(i).size() + c];
        for (size_t k = 0; k < b.paths.size(); ++k)
            if (b.paths[k] == path) return b.offset + k;
        throw Error(ErrKind::Internal, "hom system: product path missing from hom component");
    };

    Matrix M(F, eq_total, L.total());
    for (size_t i = 0; i + 1 < X.n(); ++i) {
        const auto& xs = L.xsum(i);
        const auto& ys = L.ysum(i);
        const auto& ys1 = L.ysum(i + 1);
        const auto& xs1 = L.xsum(i + 1);
        // + d_Y[r,k] * f_i[k,c]
        for (size_t r = 0; r < ys1.size(); ++r)
            for (size_t k = 0; k < ys.size(); ++k) {
                const Elem& d = Y.diff(i).at(r, k);
                if (d.empty()) continue;
                for (size_t c = 0; c < xs.size(); ++c) {
                    const std::vector<int>& ps = L.paths(i, k, c);
                    size_t off = L.offset(i, k, c);
                    for (size_t t = 0; t < ps.size(); ++t)
                        for (const auto& [dp, dc] : d) {
                            int prod = A.mult_paths(dp, ps[t]);
                            if (prod < 0) continue;
                            size_t row = eq_slot(i, r, c, prod);
                            M(row, off + t) = F.add(M(row, off + t), dc);
                        }
                }
            }
        // - f_{i+1}[r,m] * d_X[m,c]
        for (size_t r = 0; r < ys1.size(); ++r)
            for (size_t m = 0; m < xs1.size(); ++m) {
                const std::vector<int>& ps = L.paths(i + 1, r, m);
                size_t off = L.offset(i + 1, r, m);
                for (size_t c = 0; c < xs.size(); ++c) {
                    const Elem& d = X.diff(i).at(m, c);
                    if (d.empty()) continue;
                    for (size_t t = 0; t < ps.size(); ++t)
                        for (const auto& [dp, dc] : d) {
                            int prod = A.mult_paths(ps[t], dp);
                            if (prod < 0) continue;
                            size_t row = eq_slot(i, r, c, prod);
                            M(row, off + t) = F.sub(M(row, off + t), dc);
                        }
                }
            }
    }

    HomSpace H;
    for (std::vector<uint32_t>& v : nullspace(std::move(M)))
        H.basis.push_back(L.to_chain_map(F, v));
    return H;
}

inline size_t hom_dim(const PathAlgebra& A, const ProjComplex& X, const ProjComplex& Y) {
    return hom_space(A, X, Y).dim();
}

// Expand a block matrix between cells to the K-matrix of the underlying
// linear map (basis: the projective path bases, stacked in summand order).
inline Matrix expand_block(const PathAlgebra& A, const BlockMat& b, const std::vector<int>& src,
                           const std::vector<int>& tgt) {
    const PrimeField& F = A.field();
    std::vector<size_t> roff(tgt.size() + 1, 0), coff(src.size() + 1, 0);
    for (size_t r = 0; r < tgt.size(); ++r) roff[r + 1] = roff[r] + A.proj_dim(tgt[r]);
    for (size_t c = 0; c < src.size(); ++c) coff[c + 1] = coff[c] + A.proj_dim(src[c]);
    Matrix m(F, roff.back(), coff.back());
    for (size_t r = 0; r < tgt.size(); ++r)
        for (size_t c = 0; c < src.size(); ++c) {
            if (b.at(r, c).empty()) continue;
            Matrix sub = A.rep_matrix(b.at(r, c), src[c], tgt[r]);
            for (size_t i = 0; i < sub.rows(); ++i)
                for (size_t j = 0; j < sub.cols(); ++j)
                    if (sub(i, j)) m(roff[r] + i, coff[c] + j) = sub(i, j);
        }
    return m;
}

// Per-component K-matrices of a chain map (used by the budgeted scans).
inline std::vector<Matrix> expand_chain_map(const PathAlgebra& A, const ProjComplex& X,
                                            const ProjComplex& Y, const ChainMap& f) {
    std::vector<Matrix> out;
    for (size_t i = 0; i < X.n(); ++i)
        out.push_back(expand_block(A, f.comp[i], X.cell(i).summands(), Y.cell(i).summands()));
    return out;
}

}  // namespace cnproj
