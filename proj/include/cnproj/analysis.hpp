// Predicates on complexes: isomorphism and indecomposability by budgeted
// exhaustive search, endomorphism radicals, the classification of
// relatively projective/injective objects, extendability, and the
// section/retraction analysis of single components.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cnproj/homspace.hpp"

namespace cnproj {

// p^d as a saturating value for comparing against a search budget.
inline uint64_t pow_saturating(uint32_t p, size_t d) {
    uint64_t v = 1;
    for (size_t i = 0; i < d; ++i) {
        if (v > (UINT64_MAX / p)) return UINT64_MAX;
        v *= p;
    }
    return v;
}

// Odometer over F_p^d in lexicographic order (digit 0 moves fastest).
inline bool next_vector(std::vector<uint32_t>& v, uint32_t p) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (++v[i] < p) return true;
        v[i] = 0;
    }
    return false;
}

namespace detail {

// K-matrices of each hom-basis element, per component; the scans work on
// these rather than on block matrices.
inline std::vector<std::vector<Matrix>> expand_basis(const PathAlgebra& A, const ProjComplex& X,
                                                     const ProjComplex& Y, const HomSpace& H) {
    std::vector<std::vector<Matrix>> out;
    for (const ChainMap& f : H.basis) out.push_back(expand_chain_map(A, X, Y, f));
    return out;
}

inline Matrix combine(const PrimeField& F, const std::vector<std::vector<Matrix>>& basis,
                      const std::vector<uint32_t>& coeff, size_t comp, size_t rows, size_t cols) {
    Matrix m(F, rows, cols);
    for (size_t j = 0; j < coeff.size(); ++j)
        if (coeff[j]) m.add_scaled(basis[j][comp], coeff[j]);
    return m;
}

}  // namespace detail

// Isomorphism by exhaustive scan of Hom(X, Y) for an element whose every
// component is invertible, behind the cheap cell-multiplicity pre-filter.
inline Tri is_isomorphic(const PathAlgebra& A, const ProjComplex& X, const ProjComplex& Y,
                         uint64_t budget = uint64_t(1) << 20) {
    if (X.n() != Y.n()) return Tri::no;
    for (size_t i = 0; i < X.n(); ++i)
        if (!(X.cell(i) == Y.cell(i))) return Tri::no;
    if (X == Y) return Tri::yes;

    HomSpace H = hom_space(A, X, Y);
    if (H.dim() == 0) return X.is_zero() ? Tri::yes : Tri::no;
    if (pow_saturating(A.field().p(), H.dim()) > budget) return Tri::undecided;

    std::vector<std::vector<Matrix>> basis = detail::expand_basis(A, X, Y, H);
    std::vector<size_t> dims;
    for (size_t i = 0; i < X.n(); ++i) dims.push_back(X.cell(i).k_dim(A));

    std::vector<uint32_t> c(H.dim(), 0);
    while (next_vector(c, A.field().p())) {
        bool ok = true;
        for (size_t i = 0; i < X.n() && ok; ++i) {
            if (dims[i] == 0) continue;
            Matrix m = detail::combine(A.field(), basis, c, i, dims[i], dims[i]);
            if (!is_invertible(m)) ok = false;
        }
        if (ok) return Tri::yes;
    }
    return Tri::no;
}

// Indecomposability: dim End = 1 fast path, otherwise an exhaustive scan of
// End(X) for an idempotent other than 0 and 1.
inline Tri is_indecomposable(const PathAlgebra& A, const ProjComplex& X,
                             uint64_t budget = uint64_t(1) << 20, size_t* dim_end_out = nullptr) {
    if (X.is_zero()) return Tri::no;
    HomSpace E = hom_space(A, X, X);
    if (dim_end_out) *dim_end_out = E.dim();
    if (E.dim() == 1) return Tri::yes;
    if (pow_saturating(A.field().p(), E.dim()) > budget) return Tri::undecided;

    std::vector<std::vector<Matrix>> basis = detail::expand_basis(A, X, X, E);
    std::vector<size_t> dims;
    for (size_t i = 0; i < X.n(); ++i) dims.push_back(X.cell(i).k_dim(A));

    std::vector<uint32_t> c(E.dim(), 0);
    while (next_vector(c, A.field().p())) {
        bool idem = true, is_id = true, is_zero = true;
        for (size_t i = 0; i < X.n() && idem; ++i) {
            if (dims[i] == 0) continue;
            Matrix m = detail::combine(A.field(), basis, c, i, dims[i], dims[i]);
            if (!(m * m == m)) { idem = false; break; }
            if (!m.is_zero()) is_zero = false;
            if (!(m == Matrix::identity(A.field(), dims[i]))) is_id = false;
        }
        if (idem && !is_id && !is_zero) return Tri::no;
    }
    return Tri::yes;
}

// Basis of rad End(X) = the non-invertible endomorphisms (X indecomposable,
// so they form the maximal ideal).  Exhaustive scan marking singular
// elements, then a spanning subset by elimination.  nullopt = budget hit.
inline std::optional<std::vector<std::vector<uint32_t>>> end_radical_coords(
    const PathAlgebra& A, const ProjComplex& X, const HomSpace& E,
    uint64_t budget = uint64_t(1) << 20) {
    const PrimeField& F = A.field();
    if (E.dim() == 1) return std::vector<std::vector<uint32_t>>{};
    if (pow_saturating(F.p(), E.dim()) > budget) return std::nullopt;

    std::vector<std::vector<Matrix>> basis = detail::expand_basis(A, X, X, E);
    std::vector<size_t> dims;
    for (size_t i = 0; i < X.n(); ++i) dims.push_back(X.cell(i).k_dim(A));

    std::vector<std::vector<uint32_t>> singular;
    std::vector<uint32_t> c(E.dim(), 0);
    while (next_vector(c, F.p())) {
        bool invertible = true;
        for (size_t i = 0; i < X.n() && invertible; ++i) {
            if (dims[i] == 0) continue;
            Matrix m = detail::combine(F, basis, c, i, dims[i], dims[i]);
            if (!is_invertible(m)) invertible = false;
        }
        if (!invertible) singular.push_back(c);
    }
    // spanning subset
    Matrix span(F, singular.size(), E.dim());
    for (size_t i = 0; i < singular.size(); ++i)
        for (size_t j = 0; j < E.dim(); ++j) span(i, j) = singular[i][j];
    Matrix red = span;
    std::vector<size_t> piv = rref(red);
    std::vector<std::vector<uint32_t>> out;
    for (size_t i = 0; i < piv.size(); ++i) {
        std::vector<uint32_t> v(E.dim());
        for (size_t j = 0; j < E.dim(); ++j) v[j] = red(i, j);
        out.push_back(std::move(v));
    }
    return out;
}

inline std::optional<std::vector<ChainMap>> end_radical(const PathAlgebra& A, const ProjComplex& X,
                                                        uint64_t budget = uint64_t(1) << 20) {
    HomSpace E = hom_space(A, X, X);
    auto coords = end_radical_coords(A, X, E, budget);
    if (!coords) return std::nullopt;
    std::vector<ChainMap> out;
    for (const auto& c : *coords) {
        ChainMap f;
        for (size_t i = 0; i < X.n(); ++i) {
            BlockMat b(E.basis.empty() ? 0 : E.basis[0].comp[i].rows,
                       E.basis.empty() ? 0 : E.basis[0].comp[i].cols);
            f.comp.push_back(b);
        }
        for (size_t j = 0; j < c.size(); ++j) {
            if (!c[j]) continue;
            for (size_t i = 0; i < X.n(); ++i)
                for (size_t k = 0; k < f.comp[i].e.size(); ++k)
                    f.comp[i].e[k] = PathAlgebra::add(A.field(), f.comp[i].e[k],
                                                      A.scale(c[j], E.basis[j].comp[i].e[k]));
        }
        out.push_back(std::move(f));
    }
    return out;
}

// ---- classification of the relative projectives/injectives ---------------

enum class EnClass { none, S, T, J };

struct Classification {
    EnClass cls = EnClass::none;
    size_t k = 0;    // for J_k: 1-based position of the first copy
    int vertex = -1;  // the P_v concerned, for S/T/J
    bool en_projective = false;  // J or T
    bool en_injective = false;   // J or S
};

// Structural match; the input is assumed indecomposable.
inline Classification classify_en(const PathAlgebra& A, const ProjComplex& X) {
    Classification out;
    auto [a, b] = X.support();
    if (a == 0) return out;
    auto single = [&](const Cell& c) -> int {
        int v = -1;
        for (size_t i = 0; i < c.mult.size(); ++i) {
            if (c.mult[i] == 0) continue;
            if (c.mult[i] > 1 || v >= 0) return -1;
            v = static_cast<int>(i);
        }
        return v;
    };
    if (a == b) {
        int v = single(X.cell(a - 1));
        if (v < 0) return out;
        if (a == X.n()) {
            out.cls = EnClass::T;
            out.vertex = v;
            out.en_projective = true;
        } else if (a == 1) {
            out.cls = EnClass::S;
            out.vertex = v;
            out.en_injective = true;
        }
        return out;
    }
    if (b == a + 1) {
        int v1 = single(X.cell(a - 1));
        int v2 = single(X.cell(b - 1));
        if (v1 >= 0 && v1 == v2) {
            const Elem& d = X.diff(a - 1).at(0, 0);
            if (!d.empty() && is_invertible(A.rep_matrix(d, v1, v1))) {
                out.cls = EnClass::J;
                out.k = a;
                out.vertex = v1;
                out.en_projective = true;
                out.en_injective = true;
            }
        }
    }
    return out;
}

inline std::string en_class_string(const Classification& c) {
    switch (c.cls) {
        case EnClass::none: return "none";
        case EnClass::S: return "S";
        case EnClass::T: return "T";
        case EnClass::J: return "J_" + std::to_string(c.k);
    }
    return "none";
}

// ---- extendability --------------------------------------------------------

// True iff for some vertex j there is a nonzero delta: P_j -> X^1 with
// d^1 after delta = 0.
inline bool extendable_left(const PathAlgebra& A, const ProjComplex& X) {
    const PrimeField& F = A.field();
    std::vector<int> x1 = X.cell(0).summands();
    if (x1.empty()) return false;
    std::vector<int> x2 = X.n() >= 2 ? X.cell(1).summands() : std::vector<int>{};
    for (size_t j = 0; j < A.num_vertices(); ++j) {
        // unknowns: delta[r] in Hom(P_j, P_{x1[r]})
        std::vector<size_t> off(x1.size() + 1, 0);
        for (size_t r = 0; r < x1.size(); ++r)
            off[r + 1] = off[r] + A.hom_paths(static_cast<int>(j), x1[r]).size();
        if (off.back() == 0) continue;
        // equations: rows of d^1 * delta over Hom(P_j, P_{x2[s]})
        std::vector<size_t> eoff(x2.size() + 1, 0);
        for (size_t s = 0; s < x2.size(); ++s)
            eoff[s + 1] = eoff[s] + A.hom_paths(static_cast<int>(j), x2[s]).size();
        Matrix M(F, eoff.back(), off.back());
        for (size_t s = 0; s < x2.size(); ++s) {
            const std::vector<int>& eq_paths = A.hom_paths(static_cast<int>(j), x2[s]);
            for (size_t r = 0; r < x1.size(); ++r) {
                const Elem& d = X.diff(0).at(s, r);
                if (d.empty()) continue;
                const std::vector<int>& un = A.hom_paths(static_cast<int>(j), x1[r]);
                for (size_t t = 0; t < un.size(); ++t)
                    for (const auto& [dp, dc] : d) {
                        int prod = A.mult_paths(dp, un[t]);
                        if (prod < 0) continue;
                        for (size_t q = 0; q < eq_paths.size(); ++q)
                            if (eq_paths[q] == prod)
                                M(eoff[s] + q, off[r] + t) = F.add(M(eoff[s] + q, off[r] + t), dc);
                    }
            }
        }
        if (!nullspace(std::move(M)).empty()) return true;
    }
    return false;
}

// Dual: nonzero delta: X^n -> P_j with delta after d^{n-1} = 0.
inline bool extendable_right(const PathAlgebra& A, const ProjComplex& X) {
    const PrimeField& F = A.field();
    size_t n = X.n();
    std::vector<int> xn = X.cell(n - 1).summands();
    if (xn.empty()) return false;
    std::vector<int> xp = n >= 2 ? X.cell(n - 2).summands() : std::vector<int>{};
    for (size_t j = 0; j < A.num_vertices(); ++j) {
        std::vector<size_t> off(xn.size() + 1, 0);
        for (size_t c = 0; c < xn.size(); ++c)
            off[c + 1] = off[c] + A.hom_paths(xn[c], static_cast<int>(j)).size();
        if (off.back() == 0) continue;
        std::vector<size_t> eoff(xp.size() + 1, 0);
        for (size_t c = 0; c < xp.size(); ++c)
            eoff[c + 1] = eoff[c] + A.hom_paths(xp[c], static_cast<int>(j)).size();
        Matrix M(F, eoff.back(), off.back());
        for (size_t cp = 0; cp < xp.size(); ++cp) {
            const std::vector<int>& eq_paths = A.hom_paths(xp[cp], static_cast<int>(j));
            for (size_t c = 0; c < xn.size(); ++c) {
                const Elem& d = X.diff(n - 2).at(c, cp);
                if (d.empty()) continue;
                const std::vector<int>& un = A.hom_paths(xn[c], static_cast<int>(j));
                for (size_t t = 0; t < un.size(); ++t)
                    for (const auto& [dp, dc] : d) {
                        int prod = A.mult_paths(un[t], dp);
                        if (prod < 0) continue;
                        for (size_t q = 0; q < eq_paths.size(); ++q)
                            if (eq_paths[q] == prod)
                                M(eoff[cp] + q, off[c] + t) = F.add(M(eoff[cp] + q, off[c] + t), dc);
                    }
            }
        }
        if (!nullspace(std::move(M)).empty()) return true;
    }
    return false;
}

// ---- sections and retractions of a single component -----------------------

struct SplitType {
    bool section = false;
    bool retraction = false;
};

namespace detail {

// Does U * f = id have a solution U: N -> M?  src/tgt are the summand
// vertex lists of M and N.
inline bool has_left_inverse(const PathAlgebra& A, const BlockMat& f, const std::vector<int>& src,
                             const std::vector<int>& tgt) {
    const PrimeField& F = A.field();
    if (src.empty()) return true;
    // unknowns U[r][k], r over src (M), k over tgt (N)
    std::vector<size_t> off;
    size_t total = 0;
    for (size_t r = 0; r < src.size(); ++r)
        for (size_t k = 0; k < tgt.size(); ++k) {
            off.push_back(total);
            total += A.hom_paths(tgt[k], src[r]).size();
        }
    auto uoff = [&](size_t r, size_t k) { return off[r * tgt.size() + k]; };
    // equations: (U f)[r][c] = delta_rc e, over Hom(P_{src c}, P_{src r})
    size_t eq_total = 0;
    std::vector<size_t> eoff;
    for (size_t r = 0; r < src.size(); ++r)
        for (size_t c = 0; c < src.size(); ++c) {
            eoff.push_back(eq_total);
            eq_total += A.hom_paths(src[c], src[r]).size();
        }
    auto eslot = [&](size_t r, size_t c, int path) -> size_t {
        const std::vector<int>& ps = A.hom_paths(src[c], src[r]);
        for (size_t q = 0; q < ps.size(); ++q)
            if (ps[q] == path) return eoff[r * src.size() + c] + q;
        throw Error(ErrKind::Internal, "left-inverse system: missing path slot");
    };
    Matrix M(F, eq_total, total);
    std::vector<uint32_t> rhs(eq_total, 0);
    for (size_t r = 0; r < src.size(); ++r)
        for (size_t c = 0; c < src.size(); ++c) {
            for (size_t k = 0; k < tgt.size(); ++k) {
                const Elem& fe = f.at(k, c);
                if (fe.empty()) continue;
                const std::vector<int>& un = A.hom_paths(tgt[k], src[r]);
                for (size_t t = 0; t < un.size(); ++t)
                    for (const auto& [fp, fc] : fe) {
                        int prod = A.mult_paths(un[t], fp);
                        if (prod < 0) continue;
                        size_t row = eslot(r, c, prod);
                        M(row, uoff(r, k) + t) = F.add(M(row, uoff(r, k) + t), fc);
                    }
            }
            if (r == c) rhs[eslot(r, c, A.trivial_path(src[r]))] = 1;
        }
    return solve_linear(M, rhs).has_value();
}

}  // namespace detail

// Split type of a map of projectives M -> N given as a block matrix.
inline SplitType split_type(const PathAlgebra& A, const BlockMat& f, const std::vector<int>& src,
                            const std::vector<int>& tgt) {
    SplitType st;
    st.section = detail::has_left_inverse(A, f, src, tgt);
    // f is a retraction iff f has a right inverse iff f^T-style: solve
    // f * H = id_N, which is a left-inverse problem for the transposed roles.
    {
        const PrimeField& F = A.field();
        if (tgt.empty()) {
            st.retraction = true;
            return st;
        }
        std::vector<size_t> off;
        size_t total = 0;
        for (size_t k = 0; k < src.size(); ++k)
            for (size_t c = 0; c < tgt.size(); ++c) {
                off.push_back(total);
                total += A.hom_paths(tgt[c], src[k]).size();
            }
        auto hoff = [&](size_t k, size_t c) { return off[k * tgt.size() + c]; };
        size_t eq_total = 0;
        std::vector<size_t> eoff;
        for (size_t r = 0; r < tgt.size(); ++r)
            for (size_t c = 0; c < tgt.size(); ++c) {
                eoff.push_back(eq_total);
                eq_total += A.hom_paths(tgt[c], tgt[r]).size();
            }
        auto eslot = [&](size_t r, size_t c, int path) -> size_t {
            const std::vector<int>& ps = A.hom_paths(tgt[c], tgt[r]);
            for (size_t q = 0; q < ps.size(); ++q)
                if (ps[q] == path) return eoff[r * tgt.size() + c] + q;
            throw Error(ErrKind::Internal, "right-inverse system: missing path slot");
        };
        Matrix M(F, eq_total, total);
        std::vector<uint32_t> rhs(eq_total, 0);
        for (size_t r = 0; r < tgt.size(); ++r)
            for (size_t c = 0; c < tgt.size(); ++c) {
                for (size_t k = 0; k < src.size(); ++k) {
                    const Elem& fe = f.at(r, k);
                    if (fe.empty()) continue;
                    const std::vector<int>& un = A.hom_paths(tgt[c], src[k]);
                    for (size_t t = 0; t < un.size(); ++t)
                        for (const auto& [fp, fc] : fe) {
                            int prod = A.mult_paths(fp, un[t]);
                            if (prod < 0) continue;
                            size_t row = eslot(r, c, prod);
                            M(row, hoff(k, c) + t) = F.add(M(row, hoff(k, c) + t), fc);
                        }
                }
                if (r == c) rhs[eslot(r, c, A.trivial_path(tgt[r]))] = 1;
            }
        st.retraction = solve_linear(M, rhs).has_value();
    }
    return st;
}

// ---- irreducibility between indecomposable projectives --------------------

// rad(P_a, P_b): everything when a != b, the nontrivial paths when a == b.
inline std::vector<int> proj_rad_paths(const PathAlgebra& A, int a, int b) {
    if (a != b) return A.hom_paths(a, b);
    return A.hom_paths_radical(a, b);
}

// Is x in Hom(P_a, P_b) irreducible in proj Lambda, i.e. in rad \ rad^2?
inline bool proj_irreducible(const PathAlgebra& A, const Elem& x, int a, int b) {
    const PrimeField& F = A.field();
    const std::vector<int>& full = A.hom_paths(a, b);
    auto coords = [&](const Elem& e) {
        std::vector<uint32_t> v(full.size(), 0);
        for (const auto& [pi, c] : e)
            for (size_t k = 0; k < full.size(); ++k)
                if (full[k] == pi) v[k] = c;
        return v;
    };
    // membership in rad
    std::vector<int> rad = proj_rad_paths(A, a, b);
    for (const auto& [pi, c] : x) {
        bool in = false;
        for (int r : rad)
            if (r == pi) in = true;
        if (!in && c) return false;
    }
    // span of rad^2
    std::vector<std::vector<uint32_t>> gens;
    for (size_t z = 0; z < A.num_vertices(); ++z) {
        for (int f : proj_rad_paths(A, a, static_cast<int>(z)))
            for (int g : proj_rad_paths(A, static_cast<int>(z), b)) {
                int prod = A.mult_paths(g, f);
                if (prod < 0) continue;
                gens.push_back(coords(Elem{{prod, 1}}));
            }
    }
    Matrix M(F, gens.size() + 1, full.size());
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < full.size(); ++j) M(i, j) = gens[i][j];
    size_t rk = rank(M);
    std::vector<uint32_t> xc = coords(x);
    for (size_t j = 0; j < full.size(); ++j) M(gens.size(), j) = xc[j];
    return rank(M) > rk;  // x independent of rad^2
}

}  // namespace cnproj
