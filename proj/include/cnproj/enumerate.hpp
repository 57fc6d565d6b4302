// Complete-up-to-caps enumeration of the iso-classes of indecomposable
// complexes: minimal ones by exhaustive differential search over radical
// entries, contractibles adjoined analytically.
//
// Minimal complexes with support [a, b] are paddings of full-support
// complexes of size b-a+1, so each size level only searches for new
// full-support ("anchored") classes and reuses the smaller levels.
//
// The anchored search at size L exploits Krull-Schmidt structure twice:
//   * the right truncation of a full-support minimal indecomposable has no
//     direct summand with zero last cell, so it is a direct sum of smaller
//     anchored classes padded to end at cell L-1 -- prefixes are generated
//     combinatorially as capped multisets, with no search;
//   * the d^2 = 0 constraint on the last differential acts row by row, and
//     row operations inside an equal-vertex summand group of the new cell
//     are automorphisms, so the rows of each group range exactly over the
//     full-rank reduced-echelon bases of subspaces of the per-row solution
//     space.  Zero or dependent rows would split off a summand of the last
//     cell, hence rank must equal the group multiplicity.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cnproj/analysis.hpp"
#include "cnproj/io.hpp"

namespace cnproj {

struct EnumerationCaps {
    int mult_cap = 2;
    size_t cell_dim_cap = 12;
    uint64_t iso_budget = uint64_t(1) << 20;
    uint64_t idem_budget = uint64_t(1) << 20;
};

inline json caps_to_json(const EnumerationCaps& c) {
    return json{{"mult_cap", c.mult_cap},
                {"cell_dim_cap", c.cell_dim_cap},
                {"iso_budget", c.iso_budget},
                {"idem_budget", c.idem_budget}};
}

inline EnumerationCaps caps_from_json(const json& j) {
    EnumerationCaps c;
    c.mult_cap = j.at("mult_cap").get<int>();
    c.cell_dim_cap = j.at("cell_dim_cap").get<size_t>();
    c.iso_budget = j.at("iso_budget").get<uint64_t>();
    c.idem_budget = j.at("idem_budget").get<uint64_t>();
    return c;
}

inline std::string caps_hash(const EnumerationCaps& caps, uint32_t p) {
    json j{{"caps", caps_to_json(caps)}, {"p", p}};
    return sha256_hex(j.dump()).substr(0, 16);
}

struct RepMeta {
    ProjComplex X;
    std::string key;  // canonical complex JSON, the sort/dedup key
    std::string id;   // signature plus disambiguator
    bool minimal = true;
    Classification cls;
    size_t support_a = 0, support_b = 0;
    bool ext_left = false, ext_right = false;
    size_t dim_end = 0;
};

struct IndecomposableSet {
    std::string algebra_sha256;
    size_t n = 0;
    EnumerationCaps caps;
    uint32_t p = 2;
    bool complete_up_to_caps = true;
    std::vector<RepMeta> reps;

    std::vector<const RepMeta*> minimal_reps() const {
        std::vector<const RepMeta*> out;
        for (const RepMeta& r : reps)
            if (r.minimal) out.push_back(&r);
        return out;
    }
    const RepMeta* find_by_id(const std::string& id) const {
        for (const RepMeta& r : reps)
            if (r.id == id) return &r;
        return nullptr;
    }
};

namespace enum_detail {

// All admissible nonzero cells under the caps, in deterministic order.
inline std::vector<Cell> admissible_cells(const PathAlgebra& A, const EnumerationCaps& caps) {
    std::vector<Cell> out;
    size_t nv = A.num_vertices();
    Cell c(nv);
    while (true) {
        size_t v = 0;
        while (v < nv) {
            if (++c.mult[v] <= caps.mult_cap) break;
            c.mult[v] = 0;
            ++v;
        }
        if (v == nv) break;
        if (!c.is_zero() && c.k_dim(A) <= caps.cell_dim_cap) out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const Cell& a, const Cell& b) { return a.mult < b.mult; });
    return out;
}

inline bool fully_connected(const ProjComplex& X) {
    size_t n = X.n();
    std::vector<size_t> cell_off(n + 1, 0);
    for (size_t i = 0; i < n; ++i) cell_off[i + 1] = cell_off[i] + X.cell(i).num_summands();
    size_t total = cell_off[n];
    if (total == 0) return false;
    std::vector<size_t> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i + 1 < n; ++i) {
        const BlockMat& d = X.diff(i);
        for (size_t r = 0; r < d.rows; ++r)
            for (size_t c = 0; c < d.cols; ++c)
                if (!d.at(r, c).empty()) parent[find(cell_off[i] + c)] = find(cell_off[i + 1] + r);
    }
    size_t root = find(0);
    for (size_t k = 1; k < total; ++k)
        if (find(k) != root) return false;
    return true;
}

// Cheap exact iso-invariants used to group complexes before any scan.
struct Fingerprint {
    std::string cells;
    std::vector<size_t> diff_ranks;
    std::vector<size_t> homology;
    size_t dim_end = 0;

    bool operator==(const Fingerprint& o) const {
        return cells == o.cells && diff_ranks == o.diff_ranks && homology == o.homology &&
               dim_end == o.dim_end;
    }
};

inline Fingerprint fingerprint(const PathAlgebra& A, const ProjComplex& X, size_t dim_end) {
    Fingerprint fp;
    for (const Cell& c : X.cells()) {
        for (int m : c.mult) fp.cells += char('0' + m);
        fp.cells += '|';
    }
    std::vector<size_t> rk;
    for (size_t i = 0; i + 1 < X.n(); ++i)
        rk.push_back(rank(expand_block(A, X.diff(i), X.cell(i).summands(), X.cell(i + 1).summands())));
    fp.diff_ranks = rk;
    for (size_t i = 0; i < X.n(); ++i) {
        size_t dim = X.cell(i).k_dim(A);
        size_t rin = i == 0 ? 0 : rk[i - 1];
        size_t rout = i + 1 < X.n() ? rk[i] : 0;
        fp.homology.push_back(dim - rin - rout);
    }
    fp.dim_end = dim_end;
    return fp;
}

// Visit every reduced-row-echelon basis of an m-dimensional subspace of
// F_p^k.  Pivot columns ascend; entries right of a pivot and off the pivot
// columns are free.
inline void for_each_rref(size_t k, size_t m, uint32_t p,
                          const std::function<void(const std::vector<std::vector<uint32_t>>&)>& fn) {
    if (m == 0) {
        fn({});
        return;
    }
    if (m > k) return;
    std::vector<size_t> piv(m);
    std::iota(piv.begin(), piv.end(), 0);
    while (true) {
        // free positions: row i, column j with j > piv[i], j not a pivot
        std::vector<std::pair<size_t, size_t>> free_pos;
        std::vector<char> is_piv(k, 0);
        for (size_t j : piv) is_piv[j] = 1;
        for (size_t i = 0; i < m; ++i)
            for (size_t j = piv[i] + 1; j < k; ++j)
                if (!is_piv[j]) free_pos.emplace_back(i, j);
        std::vector<uint32_t> assign(free_pos.size(), 0);
        while (true) {
            std::vector<std::vector<uint32_t>> rows(m, std::vector<uint32_t>(k, 0));
            for (size_t i = 0; i < m; ++i) rows[i][piv[i]] = 1;
            for (size_t t = 0; t < free_pos.size(); ++t)
                rows[free_pos[t].first][free_pos[t].second] = assign[t];
            fn(rows);
            if (!next_vector(assign, p)) break;
            if (assign.empty()) break;
        }
        // next pivot combination
        size_t i = m;
        while (i > 0) {
            --i;
            if (piv[i] + (m - i) < k) {
                ++piv[i];
                for (size_t t = i + 1; t < m; ++t) piv[t] = piv[t - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
        if (m == 0) return;
    }
}

}  // namespace enum_detail

class Enumerator {
public:
    Enumerator(const PathAlgebra& A, EnumerationCaps caps) : A_(A), caps_(caps) {}

    const EnumerationCaps& caps() const { return caps_; }
    const PathAlgebra& algebra() const { return A_; }

    // Full-support minimal indecomposable iso-classes of C_L, canonical order.
    const std::vector<ProjComplex>& anchored(size_t L) {
        auto it = anchored_.find(L);
        if (it != anchored_.end()) return it->second;
        std::vector<ProjComplex> result = L == 1 ? anchored_level_one() : anchored_search(L);
        sort_canonically(result);
        return anchored_.emplace(L, std::move(result)).first->second;
    }

    // Install anchored classes recovered from a cached enumeration of the
    // same algebra and caps.
    void seed_anchored(size_t L, std::vector<ProjComplex> reps) {
        if (anchored_.count(L)) return;
        sort_canonically(reps);
        anchored_.emplace(L, std::move(reps));
    }

    std::vector<ProjComplex> enumerate_minimal(size_t n) {
        std::vector<ProjComplex> out;
        for (size_t L = 1; L <= n; ++L)
            for (size_t off = 1; off + L - 1 <= n; ++off)
                for (const ProjComplex& X : anchored(L)) out.push_back(pad_complex(A_, X, n, off));
        return out;
    }

    std::vector<ProjComplex> adjoin_contractibles(size_t n) const {
        std::vector<ProjComplex> out;
        for (size_t k = 1; k + 1 <= n; ++k)
            for (size_t v = 0; v < A_.num_vertices(); ++v)
                out.push_back(contractible_complex(A_, n, k, static_cast<int>(v)));
        return out;
    }

    IndecomposableSet enumerate_indecomposables(size_t n) {
        IndecomposableSet set;
        set.algebra_sha256 = A_.sha256();
        set.n = n;
        set.caps = caps_;
        set.p = A_.field().p();
        for (ProjComplex& X : enumerate_minimal(n)) set.reps.push_back(make_meta(std::move(X), true));
        for (ProjComplex& X : adjoin_contractibles(n)) set.reps.push_back(make_meta(std::move(X), false));
        std::sort(set.reps.begin(), set.reps.end(),
                  [](const RepMeta& a, const RepMeta& b) { return a.key < b.key; });
        assign_ids(set);
        return set;
    }

private:
    std::vector<ProjComplex> anchored_level_one() const {
        std::vector<ProjComplex> out;
        for (size_t v = 0; v < A_.num_vertices(); ++v)
            out.push_back(stalk_complex(A_, 1, 1, static_cast<int>(v)));
        return out;
    }

    // Multisets of anchored classes padded to end at cell L-1, within caps;
    // at least one summand must reach back to cell 1.
    std::vector<ProjComplex> prefix_layer(size_t L) {
        struct Item {
            ProjComplex padded;
            size_t len;
        };
        std::vector<Item> items;
        for (size_t l = 1; l + 1 <= L; ++l)
            for (const ProjComplex& Y : anchored(l))
                items.push_back({pad_complex(A_, Y, L - 1, L - l), l});

        std::vector<ProjComplex> out;
        std::vector<Cell> zero(L - 1, Cell(A_.num_vertices()));
        std::function<void(size_t, std::vector<Cell>&, std::vector<size_t>&)> rec =
            [&](size_t idx, std::vector<Cell>& sums, std::vector<size_t>& chosen) {
                if (idx == items.size()) {
                    if (chosen.empty()) return;
                    // cell 1 of the prefix must be nonzero, so at least one
                    // summand must span the whole prefix
                    bool full = false;
                    for (size_t t : chosen)
                        if (items[t].len == L - 1) full = true;
                    if (!full) return;
                    ProjComplex W = items[chosen[0]].padded;
                    for (size_t k = 1; k < chosen.size(); ++k)
                        W = direct_sum(A_, W, items[chosen[k]].padded);
                    out.push_back(std::move(W));
                    return;
                }
                // count of this item: 0..as many as caps allow
                rec(idx + 1, sums, chosen);
                std::vector<Cell> saved = sums;
                size_t added = 0;
                while (true) {
                    bool ok = true;
                    for (size_t i = 0; i < L - 1 && ok; ++i) {
                        for (size_t v = 0; v < A_.num_vertices(); ++v) {
                            sums[i].mult[v] += items[idx].padded.cell(i).mult[v];
                            if (sums[i].mult[v] > caps_.mult_cap) ok = false;
                        }
                        if (sums[i].k_dim(A_) > caps_.cell_dim_cap) ok = false;
                    }
                    if (!ok) break;
                    ++added;
                    chosen.push_back(idx);
                    rec(idx + 1, sums, chosen);
                }
                for (size_t k = 0; k < added; ++k) chosen.pop_back();
                sums = saved;
            };
        std::vector<Cell> sums = zero;
        std::vector<size_t> chosen;
        rec(0, sums, chosen);
        return out;
    }

    // Full-support minimal indecomposables of size L, by extending each
    // prefix multiset with one more cell and a last differential.
    std::vector<ProjComplex> anchored_search(size_t L) {
        using namespace enum_detail;
        std::vector<Cell> cells = admissible_cells(A_, caps_);
        std::vector<ProjComplex> prefixes = prefix_layer(L);

        std::vector<ProjComplex> found;
        uint64_t work = 0;
        for (const ProjComplex& W : prefixes) {
            std::vector<int> src = W.cell(L - 2).summands();
            // per-target-vertex row solution spaces
            size_t nv = A_.num_vertices();
            std::vector<std::vector<std::pair<size_t, int>>> slots(nv);  // (src col, path)
            std::vector<std::vector<std::vector<uint32_t>>> row_space(nv);
            for (size_t v = 0; v < nv; ++v) {
                for (size_t c = 0; c < src.size(); ++c)
                    for (int p : A_.hom_paths_radical(src[c], static_cast<int>(v)))
                        slots[v].emplace_back(c, p);
                row_space[v] = row_solution_space(W, slots[v], static_cast<int>(v));
            }
            for (const Cell& C : cells) {
                // every summand group of the last cell needs enough
                // independent incoming rows
                bool feasible = true;
                uint64_t combos = 1;
                for (size_t v = 0; v < nv && feasible; ++v) {
                    size_t m = size_t(C.mult[v]);
                    if (m == 0) continue;
                    if (row_space[v].size() < m) {
                        feasible = false;
                        break;
                    }
                    combos = combos * subspace_count(row_space[v].size(), m, A_.field().p());
                    if (combos > kComboGuard) {
                        throw Error(ErrKind::BudgetExceeded,
                                    "differential choice count too large at prefix " +
                                        complex_signature(A_, W));
                    }
                }
                if (!feasible || combos == 0) continue;
                extend_prefix(W, C, slots, row_space, found, work);
            }
        }

        // exact dedup with the full budget
        std::vector<ProjComplex> kept;
        std::vector<Fingerprint> kept_fp;
        for (ProjComplex& X : found) {
            size_t de = hom_dim(A_, X, X);
            Fingerprint fp = fingerprint(A_, X, de);
            bool dup = false;
            for (size_t i = 0; i < kept.size() && !dup; ++i) {
                if (!(kept_fp[i] == fp)) continue;
                Tri t = is_isomorphic(A_, kept[i], X, caps_.iso_budget);
                if (t == Tri::undecided)
                    throw Error(ErrKind::BudgetExceeded,
                                "isomorphism undecided within iso_budget for " +
                                    complex_signature(A_, X));
                if (t == Tri::yes) dup = true;
            }
            if (!dup) {
                kept.push_back(std::move(X));
                kept_fp.push_back(std::move(fp));
            }
        }
        return kept;
    }

    // Nullspace basis of the per-row constraint (row) * dprev = 0 for a row
    // targeting vertex v, in the given slot coordinates.
    std::vector<std::vector<uint32_t>> row_solution_space(
        const ProjComplex& W, const std::vector<std::pair<size_t, int>>& slots, int v) {
        const PrimeField& F = A_.field();
        if (slots.empty()) return {};
        size_t L1 = W.n();  // prefix size = L-1
        if (L1 == 1) {
            std::vector<std::vector<uint32_t>> basis;
            for (size_t k = 0; k < slots.size(); ++k) {
                std::vector<uint32_t> e(slots.size(), 0);
                e[k] = 1;
                basis.push_back(std::move(e));
            }
            return basis;
        }
        const BlockMat& dprev = W.diff(L1 - 2);
        std::vector<int> src2 = W.cell(L1 - 2).summands();
        size_t eq_total = 0;
        std::vector<size_t> eoff(src2.size() + 1, 0);
        for (size_t c2 = 0; c2 < src2.size(); ++c2) {
            eoff[c2 + 1] = eoff[c2] + A_.hom_paths(src2[c2], v).size();
        }
        eq_total = eoff.back();
        Matrix M(F, eq_total, slots.size());
        for (size_t k = 0; k < slots.size(); ++k) {
            auto [c, path] = slots[k];
            for (size_t c2 = 0; c2 < src2.size(); ++c2) {
                const Elem& prev = dprev.at(c, c2);
                if (prev.empty()) continue;
                const std::vector<int>& eq_paths = A_.hom_paths(src2[c2], v);
                for (const auto& [pp, pc] : prev) {
                    int prod = A_.mult_paths(path, pp);
                    if (prod < 0) continue;
                    for (size_t q = 0; q < eq_paths.size(); ++q)
                        if (eq_paths[q] == prod)
                            M(eoff[c2] + q, k) = F.add(M(eoff[c2] + q, k), pc);
                }
            }
        }
        return nullspace(std::move(M));
    }

    static uint64_t subspace_count(size_t k, size_t m, uint32_t p) {
        // Gaussian binomial [k choose m]_p
        long double num = 1, den = 1;
        for (size_t i = 0; i < m; ++i) {
            num *= (powl((long double)p, (long double)(k - i)) - 1);
            den *= (powl((long double)p, (long double)(i + 1)) - 1);
        }
        long double q = num / den;
        return q > 1e18 ? UINT64_MAX : (uint64_t)(q + 0.5);
    }

    void extend_prefix(const ProjComplex& W, const Cell& C,
                       const std::vector<std::vector<std::pair<size_t, int>>>& slots,
                       const std::vector<std::vector<std::vector<uint32_t>>>& row_space,
                       std::vector<ProjComplex>& found, uint64_t& work) {
        using namespace enum_detail;
        const PrimeField& F = A_.field();
        size_t nv = A_.num_vertices();
        size_t L1 = W.n();
        std::vector<int> tgt = C.summands();
        size_t cols = W.cell(L1 - 1).num_summands();

        // active vertex groups in order of tgt
        std::vector<size_t> group_v;
        for (size_t v = 0; v < nv; ++v)
            if (C.mult[v] > 0) group_v.push_back(v);

        // per-group list of row-set choices (each = m rows in slot coords)
        std::vector<std::vector<std::vector<std::vector<uint32_t>>>> choices(group_v.size());
        for (size_t g = 0; g < group_v.size(); ++g) {
            size_t v = group_v[g];
            size_t m = size_t(C.mult[v]);
            size_t k = row_space[v].size();
            for_each_rref(k, m, F.p(), [&](const std::vector<std::vector<uint32_t>>& rref_rows) {
                std::vector<std::vector<uint32_t>> rows;
                for (const auto& rr : rref_rows) {
                    std::vector<uint32_t> row(slots[v].size(), 0);
                    for (size_t j = 0; j < k; ++j) {
                        if (!rr[j]) continue;
                        for (size_t t = 0; t < slots[v].size(); ++t)
                            row[t] = F.add(row[t], F.mul(rr[j], row_space[v][j][t]));
                    }
                    rows.push_back(std::move(row));
                }
                choices[g].push_back(std::move(rows));
            });
        }

        // cartesian product over groups
        std::vector<size_t> pick(group_v.size(), 0);
        while (true) {
            if (++work > kWorkGuard)
                throw Error(ErrKind::BudgetExceeded,
                            "enumeration work guard exceeded at prefix " + complex_signature(A_, W));
            BlockMat d(tgt.size(), cols);
            size_t row_base = 0;
            for (size_t g = 0; g < group_v.size(); ++g) {
                size_t v = group_v[g];
                const auto& rows = choices[g][pick[g]];
                for (size_t i = 0; i < rows.size(); ++i)
                    for (size_t t = 0; t < slots[v].size(); ++t)
                        if (rows[i][t]) {
                            Elem& e = d.at(row_base + i, slots[v][t].first);
                            e.emplace_back(slots[v][t].second, rows[i][t]);
                        }
                row_base += rows.size();
            }
            for (Elem& e : d.e) std::sort(e.begin(), e.end());

            std::vector<Cell> ncells = W.cells();
            ncells.push_back(C);
            std::vector<BlockMat> ndiffs = W.diffs();
            ndiffs.push_back(std::move(d));
            ProjComplex X = ProjComplex::make_unchecked(std::move(ncells), std::move(ndiffs));
            if (fully_connected(X)) {
                size_t de = 0;
                Tri t = is_indecomposable(A_, X, caps_.idem_budget, &de);
                if (t == Tri::undecided)
                    throw Error(ErrKind::BudgetExceeded,
                                "indecomposability undecided within idem_budget for " +
                                    complex_signature(A_, X));
                if (t == Tri::yes) found.push_back(std::move(X));
            }

            // advance cartesian product
            size_t g = 0;
            while (g < group_v.size()) {
                if (++pick[g] < choices[g].size()) break;
                pick[g] = 0;
                ++g;
            }
            if (g == group_v.size()) break;
        }
    }

    RepMeta make_meta(ProjComplex X, bool minimal) {
        RepMeta m;
        m.key = canonical_complex_key(A_, X);
        m.minimal = minimal;
        size_t de = 0;
        Tri t = is_indecomposable(A_, X, caps_.idem_budget, &de);
        if (t != Tri::yes)
            throw Error(ErrKind::Internal, "enumerated rep fails indecomposability recheck: " +
                                               complex_signature(A_, X));
        m.dim_end = de;
        m.cls = classify_en(A_, X);
        auto [a, b] = X.support();
        m.support_a = a;
        m.support_b = b;
        m.ext_left = extendable_left(A_, X);
        m.ext_right = extendable_right(A_, X);
        m.X = std::move(X);
        return m;
    }

    void assign_ids(IndecomposableSet& set) const {
        std::map<std::string, int> seen;
        for (RepMeta& r : set.reps) {
            std::string sig = complex_signature(A_, r.X);
            int k = ++seen[sig];
            r.id = k == 1 ? sig : sig + "#" + std::to_string(k);
        }
    }

    void sort_canonically(std::vector<ProjComplex>& v) const {
        std::vector<std::pair<std::string, size_t>> keyed;
        for (size_t i = 0; i < v.size(); ++i) keyed.emplace_back(canonical_complex_key(A_, v[i]), i);
        std::sort(keyed.begin(), keyed.end());
        std::vector<ProjComplex> out;
        out.reserve(v.size());
        for (auto& [k, i] : keyed) out.push_back(std::move(v[i]));
        v = std::move(out);
    }

    static constexpr uint64_t kComboGuard = uint64_t(1) << 24;
    static constexpr uint64_t kWorkGuard = uint64_t(1) << 26;

    const PathAlgebra& A_;
    EnumerationCaps caps_;
    std::map<size_t, std::vector<ProjComplex>> anchored_;
};

// ---- serialized sets and the disk cache ------------------------------------

inline json set_to_json(const PathAlgebra& A, const IndecomposableSet& set) {
    json reps = json::array();
    for (const RepMeta& r : set.reps) {
        json rj = complex_to_json(A, r.X);
        rj["id"] = r.id;
        rj["minimal"] = r.minimal;
        rj["class"] = en_class_string(r.cls);
        rj["support"] = {r.support_a, r.support_b};
        rj["ext_left"] = r.ext_left;
        rj["ext_right"] = r.ext_right;
        rj["dim_end"] = r.dim_end;
        reps.push_back(rj);
    }
    return json{{"algebra_sha256", set.algebra_sha256},
                {"n", set.n},
                {"caps", caps_to_json(set.caps)},
                {"p", set.p},
                {"complete_up_to_caps", set.complete_up_to_caps},
                {"reps", reps}};
}

inline IndecomposableSet set_from_json(const PathAlgebra& A, const json& j) {
    IndecomposableSet set;
    set.algebra_sha256 = j.at("algebra_sha256").get<std::string>();
    set.n = j.at("n").get<size_t>();
    set.caps = caps_from_json(j.at("caps"));
    set.p = j.at("p").get<uint32_t>();
    set.complete_up_to_caps = j.at("complete_up_to_caps").get<bool>();
    for (const json& rj : j.at("reps")) {
        RepMeta m;
        m.X = complex_from_json(A, rj);
        m.key = canonical_complex_key(A, m.X);
        m.id = rj.at("id").get<std::string>();
        m.minimal = rj.at("minimal").get<bool>();
        m.cls = classify_en(A, m.X);
        m.support_a = rj.at("support").at(0).get<size_t>();
        m.support_b = rj.at("support").at(1).get<size_t>();
        m.ext_left = rj.at("ext_left").get<bool>();
        m.ext_right = rj.at("ext_right").get<bool>();
        m.dim_end = rj.at("dim_end").get<size_t>();
        set.reps.push_back(std::move(m));
    }
    return set;
}

// Cached enumeration: returns the set plus its exact serialized bytes
// (identical whether computed or read back).
struct EnumerationResult {
    IndecomposableSet set;
    std::string bytes;
    bool from_cache = false;
};

class CachedEnumerator {
public:
    CachedEnumerator(const PathAlgebra& A, EnumerationCaps caps, CacheConfig cache)
        : A_(A), enumerator_(A, caps), caps_(caps), cache_(std::move(cache)) {}

    EnumerationResult enumerate(size_t n) {
        std::string name = std::to_string(n) + "-" + caps_hash(caps_, A_.field().p()) + ".json";
        if (auto bytes = cache_read(cache_, A_.sha256(), name)) {
            try {
                IndecomposableSet set = set_from_json(A_, json::parse(*bytes));
                if (set.n == n && set.p == A_.field().p()) {
                    seed_anchored_from(set);
                    return {std::move(set), std::move(*bytes), true};
                }
            } catch (const std::exception& e) {
                std::cerr << "warning: unusable cache entry " << name << " (" << e.what()
                          << "), recomputing\n";
            }
        }
        IndecomposableSet set = enumerator_.enumerate_indecomposables(n);
        std::string bytes = set_to_json(A_, set).dump();
        cache_write(cache_, A_.sha256(), name, bytes);
        return {std::move(set), std::move(bytes), false};
    }

    Enumerator& raw() { return enumerator_; }

private:
    // A cached set at size m supplies the anchored classes of every L <= m,
    // so later levels skip the search for those L entirely.
    void seed_anchored_from(const IndecomposableSet& set) {
        for (size_t L = 1; L <= set.n; ++L) {
            std::vector<ProjComplex> reps;
            for (const RepMeta& r : set.reps) {
                if (!r.minimal || r.support_a != 1 || r.support_b != L) continue;
                std::vector<Cell> cells(r.X.cells().begin(), r.X.cells().begin() + L);
                std::vector<BlockMat> diffs(r.X.diffs().begin(), r.X.diffs().begin() + (L - 1));
                reps.push_back(ProjComplex::make_unchecked(std::move(cells), std::move(diffs)));
            }
            enumerator_.seed_anchored(L, std::move(reps));
        }
    }

    const PathAlgebra& A_;
    Enumerator enumerator_;
    EnumerationCaps caps_;
    CacheConfig cache_;
};

// Re-run with loosened caps and compare as iso-class sets.
struct SweepResult {
    bool stable = true;
    std::vector<std::string> new_rep_ids;
};

inline SweepResult stability_sweep(const PathAlgebra& A, size_t n, const EnumerationCaps& caps) {
    Enumerator base(A, caps);
    EnumerationCaps loose = caps;
    loose.mult_cap += 1;
    loose.cell_dim_cap *= 2;
    Enumerator wide(A, loose);
    IndecomposableSet s0 = base.enumerate_indecomposables(n);
    IndecomposableSet s1 = wide.enumerate_indecomposables(n);
    SweepResult out;
    for (const RepMeta& r : s1.reps) {
        bool found = false;
        for (const RepMeta& q : s0.reps) {
            Tri t = is_isomorphic(A, q.X, r.X, caps.iso_budget);
            if (t == Tri::undecided)
                throw Error(ErrKind::BudgetExceeded, "sweep comparison undecided for " + r.id);
            if (t == Tri::yes) {
                found = true;
                break;
            }
        }
        if (!found) {
            out.stable = false;
            out.new_rep_ids.push_back(r.id);
        }
    }
    if (s0.reps.size() != s1.reps.size()) out.stable = false;
    return out;
}

}  // namespace cnproj
