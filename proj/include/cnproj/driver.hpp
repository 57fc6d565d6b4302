// The main driver: iterate n = 2, 3, ..., enumerate the indecomposables of
// C_n(proj Lambda), and stop at the first size where every minimal
// indecomposable has a zero first or last cell; the strong global dimension
// is that size minus two, witnessed by a full-support complex one level
// below.  Also the property suites that cross-check the enumerated quivers
// against the structure theory.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cnproj/ar_quiver.hpp"

namespace cnproj {

struct BoundaryResult {
    bool holds = true;
    std::vector<std::string> violating;  // ids of minimal reps with full support
};

// Contractibles are excluded from the quantifier: they are zero in the
// homotopy category and carry no length.
inline BoundaryResult boundary_condition(const IndecomposableSet& set) {
    BoundaryResult out;
    for (const RepMeta& r : set.reps) {
        if (!r.minimal) continue;
        if (r.support_a == 1 && r.support_b == set.n) {
            out.holds = false;
            out.violating.push_back(r.id);
        }
    }
    return out;
}

struct LevelSummary {
    size_t n = 0;
    size_t minimal_count = 0;
    size_t contractible_count = 0;
    bool holds = false;
    std::vector<std::string> violating;
};

struct SgldimReport {
    std::string algebra_sha256;
    uint32_t p = 2;
    EnumerationCaps caps;
    size_t max_n = 12;
    bool found = false;           // false <=> max_n exhausted, no verdict
    size_t m0 = 0;
    long eta = -1;
    std::optional<ProjComplex> witness;
    std::string witness_id;
    std::vector<LevelSummary> per_n;
    std::string recheck = "skipped";  // "holds" | "violated" | "skipped"
    std::string certification = "certified up to caps";
};

inline json report_to_json(const PathAlgebra& A, const SgldimReport& r) {
    json per = json::array();
    for (const LevelSummary& s : r.per_n)
        per.push_back({{"n", s.n},
                       {"minimal_count", s.minimal_count},
                       {"contractible_count", s.contractible_count},
                       {"boundary_condition", s.holds ? "holds" : "violated"},
                       {"violating", s.violating}});
    json j{{"algebra_sha256", r.algebra_sha256},
           {"p", r.p},
           {"caps", caps_to_json(r.caps)},
           {"max_n", r.max_n},
           {"verdict", r.found ? "ok" : "max_n_exceeded"},
           {"per_n", per},
           {"recheck_at_m0_plus_1", r.recheck},
           {"certification", r.certification}};
    if (r.found) {
        j["m0"] = r.m0;
        j["eta"] = r.eta;
        j["witness"] = r.witness ? complex_to_json(A, *r.witness) : json();
        j["witness_id"] = r.witness_id;
    }
    return j;
}

struct DriverConfig {
    size_t max_n = 12;
    bool recheck = true;
    CacheConfig cache;
};

inline SgldimReport sgldim(const PathAlgebra& A, const EnumerationCaps& caps,
                           const DriverConfig& cfg = {}) {
    SgldimReport rep;
    rep.algebra_sha256 = A.sha256();
    rep.p = A.field().p();
    rep.caps = caps;
    rep.max_n = cfg.max_n;
    CachedEnumerator ce(A, caps, cfg.cache);
    for (size_t n = 2; n <= cfg.max_n; ++n) {
        EnumerationResult res = ce.enumerate(n);
        BoundaryResult bc = boundary_condition(res.set);
        LevelSummary ls;
        ls.n = n;
        for (const RepMeta& r : res.set.reps) (r.minimal ? ls.minimal_count : ls.contractible_count)++;
        ls.holds = bc.holds;
        ls.violating = bc.violating;
        rep.per_n.push_back(std::move(ls));
        if (!bc.holds) continue;
        rep.found = true;
        rep.m0 = n;
        rep.eta = long(n) - 2;
        if (n == 2) {
            // semisimple-style verdict: the witness is a single-cell stalk
            rep.witness = stalk_complex(A, 1, 1, 0);
            rep.witness_id = "P" + A.quiver().vertices[0] + "@1-1";
        } else {
            EnumerationResult prev = ce.enumerate(n - 1);
            for (const RepMeta& r : prev.set.reps)
                if (r.minimal && r.support_a == 1 && r.support_b == n - 1) {
                    rep.witness = r.X;
                    rep.witness_id = r.id;
                    break;
                }
        }
        if (cfg.recheck && n + 1 <= cfg.max_n) {
            EnumerationResult nxt = ce.enumerate(n + 1);
            rep.recheck = boundary_condition(nxt.set).holds ? "holds" : "violated";
        }
        break;
    }
    return rep;
}

// Certified lower bound from a hand-entered complex.
inline size_t witness_lower_bound(const PathAlgebra& A, const ProjComplex& X,
                                  uint64_t idem_budget = uint64_t(1) << 20) {
    if (!X.is_minimal(A))
        throw Error(ErrKind::NotMinimal, "complex has a non-radical differential entry");
    Tri t = is_indecomposable(A, X, idem_budget);
    if (t == Tri::undecided)
        throw Error(ErrKind::BudgetExceeded, "indecomposability undecided within budget");
    if (t == Tri::no) throw Error(ErrKind::NotIndecomposable, "complex is decomposable");
    return minimal_length(X);
}

// ---- property suites --------------------------------------------------------

struct PropertyReport {
    std::string property;
    std::vector<size_t> levels;
    bool pass = true;
    std::vector<std::string> counterexamples;
    std::string note;
};

inline json property_reports_to_json(const std::vector<PropertyReport>& reports) {
    json out = json::array();
    for (const PropertyReport& r : reports)
        out.push_back({{"property", r.property},
                       {"levels", r.levels},
                       {"pass", r.pass},
                       {"counterexamples", r.counterexamples},
                       {"note", r.note}});
    return out;
}

inline const std::vector<std::string>& all_property_names() {
    static const std::vector<std::string> names = {
        "boundary-vanishing",    "interval-support",        "arrow-boundary-pattern",
        "component-split-pivot", "extendable-boundary-zero", "ext-left-arrow-target",
        "level-correspondence",  "full-support-witness",     "cross-size-coherence"};
    return names;
}

namespace driver_detail {

inline bool wants(const std::vector<std::string>& which, const std::string& name) {
    if (which.empty()) return true;
    for (const std::string& w : which)
        if (w == name) return true;
    return false;
}

// The split pattern of one arrow representative: a pivot position with
// retractions strictly before it and sections strictly after it, the
// all-section and all-retraction patterns included.  When the pivot sits on
// single indecomposable projectives on both sides, the component there must
// be irreducible among projectives.
inline bool arrow_split_pattern_ok(const PathAlgebra& A, const ProjComplex& X,
                                   const ProjComplex& Y, const ChainMap& f) {
    size_t n = X.n();
    std::vector<SplitType> st(n);
    for (size_t i = 0; i < n; ++i)
        st[i] = split_type(A, f.comp[i], X.cell(i).summands(), Y.cell(i).summands());
    for (size_t pivot = 0; pivot <= n + 1; ++pivot) {
        bool ok = true;
        for (size_t i = 1; i <= n && ok; ++i) {
            if (i < pivot && !st[i - 1].retraction) ok = false;
            if (i > pivot && !st[i - 1].section) ok = false;
        }
        if (!ok) continue;
        if (pivot >= 1 && pivot <= n) {
            std::vector<int> xs = X.cell(pivot - 1).summands();
            std::vector<int> ys = Y.cell(pivot - 1).summands();
            if (xs.size() == 1 && ys.size() == 1 && !st[pivot - 1].section &&
                !st[pivot - 1].retraction) {
                if (!proj_irreducible(A, f.comp[pivot - 1].at(0, 0), xs[0], ys[0])) continue;
            }
        }
        return true;
    }
    return false;
}

}  // namespace driver_detail

// Run the structural property suites at the levels the theory names.  The
// enumeration levels are eta+1 and eta+2 (raised to 2 when eta = 0, with a
// note, since sizes below 2 are outside the regime).
inline std::vector<PropertyReport> check_properties(const PathAlgebra& A, size_t eta,
                                                    const EnumerationCaps& caps,
                                                    const std::vector<std::string>& which = {},
                                                    const CacheConfig& cache = {}) {
    using driver_detail::wants;
    std::vector<PropertyReport> out;
    CachedEnumerator ce(A, caps, cache);
    size_t lo = eta + 1, hi = eta + 2;
    std::string level_note;
    if (lo < 2) {
        lo = 2;
        hi = 3;
        level_note = "levels raised to 2 and 3; sizes below 2 are outside the regime";
    }
    IndecomposableSet set_lo = ce.enumerate(lo).set;
    IndecomposableSet set_hi = ce.enumerate(hi).set;
    RadCache rc_lo(A, set_lo), rc_hi(A, set_hi);
    ARQuiver q_lo = build_ar_quiver(rc_lo);
    ARQuiver q_hi = build_ar_quiver(rc_hi);

    if (wants(which, "boundary-vanishing")) {
        PropertyReport pr;
        pr.property = "boundary-vanishing";
        pr.levels = {hi, hi + 1};
        pr.note = level_note;
        BoundaryResult b1 = boundary_condition(set_hi);
        if (!b1.holds) {
            pr.pass = false;
            pr.counterexamples = b1.violating;
        }
        IndecomposableSet set_hi2 = ce.enumerate(hi + 1).set;
        BoundaryResult b2 = boundary_condition(set_hi2);
        if (!b2.holds) {
            pr.pass = false;
            for (const std::string& v : b2.violating) pr.counterexamples.push_back(v);
        }
        out.push_back(std::move(pr));
    }

    if (wants(which, "interval-support")) {
        PropertyReport pr;
        pr.property = "interval-support";
        pr.levels = {lo, hi};
        pr.note = level_note;
        for (const IndecomposableSet* s : {&set_lo, &set_hi})
            for (const RepMeta& r : s->reps)
                if (r.minimal && !r.X.has_interval_support()) {
                    pr.pass = false;
                    pr.counterexamples.push_back(r.id);
                }
        out.push_back(std::move(pr));
    }

    if (wants(which, "arrow-boundary-pattern")) {
        // arrows between minimal vertices at size eta+2 keep a common zero
        // boundary cell on both ends
        PropertyReport pr;
        pr.property = "arrow-boundary-pattern";
        pr.levels = {hi};
        pr.note = level_note;
        for (const ARArrowInfo& a : q_hi.arrows) {
            const ARVertexInfo& vs = q_hi.vertices[a.src];
            const ARVertexInfo& vd = q_hi.vertices[a.dst];
            if (!vs.minimal || !vd.minimal) continue;
            const RepMeta& rs = set_hi.reps[vs.rep_index];
            const RepMeta& rd = set_hi.reps[vd.rep_index];
            bool first_zero = rs.support_a > 1 && rd.support_a > 1;
            bool last_zero = rs.support_b < set_hi.n && rd.support_b < set_hi.n;
            if (!first_zero && !last_zero) {
                pr.pass = false;
                pr.counterexamples.push_back(vs.id + " -> " + vd.id);
            }
        }
        out.push_back(std::move(pr));
    }

    if (wants(which, "component-split-pivot")) {
        PropertyReport pr;
        pr.property = "component-split-pivot";
        pr.levels = {lo, hi};
        pr.note = level_note;
        struct Ctx {
            RadCache* rc;
            const IndecomposableSet* set;
            const ARQuiver* q;
        };
        for (Ctx ctx : {Ctx{&rc_lo, &set_lo, &q_lo}, Ctx{&rc_hi, &set_hi, &q_hi}}) {
            for (const ARArrowInfo& a : ctx.q->arrows) {
                size_t i = ctx.q->vertices[a.src].rep_index;
                size_t j = ctx.q->vertices[a.dst].rep_index;
                ChainMap f = ctx.rc->arrow_representative(i, j);
                if (!driver_detail::arrow_split_pattern_ok(A, ctx.set->reps[i].X,
                                                           ctx.set->reps[j].X, f)) {
                    pr.pass = false;
                    pr.counterexamples.push_back(ctx.q->vertices[a.src].id + " -> " +
                                                 ctx.q->vertices[a.dst].id);
                }
            }
        }
        out.push_back(std::move(pr));
    }

    if (wants(which, "extendable-boundary-zero")) {
        PropertyReport pr;
        pr.property = "extendable-boundary-zero";
        if (eta + 1 < 2) {
            pr.levels = {};
            pr.note = "vacuous below size 2";
        } else {
            pr.levels = {eta + 1};
            for (const RepMeta& r : set_lo.reps) {
                if (!r.minimal) continue;
                if (r.ext_left && r.support_b == set_lo.n) {
                    pr.pass = false;
                    pr.counterexamples.push_back(r.id + " (left)");
                }
                if (r.ext_right && r.support_a == 1) {
                    pr.pass = false;
                    pr.counterexamples.push_back(r.id + " (right)");
                }
            }
        }
        pr.property = "extendable-boundary-zero";
        out.push_back(std::move(pr));
    }

    if (wants(which, "ext-left-arrow-target")) {
        PropertyReport pr;
        pr.property = "ext-left-arrow-target";
        if (eta + 1 < 2) {
            pr.note = "vacuous below size 2";
        } else {
            pr.levels = {eta + 1};
            for (const ARArrowInfo& a : q_lo.arrows) {
                if (q_lo.vertices[a.src].ext_left && q_lo.vertices[a.dst].ext_right) {
                    pr.pass = false;
                    pr.counterexamples.push_back(q_lo.vertices[a.src].id + " -> " +
                                                 q_lo.vertices[a.dst].id);
                }
            }
        }
        out.push_back(std::move(pr));
    }

    if (wants(which, "level-correspondence")) {
        // truncations restrict to mutually inverse bijections between the
        // minimal classes at the two sizes, and every arrow between minimal
        // vertices lifts along one of the inclusions
        PropertyReport pr;
        pr.property = "level-correspondence";
        pr.levels = {lo, hi};
        pr.note = level_note;
        std::map<std::string, std::string> lo_key_to_id;
        for (const RepMeta& r : set_lo.reps)
            if (r.minimal) lo_key_to_id[r.key] = r.id;
        // (a) first-cell-zero vertices of the larger size truncate
        // bijectively onto the smaller size
        std::map<std::string, size_t> image_count_left, image_count_right;
        for (const RepMeta& r : set_hi.reps) {
            if (!r.minimal) continue;
            bool first_zero = r.support_a > 1;
            bool last_zero = r.support_b < set_hi.n;
            if (!first_zero && !last_zero) {
                pr.pass = false;
                pr.counterexamples.push_back(r.id + " has full support");
                continue;
            }
            if (first_zero) {
                std::string key = canonical_complex_key(A, truncate_left(A, r.X));
                if (!lo_key_to_id.count(key)) {
                    pr.pass = false;
                    pr.counterexamples.push_back("*[ " + r.id + " ] missing below");
                } else {
                    image_count_left[key]++;
                }
            }
            if (last_zero) {
                std::string key = canonical_complex_key(A, truncate_right(A, r.X));
                if (!lo_key_to_id.count(key)) {
                    pr.pass = false;
                    pr.counterexamples.push_back("[ " + r.id + " ]* missing below");
                } else {
                    image_count_right[key]++;
                }
            }
        }
        for (const auto& [key, id] : lo_key_to_id) {
            if (image_count_left[key] != 1) {
                pr.pass = false;
                pr.counterexamples.push_back("left-truncation fiber of " + id + " has size " +
                                             std::to_string(image_count_left[key]));
            }
            if (image_count_right[key] != 1) {
                pr.pass = false;
                pr.counterexamples.push_back("right-truncation fiber of " + id + " has size " +
                                             std::to_string(image_count_right[key]));
            }
        }
        // (b) arrow lifting: each minimal-to-minimal arrow below lifts to an
        // arrow between the left inclusions or between the right inclusions
        std::map<std::string, size_t> hi_key_to_vertex;
        for (size_t v = 0; v < q_hi.vertices.size(); ++v)
            hi_key_to_vertex[set_hi.reps[q_hi.vertices[v].rep_index].key] = v;
        auto has_arrow = [&](size_t s, size_t d) {
            for (const ARArrowInfo& a : q_hi.arrows)
                if (a.src == s && a.dst == d) return true;
            return false;
        };
        for (const ARArrowInfo& a : q_lo.arrows) {
            const ARVertexInfo& vs = q_lo.vertices[a.src];
            const ARVertexInfo& vd = q_lo.vertices[a.dst];
            if (!vs.minimal || !vd.minimal) continue;
            const ProjComplex& Xs = set_lo.reps[vs.rep_index].X;
            const ProjComplex& Xd = set_lo.reps[vd.rep_index].X;
            std::string lks = canonical_complex_key(A, include_left(A, Xs));
            std::string lkd = canonical_complex_key(A, include_left(A, Xd));
            std::string rks = canonical_complex_key(A, include_right(A, Xs));
            std::string rkd = canonical_complex_key(A, include_right(A, Xd));
            bool lifted = false;
            if (hi_key_to_vertex.count(lks) && hi_key_to_vertex.count(lkd))
                lifted = has_arrow(hi_key_to_vertex[lks], hi_key_to_vertex[lkd]);
            if (!lifted && hi_key_to_vertex.count(rks) && hi_key_to_vertex.count(rkd))
                lifted = has_arrow(hi_key_to_vertex[rks], hi_key_to_vertex[rkd]);
            if (!lifted) {
                pr.pass = false;
                pr.counterexamples.push_back(vs.id + " -> " + vd.id + " does not lift");
            }
        }
        out.push_back(std::move(pr));
    }

    if (wants(which, "full-support-witness")) {
        PropertyReport pr;
        pr.property = "full-support-witness";
        if (eta == 0) {
            pr.note = "semisimple: the witness is a single-cell stalk";
        } else {
            pr.levels = {eta + 1};
            bool found = false;
            for (const RepMeta& r : set_lo.reps)
                if (r.minimal && r.support_a == 1 && r.support_b == set_lo.n) found = true;
            if (!found) {
                pr.pass = false;
                pr.counterexamples.push_back("no full-support minimal indecomposable at size " +
                                             std::to_string(eta + 1));
            }
        }
        out.push_back(std::move(pr));
    }

    if (wants(which, "cross-size-coherence")) {
        // at sizes past the verdict the minimal classes are exactly the
        // one-sided inclusions of the level below, i.e. nothing has full
        // support, and the condition persists one level up
        PropertyReport pr;
        pr.property = "cross-size-coherence";
        pr.levels = {hi, hi + 1};
        pr.note = level_note;
        std::set<std::string> hi_keys, expected;
        for (const RepMeta& r : set_hi.reps)
            if (r.minimal) hi_keys.insert(r.key);
        for (const RepMeta& r : set_lo.reps) {
            if (!r.minimal) continue;
            expected.insert(canonical_complex_key(A, include_left(A, r.X)));
            expected.insert(canonical_complex_key(A, include_right(A, r.X)));
        }
        if (hi_keys != expected) {
            pr.pass = false;
            pr.counterexamples.push_back("minimal classes at size " + std::to_string(hi) +
                                         " differ from the one-sided inclusions of size " +
                                         std::to_string(lo));
        }
        IndecomposableSet set_hi2 = ce.enumerate(hi + 1).set;
        if (boundary_condition(set_hi).holds && !boundary_condition(set_hi2).holds) {
            pr.pass = false;
            pr.counterexamples.push_back("boundary condition does not persist at size " +
                                         std::to_string(hi + 1));
        }
        out.push_back(std::move(pr));
    }

    return out;
}

}  // namespace cnproj
