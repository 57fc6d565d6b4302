// The Auslander-Reiten quiver of C_n(proj Lambda) from an enumerated set of
// indecomposables: arrows are dim rad/rad^2, computed from the hom spaces of
// the set.  Also the distinguished subquiver obtained by removing the
// contractibles and keeping the components that contain a complex extendable
// to neither side, and its replication into a window of shifted copies whose
// gluing realizes the derived-category AR-quiver.
#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cnproj/enumerate.hpp"

namespace cnproj {

struct ARVertexInfo {
    std::string id;
    bool e_proj = false, e_inj = false;
    bool minimal = true;
    bool ext_left = false, ext_right = false;
    size_t rep_index = 0;
};

struct ARArrowInfo {
    size_t src = 0, dst = 0;
    size_t mult = 1;
};

struct ARQuiver {
    std::vector<ARVertexInfo> vertices;
    std::vector<ARArrowInfo> arrows;

    int vertex_by_id(const std::string& id) const {
        for (size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i].id == id) return static_cast<int>(i);
        return -1;
    }
};

// Flatten a chain map into the coordinate vector of the given layout.
inline std::vector<uint32_t> flatten_chain_map(const HomLayout& L, const ChainMap& f) {
    std::vector<uint32_t> v(L.total(), 0);
    for (size_t i = 0; i < L.n(); ++i) {
        const BlockMat& b = f.comp[i];
        for (size_t r = 0; r < b.rows; ++r)
            for (size_t c = 0; c < b.cols; ++c) {
                const std::vector<int>& ps = L.paths(i, r, c);
                size_t off = L.offset(i, r, c);
                for (const auto& [pi, cf] : b.at(r, c))
                    for (size_t k = 0; k < ps.size(); ++k)
                        if (ps[k] == pi) v[off + k] = cf;
            }
    }
    return v;
}

// Hom and radical bases over the whole set, memoized.
class RadCache {
public:
    RadCache(const PathAlgebra& A, const IndecomposableSet& set) : A_(A), set_(set) {
        size_t N = set.reps.size();
        rad_.resize(N * N);
        rad_done_.assign(N * N, false);
    }

    const PathAlgebra& algebra() const { return A_; }
    const IndecomposableSet& set() const { return set_; }
    size_t size() const { return set_.reps.size(); }

    // rad(X_i, X_j): everything when i != j, the non-invertible
    // endomorphisms when i == j.
    const std::vector<ChainMap>& rad(size_t i, size_t j) {
        size_t idx = i * size() + j;
        if (!rad_done_[idx]) {
            if (i == j) {
                auto r = end_radical(A_, set_.reps[i].X, set_.caps.idem_budget);
                if (!r)
                    throw Error(ErrKind::BudgetExceeded,
                                "endomorphism radical undecided within idem_budget for " +
                                    set_.reps[i].id);
                rad_[idx] = std::move(*r);
            } else {
                rad_[idx] = hom_space(A_, set_.reps[i].X, set_.reps[j].X).basis;
            }
            rad_done_[idx] = true;
        }
        return rad_[idx];
    }

    size_t rad_dim(size_t i, size_t j) { return rad(i, j).size(); }

    // Basis matrix of rad^2(X_i, X_j) in the coordinates of Hom(X_i, X_j).
    Matrix rad2_span(size_t i, size_t j) {
        HomLayout L(A_, set_.reps[i].X, set_.reps[j].X);
        std::vector<std::vector<uint32_t>> gens;
        for (size_t z = 0; z < size(); ++z) {
            const auto& fz = rad(i, z);
            if (fz.empty()) continue;
            const auto& gz = rad(z, j);
            if (gz.empty()) continue;
            for (const ChainMap& f : fz)
                for (const ChainMap& g : gz) {
                    ChainMap h = compose(A_, g, f);
                    std::vector<uint32_t> v = flatten_chain_map(L, h);
                    bool nz = false;
                    for (uint32_t x : v)
                        if (x) nz = true;
                    if (nz) gens.push_back(std::move(v));
                }
        }
        Matrix M(A_.field(), gens.size(), L.total());
        for (size_t r = 0; r < gens.size(); ++r)
            for (size_t c = 0; c < L.total(); ++c) M(r, c) = gens[r][c];
        rref(M);
        return M;
    }

    size_t rad2_dim(size_t i, size_t j) {
        Matrix M = rad2_span(i, j);
        size_t rk = 0;
        for (size_t r = 0; r < M.rows(); ++r) {
            bool nz = false;
            for (size_t c = 0; c < M.cols(); ++c)
                if (M(r, c)) nz = true;
            if (nz) ++rk;
        }
        return rk;
    }

    // A radical map representing an arrow: the first rad basis element
    // independent of rad^2.  Requires dim rad/rad^2 > 0.
    ChainMap arrow_representative(size_t i, size_t j) {
        HomLayout L(A_, set_.reps[i].X, set_.reps[j].X);
        Matrix span = rad2_span(i, j);
        size_t rk = 0;
        for (size_t r = 0; r < span.rows(); ++r) {
            bool nz = false;
            for (size_t c = 0; c < span.cols(); ++c)
                if (span(r, c)) nz = true;
            if (nz) ++rk;
        }
        for (const ChainMap& f : rad(i, j)) {
            std::vector<uint32_t> v = flatten_chain_map(L, f);
            Matrix M(A_.field(), rk + 1, L.total());
            size_t rr = 0;
            for (size_t r = 0; r < span.rows(); ++r) {
                bool nz = false;
                for (size_t c = 0; c < span.cols(); ++c)
                    if (span(r, c)) nz = true;
                if (!nz) continue;
                for (size_t c = 0; c < span.cols(); ++c) M(rr, c) = span(r, c);
                ++rr;
            }
            for (size_t c = 0; c < L.total(); ++c) M(rk, c) = v[c];
            if (rank(M) > rk) return f;
        }
        throw Error(ErrKind::Internal, "no arrow representative although mult > 0");
    }

private:
    const PathAlgebra& A_;
    const IndecomposableSet& set_;
    std::vector<std::vector<ChainMap>> rad_;
    std::vector<char> rad_done_;
};

inline ARQuiver build_ar_quiver(RadCache& rc) {
    const IndecomposableSet& set = rc.set();
    ARQuiver q;
    for (size_t i = 0; i < set.reps.size(); ++i) {
        const RepMeta& r = set.reps[i];
        ARVertexInfo v;
        v.id = r.id;
        v.e_proj = r.cls.en_projective;
        v.e_inj = r.cls.en_injective;
        v.minimal = r.minimal;
        v.ext_left = r.ext_left;
        v.ext_right = r.ext_right;
        v.rep_index = i;
        q.vertices.push_back(std::move(v));
    }
    for (size_t i = 0; i < set.reps.size(); ++i)
        for (size_t j = 0; j < set.reps.size(); ++j) {
            size_t rd = rc.rad_dim(i, j);
            if (rd == 0) continue;
            size_t r2 = rc.rad2_dim(i, j);
            if (rd > r2) q.arrows.push_back({i, j, rd - r2});
        }
    return q;
}

// Remove the contractible vertices, then keep the union of the connected
// components that contain a vertex extendable to neither side.
inline ARQuiver gamma_bar(const ARQuiver& q, size_t eta) {
    if (eta == 0)
        throw Error(ErrKind::EtaZero,
                    "the distinguished subquiver needs eta >= 1 (semisimple case short-circuits)");
    std::vector<int> keep_index(q.vertices.size(), -1);
    std::vector<size_t> kept;
    for (size_t i = 0; i < q.vertices.size(); ++i)
        if (!(q.vertices[i].e_proj && q.vertices[i].e_inj)) {
            keep_index[i] = static_cast<int>(kept.size());
            kept.push_back(i);
        }
    // components among the kept vertices (arrows as undirected edges)
    std::vector<size_t> parent(kept.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const ARArrowInfo& a : q.arrows) {
        int s = keep_index[a.src], d = keep_index[a.dst];
        if (s >= 0 && d >= 0) parent[find(size_t(s))] = find(size_t(d));
    }
    std::vector<char> good_root(kept.size(), 0);
    for (size_t k = 0; k < kept.size(); ++k) {
        const ARVertexInfo& v = q.vertices[kept[k]];
        if (!v.ext_left && !v.ext_right) good_root[find(k)] = 1;
    }
    ARQuiver out;
    std::vector<int> final_index(q.vertices.size(), -1);
    for (size_t k = 0; k < kept.size(); ++k) {
        if (!good_root[find(k)]) continue;
        final_index[kept[k]] = static_cast<int>(out.vertices.size());
        out.vertices.push_back(q.vertices[kept[k]]);
    }
    for (const ARArrowInfo& a : q.arrows) {
        int s = final_index[a.src], d = final_index[a.dst];
        if (s >= 0 && d >= 0) out.arrows.push_back({size_t(s), size_t(d), a.mult});
    }
    return out;
}

// ---- the window of shifted copies ------------------------------------------

struct WindowVertex {
    std::string id;                                     // canonical member "repid|k"
    std::vector<std::pair<std::string, int>> members;   // (rep id, copy)
    bool e_proj = false, e_inj = false, minimal = true;
};

struct DerivedWindow {
    int w = 0;
    std::vector<WindowVertex> vertices;
    std::vector<ARArrowInfo> arrows;  // indices into vertices
    std::vector<std::pair<std::string, std::string>> gluing;  // ("repid|k", "repid'|k+1")
    size_t shift_orbits = 0;
};

// Copy k+1 holds the complexes shifted one cell to the right relative to
// copy k: vertex X in copy k is identified with its right shift in copy
// k+1 whenever both lie in the subquiver.  Iterating the identification
// glues the first-cell and last-cell stalks the way the boundary of the
// window demands, and the count of classes modulo the copy index is the
// number of shift orbits.
inline DerivedWindow derived_window(const PathAlgebra& A, const IndecomposableSet& set,
                                    const ARQuiver& gbar, int w) {
    DerivedWindow out;
    out.w = w;
    size_t V = gbar.vertices.size();
    // right-shift partner inside the subquiver: X -> include_left([X]_*)
    std::vector<int> shift_to(V, -1);
    std::vector<std::string> keys(V);
    for (size_t i = 0; i < V; ++i)
        keys[i] = canonical_complex_key(A, set.reps[gbar.vertices[i].rep_index].X);
    for (size_t i = 0; i < V; ++i) {
        const ProjComplex& X = set.reps[gbar.vertices[i].rep_index].X;
        if (!X.cell(X.n() - 1).is_zero()) continue;
        ProjComplex S = include_left(A, truncate_right(A, X));
        std::string sk = canonical_complex_key(A, S);
        for (size_t j = 0; j < V; ++j)
            if (keys[j] == sk) {
                shift_to[i] = static_cast<int>(j);
                break;
            }
    }
    // shift orbits (modulo copy index)
    {
        std::vector<size_t> parent(V);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<size_t(size_t)> find = [&](size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (size_t i = 0; i < V; ++i)
            if (shift_to[i] >= 0) parent[find(i)] = find(size_t(shift_to[i]));
        std::set<size_t> roots;
        for (size_t i = 0; i < V; ++i) roots.insert(find(i));
        out.shift_orbits = roots.size();
    }
    // window vertices: (i, k) glued along shift_to
    int copies = 2 * w + 1;
    auto node = [&](size_t i, int k) { return i * size_t(copies) + size_t(k + w); };
    std::vector<size_t> parent(V * size_t(copies));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<size_t(size_t)> find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i < V; ++i) {
        if (shift_to[i] < 0) continue;
        for (int k = -w; k < w; ++k)
            parent[find(node(i, k))] = find(node(size_t(shift_to[i]), k + 1));
        for (int k = -w; k < w; ++k)
            out.gluing.emplace_back(gbar.vertices[i].id + "|" + std::to_string(k),
                                    gbar.vertices[size_t(shift_to[i])].id + "|" +
                                        std::to_string(k + 1));
    }
    // classes -> window vertices, canonical member = lexicographically least
    // (copy, rep id)
    std::map<size_t, std::vector<std::pair<int, size_t>>> classes;  // root -> [(k, i)]
    for (size_t i = 0; i < V; ++i)
        for (int k = -w; k <= w; ++k) classes[find(node(i, k))].emplace_back(k, i);
    std::map<size_t, size_t> root_to_out;
    std::vector<std::pair<std::string, size_t>> ordered;  // (id, root)
    for (auto& [root, members] : classes) {
        std::sort(members.begin(), members.end(),
                  [&](const std::pair<int, size_t>& a, const std::pair<int, size_t>& b) {
                      if (a.first != b.first) return a.first < b.first;
                      return gbar.vertices[a.second].id < gbar.vertices[b.second].id;
                  });
        std::string id =
            gbar.vertices[members[0].second].id + "|" + std::to_string(members[0].first);
        ordered.emplace_back(id, root);
    }
    std::sort(ordered.begin(), ordered.end());
    for (const auto& [id, root] : ordered) {
        WindowVertex wv;
        wv.id = id;
        for (const auto& [k, i] : classes[root]) {
            wv.members.emplace_back(gbar.vertices[i].id, k);
            wv.e_proj = wv.e_proj || gbar.vertices[i].e_proj;
            wv.e_inj = wv.e_inj || gbar.vertices[i].e_inj;
            wv.minimal = wv.minimal && gbar.vertices[i].minimal;
        }
        root_to_out[root] = out.vertices.size();
        out.vertices.push_back(std::move(wv));
    }
    // arrows replicated per copy; identified vertices merge arrow sets
    std::map<std::pair<size_t, size_t>, size_t> arrow_mult;
    for (const ARArrowInfo& a : gbar.arrows)
        for (int k = -w; k <= w; ++k) {
            size_t s = root_to_out[find(node(a.src, k))];
            size_t d = root_to_out[find(node(a.dst, k))];
            auto key = std::make_pair(s, d);
            auto it = arrow_mult.find(key);
            if (it == arrow_mult.end())
                arrow_mult[key] = a.mult;
            else if (it->second < a.mult)
                it->second = a.mult;
        }
    for (const auto& [sd, m] : arrow_mult) out.arrows.push_back({sd.first, sd.second, m});
    return out;
}

// Semisimple short-circuit: the derived quiver is a line of stalk vertices
// per simple, no arrows.
inline DerivedWindow semisimple_window(const PathAlgebra& A, int w) {
    DerivedWindow out;
    out.w = w;
    out.shift_orbits = A.num_vertices();
    for (int k = -w; k <= w; ++k)
        for (size_t v = 0; v < A.num_vertices(); ++v) {
            WindowVertex wv;
            wv.id = "P" + A.quiver().vertices[v] + "|" + std::to_string(k);
            wv.members.emplace_back("P" + A.quiver().vertices[v], k);
            out.vertices.push_back(std::move(wv));
        }
    std::sort(out.vertices.begin(), out.vertices.end(),
              [](const WindowVertex& a, const WindowVertex& b) { return a.id < b.id; });
    return out;
}

// ---- exports ----------------------------------------------------------------

inline std::string export_dot(const ARQuiver& q, const std::string& name = "ar_quiver") {
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n";
    for (const ARVertexInfo& v : q.vertices) {
        os << "  \"" << v.id << "\" [label=\"" << v.id << "\", eproj="
           << (v.e_proj ? "true" : "false") << ", einj=" << (v.e_inj ? "true" : "false")
           << ", ext_left=" << (v.ext_left ? "true" : "false")
           << ", ext_right=" << (v.ext_right ? "true" : "false") << "];\n";
    }
    std::vector<ARArrowInfo> arrows = q.arrows;
    std::sort(arrows.begin(), arrows.end(), [&](const ARArrowInfo& a, const ARArrowInfo& b) {
        if (q.vertices[a.src].id != q.vertices[b.src].id)
            return q.vertices[a.src].id < q.vertices[b.src].id;
        return q.vertices[a.dst].id < q.vertices[b.dst].id;
    });
    for (const ARArrowInfo& a : arrows)
        os << "  \"" << q.vertices[a.src].id << "\" -> \"" << q.vertices[a.dst].id
           << "\" [label=\"" << a.mult << "\"];\n";
    os << "}\n";
    return os.str();
}

inline json quiver_to_json(const ARQuiver& q) {
    json vs = json::array();
    for (const ARVertexInfo& v : q.vertices)
        vs.push_back({{"id", v.id},
                      {"flags",
                       {{"e_proj", v.e_proj},
                        {"e_inj", v.e_inj},
                        {"minimal", v.minimal},
                        {"ext_left", v.ext_left},
                        {"ext_right", v.ext_right}}}});
    std::vector<ARArrowInfo> arrows = q.arrows;
    std::sort(arrows.begin(), arrows.end(), [&](const ARArrowInfo& a, const ARArrowInfo& b) {
        if (q.vertices[a.src].id != q.vertices[b.src].id)
            return q.vertices[a.src].id < q.vertices[b.src].id;
        return q.vertices[a.dst].id < q.vertices[b.dst].id;
    });
    json as = json::array();
    for (const ARArrowInfo& a : arrows)
        as.push_back(
            {{"src", q.vertices[a.src].id}, {"dst", q.vertices[a.dst].id}, {"mult", a.mult}});
    return json{{"vertices", vs}, {"arrows", as}, {"gluing", json::array()}};
}

inline ARQuiver quiver_from_json(const json& j) {
    ARQuiver q;
    for (const json& vj : j.at("vertices")) {
        ARVertexInfo v;
        v.id = vj.at("id").get<std::string>();
        const json& f = vj.at("flags");
        v.e_proj = f.at("e_proj").get<bool>();
        v.e_inj = f.at("e_inj").get<bool>();
        v.minimal = f.at("minimal").get<bool>();
        v.ext_left = f.at("ext_left").get<bool>();
        v.ext_right = f.at("ext_right").get<bool>();
        q.vertices.push_back(std::move(v));
    }
    for (const json& aj : j.at("arrows")) {
        int s = q.vertex_by_id(aj.at("src").get<std::string>());
        int d = q.vertex_by_id(aj.at("dst").get<std::string>());
        if (s < 0 || d < 0) throw Error(ErrKind::MalformedInput, "arrow endpoint unknown");
        q.arrows.push_back({size_t(s), size_t(d), aj.at("mult").get<size_t>()});
    }
    return q;
}

inline json window_to_json(const DerivedWindow& w) {
    json vs = json::array();
    for (const WindowVertex& v : w.vertices) {
        json ms = json::array();
        for (const auto& [rep, k] : v.members) ms.push_back({{"rep", rep}, {"copy", k}});
        vs.push_back({{"id", v.id},
                      {"members", ms},
                      {"flags", {{"e_proj", v.e_proj}, {"e_inj", v.e_inj}, {"minimal", v.minimal}}}});
    }
    std::vector<ARArrowInfo> arrows = w.arrows;
    std::sort(arrows.begin(), arrows.end(), [&](const ARArrowInfo& a, const ARArrowInfo& b) {
        if (w.vertices[a.src].id != w.vertices[b.src].id)
            return w.vertices[a.src].id < w.vertices[b.src].id;
        return w.vertices[a.dst].id < w.vertices[b.dst].id;
    });
    json as = json::array();
    for (const ARArrowInfo& a : arrows)
        as.push_back(
            {{"src", w.vertices[a.src].id}, {"dst", w.vertices[a.dst].id}, {"mult", a.mult}});
    json gl = json::array();
    for (const auto& [from, to] : w.gluing) gl.push_back({{"from", from}, {"to", to}});
    return json{{"window", w.w},
                {"vertices", vs},
                {"arrows", as},
                {"gluing", gl},
                {"shift_orbits", w.shift_orbits}};
}

inline std::string export_dot(const DerivedWindow& w, const std::string& name = "derived_window") {
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n";
    for (const WindowVertex& v : w.vertices)
        os << "  \"" << v.id << "\" [label=\"" << v.id << "\"];\n";
    std::vector<ARArrowInfo> arrows = w.arrows;
    std::sort(arrows.begin(), arrows.end(), [&](const ARArrowInfo& a, const ARArrowInfo& b) {
        if (w.vertices[a.src].id != w.vertices[b.src].id)
            return w.vertices[a.src].id < w.vertices[b.src].id;
        return w.vertices[a.dst].id < w.vertices[b.dst].id;
    });
    for (const ARArrowInfo& a : arrows)
        os << "  \"" << w.vertices[a.src].id << "\" -> \"" << w.vertices[a.dst].id
           << "\" [label=\"" << a.mult << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace cnproj
