// The bound path algebra Lambda = KQ/I for a quiver Q with monomial
// relations: path basis, multiplication, hom bases between the
// indecomposable projectives, and matrices of left multiplication.
//
// Conventions (kept rigid throughout the library):
//   * paths compose left-to-right: pq means "p then q", defined when
//     target(p) = source(q);
//   * right modules, P_v = e_v Lambda with basis the paths of source v;
//   * Hom(P_a, P_b) = e_b Lambda e_a, i.e. the paths with source b and
//     target a, acting by left multiplication;
//   * composition of homs (g after f) is the algebra product g * f.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cnproj/errors.hpp"
#include "cnproj/field.hpp"
#include "cnproj/linalg.hpp"

namespace cnproj {

struct Arrow {
    std::string id;
    int src = 0;
    int tgt = 0;
};

struct Quiver {
    std::vector<std::string> vertices;  // canonical order = declared order
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& id) const {
        for (size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == id) return static_cast<int>(i);
        return -1;
    }
    int arrow_index(const std::string& id) const {
        for (size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].id == id) return static_cast<int>(i);
        return -1;
    }
};

// A basis path: trivial (arrows empty, src = tgt) or a relation-free arrow
// sequence.
struct Path {
    int src = 0;
    int tgt = 0;
    std::vector<int> arrows;

    bool trivial() const { return arrows.empty(); }
};

// Sparse algebra element: sorted (basis index, nonzero coefficient) pairs.
using Elem = std::vector<std::pair<int, uint32_t>>;

struct AlgebraSpec {
    uint32_t p = 2;
    Quiver quiver;
    std::vector<std::vector<std::string>> relations;  // arrow-id sequences
    size_t path_guard = 10000;
};

class PathAlgebra {
public:
    static PathAlgebra build(const AlgebraSpec& spec) {
        PathAlgebra A;
        A.F_ = PrimeField(spec.p);
        A.q_ = spec.quiver;
        A.validate_quiver();
        A.compile_relations(spec.relations);
        A.enumerate_basis(spec.path_guard);
        A.index_basis();
        return A;
    }

    const PrimeField& field() const { return F_; }
    const Quiver& quiver() const { return q_; }
    size_t num_vertices() const { return q_.vertices.size(); }
    size_t dim() const { return basis_.size(); }
    const std::vector<Path>& basis() const { return basis_; }
    const Path& path(int i) const { return basis_[size_t(i)]; }
    const std::vector<std::vector<std::string>>& relations_raw() const { return relations_raw_; }

    int trivial_path(int v) const { return trivial_[size_t(v)]; }

    std::string path_name(int i) const {
        const Path& p = basis_[size_t(i)];
        if (p.trivial()) return "e_" + q_.vertices[size_t(p.src)];
        std::string s;
        for (size_t k = 0; k < p.arrows.size(); ++k) {
            if (k) s += "*";
            s += q_.arrows[size_t(p.arrows[k])].id;
        }
        return s;
    }

    // Product of basis paths: index of pq, or -1 when non-composable or
    // killed by a relation.
    int mult_paths(int i, int j) const {
        const Path& a = basis_[size_t(i)];
        const Path& b = basis_[size_t(j)];
        if (a.tgt != b.src) return -1;
        if (a.trivial()) return j;
        if (b.trivial()) return i;
        std::vector<int> cat = a.arrows;
        cat.insert(cat.end(), b.arrows.begin(), b.arrows.end());
        // a and b are individually relation-free, so any new relation
        // subword must straddle the junction.
        if (killed_across_junction(cat, a.arrows.size())) return -1;
        auto it = path_index_.find(key_of(a.src, cat));
        return it == path_index_.end() ? -1 : it->second;
    }

    Elem multiply(const Elem& a, const Elem& b) const {
        std::map<int, uint32_t> acc;
        for (const auto& [i, ci] : a)
            for (const auto& [j, cj] : b) {
                int k = mult_paths(i, j);
                if (k < 0) continue;
                uint32_t& slot = acc[k];
                slot = F_.add(slot, F_.mul(ci, cj));
            }
        Elem out;
        for (const auto& [k, c] : acc)
            if (c) out.emplace_back(k, c);
        return out;
    }

    static Elem add(const PrimeField& F, const Elem& a, const Elem& b) {
        std::map<int, uint32_t> acc;
        for (const auto& [i, c] : a) acc[i] = c;
        for (const auto& [i, c] : b) {
            uint32_t& slot = acc[i];
            slot = F.add(slot, c);
        }
        Elem out;
        for (const auto& [k, c] : acc)
            if (c) out.emplace_back(k, c);
        return out;
    }

    Elem scale(uint32_t c, const Elem& a) const {
        Elem out;
        if (c == 0) return out;
        for (const auto& [i, ci] : a) {
            uint32_t v = F_.mul(c, ci);
            if (v) out.emplace_back(i, v);
        }
        return out;
    }

    // Paths with the given source and target, in canonical basis order.
    const std::vector<int>& paths_from_to(int s, int t) const {
        return from_to_[size_t(s)][size_t(t)];
    }

    // Basis of Hom(P_a, P_b) = e_b Lambda e_a: paths with source b, target a.
    const std::vector<int>& hom_paths(int a, int b) const { return paths_from_to(b, a); }

    // Nontrivial part of a hom component (entries of radical morphisms).
    std::vector<int> hom_paths_radical(int a, int b) const {
        std::vector<int> out;
        for (int i : hom_paths(a, b))
            if (!basis_[size_t(i)].trivial()) out.push_back(i);
        return out;
    }

    // Basis of the projective P_v (paths of source v) and dim P_v.
    const std::vector<int>& proj_basis(int v) const { return proj_basis_[size_t(v)]; }
    size_t proj_dim(int v) const { return proj_basis_[size_t(v)].size(); }

    // Position of a path inside the basis of its source projective.
    size_t proj_pos(int path) const { return proj_pos_[size_t(path)]; }

    // Matrix of left multiplication by x in Hom(P_a, P_b): columns indexed by
    // the basis of P_a, rows by the basis of P_b.
    Matrix rep_matrix(const Elem& x, int a, int b) const {
        Matrix m(F_, proj_dim(b), proj_dim(a));
        const std::vector<int>& cols = proj_basis_[size_t(a)];
        for (size_t c = 0; c < cols.size(); ++c)
            for (const auto& [t, cf] : x) {
                int prod = mult_paths(t, cols[c]);
                if (prod < 0) continue;
                size_t r = proj_pos_[size_t(prod)];
                m(r, c) = F_.add(m(r, c), cf);
            }
        return m;
    }

    bool is_radical(const Elem& x) const {
        for (const auto& [i, c] : x)
            if (basis_[size_t(i)].trivial() && c) return false;
        return true;
    }

    // Canonical serialization of the defining data; the cache-key input.
    std::string canonical_json() const;  // defined in io.hpp

    const std::string& sha256() const { return sha_; }
    void set_sha256(std::string s) { sha_ = std::move(s); }

private:
    void validate_quiver() {
        if (q_.vertices.empty())
            throw Error(ErrKind::MalformedInput, "quiver has no vertices");
        for (size_t i = 0; i < q_.vertices.size(); ++i)
            for (size_t j = i + 1; j < q_.vertices.size(); ++j)
                if (q_.vertices[i] == q_.vertices[j])
                    throw Error(ErrKind::MalformedInput, "duplicate vertex id " + q_.vertices[i]);
        for (size_t i = 0; i < q_.arrows.size(); ++i) {
            const Arrow& a = q_.arrows[i];
            if (a.src < 0 || size_t(a.src) >= q_.vertices.size() || a.tgt < 0 ||
                size_t(a.tgt) >= q_.vertices.size())
                throw Error(ErrKind::MalformedInput, "arrow " + a.id + " has undeclared endpoint");
            for (size_t j = i + 1; j < q_.arrows.size(); ++j)
                if (q_.arrows[j].id == a.id)
                    throw Error(ErrKind::MalformedInput, "duplicate arrow id " + a.id);
        }
    }

    void compile_relations(const std::vector<std::vector<std::string>>& rels) {
        relations_raw_ = rels;
        for (const auto& r : rels) {
            if (r.size() < 2)
                throw Error(ErrKind::MalformedRelation, "relation shorter than two arrows");
            std::vector<int> ids;
            for (const std::string& aid : r) {
                int ai = q_.arrow_index(aid);
                if (ai < 0)
                    throw Error(ErrKind::MalformedRelation, "relation uses unknown arrow " + aid);
                ids.push_back(ai);
            }
            for (size_t k = 0; k + 1 < ids.size(); ++k)
                if (q_.arrows[size_t(ids[k])].tgt != q_.arrows[size_t(ids[k + 1])].src)
                    throw Error(ErrKind::MalformedRelation, "relation path is not composable");
            relations_.push_back(std::move(ids));
        }
    }

    bool contains_relation(const std::vector<int>& arrows) const {
        for (const auto& rel : relations_) {
            if (rel.size() > arrows.size()) continue;
            for (size_t off = 0; off + rel.size() <= arrows.size(); ++off) {
                bool hit = true;
                for (size_t k = 0; k < rel.size(); ++k)
                    if (arrows[off + k] != rel[k]) { hit = false; break; }
                if (hit) return true;
            }
        }
        return false;
    }

    bool killed_across_junction(const std::vector<int>& cat, size_t cut) const {
        for (const auto& rel : relations_) {
            if (rel.size() > cat.size()) continue;
            size_t lo = cut >= rel.size() ? cut - rel.size() + 1 : 0;
            size_t hi = std::min(cut, cat.size() - rel.size());
            for (size_t off = lo; off <= hi; ++off) {
                bool hit = true;
                for (size_t k = 0; k < rel.size(); ++k)
                    if (cat[off + k] != rel[k]) { hit = false; break; }
                if (hit) return true;
            }
        }
        return false;
    }

    void enumerate_basis(size_t guard) {
        size_t nv = q_.vertices.size();
        std::vector<Path> frontier;
        for (size_t v = 0; v < nv; ++v) {
            Path e;
            e.src = e.tgt = static_cast<int>(v);
            basis_.push_back(e);
            frontier.push_back(e);
        }
        while (!frontier.empty()) {
            std::vector<Path> next;
            for (const Path& p : frontier)
                for (size_t ai = 0; ai < q_.arrows.size(); ++ai) {
                    if (q_.arrows[ai].src != p.tgt) continue;
                    Path np = p;
                    np.arrows.push_back(static_cast<int>(ai));
                    np.tgt = q_.arrows[ai].tgt;
                    if (contains_relation(np.arrows)) continue;
                    basis_.push_back(np);
                    if (basis_.size() > guard)
                        throw Error(ErrKind::InfiniteDimensional,
                                    "path count exceeded guard of " + std::to_string(guard) +
                                        "; the algebra looks infinite-dimensional");
                    next.push_back(np);
                }
            frontier = std::move(next);
        }
        std::sort(basis_.begin(), basis_.end(), [this](const Path& a, const Path& b) {
            if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
            if (a.trivial()) return a.src < b.src;
            for (size_t k = 0; k < a.arrows.size(); ++k) {
                const std::string& ia = q_.arrows[size_t(a.arrows[k])].id;
                const std::string& ib = q_.arrows[size_t(b.arrows[k])].id;
                if (ia != ib) return ia < ib;
            }
            return false;
        });
    }

    std::string key_of(int src, const std::vector<int>& arrows) const {
        std::string k = std::to_string(src);
        for (int a : arrows) {
            k.push_back('/');
            k += std::to_string(a);
        }
        return k;
    }

    void index_basis() {
        size_t nv = q_.vertices.size();
        trivial_.assign(nv, -1);
        from_to_.assign(nv, std::vector<std::vector<int>>(nv));
        proj_basis_.assign(nv, {});
        proj_pos_.assign(basis_.size(), 0);
        for (size_t i = 0; i < basis_.size(); ++i) {
            const Path& p = basis_[i];
            path_index_[key_of(p.src, p.arrows)] = static_cast<int>(i);
            if (p.trivial()) trivial_[size_t(p.src)] = static_cast<int>(i);
            from_to_[size_t(p.src)][size_t(p.tgt)].push_back(static_cast<int>(i));
            proj_pos_[i] = proj_basis_[size_t(p.src)].size();
            proj_basis_[size_t(p.src)].push_back(static_cast<int>(i));
        }
    }

    PrimeField F_;
    Quiver q_;
    std::vector<std::vector<int>> relations_;
    std::vector<std::vector<std::string>> relations_raw_;
    std::vector<Path> basis_;
    std::map<std::string, int> path_index_;
    std::vector<int> trivial_;
    std::vector<std::vector<std::vector<int>>> from_to_;
    std::vector<std::vector<int>> proj_basis_;
    std::vector<size_t> proj_pos_;
    std::string sha_;
};

}  // namespace cnproj
