// JSON input/output for algebras and complexes, canonical serializations
// (the cache-key inputs), complex signatures, and the on-disk result cache.
#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "cnproj/algebra.hpp"
#include "cnproj/complexes.hpp"
#include "cnproj/sha256.hpp"

namespace cnproj {

using json = nlohmann::json;

// ---- algebra ---------------------------------------------------------------

inline json algebra_spec_to_json(const AlgebraSpec& spec) {
    json arrows = json::array();
    for (const Arrow& a : spec.quiver.arrows)
        arrows.push_back({{"id", a.id},
                          {"source", spec.quiver.vertices[size_t(a.src)]},
                          {"target", spec.quiver.vertices[size_t(a.tgt)]}});
    json rels = json::array();
    for (const auto& r : spec.relations) rels.push_back(r);
    return json{{"field", {{"p", spec.p}}},
                {"vertices", spec.quiver.vertices},
                {"arrows", arrows},
                {"relations", rels}};
}

inline AlgebraSpec algebra_spec_from_json(const json& j) {
    AlgebraSpec spec;
    try {
        if (j.contains("field")) spec.p = j.at("field").at("p").get<uint32_t>();
        spec.quiver.vertices = j.at("vertices").get<std::vector<std::string>>();
        for (const json& a : j.at("arrows")) {
            Arrow ar;
            ar.id = a.at("id").get<std::string>();
            ar.src = spec.quiver.vertex_index(a.at("source").get<std::string>());
            ar.tgt = spec.quiver.vertex_index(a.at("target").get<std::string>());
            if (ar.src < 0 || ar.tgt < 0)
                throw Error(ErrKind::MalformedInput, "arrow " + ar.id + " has undeclared endpoint");
            spec.quiver.arrows.push_back(ar);
        }
        if (j.contains("relations"))
            spec.relations = j.at("relations").get<std::vector<std::vector<std::string>>>();
        if (j.contains("path_guard")) spec.path_guard = j.at("path_guard").get<size_t>();
    } catch (const json::exception& e) {
        throw Error(ErrKind::MalformedInput, std::string("bad algebra file: ") + e.what());
    }
    return spec;
}

// Canonical bytes: nlohmann objects already serialize with sorted keys;
// arrays keep declared order.
inline std::string canonical_algebra_json(const AlgebraSpec& spec) {
    return algebra_spec_to_json(spec).dump();
}

inline PathAlgebra load_algebra(const AlgebraSpec& spec) {
    PathAlgebra A = PathAlgebra::build(spec);
    A.set_sha256(sha256_hex(canonical_algebra_json(spec)));
    return A;
}

inline AlgebraSpec read_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrKind::MalformedInput, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrKind::MalformedInput, path + ": " + e.what());
    }
    return algebra_spec_from_json(j);
}

// ---- complexes -------------------------------------------------------------

inline json complex_to_json(const PathAlgebra& A, const ProjComplex& X) {
    const Quiver& q = A.quiver();
    json cells = json::array();
    for (const Cell& c : X.cells()) {
        json m = json::object();
        for (size_t v = 0; v < c.mult.size(); ++v)
            if (c.mult[v]) m[q.vertices[v]] = c.mult[v];
        cells.push_back(m);
    }
    json diffs = json::array();
    for (const BlockMat& d : X.diffs()) {
        json rows = json::array();
        for (size_t r = 0; r < d.rows; ++r) {
            json row = json::array();
            for (size_t c = 0; c < d.cols; ++c) {
                json entry = json::array();
                for (const auto& [pi, coeff] : d.at(r, c)) {
                    json ids = json::array();
                    for (int a : A.path(pi).arrows) ids.push_back(q.arrows[size_t(a)].id);
                    entry.push_back({{"path", ids}, {"coeff", coeff}});
                }
                row.push_back(entry);
            }
            rows.push_back(row);
        }
        diffs.push_back(rows);
    }
    return json{{"n", X.n()}, {"cells", cells}, {"diffs", diffs}};
}

inline ProjComplex complex_from_json(const PathAlgebra& A, const json& j) {
    const Quiver& q = A.quiver();
    std::vector<Cell> cells;
    std::vector<BlockMat> diffs;
    try {
        size_t n = j.at("n").get<size_t>();
        for (const json& cj : j.at("cells")) {
            Cell c(A.num_vertices());
            for (auto it = cj.begin(); it != cj.end(); ++it) {
                int v = q.vertex_index(it.key());
                if (v < 0) throw Error(ErrKind::MalformedInput, "unknown vertex " + it.key());
                c.mult[size_t(v)] = it.value().get<int>();
            }
            cells.push_back(c);
        }
        if (cells.size() != n) throw Error(ErrKind::NotAComplex, "cell count does not match n");
        const json& dj = j.at("diffs");
        for (size_t i = 0; i + 1 < n; ++i) {
            size_t rows = cells[i + 1].num_summands();
            size_t cols = cells[i].num_summands();
            BlockMat d(rows, cols);
            const json& mj = dj.at(i);
            if (mj.size() != rows)
                throw Error(ErrKind::NotAComplex,
                            "differential " + std::to_string(i + 1) + " has wrong row count");
            std::vector<int> tgt = cells[i + 1].summands();
            for (size_t r = 0; r < rows; ++r) {
                const json& rj = mj.at(r);
                if (rj.size() != cols)
                    throw Error(ErrKind::NotAComplex,
                                "differential " + std::to_string(i + 1) + " has wrong column count");
                for (size_t c = 0; c < cols; ++c) {
                    Elem e;
                    for (const json& term : rj.at(c)) {
                        std::vector<std::string> ids =
                            term.at("path").get<std::vector<std::string>>();
                        int64_t coeff = term.at("coeff").get<int64_t>();
                        uint32_t cv = A.field().reduce(coeff);
                        if (!cv) continue;
                        int pi;
                        if (ids.empty()) {
                            pi = A.trivial_path(tgt[r]);
                        } else {
                            // locate the basis path with these arrows
                            std::vector<int> arrows;
                            for (const std::string& id : ids) {
                                int ai = q.arrow_index(id);
                                if (ai < 0)
                                    throw Error(ErrKind::BadEntry, "unknown arrow " + id);
                                arrows.push_back(ai);
                            }
                            pi = -1;
                            for (size_t bi = 0; bi < A.dim(); ++bi)
                                if (A.path(static_cast<int>(bi)).arrows == arrows) {
                                    pi = static_cast<int>(bi);
                                    break;
                                }
                            if (pi < 0)
                                throw Error(ErrKind::BadEntry,
                                            "path is zero in the algebra (killed by a relation) or not composable");
                        }
                        e.emplace_back(pi, cv);
                    }
                    std::sort(e.begin(), e.end());
                    d.at(r, c) = std::move(e);
                }
            }
            diffs.push_back(std::move(d));
        }
    } catch (const json::exception& e) {
        throw Error(ErrKind::MalformedInput, std::string("bad complex file: ") + e.what());
    }
    return ProjComplex::make(A, std::move(cells), std::move(diffs));
}

inline ProjComplex read_complex_file(const PathAlgebra& A, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrKind::MalformedInput, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrKind::MalformedInput, path + ": " + e.what());
    }
    return complex_from_json(A, j);
}

// Canonical bytes of a complex; the dedup key and the deterministic sort key
// of every enumeration.
inline std::string canonical_complex_key(const PathAlgebra& A, const ProjComplex& X) {
    return complex_to_json(A, X).dump();
}

// Human-facing signature, e.g. "P3>P2>P1@1-3" (cells restricted to the
// support interval).
inline std::string complex_signature(const PathAlgebra& A, const ProjComplex& X) {
    auto [a, b] = X.support();
    if (!a) return "0";
    const Quiver& q = A.quiver();
    std::string s;
    for (size_t i = a; i <= b; ++i) {
        if (i > a) s += ">";
        const Cell& c = X.cell(i - 1);
        bool first = true;
        for (size_t v = 0; v < c.mult.size(); ++v) {
            if (!c.mult[v]) continue;
            if (!first) s += "+";
            first = false;
            s += "P" + q.vertices[v];
            if (c.mult[v] > 1) s += "^" + std::to_string(c.mult[v]);
        }
        if (first) s += "0";
    }
    s += "@" + std::to_string(a) + "-" + std::to_string(b);
    return s;
}

// ---- cache -----------------------------------------------------------------

struct CacheConfig {
    std::filesystem::path dir;
    bool enabled = true;
};

inline std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("SGD_CACHE_DIR")) return std::filesystem::path(env);
    return std::filesystem::path(".cnproj-cache");
}

// Read a cached artifact; on a corrupt entry warn and fall through to
// recomputation.
inline std::optional<std::string> cache_read(const CacheConfig& cfg, const std::string& algebra_sha,
                                             const std::string& name) {
    if (!cfg.enabled) return std::nullopt;
    std::filesystem::path p = cfg.dir / algebra_sha / name;
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string bytes = ss.str();
    try {
        json parsed = json::parse(bytes);
        (void)parsed;
    } catch (const json::exception&) {
        std::cerr << "warning: corrupt cache entry " << p.string() << ", recomputing\n";
        return std::nullopt;
    }
    return bytes;
}

inline void cache_write(const CacheConfig& cfg, const std::string& algebra_sha,
                        const std::string& name, const std::string& bytes) {
    if (!cfg.enabled) return;
    std::filesystem::path dir = cfg.dir / algebra_sha;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return;
    std::filesystem::path tmp = dir / (name + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary);
        out << bytes;
    }
    std::filesystem::rename(tmp, dir / name, ec);
}

}  // namespace cnproj
