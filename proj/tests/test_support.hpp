// Shared fixtures and small builders for the test suites.
#pragma once

#include <string>

#include "cnproj/io.hpp"

#ifndef CNPROJ_FIXTURE_DIR
#define CNPROJ_FIXTURE_DIR "tests/fixtures"
#endif

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
    return std::string(CNPROJ_FIXTURE_DIR) + "/" + name;
}

inline cnproj::PathAlgebra fixture_algebra(const std::string& name, uint32_t p = 0) {
    cnproj::AlgebraSpec spec = cnproj::read_algebra_file(fixture_path(name));
    if (p) spec.p = p;
    return cnproj::load_algebra(spec);
}

// the quiver with one vertex and a loop x, bound by x*x = 0
inline cnproj::PathAlgebra loop_algebra(uint32_t p = 2) {
    cnproj::AlgebraSpec spec;
    spec.p = p;
    spec.quiver.vertices = {"1"};
    spec.quiver.arrows = {{"x", 0, 0}};
    spec.relations = {{"x", "x"}};
    return cnproj::load_algebra(spec);
}

inline cnproj::Cell make_cell(const cnproj::PathAlgebra& A,
                              std::initializer_list<std::pair<const char*, int>> mults) {
    cnproj::Cell c(A.num_vertices());
    for (const auto& [vid, m] : mults) c.mult[size_t(A.quiver().vertex_index(vid))] = m;
    return c;
}

inline cnproj::Elem path_elem(const cnproj::PathAlgebra& A,
                              std::initializer_list<const char*> arrow_ids, uint32_t coeff = 1) {
    std::vector<int> arrows;
    for (const char* id : arrow_ids) arrows.push_back(A.quiver().arrow_index(id));
    for (size_t i = 0; i < A.dim(); ++i)
        if (A.path(int(i)).arrows == arrows) return {{int(i), coeff}};
    throw std::runtime_error("path not in basis");
}

inline cnproj::Elem trivial_elem(const cnproj::PathAlgebra& A, const char* vid, uint32_t coeff = 1) {
    return {{A.trivial_path(A.quiver().vertex_index(vid)), coeff}};
}

// Two-cell complex P_src -> P_tgt with a single differential entry.
inline cnproj::ProjComplex two_term(const cnproj::PathAlgebra& A, const char* c1, const char* c2,
                                    const cnproj::Elem& d) {
    cnproj::Cell a = make_cell(A, {{c1, 1}});
    cnproj::Cell b = make_cell(A, {{c2, 1}});
    cnproj::BlockMat m(1, 1);
    m.at(0, 0) = d;
    return cnproj::ProjComplex::make(A, {a, b}, {m});
}

}  // namespace testsupport
