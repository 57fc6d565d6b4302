#include <catch2/catch_amalgamated.hpp>

#include "cnproj/sha256.hpp"
#include "test_support.hpp"

using namespace cnproj;
using namespace testsupport;

TEST_CASE("sha256 reference vector") {
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    // two-block message
    CHECK(sha256_hex(std::string(64, 'a') + "b").size() == 64);
}

TEST_CASE("basis of the three-vertex line with one relation") {
    PathAlgebra A = fixture_algebra("a3_rel.json");
    CHECK(A.dim() == 5);
    std::vector<std::string> names;
    for (size_t i = 0; i < A.dim(); ++i) names.push_back(A.path_name(int(i)));
    CHECK(names == std::vector<std::string>{"e_1", "e_2", "e_3", "a", "b"});
}

TEST_CASE("basis of the one-point algebra") {
    PathAlgebra A = fixture_algebra("point.json");
    CHECK(A.dim() == 1);
    CHECK(A.proj_dim(0) == 1);
}

TEST_CASE("basis of the six-vertex line with three relations") {
    PathAlgebra A = fixture_algebra("a6_rel.json");
    CHECK(A.dim() == 12);
    // the only surviving length-two path
    size_t len2 = 0;
    std::string survivor;
    for (size_t i = 0; i < A.dim(); ++i)
        if (A.path(int(i)).arrows.size() == 2) {
            ++len2;
            survivor = A.path_name(int(i));
        }
    CHECK(len2 == 1);
    CHECK(survivor == "c*d");
}

TEST_CASE("malformed inputs are rejected") {
    AlgebraSpec spec;
    spec.quiver.vertices = {"1", "2", "3"};
    spec.quiver.arrows = {{"a", 0, 1}, {"b", 1, 2}};
    SECTION("non-composable relation") {
        spec.relations = {{"b", "a"}};
        CHECK_THROWS_MATCHES(PathAlgebra::build(spec), Error, Catch::Matchers::Predicate<Error>([](
            const Error& e) { return e.kind() == ErrKind::MalformedRelation; }));
    }
    SECTION("unknown arrow in relation") {
        spec.relations = {{"a", "zz"}};
        CHECK_THROWS_MATCHES(PathAlgebra::build(spec), Error, Catch::Matchers::Predicate<Error>([](
            const Error& e) { return e.kind() == ErrKind::MalformedRelation; }));
    }
    SECTION("relation too short") {
        spec.relations = {{"a"}};
        CHECK_THROWS_MATCHES(PathAlgebra::build(spec), Error, Catch::Matchers::Predicate<Error>([](
            const Error& e) { return e.kind() == ErrKind::MalformedRelation; }));
    }
    SECTION("duplicate arrow id") {
        spec.quiver.arrows = {{"a", 0, 1}, {"a", 1, 2}};
        CHECK_THROWS_MATCHES(PathAlgebra::build(spec), Error, Catch::Matchers::Predicate<Error>([](
            const Error& e) { return e.kind() == ErrKind::MalformedInput; }));
    }
    SECTION("duplicate vertex id") {
        spec.quiver.vertices = {"1", "1", "3"};
        CHECK_THROWS_MATCHES(PathAlgebra::build(spec), Error, Catch::Matchers::Predicate<Error>([](
            const Error& e) { return e.kind() == ErrKind::MalformedInput; }));
    }
}

TEST_CASE("an unbound cycle trips the path guard") {
    AlgebraSpec spec = read_algebra_file(fixture_path("cyclic.json"));
    CHECK_THROWS_MATCHES(PathAlgebra::build(spec), Error, Catch::Matchers::Predicate<Error>([](
        const Error& e) { return e.kind() == ErrKind::InfiniteDimensional; }));
}

TEST_CASE("multiplication follows concatenation with relations") {
    PathAlgebra A = fixture_algebra("a3_rel.json");
    Elem a = path_elem(A, {"a"});
    Elem b = path_elem(A, {"b"});
    CHECK(A.multiply(a, b).empty());  // killed by the relation
    Elem e2 = trivial_elem(A, "2");
    CHECK(A.multiply(e2, e2) == e2);
    CHECK(A.multiply(e2, b) == b);   // e_2 * b: source of b is 2
    CHECK(A.multiply(b, e2).empty());  // target of b is 3

    PathAlgebra B = fixture_algebra("a6_rel.json");
    Elem c = path_elem(B, {"c"});
    Elem d = path_elem(B, {"d"});
    CHECK(B.multiply(c, d) == path_elem(B, {"c", "d"}));
}

TEST_CASE("multiplication is bilinear over odd characteristic") {
    PathAlgebra A = fixture_algebra("a6_rel.json", 5);
    Elem x = path_elem(A, {"c"}, 2);
    Elem y = path_elem(A, {"d"}, 4);
    CHECK(A.multiply(x, y) == path_elem(A, {"c", "d"}, 3));  // 2*4 = 8 = 3 mod 5
}

TEST_CASE("hom bases between projectives") {
    PathAlgebra A = fixture_algebra("a3_rel.json");
    int v1 = A.quiver().vertex_index("1"), v2 = A.quiver().vertex_index("2"),
        v3 = A.quiver().vertex_index("3");
    // Hom(P_3, P_2) is spanned by the arrow from 2 to 3
    REQUIRE(A.hom_paths(v3, v2).size() == 1);
    CHECK(A.path_name(A.hom_paths(v3, v2)[0]) == "b");
    CHECK(A.hom_paths(v1, v3).empty());
    for (int v : {v1, v2, v3}) {
        REQUIRE(A.hom_paths(v, v).size() == 1);
        CHECK(A.path(A.hom_paths(v, v)[0]).trivial());
    }
}

TEST_CASE("the algebra dimension splits over the hom components") {
    for (const char* f : {"a3_rel.json", "a6_rel.json", "a2.json", "point.json"}) {
        PathAlgebra A = fixture_algebra(f);
        size_t total = 0;
        for (size_t u = 0; u < A.num_vertices(); ++u)
            for (size_t w = 0; w < A.num_vertices(); ++w)
                total += A.hom_paths(int(u), int(w)).size();
        CHECK(total == A.dim());
    }
}

TEST_CASE("rep_matrix of a single arrow") {
    PathAlgebra A = fixture_algebra("a3_rel.json");
    int v2 = A.quiver().vertex_index("2"), v3 = A.quiver().vertex_index("3");
    Matrix m = A.rep_matrix(path_elem(A, {"b"}), v3, v2);
    REQUIRE(m.rows() == 2);  // P_2 has basis e_2, b
    REQUIRE(m.cols() == 1);  // P_3 has basis e_3
    CHECK(m(0, 0) == 0);
    CHECK(m(1, 0) == 1);
}

TEST_CASE("rep_matrix of a trivial path is the identity") {
    PathAlgebra A = fixture_algebra("a6_rel.json");
    for (size_t v = 0; v < A.num_vertices(); ++v) {
        Matrix m = A.rep_matrix(Elem{{A.trivial_path(int(v)), 1}}, int(v), int(v));
        CHECK(m == Matrix::identity(A.field(), A.proj_dim(int(v))));
    }
}

TEST_CASE("rep_matrix is functorial") {
    PathAlgebra A = fixture_algebra("a3_rel.json");
    int v1 = A.quiver().vertex_index("1"), v2 = A.quiver().vertex_index("2"),
        v3 = A.quiver().vertex_index("3");
    // the composite through the relation vanishes
    Matrix prod = A.rep_matrix(path_elem(A, {"a"}), v2, v1) * A.rep_matrix(path_elem(A, {"b"}), v3, v2);
    CHECK(prod.is_zero());

    // on every composable pair of basis paths
    PathAlgebra B = fixture_algebra("a6_rel.json");
    for (size_t i = 0; i < B.dim(); ++i)
        for (size_t j = 0; j < B.dim(); ++j) {
            const Path& x = B.path(int(i));
            const Path& y = B.path(int(j));
            if (x.tgt != y.src) continue;
            // x in Hom(P_{x.tgt}, P_{x.src}), y in Hom(P_{y.tgt}, P_{y.src})
            Matrix lhs = B.rep_matrix(B.multiply({{int(i), 1}}, {{int(j), 1}}), y.tgt, x.src);
            Matrix rhs = B.rep_matrix({{int(i), 1}}, x.tgt, x.src) *
                         B.rep_matrix({{int(j), 1}}, y.tgt, y.src);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("associativity on every basis triple") {
    PathAlgebra A = fixture_algebra("a6_rel.json", 3);
    for (size_t i = 0; i < A.dim(); ++i)
        for (size_t j = 0; j < A.dim(); ++j)
            for (size_t k = 0; k < A.dim(); ++k) {
                Elem x{{int(i), 1}}, y{{int(j), 2}}, z{{int(k), 1}};
                CHECK(A.multiply(A.multiply(x, y), z) == A.multiply(x, A.multiply(y, z)));
            }
}

TEST_CASE("radical detection") {
    PathAlgebra A = fixture_algebra("a3_rel.json");
    CHECK(A.is_radical(path_elem(A, {"b"})));
    CHECK_FALSE(A.is_radical(trivial_elem(A, "2")));
    Elem mixed = PathAlgebra::add(A.field(), trivial_elem(A, "2"), path_elem(A, {"b"}));
    CHECK_FALSE(A.is_radical(mixed));
    // in an acyclic algebra every nontrivial basis path is radical
    for (size_t i = 0; i < A.dim(); ++i)
        if (!A.path(int(i)).trivial()) CHECK(A.is_radical(Elem{{int(i), 1}}));
}

TEST_CASE("loops bound by a relation stay finite-dimensional") {
    PathAlgebra A = loop_algebra();
    CHECK(A.dim() == 2);
    Elem x = path_elem(A, {"x"});
    CHECK(A.multiply(x, x).empty());
    CHECK(A.hom_paths(0, 0).size() == 2);
}

TEST_CASE("canonical serialization is stable and hashes consistently") {
    AlgebraSpec spec = read_algebra_file(fixture_path("a3_rel.json"));
    std::string c1 = canonical_algebra_json(spec);
    std::string c2 = canonical_algebra_json(read_algebra_file(fixture_path("a3_rel.json")));
    CHECK(c1 == c2);
    PathAlgebra A = load_algebra(spec);
    CHECK(A.sha256() == sha256_hex(c1));
    CHECK(A.sha256().size() == 64);
}
