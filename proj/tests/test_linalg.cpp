#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "cnproj/linalg.hpp"

using namespace cnproj;

namespace {

Matrix from_rows(PrimeField F, std::initializer_list<std::initializer_list<uint32_t>> rows) {
    size_t r = rows.size();
    size_t c = rows.begin()->size();
    Matrix m(F, r, c);
    size_t i = 0;
    for (const auto& row : rows) {
        size_t j = 0;
        for (uint32_t v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

std::vector<uint32_t> mat_apply(const Matrix& a, const std::vector<uint32_t>& x) {
    std::vector<uint32_t> y(a.rows(), 0);
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            y[i] = a.field().add(y[i], a.field().mul(a(i, j), x[j]));
    return y;
}

// every matrix of the given shape over F_p, in lexicographic order
void for_all_matrices(PrimeField F, size_t rows, size_t cols,
                      const std::function<void(const Matrix&)>& fn) {
    std::vector<uint32_t> v(rows * cols, 0);
    while (true) {
        Matrix m(F, rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
        fn(m);
        size_t k = 0;
        while (k < v.size() && ++v[k] == F.p()) v[k++] = 0;
        if (k == v.size()) break;
    }
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(1u << 16), std::invalid_argument);
    PrimeField F13(13);
    for (uint32_t a = 1; a < 13; ++a) CHECK(F13.mul(a, F13.inv(a)) == 1);
    CHECK(F13.reduce(-1) == 12);
    CHECK(F13.reduce(26) == 0);
    PrimeField F2(2);
    CHECK(F2.add(1, 1) == 0);
    CHECK_THROWS_AS(F2.inv(0), std::domain_error);
}

TEST_CASE("solve_linear on pinned cases") {
    PrimeField F2(2);
    SECTION("identity system") {
        Matrix a = Matrix::identity(F2, 2);
        auto sol = solve_linear(a, {1, 0});
        REQUIRE(sol);
        CHECK(sol->particular == std::vector<uint32_t>{1, 0});
        CHECK(sol->nullspace.empty());
    }
    SECTION("unsolvable") {
        Matrix a(F2, 1, 2);
        CHECK_FALSE(solve_linear(a, {1}));
    }
    SECTION("one equation, two unknowns") {
        Matrix a = from_rows(F2, {{1, 1}});
        auto sol = solve_linear(a, {0});
        REQUIRE(sol);
        CHECK(mat_apply(a, sol->particular) == std::vector<uint32_t>{0});
        REQUIRE(sol->nullspace.size() == 1);
        CHECK(sol->nullspace[0] == std::vector<uint32_t>{1, 1});
    }
}

TEST_CASE("nullspace on pinned cases") {
    PrimeField F2(2);
    CHECK(nullspace(Matrix::identity(F2, 3)).empty());
    CHECK(nullspace(Matrix(F2, 2, 2)).size() == 2);
    auto ns = nullspace(from_rows(F2, {{1, 1}, {1, 1}}));
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == std::vector<uint32_t>{1, 1});
}

TEST_CASE("invert on pinned cases") {
    PrimeField F2(2);
    CHECK(*invert(Matrix::identity(F2, 2)) == Matrix::identity(F2, 2));
    Matrix swap = from_rows(F2, {{0, 1}, {1, 0}});
    CHECK(*invert(swap) == swap);
    Matrix shear = from_rows(F2, {{1, 1}, {0, 1}});
    CHECK(*invert(shear) == shear);
    CHECK_FALSE(invert(from_rows(F2, {{1, 1}, {1, 1}})));
    CHECK_THROWS_AS(invert(Matrix(F2, 1, 2)), std::invalid_argument);
}

TEST_CASE("rank-nullity and solve consistency over every small matrix") {
    for (uint32_t p : {2u, 3u}) {
        PrimeField F(p);
        for_all_matrices(F, 2, 2, [&](const Matrix& a) {
            CHECK(rank(a) + nullspace(a).size() == a.cols());
            // every solution returned for A x = A x0 really solves it
            std::vector<uint32_t> x0 = {1, p - 1};
            std::vector<uint32_t> b = mat_apply(a, x0);
            auto sol = solve_linear(a, b);
            REQUIRE(sol);
            CHECK(mat_apply(a, sol->particular) == b);
            for (const auto& v : sol->nullspace) {
                std::vector<uint32_t> s = sol->particular;
                for (size_t i = 0; i < s.size(); ++i) s[i] = F.add(s[i], v[i]);
                CHECK(mat_apply(a, s) == b);
            }
            // nullspace vectors lie in the kernel
            for (const auto& v : nullspace(a))
                CHECK(mat_apply(a, v) == std::vector<uint32_t>(a.rows(), 0));
            // two-sided inverse whenever inversion succeeds
            if (auto inv = invert(a)) {
                CHECK(*inv * a == Matrix::identity(F, 2));
                CHECK(a * *inv == Matrix::identity(F, 2));
            }
        });
    }
}

TEST_CASE("rank-nullity over rectangular shapes") {
    PrimeField F(2);
    std::vector<std::pair<size_t, size_t>> shapes = {{2, 3}, {3, 2}};
    for (auto [r, c] : shapes) {
        for_all_matrices(F, r, c, [&](const Matrix& a) {
            CHECK(rank(a) + nullspace(a).size() == a.cols());
        });
    }
}

TEST_CASE("inverses over a larger prime") {
    PrimeField F(251);
    Matrix a = from_rows(F, {{3, 7, 1}, {0, 2, 9}, {5, 0, 4}});
    auto inv = invert(a);
    REQUIRE(inv);
    CHECK(*inv * a == Matrix::identity(F, 3));
    CHECK(a * *inv == Matrix::identity(F, 3));
}
