#include "affverma/linsolve.hpp"

#include "reference.hpp"

#include "doctest.h"

#include <random>

using namespace affverma;

TEST_CASE("linsolve: rank agrees with dense elimination") {
    std::mt19937 rng(71);
    std::uniform_int_distribution<int> dim(1, 8), sparse(0, 2), num(-4, 4), den(1, 3);
    for (int t = 0; t < 200; ++t) {
        const int rows = dim(rng), cols = dim(rng);
        std::vector<std::vector<Rational>> dense(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(cols)));
        std::vector<linsolve::SparseRow> sparse_rows;
        for (auto& row : dense) {
            linsolve::SparseRow sr;
            for (int c = 0; c < cols; ++c)
                if (sparse(rng) == 0) {
                    row[static_cast<std::size_t>(c)] = make_rational(num(rng), den(rng));
                    if (row[static_cast<std::size_t>(c)] != 0) sr[c] = row[static_cast<std::size_t>(c)];
                }
            sparse_rows.push_back(sr);
        }
        // Duplicate a row now and then to force dependence.
        if (t % 3 == 0) {
            dense.push_back(dense.front());
            sparse_rows.push_back(sparse_rows.front());
        }
        const int r = testsupport::dense_rank(dense);
        CHECK(linsolve::rank(dense, cols) == r);
        const auto null = linsolve::nullspace(sparse_rows, cols);
        CHECK(static_cast<int>(null.size()) == cols - r);
        for (const auto& v : null)
            for (const auto& row : dense) {
                Rational dot = 0;
                for (int c = 0; c < cols; ++c) dot += row[static_cast<std::size_t>(c)] * v[static_cast<std::size_t>(c)];
                CHECK(dot == 0);
            }
        if (!null.empty()) {
            auto with_null = null;
            CHECK(testsupport::dense_rank(with_null) == static_cast<int>(null.size()));
        }
    }
}

TEST_CASE("linsolve: echelon insertion reports dependence") {
    linsolve::Echelon ech(3);
    CHECK(ech.insert({{0, make_rational(1, 2)}, {1, Rational(3)}}));
    CHECK_FALSE(ech.insert({{0, Rational(1)}, {1, Rational(6)}}));
    CHECK(ech.insert({{2, Rational(5)}}));
    CHECK_FALSE(ech.insert({}));
    CHECK(ech.rank() == 2);
    const auto null = ech.nullspace();
    REQUIRE(null.size() == 1);
    CHECK(null[0][0] == -6);
    CHECK(null[0][1] == 1);
    CHECK(null[0][2] == 0);
}
