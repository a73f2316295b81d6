#include "affverma/affine_weights.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>

using namespace affverma;
using affine::Coroot;

namespace {

// <k Lambda_0 + rho, (alpha + m delta)^vee> from the finite rho and the level alone.
Rational oracle_pairing(const RootDatum& rd, const Rational& k, const Weight& alpha, int m) {
    Weight two_rho = roots::zero(rd.rank);
    for (const auto& a : rd.positive_roots) two_rho = roots::add(two_rho, a);
    const int norm = roots::inner(alpha, alpha);
    return make_rational(roots::inner(two_rho, alpha), norm) + make_rational(2 * m, norm) * (k + rd.dual_coxeter);
}

}  // namespace

TEST_CASE("affine: level weight pairings") {
    for (int l = 4; l <= 8; ++l) {
        auto rd = RootDatum::make(AlgebraType::D, l);
        const Rational k = make_rational(3 - 2 * l, 2);
        const auto lambda = affine::Weight::level_multiple(l, k);
        for (int i = 1; i <= l; ++i) {
            const auto c = affine::affine_simple_coroot(rd, i);
            CHECK(affine::pairing(rd, lambda, c, true) == 1);
            CHECK(oracle_pairing(rd, k, c.root, c.mode) == 1);
        }
        CHECK(affine::pairing(rd, lambda, affine::affine_simple_coroot(rd, 0), true) == make_rational(5 - 2 * l, 2));
        const Coroot refl{roots::scale(rd.highest_root, -1), 2};
        CHECK(affine::pairing(rd, lambda, refl, true) == 2);
        CHECK(oracle_pairing(rd, k, refl.root, 2) == 2);
        auto rep = affine::check_embedding_level(rd);
        CHECK(rep.pass);
        CHECK(rep.admissibility.admissible);
        CHECK(rep.admissibility.integral_rank == l + 1);
    }
}

TEST_CASE("affine: generating set of integral coroots") {
    auto rd = RootDatum::make(AlgebraType::D, 4);
    auto rep = affine::check_admissible(rd, affine::Weight::level_multiple(4, make_rational(-5, 2)));
    CHECK(rep.admissible);
    CHECK_FALSE(rep.degenerate_reason.has_value());
    std::vector<Coroot> expected{Coroot{roots::scale(rd.highest_root, -1), 2}};
    for (int i = 1; i <= 4; ++i) expected.push_back(affine::affine_simple_coroot(rd, i));
    CHECK(rep.simple_coroots.size() == expected.size());
    for (const auto& c : expected) CHECK(std::find(rep.simple_coroots.begin(), rep.simple_coroots.end(), c) != rep.simple_coroots.end());
    CHECK(affine::check_admissible(RootDatum::make(AlgebraType::D, 6),
                                   affine::Weight::level_multiple(6, make_rational(-9, 2)))
              .admissible);
}

TEST_CASE("affine: reflection of the level weight") {
    for (int l = 4; l <= 6; ++l) {
        auto rd = RootDatum::make(AlgebraType::D, l);
        const auto lambda = affine::Weight::level_multiple(l, make_rational(3 - 2 * l, 2));
        const Coroot refl{roots::scale(rd.highest_root, -1), 2};
        auto expected = lambda;
        expected.delta -= 4;
        for (int i = 0; i < l; ++i) expected.finite[static_cast<std::size_t>(i)] += 2 * rd.highest_root[static_cast<std::size_t>(i)];
        CHECK(affine::reflect_dot(rd, lambda, refl) == expected);
        for (int i = 1; i <= l; ++i) {
            const auto c = affine::affine_simple_coroot(rd, i);
            auto shifted = lambda;
            for (int t = 0; t < l; ++t) shifted.finite[static_cast<std::size_t>(t)] -= c.root[static_cast<std::size_t>(t)];
            CHECK(affine::reflect_dot(rd, lambda, c) == shifted);
        }
    }
}

TEST_CASE("affine: dot action is an involution") {
    std::mt19937 rng(31);
    for (int t = 0; t < 100; ++t) {
        const auto type = t % 2 ? AlgebraType::B : AlgebraType::D;
        const int l = 4 + t % 3;
        auto rd = RootDatum::make(type, l);
        std::uniform_int_distribution<int> num(-9, 9), den(1, 4), mode(-3, 3);
        std::uniform_int_distribution<std::size_t> pick(0, rd.positive_roots.size() - 1);
        affine::Weight lambda;
        for (int i = 0; i < l; ++i) lambda.finite.push_back(make_rational(num(rng), den(rng)));
        lambda.level = make_rational(num(rng), den(rng));
        lambda.delta = make_rational(num(rng), den(rng));
        Weight root = rd.positive_roots[pick(rng)];
        if (t % 5 == 0) root = roots::scale(root, -1);
        const Coroot c{root, mode(rng)};
        CHECK(affine::reflect_dot(rd, affine::reflect_dot(rd, lambda, c), c) == lambda);
    }
}

TEST_CASE("affine: rho pairs with c to the dual coxeter number") {
    for (auto type : {AlgebraType::B, AlgebraType::D})
        for (int l = 4; l <= 6; ++l) {
            auto rd = RootDatum::make(type, l);
            const auto zero = affine::Weight::level_multiple(l, 0);
            // <rho, c> is the level term of <rho, (alpha + delta)^vee - alpha^vee> for a long alpha.
            const Weight theta = rd.highest_root;
            const Rational diff = affine::pairing(rd, zero, Coroot{theta, 1}, true) -
                                  affine::pairing(rd, zero, Coroot{theta, 0}, true);
            CHECK(diff == rd.dual_coxeter);
            CHECK(rd.dual_coxeter == (type == AlgebraType::B ? 2 * l - 1 : 2 * l - 2));
        }
}

TEST_CASE("affine: level zero is degenerate") {
    auto rd = RootDatum::make(AlgebraType::D, 4);
    auto rep = affine::check_admissible(rd, affine::Weight::level_multiple(4, 0));
    REQUIRE(rep.degenerate_reason.has_value());
    CHECK(rep.degenerate_reason->find("level 0") != std::string::npos);
    auto crit = affine::check_admissible(rd, affine::Weight::level_multiple(4, -6));
    REQUIRE(crit.degenerate_reason.has_value());
    CHECK_FALSE(crit.admissible);
    CHECK_THROWS(affine::check_admissible(rd, affine::Weight::level_multiple(4, 1), 0));
}

TEST_CASE("affine: integral level one is admissible and a negative integer is not") {
    auto rd = RootDatum::make(AlgebraType::D, 4);
    CHECK(affine::check_admissible(rd, affine::Weight::level_multiple(4, 1)).admissible);
    auto bad = affine::check_admissible(rd, affine::Weight::level_multiple(4, -3));
    CHECK_FALSE(bad.positivity_ok);
    CHECK_FALSE(bad.violations.empty());
}
