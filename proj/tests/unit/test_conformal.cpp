#include "affverma/conformal.hpp"
#include "affverma/embedding.hpp"

#include "doctest.h"

#include <algorithm>

using namespace affverma;
using verma::Module;
using verma::State;

namespace {

Rational level_for(int l) { return make_rational(3 - 2 * l, 2); }

// Sum over the root basis with the duals written out by hand.
State hand_casimir(const Module& m) {
    const auto& g = m.algebra();
    State acc;
    for (int i = 1; i <= g.rank(); ++i) acc = acc + m.normal_form({{g.H(i), -1}, {g.H(i), -1}});
    for (const auto& a : g.root_datum().positive_roots) {
        const Rational half_norm = make_rational(roots::inner(a, a), 2);
        acc = acc + (m.normal_form({{g.e(a), -1}, {g.f(a), -1}}) + m.normal_form({{g.f(a), -1}, {g.e(a), -1}})) * half_norm;
    }
    return acc * (Rational(1) / (2 * (m.level() + g.dual_coxeter())));
}

int dim_of(AlgebraType t, int l) { return t == AlgebraType::B ? l * (2 * l + 1) : l * (2 * l - 1); }

}  // namespace

TEST_CASE("conformal: sugawara grade and central charge") {
    for (int l = 4; l <= 8; ++l) {
        const Rational k = level_for(l);
        const Rational cb = conformal::central_charge(AlgebraType::B, l, k);
        const Rational cd = conformal::central_charge(AlgebraType::D, l, k);
        CHECK(cb == -l * (2 * l - 3));
        CHECK(cd == cb);
        CHECK(cb == k * dim_of(AlgebraType::B, l) / (k + 2 * l - 1));
    }
    CHECK(conformal::central_charge(AlgebraType::D, 4, make_rational(-5, 2)) == -20);
    for (auto type : {AlgebraType::B, AlgebraType::D}) {
        auto g = LieAlgebra::build(type, 4);
        Module m(g, level_for(4));
        auto data = conformal::sugawara(m);
        CHECK(data.central_charge == -20);
        CHECK(data.dual_coxeter == g->dual_coxeter());
        auto gr = m.grade(data.omega);
        CHECK(gr.degree == 2);
        CHECK(gr.weight == roots::zero(4));
        CHECK(data.omega == hand_casimir(m));
    }
}

TEST_CASE("conformal: basis independence of omega") {
    auto g = LieAlgebra::build(AlgebraType::B, 4);
    Module m(g, level_for(4));
    const State omega = conformal::sugawara(m).omega;
    auto pairs = g->dual_basis();
    std::reverse(pairs.begin(), pairs.end());
    CHECK(conformal::casimir_state(m, pairs) == omega);

    // A different basis: e +- f for every root, H_1 +- H_2, and the remaining H_i.
    std::vector<std::pair<LieElement, LieElement>> alt;
    for (const auto& a : g->root_datum().positive_roots) {
        const Rational n = g->form(g->e(a), g->f(a));
        alt.emplace_back(g->e(a) + g->f(a), (g->e(a) + g->f(a)) * (1 / (2 * n)));
        alt.emplace_back(g->e(a) - g->f(a), (g->e(a) - g->f(a)) * (-1 / (2 * n)));
    }
    alt.emplace_back(g->H(1) + g->H(2), (g->H(1) + g->H(2)) * make_rational(1, 2));
    alt.emplace_back(g->H(1) - g->H(2), (g->H(1) - g->H(2)) * make_rational(1, 2));
    for (int i = 3; i <= 4; ++i) alt.emplace_back(g->H(i), g->H(i));
    for (std::size_t i = 0; i < alt.size(); ++i)
        for (std::size_t j = 0; j < alt.size(); ++j) REQUIRE(g->form(alt[i].first, alt[j].second) == (i == j ? 1 : 0));
    CHECK(conformal::casimir_state(m, alt) == omega);
}

TEST_CASE("conformal: critical level is rejected") {
    auto g = LieAlgebra::build(AlgebraType::D, 4);
    Module m(g, -6);
    CHECK_THROWS_AS(conformal::sugawara(m), std::domain_error);
}

TEST_CASE("conformal: level equation roots") {
    for (int l = 4; l <= 8; ++l) {
        const int db = dim_of(AlgebraType::B, l), dd = dim_of(AlgebraType::D, l);
        const int hb = 2 * l - 1, hd = 2 * l - 2;
        // k ((dD - dB) k + dD hB - dB hD) = 0
        const Rational nonzero_root = make_rational(db * hd - dd * hb, dd - db);
        const auto sols = conformal::solve_level_equation(l);
        REQUIRE(sols.size() == 2);
        CHECK(sols[0] == nonzero_root);
        CHECK(sols[1] == 0);
        CHECK(sols[0] == level_for(l));
    }
}

TEST_CASE("conformal: perturbed coefficient fails") {
    for (int l : {4, 5}) {
        auto b = LieAlgebra::build(AlgebraType::B, l);
        Module mb(b, level_for(l));
        CHECK(conformal::verify_quadratic_relation(mb).pass);
        auto bad = conformal::verify_quadratic_relation(mb, Rational(2 * l));
        CHECK_FALSE(bad.pass);
        CHECK_FALSE(bad.s.has_value());
    }
}

TEST_CASE("conformal: quadratic certificate grade") {
    auto b = LieAlgebra::build(AlgebraType::B, 5);
    Module mb(b, level_for(5));
    auto rep = conformal::verify_quadratic_relation(mb);
    CHECK(rep.short_coefficient == 9);
    CHECK(rep.u_grade.degree == 2);
    CHECK(rep.u_grade.weight == roots::zero(5));
    CHECK_FALSE(rep.u.is_zero());
}

TEST_CASE("conformal: scalar ratio") {
    for (int l : {4, 5, 6}) {
        auto b = LieAlgebra::build(AlgebraType::B, l);
        auto d = LieAlgebra::build(AlgebraType::D, l);
        Module mb(b, level_for(l)), md(d, level_for(l));
        auto q = conformal::verify_quadratic_relation(mb);
        auto e = conformal::verify_conformal_equality(mb, md);
        REQUIRE(q.s.has_value());
        REQUIRE(e.s_prime.has_value());
        CHECK(*e.s_prime / *q.s == Rational(1) / (2 * (2 * l + 1) * (2 * l - 1)));
        CHECK(*e.s_prime / *q.s == conformal::expected_scalar_ratio(l));
        CHECK(e.grade.degree == 2);
        CHECK(e.grade.weight == roots::zero(l));
    }
}

TEST_CASE("conformal: level one control") {
    auto b = LieAlgebra::build(AlgebraType::B, 4);
    auto d = LieAlgebra::build(AlgebraType::D, 4);
    Module mb(b, 1), md(d, 1);
    auto rep = conformal::verify_conformal_equality(mb, md);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.difference.is_zero());
    CHECK_FALSE(rep.s_prime.has_value());
    CHECK(rep.c_b != rep.c_d);
}

TEST_CASE("conformal: mismatched levels are rejected") {
    auto b = LieAlgebra::build(AlgebraType::B, 4);
    auto d = LieAlgebra::build(AlgebraType::D, 4);
    Module mb(b, 1), md(d, level_for(4));
    CHECK_THROWS(conformal::verify_conformal_equality(mb, md));
}
