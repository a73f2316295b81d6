#include "affverma/verma.hpp"

#include "reference.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>

using namespace affverma;
using verma::Factor;
using verma::Module;
using verma::pack;
using verma::State;

namespace {

Rational level_for(int l) { return make_rational(3 - 2 * l, 2); }

// Expected grade of x(n).s for homogeneous s.
void check_shift(const Module& m, int x, int n, const State& s, const State& out) {
    if (out.is_zero() || s.is_zero()) return;
    auto gs = m.grade(s), go = m.grade(out);
    if (!gs.degree || !gs.weight) return;
    REQUIRE(go.degree.has_value());
    REQUIRE(go.weight.has_value());
    CHECK(*go.degree == *gs.degree - n);
    CHECK(*go.weight == roots::add(*gs.weight, m.algebra().weight(x)));
}

State homogeneous_state(const Module& m, std::mt19937& rng, int degree) {
    // A single monomial: homogeneous by construction.
    std::uniform_int_distribution<int> basis(0, m.algebra().dim() - 1);
    std::vector<Factor> mono;
    int left = degree;
    while (left > 0) {
        const int mode = std::uniform_int_distribution<int>(1, std::min(left, 3))(rng);
        mono.push_back(pack(basis(rng), -mode));
        left -= mode;
    }
    std::sort(mono.begin(), mono.end());
    return State::monomial(mono, testsupport::random_rational(rng));
}

}  // namespace

TEST_CASE("verma: module axiom on random cases") {
    std::mt19937 rng(41);
    auto g = LieAlgebra::build(AlgebraType::B, 4);
    Module m(g, level_for(4));
    std::uniform_int_distribution<int> basis(0, g->dim() - 1), mode(-3, 3);
    for (int t = 0; t < 300; ++t) {
        const int x = basis(rng), y = basis(rng), p = mode(rng), q = mode(rng);
        const State s = testsupport::random_state(m, rng, 4, 3);
        const State lhs = m.apply(x, p, m.apply(y, q, s)) - m.apply(y, q, m.apply(x, p, s));
        State rhs = m.apply(g->bracket_basis(x, y), p + q, s);
        if (p + q == 0) rhs = rhs + s * (g->form_basis(x, y) * p * m.level());
        CHECK(lhs == rhs);
        CHECK(testsupport::no_zero_coefficients(lhs));
    }
}

TEST_CASE("verma: action agrees with the reference straightener") {
    std::mt19937 rng(42);
    for (auto type : {AlgebraType::B, AlgebraType::D}) {
        auto g = LieAlgebra::build(type, 4);
        Module m(g, level_for(4));
        std::uniform_int_distribution<int> basis(0, g->dim() - 1), mode(-3, 3);
        for (int t = 0; t < 150; ++t) {
            const int x = basis(rng), n = mode(rng);
            const State s = testsupport::random_state(m, rng, 4, 3);
            CHECK(m.apply(x, n, s) == testsupport::reference_apply(m, x, n, s));
        }
    }
}

TEST_CASE("verma: grading shifts") {
    std::mt19937 rng(43);
    auto g = LieAlgebra::build(AlgebraType::D, 5);
    Module m(g, level_for(5));
    std::uniform_int_distribution<int> basis(0, g->dim() - 1), mode(-3, 3), deg(0, 4);
    for (int t = 0; t < 200; ++t) {
        const int x = basis(rng), n = mode(rng);
        const State s = homogeneous_state(m, rng, deg(rng));
        check_shift(m, x, n, s, m.apply(x, n, s));
    }
    auto g0 = m.grade(State::vacuum());
    CHECK(g0.degree == 0);
    CHECK(g0.weight == roots::zero(5));
    CHECK(m.grade(State()).zero);
}

TEST_CASE("verma: confluence of swap schedules") {
    std::mt19937 rng(44);
    auto g = LieAlgebra::build(AlgebraType::B, 4);
    Module m(g, level_for(4));
    std::uniform_int_distribution<int> basis(0, g->dim() - 1), mode(1, 3), len(2, 5);
    for (int t = 0; t < 50; ++t) {
        std::vector<Factor> word;
        std::vector<verma::LoopElement> product;
        for (int i = len(rng); i > 0; --i) {
            const int x = basis(rng), n = -mode(rng);
            word.push_back(pack(x, n));
            product.push_back({g->basis(x), n});
        }
        const State left = m.normal_form_by_swaps(word, verma::Schedule::leftmost);
        CHECK(left == m.normal_form_by_swaps(word, verma::Schedule::rightmost));
        CHECK(left == m.normal_form_by_swaps(word, verma::Schedule::random, static_cast<unsigned>(t)));
        CHECK(left == m.normal_form(product));
        CHECK(left == testsupport::reference_straighten(m, word));
    }
}

TEST_CASE("verma: normal form idempotence") {
    std::mt19937 rng(45);
    auto g = LieAlgebra::build(AlgebraType::D, 4);
    Module m(g, make_rational(-5, 2));
    for (int t = 0; t < 200; ++t) {
        const State s = testsupport::random_state(m, rng, 5, 1);
        const auto& [mono, c] = *s.terms().begin();
        std::vector<verma::LoopElement> product;
        for (Factor f : mono) product.push_back({g->basis(verma::factor_index(f)), verma::factor_mode(f)});
        CHECK(m.normal_form(product) == State::monomial(mono));
        CHECK(m.normal_form_by_swaps(mono, verma::Schedule::random, 7) == State::monomial(mono));
    }
}

TEST_CASE("verma: vacuum annihilation") {
    for (int l : {4, 5}) {
        auto g = LieAlgebra::build(AlgebraType::B, l);
        Module m(g, level_for(l));
        for (int x = 0; x < g->dim(); ++x) {
            CHECK(m.apply(x, 0, State::vacuum()).is_zero());
            CHECK(m.apply(x, 1, State::vacuum()).is_zero());
            CHECK(m.apply(x, 3, State::vacuum()).is_zero());
        }
        const auto& theta = g->root_datum().highest_root;
        const State one_e = m.apply(g->e(theta), -1, State::vacuum());
        CHECK(m.apply(g->f(theta), 1, one_e) == State::vacuum(level_for(l)));
    }
}

TEST_CASE("verma: straightening examples") {
    auto g = LieAlgebra::build(AlgebraType::B, 4);
    Module m(g, make_rational(-5, 2));
    const auto e1 = g->index_e(roots::single(4, 1)), f1 = g->index_f(roots::single(4, 1));
    const State ef = m.normal_form({{g->basis(e1), -1}, {g->basis(f1), -1}});
    const State fe = m.normal_form({{g->basis(f1), -1}, {g->basis(e1), -1}});
    // e precedes f in the frozen order, so e(-1) f(-1) 1 is already canonical.
    CHECK(ef == State::monomial({pack(e1, -1), pack(f1, -1)}));
    CHECK(fe == ef - State::monomial({pack(g->index_h(1), -2)}, 2));

    auto d = LieAlgebra::build(AlgebraType::D, 4);
    Module md(d, make_rational(-5, 2));
    const int ep = d->index_e(roots::plus(4, 1, 2));
    const State sq = State::monomial({pack(ep, -2), pack(ep, -2)});
    CHECK(md.apply(d->e(roots::minus(4, 1, 2)), 0, sq).is_zero());
}

TEST_CASE("verma: operator words") {
    auto g = LieAlgebra::build(AlgebraType::D, 4);
    Module m(g, make_rational(-5, 2));
    const auto& theta = g->root_datum().highest_root;
    verma::OperatorWord id;
    id.add(1, {});
    const State s = State::monomial({pack(g->index_e(theta), -2)}, make_rational(3, 4));
    CHECK(m.apply_word(id, s) == s);
    verma::OperatorWord create;
    create.add(1, {{g->e(theta), -1}});
    CHECK(m.apply_word(create, State::vacuum()) == State::monomial({pack(g->index_e(theta), -1)}));
    verma::OperatorWord zero_coeff;
    zero_coeff.add(0, {{g->e(theta), -1}});
    CHECK(zero_coeff.empty());
    CHECK_THROWS_AS(m.normal_form({{g->e(theta), 0}}), std::invalid_argument);
}

TEST_CASE("verma: state arithmetic keeps no zeros") {
    auto g = LieAlgebra::build(AlgebraType::B, 4);
    Module m(g, 1);
    std::mt19937 rng(46);
    for (int t = 0; t < 50; ++t) {
        const State s = testsupport::random_state(m, rng, 4, 4);
        CHECK((s - s).is_zero());
        CHECK((s * 0).is_zero());
        CHECK(testsupport::no_zero_coefficients(s + s * make_rational(-1, 2)));
        auto r = verma::solve_multiple(s * make_rational(7, 3), s);
        REQUIRE(r.has_value());
        CHECK(*r == make_rational(7, 3));
    }
    CHECK_FALSE(verma::solve_multiple(State::vacuum(), State()).has_value());
    const State a = State::monomial({pack(0, -1)});
    CHECK_FALSE(verma::solve_multiple(a + State::vacuum(), a + State::vacuum(2)).has_value());
}
