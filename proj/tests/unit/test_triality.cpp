#include "affverma/conformal.hpp"
#include "affverma/singular.hpp"
#include "affverma/triality.hpp"

#include "reference.hpp"

#include "doctest.h"

#include <random>

using namespace affverma;
using triality::DiagramAutomorphism;
using verma::Module;
using verma::State;

namespace {

AlgebraHandle d4() { return LieAlgebra::build(AlgebraType::D, 4); }

}  // namespace

TEST_CASE("triality: generator images") {
    auto g = d4();
    const auto& simple = g->root_datum().simple_roots;
    for (auto sigma : {triality::pi_prime, triality::pi_double_prime}) {
        auto pi = DiagramAutomorphism::build(g, sigma);
        for (int i = 1; i <= 4; ++i) {
            const auto& src = simple[static_cast<std::size_t>(i - 1)];
            const auto& dst = simple[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i - 1)] - 1)];
            CHECK(pi.apply(g->e(src)) == g->e(dst));
            CHECK(pi.apply(g->f(src)) == g->f(dst));
            CHECK(pi.apply(g->coroot(src)) == g->coroot(dst));
        }
        CHECK(pi.preserves_brackets());
    }
    auto pi1 = DiagramAutomorphism::build(g, triality::pi_prime);
    CHECK(pi1.apply(g->e(simple[0])) == g->e(simple[2]));
    CHECK(pi1.apply(g->e(simple[1])) == g->e(simple[1]));
}

TEST_CASE("triality: diagram symmetry checks") {
    CHECK(triality::is_diagram_symmetry(triality::identity_nodes));
    CHECK(triality::is_diagram_symmetry(triality::pi_prime));
    CHECK(triality::is_diagram_symmetry(triality::pi_double_prime));
    CHECK_FALSE(triality::is_diagram_symmetry({2, 1, 3, 4}));
    CHECK_FALSE(triality::is_diagram_symmetry({1, 1, 3, 4}));
    CHECK_THROWS_AS(DiagramAutomorphism::build(d4(), {2, 1, 3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(DiagramAutomorphism::build(LieAlgebra::build(AlgebraType::D, 5), triality::pi_prime),
                    std::invalid_argument);
}

TEST_CASE("triality: compositions") {
    auto g = d4();
    auto p1 = DiagramAutomorphism::build(g, triality::pi_prime);
    auto p2 = DiagramAutomorphism::build(g, triality::pi_double_prime);
    CHECK(DiagramAutomorphism::build(g, triality::identity_nodes).is_identity());
    CHECK_FALSE(p1.is_identity());
    CHECK_FALSE(p1.compose(p1).is_identity());
    CHECK(p1.compose(p1).compose(p1).is_identity());
    CHECK(p2.compose(p2).is_identity());
    // The full symmetric group on the outer nodes: p1 p2 is again an involution.
    auto p12 = p1.compose(p2);
    CHECK(p12.compose(p12).is_identity());
    const auto mat = p1.matrix();
    REQUIRE(mat.size() == 28);
    for (int j = 0; j < 28; ++j)
        for (int i = 0; i < 28; ++i)
            CHECK(mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == p1.image(j).coefficient(i));
}

TEST_CASE("triality: commutes with the module action") {
    std::mt19937 rng(61);
    auto g = d4();
    Module m(g, make_rational(-5, 2));
    auto pi = DiagramAutomorphism::build(g, triality::pi_prime);
    std::uniform_int_distribution<int> basis(0, g->dim() - 1), mode(-3, 3);
    for (int t = 0; t < 100; ++t) {
        const int x = basis(rng), n = mode(rng);
        const State s = testsupport::random_state(m, rng, 4, 3);
        CHECK(pi.apply(m, m.apply(x, n, s)) == m.apply(pi.apply(g->basis(x)), n, pi.apply(m, s)));
    }
}

TEST_CASE("triality: fixes omega") {
    auto g = d4();
    Module m(g, make_rational(-5, 2));
    const State omega = conformal::sugawara(m).omega;
    for (auto sigma : {triality::pi_prime, triality::pi_double_prime})
        CHECK(DiagramAutomorphism::build(g, sigma).apply(m, omega) == omega);
}

TEST_CASE("triality: invariance report") {
    auto g = d4();
    Module m(g, make_rational(-5, 2));
    const State v = singular::build_vD(m);
    auto rep = triality::check_invariance(m, v, triality::pi_prime, "pi'");
    CHECK(rep.pass);
    CHECK(rep.fixed);
    CHECK_FALSE(rep.scalar.has_value());
    // Not every vector is invariant.
    const State e1 = State::monomial({verma::pack(g->index_e(g->root_datum().simple_roots[0]), -1)});
    auto bad = triality::check_invariance(m, e1, triality::pi_prime, "e1");
    CHECK_FALSE(bad.pass);
}
