#include "affverma/conformal.hpp"

#include "affverma/embedding.hpp"
#include "affverma/notation.hpp"
#include "affverma/singular.hpp"

#include <algorithm>
#include <stdexcept>

namespace affverma::conformal {

using verma::OperatorWord;
using verma::State;

namespace {

int dimension(AlgebraType type, int l) { return type == AlgebraType::B ? l * (2 * l + 1) : l * (2 * l - 1); }
int dual_coxeter(AlgebraType type, int l) { return type == AlgebraType::B ? 2 * l - 1 : 2 * l - 2; }

}  // namespace

State casimir_state(const verma::Module& m, const std::vector<std::pair<LieElement, LieElement>>& pairs) {
    const Rational shifted = m.level() + m.algebra().dual_coxeter();
    if (shifted == 0) throw std::domain_error("sugawara: critical level");
    State sum;
    for (const auto& [a, b] : pairs) sum.add(m.normal_form({{a, -1}, {b, -1}}));
    return sum * Rational(1 / (2 * shifted));
}

ConformalData sugawara(const verma::Module& m) {
    const auto& g = m.algebra();
    ConformalData d;
    d.level = m.level();
    d.dual_coxeter = g.dual_coxeter();
    d.omega = casimir_state(m, g.dual_basis());
    d.central_charge = central_charge(g.type(), g.rank(), m.level());
    return d;
}

Rational central_charge(AlgebraType type, int l, const Rational& k) {
    const Rational shifted = k + dual_coxeter(type, l);
    if (shifted == 0) throw std::domain_error("central_charge: critical level");
    return Rational(k * dimension(type, l) / shifted);
}

std::vector<Rational> solve_level_equation(int l) {
    if (l < 4) throw std::invalid_argument("solve_level_equation: l >= 4 required");
    // k dD (k + hB) = k dB (k + hD)  <=>  k ((dD - dB) k + dD hB - dB hD) = 0
    const int dB = dimension(AlgebraType::B, l), dD = dimension(AlgebraType::D, l);
    const int hB = dual_coxeter(AlgebraType::B, l), hD = dual_coxeter(AlgebraType::D, l);
    const Rational a(dD - dB), b(dD * hB - dB * hD);
    std::vector<Rational> out{Rational(0)};
    if (a != 0) out.push_back(Rational(-b / a));
    std::erase_if(out, [&](const Rational& k) { return k == -hB || k == -hD; });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

State quadratic_certificate(const verma::Module& mb) {
    const auto& g = mb.algebra();
    const Notation n(g);
    const int l = n.rank();
    OperatorWord w;
    w.add(2 * l, {n.f(n.single(1), 0), n.f(n.single(1), 0)});
    for (int i = 2; i <= l; ++i) w.add(4, {n.f(n.minus(1, i), 0), n.f(n.plus(1, i), 0)});
    return mb.apply_word(w, singular::build_vB(mb));
}

State quadratic_relation_state(const verma::Module& mb, const Rational& short_coefficient) {
    const auto& g = mb.algebra();
    if (g.type() != AlgebraType::B) throw std::invalid_argument("quadratic relation: needs a type B module");
    const Notation n(g);
    OperatorWord w;
    auto sym = [&](const Rational& c, const Weight& root) {
        w.add(c, {n.e(root), n.f(root)});
        w.add(c, {n.f(root), n.e(root)});
    };
    for (const auto& alpha : g.root_datum().positive_roots) {
        if (roots::inner(alpha, alpha) == 1) {
            sym(short_coefficient, alpha);
            w.add(-1, {n.h(alpha), n.h(alpha)});
        } else {
            sym(-4, alpha);
        }
    }
    return mb.apply_word(w, State::vacuum());
}

QuadraticReport verify_quadratic_relation(const verma::Module& mb, std::optional<Rational> short_coefficient) {
    QuadraticReport r;
    r.rank = mb.algebra().rank();
    r.short_coefficient = short_coefficient.value_or(Rational(2 * r.rank - 1));
    r.u = quadratic_certificate(mb);
    r.r = quadratic_relation_state(mb, r.short_coefficient);
    r.u_grade = mb.grade(r.u);
    r.s = verma::solve_multiple(r.r, r.u);
    r.pass = r.s.has_value() && *r.s != 0;
    return r;
}

EqualityReport verify_conformal_equality(const verma::Module& mb, const verma::Module& md) {
    if (mb.level() != md.level()) throw std::invalid_argument("verify_conformal_equality: levels differ");
    const auto& b = mb.algebra();
    const auto& d = md.algebra();
    EqualityReport r;
    r.rank = b.rank();
    r.level = mb.level();
    const ConformalData ob = sugawara(mb), od = sugawara(md);
    r.c_b = ob.central_charge;
    r.c_d = od.central_charge;
    r.difference = ob.omega - embedding::embed_state(d, b, od.omega);
    r.u = quadratic_certificate(mb);
    r.grade = mb.grade(r.difference);
    r.s_prime = verma::solve_multiple(r.difference, r.u);
    r.pass = r.s_prime.has_value() && r.c_b == r.c_d;
    return r;
}

Rational expected_scalar_ratio(int l) { return Rational(1, 2 * (2 * l + 1) * (2 * l - 1)); }

}  // namespace affverma::conformal
