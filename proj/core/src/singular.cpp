#include "affverma/singular.hpp"

#include "affverma/linsolve.hpp"
#include "affverma/notation.hpp"

#include <stdexcept>

namespace affverma::singular {

using verma::LoopElement;
using verma::OperatorWord;
using verma::State;

Formula vB_formula(const LieAlgebra& g) {
    if (g.type() != AlgebraType::B) throw std::invalid_argument("vB_formula: needs a type B algebra");
    const Notation n(g);
    Formula out;
    out.word.add(Rational(-1, 4), {n.e(n.single(1)), n.e(n.single(1))});
    ++out.families;
    for (int j = 2; j <= n.rank(); ++j) out.word.add(1, {n.e(n.minus(1, j)), n.e(n.plus(1, j))});
    ++out.families;
    return out;
}

Formula vD_formula(const LieAlgebra& g) {
    if (g.type() != AlgebraType::D) throw std::invalid_argument("vD_formula: needs a type D algebra");
    const Notation n(g);
    const int l = n.rank();
    const Rational L(l);

    auto em = [&](int i, int j, int mode = -1) { return n.e(n.minus(i, j), mode); };
    auto ep = [&](int i, int j, int mode = -1) { return n.e(n.plus(i, j), mode); };
    auto fm = [&](int i, int j, int mode = -1) { return n.f(n.minus(i, j), mode); };
    auto fp = [&](int i, int j, int mode = -1) { return n.f(n.plus(i, j), mode); };
    auto eth = [&](int mode = -1) { return ep(1, 2, mode); };
    auto h1 = [&] { return n.h(n.single(1)); };
    auto hi = [&](int i) { return n.h(n.single(i)); };
    auto h12 = [&] { return n.h(n.minus(1, 2)); };

    Formula out;
    auto& w = out.word;
    int& fam = out.families;
    const Rational a = (2 * L + 1) / 3;                    // (2l+1)/3
    const Rational b = (2 * L - 5) / 3;                    // (2l-5)/3
    const Rational c = 1 / (2 * L - 1);                    // 1/(2l-1)

    // Quartic terms without e_theta.
    ++fam;
    for (int i = 3; i <= l; ++i)
        for (int j = 3; j <= l; ++j)
            if (j != i) w.add(2 * a, {em(1, i), ep(1, i), em(2, j), ep(2, j)});
    ++fam;
    for (int i = 3; i <= l; ++i) w.add(a, {em(1, i), ep(1, i), em(2, i), ep(2, i)});
    ++fam;
    for (int i = 3; i <= l; ++i)
        for (int j = 3; j <= l; ++j)
            if (j != i) w.add(-a, {em(1, i), ep(2, i), ep(1, j), em(2, j)});
    ++fam;
    for (int i = 3; i <= l; ++i)
        for (int j = 3; j <= l; ++j) w.add(-a / 2, {em(1, i), ep(2, i), em(1, j), ep(2, j)});
    ++fam;
    for (int i = 3; i <= l; ++i)
        for (int j = 3; j <= l; ++j) w.add(-a / 2, {ep(1, i), em(2, i), ep(1, j), em(2, j)});

    // e_theta(-1) times a cubic with one root vector among e_i, e_j (i, j >= 3).
    ++fam;
    for (int i = 3; i <= l; ++i)
        for (int j = 3; j < i; ++j) w.add(2, {eth(), ep(1, j), em(2, i), fm(j, i)});
    ++fam;
    for (int i = 3; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) w.add(2, {eth(), ep(1, j), em(2, i), em(i, j)});
    ++fam;
    for (int i = 3; i <= l; ++i)
        for (int j = 3; j < i; ++j) w.add(-2, {eth(), em(1, j), em(2, i), ep(j, i)});
    ++fam;
    for (int i = 3; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) w.add(2, {eth(), em(1, j), em(2, i), ep(i, j)});
    ++fam;
    for (int i = 3; i <= l; ++i)
        for (int j = 3; j < i; ++j) w.add(2, {eth(), ep(2, i), ep(1, j), fp(j, i)});
    ++fam;
    for (int i = 3; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) w.add(-2, {eth(), ep(2, i), ep(1, j), fp(i, j)});
    ++fam;
    for (int i = 3; i <= l; ++i)
        for (int j = 3; j < i; ++j) w.add(-2, {eth(), ep(2, i), em(1, j), em(j, i)});
    ++fam;
    for (int i = 3; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) w.add(-2, {eth(), ep(2, i), em(1, j), fm(i, j)});

    ++fam;
    for (int i = 3; i <= l; ++i) w.add(-2 * b, {eth(), fm(1, 2), em(1, i), ep(1, i)});
    ++fam;
    for (int i = 3; i <= l; ++i) w.add(2 * b, {eth(), em(1, 2), em(2, i), ep(2, i)});
    ++fam;
    for (int i = 3; i <= l; ++i) w.add(1, {eth(), ep(1, i), em(2, i), hi(i)});
    ++fam;
    for (int i = 3; i <= l; ++i) w.add(b, {eth(), ep(1, i), em(2, i), h12()});
    ++fam;
    for (int i = 3; i <= l; ++i) w.add(-1, {eth(), em(1, i), ep(2, i), hi(i)});
    ++fam;
    for (int i = 3; i <= l; ++i) w.add(b, {eth(), em(1, i), ep(2, i), h12()});

    // Terms with one factor of mode -2.
    ++fam;
    for (int i = 3; i <= l; ++i) w.add(b, {eth(), ep(1, i, -2), em(2, i)});
    ++fam;
    for (int i = 3; i <= l; ++i) w.add(b, {eth(), em(1, i, -2), ep(2, i)});
    ++fam;
    for (int i = 3; i <= l; ++i) w.add(-a * (L - 3), {eth(-2), ep(1, i), em(2, i)});
    ++fam;
    for (int i = 3; i <= l; ++i) w.add(-a * (L - 3), {eth(-2), em(1, i), ep(2, i)});
    ++fam;
    for (int i = 3; i <= l; ++i) w.add(-b, {eth(), ep(1, i), em(2, i, -2)});
    ++fam;
    for (int i = 3; i <= l; ++i) w.add(-b, {eth(), em(1, i), ep(2, i, -2)});

    ++fam;
    w.add((2 * L - 5) * (2 * L - 1) / 6, {eth(-2), eth(), h12()});
    ++fam;
    w.add(-(2 * L - 5) / 2, {eth(-2), eth(), h1()});
    ++fam;
    w.add(-(2 * L + 1) * (2 * L - 5) * (2 * L - 7) / 24, {eth(-2), eth(-2)});
    ++fam;
    w.add((2 * L - 5) * (2 * L - 5) / 2, {eth(), eth(-3)});

    // e_theta(-1)^2 times symmetrized quadratics.
    auto sym = [&](const Rational& coeff, const Weight& root) {
        w.add(coeff, {eth(), eth(), n.e(root), n.f(root)});
        w.add(coeff, {eth(), eth(), n.f(root), n.e(root)});
    };
    ++fam;
    sym(-2 * (2 * L - 5) * (L - 2) / (3 * (2 * L - 1)), n.minus(1, 2));
    ++fam;
    for (int i = 3; i <= l; ++i) sym((2 * L - 5) * c, n.minus(2, i));
    ++fam;
    for (int i = 3; i <= l; ++i) sym((2 * L - 5) * c, n.plus(2, i));
    ++fam;
    for (int i = 3; i <= l; ++i) sym((2 * L - 5) * c, n.minus(1, i));
    ++fam;
    for (int i = 3; i <= l; ++i) sym((2 * L - 5) * c, n.plus(1, i));
    ++fam;
    sym((2 * L - 5) * c, n.plus(1, 2));
    ++fam;
    for (const auto& alpha : g.root_datum().positive_roots)
        if (alpha[0] == 0 && alpha[1] == 0) sym(-4 * c, alpha);

    ++fam;
    w.add(-(2 * L - 5) / 6, {eth(), eth(), h12(), h12()});
    ++fam;
    w.add(-c / 2, {eth(), eth(), h1(), h1()});
    ++fam;
    w.add(-(2 * L - 5) * c, {eth(), eth(), h12(), n.h(n.plus(1, 2))});
    ++fam;
    for (int i = 3; i <= l; ++i) w.add(4 * c, {eth(), eth(), n.h(n.minus(1, i)), n.h(n.plus(1, i))});
    ++fam;
    w.add((2 * L - 5) / 2, {eth(), eth(), n.h(n.plus(1, 2), -2)});
    return out;
}

State build_vB(const verma::Module& m) { return m.apply_word(vB_formula(m.algebra()).word, State::vacuum()); }

State build_vD(const verma::Module& m) { return m.apply_word(vD_formula(m.algebra()).word, State::vacuum()); }

std::vector<std::pair<std::string, LoopElement>> raising_operators(const LieAlgebra& g) {
    std::vector<std::pair<std::string, LoopElement>> ops;
    const auto& rd = g.root_datum();
    for (const auto& a : rd.simple_roots) ops.emplace_back("e[" + roots::to_string(a) + "](0)", LoopElement{g.e(a), 0});
    ops.emplace_back("f[" + roots::to_string(rd.highest_root) + "](1)", LoopElement{g.f(rd.highest_root), 1});
    return ops;
}

std::vector<std::pair<std::string, LoopElement>> strict_raising_operators(const LieAlgebra& g) {
    auto ops = raising_operators(g);
    for (int b = 0; b < g.dim(); ++b) ops.emplace_back(g.label_string(b) + "(1)", LoopElement{g.basis(b), 1});
    return ops;
}

SingularReport check_singular(const verma::Module& m, const State& v, std::string vector_id, bool strict) {
    SingularReport rep;
    rep.vector_id = std::move(vector_id);
    rep.grade = m.grade(v);
    const auto ops = strict ? strict_raising_operators(m.algebra()) : raising_operators(m.algebra());
    rep.pass = !v.is_zero();
    for (const auto& [name, op] : ops) {
        State r = m.apply(op, v);
        rep.pass = rep.pass && r.is_zero();
        rep.checks.push_back({name, std::move(r)});
    }
    return rep;
}

std::vector<verma::Monomial> enumerate_monomials(const LieAlgebra& g, int degree, const Weight& weight) {
    std::vector<verma::Factor> factors;
    for (int mode = -degree; mode <= -1; ++mode)
        for (int b = 0; b < g.dim(); ++b) factors.push_back(verma::pack(b, mode));
    std::vector<verma::Monomial> out;
    verma::Monomial cur;
    Weight wt = roots::zero(g.rank());
    auto rec = [&](auto&& self, std::size_t from, int remaining) -> void {
        if (remaining == 0) {
            if (wt == weight) out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < factors.size(); ++i) {
            const int d = -verma::factor_mode(factors[i]);
            if (d > remaining) continue;
            const Weight& fw = g.weight(verma::factor_index(factors[i]));
            cur.push_back(factors[i]);
            wt = roots::add(wt, fw);
            self(self, i, remaining - d);
            wt = roots::add(wt, roots::scale(fw, -1));
            cur.pop_back();
        }
    };
    rec(rec, 0, degree);
    return out;
}

std::vector<State> solve_singular_space(const verma::Module& m, int degree, const Weight& weight,
                                        const SolveOptions& opts) {
    if (degree > opts.degree_bound)
        throw std::invalid_argument("solve_singular_space: degree " + std::to_string(degree) + " exceeds bound " +
                                    std::to_string(opts.degree_bound));
    const auto columns = enumerate_monomials(m.algebra(), degree, weight);
    const auto ops = opts.strict ? strict_raising_operators(m.algebra()) : raising_operators(m.algebra());

    std::map<std::pair<std::size_t, verma::Monomial>, linsolve::SparseRow> rows;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const State col = State::monomial(columns[c]);
        for (std::size_t o = 0; o < ops.size(); ++o) {
            const State image = m.apply(ops[o].second, col);
            for (const auto& [mono, v] : image.terms()) rows[{o, mono}].emplace(static_cast<int>(c), v);
        }
    }
    linsolve::Echelon ech(static_cast<int>(columns.size()));
    for (const auto& [key, row] : rows) ech.insert(row);

    std::vector<State> basis;
    for (const auto& x : ech.nullspace()) {
        State s;
        for (std::size_t c = 0; c < x.size(); ++c)
            if (x[c] != 0) s.add(columns[c], x[c]);
        basis.push_back(std::move(s));
    }
    return basis;
}

}  // namespace affverma::singular
