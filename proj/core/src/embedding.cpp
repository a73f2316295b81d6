#include "affverma/embedding.hpp"

#include "affverma/notation.hpp"
#include "affverma/singular.hpp"

#include <stdexcept>

namespace affverma::embedding {

using verma::LoopElement;
using verma::OperatorWord;
using verma::State;

std::vector<int> index_map(const LieAlgebra& d, const LieAlgebra& b) {
    if (d.type() != AlgebraType::D || b.type() != AlgebraType::B || d.rank() != b.rank())
        throw std::invalid_argument("index_map: needs D_l and B_l of the same rank");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(d.dim()));
    for (int i = 0; i < d.dim(); ++i) {
        const BasisLabel& lab = d.label(i);
        switch (lab.role) {
            case Role::e: out.push_back(b.index_e(lab.root)); break;
            case Role::f: out.push_back(b.index_f(lab.root)); break;
            case Role::h: out.push_back(b.index_h(lab.cartan)); break;
        }
        if (out.size() > 1 && out[out.size() - 2] >= out.back())
            throw std::logic_error("index_map: D basis is not an ordered subsequence of the B basis");
    }
    return out;
}

LieElement embed_element(const LieAlgebra& d, const LieAlgebra& b, const LieElement& x) {
    if (x.tag() != d.tag()) throw std::invalid_argument("embed_element: element not in D_l");
    const auto map = index_map(d, b);
    LieElement out(b.tag());
    for (const auto& [i, c] : x.terms()) out.add(map[static_cast<std::size_t>(i)], c);
    return out;
}

State embed_state(const LieAlgebra& d, const LieAlgebra& b, const State& s) {
    const auto map = index_map(d, b);
    State out;
    for (const auto& [mono, c] : s.terms()) {
        verma::Monomial m;
        m.reserve(mono.size());
        for (auto fct : mono)
            m.push_back(verma::pack(map[static_cast<std::size_t>(verma::factor_index(fct))], verma::factor_mode(fct)));
        out.add(m, c);
    }
    return out;
}

namespace {

struct Shorthand {
    explicit Shorthand(const LieAlgebra& g) : n(g), l(g.rank()) {}
    Notation n;
    int l;

    LoopElement em(int i, int j, int mode = -1) const { return n.e(n.minus(i, j), mode); }
    LoopElement ep(int i, int j, int mode = -1) const { return n.e(n.plus(i, j), mode); }
    LoopElement fm(int i, int j, int mode = -1) const { return n.f(n.minus(i, j), mode); }
    LoopElement fp(int i, int j, int mode = -1) const { return n.f(n.plus(i, j), mode); }
    LoopElement es(int i, int mode = -1) const { return n.e(n.single(i), mode); }
    LoopElement fs(int i, int mode = -1) const { return n.f(n.single(i), mode); }
    LoopElement hs(int i) const { return n.h(n.single(i)); }
    LoopElement hm(int i, int j) const { return n.h(n.minus(i, j)); }
    LoopElement hp(int i, int j) const { return n.h(n.plus(i, j)); }

    /// c (e_a(-1) f_a(-1) + f_a(-1) e_a(-1)).
    void sym(OperatorWord& w, const Rational& c, const Weight& root) const {
        w.add(c, {n.e(root), n.f(root)});
        w.add(c, {n.f(root), n.e(root)});
    }
};

Identity make(std::string name, int i, OperatorWord lhs, OperatorWord rhs) {
    return {std::move(name), i > 0 ? "i=" + std::to_string(i) : std::string(), std::move(lhs), std::move(rhs)};
}

}  // namespace

std::vector<Identity> relations(const LieAlgebra& b, Emb4Form form) {
    if (b.type() != AlgebraType::B) throw std::invalid_argument("relations: needs a type B algebra");
    const Shorthand s(b);
    const Notation& n = s.n;
    const int l = s.l;
    const Rational k3 = Rational(2 * l - 3, 2);
    std::vector<Identity> out;

    {
        OperatorWord lhs, rhs;
        lhs.add(1, {s.fs(1, 0)});
        rhs.add(Rational(1, 2), {s.es(1), s.hs(1)});
        for (int j = 2; j <= l; ++j) rhs.add(1, {s.ep(1, j), s.fs(j)});
        for (int j = 2; j <= l; ++j) rhs.add(1, {s.em(1, j), s.es(j)});
        rhs.add(-k3, {s.es(1, -2)});
        out.push_back(make("emb.1", 0, lhs, rhs));
    }
    for (int i = 2; i <= l; ++i) {
        OperatorWord lhs, rhs;
        lhs.add(1, {s.fm(1, i, 0)});
        rhs.add(Rational(-1, 2), {s.es(1), s.es(i)});
        for (int j = 2; j < i; ++j) rhs.add(1, {s.ep(1, j), s.fm(j, i)});
        for (int j = 2; j < i; ++j) rhs.add(-1, {s.em(1, j), s.ep(j, i)});
        rhs.add(-1, {s.hm(1, i), s.ep(1, i)});
        for (int j = i + 1; j <= l; ++j) rhs.add(1, {s.ep(1, j), s.em(i, j)});
        for (int j = i + 1; j <= l; ++j) rhs.add(1, {s.em(1, j), s.ep(i, j)});
        rhs.add(k3, {s.ep(1, i, -2)});
        out.push_back(make("emb.2", i, lhs, rhs));
    }
    {
        OperatorWord lhs, rhs;
        lhs.add(1, {s.fs(1, 0), s.fm(1, 2, 0)});
        rhs.add(Rational(1, 2), {s.es(2), s.hs(2)});
        rhs.add(-1, {s.ep(1, 2), s.fs(1)});
        rhs.add(1, {s.es(1), s.fm(1, 2)});
        for (int j = 3; j <= l; ++j) rhs.add(1, {s.em(2, j), s.es(j)});
        for (int j = 3; j <= l; ++j) rhs.add(1, {s.ep(2, j), s.fs(j)});
        rhs.add(-Rational(2 * l - 5, 2), {s.es(2, -2)});
        out.push_back(make("emb.3", 0, lhs, rhs));
    }
    {
        OperatorWord lhs, rhs;
        lhs.add(1, {s.fs(1, 0), s.fs(1, 0)});
        s.sym(rhs, Rational(1, 2), n.single(1));
        rhs.add(Rational(-1, 2), {s.hs(1), s.hs(1)});
        for (int j = 2; j <= l; ++j) s.sym(rhs, 1, n.single(j));
        for (int j = 2; j <= l; ++j) s.sym(rhs, -1, n.plus(1, j));
        for (int j = 2; j <= l; ++j) {
            if (form == Emb4Form::corrected) {
                s.sym(rhs, -1, n.minus(1, j));
            } else {
                rhs.add(-1, {s.em(1, j), s.fm(1, j)});
                rhs.add(-1, {s.em(1, j), s.fm(1, j)});
            }
        }
        out.push_back(make("emb.4", 0, lhs, rhs));
    }
    for (int i = 2; i <= l; ++i) {
        OperatorWord lhs, rhs;
        lhs.add(1, {s.fm(1, i, 0), s.fp(1, i, 0)});
        s.sym(rhs, Rational(-1, 4), n.single(i));
        s.sym(rhs, Rational(1, 4), n.single(1));
        rhs.add(1, {s.hm(1, i), s.hp(1, i)});
        for (int j = 2; j <= l; ++j)
            if (j != i) s.sym(rhs, Rational(1, 2), n.plus(1, j));
        for (int j = 2; j <= l; ++j)
            if (j != i) s.sym(rhs, Rational(1, 2), n.minus(1, j));
        for (int j = 2; j < i; ++j) s.sym(rhs, Rational(-1, 2), n.minus(j, i));
        for (int j = 2; j <= l; ++j)
            if (j != i) s.sym(rhs, Rational(-1, 2), j < i ? n.plus(j, i) : n.plus(i, j));
        for (int j = i + 1; j <= l; ++j) s.sym(rhs, Rational(-1, 2), n.minus(i, j));
        out.push_back(make("emb.5", i, lhs, rhs));
    }
    for (int i = 3; i <= l; ++i) {
        OperatorWord lhs, rhs;
        lhs.add(1, {s.fp(1, i, 0)});
        rhs.add(Rational(-1, 2), {s.es(1), s.fs(i)});
        for (int j = 2; j < i; ++j) rhs.add(1, {s.ep(1, j), s.fp(j, i)});
        for (int j = 2; j < i; ++j) rhs.add(-1, {s.em(1, j), s.em(j, i)});
        rhs.add(-1, {s.hp(1, i), s.em(1, i)});
        for (int j = i + 1; j <= l; ++j) rhs.add(-1, {s.ep(1, j), s.fp(i, j)});
        for (int j = i + 1; j <= l; ++j) rhs.add(-1, {s.em(1, j), s.fm(i, j)});
        rhs.add(k3, {s.em(1, i, -2)});
        out.push_back(make("emb.6", i, lhs, rhs));
    }
    for (int i = 3; i <= l; ++i) {
        OperatorWord lhs, rhs;
        lhs.add(1, {s.fm(1, i, 0), s.fm(1, 2, 0)});
        rhs.add(Rational(-1, 2), {s.es(2), s.es(i)});
        rhs.add(-1, {s.hm(2, i), s.ep(2, i)});
        rhs.add(-1, {s.fm(1, 2), s.ep(1, i)});
        rhs.add(-1, {s.ep(1, 2), s.fm(1, i)});
        for (int j = 3; j < i; ++j) rhs.add(1, {s.ep(2, j), s.fm(j, i)});
        for (int j = 3; j < i; ++j) rhs.add(-1, {s.em(2, j), s.ep(j, i)});
        for (int j = i + 1; j <= l; ++j) rhs.add(1, {s.em(2, j), s.ep(i, j)});
        for (int j = i + 1; j <= l; ++j) rhs.add(1, {s.ep(2, j), s.em(i, j)});
        rhs.add(k3, {s.ep(2, i, -2)});
        out.push_back(make("emb.7", i, lhs, rhs));
    }
    {
        OperatorWord lhs, rhs;
        lhs.add(1, {s.fm(1, 2, 0), s.fm(1, 2, 0)});
        rhs.add(Rational(-1, 2), {s.es(2), s.es(2)});
        rhs.add(-2, {s.fm(1, 2), s.ep(1, 2)});
        for (int j = 3; j <= l; ++j) rhs.add(2, {s.em(2, j), s.ep(2, j)});
        out.push_back(make("emb.8", 0, lhs, rhs));
    }
    for (int i = 3; i <= l; ++i) {
        OperatorWord lhs, rhs;
        lhs.add(1, {s.fm(1, 2, 0), s.fp(1, i, 0)});
        rhs.add(Rational(-1, 2), {s.es(2), s.fs(i)});
        rhs.add(-1, {s.hp(2, i), s.em(2, i)});
        rhs.add(-1, {s.fm(1, 2), s.em(1, i)});
        rhs.add(-1, {s.ep(1, 2), s.fp(1, i)});
        for (int j = 3; j < i; ++j) rhs.add(1, {s.ep(2, j), s.fp(j, i)});
        for (int j = 3; j < i; ++j) rhs.add(-1, {s.em(2, j), s.em(j, i)});
        for (int j = i + 1; j <= l; ++j) rhs.add(-1, {s.em(2, j), s.fm(i, j)});
        for (int j = i + 1; j <= l; ++j) rhs.add(-1, {s.ep(2, j), s.fp(i, j)});
        rhs.add(k3, {s.em(2, i, -2)});
        out.push_back(make("emb.9", i, lhs, rhs));
    }
    return out;
}

RelationsReport verify_relations(const verma::Module& mb, Emb4Form form) {
    RelationsReport r;
    r.rank = mb.algebra().rank();
    const State vb = singular::build_vB(mb);
    r.pass = true;
    for (const auto& id : relations(mb.algebra(), form)) {
        r.checks.push_back(check_identity(mb, id, vb));
        r.pass = r.pass && r.checks.back().pass;
    }
    return r;
}

Certificate membership_word(const LieAlgebra& b) {
    if (b.type() != AlgebraType::B) throw std::invalid_argument("membership_word: needs a type B algebra");
    const Shorthand s(b);
    const int l = s.l;
    const Rational L(l);
    Certificate out;
    auto& w = out.word;
    int& fam = out.families;
    const auto f12 = s.fm(1, 2, 0);
    const auto fs1 = s.fs(1, 0);

    ++fam;
    w.add((2 * L + 1) / 12, {s.es(2), s.es(2)});
    ++fam;
    w.add(-(2 * L - 5) / 3, {s.fm(1, 2), s.ep(1, 2)});
    ++fam;
    for (int i = 3; i <= l; ++i) w.add((2 * L + 1) / 3, {s.em(2, i), s.ep(2, i)});
    ++fam;
    w.add(Rational(-1, 2), {s.ep(1, 2), s.es(2), fs1});
    ++fam;
    for (int i = 3; i <= l; ++i) w.add(1, {s.ep(1, 2), s.em(2, i), s.fm(1, i, 0)});
    ++fam;
    w.add(-(2 * L + 1) / 12, {s.es(1), s.es(2), f12});
    ++fam;
    w.add(-(2 * L + 1) * (2 * L - 5) / 12, {s.ep(1, 2, -2), f12});
    ++fam;
    w.add((2 * L - 5) / 6, {s.hm(1, 2), s.ep(1, 2), f12});
    ++fam;
    for (int i = 3; i <= l; ++i) w.add(-(2 * L + 1) / 6, {s.em(1, i), s.ep(2, i), f12});
    ++fam;
    for (int i = 3; i <= l; ++i) w.add(-(2 * L + 1) / 6, {s.ep(1, i), s.em(2, i), f12});
    ++fam;
    w.add(Rational(1, 2), {s.es(1), s.ep(1, 2), fs1, f12});
    ++fam;
    w.add(1 / (2 * L - 1), {s.ep(1, 2), s.ep(1, 2), fs1, fs1});
    ++fam;
    w.add(-(2 * L - 5) / (2 * L - 1), {s.ep(1, 2), s.ep(1, 2), f12, s.fp(1, 2, 0)});
    ++fam;
    for (int i = 3; i <= l; ++i)
        w.add(4 / (2 * L - 1), {s.ep(1, 2), s.ep(1, 2), s.fm(1, i, 0), s.fp(1, i, 0)});
    ++fam;
    for (int i = 3; i <= l; ++i) w.add(1, {s.ep(1, 2), s.ep(2, i), s.fp(1, i, 0)});
    ++fam;
    for (int i = 3; i <= l; ++i) w.add(-1, {s.ep(1, 2), s.em(1, i), s.fm(1, i, 0), f12});
    ++fam;
    w.add((2 * L + 1) / 24, {s.es(1), s.es(1), f12, f12});
    ++fam;
    w.add((2 * L - 5) / 6, {s.em(1, 2), s.ep(1, 2), f12, f12});
    ++fam;
    for (int i = 3; i <= l; ++i) w.add((2 * L + 1) / 6, {s.em(1, i), s.ep(1, i), f12, f12});
    ++fam;
    for (int i = 3; i <= l; ++i) w.add(-1, {s.ep(1, 2), s.ep(1, i), f12, s.fp(1, i, 0)});
    return out;
}

CertificateReport verify_certificate(const verma::Module& mb, const verma::Module& md, const OperatorWord& word) {
    CertificateReport r;
    r.rank = mb.algebra().rank();
    r.word_terms = static_cast<int>(word.terms().size());
    r.image = mb.apply_word(word, singular::build_vB(mb));
    r.target = embed_state(md.algebra(), mb.algebra(), singular::build_vD(md));
    r.difference = r.image - r.target;
    r.grade = mb.grade(r.image);
    r.pass = !r.target.is_zero() && r.difference.is_zero();
    return r;
}

CertificateReport verify_membership_certificate(const verma::Module& mb, const verma::Module& md) {
    return verify_certificate(mb, md, membership_word(mb.algebra()).word);
}

}  // namespace affverma::embedding
