#include "affverma/serialize.hpp"

#include <stdexcept>

namespace affverma::io {

namespace {

json weight_json(const Weight& w) { return json(w); }

json rational_list(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

json affine_weight_json(const affine::Weight& w) {
    return {{"finite", rational_list(w.finite)}, {"level", to_string(w.level)}, {"delta", to_string(w.delta)}};
}

json label_json(const BasisLabel& lab) {
    if (lab.role == Role::h) return json::array({"h", lab.cartan});
    return json::array({to_string(lab.role), weight_json(lab.root)});
}

BasisLabel label_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("basis label: expected [role, root or index]");
    const std::string role = j.at(0).get<std::string>();
    BasisLabel lab{};
    if (role == "h") {
        lab.role = Role::h;
        lab.cartan = j.at(1).get<int>();
    } else if (role == "e" || role == "f") {
        lab.role = role == "e" ? Role::e : Role::f;
        lab.root = j.at(1).get<Weight>();
    } else {
        throw std::invalid_argument("basis label: unknown role " + role);
    }
    return lab;
}

bool same_label(const BasisLabel& a, const BasisLabel& b) {
    return a.role == b.role && a.root == b.root && a.cartan == b.cartan;
}

int index_of(const LieAlgebra& g, const BasisLabel& lab) {
    int idx = -1;
    switch (lab.role) {
        case Role::e: idx = g.find_e(lab.root); break;
        case Role::f: idx = g.find_f(lab.root); break;
        case Role::h: idx = lab.cartan >= 1 && lab.cartan <= g.rank() ? g.index_h(lab.cartan) : -1; break;
    }
    if (idx < 0) throw std::invalid_argument("basis label not in the algebra");
    return idx;
}

json element_json(const LieElement& x) {
    json out = json::array();
    for (const auto& [i, c] : x.terms()) out.push_back(json::array({i, to_string(c)}));
    return out;
}

json coroot_json(const affine::Coroot& c) { return {{"root", weight_json(c.root)}, {"mode", c.mode}}; }

json residuals_json(const verma::Module& m, const verma::State& s) { return to_json(m.algebra(), s); }

}  // namespace

json to_json(const LieAlgebra& g, const verma::State& s) {
    json out = json::array();
    for (const auto& [mono, c] : s.terms()) {
        json factors = json::array();
        for (auto f : mono) {
            json lab = label_json(g.label(verma::factor_index(f)));
            lab.push_back(verma::factor_mode(f));
            factors.push_back(std::move(lab));
        }
        out.push_back({{"coeff", to_string(c)}, {"monomial", std::move(factors)}});
    }
    return out;
}

verma::State state_from_json(const LieAlgebra& g, const json& j) {
    if (!j.is_array()) throw std::invalid_argument("state: expected an array of terms");
    verma::State s;
    for (const auto& term : j) {
        const Rational c = parse_rational(term.at("coeff").get<std::string>());
        verma::Monomial mono;
        for (const auto& f : term.at("monomial")) {
            if (!f.is_array() || f.size() != 3) throw std::invalid_argument("state: factor must be [role, x, mode]");
            const int idx = index_of(g, label_from_json(json::array({f.at(0), f.at(1)})));
            mono.push_back(verma::pack(idx, f.at(2).get<int>()));
        }
        if (!verma::is_canonical(mono)) throw std::invalid_argument("state: monomial not canonical");
        s.add(mono, c);
    }
    return s;
}

json to_json(const LieAlgebra&, const verma::Grade& grade) {
    json out = {{"zero", grade.zero}};
    out["degree"] = grade.degree ? json(*grade.degree) : json(nullptr);
    out["weight"] = grade.weight ? weight_json(*grade.weight) : json(nullptr);
    return out;
}

AlgebraTable AlgebraTable::of(const LieAlgebra& g) {
    AlgebraTable t;
    t.type = g.type();
    t.rank = g.rank();
    t.dual_coxeter = g.dual_coxeter();
    t.positive_roots = g.root_datum().positive_roots;
    t.simple_roots = g.root_datum().simple_roots;
    for (int i = 0; i < g.dim(); ++i) t.basis.push_back(g.label(i));
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i; j < g.dim(); ++j) {
            if (j > i && !g.bracket_basis(i, j).is_zero()) t.brackets[{i, j}] = g.bracket_basis(i, j).terms();
            const Rational f = g.form_basis(i, j);
            if (f != 0) t.form[{i, j}] = f;
        }
    return t;
}

bool AlgebraTable::operator==(const AlgebraTable& o) const {
    if (type != o.type || rank != o.rank || dual_coxeter != o.dual_coxeter || basis.size() != o.basis.size())
        return false;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!same_label(basis[i], o.basis[i])) return false;
    return brackets == o.brackets && form == o.form && positive_roots == o.positive_roots &&
           simple_roots == o.simple_roots;
}

json to_json(const AlgebraTable& t) {
    json basis = json::array();
    for (std::size_t i = 0; i < t.basis.size(); ++i) basis.push_back(label_json(t.basis[i]));
    json brackets = json::array();
    for (const auto& [ij, terms] : t.brackets) {
        json value = json::array();
        for (const auto& [k, c] : terms) value.push_back(json::array({k, to_string(c)}));
        brackets.push_back(json::array({ij.first, ij.second, value}));
    }
    json form = json::array();
    for (const auto& [ij, c] : t.form) form.push_back(json::array({ij.first, ij.second, to_string(c)}));
    return {{"type", to_string(t.type)},
            {"rank", t.rank},
            {"dim", t.basis.size()},
            {"dual_coxeter", t.dual_coxeter},
            {"basis", basis},
            {"brackets", brackets},
            {"form", form},
            {"positive_roots", t.positive_roots},
            {"simple_roots", t.simple_roots}};
}

AlgebraTable algebra_table_from_json(const json& j) {
    AlgebraTable t;
    t.type = parse_algebra_type(j.at("type").get<std::string>());
    t.rank = j.at("rank").get<int>();
    t.dual_coxeter = j.at("dual_coxeter").get<int>();
    for (const auto& lab : j.at("basis")) t.basis.push_back(label_from_json(lab));
    if (j.at("dim").get<std::size_t>() != t.basis.size()) throw std::invalid_argument("algebra: dim mismatch");
    for (const auto& entry : j.at("brackets")) {
        std::map<int, Rational> terms;
        for (const auto& kc : entry.at(2)) terms[kc.at(0).get<int>()] = parse_rational(kc.at(1).get<std::string>());
        t.brackets[{entry.at(0).get<int>(), entry.at(1).get<int>()}] = std::move(terms);
    }
    for (const auto& entry : j.at("form"))
        t.form[{entry.at(0).get<int>(), entry.at(1).get<int>()}] = parse_rational(entry.at(2).get<std::string>());
    t.positive_roots = j.at("positive_roots").get<std::vector<Weight>>();
    t.simple_roots = j.at("simple_roots").get<std::vector<Weight>>();
    return t;
}

json to_json(const affine::LevelReport& r) {
    const auto& a = r.admissibility;
    json tail = json::array();
    for (const auto& t : a.tail)
        tail.push_back({{"coroot", coroot_json(t.finite_part)},
                        {"slope", to_string(t.slope)},
                        {"pairing_past_bound", to_string(t.at_bound)},
                        {"argument", t.argument}});
    json simple = json::array(), violations = json::array();
    for (const auto& c : a.simple_coroots) simple.push_back(coroot_json(c));
    for (const auto& c : a.violations) violations.push_back(coroot_json(c));
    json adm = {{"admissible", a.admissible},
                {"positivity", a.positivity_ok},
                {"rationality", a.rationality_ok},
                {"mode_bound", a.mode_bound},
                {"violations", violations},
                {"simple_coroots", simple},
                {"integral_rank", a.integral_rank},
                {"tail", tail}};
    adm["degenerate_reason"] = a.degenerate_reason ? json(*a.degenerate_reason) : json(nullptr);
    return {{"check", "admissible"},
            {"l", r.rank},
            {"k", to_string(r.level)},
            {"simple_pairings", rational_list(r.simple_pairings)},
            {"alpha0_pairing", to_string(r.alpha0_pairing)},
            {"reflection_pairing", to_string(r.reflection_pairing)},
            {"reflected", affine_weight_json(r.reflected)},
            {"expected_reflected", affine_weight_json(r.expected_reflected)},
            {"admissibility", adm},
            {"pass", r.pass}};
}

json to_json(const verma::Module& m, const singular::SingularReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"generator", c.generator}, {"residual", residuals_json(m, c.residual)}});
    return {{"check", "singular"},
            {"type", to_string(m.algebra().type())},
            {"l", m.algebra().rank()},
            {"k", to_string(m.level())},
            {"vector", r.vector_id},
            {"generators", checks},
            {"grade", to_json(m.algebra(), r.grade)},
            {"pass", r.pass}};
}

json to_json(const verma::Module& m, const IdentityCheck& c) {
    json out = {{"relation", c.name},
                {"instance", c.instance},
                {"grade", to_json(m.algebra(), c.lhs_grade)},
                {"pass", c.pass}};
    out["difference"] = residuals_json(m, c.difference);
    return out;
}

json to_json(const verma::Module& m, const embedding::RelationsReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(m, c));
    return {{"check", "embedding_relations"}, {"l", r.rank}, {"relations", checks}, {"pass", r.pass}};
}

json to_json(const verma::Module& m, const embedding::CertificateReport& r) {
    return {{"check", "membership_certificate"},
            {"l", r.rank},
            {"word_terms", r.word_terms},
            {"image_terms", r.image.size()},
            {"grade", to_json(m.algebra(), r.grade)},
            {"difference", residuals_json(m, r.difference)},
            {"pass", r.pass}};
}

json to_json(const verma::Module& m, const conformal::QuadraticReport& r) {
    json out = {{"check", "quadratic_relation"},
                {"l", r.rank},
                {"short_coefficient", to_string(r.short_coefficient)},
                {"u_terms", r.u.size()},
                {"u_grade", to_json(m.algebra(), r.u_grade)},
                {"pass", r.pass}};
    out["s"] = r.s ? json(to_string(*r.s)) : json(nullptr);
    if (!r.pass) out["r"] = residuals_json(m, r.r);
    return out;
}

json to_json(const verma::Module& m, const conformal::EqualityReport& r) {
    json out = {{"check", "conformal_equality"},
                {"l", r.rank},
                {"k", to_string(r.level)},
                {"c_B", to_string(r.c_b)},
                {"c_D", to_string(r.c_d)},
                {"grade", to_json(m.algebra(), r.grade)},
                {"pass", r.pass}};
    out["s_prime"] = r.s_prime ? json(to_string(*r.s_prime)) : json(nullptr);
    if (!r.pass) out["difference"] = residuals_json(m, r.difference);
    return out;
}

json to_json(const verma::Module& m, const appendix::Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(m, c));
    return {{"check", "appendix"},
            {"l", r.rank},
            {"relations", checks},
            {"final_residual", residuals_json(m, r.final_residual)},
            {"pass", r.pass}};
}

json to_json(const verma::Module& m, const triality::InvarianceReport& r) {
    json out = {{"check", "triality"},
                {"map", r.name},
                {"sigma", r.sigma},
                {"bracket_preserving", r.bracket_preserving},
                {"fixed", r.fixed},
                {"pass", r.pass}};
    out["scalar"] = r.scalar ? json(to_string(*r.scalar)) : json(nullptr);
    if (!r.fixed) out["image"] = residuals_json(m, r.image);
    return out;
}

json to_json(const triality::DiagramAutomorphism& pi) {
    json images = json::array();
    for (int i = 0; i < pi.algebra().dim(); ++i) images.push_back(element_json(pi.image(i)));
    return {{"sigma", pi.sigma()}, {"images", images}};
}

}  // namespace affverma::io
