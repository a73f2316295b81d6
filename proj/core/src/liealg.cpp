#include "affverma/liealg.hpp"

#include <sstream>
#include <stdexcept>

namespace affverma {

std::string to_string(AlgebraType t) { return t == AlgebraType::B ? "B" : "D"; }

AlgebraType parse_algebra_type(const std::string& s) {
    if (s == "B" || s == "b") return AlgebraType::B;
    if (s == "D" || s == "d") return AlgebraType::D;
    throw std::invalid_argument("unknown algebra type '" + s + "' (expected B or D)");
}

std::string to_string(Role r) {
    switch (r) {
        case Role::e: return "e";
        case Role::f: return "f";
        case Role::h: return "h";
    }
    return "?";
}

namespace roots {

Weight zero(int l) { return Weight(static_cast<std::size_t>(l), 0); }

Weight minus(int l, int i, int j) {
    Weight w = zero(l);
    w.at(static_cast<std::size_t>(i - 1)) += 1;
    w.at(static_cast<std::size_t>(j - 1)) -= 1;
    return w;
}

Weight plus(int l, int i, int j) {
    Weight w = zero(l);
    w.at(static_cast<std::size_t>(i - 1)) += 1;
    w.at(static_cast<std::size_t>(j - 1)) += 1;
    return w;
}

Weight single(int l, int i) {
    Weight w = zero(l);
    w.at(static_cast<std::size_t>(i - 1)) = 1;
    return w;
}

Weight add(const Weight& a, const Weight& b) {
    Weight r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.at(i);
    return r;
}

Weight scale(const Weight& a, int c) {
    Weight r = a;
    for (auto& x : r) x *= c;
    return r;
}

int inner(const Weight& a, const Weight& b) {
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b.at(i);
    return s;
}

std::string to_string(const Weight& w) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) continue;
        if (w[i] > 0 && !first) os << '+';
        if (w[i] == -1)
            os << '-';
        else if (w[i] != 1)
            os << w[i];
        os << "e" << i + 1;
        first = false;
    }
    return first ? "0" : os.str();
}

}  // namespace roots

RootDatum RootDatum::make(AlgebraType type, int l) {
    if (l < 4) throw std::invalid_argument("rank must be at least 4, got " + std::to_string(l));
    RootDatum rd{type, l, {}, {}, roots::plus(l, 1, 2), 0, {}};
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) {
            rd.positive_roots.push_back(roots::minus(l, i, j));
            rd.positive_roots.push_back(roots::plus(l, i, j));
        }
    if (type == AlgebraType::B)
        for (int i = 1; i <= l; ++i) rd.positive_roots.push_back(roots::single(l, i));
    for (int i = 1; i < l; ++i) rd.simple_roots.push_back(roots::minus(l, i, i + 1));
    rd.simple_roots.push_back(type == AlgebraType::D ? roots::plus(l, l - 1, l) : roots::single(l, l));
    rd.dual_coxeter = type == AlgebraType::B ? 2 * l - 1 : 2 * l - 2;

    rd.rho.assign(static_cast<std::size_t>(l), Rational(0));
    for (const auto& a : rd.positive_roots)
        for (std::size_t i = 0; i < a.size(); ++i) rd.rho[i] += make_rational(a[i], 2);

    // h_dual = <rho, theta^vee> + 1, theta long with (theta, theta) = 2.
    Rational rho_theta = 0;
    for (std::size_t i = 0; i < rd.rho.size(); ++i) rho_theta += rd.rho[i] * rd.highest_root[i];
    if (rho_theta + 1 != rd.dual_coxeter) throw std::logic_error("dual Coxeter number inconsistent with rho");
    return rd;
}

bool RootDatum::is_root(const Weight& w) const {
    for (const auto& a : positive_roots)
        if (a == w || roots::scale(a, -1) == w) return true;
    return false;
}

LieElement::LieElement(AlgebraTag tag, int index, Rational c) : tag_(tag) { add(index, c); }

Rational LieElement::coefficient(int index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Rational(0) : it->second;
}

LieElement& LieElement::add(int index, const Rational& c) {
    if (c == 0) return *this;
    auto& slot = terms_[index];
    slot += c;
    if (slot == 0) terms_.erase(index);
    return *this;
}

void LieElement::require_same(const LieElement& o) const {
    if (!(tag_ == o.tag_)) throw std::invalid_argument("LieElement: elements from different algebras");
}

LieElement LieElement::operator+(const LieElement& o) const {
    require_same(o);
    LieElement r = *this;
    for (const auto& [i, c] : o.terms_) r.add(i, c);
    return r;
}

LieElement LieElement::operator-(const LieElement& o) const {
    require_same(o);
    LieElement r = *this;
    for (const auto& [i, c] : o.terms_) r.add(i, -c);
    return r;
}

LieElement LieElement::operator*(const Rational& c) const {
    LieElement r(tag_);
    if (c == 0) return r;
    for (const auto& [i, v] : terms_) r.terms_.emplace(i, v * c);
    return r;
}

std::shared_ptr<const LieAlgebra> LieAlgebra::build(AlgebraType type, int rank) {
    return std::shared_ptr<const LieAlgebra>(new LieAlgebra(RootDatum::make(type, rank)));
}

LieAlgebra::LieAlgebra(RootDatum rd) : roots_(std::move(rd)) {
    using clifford::Element;
    const int l = roots_.rank;

    // Positive root -> (i, j, kind) decoding for the realization tables.
    auto realize = [l](const Weight& a, bool raising) -> Element {
        std::vector<int> pos, neg;
        for (int i = 0; i < l; ++i) {
            if (a[static_cast<std::size_t>(i)] > 0) pos.push_back(i + 1);
            if (a[static_cast<std::size_t>(i)] < 0) neg.push_back(i + 1);
        }
        if (pos.size() == 1 && neg.empty())  // short root e_i
            return raising ? Element::plain(l, pos[0]) : Element::starred(l, pos[0]);
        if (pos.size() == 1 && neg.size() == 1) {  // e_i - e_j, i < j
            const int i = pos[0], j = neg[0];
            return raising ? clifford::normal_order(Element::plain(l, i), Element::starred(l, j))
                           : clifford::normal_order(Element::plain(l, j), Element::starred(l, i));
        }
        // e_i + e_j, i < j
        const int i = pos[0], j = pos[1];
        return raising ? clifford::normal_order(Element::plain(l, i), Element::plain(l, j))
                       : clifford::normal_order(Element::starred(l, j), Element::starred(l, i));
    };

    for (const auto& a : roots_.positive_roots) {
        e_index_[a] = static_cast<int>(labels_.size());
        labels_.push_back({Role::e, a, 0});
        weights_.push_back(a);
        realizations_.push_back(realize(a, true));
    }
    for (const auto& a : roots_.positive_roots) {
        f_index_[a] = static_cast<int>(labels_.size());
        labels_.push_back({Role::f, a, 0});
        weights_.push_back(roots::scale(a, -1));
        realizations_.push_back(realize(a, false));
    }
    for (int i = 1; i <= l; ++i) {
        labels_.push_back({Role::h, {}, i});
        weights_.push_back(roots::zero(l));
        realizations_.push_back(clifford::normal_order(Element::plain(l, i), Element::starred(l, i)));
    }

    for (int b = 0; b < dim(); ++b) {
        int found = 0;
        for (const auto& [m, c] : realizations_[static_cast<std::size_t>(b)].terms()) {
            if (m.empty()) continue;
            if (!leading_.emplace(m, std::make_pair(b, c)).second)
                throw std::logic_error("realizations share a monomial");
            ++found;
        }
        if (found != 1) throw std::logic_error("realization without a unique leading monomial");
    }

    const auto n = static_cast<std::size_t>(dim());
    table_.assign(n * n, LieElement(tag()));
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            table_[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] =
                from_clifford(clifford::commutator(realizations_[static_cast<std::size_t>(i)],
                                                   realizations_[static_cast<std::size_t>(j)]));

    partner_.assign(n, -1);
    partner_value_.assign(n, Rational(0));
    for (int b = 0; b < dim(); ++b) {
        const auto& lab = labels_[static_cast<std::size_t>(b)];
        if (lab.role == Role::h) {
            partner_[static_cast<std::size_t>(b)] = b;
            partner_value_[static_cast<std::size_t>(b)] = 1;
        } else {
            const int other = lab.role == Role::e ? f_index_.at(lab.root) : e_index_.at(lab.root);
            partner_[static_cast<std::size_t>(b)] = other;
            partner_value_[static_cast<std::size_t>(b)] = make_rational(2, roots::inner(lab.root, lab.root));
        }
    }
}

std::string LieAlgebra::label_string(int index) const {
    const auto& lab = label(index);
    if (lab.role == Role::h) return "H" + std::to_string(lab.cartan);
    return to_string(lab.role) + "[" + roots::to_string(lab.root) + "]";
}

int LieAlgebra::find_e(const Weight& root) const {
    auto it = e_index_.find(root);
    return it == e_index_.end() ? -1 : it->second;
}

int LieAlgebra::find_f(const Weight& root) const {
    auto it = f_index_.find(root);
    return it == f_index_.end() ? -1 : it->second;
}

int LieAlgebra::index_e(const Weight& root) const {
    const int i = find_e(root);
    if (i < 0) throw std::invalid_argument("no e_alpha for alpha = " + roots::to_string(root));
    return i;
}

int LieAlgebra::index_f(const Weight& root) const {
    const int i = find_f(root);
    if (i < 0) throw std::invalid_argument("no f_alpha for alpha = " + roots::to_string(root));
    return i;
}

int LieAlgebra::index_h(int i) const {
    if (i < 1 || i > rank()) throw std::invalid_argument("Cartan index out of range");
    return 2 * static_cast<int>(roots_.positive_roots.size()) + i - 1;
}

LieElement LieAlgebra::coroot(const Weight& root) const { return bracket(e(root), f(root)); }

void LieAlgebra::require_tag(const LieElement& x) const {
    if (!(x.tag() == tag())) throw std::invalid_argument("LieElement belongs to a different algebra");
}

LieElement LieAlgebra::bracket(const LieElement& x, const LieElement& y) const {
    require_tag(x);
    require_tag(y);
    LieElement r(tag());
    for (const auto& [i, ci] : x.terms())
        for (const auto& [j, cj] : y.terms())
            for (const auto& [k, ck] : bracket_basis(i, j).terms()) r.add(k, ci * cj * ck);
    return r;
}

Rational LieAlgebra::form_basis(int i, int j) const {
    return partner_.at(static_cast<std::size_t>(i)) == j ? partner_value_[static_cast<std::size_t>(i)] : Rational(0);
}

Rational LieAlgebra::form(const LieElement& x, const LieElement& y) const {
    require_tag(x);
    require_tag(y);
    Rational s = 0;
    for (const auto& [i, ci] : x.terms()) {
        const Rational cj = y.coefficient(partner_[static_cast<std::size_t>(i)]);
        if (cj != 0) s += ci * cj * partner_value_[static_cast<std::size_t>(i)];
    }
    return s;
}

std::vector<std::pair<LieElement, LieElement>> LieAlgebra::dual_basis() const {
    std::vector<std::pair<LieElement, LieElement>> out;
    out.reserve(static_cast<std::size_t>(dim()));
    for (int b = 0; b < dim(); ++b) {
        const auto p = static_cast<std::size_t>(b);
        out.emplace_back(basis(b), basis(partner_[p], 1 / partner_value_[p]));
    }
    return out;
}

clifford::Element LieAlgebra::to_clifford(const LieElement& x) const {
    require_tag(x);
    clifford::Element r(rank());
    for (const auto& [i, c] : x.terms()) r = r + realizations_[static_cast<std::size_t>(i)] * c;
    return r;
}

LieElement LieAlgebra::from_clifford(const clifford::Element& c) const {
    if (c.rank() != rank()) throw std::invalid_argument("Clifford element of a different rank");
    LieElement out(tag());
    clifford::Element rest = c;
    for (const auto& [m, coeff] : c.terms()) {
        if (m.empty()) continue;
        auto it = leading_.find(m);
        if (it == leading_.end())
            throw std::domain_error("Clifford element leaves the span of the basis: " + c.to_string());
        const auto [b, lead] = it->second;
        const Rational x = coeff / lead;
        out.add(b, x);
        rest = rest - realizations_[static_cast<std::size_t>(b)] * x;
    }
    if (!rest.is_zero()) throw std::domain_error("Clifford element leaves the span of the basis: " + c.to_string());
    return out;
}

}  // namespace affverma
