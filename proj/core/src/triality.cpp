#include "affverma/triality.hpp"

#include "affverma/linsolve.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace affverma::triality {

bool is_diagram_symmetry(const NodePermutation& sigma) {
    NodePermutation sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    return sorted == identity_nodes && sigma[1] == 2;
}

DiagramAutomorphism DiagramAutomorphism::build(AlgebraHandle d4, const NodePermutation& sigma) {
    if (!d4 || d4->type() != AlgebraType::D || d4->rank() != 4)
        throw std::invalid_argument("diagram automorphism: needs g_{D_4}");
    if (!is_diagram_symmetry(sigma)) throw std::invalid_argument("diagram automorphism: not a diagram symmetry");

    DiagramAutomorphism pi(d4, sigma);
    const LieAlgebra& g = *d4;
    const auto& simple = g.root_datum().simple_roots;
    const auto simple_of = [&](int node) { return simple[static_cast<std::size_t>(node - 1)]; };

    std::vector<std::optional<LieElement>> img(static_cast<std::size_t>(g.dim()));
    auto set = [&](int index, LieElement x) { img[static_cast<std::size_t>(index)] = std::move(x); };

    // Root vectors: breadth-first from the simple ones, each new root reached once
    // as [e_i, e_gamma] (resp. [f_i, f_gamma]).
    std::deque<Weight> queue;
    for (int node = 1; node <= 4; ++node) {
        const Weight& a = simple_of(node);
        const Weight& b = simple_of(sigma[static_cast<std::size_t>(node - 1)]);
        set(g.index_e(a), g.e(b));
        set(g.index_f(a), g.f(b));
        queue.push_back(a);
    }
    while (!queue.empty()) {
        const Weight gamma = queue.front();
        queue.pop_front();
        for (int node = 1; node <= 4; ++node) {
            const Weight& a = simple_of(node);
            const Weight beta = roots::add(gamma, a);
            const int ie = g.find_e(beta);
            if (ie < 0 || img[static_cast<std::size_t>(ie)]) continue;
            const int ei = g.index_e(a), eg = g.index_e(gamma);
            const int fi = g.index_f(a), fg = g.index_f(gamma);
            const int iff = g.index_f(beta);
            const Rational ce = g.bracket_basis(ei, eg).coefficient(ie);
            const Rational cf = g.bracket_basis(fi, fg).coefficient(iff);
            if (ce == 0 || cf == 0) throw std::logic_error("diagram automorphism: degenerate bracket word");
            set(ie, g.bracket(*img[static_cast<std::size_t>(ei)], *img[static_cast<std::size_t>(eg)]) *
                        Rational(1 / ce));
            set(iff, g.bracket(*img[static_cast<std::size_t>(fi)], *img[static_cast<std::size_t>(fg)]) *
                         Rational(1 / cf));
            queue.push_back(beta);
        }
    }

    // Cartan part: H_j = sum_i c_i h_i, and pi(h_i) = h_{sigma(i)}.
    std::vector<LieElement> h;
    for (int node = 1; node <= 4; ++node) h.push_back(g.coroot(simple_of(node)));
    for (int j = 1; j <= 4; ++j) {
        std::vector<linsolve::SparseRow> rows;
        for (int t = 1; t <= 4; ++t) {
            const int col = g.index_h(t);
            linsolve::SparseRow row;
            for (int i = 0; i < 4; ++i) {
                const Rational c = h[static_cast<std::size_t>(i)].coefficient(col);
                if (c != 0) row[i] = c;
            }
            const Rational c = g.H(j).coefficient(col);
            if (c != 0) row[4] = c;
            rows.push_back(row);
        }
        const auto ns = linsolve::nullspace(rows, 5);
        if (ns.size() != 1 || ns[0][4] == 0) throw std::logic_error("diagram automorphism: Cartan closure failed");
        LieElement image(g.tag());
        for (int i = 0; i < 4; ++i) {
            const Rational c = -ns[0][static_cast<std::size_t>(i)] / ns[0][4];
            if (c != 0) image = image + g.coroot(simple_of(sigma[static_cast<std::size_t>(i)])) * c;
        }
        set(g.index_h(j), image);
    }

    for (std::size_t i = 0; i < img.size(); ++i) {
        if (!img[i]) throw std::logic_error("diagram automorphism: closure does not span");
        pi.images_.push_back(*img[i]);
    }
    return pi;
}

std::vector<std::vector<Rational>> DiagramAutomorphism::matrix() const {
    const auto n = images_.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& [i, c] : images_[j].terms()) m[static_cast<std::size_t>(i)][j] = c;
    return m;
}

LieElement DiagramAutomorphism::apply(const LieElement& x) const {
    LieElement out(algebra_->tag());
    for (const auto& [i, c] : x.terms()) out = out + image(i) * c;
    return out;
}

verma::State DiagramAutomorphism::apply(const verma::Module& m, const verma::State& s) const {
    if (m.algebra().tag() != algebra_->tag()) throw std::invalid_argument("diagram automorphism: module mismatch");
    verma::State out;
    for (const auto& [mono, c] : s.terms()) {
        std::vector<verma::LoopElement> product;
        product.reserve(mono.size());
        for (auto f : mono) product.push_back({image(verma::factor_index(f)), verma::factor_mode(f)});
        out.add(m.normal_form(product), c);
    }
    return out;
}

bool DiagramAutomorphism::preserves_brackets() const {
    const LieAlgebra& g = *algebra_;
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
            if (apply(g.bracket_basis(i, j)) != g.bracket(image(i), image(j))) return false;
    return true;
}

DiagramAutomorphism DiagramAutomorphism::compose(const DiagramAutomorphism& other) const {
    NodePermutation sigma{};
    for (std::size_t i = 0; i < 4; ++i) sigma[i] = sigma_[static_cast<std::size_t>(other.sigma_[i] - 1)];
    DiagramAutomorphism out(algebra_, sigma);
    for (const auto& x : other.images_) out.images_.push_back(apply(x));
    return out;
}

bool DiagramAutomorphism::is_identity() const {
    for (int i = 0; i < algebra_->dim(); ++i)
        if (image(i) != algebra_->basis(i)) return false;
    return true;
}

InvarianceReport check_invariance(const verma::Module& m, const verma::State& v, const NodePermutation& sigma,
                                  std::string name) {
    InvarianceReport r;
    r.name = std::move(name);
    r.sigma = sigma;
    const auto pi = DiagramAutomorphism::build(m.handle(), sigma);
    r.bracket_preserving = pi.preserves_brackets();
    r.image = pi.apply(m, v);
    r.fixed = r.image == v;
    if (!r.fixed) {
        const auto c = verma::solve_multiple(r.image, v);
        if (c && *c != 1) r.scalar = c;
    }
    r.pass = r.bracket_preserving && r.fixed && !v.is_zero();
    return r;
}

}  // namespace affverma::triality
