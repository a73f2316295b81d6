#include "affverma/affine_weights.hpp"

#include "affverma/linsolve.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace affverma::affine {

Weight Weight::level_multiple(int rank, const Rational& k) {
    return Weight{std::vector<Rational>(static_cast<std::size_t>(rank), Rational(0)), k, Rational(0)};
}

bool Coroot::is_positive() const {
    if (mode > 0) return true;
    if (mode < 0) return false;
    for (int x : root)
        if (x != 0) return x > 0;
    return false;
}

Weight Coroot::as_root() const {
    Weight w;
    for (int x : root) w.finite.emplace_back(x);
    w.level = 0;
    w.delta = mode;
    return w;
}

std::string to_string(const Coroot& c) {
    std::ostringstream os;
    os << "(";
    if (c.mode != 0) os << c.mode << "d";
    const auto r = roots::to_string(c.root);
    if (c.mode != 0 && r[0] != '-') os << "+";
    os << r << ")^v";
    return os.str();
}

Coroot affine_simple_coroot(const RootDatum& rd, int i) {
    if (i == 0) return Coroot{roots::scale(rd.highest_root, -1), 1};
    return Coroot{rd.simple_roots.at(static_cast<std::size_t>(i - 1)), 0};
}

Rational pairing(const RootDatum& rd, const Weight& lambda, const Coroot& alpha, bool shifted) {
    const int norm = alpha.root_norm();
    if (norm == 0) throw std::invalid_argument("pairing: imaginary root has no coroot");
    // <mu, alpha^vee> for finite mu is 2(mu, alpha)/(alpha, alpha).
    Rational fin = 0;
    for (std::size_t i = 0; i < alpha.root.size(); ++i) {
        Rational mu = lambda.finite.at(i);
        if (shifted) mu += rd.rho.at(i);
        fin += mu * alpha.root[i];
    }
    fin = fin * 2 / norm;
    Rational level = lambda.level;
    if (shifted) level += rd.dual_coxeter;
    return fin + make_rational(2 * alpha.mode, norm) * level;
}

Weight reflect_dot(const RootDatum& rd, const Weight& lambda, const Coroot& alpha) {
    const Rational p = pairing(rd, lambda, alpha, true);
    const Weight a = alpha.as_root();
    Weight r = lambda;
    for (std::size_t i = 0; i < r.finite.size(); ++i) r.finite[i] -= p * a.finite[i];
    r.delta -= p * a.delta;
    return r;
}

namespace {

bool in_minus_zplus(const Rational& q) { return q.get_den() == 1 && q <= 0; }

// Coroot as a vector in (epsilon coordinates of alpha^vee, c coefficient).
std::vector<Rational> coroot_vector(const Coroot& c) {
    const int norm = c.root_norm();
    std::vector<Rational> v;
    for (int x : c.root) v.emplace_back(make_rational(2 * x, norm));
    v.emplace_back(make_rational(2 * c.mode, norm));
    return v;
}

}  // namespace

AdmissibilityReport check_admissible(const RootDatum& rd, const Weight& lambda, int mode_bound) {
    if (mode_bound < 1) throw std::invalid_argument("mode bound must be >= 1");
    AdmissibilityReport rep;
    rep.mode_bound = mode_bound;
    if (lambda.level == 0)
        rep.degenerate_reason = "level 0: lambda is dominant integral and trivially admissible; reported only";
    else if (lambda.level + rd.dual_coxeter == 0)
        rep.degenerate_reason = "critical level k = -h_dual";

    std::vector<affverma::Weight> all_roots;
    for (const auto& a : rd.positive_roots) {
        all_roots.push_back(a);
        all_roots.push_back(roots::scale(a, -1));
    }

    std::vector<Coroot> integral;
    for (int m = 0; m <= mode_bound; ++m) {
        for (const auto& a : all_roots) {
            Coroot c{a, m};
            if (!c.is_positive()) continue;
            const Rational p = pairing(rd, lambda, c, true);
            if (in_minus_zplus(p)) rep.violations.push_back(c);
            if (pairing(rd, lambda, c, false).get_den() == 1) integral.push_back(c);
        }
    }

    // The pairing is affine in the mode: p(m) = p(M+1) + (m - M - 1) * slope.
    bool tail_ok = true;
    for (const auto& a : all_roots) {
        const Coroot at{a, mode_bound + 1};
        const Rational p = pairing(rd, lambda, at, true);
        const Rational slope = make_rational(2, at.root_norm()) * (lambda.level + rd.dual_coxeter);
        TailCertificate cert{Coroot{a, mode_bound}, slope, p, {}};
        if (slope > 0 && p > 0) {
            cert.argument = "slope > 0 and pairing > 0 at M+1: positive for all larger modes";
        } else if (slope == 0) {
            cert.argument = in_minus_zplus(p) ? "constant pairing in -Z_+: violated" : "constant pairing outside -Z_+";
            tail_ok = tail_ok && !in_minus_zplus(p);
        } else if (slope > 0) {
            // Finitely many modes past the bound have a nonpositive pairing.
            bool hit = false;
            for (Rational v = p; v <= 0 && !hit; v += slope) hit = v.get_den() == 1;
            cert.argument = hit ? "nonpositive integral value past the bound: violated"
                                : "slope > 0, no nonpositive integral value past the bound";
            tail_ok = tail_ok && !hit;
        } else {
            // p + j*slope is integral on a periodic set of j; one period decides.
            const Integer period = slope.get_den() * p.get_den();
            bool hit = false;
            for (Integer j = 0; j <= period && !hit; ++j) hit = Rational(p + Rational(j) * slope).get_den() == 1;
            cert.argument = hit ? "slope < 0 with integral values: eventually in -Z_+, violated"
                                : "slope < 0 but pairing never integral: no violations";
            tail_ok = tail_ok && !hit;
        }
        rep.tail.push_back(std::move(cert));
    }
    rep.positivity_ok = rep.violations.empty() && tail_ok;

    // Simple elements: integral positive coroots that are not a sum of two others.
    // Summands have mode at most that of the sum, so the bounded set suffices.
    std::vector<std::vector<Rational>> vecs;
    for (const auto& c : integral) vecs.push_back(coroot_vector(c));
    std::set<std::vector<Rational>> present(vecs.begin(), vecs.end());
    for (std::size_t i = 0; i < integral.size(); ++i) {
        bool decomposable = false;
        for (std::size_t j = 0; j < integral.size() && !decomposable; ++j) {
            std::vector<Rational> diff = vecs[i];
            for (std::size_t t = 0; t < diff.size(); ++t) diff[t] -= vecs[j][t];
            if (present.count(diff)) decomposable = true;
        }
        if (!decomposable) rep.simple_coroots.push_back(integral[i]);
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto& c : rep.simple_coroots) rows.push_back(coroot_vector(c));
    rep.integral_rank = linsolve::rank(rows, rd.rank + 1);
    rep.rationality_ok = rep.integral_rank == rd.rank + 1;
    rep.admissible = rep.positivity_ok && rep.rationality_ok;
    return rep;
}

LevelReport check_embedding_level(const RootDatum& rd, int mode_bound) {
    if (rd.type != AlgebraType::D) throw std::invalid_argument("check_embedding_level: needs D_l");
    const int l = rd.rank;
    LevelReport r;
    r.rank = l;
    r.level = Rational(3 - 2 * l, 2);
    const Weight lambda = Weight::level_multiple(l, r.level);
    for (int i = 1; i <= l; ++i) r.simple_pairings.push_back(pairing(rd, lambda, affine_simple_coroot(rd, i), true));
    r.alpha0_pairing = pairing(rd, lambda, affine_simple_coroot(rd, 0), true);
    const Coroot two_delta_minus_theta{roots::scale(rd.highest_root, -1), 2};
    r.reflection_pairing = pairing(rd, lambda, two_delta_minus_theta, true);
    r.reflected = reflect_dot(rd, lambda, two_delta_minus_theta);
    r.expected_reflected = lambda;
    r.expected_reflected.delta -= 4;
    for (std::size_t i = 0; i < r.expected_reflected.finite.size(); ++i)
        r.expected_reflected.finite[i] += 2 * rd.highest_root[i];
    r.admissibility = check_admissible(rd, lambda, mode_bound);

    r.pass = r.admissibility.admissible && r.reflected == r.expected_reflected && r.reflection_pairing == 2 &&
             r.alpha0_pairing == Rational(5 - 2 * l, 2);
    for (const auto& p : r.simple_pairings) r.pass = r.pass && p == 1;
    return r;
}

}  // namespace affverma::affine
