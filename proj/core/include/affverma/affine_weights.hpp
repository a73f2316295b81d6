#pragma once

#include "affverma/liealg.hpp"
#include "affverma/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace affverma::affine {

/// lambda = finite + level * Lambda_0 + delta_coeff * delta.
struct Weight {
    std::vector<Rational> finite;  // epsilon coordinates
    Rational level = 0;            // <lambda, c>
    Rational delta = 0;

    static Weight level_multiple(int rank, const Rational& k);
    bool operator==(const Weight&) const = default;
};

/// Coroot of the real affine root alpha + mode * delta, alpha a finite root
/// (positive or negative). As an element of the affine Cartan it is
/// alpha^vee + mode * 2/(alpha, alpha) * c.
struct Coroot {
    affverma::Weight root;
    int mode = 0;

    bool is_positive() const;
    int root_norm() const { return roots::inner(root, root); }
    /// The affine root alpha + mode * delta viewed as a weight of level zero.
    Weight as_root() const;
    bool operator==(const Coroot&) const = default;
};

std::string to_string(const Coroot& c);

/// alpha_0 = delta - theta.
Coroot affine_simple_coroot(const RootDatum& rd, int i);

/// <lambda (+ rho if shifted), alpha^vee>. The affine rho has <rho, alpha_i^vee> = 1
/// for every affine simple coroot, so <rho, c> = h_dual.
Rational pairing(const RootDatum& rd, const Weight& lambda, const Coroot& alpha, bool shifted);

/// r_alpha . lambda = lambda - <lambda + rho, alpha^vee> alpha.
Weight reflect_dot(const RootDatum& rd, const Weight& lambda, const Coroot& alpha);

struct TailCertificate {
    Coroot finite_part;   // representative alpha with mode M
    Rational slope;       // pairing grows by `slope` per unit of mode
    Rational at_bound;    // pairing at mode M + 1
    std::string argument;
};

struct AdmissibilityReport {
    bool admissible = false;
    bool positivity_ok = false;
    bool rationality_ok = false;
    int mode_bound = 0;
    std::optional<std::string> degenerate_reason;
    std::vector<Coroot> violations;    // positive real coroots with pairing in -Z_+
    std::vector<Coroot> simple_coroots;  // the set Pi^vee_lambda
    int integral_rank = 0;
    std::vector<TailCertificate> tail;  // one entry per finite root
};

/// Checks the Kac-Wakimoto conditions for lambda over positive real coroots with
/// mode <= mode_bound, and emits a tail certificate excluding violations beyond.
AdmissibilityReport check_admissible(const RootDatum& rd, const Weight& lambda, int mode_bound = 20);

/// Pairings of lambda + rho for lambda = (-l+3/2) Lambda_0 over D_l, the reflection
/// r_{2 delta - theta} . lambda, and the admissibility report.
struct LevelReport {
    int rank = 0;
    Rational level;
    std::vector<Rational> simple_pairings;  // alpha_1 .. alpha_l
    Rational alpha0_pairing;
    Rational reflection_pairing;  // against (2 delta - theta)^vee
    Weight reflected;             // r_{2 delta - theta} . lambda
    Weight expected_reflected;    // lambda - 4 delta + 2 theta
    AdmissibilityReport admissibility;
    bool pass = false;
};

LevelReport check_embedding_level(const RootDatum& rd, int mode_bound = 20);

}  // namespace affverma::affine
