#pragma once

#include "affverma/verma.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace affverma::conformal {

struct ConformalData {
    verma::State omega;
    Rational central_charge;
    Rational level;
    int dual_coxeter = 0;
};

/// 1/(2(k+h)) sum_i a^i(-1) b^i(-1) 1 over the given dual pairs.
verma::State casimir_state(const verma::Module& m, const std::vector<std::pair<LieElement, LieElement>>& pairs);

/// Throws std::domain_error at the critical level.
ConformalData sugawara(const verma::Module& m);

Rational central_charge(AlgebraType type, int l, const Rational& k);

/// All k with c(D_l, k) = c(B_l, k), ascending.
std::vector<Rational> solve_level_equation(int l);

/// (2l f_{e1}(0)^2 + 4 sum_{i>=2} f_{e1-ei}(0) f_{e1+ei}(0)) . v_B.
verma::State quadratic_certificate(const verma::Module& mb);

struct QuadraticReport {
    int rank = 0;
    Rational short_coefficient;
    verma::State u;
    verma::State r;
    std::optional<Rational> s;  // r = s u
    verma::Grade u_grade;
    bool pass = false;
};

/// R = c sum_short (ef + fe) - 4 sum_{D_l^+} (ef + fe) - sum_short h(-1)^2 with c the
/// given coefficient (2l-1 unless perturbed).
verma::State quadratic_relation_state(const verma::Module& mb, const Rational& short_coefficient);

QuadraticReport verify_quadratic_relation(const verma::Module& mb, std::optional<Rational> short_coefficient = {});

struct EqualityReport {
    int rank = 0;
    Rational level;
    Rational c_b;
    Rational c_d;
    verma::State difference;  // omega_B - embedded omega_D
    verma::State u;
    std::optional<Rational> s_prime;
    verma::Grade grade;
    bool pass = false;
};

/// Both modules must carry the same level.
EqualityReport verify_conformal_equality(const verma::Module& mb, const verma::Module& md);

/// The ratio s'/s forced by substituting the quadratic relation into omega_B.
Rational expected_scalar_ratio(int l);

}  // namespace affverma::conformal
