#pragma once

#include "affverma/verma.hpp"

#include <string>
#include <vector>

namespace affverma::singular {

/// A vector given as creation words acting on the vacuum, plus the number of
/// coefficient families in its closed formula (guards transcription drift).
struct Formula {
    verma::OperatorWord word;
    int families = 0;
};

/// -1/4 e_{e1}(-1)^2 1 + sum_{j=2}^{l} e_{e1-ej}(-1) e_{e1+ej}(-1) 1 over B_l.
Formula vB_formula(const LieAlgebra& g);
/// The degree-4 singular vector of N_{D_l}(-l+3/2, 0); 41 families.
Formula vD_formula(const LieAlgebra& g);

verma::State build_vB(const verma::Module& m);
verma::State build_vD(const verma::Module& m);

/// Loop elements that generate the affine raising directions: e_{alpha_i}(0) for the
/// simple roots of the handle's type, then f_theta(1).
std::vector<std::pair<std::string, verma::LoopElement>> raising_operators(const LieAlgebra& g);
/// raising_operators plus x(1) for every basis element x.
std::vector<std::pair<std::string, verma::LoopElement>> strict_raising_operators(const LieAlgebra& g);

struct Residual {
    std::string generator;
    verma::State residual;
};

struct SingularReport {
    std::string vector_id;
    std::vector<Residual> checks;
    verma::Grade grade;
    bool pass = false;
};

SingularReport check_singular(const verma::Module& m, const verma::State& v, std::string vector_id,
                              bool strict = false);

struct SolveOptions {
    int degree_bound = 4;
    bool strict = false;
};

/// Canonical monomials of the given degree and h-weight, in increasing order.
std::vector<verma::Monomial> enumerate_monomials(const LieAlgebra& g, int degree, const Weight& weight);

/// Basis of the space of vectors of the given degree and weight killed by every
/// raising operator, by exact elimination over all candidate monomials.
std::vector<verma::State> solve_singular_space(const verma::Module& m, int degree, const Weight& weight,
                                               const SolveOptions& opts = {});

}  // namespace affverma::singular
