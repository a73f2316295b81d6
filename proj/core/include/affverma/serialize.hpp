#pragma once

#include "affverma/affine_weights.hpp"
#include "affverma/appendix.hpp"
#include "affverma/conformal.hpp"
#include "affverma/embedding.hpp"
#include "affverma/identity.hpp"
#include "affverma/singular.hpp"
#include "affverma/triality.hpp"
#include "affverma/verma.hpp"

#include "json.hpp"

#include <map>
#include <utility>
#include <vector>

namespace affverma::io {

using json = nlohmann::json;

/// [{"coeff": "p/q", "monomial": [[role, root or cartan index, mode], ...]}, ...] in
/// monomial order.
json to_json(const LieAlgebra& g, const verma::State& s);
/// Throws std::invalid_argument on unknown basis labels or non-canonical monomials.
verma::State state_from_json(const LieAlgebra& g, const json& j);

json to_json(const LieAlgebra& g, const verma::Grade& grade);

/// Bracket table, invariant form and root data as plain data.
struct AlgebraTable {
    AlgebraType type = AlgebraType::D;
    int rank = 0;
    std::vector<BasisLabel> basis;
    /// (i, j) -> [x_i, x_j] for i < j, nonzero entries only.
    std::map<std::pair<int, int>, std::map<int, Rational>> brackets;
    /// (i, j) -> (x_i, x_j) for i <= j, nonzero entries only.
    std::map<std::pair<int, int>, Rational> form;
    std::vector<Weight> positive_roots;
    std::vector<Weight> simple_roots;
    int dual_coxeter = 0;

    static AlgebraTable of(const LieAlgebra& g);
    bool operator==(const AlgebraTable& o) const;
};

json to_json(const AlgebraTable& t);
AlgebraTable algebra_table_from_json(const json& j);

json to_json(const affine::LevelReport& r);
json to_json(const verma::Module& m, const singular::SingularReport& r);
json to_json(const verma::Module& m, const IdentityCheck& c);
json to_json(const verma::Module& m, const embedding::RelationsReport& r);
json to_json(const verma::Module& m, const embedding::CertificateReport& r);
json to_json(const verma::Module& m, const conformal::QuadraticReport& r);
json to_json(const verma::Module& m, const conformal::EqualityReport& r);
json to_json(const verma::Module& m, const appendix::Report& r);
json to_json(const verma::Module& m, const triality::InvarianceReport& r);
json to_json(const triality::DiagramAutomorphism& pi);

}  // namespace affverma::io
