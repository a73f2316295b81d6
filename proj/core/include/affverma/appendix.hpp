#pragma once

#include "affverma/identity.hpp"

#include <vector>

namespace affverma::appendix {

/// Number of displayed relation families.
inline constexpr int family_count = 40;

/// Every displayed relation e_{e1-e2}(0) . X 1 = Y 1 over D_l, one Identity per index
/// assignment, in display order. Names run app.1 .. app.40.
std::vector<Identity> relations(const LieAlgebra& d);

struct Report {
    int rank = 0;
    std::vector<IdentityCheck> checks;
    /// e_{e1-e2}(0) . v_D.
    verma::State final_residual;
    bool pass = false;
};

Report verify(const verma::Module& md);

}  // namespace affverma::appendix
