#pragma once

#include "affverma/verma.hpp"

#include <string>
#include <vector>

namespace affverma {

/// lhs . source == rhs . 1 as an exact state identity.
struct Identity {
    std::string name;      // e.g. "emb.5"
    std::string instance;  // e.g. "i=3", empty when unindexed
    verma::OperatorWord lhs;
    verma::OperatorWord rhs;
};

struct IdentityCheck {
    std::string name;
    std::string instance;
    verma::State lhs;
    verma::State rhs;
    verma::State difference;  // lhs - rhs
    verma::Grade lhs_grade;
    bool pass = false;
};

IdentityCheck check_identity(const verma::Module& m, const Identity& id, const verma::State& source);

}  // namespace affverma
