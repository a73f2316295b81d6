#pragma once

#include "affverma/identity.hpp"
#include "affverma/verma.hpp"

#include <string>
#include <vector>

namespace affverma::embedding {

/// Position of each D_l basis element inside the B_l basis. Strictly increasing.
std::vector<int> index_map(const LieAlgebra& d, const LieAlgebra& b);

LieElement embed_element(const LieAlgebra& d, const LieAlgebra& b, const LieElement& x);

/// Reinterprets a state of N_{D_l} as a state of N_{B_l}. Canonical monomials stay
/// canonical because the index map is monotone.
verma::State embed_state(const LieAlgebra& d, const LieAlgebra& b, const verma::State& s);

enum class Emb4Form {
    corrected,  // last sum symmetrized as e f + f e
    literal,    // last sum read as e f + e f
};

/// The nine families of degree-2 relations in J_B, one Identity per index value.
/// Every lhs is a zero-mode word meant to act on v_B; every rhs acts on the vacuum.
std::vector<Identity> relations(const LieAlgebra& b, Emb4Form form = Emb4Form::corrected);

struct RelationsReport {
    int rank = 0;
    std::vector<IdentityCheck> checks;
    bool pass = false;
};

RelationsReport verify_relations(const verma::Module& mb, Emb4Form form = Emb4Form::corrected);

struct Certificate {
    verma::OperatorWord word;
    int families = 0;
};

/// The combination W with W . v_B = v_D, over B_l.
Certificate membership_word(const LieAlgebra& b);

struct CertificateReport {
    int rank = 0;
    int word_terms = 0;
    verma::State image;   // W . v_B
    verma::State target;  // embedded v_D
    verma::State difference;
    verma::Grade grade;
    bool pass = false;
};

CertificateReport verify_certificate(const verma::Module& mb, const verma::Module& md,
                                     const verma::OperatorWord& word);
CertificateReport verify_membership_certificate(const verma::Module& mb, const verma::Module& md);

}  // namespace affverma::embedding
