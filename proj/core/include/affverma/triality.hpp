#pragma once

#include "affverma/verma.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace affverma::triality {

/// Images of the simple-root nodes 1..4 of D_4.
using NodePermutation = std::array<int, 4>;

inline constexpr NodePermutation identity_nodes{1, 2, 3, 4};
/// alpha_1 -> alpha_3 -> alpha_4 -> alpha_1.
inline constexpr NodePermutation pi_prime{3, 2, 4, 1};
/// alpha_1 <-> alpha_4.
inline constexpr NodePermutation pi_double_prime{4, 2, 3, 1};

bool is_diagram_symmetry(const NodePermutation& sigma);

/// Lie algebra automorphism of g_{D_4} sending e_i, f_i, h_i to the permuted ones.
class DiagramAutomorphism {
public:
    /// Throws std::invalid_argument when sigma is not a diagram symmetry or the
    /// algebra is not D_4.
    static DiagramAutomorphism build(AlgebraHandle d4, const NodePermutation& sigma);

    const NodePermutation& sigma() const noexcept { return sigma_; }
    const LieAlgebra& algebra() const noexcept { return *algebra_; }
    /// Image of basis element `index`.
    const LieElement& image(int index) const { return images_.at(static_cast<std::size_t>(index)); }
    /// Dense matrix, column j = image of basis element j.
    std::vector<std::vector<Rational>> matrix() const;

    LieElement apply(const LieElement& x) const;
    /// Termwise x(n) -> pi(x)(n), then straightened.
    verma::State apply(const verma::Module& m, const verma::State& s) const;

    /// pi[x, y] == [pi x, pi y] over every basis pair.
    bool preserves_brackets() const;
    /// (this o other)(x) = this(other(x)).
    DiagramAutomorphism compose(const DiagramAutomorphism& other) const;
    bool is_identity() const;

private:
    DiagramAutomorphism(AlgebraHandle g, NodePermutation sigma) : algebra_(std::move(g)), sigma_(sigma) {}
    AlgebraHandle algebra_;
    NodePermutation sigma_;
    std::vector<LieElement> images_;
};

struct InvarianceReport {
    std::string name;
    NodePermutation sigma{};
    bool bracket_preserving = false;
    verma::State image;
    bool fixed = false;
    /// When the image is a multiple c v with c != 1.
    std::optional<Rational> scalar;
    bool pass = false;
};

InvarianceReport check_invariance(const verma::Module& m, const verma::State& v, const NodePermutation& sigma,
                                  std::string name);

}  // namespace affverma::triality
