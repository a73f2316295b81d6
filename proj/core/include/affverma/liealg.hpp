#pragma once

#include "affverma/clifford.hpp"
#include "affverma/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace affverma {

enum class AlgebraType : std::uint8_t { B, D };

std::string to_string(AlgebraType t);
AlgebraType parse_algebra_type(const std::string& s);

/// A vector in epsilon coordinates. Every root and basis weight of B_l and D_l
/// is integral in this basis.
using Weight = std::vector<int>;

namespace roots {
Weight zero(int l);
/// epsilon_i - epsilon_j (1-based).
Weight minus(int l, int i, int j);
/// epsilon_i + epsilon_j.
Weight plus(int l, int i, int j);
/// epsilon_i.
Weight single(int l, int i);
Weight add(const Weight& a, const Weight& b);
Weight scale(const Weight& a, int c);
int inner(const Weight& a, const Weight& b);
std::string to_string(const Weight& w);
}  // namespace roots

struct RootDatum {
    AlgebraType type;
    int rank;
    /// Frozen order: for i<j the pair (e_i - e_j, e_i + e_j) in lexicographic (i, j)
    /// order, then e_1 .. e_l for type B.
    std::vector<Weight> positive_roots;
    /// alpha_1..alpha_l (type D) or beta_1..beta_l (type B).
    std::vector<Weight> simple_roots;
    Weight highest_root;
    int dual_coxeter;
    /// Half sum of positive roots, epsilon coordinates.
    std::vector<Rational> rho;

    static RootDatum make(AlgebraType type, int rank);
    bool is_root(const Weight& w) const;
};

enum class Role : std::uint8_t { e, f, h };

std::string to_string(Role r);

struct BasisLabel {
    Role role;
    Weight root;     // positive root for e and f, empty for h
    int cartan = 0;  // 1..l for h
};

/// Identifies the algebra an element belongs to.
struct AlgebraTag {
    AlgebraType type;
    int rank;
    bool operator==(const AlgebraTag&) const = default;
};

/// Sparse vector over the frozen basis. Zero coefficients are never stored.
class LieElement {
public:
    explicit LieElement(AlgebraTag tag) : tag_(tag) {}
    LieElement(AlgebraTag tag, int index, Rational c = 1);

    AlgebraTag tag() const noexcept { return tag_; }
    const std::map<int, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(int index) const;

    LieElement& add(int index, const Rational& c);
    LieElement operator+(const LieElement& o) const;
    LieElement operator-(const LieElement& o) const;
    LieElement operator*(const Rational& c) const;
    LieElement operator-() const { return *this * Rational(-1); }
    bool operator==(const LieElement& o) const noexcept { return tag_ == o.tag_ && terms_ == o.terms_; }

private:
    void require_same(const LieElement& o) const;
    AlgebraTag tag_;
    std::map<int, Rational> terms_;
};

/// g_{B_l} or g_{D_l}, l >= 4, realized inside the Clifford algebra on 2l generators.
///
/// Basis order is frozen: e_alpha for every positive root in RootDatum order, then
/// f_alpha in the same order, then H_1..H_l. Because short roots come last among the
/// positive roots of B_l, the D_l basis is an order-preserving subsequence of the
/// B_l basis.
///
/// The bracket table is filled once from Clifford commutators of the realizations.
class LieAlgebra {
public:
    static std::shared_ptr<const LieAlgebra> build(AlgebraType type, int rank);

    AlgebraType type() const noexcept { return roots_.type; }
    int rank() const noexcept { return roots_.rank; }
    int dim() const noexcept { return static_cast<int>(labels_.size()); }
    AlgebraTag tag() const noexcept { return {roots_.type, roots_.rank}; }
    const RootDatum& root_datum() const noexcept { return roots_; }
    int dual_coxeter() const noexcept { return roots_.dual_coxeter; }

    const BasisLabel& label(int index) const { return labels_.at(static_cast<std::size_t>(index)); }
    std::string label_string(int index) const;
    /// Weight of a basis element: alpha for e_alpha, -alpha for f_alpha, 0 for H_i.
    const Weight& weight(int index) const { return weights_[static_cast<std::size_t>(index)]; }

    /// -1 when absent.
    int find_e(const Weight& root) const;
    int find_f(const Weight& root) const;
    int index_e(const Weight& root) const;
    int index_f(const Weight& root) const;
    int index_h(int i) const;

    LieElement basis(int index, Rational c = 1) const { return LieElement(tag(), index, std::move(c)); }
    LieElement e(const Weight& root) const { return basis(index_e(root)); }
    LieElement f(const Weight& root) const { return basis(index_f(root)); }
    LieElement H(int i) const { return basis(index_h(i)); }
    /// h_alpha = [e_alpha, f_alpha] for a positive root alpha.
    LieElement coroot(const Weight& root) const;

    const LieElement& bracket_basis(int i, int j) const {
        return table_[static_cast<std::size_t>(i) * labels_.size() + static_cast<std::size_t>(j)];
    }
    LieElement bracket(const LieElement& x, const LieElement& y) const;

    Rational form_basis(int i, int j) const;
    Rational form(const LieElement& x, const LieElement& y) const;
    /// Index of the unique basis element pairing nontrivially with `index`.
    int dual_partner(int index) const { return partner_[static_cast<std::size_t>(index)]; }

    /// Pairs (a^i, b^i) with a^i running over the basis and (a^i, b^j) = delta_ij.
    std::vector<std::pair<LieElement, LieElement>> dual_basis() const;

    const clifford::Element& realization(int index) const { return realizations_.at(static_cast<std::size_t>(index)); }
    clifford::Element to_clifford(const LieElement& x) const;
    /// Re-expresses a Clifford element in the basis; throws std::domain_error when
    /// the element is outside the span of the realizations.
    LieElement from_clifford(const clifford::Element& c) const;

private:
    explicit LieAlgebra(RootDatum roots);
    void require_tag(const LieElement& x) const;

    RootDatum roots_;
    std::vector<BasisLabel> labels_;
    std::vector<Weight> weights_;
    std::vector<clifford::Element> realizations_;
    std::map<clifford::Monomial, std::pair<int, Rational>> leading_;
    std::map<Weight, int> e_index_, f_index_;
    std::vector<LieElement> table_;
    std::vector<int> partner_;
    std::vector<Rational> partner_value_;
};

using AlgebraHandle = std::shared_ptr<const LieAlgebra>;

}  // namespace affverma
