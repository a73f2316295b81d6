#pragma once

#include "affverma/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace affverma::clifford {

/// a_i (plain) or a_i^* (starred), 1-based index.
struct Generator {
    enum class Kind : std::uint8_t { plain, starred };
    Kind kind = Kind::plain;
    int index = 1;
};

/// Strictly increasing generator slots under a_1 < ... < a_l < a_1^* < ... < a_l^*.
/// Slot of a_i is i-1, slot of a_i^* is l+i-1. The empty monomial is the unit.
using Monomial = std::vector<std::uint8_t>;

/// Linear combination of canonical Clifford monomials over Q, for a fixed number l
/// of generator pairs. Values are immutable from the caller's point of view; all
/// arithmetic returns fresh elements.
class Element {
public:
    explicit Element(int rank);

    static Element unit(int rank);
    static Element generator(int rank, Generator g);
    static Element plain(int rank, int i) { return generator(rank, {Generator::Kind::plain, i}); }
    static Element starred(int rank, int i) { return generator(rank, {Generator::Kind::starred, i}); }

    int rank() const noexcept { return rank_; }
    const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Largest monomial length; -1 for zero.
    int max_degree() const noexcept;
    bool is_homogeneous_linear() const noexcept;
    Rational coefficient(const Monomial& m) const;

    Element& add(const Monomial& m, const Rational& c);
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Rational& c) const;
    bool operator==(const Element& o) const noexcept { return rank_ == o.rank_ && terms_ == o.terms_; }

    std::string to_string() const;

private:
    int rank_;
    std::map<Monomial, Rational> terms_;
};

/// Canonical product in Cliff(A).
Element multiply(const Element& x, const Element& y);

/// :xy: = (xy - yx)/2 for x, y of degree one.
Element normal_order(const Element& x, const Element& y);

/// xy - yx.
Element commutator(const Element& x, const Element& y);

}  // namespace affverma::clifford
