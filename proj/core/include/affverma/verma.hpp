#pragma once

#include "affverma/liealg.hpp"
#include "affverma/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace affverma::verma {

/// x(n) for a basis element x, packed so that integer order is the canonical PBW
/// factor order: mode ascending (deep modes first), then frozen basis index.
using Factor = std::uint32_t;

constexpr Factor pack(int index, int mode) {
    return (static_cast<std::uint32_t>(mode + 0x8000) << 16) | static_cast<std::uint32_t>(index);
}
constexpr int factor_index(Factor f) { return static_cast<int>(f & 0xFFFFu); }
constexpr int factor_mode(Factor f) { return static_cast<int>(f >> 16) - 0x8000; }

/// Sorted factors, all modes <= -1, applied to the vacuum. Empty = vacuum.
using Monomial = std::vector<Factor>;

bool is_canonical(std::span<const Factor> m);
int degree(std::span<const Factor> m);

/// Sparse rational combination of canonical monomials. No zero coefficient is ever
/// stored. Iteration order is the lexicographic order of monomials.
class State {
public:
    using Terms = std::map<Monomial, Rational>;

    State() = default;
    static State vacuum(const Rational& c = 1);
    /// `m` must be canonical.
    static State monomial(Monomial m, const Rational& c = 1);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Rational coefficient(const Monomial& m) const;

    State& add(const Monomial& m, const Rational& c);
    State& add(const State& s, const Rational& c = 1);
    State operator+(const State& o) const;
    State operator-(const State& o) const;
    State operator*(const Rational& c) const;
    bool operator==(const State& o) const noexcept { return terms_ == o.terms_; }

private:
    friend class Module;
    Terms terms_;
};

/// A loop element x(n) with x an arbitrary Lie algebra element.
struct LoopElement {
    LieElement x;
    int mode;
};

/// Formal rational combination of products of loop elements. Each product acts
/// right to left: the last factor hits the state first.
class OperatorWord {
public:
    struct Term {
        Rational coeff;
        std::vector<LoopElement> factors;
    };

    OperatorWord() = default;
    OperatorWord& add(Rational coeff, std::vector<LoopElement> factors);
    OperatorWord& add(const OperatorWord& other, const Rational& scale = 1);
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }

private:
    std::vector<Term> terms_;
};

struct Grade {
    bool zero = false;
    std::optional<int> degree;  // nullopt when mixed
    std::optional<Weight> weight;
};

/// Finds s with r == s * u. The candidate is read off the lexicographically first
/// monomial of u and then checked on every monomial of both states. nullopt when no
/// such s exists or u is zero.
std::optional<Rational> solve_multiple(const State& r, const State& u);

enum class Schedule { leftmost, rightmost, random };

/// The generalized Verma module N(k, 0) over an algebra handle.
///
/// Module action: x(n) 1 = 0 for n >= 0; pushing x(n) to the right past y(m)
/// leaves [x,y](n+m) + n delta_{n+m,0} (x,y) k behind.
class Module {
public:
    Module(AlgebraHandle algebra, Rational level);

    const LieAlgebra& algebra() const noexcept { return *algebra_; }
    const AlgebraHandle& handle() const noexcept { return algebra_; }
    const Rational& level() const noexcept { return level_; }

    State apply(int index, int mode, const State& s) const;
    State apply(const LieElement& x, int mode, const State& s) const;
    State apply(const LoopElement& x, const State& s) const { return apply(x.x, x.mode, s); }
    State apply_word(const OperatorWord& w, const State& s) const;

    /// Straightens x_1(n_1) ... x_r(n_r) 1 with every n_i <= -1.
    State normal_form(const std::vector<LoopElement>& product) const;
    /// Same, on basis factors, by repeated adjacent swaps in the given order.
    /// Independent of the insertion strategy used by normal_form; confluence checks
    /// compare the two.
    State normal_form_by_swaps(std::vector<Factor> word, Schedule schedule, unsigned seed = 0) const;

    Grade grade(const State& s) const;

    std::string to_string(const State& s) const;
    std::string to_string(const Monomial& m) const;

private:
    using Terms = State::Terms;

    void create(Factor g, std::span<const Factor> rest, const Rational& c, Terms& out) const;
    void annihilate(int x, int n, std::span<const Factor> rest, const Rational& c, Terms& out) const;
    void act(int x, int n, std::span<const Factor> rest, const Rational& c, Terms& out) const;

    AlgebraHandle algebra_;
    Rational level_;
};

}  // namespace affverma::verma
