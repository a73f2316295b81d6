#pragma once

#include "affverma/liealg.hpp"
#include "affverma/verma.hpp"

#include <initializer_list>
#include <stdexcept>

namespace affverma {

/// Shorthand used when transcribing closed formulas: roots by index pairs, loop
/// elements by root and mode.
class Notation {
public:
    explicit Notation(const LieAlgebra& g) : g_(g), l_(g.rank()) {}

    int rank() const noexcept { return l_; }
    const LieAlgebra& algebra() const noexcept { return g_; }

    Weight minus(int i, int j) const { return roots::minus(l_, i, j); }
    Weight plus(int i, int j) const { return roots::plus(l_, i, j); }
    Weight single(int i) const { return roots::single(l_, i); }
    Weight theta() const { return g_.root_datum().highest_root; }

    verma::LoopElement e(const Weight& root, int mode = -1) const { return {g_.e(root), mode}; }
    verma::LoopElement f(const Weight& root, int mode = -1) const { return {g_.f(root), mode}; }
    verma::LoopElement H(int i, int mode = -1) const { return {g_.H(i), mode}; }

    /// h_alpha = [e_alpha, f_alpha]; for a short root epsilon_i this is 2 H_i, which
    /// also makes sense inside D_l where e_{epsilon_i} is absent.
    LieElement coroot(const Weight& root) const {
        int nonzero = 0, idx = 0;
        for (int i = 0; i < l_; ++i)
            if (root[static_cast<std::size_t>(i)] != 0) {
                ++nonzero;
                idx = i + 1;
            }
        if (nonzero == 1) return g_.H(idx) * Rational(2);
        return g_.coroot(root);
    }
    verma::LoopElement h(const Weight& root, int mode = -1) const { return {coroot(root), mode}; }

private:
    const LieAlgebra& g_;
    int l_;
};

/// Product of loop elements as a one-term operator word.
inline verma::OperatorWord word(Rational c, std::initializer_list<verma::LoopElement> factors) {
    verma::OperatorWord w;
    w.add(std::move(c), std::vector<verma::LoopElement>(factors));
    return w;
}

/// -l + 3/2.
inline Rational critical_embedding_level(int l) { return Rational(3 - 2 * l, 2); }

}  // namespace affverma
