#include "affverma/clifford.hpp"

#include <sstream>
#include <stdexcept>

namespace affverma::clifford {

namespace {

void require_same_rank(const Element& x, const Element& y) {
    if (x.rank() != y.rank())
        throw std::invalid_argument("clifford: mismatched rank " + std::to_string(x.rank()) + " vs " +
                                    std::to_string(y.rank()));
}

// [g,h]_+ for generator slots: 1 exactly for the pair (a_i, a_i^*).
bool dual_pair(int rank, std::uint8_t g, std::uint8_t h) {
    return g + rank == h || h + rank == g;
}

// Sorts an arbitrary word of slots into canonical form, accumulating into out.
// Adjacent swaps pick up a sign; a swap of a dual pair also emits the contraction.
void straighten(int rank, std::vector<std::uint8_t> word, Rational coeff, std::map<Monomial, Rational>& out) {
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (word[i] < word[i + 1]) continue;
        if (word[i] == word[i + 1]) return;
        if (dual_pair(rank, word[i], word[i + 1])) {
            std::vector<std::uint8_t> contracted;
            contracted.reserve(word.size() - 2);
            contracted.insert(contracted.end(), word.begin(), word.begin() + static_cast<long>(i));
            contracted.insert(contracted.end(), word.begin() + static_cast<long>(i) + 2, word.end());
            straighten(rank, std::move(contracted), coeff, out);
        }
        std::swap(word[i], word[i + 1]);
        straighten(rank, std::move(word), -coeff, out);
        return;
    }
    auto& slot = out[word];
    slot += coeff;
    if (slot == 0) out.erase(word);
}

}  // namespace

Element::Element(int rank) : rank_(rank) {
    if (rank < 1 || rank > 64) throw std::invalid_argument("clifford: rank out of range");
}

Element Element::unit(int rank) {
    Element e(rank);
    e.terms_.emplace(Monomial{}, Rational(1));
    return e;
}

Element Element::generator(int rank, Generator g) {
    if (g.index < 1 || g.index > rank)
        throw std::invalid_argument("clifford: generator index " + std::to_string(g.index) + " outside 1.." +
                                    std::to_string(rank));
    Element e(rank);
    const int slot = g.kind == Generator::Kind::plain ? g.index - 1 : rank + g.index - 1;
    e.terms_.emplace(Monomial{static_cast<std::uint8_t>(slot)}, Rational(1));
    return e;
}

int Element::max_degree() const noexcept {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
    return d;
}

bool Element::is_homogeneous_linear() const noexcept {
    for (const auto& [m, c] : terms_)
        if (m.size() != 1) return false;
    return true;
}

Rational Element::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Element& Element::add(const Monomial& m, const Rational& c) {
    if (c == 0) return *this;
    auto& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
    return *this;
}

Element Element::operator+(const Element& o) const {
    require_same_rank(*this, o);
    Element r = *this;
    for (const auto& [m, c] : o.terms_) r.add(m, c);
    return r;
}

Element Element::operator-(const Element& o) const {
    require_same_rank(*this, o);
    Element r = *this;
    for (const auto& [m, c] : o.terms_) r.add(m, -c);
    return r;
}

Element Element::operator*(const Rational& c) const {
    Element r(rank_);
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << affverma::to_string(c);
        for (auto s : m) {
            if (s < rank_)
                os << "*a" << int(s) + 1;
            else
                os << "*a" << int(s) - rank_ + 1 << "^*";
        }
    }
    return os.str();
}

Element multiply(const Element& x, const Element& y) {
    require_same_rank(x, y);
    std::map<Monomial, Rational> out;
    for (const auto& [mx, cx] : x.terms()) {
        for (const auto& [my, cy] : y.terms()) {
            std::vector<std::uint8_t> word(mx);
            word.insert(word.end(), my.begin(), my.end());
            straighten(x.rank(), std::move(word), cx * cy, out);
        }
    }
    Element r(x.rank());
    for (const auto& [m, c] : out) r.add(m, c);
    return r;
}

Element normal_order(const Element& x, const Element& y) {
    if (!x.is_homogeneous_linear() || !y.is_homogeneous_linear())
        throw std::invalid_argument("clifford: normal_order expects degree-1 elements");
    return commutator(x, y) * Rational(1, 2);
}

Element commutator(const Element& x, const Element& y) {
    return multiply(x, y) - multiply(y, x);
}

}  // namespace affverma::clifford
