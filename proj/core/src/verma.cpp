#include "affverma/verma.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace affverma::verma {

namespace {

void accumulate(State::Terms& out, const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = out.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) out.erase(it);
}

}  // namespace

bool is_canonical(std::span<const Factor> m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (factor_mode(m[i]) > -1) return false;
        if (i > 0 && m[i - 1] > m[i]) return false;
    }
    return true;
}

int degree(std::span<const Factor> m) {
    int d = 0;
    for (auto f : m) d -= factor_mode(f);
    return d;
}

State State::vacuum(const Rational& c) { return monomial({}, c); }

State State::monomial(Monomial m, const Rational& c) {
    if (!is_canonical(m)) throw std::invalid_argument("State::monomial: monomial is not canonical");
    State s;
    if (c != 0) s.terms_.emplace(std::move(m), c);
    return s;
}

Rational State::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

State& State::add(const Monomial& m, const Rational& c) {
    accumulate(terms_, m, c);
    return *this;
}

State& State::add(const State& s, const Rational& c) {
    if (c == 0) return *this;
    for (const auto& [m, v] : s.terms_) accumulate(terms_, m, v * c);
    return *this;
}

State State::operator+(const State& o) const {
    State r = *this;
    return r.add(o);
}

State State::operator-(const State& o) const {
    State r = *this;
    return r.add(o, Rational(-1));
}

State State::operator*(const Rational& c) const {
    State r;
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

std::optional<Rational> solve_multiple(const State& r, const State& u) {
    if (u.is_zero()) return std::nullopt;
    const auto& [m0, u0] = *u.terms().begin();
    const Rational s = r.coefficient(m0) / u0;
    if (!(r == u * s)) return std::nullopt;
    return s;
}

OperatorWord& OperatorWord::add(Rational coeff, std::vector<LoopElement> factors) {
    if (coeff != 0) terms_.push_back({std::move(coeff), std::move(factors)});
    return *this;
}

OperatorWord& OperatorWord::add(const OperatorWord& other, const Rational& scale) {
    for (const auto& t : other.terms_) add(t.coeff * scale, t.factors);
    return *this;
}

Module::Module(AlgebraHandle algebra, Rational level) : algebra_(std::move(algebra)), level_(std::move(level)) {
    if (!algebra_) throw std::invalid_argument("Module: null algebra handle");
}

// out += c * g * rest, straightened; g has negative mode and rest is canonical.
void Module::create(Factor g, std::span<const Factor> rest, const Rational& c, Terms& out) const {
    if (rest.empty() || g <= rest.front()) {
        Monomial m;
        m.reserve(rest.size() + 1);
        m.push_back(g);
        m.insert(m.end(), rest.begin(), rest.end());
        accumulate(out, m, c);
        return;
    }
    const Factor y = rest.front();
    const auto tail = rest.subspan(1);
    const int gi = factor_index(g), gm = factor_mode(g);
    const int yi = factor_index(y), ym = factor_mode(y);

    // g y tail = y (g tail) + [g, y](gm + ym) tail
    Terms inner;
    create(g, tail, Rational(1), inner);
    for (const auto& [m, v] : inner) create(y, m, c * v, out);
    for (const auto& [z, cz] : algebra_->bracket_basis(gi, yi).terms()) create(pack(z, gm + ym), tail, c * cz, out);
}

// out += c * x(n) * rest for n >= 0.
void Module::annihilate(int x, int n, std::span<const Factor> rest, const Rational& c, Terms& out) const {
    if (rest.empty()) return;
    const Factor y = rest.front();
    const auto tail = rest.subspan(1);
    const int yi = factor_index(y), ym = factor_mode(y);

    // x(n) y(ym) tail = y(ym) x(n) tail + [x, y](n + ym) tail + n delta_{n+ym,0} (x, y) k tail
    Terms inner;
    annihilate(x, n, tail, Rational(1), inner);
    for (const auto& [m, v] : inner) create(y, m, c * v, out);
    for (const auto& [z, cz] : algebra_->bracket_basis(x, yi).terms()) act(z, n + ym, tail, c * cz, out);
    if (n + ym == 0 && n != 0) {
        const Rational f = algebra_->form_basis(x, yi);
        if (f != 0) accumulate(out, Monomial(tail.begin(), tail.end()), c * n * f * level_);
    }
}

void Module::act(int x, int n, std::span<const Factor> rest, const Rational& c, Terms& out) const {
    if (n < 0)
        create(pack(x, n), rest, c, out);
    else
        annihilate(x, n, rest, c, out);
}

State Module::apply(int index, int mode, const State& s) const {
    if (index < 0 || index >= algebra_->dim()) throw std::out_of_range("Module::apply: basis index out of range");
    State r;
    for (const auto& [m, v] : s.terms_) act(index, mode, m, v, r.terms_);
    return r;
}

State Module::apply(const LieElement& x, int mode, const State& s) const {
    if (!(x.tag() == algebra_->tag())) throw std::invalid_argument("Module::apply: element of a different algebra");
    State r;
    for (const auto& [i, ci] : x.terms())
        for (const auto& [m, v] : s.terms_) act(i, mode, m, ci * v, r.terms_);
    return r;
}

State Module::apply_word(const OperatorWord& w, const State& s) const {
    State total;
    for (const auto& t : w.terms()) {
        State cur = s;
        for (auto it = t.factors.rbegin(); it != t.factors.rend() && !cur.is_zero(); ++it) cur = apply(*it, cur);
        total.add(cur, t.coeff);
    }
    return total;
}

State Module::normal_form(const std::vector<LoopElement>& product) const {
    for (const auto& f : product)
        if (f.mode > -1) throw std::invalid_argument("normal_form: all modes must be <= -1");
    State cur = State::vacuum();
    for (auto it = product.rbegin(); it != product.rend(); ++it) cur = apply(*it, cur);
    return cur;
}

State Module::normal_form_by_swaps(std::vector<Factor> word, Schedule schedule, unsigned seed) const {
    for (auto f : word)
        if (factor_mode(f) > -1) throw std::invalid_argument("normal_form_by_swaps: all modes must be <= -1");
    std::mt19937 rng(seed);
    std::vector<std::pair<std::vector<Factor>, Rational>> work;
    work.emplace_back(std::move(word), Rational(1));
    State out;
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        std::vector<std::size_t> inversions;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) inversions.push_back(i);
        if (inversions.empty()) {
            out.add(w, c);
            continue;
        }
        std::size_t pos = inversions.front();
        if (schedule == Schedule::rightmost) pos = inversions.back();
        if (schedule == Schedule::random)
            pos = inversions[std::uniform_int_distribution<std::size_t>(0, inversions.size() - 1)(rng)];
        const Factor a = w[pos], b = w[pos + 1];
        const int mode = factor_mode(a) + factor_mode(b);
        for (const auto& [z, cz] : algebra_->bracket_basis(factor_index(a), factor_index(b)).terms()) {
            std::vector<Factor> shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<long>(pos));
            shorter.push_back(pack(z, mode));
            shorter.insert(shorter.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
            work.emplace_back(std::move(shorter), c * cz);
        }
        std::swap(w[pos], w[pos + 1]);
        work.emplace_back(std::move(w), c);
    }
    return out;
}

Grade Module::grade(const State& s) const {
    Grade g;
    if (s.is_zero()) {
        g.zero = true;
        return g;
    }
    bool first = true;
    bool deg_ok = true, wt_ok = true;
    int deg0 = 0;
    Weight wt0;
    for (const auto& [m, v] : s.terms()) {
        const int d = degree(m);
        Weight w = roots::zero(algebra_->rank());
        for (auto f : m) w = roots::add(w, algebra_->weight(factor_index(f)));
        if (first) {
            deg0 = d;
            wt0 = std::move(w);
            first = false;
            continue;
        }
        deg_ok = deg_ok && d == deg0;
        wt_ok = wt_ok && w == wt0;
    }
    if (deg_ok) g.degree = deg0;
    if (wt_ok) g.weight = wt0;
    return g;
}

std::string Module::to_string(const Monomial& m) const {
    if (m.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) os << ' ';
        os << algebra_->label_string(factor_index(m[i])) << '(' << factor_mode(m[i]) << ')';
    }
    return os.str();
}

std::string Module::to_string(const State& s) const {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, v] : s.terms()) {
        if (!first) os << "\n";
        first = false;
        os << affverma::to_string(v) << " * " << to_string(m);
    }
    return os.str();
}

}  // namespace affverma::verma
