#include "affverma/linsolve.hpp"

#include <stdexcept>

namespace affverma::linsolve {

namespace {

using IntRow = std::vector<std::pair<int, Integer>>;

void make_primitive(IntRow& row) {
    Integer g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow to_integer_row(const SparseRow& row) {
    Integer lcm = 1;
    for (const auto& [c, v] : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    IntRow out;
    out.reserve(row.size());
    for (const auto& [c, v] : row) {
        if (v == 0) continue;
        Integer x = lcm / v.get_den() * v.get_num();
        out.emplace_back(c, std::move(x));
    }
    make_primitive(out);
    return out;
}

// a * x - b * y over sorted sparse rows.
IntRow combine(const Integer& a, const IntRow& x, const Integer& b, const IntRow& y) {
    IntRow out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, -b * y[j].second);
            ++j;
        } else {
            Integer v = a * x[i].second - b * y[j].second;
            if (v != 0) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

bool Echelon::insert(const SparseRow& row) {
    for (const auto& [c, v] : row)
        if (c < 0 || c >= ncols_) throw std::out_of_range("Echelon::insert: column out of range");
    IntRow r = to_integer_row(row);
    while (!r.empty()) {
        auto it = pivots_.find(r.front().first);
        if (it == pivots_.end()) break;
        const IntRow& p = it->second;
        Integer g;
        mpz_gcd(g.get_mpz_t(), p.front().second.get_mpz_t(), r.front().second.get_mpz_t());
        r = combine(p.front().second / g, r, r.front().second / g, p);
        make_primitive(r);
    }
    if (r.empty()) return false;
    if (r.front().second < 0)
        for (auto& [c, v] : r) v = -v;
    const int lead = r.front().first;
    pivots_.emplace(lead, std::move(r));
    return true;
}

std::vector<std::vector<Rational>> Echelon::nullspace() const {
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < ncols_; ++free) {
        if (pivots_.count(free)) continue;
        std::vector<Rational> x(static_cast<std::size_t>(ncols_), Rational(0));
        x[static_cast<std::size_t>(free)] = 1;
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            const auto& row = it->second;
            Rational s = 0;
            for (std::size_t t = 1; t < row.size(); ++t) {
                const auto& xv = x[static_cast<std::size_t>(row[t].first)];
                if (xv != 0) s += Rational(row[t].second) * xv;
            }
            x[static_cast<std::size_t>(it->first)] = -s / Rational(row.front().second);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

int rank(const std::vector<std::vector<Rational>>& dense_rows, int ncols) {
    Echelon e(ncols);
    for (const auto& r : dense_rows) {
        SparseRow s;
        for (std::size_t c = 0; c < r.size(); ++c)
            if (r[c] != 0) s.emplace(static_cast<int>(c), r[c]);
        e.insert(s);
    }
    return e.rank();
}

std::vector<std::vector<Rational>> nullspace(const std::vector<SparseRow>& rows, int ncols) {
    Echelon e(ncols);
    for (const auto& r : rows) e.insert(r);
    return e.nullspace();
}

}  // namespace affverma::linsolve
