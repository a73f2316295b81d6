#include "affverma/rational.hpp"

#include <stdexcept>

namespace affverma {

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    auto valid_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string num(text.substr(0, slash));
    std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    Integer n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

}  // namespace affverma
