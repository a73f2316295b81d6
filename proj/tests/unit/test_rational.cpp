#include "affverma/rational.hpp"

#include "doctest.h"

using namespace affverma;

TEST_CASE("rational: text form") {
    CHECK(to_string(make_rational(4, 2)) == "2/1");
    CHECK(to_string(make_rational(-6, 4)) == "-3/2");
    CHECK(to_string(Rational(0)) == "0/1");
    CHECK(parse_rational("-3/2") == make_rational(-3, 2));
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("10/4") == make_rational(5, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
    for (auto q : {make_rational(1, 3), make_rational(-22, 7), Rational(0), make_rational(123456789, 1000)})
        CHECK(parse_rational(to_string(q)) == q);
}
