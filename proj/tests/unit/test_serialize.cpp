#include "affverma/serialize.hpp"
#include "affverma/trace.hpp"

#include "reference.hpp"

#include "doctest.h"

#include <random>
#include <sstream>

using namespace affverma;
using verma::State;

TEST_CASE("serialize: state round trip") {
    std::mt19937 rng(81);
    for (auto type : {AlgebraType::B, AlgebraType::D}) {
        auto g = LieAlgebra::build(type, 5);
        verma::Module m(g, make_rational(-7, 2));
        for (int t = 0; t < 100; ++t) {
            const State s = testsupport::random_state(m, rng, 5, 4);
            const auto j = io::to_json(*g, s);
            CHECK(io::state_from_json(*g, j) == s);
            CHECK(io::state_from_json(*g, io::json::parse(j.dump())) == s);
            CHECK(io::to_json(*g, io::state_from_json(*g, j)).dump() == j.dump());
        }
        CHECK(io::to_json(*g, State()).empty());
    }
}

TEST_CASE("serialize: state format") {
    auto g = LieAlgebra::build(AlgebraType::D, 4);
    const int e = g->index_e(roots::minus(4, 1, 2));
    const State s = State::monomial({verma::pack(e, -2), verma::pack(g->index_h(3), -1)}, make_rational(-6, 4));
    const auto j = io::to_json(*g, s);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["coeff"] == "-3/2");
    CHECK(j[0]["monomial"].size() == 2);
    CHECK(j[0]["monomial"][0][0] == "e");
    CHECK(j[0]["monomial"][0][2] == -2);
    CHECK(j[0]["monomial"][1][0] == "h");
    CHECK(j[0]["monomial"][1][1] == 3);
}

TEST_CASE("serialize: malformed states are rejected") {
    auto g = LieAlgebra::build(AlgebraType::D, 4);
    auto bad = [&](const char* text) { CHECK_THROWS_AS(io::state_from_json(*g, io::json::parse(text)), std::invalid_argument); };
    bad(R"([{"coeff": "1/1", "monomial": [["e", [1, 0, 0, 0], -1]]}])");   // not a D_4 root
    bad(R"([{"coeff": "1/1", "monomial": [["h", 9, -1]]}])");
    bad(R"([{"coeff": "1/1", "monomial": [["x", 1, -1]]}])");
    bad(R"([{"coeff": "1/1", "monomial": [["h", 1, 0]]}])");
    bad(R"([{"coeff": "1/0", "monomial": []}])");
    bad(R"([{"coeff": "1/1", "monomial": [["h", 1, -1], ["h", 1, -2]]}])");  // not canonical
    bad(R"({"coeff": "1/1"})");
}

TEST_CASE("serialize: algebra table round trip") {
    for (auto type : {AlgebraType::B, AlgebraType::D})
        for (int l : {4, 5}) {
            auto g = LieAlgebra::build(type, l);
            const auto t = io::AlgebraTable::of(*g);
            CHECK(t.basis.size() == static_cast<std::size_t>(g->dim()));
            const auto j = io::to_json(t);
            CHECK(io::algebra_table_from_json(io::json::parse(j.dump())) == t);
            CHECK(io::to_json(io::algebra_table_from_json(j)).dump() == j.dump());
        }
    auto j = io::to_json(io::AlgebraTable::of(*LieAlgebra::build(AlgebraType::D, 4)));
    j.erase("brackets");
    CHECK_THROWS(io::algebra_table_from_json(j));
}

TEST_CASE("serialize: report documents are deterministic") {
    auto g = LieAlgebra::build(AlgebraType::B, 4);
    verma::Module m(g, make_rational(-5, 2));
    auto a = io::to_json(m, singular::check_singular(m, singular::build_vB(m), "vB")).dump();
    auto b = io::to_json(m, singular::check_singular(m, singular::build_vB(m), "vB")).dump();
    CHECK(a == b);
    CHECK(a.find("\"pass\":true") != std::string::npos);
}

TEST_CASE("trace: coverage gate") {
    std::set<std::string> ids;
    for (const auto& c : trace::claims())
        for (const auto& t : c.tests) ids.insert(t);
    auto full = trace::generate_trace_matrix(ids);
    CHECK(full.complete);
    CHECK(full.holes.empty());
    CHECK(full.entries.size() == trace::claims().size());
    CHECK(full.markdown.find("not run") != std::string::npos);

    auto reduced = ids;
    reduced.erase("acceptance: conformal equality");
    auto holed = trace::generate_trace_matrix(reduced);
    CHECK_FALSE(holed.complete);
    REQUIRE(holed.holes.size() == 1);
    CHECK(holed.holes.front().find("ω") != std::string::npos);
}

TEST_CASE("trace: test listing parser") {
    std::istringstream in(
        "[doctest] doctest version is \"2.4.11\"\n"
        "[doctest] listing all test case names\n"
        "===============================================================================\n"
        "clifford: associativity\n"
        "verma: vacuum annihilation\n"
        "===============================================================================\n"
        "[doctest] unskipped test cases passing the current filters: 2\n");
    const auto ids = trace::parse_test_listing(in);
    CHECK(ids == std::set<std::string>{"clifford: associativity", "verma: vacuum annihilation"});
}

TEST_CASE("trace: statuses follow command outcomes") {
    std::set<std::string> ids;
    for (const auto& c : trace::claims())
        for (const auto& t : c.tests) ids.insert(t);
    std::map<std::string, bool> status;
    for (const auto& c : trace::claims()) status[c.command] = true;
    status["verify triality --l 4"] = false;
    auto m = trace::generate_trace_matrix(ids, status);
    for (const auto& e : m.entries) CHECK(e.status == (e.claim.command == "verify triality --l 4" ? "fail" : "pass"));
    CHECK(m.document.is_object());
}
