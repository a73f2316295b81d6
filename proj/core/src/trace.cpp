#include "affverma/trace.hpp"

#include <sstream>

namespace affverma::trace {

const std::vector<Claim>& claims() {
    static const std::vector<Claim> table = {
        {"§2 invariant form", "normalized by the condition (θ,θ)=2", "dump-algebra --type D --l 4",
         {"liealg: form normalization and invariance"}},
        {"§2 generalized Verma module", "g ⊗ C[t,t−1] ⊕ Cc equipped with the usual bracket",
         "verify singular --type B --l 4", {"verma: module axiom on random cases", "verma: vacuum annihilation"}},
        {"§2 Sugawara vector", "the corresponding dual basis", "verify conformal --l 4",
         {"conformal: sugawara grade and central charge", "conformal: basis independence of omega"}},
        {"§3 Clifford algebra", "[a_i,a_j]_+=[a_i^*,a_j^*]_+=0, [a_i,a_j^*]_+=δ_{ij}", "dump-algebra --type B --l 4",
         {"clifford: anticommutation relations", "clifford: associativity"}},
        {"§3 root vectors and coroots", "Clearly h_{ε_i}=2H_i", "dump-algebra --type B --l 4",
         {"liealg: short coroots", "liealg: jacobi identity exhaustive"}},
        {"§4 Proposition", "is a singular vector in N_{B_l}(−l+3/2,0)", "verify singular --type B --l 4",
         {"acceptance: singularity of v_B", "singular: oracle nullspace B4"}},
        {"§4 Lemma", "is admissible for ĝ_{D_l}", "verify admissible --l 4", {"acceptance: admissibility pairings"}},
        {"§4 Lemma", "is a singular vector in N_{D_l}(−l+3/2,0)", "verify singular --type D --l 4",
         {"acceptance: singularity of v_D", "acceptance: oracle uniqueness"}},
        {"§4 Theorem", "weight λ −4δ +2 θ=r_{2δ−θ}.λ", "verify admissible --l 4",
         {"affine: reflection of the level weight"}},
        {"§5 relations", "f_{ε_1}(0). v_{B_l}=½ e_{ε_1}(−1) h_{ε_1}(−1) 1 …", "verify embedding --l 4",
         {"acceptance: embedding relations", "embedding: literal emb.4 fails"}},
        {"§5 Lemma", "v_{D_l} ∈ J_{B_l}(−l+3/2,0)", "verify embedding --l 4",
         {"acceptance: membership certificate", "embedding: zero word is rejected"}},
        {"§5 Lemma", "holds in L_{B_l}(−l +3/2,0)", "verify conformal --l 4",
         {"acceptance: quadratic relation", "conformal: perturbed coefficient fails"}},
        {"§5 Theorem", "ω_{B_l}=ω_{D_l}", "verify conformal --l 4",
         {"acceptance: conformal equality", "conformal: level one control"}},
        {"§1 central charge", "the only solution of this equation is k=−l+3/2", "verify conformal --l 4",
         {"acceptance: level equation"}},
        {"§6 triality", "π′(α_1)=α_3", "verify triality --l 4", {"triality: generator images"}},
        {"§6 triality", "π′(v_{D_4})=v_{D_4}", "verify triality --l 4", {"acceptance: triality"}},
        {"Appendix", "e_{ε_1−ε_2}(0).v_{D_l}=0", "verify appendix --l 4",
         {"appendix: displayed relations", "acceptance: singularity of v_D"}},
    };
    return table;
}

namespace {

std::string escape_cell(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += "\\|";
        else out += c;
    }
    return out;
}

}  // namespace

Matrix generate_trace_matrix(const std::set<std::string>& test_ids, const std::map<std::string, bool>& command_status) {
    Matrix m;
    std::ostringstream md;
    md << "# Trace matrix\n\n"
       << "| Anchor | Statement | Command | Tests | Status |\n"
       << "|---|---|---|---|---|\n";
    m.document = nlohmann::json::object();
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& claim : claims()) {
        Entry e{claim, {}, "not run"};
        for (const auto& t : claim.tests)
            if (!test_ids.count(t)) e.missing_tests.push_back(t);
        if (auto it = command_status.find(claim.command); it != command_status.end())
            e.status = it->second ? "pass" : "fail";
        if (!e.missing_tests.empty()) m.holes.push_back(claim.anchor + ": " + claim.quote);

        std::string tests;
        for (const auto& t : claim.tests) tests += (tests.empty() ? "" : "<br>") + ("`" + t + "`");
        md << "| " << escape_cell(claim.anchor) << " | " << escape_cell(claim.quote) << " | `" << claim.command
           << "` | " << escape_cell(tests) << " | " << e.status << " |\n";
        rows.push_back({{"anchor", claim.anchor},
                        {"quote", claim.quote},
                        {"command", claim.command},
                        {"tests", claim.tests},
                        {"missing_tests", e.missing_tests},
                        {"status", e.status}});
        m.entries.push_back(std::move(e));
    }
    m.complete = m.holes.empty();
    if (!m.complete) {
        md << "\nCoverage holes:\n\n";
        for (const auto& h : m.holes) md << "- " << h << "\n";
    }
    m.markdown = md.str();
    m.document["entries"] = rows;
    m.document["holes"] = m.holes;
    m.document["complete"] = m.complete;
    return m;
}

std::set<std::string> parse_test_listing(std::istream& in) {
    std::set<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line.rfind("[doctest]", 0) == 0 || line.rfind("====", 0) == 0) continue;
        out.insert(line);
    }
    return out;
}

}  // namespace affverma::trace
