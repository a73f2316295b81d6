#pragma once

#include "json.hpp"

#include <istream>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace affverma::trace {

struct Claim {
    std::string anchor;  // section and statement kind
    std::string quote;
    std::string command;
    std::vector<std::string> tests;  // test case names that verify the claim
};

const std::vector<Claim>& claims();

struct Entry {
    Claim claim;
    std::vector<std::string> missing_tests;
    /// "pass", "fail" or "not run" from the command outcome.
    std::string status;
};

struct Matrix {
    std::vector<Entry> entries;
    std::vector<std::string> holes;  // claims with a missing test
    bool complete = false;
    std::string markdown;
    nlohmann::json document;
};

/// `command_status` maps a claim's command to its outcome; commands not in the map
/// are "not run".
Matrix generate_trace_matrix(const std::set<std::string>& test_ids,
                             const std::map<std::string, bool>& command_status = {});

/// Test case names from `--list-test-cases` output; decoration lines are dropped.
std::set<std::string> parse_test_listing(std::istream& in);

}  // namespace affverma::trace
