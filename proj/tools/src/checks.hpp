#pragma once

#include "json.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace affverma::cli {

enum class Target { singular, embedding, conformal, admissible, triality, appendix, all };

std::optional<Target> parse_target(const std::string& s);

struct Options {
    Target target = Target::all;
    std::vector<int> ranks;
    std::optional<char> type;  // 'B' or 'D' when given
    int mode_bound = 20;
    bool strict = false;
    bool corrupt_vd = false;
};

struct CheckResult {
    std::string id;
    int l = 0;
    bool pass = false;
    nlohmann::json report;
};

using Task = std::function<CheckResult()>;

/// Independent checks selected by the options, in report order.
std::vector<Task> plan(const Options& opts);

/// Runs every task on up to `jobs` threads; results keep the task order.
std::vector<CheckResult> run(const std::vector<Task>& tasks, unsigned jobs);

}  // namespace affverma::cli
