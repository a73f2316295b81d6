#include "checks.hpp"

#include "affverma/liealg.hpp"
#include "affverma/serialize.hpp"
#include "affverma/trace.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>
#include <thread>

namespace {

using namespace affverma;
using nlohmann::json;

constexpr int exit_pass = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_range(const std::string& s) {
    static const std::regex re(R"((\d+)\.\.(\d+))");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw UsageError("--l-range must look like a..b");
    const int a = std::stoi(m[1]), b = std::stoi(m[2]);
    if (a > b) throw UsageError("--l-range: empty range");
    std::vector<int> out;
    for (int l = a; l <= b; ++l) out.push_back(l);
    return out;
}

void require_rank(int l) {
    if (l < 4) throw UsageError("l must be >= 4");
}

void emit(const json& doc, const std::string& out_path, bool to_stdout) {
    const std::string text = doc.dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw UsageError("cannot write " + out_path);
        f << text;
    }
    if (to_stdout) std::cout << text;
}

void print_table(const std::vector<cli::CheckResult>& results) {
    std::size_t width = 5;
    for (const auto& r : results) width = std::max(width, r.id.size());
    std::cout << std::left << std::setw(4) << "l" << std::setw(static_cast<int>(width) + 2) << "check"
              << "result\n";
    for (const auto& r : results)
        std::cout << std::setw(4) << r.l << std::setw(static_cast<int>(width) + 2) << r.id
                  << (r.pass ? "pass" : "FAIL") << "\n";
}

int default_mode_bound() {
    if (const char* env = std::getenv("AFFINE_VERMA_MODE_BOUND")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw UsageError("AFFINE_VERMA_MODE_BOUND is not an integer");
        }
    }
    return 20;
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

int dump_algebra(const std::string& type, int l, const std::string& format, const std::string& out) {
    require_rank(l);
    const auto g = LieAlgebra::build(parse_algebra_type(type), l);
    if (format == "json") {
        emit(io::to_json(io::AlgebraTable::of(*g)), out, true);
        return exit_pass;
    }
    std::ostringstream text;
    text << to_string(g->type()) << "_" << l << " dim " << g->dim() << " h_dual " << g->dual_coxeter() << "\n";
    for (int i = 0; i < g->dim(); ++i) text << std::setw(4) << i << "  " << g->label_string(i) << "\n";
    std::cout << text.str();
    if (!out.empty()) std::ofstream(out) << text.str();
    return exit_pass;
}

json summary(const std::vector<cli::CheckResult>& results) {
    int passed = 0;
    for (const auto& r : results) passed += r.pass;
    return {{"total", results.size()}, {"passed", passed}};
}

int verify(const cli::Options& opts, unsigned jobs, const std::string& out, bool human) {
    const auto results = cli::run(cli::plan(opts), jobs);
    json list = json::array();
    bool pass = !results.empty();
    for (const auto& r : results) {
        json entry = r.report;
        entry["id"] = r.id;
        entry["l"] = r.l;
        list.push_back(std::move(entry));
        pass = pass && r.pass;
    }
    json doc = {{"command", "verify"},
                {"ranks", opts.ranks},
                {"strict", opts.strict},
                {"mode_bound", opts.mode_bound},
                {"results", list},
                {"summary", summary(results)},
                {"pass", pass}};
    emit(doc, out, !human);
    if (human) print_table(results);
    return pass ? exit_pass : exit_failure;
}

/// Runs each claim's command at l = 4 in-process to get its status.
std::map<std::string, bool> claim_statuses(unsigned jobs) {
    cli::Options opts;
    opts.ranks = {4};
    const auto results = cli::run(cli::plan(opts), jobs);
    auto all_pass = [&](const std::string& prefix) {
        bool any = false, ok = true;
        for (const auto& r : results)
            if (r.id.rfind(prefix, 0) == 0) {
                any = true;
                ok = ok && r.pass;
            }
        return any && ok;
    };
    std::map<std::string, bool> status;
    for (const auto& c : trace::claims()) {
        const std::string& cmd = c.command;
        bool ok = false;
        if (cmd.rfind("dump-algebra", 0) == 0) {
            const auto g = LieAlgebra::build(cmd.find("--type B") != std::string::npos ? AlgebraType::B : AlgebraType::D, 4);
            const auto table = io::AlgebraTable::of(*g);
            ok = io::algebra_table_from_json(json::parse(io::to_json(table).dump())) == table;
        } else if (cmd.find("singular --type B") != std::string::npos) {
            ok = all_pass("singular.B");
        } else if (cmd.find("singular --type D") != std::string::npos) {
            ok = all_pass("singular.D");
        } else {
            std::istringstream words(cmd);
            std::string verb, target;
            words >> verb >> target;
            ok = all_pass(target);
        }
        status[cmd] = ok;
    }
    return status;
}

int trace_cmd(const std::vector<std::string>& listings, const std::string& out_dir, bool run_checks, unsigned jobs) {
    std::set<std::string> ids;
    for (const auto& path : listings) {
        std::ifstream f(path);
        if (!f) throw UsageError("cannot read " + path);
        const auto found = trace::parse_test_listing(f);
        ids.insert(found.begin(), found.end());
    }
    const auto matrix = trace::generate_trace_matrix(ids, run_checks ? claim_statuses(jobs) : std::map<std::string, bool>{});
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        std::ofstream(std::filesystem::path(out_dir) / "trace.md") << matrix.markdown;
        std::ofstream(std::filesystem::path(out_dir) / "trace.json") << matrix.document.dump(2) << "\n";
    }
    std::cout << matrix.document.dump(2) << "\n";
    if (!matrix.complete) {
        for (const auto& h : matrix.holes) std::cerr << "coverage hole: " << h << "\n";
        return exit_failure;
    }
    for (const auto& e : matrix.entries)
        if (e.status == "fail") return exit_failure;
    return exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of affine B_l / D_l Verma module identities at level -l+3/2"};
    app.require_subcommand(1);

    std::string type = "D", format = "json", out;
    int l = 0;
    auto* dump = app.add_subcommand("dump-algebra", "Basis, bracket table, form and roots");
    dump->add_option("--type", type, "B or D")->required()->check(CLI::IsMember({"B", "D"}));
    dump->add_option("--l", l, "rank (>= 4)")->required();
    dump->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    dump->add_option("--out", out, "also write to this file");

    std::string target, range, vtype, fault;
    int vl = 0;
    int mode_bound = -1;
    unsigned jobs = default_jobs();
    bool strict = false, human = false;
    auto* ver = app.add_subcommand("verify", "Run verifications; exit 0 pass, 1 failure, 2 usage");
    ver->add_option("target", target, "singular|embedding|conformal|admissible|triality|appendix|all")->required();
    auto* lopt = ver->add_option("--l", vl, "rank (>= 4)");
    auto* ropt = ver->add_option("--l-range", range, "ranks a..b");
    lopt->excludes(ropt);
    ver->add_option("--type", vtype, "restrict singular checks to B or D")->check(CLI::IsMember({"B", "D"}));
    ver->add_option("--out", out, "write the JSON report here");
    ver->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    ver->add_option("--mode-bound", mode_bound, "mode bound M for admissibility (default 20)");
    ver->add_flag("--strict", strict, "also apply x(1) for every basis element");
    ver->add_flag("--human", human, "print a text table instead of JSON on stdout");
    ver->add_option("--fault", fault, "")->group("")->check(CLI::IsMember({"corrupt-vD"}));

    std::vector<std::string> listings;
    std::string out_dir;
    bool no_run = false;
    auto* tr = app.add_subcommand("trace", "Claim-to-test matrix; fails on coverage holes");
    tr->add_option("--tests", listings, "files with test case listings")->required();
    tr->add_option("--out-dir", out_dir, "write trace.md and trace.json here");
    tr->add_flag("--no-run", no_run, "skip running the checks (status 'not run')");
    tr->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*dump) return dump_algebra(type, l, format, out);
        if (*tr) return trace_cmd(listings, out_dir, !no_run, jobs);

        cli::Options opts;
        const auto t = cli::parse_target(target);
        if (!t) throw UsageError("unknown verify target: " + target);
        opts.target = *t;
        if (*lopt) {
            opts.ranks = {vl};
        } else if (*ropt) {
            opts.ranks = parse_range(range);
        } else {
            throw UsageError("one of --l or --l-range is required");
        }
        for (int r : opts.ranks) require_rank(r);
        if (!vtype.empty()) opts.type = vtype[0];
        if (opts.target == cli::Target::triality && (opts.ranks != std::vector<int>{4}))
            throw UsageError("triality is defined for l = 4 only");
        if (opts.target == cli::Target::admissible && opts.type == 'B')
            throw UsageError("admissible checks the D_l level weight; --type B is not supported");
        opts.mode_bound = mode_bound >= 0 ? mode_bound : default_mode_bound();
        if (opts.mode_bound < 1) throw UsageError("mode bound must be >= 1");
        opts.strict = strict;
        opts.corrupt_vd = fault == "corrupt-vD";
        return verify(opts, jobs, out, human);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
