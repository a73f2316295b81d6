#include "checks.hpp"

#include "affverma/affine_weights.hpp"
#include "affverma/appendix.hpp"
#include "affverma/conformal.hpp"
#include "affverma/embedding.hpp"
#include "affverma/notation.hpp"
#include "affverma/serialize.hpp"
#include "affverma/singular.hpp"
#include "affverma/triality.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <thread>

namespace affverma::cli {

using nlohmann::json;

std::optional<Target> parse_target(const std::string& s) {
    static const std::map<std::string, Target> names = {
        {"singular", Target::singular},     {"embedding", Target::embedding}, {"conformal", Target::conformal},
        {"admissible", Target::admissible}, {"triality", Target::triality},   {"appendix", Target::appendix},
        {"all", Target::all},
    };
    auto it = names.find(s);
    if (it == names.end()) return std::nullopt;
    return it->second;
}

namespace {

struct Modules {
    std::shared_ptr<verma::Module> b, d;
};

Modules modules(int l) {
    const Rational k = critical_embedding_level(l);
    return {std::make_shared<verma::Module>(LieAlgebra::build(AlgebraType::B, l), k),
            std::make_shared<verma::Module>(LieAlgebra::build(AlgebraType::D, l), k)};
}

/// Doubles the coefficient of the first monomial: a deliberate transcription error.
verma::State corrupt(const verma::State& v) {
    if (v.is_zero()) return v;
    const auto& [mono, c] = *v.terms().begin();
    verma::State out = v;
    out.add(mono, c);
    return out;
}

void add_singular(std::vector<Task>& tasks, const Options& o, int l, const Modules& m) {
    if (!o.type || *o.type == 'B')
        tasks.push_back([=] {
            auto r = singular::check_singular(*m.b, singular::build_vB(*m.b), "v_B", o.strict);
            return CheckResult{"singular.B", l, r.pass, io::to_json(*m.b, r)};
        });
    if (!o.type || *o.type == 'D')
        tasks.push_back([=] {
            verma::State v = singular::build_vD(*m.d);
            if (o.corrupt_vd) v = corrupt(v);
            auto r = singular::check_singular(*m.d, v, "v_D", o.strict);
            return CheckResult{"singular.D", l, r.pass, io::to_json(*m.d, r)};
        });
}

void add_embedding(std::vector<Task>& tasks, int l, const Modules& m) {
    tasks.push_back([=] {
        auto r = embedding::verify_relations(*m.b);
        return CheckResult{"embedding.relations", l, r.pass, io::to_json(*m.b, r)};
    });
    tasks.push_back([=] {
        auto r = embedding::verify_membership_certificate(*m.b, *m.d);
        return CheckResult{"embedding.certificate", l, r.pass, io::to_json(*m.b, r)};
    });
}

void add_conformal(std::vector<Task>& tasks, int l, const Modules& m) {
    tasks.push_back([=] {
        auto r = conformal::verify_quadratic_relation(*m.b);
        return CheckResult{"conformal.quadratic", l, r.pass, io::to_json(*m.b, r)};
    });
    tasks.push_back([=] {
        auto r = conformal::verify_conformal_equality(*m.b, *m.d);
        const Rational expected(-l * (2 * l - 3));
        const bool pass = r.pass && r.c_b == expected;
        json j = io::to_json(*m.b, r);
        j["expected_central_charge"] = to_string(expected);
        j["pass"] = pass;
        return CheckResult{"conformal.equality", l, pass, j};
    });
    tasks.push_back([=] {
        const auto ks = conformal::solve_level_equation(l);
        const bool pass = ks == std::vector<Rational>{critical_embedding_level(l), Rational(0)};
        json sols = json::array();
        for (const auto& k : ks) sols.push_back(to_string(k));
        return CheckResult{"conformal.level_equation", l, pass,
                           {{"check", "level_equation"}, {"l", l}, {"solutions", sols}, {"pass", pass}}};
    });
}

void add_admissible(std::vector<Task>& tasks, const Options& o, int l) {
    tasks.push_back([=] {
        auto r = affine::check_embedding_level(RootDatum::make(AlgebraType::D, l), o.mode_bound);
        return CheckResult{"admissible", l, r.pass, io::to_json(r)};
    });
}

void add_appendix(std::vector<Task>& tasks, int l, const Modules& m) {
    tasks.push_back([=] {
        auto r = appendix::verify(*m.d);
        return CheckResult{"appendix", l, r.pass, io::to_json(*m.d, r)};
    });
}

void add_triality(std::vector<Task>& tasks, int l, const Modules& m) {
    const std::pair<const char*, triality::NodePermutation> maps[] = {
        {"pi_prime", triality::pi_prime}, {"pi_double_prime", triality::pi_double_prime}};
    for (const auto& [name, sigma] : maps) {
        tasks.push_back([=, name = std::string(name), sigma = sigma] {
            auto r = triality::check_invariance(*m.d, singular::build_vD(*m.d), sigma, name);
            const auto pi = triality::DiagramAutomorphism::build(m.d->handle(), sigma);
            const int order = name == "pi_prime" ? 3 : 2;
            auto power = pi;
            for (int i = 1; i < order; ++i) power = pi.compose(power);
            const bool order_ok = power.is_identity();
            json j = io::to_json(*m.d, r);
            j["order"] = order;
            j["order_ok"] = order_ok;
            j["pass"] = r.pass && order_ok;
            return CheckResult{"triality." + name, l, r.pass && order_ok, j};
        });
    }
}

}  // namespace

std::vector<Task> plan(const Options& o) {
    std::vector<Task> tasks;
    for (int l : o.ranks) {
        const Modules m = modules(l);
        const bool all = o.target == Target::all;
        if (all || o.target == Target::singular) add_singular(tasks, o, l, m);
        if (all || o.target == Target::admissible) add_admissible(tasks, o, l);
        if (all || o.target == Target::embedding) add_embedding(tasks, l, m);
        if (all || o.target == Target::conformal) add_conformal(tasks, l, m);
        if (all || o.target == Target::appendix) add_appendix(tasks, l, m);
        if ((all && l == 4) || o.target == Target::triality) add_triality(tasks, l, m);
    }
    return tasks;
}

std::vector<CheckResult> run(const std::vector<Task>& tasks, unsigned jobs) {
    std::vector<CheckResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = tasks[i]();
            } catch (const std::exception& e) {
                results[i] = CheckResult{"error", 0, false, {{"check", "error"}, {"error", e.what()}, {"pass", false}}};
            }
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace affverma::cli
