#pragma once

// Batch experiment runner: sweeps generator specs × k, runs the selection
// algorithm, the exact oracle (under a size cap), and optionally the
// approximation pipeline, and emits a fixed-header CSV plus a JSON audit.
// Instances are independent and may be evaluated in parallel; rows are
// always emitted in configuration order and the CSV is byte-reproducible.

#include <cstdio>
#include <future>

#include <json.hpp>

#include "kdom/approx.hpp"
#include "kdom/domset.hpp"
#include "kdom/exact_oracle.hpp"
#include "kdom/generators.hpp"

namespace kdom {

struct ExperimentConfig {
    std::vector<GeneratorSpec> generators;
    std::vector<int> k_values;
    int t = 3;
    std::optional<double> epsilon;  // direct-mode pipeline
    std::optional<double> alpha;    // derived-epsilon pipeline
    long long oracle_cap = 30;      // skip gamma_k above this order
    std::uint64_t seed = 0;
    long long oracle_budget = 20'000'000;
};

inline ExperimentConfig config_from_json(const nlohmann::json& j) {
    ExperimentConfig cfg;
    for (const auto& spec : j.at("generators"))
        cfg.generators.push_back({family_from_name(spec.at("family").get<std::string>()),
                                  spec.at("n").get<int>(), spec.at("seed").get<std::uint64_t>()});
    cfg.k_values = j.at("k_values").get<std::vector<int>>();
    if (j.contains("t")) cfg.t = j.at("t").get<int>();
    if (j.contains("epsilon")) cfg.epsilon = j.at("epsilon").get<double>();
    if (j.contains("alpha")) cfg.alpha = j.at("alpha").get<double>();
    if (cfg.epsilon && cfg.alpha)
        throw std::invalid_argument("experiment config: give epsilon or alpha, not both");
    if (j.contains("oracle_cap")) cfg.oracle_cap = j.at("oracle_cap").get<long long>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("oracle_budget")) cfg.oracle_budget = j.at("oracle_budget").get<long long>();
    return cfg;
}

struct ResultRow {
    std::string instance;
    std::string family;
    int n = 0;
    std::size_t m = 0;
    int k = 0;
    int diam = 0;
    bool diam_ok = false;
    std::size_t domset_size = 0;
    int rounds = 0;
    bool valid_domset = false;
    std::optional<std::size_t> gamma;
    std::string gamma_status;  // "ok", "skipped: over cap", "skipped: budget"
    std::optional<double> ratio;
    bool approx_ran = false;
    std::string approx_status;  // "", "ok", "failed: contract"
    std::optional<std::size_t> approx_size;
    std::optional<std::size_t> boundary_size;
    std::optional<bool> valid_approx;
    bool audit_ok = true;  // conjunction of every check that ran
};

struct FamilySummary {
    std::size_t instances = 0;
    double max_ratio = 0.0;
    double ratio_sum = 0.0;
    std::size_t ratio_count = 0;
};

struct ExperimentResult {
    std::vector<ResultRow> rows;
    std::map<std::string, FamilySummary> summary;
    std::size_t failures = 0;

    bool all_ok() const { return failures == 0; }
};

namespace detail {

inline std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

inline ResultRow evaluate_instance(const ExperimentConfig& cfg, const GeneratorSpec& spec, int k) {
    Graph g = generate(spec);
    ResultRow row;
    row.family = family_name(spec.family);
    row.instance = row.family + "-n" + std::to_string(spec.n) + "-s" + std::to_string(spec.seed);
    row.n = g.order();
    row.m = g.edge_count();
    row.k = k;
    row.diam = diameter(g).value_or(-1);
    row.diam_ok = row.diam >= 4 * k;

    DomSetRun ds = domset(g, k);
    row.domset_size = ds.selected.size();
    row.rounds = ds.rounds;
    row.valid_domset = is_distance_k_dominating(g, ds.selected, k);
    row.audit_ok = row.valid_domset && ds.rounds <= 2 * k + 2;

    if (g.order() > cfg.oracle_cap) {
        row.gamma_status = "skipped: over cap";
    } else {
        try {
            OptimalCertificate cert = gamma_k_exact(g, k, cfg.oracle_budget);
            row.gamma = cert.size;
            row.gamma_status = "ok";
            row.ratio = static_cast<double>(row.domset_size) / static_cast<double>(cert.size);
        } catch (const BudgetExceeded&) {
            row.gamma_status = "skipped: budget";
        }
    }

    if ((cfg.epsilon || cfg.alpha) && row.diam_ok) {
        row.approx_ran = true;
        try {
            ApproxRun ar = cfg.epsilon
                               ? k_domset_approx(g, k, cfg.t, *cfg.epsilon, EpsilonMode::direct,
                                                 {}, cfg.oracle_budget)
                               : k_domset_approx(g, k, cfg.t, *cfg.alpha, EpsilonMode::derived, {},
                                                 cfg.oracle_budget);
            row.approx_status = "ok";
            row.approx_size = ar.result.size();
            row.boundary_size = ar.boundary.size();
            row.valid_approx = ar.audit.valid;
            row.audit_ok = row.audit_ok && ar.audit.valid;
            if (row.gamma)
                row.audit_ok =
                    row.audit_ok && ar.result.size() <= ar.boundary.size() + *row.gamma;
        } catch (const ContractFailure&) {
            row.approx_status = "failed: contract";
            row.audit_ok = false;
        } catch (const BudgetExceeded&) {
            row.approx_status = "skipped: budget";
        }
    }
    return row;
}

}  // namespace detail

inline ExperimentResult run_experiments(const ExperimentConfig& cfg, bool parallel = false,
                                        unsigned threads = 4) {
    std::vector<std::pair<GeneratorSpec, int>> tasks;
    for (const auto& spec : cfg.generators)
        for (int k : cfg.k_values) tasks.emplace_back(spec, k);

    ExperimentResult result;
    result.rows.resize(tasks.size());
    auto eval_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            result.rows[i] = detail::evaluate_instance(cfg, tasks[i].first, tasks[i].second);
    };
    if (parallel && tasks.size() > 1) {
        unsigned workers = std::max(1u, threads);
        std::size_t chunk = (tasks.size() + workers - 1) / workers;
        std::vector<std::future<void>> futures;
        for (std::size_t lo = 0; lo < tasks.size(); lo += chunk)
            futures.push_back(std::async(std::launch::async, eval_range, lo,
                                         std::min(lo + chunk, tasks.size())));
        for (auto& f : futures) f.get();
    } else {
        eval_range(0, tasks.size());
    }

    for (const ResultRow& row : result.rows) {
        FamilySummary& fam = result.summary[row.family];
        ++fam.instances;
        if (row.ratio) {
            fam.max_ratio = std::max(fam.max_ratio, *row.ratio);
            fam.ratio_sum += *row.ratio;
            ++fam.ratio_count;
        }
        if (!row.audit_ok) ++result.failures;
    }
    return result;
}

inline std::string to_csv(const ExperimentResult& result) {
    std::string out =
        "instance,family,n,m,k,diam,diam_ok,domset_size,rounds,valid_domset,"
        "gamma_k,ratio,approx_size,boundary_size,valid_approx,audit_ok\n";
    auto flag = [](bool b) { return b ? "true" : "false"; };
    for (const ResultRow& r : result.rows) {
        out += r.instance + ',' + r.family + ',' + std::to_string(r.n) + ',' +
               std::to_string(r.m) + ',' + std::to_string(r.k) + ',' + std::to_string(r.diam) +
               ',' + flag(r.diam_ok) + ',' + std::to_string(r.domset_size) + ',' +
               std::to_string(r.rounds) + ',' + flag(r.valid_domset) + ',';
        out += r.gamma ? std::to_string(*r.gamma) : r.gamma_status;
        out += ',';
        if (r.ratio) out += detail::format_double(*r.ratio);
        out += ',';
        if (r.approx_size) out += std::to_string(*r.approx_size);
        out += ',';
        if (r.boundary_size) out += std::to_string(*r.boundary_size);
        out += ',';
        if (r.valid_approx) out += flag(*r.valid_approx);
        out += ',';
        out += flag(r.audit_ok);
        out += '\n';
    }
    return out;
}

inline nlohmann::json to_json(const ExperimentResult& result) {
    nlohmann::json rows = nlohmann::json::array();
    for (const ResultRow& r : result.rows) {
        nlohmann::json jr{{"instance", r.instance}, {"family", r.family},
                          {"n", r.n},               {"m", r.m},
                          {"k", r.k},               {"diam", r.diam},
                          {"diam_ok", r.diam_ok},   {"domset_size", r.domset_size},
                          {"rounds", r.rounds},     {"valid_domset", r.valid_domset},
                          {"audit_ok", r.audit_ok}};
        if (r.gamma) jr["gamma_k"] = *r.gamma;
        jr["gamma_status"] = r.gamma_status;
        if (r.ratio) jr["ratio"] = *r.ratio;
        if (r.approx_ran) {
            jr["approx_status"] = r.approx_status;
            if (r.approx_size) jr["approx_size"] = *r.approx_size;
            if (r.boundary_size) jr["boundary_size"] = *r.boundary_size;
            if (r.valid_approx) jr["valid_approx"] = *r.valid_approx;
        }
        rows.push_back(std::move(jr));
    }
    nlohmann::json summary = nlohmann::json::object();
    for (const auto& [family, s] : result.summary) {
        summary[family] = {{"instances", s.instances},
                           {"max_ratio", s.max_ratio},
                           {"mean_ratio", s.ratio_count ? s.ratio_sum / static_cast<double>(s.ratio_count)
                                                        : 0.0}};
    }
    return nlohmann::json{{"rows", rows}, {"summary", summary},
                          {"failures", result.failures}};
}

}  // namespace kdom
