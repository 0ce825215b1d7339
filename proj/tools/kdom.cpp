// kdom command-line interface: graph generation, selection runs, clustering,
// approximation runs, exact oracles, and batch experiments.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "kdom/experiments.hpp"
#include "kdom/graph_io.hpp"
#include "kdom/kdom.hpp"
#include "kdom/serialize.hpp"

namespace {

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distance-k domination workbench"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph from a seeded family");
    std::string gen_family;
    int gen_n = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--family", gen_family, "family name")->required();
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--seed", gen_seed, "generator seed")->required();
    gen->add_option("--out", gen_out, "output graph file")->required();

    // domset
    auto* ds = app.add_subcommand("domset", "run the distance-k selection algorithm");
    std::string ds_graph, ds_trace;
    int ds_k = 0;
    bool ds_solve_small = false;
    ds->add_option("--graph", ds_graph, "graph file")->required();
    ds->add_option("--k", ds_k, "domination radius")->required();
    ds->add_option("--trace", ds_trace, "write execution trace JSON to this file");
    ds->add_flag("--solve-small", ds_solve_small,
                 "solve components of diameter < 4k exactly in-engine");

    // decompose
    auto* dec = app.add_subcommand("decompose", "low-boundary clustering of a graph");
    std::string dec_graph;
    double dec_epsilon = 0.0;
    dec->add_option("--graph", dec_graph, "graph file")->required();
    dec->add_option("--epsilon", dec_epsilon, "boundary fraction target in (0,1)")->required();

    // approx
    auto* ap = app.add_subcommand("approx", "approximation pipeline");
    std::string ap_graph, ap_variant = "voronoi";
    int ap_k = 0, ap_t = 3;
    double ap_alpha = 0.0, ap_epsilon = 0.0, ap_c = 0.0;
    ap->add_option("--graph", ap_graph, "graph file")->required();
    ap->add_option("--k", ap_k, "domination radius")->required();
    ap->add_option("--t", ap_t, "K_{2,t} parameter");
    auto* ap_alpha_opt = ap->add_option("--alpha", ap_alpha, "target slack; derives epsilon");
    auto* ap_eps_opt = ap->add_option("--epsilon", ap_epsilon, "direct clustering epsilon");
    ap->add_option("--variant", ap_variant, "voronoi | bounded-degree");
    ap->add_option("--C", ap_c, "boundedness constant for the bounded-degree variant");
    ap_alpha_opt->excludes(ap_eps_opt);
    ap_eps_opt->excludes(ap_alpha_opt);

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exact ground-truth computations");
    oracle->require_subcommand(1);
    auto* og = oracle->add_subcommand("gamma", "exact minimum distance-k dominating set");
    std::string og_graph;
    int og_k = 0;
    og->add_option("--graph", og_graph, "graph file")->required();
    og->add_option("--k", og_k, "domination radius")->required();
    auto* om = oracle->add_subcommand("minor", "exhaustive K_{2,t}-minor detection");
    std::string om_graph;
    int om_t = 0;
    om->add_option("--graph", om_graph, "graph file")->required();
    om->add_option("--t", om_t, "minor parameter t")->required();

    // run
    auto* rn = app.add_subcommand("run", "batch experiments from a config file");
    std::string rn_config, rn_out, rn_json;
    bool rn_parallel = false;
    rn->add_option("--config", rn_config, "experiment config JSON")->required();
    rn->add_option("--out", rn_out, "CSV output path")->required();
    rn->add_option("--json", rn_json, "full JSON audit output path");
    rn->add_flag("--parallel", rn_parallel, "evaluate instances in parallel");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            kdom::GeneratorSpec spec{kdom::family_from_name(gen_family), gen_n, gen_seed};
            kdom::save_graph(kdom::generate(spec), gen_out);
            return 0;
        }
        if (*ds) {
            kdom::Graph g = kdom::load_graph(ds_graph);
            kdom::DomSetRun run = ds_solve_small
                                      ? kdom::domset_with_component_solve(g, ds_k)
                                      : kdom::domset(g, ds_k);
            std::cout << kdom::to_json(run).dump(2) << "\n";
            if (!ds_trace.empty()) write_text(ds_trace, kdom::trace_json(run).dump(2) + "\n");
            return 0;
        }
        if (*dec) {
            kdom::Graph g = kdom::load_graph(dec_graph);
            kdom::ClusterPartition p = kdom::low_boundary_partition(g, dec_epsilon);
            std::cout << kdom::to_json(p).dump(2) << "\n";
            return 0;
        }
        if (*ap) {
            kdom::Graph g = kdom::load_graph(ap_graph);
            if (!*ap_alpha_opt && !*ap_eps_opt)
                throw std::invalid_argument("approx: give --alpha or --epsilon");
            kdom::EpsilonMode mode =
                *ap_eps_opt ? kdom::EpsilonMode::direct : kdom::EpsilonMode::derived;
            double value = *ap_eps_opt ? ap_epsilon : ap_alpha;
            kdom::ApproxRun run;
            if (ap_variant == "bounded-degree") {
                if (ap_c <= 0.0)
                    throw std::invalid_argument("approx: bounded-degree variant needs --C");
                run = kdom::bounded_degree_approx(g, ap_k, ap_t, ap_c, value, mode);
            } else if (ap_variant == "voronoi") {
                run = kdom::k_domset_approx(g, ap_k, ap_t, value, mode);
            } else {
                throw std::invalid_argument("approx: unknown variant " + ap_variant);
            }
            std::cout << kdom::to_json(run).dump(2) << "\n";
            return 0;
        }
        if (*og) {
            kdom::Graph g = kdom::load_graph(og_graph);
            kdom::OptimalCertificate cert = kdom::gamma_k_exact(g, og_k);
            nlohmann::json j{{"gamma", cert.size},
                             {"optimum", kdom::to_json(cert.optimum)},
                             {"nodes_explored", cert.nodes_explored}};
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*om) {
            kdom::Graph g = kdom::load_graph(om_graph);
            nlohmann::json j{{"has_minor", kdom::has_k2t_minor(g, om_t)}, {"t", om_t}};
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*rn) {
            std::ifstream in(rn_config);
            if (!in) throw std::runtime_error("cannot open config: " + rn_config);
            kdom::ExperimentConfig cfg = kdom::config_from_json(nlohmann::json::parse(in));
            kdom::ExperimentResult result = kdom::run_experiments(cfg, rn_parallel);
            write_text(rn_out, kdom::to_csv(result));
            if (!rn_json.empty()) write_text(rn_json, kdom::to_json(result).dump(2) + "\n");
            nlohmann::json summary = kdom::to_json(result);
            summary.erase("rows");
            std::cout << summary.dump(2) << "\n";
            return result.all_ok() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
