#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cpmatch/bench.hpp"
#include "cpmatch/bp.hpp"
#include "cpmatch/cutting_plane.hpp"
#include "cpmatch/graph.hpp"
#include "cpmatch/lp.hpp"
#include "cpmatch/oracle.hpp"
#include "cpmatch/transform.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) std::cout << content;
    else write_file(out_path, content);
}

nlohmann::json matching_json(const cpmatch::WeightedGraph& g, const cpmatch::Matching& m) {
    nlohmann::json edges = nlohmann::json::array();
    for (int id : m.edge_ids) {
        const cpmatch::Edge& e = g.edge(id);
        edges.push_back({{"u", e.u}, {"v", e.v}, {"w", e.w}});
    }
    return edges;
}

int cmd_solve(const std::string& instance_path, const std::string& mode, long iterations,
              int max_rounds, const std::string& out_path) {
    using namespace cpmatch;
    WeightedGraph g = parse_graph(read_file(instance_path));
    if (max_rounds <= 0) max_rounds = default_max_rounds(g);

    nlohmann::json result;
    result["instance"] = instance_path;
    result["mode"] = mode;
    bool success = false;

    if (mode == "cp-bp" || mode == "cp-lp") {
        CPOutcome out = mode == "cp-bp" ? cp_bp(g, iterations, max_rounds)
                                        : cp_lp(g, max_rounds);
        result["status"] = to_string(out.status);
        result["rounds"] = out.log.size();
        result["cycles_added"] = out.cycles.size();
        nlohmann::json log = nlohmann::json::array();
        for (const CPRoundLog& l : out.log)
            log.push_back({{"round", l.round},
                           {"cycles", l.cycle_count},
                           {"bp_rounds", l.bp_rounds},
                           {"bp_converged", l.bp_converged},
                           {"count_zero", l.count_zero},
                           {"count_half", l.count_half},
                           {"count_one", l.count_one}});
        result["log"] = log;
        if (out.status == CPStatus::MATCHING) {
            result["weight"] = out.weight;
            result["matching"] = matching_json(g, out.matching);
            success = true;
        }
    } else if (mode == "bp-bare") {
        BaselineBPRun run = run_bp_baseline(g, OddCycleSet{}, iterations);
        result["tables_converged"] = run.converged;
        result["rounds"] = run.rounds_used;
        int halves = 0;
        for (Tern t : run.x) halves += t == Tern::HALF ? 1 : 0;
        result["count_half"] = halves;
        // A run counts as converged only when the decode is an exact matching;
        // oscillation and tie fixed points both fail to produce one.
        result["status"] = "UNCONVERGED";
        if (halves == 0) {
            Matching m;
            for (int id = 0; id < g.edge_count(); ++id)
                if (run.x[id] == Tern::ONE) m.edge_ids.push_back(id);
            MatchingCheck chk = validate_matching(g, m);
            if (chk.ok) {
                result["status"] = "MATCHING";
                result["weight"] = chk.total_weight;
                result["matching"] = matching_json(g, m);
                success = true;
            }
        }
    } else if (mode == "exact") {
        OracleResult oracle = brute_force_mwm(g);
        Matching m;
        for (int id = 0; id < g.edge_count(); ++id)
            if (oracle.best[id]) m.edge_ids.push_back(id);
        result["status"] = "MATCHING";
        result["weight"] = oracle.best_objective;
        result["unique"] = oracle.is_unique;
        result["matching"] = matching_json(g, m);
        success = true;
    } else {
        throw CLI::ValidationError("--mode", "unknown mode " + mode);
    }
    emit(out_path, result.dump(2) + "\n");
    return success ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Belief-propagation and cutting-plane solvers for maximum weight matching"};
    app.require_subcommand(1);

    // generate
    int gen_n = 50;
    double gen_p = 0.5;
    std::int64_t gen_wmax = std::int64_t(1) << 20;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    auto* gen = app.add_subcommand("generate", "Generate a sparsified complete-graph instance");
    gen->add_option("-n,--vertices", gen_n, "Vertex count")->required();
    gen->add_option("-p,--prob", gen_p, "Edge elimination probability")
        ->check(CLI::Range(0.0, 1.0))
        ->required();
    gen->add_option("--w-max", gen_wmax, "Maximum edge weight")->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("-o,--out", gen_out, "Output path (default stdout)");

    // solve
    std::string solve_instance, solve_mode = "cp-bp", solve_out;
    long solve_T = 1000;
    int solve_rounds = 0;
    auto* solve = app.add_subcommand("solve", "Solve one instance");
    solve->add_option("instance", solve_instance, "Instance file")->required();
    solve->add_option("--mode", solve_mode, "cp-bp | cp-lp | bp-bare | exact")
        ->check(CLI::IsMember({"cp-bp", "cp-lp", "bp-bare", "exact"}));
    solve->add_option("-T,--iterations", solve_T, "BP iteration budget")->check(CLI::PositiveNumber);
    solve->add_option("--max-rounds", solve_rounds, "Cutting-plane round budget (default |E|)");
    solve->add_option("-o,--out", solve_out, "Output path (default stdout)");

    // bench
    cpmatch::BenchParams bench;
    std::string bench_out;
    auto* bn = app.add_subcommand("bench", "Random-instance benchmark harness");
    bn->add_option("--n", bench.n_list, "Vertex counts")->required();
    bn->add_option("--p", bench.p_list, "Edge elimination probabilities")->required();
    bn->add_option("--count", bench.count, "Instances per configuration")
        ->check(CLI::PositiveNumber);
    bn->add_option("--w-max", bench.w_max, "Maximum edge weight")->check(CLI::PositiveNumber);
    bn->add_option("--seed", bench.seed, "Master seed");
    bn->add_option("-T,--iterations", bench.iterations, "BP iteration budget")
        ->check(CLI::PositiveNumber);
    bn->add_option("--workers", bench.workers, "Parallel workers")->check(CLI::PositiveNumber);
    bn->add_option("-o,--out", bench_out, "Output prefix; writes <prefix>.csv and <prefix>.json");

    // transform
    std::string tr_instance, tr_cycles, tr_out;
    auto* tr = app.add_subcommand("transform", "Dump the transformed graph and provenance");
    tr->add_option("instance", tr_instance, "Instance file")->required();
    tr->add_option("--cycles", tr_cycles, "Cycle-set sidecar file");
    tr->add_option("-o,--out", tr_out,
                   "Output prefix; writes <prefix>.graph and <prefix>.provenance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            cpmatch::WeightedGraph g =
                cpmatch::generate_instance(gen_n, gen_p, gen_wmax, gen_seed);
            emit(gen_out, cpmatch::format_graph(g));
            return 0;
        }
        if (*solve)
            return cmd_solve(solve_instance, solve_mode, solve_T, solve_rounds, solve_out);
        if (*bn) {
            cpmatch::BenchReport report = cpmatch::run_bench(bench);
            if (bench_out.empty()) {
                std::cout << cpmatch::bench_to_csv(report);
            } else {
                write_file(bench_out + ".csv", cpmatch::bench_to_csv(report));
                write_file(bench_out + ".json", cpmatch::bench_to_json(report));
            }
            return 0;
        }
        if (*tr) {
            cpmatch::WeightedGraph g = cpmatch::parse_graph(read_file(tr_instance));
            cpmatch::OddCycleSet cycles;
            if (!tr_cycles.empty()) cycles = cpmatch::parse_cycles(read_file(tr_cycles), g);
            cpmatch::TransformedModel model = cpmatch::build_transform(g, cycles);
            if (tr_out.empty()) {
                std::cout << cpmatch::format_transformed(model)
                          << cpmatch::format_provenance(model);
            } else {
                write_file(tr_out + ".graph", cpmatch::format_transformed(model));
                write_file(tr_out + ".provenance", cpmatch::format_provenance(model));
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
