#include "cpmatch/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstring>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cpmatch/lp.hpp"
#include "cpmatch/oracle.hpp"

namespace cpmatch {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

BenchInstanceRow run_instance(const BenchParams& params, int n, double p, int index) {
    BenchInstanceRow row;
    row.index = index;
    row.seed = bench_instance_seed(params.seed, n, p, index);
    WeightedGraph g = generate_instance(n, p, params.w_max, row.seed);
    row.edge_count = g.edge_count();

    TightUnique base = check_tight_unique(g, OddCycleSet{});
    row.base_tight = base.tight;
    row.nonunique_flagged = !base.unique;

    CPOutcome lp = cp_lp(g, default_max_rounds(g));
    row.cp_lp_status = to_string(lp.status);
    row.cp_lp_weight = lp.weight;
    row.cp_lp_cycles = lp.cycles.size();

    CPOutcome bp = cp_bp(g, params.iterations, default_max_rounds(g));
    row.cp_bp_status = to_string(bp.status);
    row.cp_bp_weight = bp.weight;
    row.cp_bp_cycles = bp.cycles.size();

    // Reference optimum: brute force within the guard, else the certified
    // cutting-plane LP matching (its weight equals an integral relaxation
    // optimum, which upper-bounds every matching).
    bool ref_known = false;
    std::int64_t ref = 0;
    if (g.edge_count() <= 30) {
        ref = brute_force_mwm(g).best_objective;
        ref_known = true;
    } else if (lp.status == CPStatus::MATCHING) {
        ref = lp.weight;
        ref_known = true;
    }
    row.cp_lp_solved = lp.status == CPStatus::MATCHING && (!ref_known || lp.weight == ref);
    if (bp.status == CPStatus::MATCHING) {
        if (ref_known) {
            row.cp_bp_solved = bp.weight == ref;
        } else {
            // Certify against the relaxation bound under the final cycle set.
            LPSolution bound = solve(build_clp(g, bp.cycles));
            row.cp_bp_solved = Rational(bp.weight) == bound.objective;
        }
    }
    return row;
}

}  // namespace

std::uint64_t bench_instance_seed(std::uint64_t master, int n, double p, int index) {
    std::uint64_t pbits;
    double pd = p;
    std::memcpy(&pbits, &pd, sizeof pbits);
    std::uint64_t h = splitmix64(master ^ 0xc2b2ae3d27d4eb4fULL);
    h = splitmix64(h ^ static_cast<std::uint64_t>(n));
    h = splitmix64(h ^ pbits);
    return splitmix64(h ^ static_cast<std::uint64_t>(index));
}

BenchReport run_bench(const BenchParams& params) {
    BenchReport report;
    for (int n : params.n_list) {
        for (double p : params.p_list) {
            BenchConfigReport cfg;
            cfg.n = n;
            cfg.p = p;
            cfg.count = params.count;
            cfg.rows.resize(params.count);
            auto start = std::chrono::steady_clock::now();

            std::atomic<int> next{0};
            auto worker = [&]() {
                while (true) {
                    int i = next.fetch_add(1);
                    if (i >= params.count) break;
                    cfg.rows[i] = run_instance(params, n, p, i);
                }
            };
            int workers = std::max(1, params.workers);
            if (workers == 1) {
                worker();
            } else {
                std::vector<std::thread> pool;
                for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
                for (auto& t : pool) t.join();
            }

            cfg.wall_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            double edges = 0, bp = 0, tight = 0, lp = 0;
            for (const BenchInstanceRow& r : cfg.rows) {
                edges += r.edge_count;
                bp += r.cp_bp_solved ? 1 : 0;
                tight += r.base_tight ? 1 : 0;
                lp += r.cp_lp_solved ? 1 : 0;
            }
            if (params.count > 0) {
                cfg.mean_edges = edges / params.count;
                cfg.pct_cp_bp_solved = 100.0 * bp / params.count;
                cfg.pct_base_tight = 100.0 * tight / params.count;
                cfg.pct_cp_lp_solved = 100.0 * lp / params.count;
            }
            report.configs.push_back(std::move(cfg));
        }
    }
    return report;
}

std::string bench_to_csv(const BenchReport& report) {
    std::ostringstream out;
    out << "n,p,count,mean_edges,pct_cp_bp_solved,pct_base_tight,pct_cp_lp_solved,"
           "wall_seconds\n";
    for (const BenchConfigReport& cfg : report.configs)
        out << cfg.n << ',' << cfg.p << ',' << cfg.count << ',' << cfg.mean_edges << ','
            << cfg.pct_cp_bp_solved << ',' << cfg.pct_base_tight << ',' << cfg.pct_cp_lp_solved
            << ',' << cfg.wall_seconds << '\n';
    return out.str();
}

std::string bench_to_json(const BenchReport& report) {
    nlohmann::json j = nlohmann::json::array();
    for (const BenchConfigReport& cfg : report.configs) {
        nlohmann::json rows = nlohmann::json::array();
        for (const BenchInstanceRow& r : cfg.rows) {
            rows.push_back({{"index", r.index},
                            {"seed", r.seed},
                            {"edge_count", r.edge_count},
                            {"base_tight", r.base_tight},
                            {"nonunique_flagged", r.nonunique_flagged},
                            {"cp_bp_status", r.cp_bp_status},
                            {"cp_bp_weight", r.cp_bp_weight},
                            {"cp_bp_solved", r.cp_bp_solved},
                            {"cp_bp_cycles", r.cp_bp_cycles},
                            {"cp_lp_status", r.cp_lp_status},
                            {"cp_lp_weight", r.cp_lp_weight},
                            {"cp_lp_solved", r.cp_lp_solved},
                            {"cp_lp_cycles", r.cp_lp_cycles}});
        }
        j.push_back({{"n", cfg.n},
                     {"p", cfg.p},
                     {"count", cfg.count},
                     {"mean_edges", cfg.mean_edges},
                     {"pct_cp_bp_solved", cfg.pct_cp_bp_solved},
                     {"pct_base_tight", cfg.pct_base_tight},
                     {"pct_cp_lp_solved", cfg.pct_cp_lp_solved},
                     {"wall_seconds", cfg.wall_seconds},
                     {"instances", rows}});
    }
    return j.dump(2);
}

}  // namespace cpmatch
