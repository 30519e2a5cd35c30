#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cpmatch/cutting_plane.hpp"
#include "cpmatch/graph.hpp"

namespace cpmatch {

struct BenchInstanceRow {
    int index = 0;
    std::uint64_t seed = 0;
    int edge_count = 0;
    bool base_tight = false;
    bool nonunique_flagged = false;  // base relaxation optimum not verifiably unique
    std::string cp_bp_status;
    std::string cp_lp_status;
    std::int64_t cp_bp_weight = 0;
    std::int64_t cp_lp_weight = 0;
    bool cp_bp_solved = false;
    bool cp_lp_solved = false;
    int cp_bp_cycles = 0;
    int cp_lp_cycles = 0;
};

struct BenchConfigReport {
    int n = 0;
    double p = 0;
    int count = 0;
    double mean_edges = 0;
    double pct_cp_bp_solved = 0;
    double pct_base_tight = 0;
    double pct_cp_lp_solved = 0;
    double wall_seconds = 0;
    std::vector<BenchInstanceRow> rows;
};

struct BenchReport {
    std::vector<BenchConfigReport> configs;
};

struct BenchParams {
    std::vector<int> n_list;
    std::vector<double> p_list;
    int count = 100;
    std::int64_t w_max = std::int64_t(1) << 20;
    std::uint64_t seed = 0;
    long iterations = 1000;
    int workers = 1;
};

/// Deterministic per-instance seed stream for a benchmark cell.
std::uint64_t bench_instance_seed(std::uint64_t master, int n, double p, int index);

BenchReport run_bench(const BenchParams& params);

std::string bench_to_csv(const BenchReport& report);
std::string bench_to_json(const BenchReport& report);

}  // namespace cpmatch
