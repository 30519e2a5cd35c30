#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cpmatch/graph.hpp"
#include "cpmatch/lp.hpp"
#include "cpmatch/transform.hpp"

namespace cpmatch {

enum class CPStatus : std::uint8_t {
    MATCHING,
    NON_HALF_INTEGRAL_TERMINATION,
    NO_ODD_CYCLE_FOUND,
    BUDGET_EXHAUSTED,
};

std::string to_string(CPStatus s);

struct CPRoundLog {
    int round;
    int cycle_count;
    long bp_rounds;       // 0 for the LP variant
    bool bp_converged;
    int count_zero;
    int count_half;
    int count_one;
};

struct CPOutcome {
    CPStatus status = CPStatus::BUDGET_EXHAUSTED;
    Matching matching;            // set when status == MATCHING
    std::int64_t weight = 0;
    TernaryAssignment x;          // final projected assignment over E
    OddCycleSet cycles;           // cycle set in use at termination
    std::vector<CPRoundLog> log;
};

/// Cutting-plane loop driven by BP on the transformed GM: decode, project,
/// return on a clean matching, otherwise grow the cycle set from the
/// half-valued edges (out-of-domain projections read as HALF on the flagged
/// edges). NON_HALF_INTEGRAL_TERMINATION when an out-of-domain or invalid
/// integral decode leaves no further cut to add.
CPOutcome cp_bp(const WeightedGraph& g, long T, int max_rounds);

/// Same loop with x taken from the exact vertex optimum of the relaxation.
CPOutcome cp_lp(const WeightedGraph& g, int max_rounds);

enum class InstanceClass : std::uint8_t { BASE_TIGHT, SOLVED_WITH_CUTS, UNSOLVED };

std::string to_string(InstanceClass c);

/// BASE_TIGHT when the cut-free relaxation is already tight (no fractional
/// optimal vertex); otherwise SOLVED_WITH_CUTS when cp_bp returns the
/// verified MWM.
InstanceClass classify_instance(const WeightedGraph& g, long T = 1000);

/// Default round budget: the edge-disjointness bound on the cycle set.
inline int default_max_rounds(const WeightedGraph& g) { return std::max(1, g.edge_count()); }

/// True when the matching weight provably equals the MWM: brute force within
/// the oracle guard, otherwise certification against an integral LP optimum.
bool verify_optimal_matching(const WeightedGraph& g, const CPOutcome& outcome);

}  // namespace cpmatch
