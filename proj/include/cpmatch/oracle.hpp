#pragma once

#include <cstdint>
#include <vector>

#include "cpmatch/graph.hpp"
#include "cpmatch/transform.hpp"

namespace cpmatch {

struct OracleResult {
    std::vector<bool> best;        // per-edge (or per-edge') selection
    std::int64_t best_objective = 0;
    std::int64_t runner_up = 0;    // best objective over all other candidates
    bool is_unique = false;
};

/// Enumerates every matching (branch over edges with vertex-use pruning).
/// Guarded at |E| <= 30; test-only, never on the production path.
OracleResult brute_force_mwm(const WeightedGraph& g);

/// Enumerates every y in {0,1}^{|E'|}, filters by the vertex and cycle factors,
/// and maximizes the doubled-scale weight. Guarded at |E'| <= 25.
OracleResult brute_force_map_transformed(const TransformedModel& model);

/// Whether y satisfies all vertex and cycle factors of the transformed GM.
bool transformed_assignment_valid(const TransformedModel& model, const std::vector<bool>& y);

}  // namespace cpmatch
