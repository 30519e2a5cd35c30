#pragma once

#include <cstdint>
#include <vector>

#include "cpmatch/graph.hpp"
#include "cpmatch/transform.hpp"

namespace cpmatch {

/// Log-domain message value. Weights are integers, indicator factors contribute
/// 0 or -inf, so exact integer arithmetic suffices; 128 bits leave headroom for
/// growth linear in t * w_max * degree.
using LogVal = __int128;

struct MsgPair {
    LogVal v0 = 0;
    LogVal v1 = 0;

    bool operator==(const MsgPair&) const = default;
    /// Subtracts the max component so max(v0, v1) == 0.
    void normalize() {
        LogVal m = v0 > v1 ? v0 : v1;
        v0 -= m;
        v1 -= m;
    }
};

enum class FactorKind : std::uint8_t {
    AT_MOST_K,   // sum of scope variables <= k (vertex factors: k = 1)
    CYCLE_SIGN,  // transformed cycle factor over the spokes, in cycle order
};

struct Factor {
    FactorKind kind;
    std::vector<int> vars;  // variable ids in scope; CYCLE_SIGN: cycle vertex order
    int k = 1;              // AT_MOST_K bound
};

/// Factor graph over binary variables with integer log-weights. In the
/// transformed model every variable sits in at most two factors.
struct FactorGraph {
    std::vector<std::int64_t> var_weight;
    std::vector<Factor> factors;
    // Per variable: (factor index, slot within that factor's scope).
    std::vector<std::vector<std::pair<int, int>>> var_factors;

    int num_vars() const { return static_cast<int>(var_weight.size()); }
    void finalize();  // builds var_factors
    int max_factor_arity() const;
};

/// GM on the transformed graph: a vertex factor per original vertex (arity-1
/// factors dropped) and one CYCLE_SIGN factor per collapsed cycle.
FactorGraph build_factor_graph(const TransformedModel& model);

/// GM on the original graph with cycle factors attached directly to the edge
/// variables (sum over E(C) <= (|C|-1)/2). Violates the degree-two condition;
/// kept to reproduce the bare-BP baseline.
FactorGraph build_factor_graph_baseline(const WeightedGraph& g, const OddCycleSet& cycles);

struct BPState {
    // messages[f][s]: per factor f and scope slot s.
    std::vector<std::vector<MsgPair>> var_to_fac;
    std::vector<std::vector<MsgPair>> fac_to_var;
    long t = 0;
    std::uint64_t ops = 0;  // cumulative elementary message-term operations

    bool tables_equal(const BPState& other) const {
        return var_to_fac == other.var_to_fac && fac_to_var == other.fac_to_var;
    }
};

BPState make_initial_state(const FactorGraph& fg);

/// Message from an AT_MOST_K factor toward one slot: out[b] = max over
/// assignments of the other scope variables summing to <= k - b.
MsgPair at_most_k_message(const std::vector<MsgPair>& incoming, int skip_slot, int k);

/// Message from a CYCLE_SIGN factor toward one spoke. Valid configurations are
/// exactly the lifts of matchings on the cycle's edges, so a linear chain DP
/// conditioned on the first cycle edge computes the max in O(|C|) per value.
MsgPair cycle_factor_message(const std::vector<MsgPair>& incoming, int target_slot);

/// One synchronous flooding round: all variable->factor then factor->variable
/// messages recomputed from the time-t tables, renormalized; t incremented.
BPState bp_round(const FactorGraph& fg, const BPState& state);

struct BeliefTable {
    std::vector<MsgPair> n;  // per-variable (n[0], n[1])

    Tern decision(int v) const {
        if (n[v].v1 > n[v].v0) return Tern::ONE;
        if (n[v].v1 < n[v].v0) return Tern::ZERO;
        return Tern::HALF;
    }
};

BeliefTable compute_beliefs(const FactorGraph& fg, const BPState& state);

/// Two-round decode: 1/0 only when both rounds strictly agree, HALF otherwise.
std::vector<Tern> decode(const FactorGraph& fg, const BeliefTable& last,
                         const BeliefTable& prev);

struct BPRun {
    std::vector<Tern> assignment;  // per-variable ternary decision
    bool converged = false;        // message tables repeated exactly
    long rounds_used = 0;
    std::uint64_t ops_per_round = 0;  // operations of the final round
};

struct BPTraceEntry {
    long round;
    int half_count;
    bool repeated;
};

/// Runs up to T rounds with early exit on exact table repetition; decodes from
/// the last two rounds' beliefs.
BPRun run_bp_on(const FactorGraph& fg, long T, std::vector<BPTraceEntry>* trace = nullptr);

struct TransformedBPRun {
    YAssignment y;
    bool converged = false;
    long rounds_used = 0;
};

TransformedBPRun run_bp(const TransformedModel& model, long T,
                        std::vector<BPTraceEntry>* trace = nullptr);

struct BaselineBPRun {
    TernaryAssignment x;
    bool converged = false;
    long rounds_used = 0;
};

BaselineBPRun run_bp_baseline(const WeightedGraph& g, const OddCycleSet& cycles, long T);

}  // namespace cpmatch
