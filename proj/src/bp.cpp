#include "cpmatch/bp.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace cpmatch {

namespace {

constexpr LogVal kNegInf = std::numeric_limits<LogVal>::min() / 4;
// Fatal overflow guard: magnitudes grow at most linearly in t * w_max * degree,
// so anything past 2^100 indicates a runaway.
constexpr LogVal kOverflowLimit = LogVal(1) << 100;

LogVal add(LogVal a, LogVal b) {
    if (a <= kNegInf || b <= kNegInf) return kNegInf;
    return a + b;
}

}  // namespace

void FactorGraph::finalize() {
    var_factors.assign(var_weight.size(), {});
    for (int f = 0; f < static_cast<int>(factors.size()); ++f)
        for (int s = 0; s < static_cast<int>(factors[f].vars.size()); ++s)
            var_factors[factors[f].vars[s]].push_back({f, s});
}

int FactorGraph::max_factor_arity() const {
    int a = 0;
    for (const Factor& f : factors) a = std::max(a, static_cast<int>(f.vars.size()));
    return a;
}

FactorGraph build_factor_graph(const TransformedModel& model) {
    FactorGraph fg;
    fg.var_weight.reserve(model.edge_count_prime());
    for (const EdgePrime& e : model.edges_prime()) fg.var_weight.push_back(e.w2);

    for (int i = 0; i < model.base().vertex_count(); ++i) {
        const std::vector<int>& inc = model.incident_prime(i);
        if (inc.size() < 2) continue;  // arity-1 vertex factors are always satisfied
        fg.factors.push_back({FactorKind::AT_MOST_K, inc, 1});
    }
    for (int c = 0; c < model.cycles().size(); ++c) {
        Factor f{FactorKind::CYCLE_SIGN, {}, 0};
        const int k = model.cycles().cycles[c].size();
        for (int j = 0; j < k; ++j) f.vars.push_back(model.spoke_id(c, j));
        fg.factors.push_back(std::move(f));
    }
    fg.finalize();
    return fg;
}

FactorGraph build_factor_graph_baseline(const WeightedGraph& g, const OddCycleSet& cycles) {
    validate_cycle_set(g, cycles);
    FactorGraph fg;
    fg.var_weight.reserve(g.edge_count());
    for (const Edge& e : g.edges()) fg.var_weight.push_back(e.w);

    for (int i = 0; i < g.vertex_count(); ++i) {
        const std::vector<int>& inc = g.incident(i);
        if (inc.size() < 2) continue;
        fg.factors.push_back({FactorKind::AT_MOST_K, inc, 1});
    }
    for (const OddCycle& c : cycles.cycles)
        fg.factors.push_back({FactorKind::AT_MOST_K, c.edge_ids, (c.size() - 1) / 2});
    fg.finalize();
    return fg;
}

BPState make_initial_state(const FactorGraph& fg) {
    BPState st;
    st.var_to_fac.resize(fg.factors.size());
    st.fac_to_var.resize(fg.factors.size());
    for (size_t f = 0; f < fg.factors.size(); ++f) {
        st.var_to_fac[f].assign(fg.factors[f].vars.size(), MsgPair{});
        st.fac_to_var[f].assign(fg.factors[f].vars.size(), MsgPair{});
    }
    return st;
}

MsgPair at_most_k_message(const std::vector<MsgPair>& incoming, int skip_slot, int k) {
    // out[b] = sum of m[0] over the others, plus the top (k - b) positive gains.
    LogVal s0 = 0;
    std::vector<LogVal> gains;
    gains.reserve(incoming.size());
    for (int s = 0; s < static_cast<int>(incoming.size()); ++s) {
        if (s == skip_slot) continue;
        s0 += incoming[s].v0;
        LogVal g = incoming[s].v1 - incoming[s].v0;
        if (g > 0) gains.push_back(g);
    }
    auto top_sum = [&](int limit) {
        LogVal total = s0;
        if (limit <= 0) return total;
        if (static_cast<int>(gains.size()) > limit) {
            std::nth_element(gains.begin(), gains.begin() + limit, gains.end(),
                             std::greater<LogVal>());
            for (int i = 0; i < limit; ++i) total += gains[i];
        } else {
            for (LogVal g : gains) total += g;
        }
        return total;
    };
    MsgPair out;
    out.v1 = top_sum(k - 1);
    out.v0 = top_sum(k);
    return out;
}

namespace {

// Max score of a matching on the cycle's edges, where spoke j scores
// incoming[j] at value x_{j-1} + x_j, conditioned on x_0 = first and (if
// target_slot >= 0) on the target spoke's value being target_val.
LogVal cycle_chain_dp(const std::vector<MsgPair>& incoming, int first, int target_slot,
                      int target_val) {
    const int k = static_cast<int>(incoming.size());
    auto score = [&](int j, int y) { return y ? incoming[j].v1 : incoming[j].v0; };
    // dp[x_a] after processing spoke a.
    LogVal dp[2] = {kNegInf, kNegInf};
    dp[first] = 0;
    for (int a = 1; a < k; ++a) {
        LogVal nd[2] = {kNegInf, kNegInf};
        for (int prev = 0; prev < 2; ++prev) {
            if (dp[prev] <= kNegInf) continue;
            for (int cur = 0; cur < 2; ++cur) {
                if (prev + cur > 1) continue;  // edges a-1 and a share vertex a
                int y = prev + cur;
                if (a == target_slot && y != target_val) continue;
                // The target's own incoming message is excluded from its
                // outgoing factor message.
                LogVal v = add(dp[prev], a == target_slot ? LogVal(0) : score(a, y));
                if (v > nd[cur]) nd[cur] = v;
            }
        }
        dp[0] = nd[0];
        dp[1] = nd[1];
    }
    LogVal best = kNegInf;
    for (int last = 0; last < 2; ++last) {
        if (dp[last] <= kNegInf) continue;
        if (last + first > 1) continue;  // closing edge shares vertex 0
        int y0 = last + first;
        if (target_slot == 0 && y0 != target_val) continue;
        LogVal v = add(dp[last], target_slot == 0 ? LogVal(0) : score(0, y0));
        if (v > best) best = v;
    }
    return best;
}

}  // namespace

MsgPair cycle_factor_message(const std::vector<MsgPair>& incoming, int target_slot) {
    MsgPair out;
    for (int b = 0; b < 2; ++b) {
        LogVal best = kNegInf;
        for (int first = 0; first < 2; ++first)
            best = std::max(best, cycle_chain_dp(incoming, first, target_slot, b));
        // The empty matching (and one edge at the target) are always valid, so
        // finite incoming messages give finite outputs.
        if (best <= kNegInf) throw std::logic_error("cycle factor with no valid configuration");
        (b ? out.v1 : out.v0) = best;
    }
    return out;
}

BPState bp_round(const FactorGraph& fg, const BPState& state) {
    BPState next = make_initial_state(fg);
    next.t = state.t + 1;
    next.ops = state.ops;
    LogVal worst = 0;

    // Variable -> factor, from the time-t factor -> variable tables.
    for (size_t f = 0; f < fg.factors.size(); ++f) {
        const Factor& fac = fg.factors[f];
        for (int s = 0; s < static_cast<int>(fac.vars.size()); ++s) {
            int v = fac.vars[s];
            MsgPair m{0, fg.var_weight[v]};
            for (auto [f2, s2] : fg.var_factors[v]) {
                if (f2 == static_cast<int>(f) && s2 == s) continue;
                m.v0 += state.fac_to_var[f2][s2].v0;
                m.v1 += state.fac_to_var[f2][s2].v1;
                ++next.ops;
            }
            m.normalize();
            worst = std::min(worst, std::min(m.v0, m.v1));
            next.var_to_fac[f][s] = m;
        }
    }
    // Factor -> variable, also from the time-t tables.
    for (size_t f = 0; f < fg.factors.size(); ++f) {
        const Factor& fac = fg.factors[f];
        const std::vector<MsgPair>& in = state.var_to_fac[f];
        for (int s = 0; s < static_cast<int>(fac.vars.size()); ++s) {
            MsgPair m = fac.kind == FactorKind::AT_MOST_K ? at_most_k_message(in, s, fac.k)
                                                          : cycle_factor_message(in, s);
            next.ops += fac.vars.size();
            m.normalize();
            worst = std::min(worst, std::min(m.v0, m.v1));
            next.fac_to_var[f][s] = m;
        }
    }
    if (worst < -kOverflowLimit) throw std::overflow_error("BP message magnitude overflow");
    return next;
}

BeliefTable compute_beliefs(const FactorGraph& fg, const BPState& state) {
    BeliefTable bt;
    bt.n.resize(fg.num_vars());
    for (int v = 0; v < fg.num_vars(); ++v) {
        MsgPair n{0, fg.var_weight[v]};
        for (auto [f, s] : fg.var_factors[v]) {
            n.v0 += state.fac_to_var[f][s].v0;
            n.v1 += state.fac_to_var[f][s].v1;
        }
        bt.n[v] = n;
    }
    return bt;
}

std::vector<Tern> decode(const FactorGraph& fg, const BeliefTable& last,
                         const BeliefTable& prev) {
    std::vector<Tern> out(fg.num_vars(), Tern::HALF);
    for (int v = 0; v < fg.num_vars(); ++v) {
        Tern a = last.decision(v), b = prev.decision(v);
        if (a == b && a != Tern::HALF) out[v] = a;
    }
    return out;
}

BPRun run_bp_on(const FactorGraph& fg, long T, std::vector<BPTraceEntry>* trace) {
    if (T < 1) throw std::invalid_argument("iteration budget must be >= 1");
    BPState state = make_initial_state(fg);
    BeliefTable prev = compute_beliefs(fg, state);
    BeliefTable cur = prev;
    BPRun run;
    std::uint64_t ops_before = 0;
    for (long r = 1; r <= T; ++r) {
        ops_before = state.ops;
        BPState next = bp_round(fg, state);
        prev = std::move(cur);
        cur = compute_beliefs(fg, next);
        run.rounds_used = r;
        bool repeated = next.tables_equal(state);
        if (trace) {
            int halves = 0;
            for (Tern t : decode(fg, cur, prev))
                if (t == Tern::HALF) ++halves;
            trace->push_back({r, halves, repeated});
        }
        state = std::move(next);
        if (repeated) {
            run.converged = true;
            break;
        }
    }
    run.ops_per_round = state.ops - ops_before;
    run.assignment = decode(fg, cur, prev);
    return run;
}

TransformedBPRun run_bp(const TransformedModel& model, long T, std::vector<BPTraceEntry>* trace) {
    FactorGraph fg = build_factor_graph(model);
    BPRun r = run_bp_on(fg, T, trace);
    return {std::move(r.assignment), r.converged, r.rounds_used};
}

BaselineBPRun run_bp_baseline(const WeightedGraph& g, const OddCycleSet& cycles, long T) {
    FactorGraph fg = build_factor_graph_baseline(g, cycles);
    BPRun r = run_bp_on(fg, T);
    return {std::move(r.assignment), r.converged, r.rounds_used};
}

}  // namespace cpmatch
