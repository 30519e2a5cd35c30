#include "cpmatch/oracle.hpp"

#include <stdexcept>

namespace cpmatch {

namespace {

void mwm_dfs(const WeightedGraph& g, int idx, std::vector<bool>& used,
             std::vector<bool>& pick, std::int64_t acc, OracleResult& res, bool& any) {
    if (idx == g.edge_count()) {
        if (!any || acc > res.best_objective) {
            if (any) res.runner_up = std::max(res.runner_up, res.best_objective);
            else res.runner_up = INT64_MIN;
            res.best_objective = acc;
            res.best = pick;
            any = true;
        } else {
            res.runner_up = std::max(res.runner_up, acc);
        }
        return;
    }
    const Edge& e = g.edge(idx);
    mwm_dfs(g, idx + 1, used, pick, acc, res, any);
    if (!used[e.u] && !used[e.v]) {
        used[e.u] = used[e.v] = true;
        pick[idx] = true;
        mwm_dfs(g, idx + 1, used, pick, acc + e.w, res, any);
        pick[idx] = false;
        used[e.u] = used[e.v] = false;
    }
}

}  // namespace

OracleResult brute_force_mwm(const WeightedGraph& g) {
    if (g.edge_count() > 30) throw std::invalid_argument("instance too large for enumeration");
    OracleResult res;
    res.best.assign(g.edge_count(), false);
    std::vector<bool> used(g.vertex_count(), false), pick(g.edge_count(), false);
    bool any = false;
    mwm_dfs(g, 0, used, pick, 0, res, any);
    res.is_unique = res.runner_up < res.best_objective;
    return res;
}

bool transformed_assignment_valid(const TransformedModel& model, const std::vector<bool>& y) {
    // Vertex factors: at most one selected edge' at every original vertex.
    for (int i = 0; i < model.base().vertex_count(); ++i) {
        int deg = 0;
        for (int id : model.incident_prime(i)) deg += y[id] ? 1 : 0;
        if (deg > 1) return false;
    }
    for (int c = 0; c < model.cycles().size(); ++c) {
        const int k = model.cycles().cycles[c].size();
        int total = 0;
        for (int j = 0; j < k; ++j) total += y[model.spoke_id(c, j)] ? 1 : 0;
        if (total > k - 1) return false;
        for (int a = 0; a < k; ++a) {
            int alt = 0;
            for (int j = 0; j < k; ++j)
                alt += model.sign(c, j, a) * (y[model.spoke_id(c, j)] ? 1 : 0);
            if (alt != 0 && alt != 2) return false;
        }
    }
    return true;
}

OracleResult brute_force_map_transformed(const TransformedModel& model) {
    const int m = model.edge_count_prime();
    if (m > 25) throw std::invalid_argument("instance too large for enumeration");
    OracleResult res;
    res.best.assign(m, false);
    bool any = false;
    std::vector<bool> y(m, false);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::int64_t obj = 0;
        for (int id = 0; id < m; ++id) {
            y[id] = (mask >> id) & 1u;
            if (y[id]) obj += model.edges_prime()[id].w2;
        }
        if (!transformed_assignment_valid(model, y)) continue;
        if (!any || obj > res.best_objective) {
            if (any) res.runner_up = std::max(res.runner_up, res.best_objective);
            else res.runner_up = INT64_MIN;
            res.best_objective = obj;
            res.best = y;
            any = true;
        } else {
            res.runner_up = std::max(res.runner_up, obj);
        }
    }
    res.is_unique = any && res.runner_up < res.best_objective;
    return res;
}

}  // namespace cpmatch
