#include "cpmatch/transform.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace cpmatch {

TransformedModel::TransformedModel(WeightedGraph base, OddCycleSet cycles)
    : base_(std::move(base)), cycles_(std::move(cycles)) {
    validate_cycle_set(base_, cycles_);

    const int m = base_.edge_count();
    kept_id_.assign(m, -1);
    cycle_of_edge_.assign(m, -1);
    for (int c = 0; c < cycles_.size(); ++c)
        for (int id : cycles_.cycles[c].edge_ids) cycle_of_edge_[id] = c;

    for (int id = 0; id < m; ++id) {
        if (cycle_of_edge_[id] >= 0) continue;
        const Edge& e = base_.edge(id);
        kept_id_[id] = static_cast<int>(edges_prime_.size());
        edges_prime_.push_back({e.u, e.v, 2 * e.w, EdgePrimeKind::KEPT, id, -1, -1});
    }

    dist_.resize(cycles_.size());
    spoke_id_.resize(cycles_.size());
    for (int c = 0; c < cycles_.size(); ++c) {
        const OddCycle& cyc = cycles_.cycles[c];
        const int k = cyc.size();
        dist_[c].assign(static_cast<size_t>(k) * k, 0);
        for (int j = 0; j < k; ++j) {
            for (int a = 0; a < k; ++a) {
                // Edge at position a joins cycle positions a and a+1 (mod k).
                int d1 = std::abs(j - a);
                d1 = std::min(d1, k - d1);
                int b = (a + 1) % k;
                int d2 = std::abs(j - b);
                d2 = std::min(d2, k - d2);
                dist_[c][static_cast<size_t>(j) * k + a] = std::min(d1, d2);
            }
        }
        spoke_id_[c].resize(k);
        for (int j = 0; j < k; ++j) {
            std::int64_t w2 = 0;
            for (int a = 0; a < k; ++a)
                w2 += sign(c, j, a) * base_.edge(cyc.edge_ids[a]).w;
            spoke_id_[c][j] = static_cast<int>(edges_prime_.size());
            edges_prime_.push_back(
                {aux_vertex(c), cyc.vertices[j], w2, EdgePrimeKind::CYCLE_SPOKE, -1, c, j});
        }
    }

    adj_prime_.assign(vertex_count_prime(), {});
    for (int id = 0; id < edge_count_prime(); ++id) {
        adj_prime_[edges_prime_[id].a].push_back(id);
        adj_prime_[edges_prime_[id].b].push_back(id);
    }
}

YAssignment lift_x_to_y(const TransformedModel& model, const TernaryAssignment& x) {
    if (static_cast<int>(x.size()) != model.base().edge_count())
        throw std::invalid_argument("assignment length mismatch");
    for (Tern t : x)
        if (t == Tern::HALF) throw std::invalid_argument("lift requires an exact matching");

    YAssignment y(model.edge_count_prime(), Tern::ZERO);
    for (int id = 0; id < model.edge_count_prime(); ++id) {
        const EdgePrime& ep = model.edges_prime()[id];
        if (ep.kind == EdgePrimeKind::KEPT) {
            y[id] = x[ep.orig_edge];
        } else {
            const OddCycle& cyc = model.cycles().cycles[ep.cycle];
            const int k = cyc.size();
            int prev = (ep.pos + k - 1) % k;
            int s = (x[cyc.edge_ids[prev]] == Tern::ONE ? 1 : 0) +
                    (x[cyc.edge_ids[ep.pos]] == Tern::ONE ? 1 : 0);
            if (s > 1) throw std::invalid_argument("x is not a matching on a cycle");
            y[id] = s ? Tern::ONE : Tern::ZERO;
        }
    }
    return y;
}

Projection project_y_to_x(const TransformedModel& model, const YAssignment& y) {
    if (static_cast<int>(y.size()) != model.edge_count_prime())
        throw std::invalid_argument("assignment length mismatch");
    const int m = model.base().edge_count();
    Projection out;
    out.x.assign(m, Tern::ZERO);
    out.bad_edges.assign(m, false);
    // Half-units: 0, 1, 2 for 0, 1/2, 1.
    auto half_units = [](Tern t) { return t == Tern::ZERO ? 0 : (t == Tern::HALF ? 1 : 2); };

    for (int id = 0; id < m; ++id) {
        int c = model.cycle_of_edge(id);
        if (c < 0) {
            out.x[id] = y[model.kept_id(id)];
            continue;
        }
        const OddCycle& cyc = model.cycles().cycles[c];
        int pos_e = -1;
        for (int a = 0; a < cyc.size(); ++a)
            if (cyc.edge_ids[a] == id) { pos_e = a; break; }
        // x_e in quarter-units = sum_j sign * y_j in half-units.
        int quarters = 0;
        for (int j = 0; j < cyc.size(); ++j)
            quarters += model.sign(c, j, pos_e) * half_units(y[model.spoke_id(c, j)]);
        switch (quarters) {
            case 0: out.x[id] = Tern::ZERO; break;
            case 2: out.x[id] = Tern::HALF; break;
            case 4: out.x[id] = Tern::ONE; break;
            default:
                out.in_domain = false;
                out.bad_edges[id] = true;
                out.x[id] = Tern::HALF;  // placeholder; flagged above
        }
    }
    return out;
}

std::string format_transformed(const TransformedModel& model) {
    std::ostringstream out;
    out << model.vertex_count_prime() << ' ' << model.edge_count_prime() << '\n';
    for (const EdgePrime& e : model.edges_prime())
        out << e.a << ' ' << e.b << ' ' << e.w2 << '\n';
    return out.str();
}

std::string format_provenance(const TransformedModel& model) {
    std::ostringstream out;
    for (int id = 0; id < model.edge_count_prime(); ++id) {
        const EdgePrime& e = model.edges_prime()[id];
        if (e.kind == EdgePrimeKind::KEPT)
            out << id << " kept " << e.orig_edge << '\n';
        else
            out << id << " spoke cycle=" << e.cycle << " vertex=" << e.b << '\n';
    }
    return out.str();
}

}  // namespace cpmatch
