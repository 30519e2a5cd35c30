#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cpmatch/graph.hpp"

namespace cpmatch {

/// Provenance of a transformed edge: kept from the base graph, or a spoke
/// joining a cycle's auxiliary vertex to one of its original vertices.
enum class EdgePrimeKind : std::uint8_t { KEPT, CYCLE_SPOKE };

struct EdgePrime {
    int a;
    int b;
    std::int64_t w2;  // weight at 2x the base scale, so spoke weights stay integral
    EdgePrimeKind kind;
    int orig_edge = -1;  // KEPT: base edge id
    int cycle = -1;      // CYCLE_SPOKE: cycle index
    int pos = -1;        // CYCLE_SPOKE: position of the spoke's vertex in the cycle
};

/// Per-edge' value in {0, 1/2, 1}; indices follow TransformedModel::edges_prime.
using YAssignment = std::vector<Tern>;

/// Auxiliary graph G' = (V', E'): every odd cycle C is collapsed onto a new
/// vertex i_C with one spoke per cycle vertex; cycle edges are removed and all
/// weights are stored doubled.
class TransformedModel {
public:
    TransformedModel(WeightedGraph base, OddCycleSet cycles);

    const WeightedGraph& base() const { return base_; }
    const OddCycleSet& cycles() const { return cycles_; }
    int vertex_count_prime() const { return base_.vertex_count() + cycles_.size(); }
    int aux_vertex(int cycle) const { return base_.vertex_count() + cycle; }
    const std::vector<EdgePrime>& edges_prime() const { return edges_prime_; }
    int edge_count_prime() const { return static_cast<int>(edges_prime_.size()); }

    /// Transformed edge id of a surviving base edge, or -1 if it was a cycle edge.
    int kept_id(int base_edge) const { return kept_id_[base_edge]; }
    /// Transformed edge id of the spoke (i_C, vertices[pos]) of cycle c.
    int spoke_id(int cycle, int pos) const { return spoke_id_[cycle][pos]; }
    /// Cycle index owning base edge id, or -1.
    int cycle_of_edge(int base_edge) const { return cycle_of_edge_[base_edge]; }

    /// Cyclic distance from the cycle vertex at position pos_j to the nearer
    /// endpoint of the cycle edge at position pos_e.
    int cycle_distance(int cycle, int pos_j, int pos_e) const {
        return dist_[cycle][pos_j * cycles_.cycles[cycle].size() + pos_e];
    }
    /// (-1)^{d_C(j,e)} as +1/-1.
    int sign(int cycle, int pos_j, int pos_e) const {
        return cycle_distance(cycle, pos_j, pos_e) % 2 == 0 ? 1 : -1;
    }

    /// Transformed edges' of vertex i (i may be an auxiliary vertex).
    const std::vector<int>& incident_prime(int i) const { return adj_prime_[i]; }

private:
    WeightedGraph base_;
    OddCycleSet cycles_;
    std::vector<EdgePrime> edges_prime_;
    std::vector<int> kept_id_;
    std::vector<int> cycle_of_edge_;
    std::vector<std::vector<int>> spoke_id_;
    std::vector<std::vector<int>> dist_;
    std::vector<std::vector<int>> adj_prime_;
};

inline TransformedModel build_transform(WeightedGraph base, OddCycleSet cycles) {
    return TransformedModel(std::move(base), std::move(cycles));
}

/// Maps an exact matching x over E to y over E': kept edges copy, spokes take
/// the sum of x over the two cycle edges at the spoke's vertex.
/// Throws std::invalid_argument on HALF entries or spoke sums > 1.
YAssignment lift_x_to_y(const TransformedModel& model, const TernaryAssignment& x);

struct Projection {
    TernaryAssignment x;          // over E; meaningful only where in_domain
    bool in_domain = true;        // false if any signed half-sum left {0, 1/2, 1}
    std::vector<bool> bad_edges;  // edges whose value left the domain
};

/// Inverse map: cycle edges get the signed half-sum of spoke values, kept edges
/// copy. HALF entries count as the exact rational 1/2.
Projection project_y_to_x(const TransformedModel& model, const YAssignment& y);

/// Transformed model rendered in the instance text format (auxiliary vertices
/// get the highest ids), plus a provenance sidecar for debugging.
std::string format_transformed(const TransformedModel& model);
std::string format_provenance(const TransformedModel& model);

}  // namespace cpmatch
