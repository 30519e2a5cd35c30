#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cpmatch {

/// Ternary edge value: exact matchings use ZERO/ONE, fractional decodes use HALF.
enum class Tern : std::uint8_t { ZERO = 0, HALF = 1, ONE = 2 };

using TernaryAssignment = std::vector<Tern>;

std::string to_string(Tern t);

struct Edge {
    int u;
    int v;
    std::int64_t w;
};

/// Undirected weighted graph; edge ids are dense 0..|E|-1 in insertion order.
class WeightedGraph {
public:
    WeightedGraph() = default;
    /// Throws std::invalid_argument on self-loops or duplicate undirected edges.
    WeightedGraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[id]; }
    /// Incident edge ids of vertex i, ascending.
    const std::vector<int>& incident(int i) const { return adj_[i]; }
    /// The endpoint of edge id that is not v.
    int other_end(int id, int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

struct OddCycle {
    std::vector<int> vertices;  // cyclic order, k odd, k >= 3
    std::vector<int> edge_ids;  // edge_ids[a] joins vertices[a], vertices[a+1 mod k]

    int size() const { return static_cast<int>(vertices.size()); }
};

struct OddCycleSet {
    std::vector<OddCycle> cycles;

    int size() const { return static_cast<int>(cycles.size()); }
    bool empty() const { return cycles.empty(); }
};

struct Matching {
    std::vector<int> edge_ids;
};

/// Parses the plain-text instance format: "<n> <m>" then m lines "<u> <v> <w>".
/// Throws std::invalid_argument with a line number on malformed input.
WeightedGraph parse_graph(const std::string& text);

std::string format_graph(const WeightedGraph& g);

/// Parses the cycle-set sidecar: one line per cycle listing vertex ids in cyclic order.
OddCycleSet parse_cycles(const std::string& text, const WeightedGraph& g);

std::string format_cycles(const OddCycleSet& cycles);

/// Builds an OddCycle from a cyclically ordered vertex list, resolving edge ids.
/// Throws std::invalid_argument if consecutive vertices are not adjacent or k is even.
OddCycle make_cycle(const WeightedGraph& g, const std::vector<int>& vertices);

/// Checks OddCycleSet invariants (validity of each cycle, pairwise edge-disjointness).
void validate_cycle_set(const WeightedGraph& g, const OddCycleSet& cycles);

/// Sparsified complete graph on n vertices: each edge of K_n is removed with
/// probability p, surviving edges get an integer weight uniform in [1, w_max].
/// Deterministic for a fixed seed.
WeightedGraph generate_instance(int n, double p, std::int64_t w_max, std::uint64_t seed);

/// Searches the subgraph of allowed \ forbidden edges for a simple odd cycle via
/// BFS 2-coloring; roots scanned in ascending vertex id, neighbors in ascending
/// edge id. Returns false if that subgraph is bipartite.
bool find_odd_cycle(const WeightedGraph& g, const std::vector<bool>& allowed_edges,
                    const std::vector<bool>& forbidden_edges, OddCycle& out);

struct MatchingCheck {
    bool ok = false;
    std::int64_t total_weight = 0;
    int offending_vertex = -1;  // set when ok == false
};

MatchingCheck validate_matching(const WeightedGraph& g, const Matching& m);

}  // namespace cpmatch
