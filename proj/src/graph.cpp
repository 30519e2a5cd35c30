#include "cpmatch/graph.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cpmatch {

std::string to_string(Tern t) {
    switch (t) {
        case Tern::ZERO: return "0";
        case Tern::HALF: return "1/2";
        case Tern::ONE: return "1";
    }
    return "?";
}

WeightedGraph::WeightedGraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    std::set<std::pair<int, int>> seen;
    adj_.assign(n_, {});
    for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
        Edge& e = edges_[id];
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop");
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second) throw std::invalid_argument("duplicate edge");
        adj_[e.u].push_back(id);
        adj_[e.v].push_back(id);
    }
}

int WeightedGraph::other_end(int id, int v) const {
    const Edge& e = edges_[id];
    return e.u == v ? e.v : e.u;
}

WeightedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
        }
        return false;
    };
    auto fail = [&](const std::string& msg) -> void {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
    };

    if (!next_line()) throw std::invalid_argument("empty instance");
    std::istringstream head(line);
    long long n = 0, m = 0;
    if (!(head >> n)) fail("expected vertex count");
    if (!(head >> m)) m = 0;  // "1 0" style headers may omit a trailing edge count
    std::string junk;
    if (head >> junk) fail("trailing tokens in header");
    if (n < 0 || m < 0) fail("negative count in header");

    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    for (long long i = 0; i < m; ++i) {
        if (!next_line()) fail("unexpected end of file, expected " + std::to_string(m) + " edges");
        std::istringstream es(line);
        long long u, v, w;
        if (!(es >> u >> v >> w)) fail("expected '<u> <v> <w>'");
        if (es >> junk) fail("trailing tokens on edge line");
        if (u < 0 || u >= n || v < 0 || v >= n) fail("vertex id out of range");
        if (u == v) fail("self-loop");
        auto key = std::minmax<long long>(u, v);
        if (!seen.insert({static_cast<int>(key.first), static_cast<int>(key.second)}).second)
            fail("duplicate edge");
        edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
    }
    if (next_line()) fail("trailing content after edge list");
    return WeightedGraph(static_cast<int>(n), std::move(edges));
}

std::string format_graph(const WeightedGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
    return out.str();
}

OddCycle make_cycle(const WeightedGraph& g, const std::vector<int>& vertices) {
    int k = static_cast<int>(vertices.size());
    if (k < 3 || k % 2 == 0) throw std::invalid_argument("cycle size must be odd and >= 3");
    std::set<int> distinct(vertices.begin(), vertices.end());
    if (static_cast<int>(distinct.size()) != k)
        throw std::invalid_argument("cycle vertices must be distinct");
    OddCycle c;
    c.vertices = vertices;
    for (int a = 0; a < k; ++a) {
        int u = vertices[a], v = vertices[(a + 1) % k];
        int found = -1;
        for (int id : g.incident(u))
            if (g.other_end(id, u) == v) { found = id; break; }
        if (found < 0)
            throw std::invalid_argument("cycle vertices " + std::to_string(u) + "," +
                                        std::to_string(v) + " are not adjacent");
        c.edge_ids.push_back(found);
    }
    return c;
}

void validate_cycle_set(const WeightedGraph& g, const OddCycleSet& cycles) {
    std::vector<bool> used(g.edge_count(), false);
    for (const OddCycle& c : cycles.cycles) {
        make_cycle(g, c.vertices);  // re-checks adjacency and parity
        for (int id : c.edge_ids) {
            if (id < 0 || id >= g.edge_count())
                throw std::invalid_argument("cycle references unknown edge");
            if (used[id]) throw std::invalid_argument("cycles intersect in edges");
            used[id] = true;
        }
    }
}

std::string format_cycles(const OddCycleSet& cycles) {
    std::ostringstream out;
    for (const OddCycle& c : cycles.cycles) {
        for (int i = 0; i < c.size(); ++i) out << (i ? " " : "") << c.vertices[i];
        out << '\n';
    }
    return out.str();
}

OddCycleSet parse_cycles(const std::string& text, const WeightedGraph& g) {
    OddCycleSet cs;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<int> verts;
        long long v;
        while (ls >> v) verts.push_back(static_cast<int>(v));
        if (verts.empty()) continue;
        try {
            cs.cycles.push_back(make_cycle(g, verts));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    validate_cycle_set(g, cs);
    return cs;
}

WeightedGraph generate_instance(int n, double p, std::int64_t w_max, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0, 1]");
    if (w_max < 1) throw std::invalid_argument("w_max must be >= 1");
    std::mt19937_64 rng(seed);
    // Keep decision derived by direct comparison on the raw 64-bit draw so the
    // stream stays identical across standard libraries.
    const long double scale = 18446744073709551616.0L;  // 2^64
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            std::uint64_t r = rng();
            bool keep;
            if (p <= 0.0) keep = true;
            else if (p >= 1.0) keep = false;
            else keep = static_cast<long double>(r) >= p * scale;
            if (!keep) continue;
            std::int64_t w = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(w_max));
            edges.push_back({u, v, w});
        }
    }
    return WeightedGraph(n, std::move(edges));
}

bool find_odd_cycle(const WeightedGraph& g, const std::vector<bool>& allowed_edges,
                    const std::vector<bool>& forbidden_edges, OddCycle& out) {
    const int n = g.vertex_count();
    auto usable = [&](int id) {
        return (allowed_edges.empty() || allowed_edges[id]) &&
               !(!forbidden_edges.empty() && forbidden_edges[id]);
    };
    std::vector<int> color(n, -1), parent(n, -1), parent_edge(n, -1), depth(n, 0);
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int id : g.incident(u)) {
                if (!usable(id)) continue;
                int v = g.other_end(id, u);
                if (color[v] == -1) {
                    color[v] = color[u] ^ 1;
                    parent[v] = u;
                    parent_edge[v] = id;
                    depth[v] = depth[u] + 1;
                    q.push(v);
                } else if (color[v] == color[u] && id != parent_edge[u]) {
                    // Odd closed walk; shorten to the simple cycle through the
                    // BFS-tree paths up to the lowest common ancestor.
                    int a = u, b = v;
                    std::vector<int> pa_v, pa_e, pb_v, pb_e;
                    while (depth[a] > depth[b]) { pa_v.push_back(a); pa_e.push_back(parent_edge[a]); a = parent[a]; }
                    while (depth[b] > depth[a]) { pb_v.push_back(b); pb_e.push_back(parent_edge[b]); b = parent[b]; }
                    while (a != b) {
                        pa_v.push_back(a); pa_e.push_back(parent_edge[a]); a = parent[a];
                        pb_v.push_back(b); pb_e.push_back(parent_edge[b]); b = parent[b];
                    }
                    // Cycle: u -> ... -> lca -> ... -> v -> u.
                    OddCycle c;
                    for (int i = 0; i < static_cast<int>(pa_v.size()); ++i) {
                        c.vertices.push_back(pa_v[i]);
                        c.edge_ids.push_back(pa_e[i]);
                    }
                    c.vertices.push_back(a);
                    for (int i = static_cast<int>(pb_v.size()) - 1; i >= 0; --i) {
                        c.edge_ids.push_back(pb_e[i]);
                        c.vertices.push_back(pb_v[i]);
                    }
                    c.edge_ids.push_back(id);
                    out = c;
                    return true;
                }
            }
        }
    }
    return false;
}

MatchingCheck validate_matching(const WeightedGraph& g, const Matching& m) {
    MatchingCheck res;
    std::vector<bool> used(g.vertex_count(), false);
    std::int64_t total = 0;
    for (int id : m.edge_ids) {
        if (id < 0 || id >= g.edge_count()) throw std::invalid_argument("invalid edge id");
        const Edge& e = g.edge(id);
        if (used[e.u]) { res.offending_vertex = e.u; return res; }
        if (used[e.v]) { res.offending_vertex = e.v; return res; }
        used[e.u] = used[e.v] = true;
        total += e.w;
    }
    res.ok = true;
    res.total_weight = total;
    return res;
}

}  // namespace cpmatch
