#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "bei/util.hpp"

namespace bei {

// Labeled simple graph on vertices 0..n-1 with bitset adjacency rows.
// External formats are 1-indexed; the parsing layer shifts labels.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;

    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        if (n > kMaxVertices) throw SizeGuardError("graphs are limited to 64 vertices");
    }

    int num_vertices() const { return n_; }
    Vset vertex_set() const { return n_ == 64 ? ~Vset{0} : (vbit(n_) - 1); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop edge");
        adj_[static_cast<size_t>(u)] |= vbit(v);
        adj_[static_cast<size_t>(v)] |= vbit(u);
    }

    bool has_edge(int u, int v) const { return (adj_[static_cast<size_t>(u)] >> v) & 1; }
    Vset neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return popcount(adj_[static_cast<size_t>(v)]); }

    int edge_count() const {
        int twice = 0;
        for (Vset row : adj_) twice += popcount(row);
        return twice / 2;
    }

    // Sorted list of edges (u, v) with u < v.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for_each_bit(adj_[static_cast<size_t>(u)] & ~(vbit(u + 1) - 1),
                         [&](int v) { out.emplace_back(u, v); });
        return out;
    }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    }

    int n_ = 0;
    std::vector<Vset> adj_;
};

// Builds a Graph from a 1-indexed raw edge list, rejecting loops,
// duplicate edges, out-of-range endpoints and empty vertex sets.
inline Graph validate_graph(int n, const std::vector<std::pair<int, int>>& raw_edges) {
    if (n <= 0) throw InputError("vertex count must be positive");
    if (n > Graph::kMaxVertices) throw SizeGuardError("graphs are limited to 64 vertices");
    Graph g(n);
    for (auto [u, v] : raw_edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw InputError("vertex out of range: edge {" + std::to_string(u) + ", " +
                             std::to_string(v) + "} on " + std::to_string(n) + " vertices");
        if (u == v) throw InputError("loop edge at vertex " + std::to_string(u));
        if (g.has_edge(u - 1, v - 1))
            throw InputError("duplicate edge {" + std::to_string(u) + ", " +
                             std::to_string(v) + "}");
        g.add_edge(u - 1, v - 1);
    }
    return g;
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> original_label;  // new vertex -> original vertex
};

// Induced subgraph on W, relabeled to 0..|W|-1 in increasing original order.
inline InducedSubgraph induced_subgraph(const Graph& g, Vset w) {
    if (w & ~g.vertex_set()) throw std::invalid_argument("vertex set not inside the graph");
    InducedSubgraph out;
    out.original_label = set_to_vector(w);
    out.graph = Graph(static_cast<int>(out.original_label.size()));
    for (size_t a = 0; a < out.original_label.size(); ++a)
        for (size_t b = a + 1; b < out.original_label.size(); ++b)
            if (g.has_edge(out.original_label[a], out.original_label[b]))
                out.graph.add_edge(static_cast<int>(a), static_cast<int>(b));
    return out;
}

// Applies a relabeling; perm[old] = new.
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.num_vertices());
    for (auto [u, v] : g.edges()) out.add_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
    return out;
}

// Connected components of the induced subgraph on `within`, each a vertex
// mask, ordered by lowest vertex.
inline std::vector<Vset> connected_components_within(const Graph& g, Vset within) {
    std::vector<Vset> comps;
    Vset todo = within;
    while (todo) {
        Vset frontier = vbit(lowest(todo));
        Vset comp = 0;
        while (frontier) {
            comp |= frontier;
            Vset next = 0;
            for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
            frontier = next & within & ~comp;
        }
        comps.push_back(comp);
        todo &= ~comp;
    }
    return comps;
}

inline std::vector<Vset> connected_components(const Graph& g) {
    return connected_components_within(g, g.vertex_set());
}

inline int component_count_within(const Graph& g, Vset within) {
    return static_cast<int>(connected_components_within(g, within).size());
}

inline bool is_connected(const Graph& g) {
    return g.num_vertices() > 0 && component_count_within(g, g.vertex_set()) == 1;
}

// True iff deleting v strictly increases the number of components.
inline bool is_cut_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.num_vertices()) throw std::invalid_argument("vertex out of range");
    int before = component_count_within(g, g.vertex_set());
    int after = component_count_within(g, g.vertex_set() & ~vbit(v));
    return after > before;
}

namespace detail {

inline void bron_kerbosch(const Graph& g, Vset r, Vset p, Vset x, std::vector<Vset>& out) {
    if (!p && !x) {
        out.push_back(r);
        return;
    }
    // Pivot on the vertex of P|X with the most candidates.
    int pivot = -1, best = -1;
    for_each_bit(p | x, [&](int u) {
        int score = popcount(p & g.neighbors(u));
        if (score > best) {
            best = score;
            pivot = u;
        }
    });
    Vset cand = p & ~g.neighbors(pivot);
    while (cand) {
        int v = lowest(cand);
        cand &= cand - 1;
        bron_kerbosch(g, r | vbit(v), p & g.neighbors(v), x & g.neighbors(v), out);
        p &= ~vbit(v);
        x |= vbit(v);
    }
}

}  // namespace detail

// All inclusion-maximal cliques, sorted lexicographically as vertex sets.
inline std::vector<Vset> maximal_cliques(const Graph& g) {
    std::vector<Vset> out;
    if (g.num_vertices() == 0) return out;
    detail::bron_kerbosch(g, 0, g.vertex_set(), 0, out);
    std::sort(out.begin(), out.end(), set_lex_less);
    return out;
}

// v is free iff it lies in exactly one maximal clique, i.e. iff its closed
// neighborhood is a clique.
inline bool is_free_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.num_vertices()) throw std::invalid_argument("vertex out of range");
    std::vector<int> nb = set_to_vector(g.neighbors(v));
    for (size_t a = 0; a < nb.size(); ++a)
        for (size_t b = a + 1; b < nb.size(); ++b)
            if (!g.has_edge(nb[a], nb[b])) return false;
    return true;
}

inline Vset free_vertices(const Graph& g) {
    Vset out = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (is_free_vertex(g, v)) out |= vbit(v);
    return out;
}

inline bool is_complete(const Graph& g) {
    int n = g.num_vertices();
    return g.edge_count() == n * (n - 1) / 2;
}

// All inclusion-minimal vertex sets of size <= max_size whose deletion
// disconnects g. Deletion that leaves fewer than two vertices never counts.
inline std::vector<Vset> minimal_cut_sets(const Graph& g, int max_size) {
    if (!is_connected(g)) throw std::invalid_argument("minimal_cut_sets requires a connected graph");
    int n = g.num_vertices();
    std::vector<Vset> found;
    auto contains_known = [&](Vset s) {
        for (Vset m : found)
            if ((m & ~s) == 0) return true;
        return false;
    };
    for (int k = 1; k <= std::min(max_size, n - 2); ++k) {
        for_each_subset_of_size(g.vertex_set(), k, [&](Vset s) {
            if (contains_known(s)) return;
            if (component_count_within(g, g.vertex_set() & ~s) >= 2) found.push_back(s);
        });
    }
    return found;
}

struct InvariantBundle {
    int free_count = 0;
    std::optional<int> diameter;      // absent when disconnected
    std::optional<int> connectivity;  // absent when disconnected
    int clique_number = 0;
    bool connected = false;
};

namespace detail {

inline std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(static_cast<size_t>(g.num_vertices()), -1);
    dist[static_cast<size_t>(src)] = 0;
    Vset frontier = vbit(src), seen = vbit(src);
    int d = 0;
    while (frontier) {
        ++d;
        Vset next = 0;
        for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
        next &= ~seen;
        for_each_bit(next, [&](int v) { dist[static_cast<size_t>(v)] = d; });
        seen |= next;
        frontier = next;
    }
    return dist;
}

}  // namespace detail

// f, diameter, vertex connectivity (n-1 for complete graphs), clique number.
inline InvariantBundle graph_invariants(const Graph& g) {
    InvariantBundle out;
    int n = g.num_vertices();
    out.connected = is_connected(g);
    out.free_count = popcount(free_vertices(g));
    for (Vset c : maximal_cliques(g)) out.clique_number = std::max(out.clique_number, popcount(c));
    if (!out.connected) return out;
    int diam = 0;
    for (int v = 0; v < n; ++v)
        for (int d : detail::bfs_distances(g, v)) diam = std::max(diam, d);
    out.diameter = diam;
    if (is_complete(g)) {
        out.connectivity = n - 1;
    } else {
        for (int k = 1; k <= n - 2 && !out.connectivity; ++k) {
            for_each_subset_of_size(g.vertex_set(), k, [&](Vset s) {
                if (!out.connectivity && component_count_within(g, g.vertex_set() & ~s) >= 2)
                    out.connectivity = k;
            });
        }
    }
    return out;
}

// The graph on the same vertices with all pairs of neighbors of w joined.
inline Graph clique_close(const Graph& g, int w) {
    if (w < 0 || w >= g.num_vertices()) throw std::invalid_argument("vertex out of range");
    Graph out = g;
    std::vector<int> nb = set_to_vector(g.neighbors(w));
    for (size_t a = 0; a < nb.size(); ++a)
        for (size_t b = a + 1; b < nb.size(); ++b) out.add_edge(nb[a], nb[b]);
    return out;
}

}  // namespace bei
