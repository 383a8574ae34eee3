#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

// A witness that G is a Cameron-Walker graph: a connected bipartite core on
// U | V, at least one pendant leaf on every U vertex, and optional pendant
// triangles on V vertices (each contributing two private degree-2 vertices).
struct CWDecomposition {
    Vset side_u = 0;
    Vset side_v = 0;
    std::map<int, Vset> leaves_of;                               // u -> leaf set
    std::map<int, std::vector<std::pair<int, int>>> triangles_of;  // v -> private pairs
    std::vector<std::pair<int, int>> core_edges;
};

// 2-coloring per connected component; absent iff some odd cycle exists.
// The lowest vertex of each component lands on side A.
inline std::optional<std::pair<Vset, Vset>> bipartition(const Graph& g) {
    std::vector<int> color(static_cast<size_t>(g.num_vertices()), -1);
    for (int s = 0; s < g.num_vertices(); ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            bool odd = false;
            for_each_bit(g.neighbors(v), [&](int w) {
                if (color[static_cast<size_t>(w)] == -1) {
                    color[static_cast<size_t>(w)] = 1 - color[static_cast<size_t>(v)];
                    stack.push_back(w);
                } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
                    odd = true;
                }
            });
            if (odd) return std::nullopt;
        }
    }
    Vset a = 0, b = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
        (color[static_cast<size_t>(v)] == 0 ? a : b) |= vbit(v);
    return std::make_pair(a, b);
}

// Maximum-cardinality search; the reverse visit order is a perfect
// elimination order exactly when the graph is chordal.
inline std::optional<std::vector<int>> chordal_peo(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    std::vector<int> weight(static_cast<size_t>(n), 0);
    Vset visited = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1, best = -1;
        for (int v = 0; v < n; ++v)
            if (!((visited >> v) & 1) && weight[static_cast<size_t>(v)] > best) {
                best = weight[static_cast<size_t>(v)];
                pick = v;
            }
        visited |= vbit(pick);
        order.push_back(pick);
        for_each_bit(g.neighbors(pick) & ~visited, [&](int w) { ++weight[static_cast<size_t>(w)]; });
    }
    // v's neighbors visited before v must form a clique.
    Vset earlier = 0;
    for (int v : order) {
        std::vector<int> back = set_to_vector(g.neighbors(v) & earlier);
        for (size_t a = 0; a < back.size(); ++a)
            for (size_t b = a + 1; b < back.size(); ++b)
                if (!g.has_edge(back[a], back[b])) return std::nullopt;
        earlier |= vbit(v);
    }
    std::vector<int> peo(order.rbegin(), order.rend());
    return peo;
}

inline bool is_chordal(const Graph& g) { return chordal_peo(g).has_value(); }

inline bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() == g.num_vertices() - 1;
}

inline bool is_triangle_free(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.neighbors(u) & g.neighbors(v)) return false;
    return true;
}

// Chordal and any two distinct maximal cliques share at most one vertex.
inline bool is_block_graph(const Graph& g) {
    if (!is_chordal(g)) return false;
    std::vector<Vset> cliques = maximal_cliques(g);
    for (size_t a = 0; a < cliques.size(); ++a)
        for (size_t b = a + 1; b < cliques.size(); ++b)
            if (popcount(cliques[a] & cliques[b]) > 1) return false;
    return true;
}

// Chordal and for every three maximal cliques with a common vertex the three
// pairwise vertex-set intersections coincide.
inline bool is_generalized_block_graph(const Graph& g) {
    if (!is_chordal(g)) return false;
    std::vector<Vset> cliques = maximal_cliques(g);
    for (size_t a = 0; a < cliques.size(); ++a)
        for (size_t b = a + 1; b < cliques.size(); ++b)
            for (size_t c = b + 1; c < cliques.size(); ++c) {
                if (!(cliques[a] & cliques[b] & cliques[c])) continue;
                Vset ab = cliques[a] & cliques[b];
                Vset ac = cliques[a] & cliques[c];
                Vset bc = cliques[b] & cliques[c];
                if (ab != ac || ab != bc) return false;
            }
    return true;
}

// Re-checks every structural invariant of a decomposition against g.
inline void validate_cw_decomposition(const Graph& g, const CWDecomposition& d) {
    auto fail = [](const char* msg) { throw std::invalid_argument(std::string("invalid Cameron-Walker decomposition: ") + msg); };
    if (!d.side_u) fail("U is empty");
    if (!d.side_v) fail("V is empty");
    if (d.side_u & d.side_v) fail("U and V overlap");
    Vset leaves = 0, privates = 0;
    for (const auto& [u, ls] : d.leaves_of) {
        if (!((d.side_u >> u) & 1)) fail("leaf carrier outside U");
        if (!ls) fail("U vertex without a leaf");
        for_each_bit(ls, [&](int leaf) {
            if (g.degree(leaf) != 1 || !g.has_edge(leaf, u)) fail("leaf not pendant on its U vertex");
        });
        leaves |= ls;
    }
    for_each_bit(d.side_u, [&](int u) {
        if (!d.leaves_of.count(u) || !d.leaves_of.at(u)) fail("U vertex without a leaf");
    });
    for (const auto& [v, pairs] : d.triangles_of) {
        if (!((d.side_v >> v) & 1)) fail("triangle attached outside V");
        for (auto [a, b] : pairs) {
            if (!g.has_edge(a, b) || !g.has_edge(a, v) || !g.has_edge(b, v))
                fail("triangle pair not forming a pendant triangle");
            if (g.degree(a) != 2 || g.degree(b) != 2) fail("triangle vertex of wrong degree");
            privates |= vbit(a) | vbit(b);
        }
    }
    Vset core = d.side_u | d.side_v;
    if ((core | leaves | privates) != g.vertex_set() ||
        (core & leaves) || (core & privates) || (leaves & privates))
        fail("U, V, leaves and triangle vertices must partition the vertex set");
    int triangle_count = 0;
    for (const auto& [v, ps] : d.triangles_of) triangle_count += static_cast<int>(ps.size());
    for (auto [a, b] : d.core_edges) {
        bool crosses = (((d.side_u >> a) & 1) && ((d.side_v >> b) & 1)) ||
                       (((d.side_v >> a) & 1) && ((d.side_u >> b) & 1));
        if (!g.has_edge(a, b) || !crosses) fail("core edge not between U and V");
    }
    for (auto [a, b] : g.edges())
        if (((core >> a) & 1) && ((core >> b) & 1) &&
            ((d.side_u >> a) & 1) == ((d.side_u >> b) & 1))
            fail("core not bipartite on (U, V)");
    if (static_cast<int>(d.core_edges.size()) !=
        g.edge_count() - popcount(leaves) - 3 * triangle_count)
        fail("core edge list does not account for all non-pendant edges");
    if (!is_connected(induced_subgraph(g, core).graph)) fail("core not connected");
}

namespace detail {

struct CWSearch {
    const Graph& g;
    std::vector<int> degree_one;              // candidates, ascending
    Vset privates = 0;                        // peeled pendant-triangle vertices
    std::map<int, std::vector<std::pair<int, int>>> triangles;
    std::optional<CWDecomposition> result;

    explicit CWSearch(const Graph& graph) : g(graph) {}

    bool assemble(Vset leaf_set) {
        Vset carriers = 0;
        for_each_bit(leaf_set, [&](int leaf) { carriers |= g.neighbors(leaf); });
        Vset core = g.vertex_set() & ~privates & ~leaf_set;
        Vset u = carriers, v = core & ~carriers;
        if (!u || !v || (u & leaf_set)) return false;
        // Triangles hang off V only.
        for (const auto& [w, pairs] : triangles)
            if (!((v >> w) & 1)) return false;
        // Core edges must all cross between U and V.
        std::vector<std::pair<int, int>> core_edges;
        for (auto [a, b] : g.edges()) {
            bool ac = (core >> a) & 1, bc = (core >> b) & 1;
            if (!ac || !bc) continue;
            if (((u >> a) & 1) == ((u >> b) & 1)) return false;
            core_edges.emplace_back(a, b);
        }
        if (!is_connected(induced_subgraph(g, core).graph)) return false;
        CWDecomposition d;
        d.side_u = u;
        d.side_v = v;
        for_each_bit(leaf_set, [&](int leaf) { d.leaves_of[lowest(g.neighbors(leaf))] |= vbit(leaf); });
        d.triangles_of = triangles;
        d.core_edges = std::move(core_edges);
        validate_cw_decomposition(g, d);
        result = std::move(d);
        return true;
    }

    // Assign each degree-1 vertex either to the core (a V vertex) or as an
    // attached leaf; core-first gives the documented deterministic answer.
    bool assign(size_t i, Vset leaf_set) {
        if (i == degree_one.size()) return assemble(leaf_set);
        if (assign(i + 1, leaf_set)) return true;
        return assign(i + 1, leaf_set | vbit(degree_one[i]));
    }
};

}  // namespace detail

// Structural Cameron-Walker recognition. Returns the first decomposition in
// the documented search order (pendant triangles peeled greedily, degree-1
// vertices assigned core-first in ascending label order), or nothing.
inline std::optional<CWDecomposition> recognize_cameron_walker(const Graph& g) {
    int n = g.num_vertices();
    if (n > Graph::kMaxVertices) throw SizeGuardError("recognizer limited to 64 vertices");
    if (n < 3 || !is_connected(g)) return std::nullopt;

    detail::CWSearch search(g);
    // Every triangle of a Cameron-Walker graph is pendant: two private
    // degree-2 vertices plus an attachment vertex.
    std::vector<std::array<int, 3>> triangles;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.has_edge(a, b)) continue;
            for_each_bit(g.neighbors(a) & g.neighbors(b), [&](int c) {
                if (c > b) triangles.push_back({a, b, c});
            });
        }
    for (auto [a, b, c] : triangles) {
        std::vector<int> private_pair;
        int attach = -1;
        for (int v : {a, b, c})
            (g.degree(v) == 2 ? private_pair.push_back(v) : (void)(attach = v));
        // Connectivity forces exactly one attachment vertex unless g is K3.
        if (private_pair.size() != 2) return std::nullopt;
        search.privates |= vbit(private_pair[0]) | vbit(private_pair[1]);
        search.triangles[attach].emplace_back(private_pair[0], private_pair[1]);
    }
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) search.degree_one.push_back(v);
    search.assign(0, 0);
    return search.result;
}

struct CWSubtype {
    bool dense = false;
    bool minimal_dense = false;
};

// dense: the core is complete bipartite and not a tree (|U|, |V| >= 2).
// minimal dense: additionally triangle-free with exactly one leaf per U vertex.
inline CWSubtype classify_cw_subtype(const Graph& g, const CWDecomposition& d) {
    validate_cw_decomposition(g, d);
    CWSubtype out;
    bool complete_core =
        static_cast<int>(d.core_edges.size()) == popcount(d.side_u) * popcount(d.side_v);
    out.dense = complete_core && popcount(d.side_u) >= 2 && popcount(d.side_v) >= 2;
    bool single_leaves = true;
    for (const auto& [u, ls] : d.leaves_of)
        if (popcount(ls) != 1) single_leaves = false;
    out.minimal_dense = out.dense && d.triangles_of.empty() && single_leaves;
    return out;
}

struct ClassReport {
    bool connected = false;
    bool bipartite = false;
    std::optional<std::pair<Vset, Vset>> sides;
    bool tree = false;
    bool chordal = false;
    bool block = false;
    bool generalized_block = false;
    bool triangle_free = false;
    std::optional<CWDecomposition> cameron_walker;
    bool complete_bipartite_core = false;
    bool dense_cw = false;
    bool minimal_dense_cw = false;
};

inline ClassReport classify(const Graph& g) {
    ClassReport r;
    r.connected = is_connected(g);
    r.sides = bipartition(g);
    r.bipartite = r.sides.has_value();
    r.tree = is_tree(g);
    r.chordal = is_chordal(g);
    r.block = is_block_graph(g);
    r.generalized_block = is_generalized_block_graph(g);
    r.triangle_free = is_triangle_free(g);
    r.cameron_walker = recognize_cameron_walker(g);
    if (r.cameron_walker) {
        const CWDecomposition& d = *r.cameron_walker;
        r.complete_bipartite_core =
            static_cast<int>(d.core_edges.size()) == popcount(d.side_u) * popcount(d.side_v);
        CWSubtype sub = classify_cw_subtype(g, d);
        r.dense_cw = sub.dense;
        r.minimal_dense_cw = sub.minimal_dense;
    }
    return r;
}

}  // namespace bei
