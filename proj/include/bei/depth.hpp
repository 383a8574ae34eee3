#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "bei/classes.hpp"
#include "bei/graph.hpp"

namespace bei {

enum class DepthProvenance {
    block_or_cw_tree,
    generalized_block,
    minimal_dense_cw,
    gluing,
    disjoint_union,
    bounds_only,
};

inline const char* to_string(DepthProvenance p) {
    switch (p) {
        case DepthProvenance::block_or_cw_tree: return "block/cw-tree";
        case DepthProvenance::generalized_block: return "generalized-block";
        case DepthProvenance::minimal_dense_cw: return "minimal-dense-cw";
        case DepthProvenance::gluing: return "gluing";
        case DepthProvenance::disjoint_union: return "disjoint-union";
        case DepthProvenance::bounds_only: return "bounds-only";
    }
    return "?";
}

// Either an exact depth with formula provenance or the certified interval
// [f + d, n - kappa + 2].
struct DepthVerdict {
    bool exact = false;
    int value = 0;  // meaningful when exact
    int lo = 0;
    int hi = 0;
    DepthProvenance provenance = DepthProvenance::bounds_only;

    static DepthVerdict make_exact(int v, DepthProvenance p) { return {true, v, v, v, p}; }
    static DepthVerdict make_interval(int lo, int hi) {
        return {false, 0, lo, hi, DepthProvenance::bounds_only};
    }
};

// f(G) + d(G) <= depth(S/J_G) <= n - kappa(G) + 2 for connected G.
inline std::pair<int, int> depth_bounds(const Graph& g) {
    InvariantBundle inv = graph_invariants(g);
    if (!inv.connected) throw std::invalid_argument("depth_bounds requires a connected graph");
    return {inv.free_count + *inv.diameter, g.num_vertices() - *inv.connectivity + 2};
}

// depth = n + 1 - sum over i of (i-1) * #(minimal cut sets of size i) for a
// connected generalized block graph; an empty sum (block graphs in
// particular) gives n + 1.
inline int depth_generalized_block(const Graph& g) {
    if (!is_connected(g) || !is_generalized_block_graph(g))
        throw std::invalid_argument("input is not a connected generalized block graph");
    int n = g.num_vertices();
    int omega = 0;
    for (Vset c : maximal_cliques(g)) omega = std::max(omega, popcount(c));
    int total = 0;
    for (Vset cut : minimal_cut_sets(g, n)) {
        int size = popcount(cut);
        if (size >= omega)
            throw std::logic_error("generalized block graph with a minimal cut set of size >= omega");
        total += (size - 1);
    }
    return n + 1 - total;
}

// depth = n - |V| + 2 for a minimal dense Cameron-Walker graph; internally
// cross-checked against the equivalent form 2|U| + 2.
inline int depth_minimal_dense_cw(const Graph& g, const CWDecomposition& d) {
    if (!classify_cw_subtype(g, d).minimal_dense)
        throw std::invalid_argument("input is not a minimal dense Cameron-Walker graph");
    int n = g.num_vertices();
    int value = n - popcount(d.side_v) + 2;
    if (value != 2 * popcount(d.side_u) + 2)
        throw std::logic_error("minimal dense depth forms disagree; decomposition corrupt");
    return value;
}

// depth of two graphs glued at a vertex free in both parts: d1 + d2 - 2.
inline int depth_glued(const Graph& g1, int v1, int depth1, const Graph& g2, int v2, int depth2) {
    if (!is_free_vertex(g1, v1) || !is_free_vertex(g2, v2))
        throw std::invalid_argument("gluing vertex must be free in both parts");
    return depth1 + depth2 - 2;
}

// depth of a disjoint union is the sum of the parts' depths; an isolated
// vertex contributes a two-variable polynomial ring, hence 2.
inline constexpr int kIsolatedVertexDepth = 2;

inline int depth_disjoint_union(const std::vector<int>& part_depths) {
    return std::accumulate(part_depths.begin(), part_depths.end(), 0);
}

enum class CMCase { p3, p5, triangle_path, none };

inline const char* to_string(CMCase c) {
    switch (c) {
        case CMCase::p3: return "P3";
        case CMCase::p5: return "P5";
        case CMCase::triangle_path: return "triangle-path";
        case CMCase::none: return "none";
    }
    return "?";
}

struct CMVerdict {
    bool is_cw = false;
    bool cm = false;
    CMCase matched = CMCase::none;
};

namespace detail {

// Brute-force isomorphism for the tiny classification targets.
inline bool isomorphic_small(const Graph& a, const Graph& b) {
    int n = a.num_vertices();
    if (n != b.num_vertices() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (auto [u, v] : a.edges())
            if (!b.has_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)])) {
                match = false;
                break;
            }
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline Graph path_n(int k) {
    Graph g(k);
    for (int v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph triangle_path() {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(2, 4);
    g.add_edge(3, 4);
    return g;
}

}  // namespace detail

// A Cameron-Walker graph is Cohen-Macaulay exactly when it is the path on 3
// vertices, the path on 5 vertices, or the triangle with an attached path of
// length two. Non-Cameron-Walker inputs get no classification.
inline CMVerdict cm_classify_cw(const Graph& g) {
    CMVerdict out;
    out.is_cw = recognize_cameron_walker(g).has_value();
    if (!out.is_cw) return out;
    if (g.num_vertices() == 3 && detail::isomorphic_small(g, detail::path_n(3)))
        out.matched = CMCase::p3;
    else if (g.num_vertices() == 5 && detail::isomorphic_small(g, detail::path_n(5)))
        out.matched = CMCase::p5;
    else if (g.num_vertices() == 5 && detail::isomorphic_small(g, detail::triangle_path()))
        out.matched = CMCase::triangle_path;
    out.cm = out.matched != CMCase::none;
    return out;
}

namespace detail {

DepthVerdict dispatch_connected(const Graph& g);

// Gluing split: a cut vertex w splitting g into exactly two sides, with w
// free on both sides and both sides resolving to exact depths.
inline std::optional<DepthVerdict> try_gluing_split(const Graph& g) {
    int n = g.num_vertices();
    for (int w = 0; w < n; ++w) {
        if (!is_cut_vertex(g, w)) continue;
        std::vector<Vset> parts = connected_components_within(g, g.vertex_set() & ~vbit(w));
        if (parts.size() != 2) continue;
        InducedSubgraph a = induced_subgraph(g, parts[0] | vbit(w));
        InducedSubgraph b = induced_subgraph(g, parts[1] | vbit(w));
        int wa = static_cast<int>(std::lower_bound(a.original_label.begin(), a.original_label.end(), w) -
                                  a.original_label.begin());
        int wb = static_cast<int>(std::lower_bound(b.original_label.begin(), b.original_label.end(), w) -
                                  b.original_label.begin());
        if (!is_free_vertex(a.graph, wa) || !is_free_vertex(b.graph, wb)) continue;
        DepthVerdict da = dispatch_connected(a.graph);
        DepthVerdict db = dispatch_connected(b.graph);
        if (!da.exact || !db.exact) continue;
        return DepthVerdict::make_exact(depth_glued(a.graph, wa, da.value, b.graph, wb, db.value),
                                        DepthProvenance::gluing);
    }
    return std::nullopt;
}

inline DepthVerdict dispatch_connected(const Graph& g) {
    if (is_generalized_block_graph(g)) {
        DepthProvenance tag = is_block_graph(g) ? DepthProvenance::block_or_cw_tree
                                                : DepthProvenance::generalized_block;
        return DepthVerdict::make_exact(depth_generalized_block(g), tag);
    }
    if (auto cw = recognize_cameron_walker(g); cw && classify_cw_subtype(g, *cw).minimal_dense)
        return DepthVerdict::make_exact(depth_minimal_dense_cw(g, *cw),
                                        DepthProvenance::minimal_dense_cw);
    if (auto glued = try_gluing_split(g)) return *glued;
    auto [lo, hi] = depth_bounds(g);
    return DepthVerdict::make_interval(lo, hi);
}

}  // namespace detail

// Resolves each connected component in turn (generalized block formula,
// minimal dense formula, then a gluing split) and sums the results; any
// unresolved component turns the total into an interval.
inline DepthVerdict depth_dispatch(const Graph& g) {
    std::vector<Vset> comps = connected_components(g);
    if (comps.empty()) return DepthVerdict::make_exact(0, DepthProvenance::disjoint_union);
    std::vector<DepthVerdict> verdicts;
    verdicts.reserve(comps.size());
    for (Vset comp : comps)
        verdicts.push_back(detail::dispatch_connected(induced_subgraph(g, comp).graph));
    if (comps.size() == 1) return verdicts.front();
    DepthVerdict total;
    total.exact = true;
    for (const DepthVerdict& v : verdicts) {
        total.exact = total.exact && v.exact;
        total.lo += v.lo;
        total.hi += v.hi;
    }
    total.value = total.exact ? total.lo : 0;
    total.provenance =
        total.exact ? DepthProvenance::disjoint_union : DepthProvenance::bounds_only;
    return total;
}

}  // namespace bei
