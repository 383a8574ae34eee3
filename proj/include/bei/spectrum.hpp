#pragma once

#include <algorithm>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

// The minimal prime attached to an admissible cut set T: the variables of T
// together with the complete-graph ideals on the components of G minus T.
// height = n + |T| - (number of components of G minus T).
struct MinimalPrime {
    Vset cut_set = 0;
    std::vector<Vset> components;
    int height = 0;
};

// T has the cut point property iff every i in T is a cut vertex of the
// induced subgraph on (V minus T) plus i.
inline bool has_cut_point_property(const Graph& g, Vset t) {
    if (!is_connected(g)) throw std::invalid_argument("cut point property requires a connected graph");
    Vset rest = g.vertex_set() & ~t;
    bool ok = true;
    for_each_bit(t, [&](int i) {
        if (!ok) return;
        Vset with_i = rest | vbit(i);
        if (component_count_within(g, with_i & ~vbit(i)) <= component_count_within(g, with_i))
            ok = false;
    });
    return ok;
}

inline constexpr int kPrimesSizeGuard = 24;

// Enumerates Min(J_G): T = empty plus every nonempty T with the cut point
// property, ordered by size then lexicographically.
inline std::vector<MinimalPrime> minimal_primes(const Graph& g, int size_guard = kPrimesSizeGuard) {
    if (!is_connected(g)) throw std::invalid_argument("minimal_primes requires a connected graph");
    int n = g.num_vertices();
    if (n > size_guard)
        throw SizeGuardError("minimal_primes subset enumeration capped at n = " +
                             std::to_string(size_guard));
    std::vector<Vset> admissible{0};
    Vset full = g.vertex_set();
    for (Vset t = 1; t <= full; ++t)
        if (has_cut_point_property(g, t)) admissible.push_back(t);
    std::sort(admissible.begin(), admissible.end(), set_size_lex_less);
    std::vector<MinimalPrime> out;
    out.reserve(admissible.size());
    for (Vset t : admissible) {
        MinimalPrime p;
        p.cut_set = t;
        p.components = connected_components_within(g, full & ~t);
        p.height = n + popcount(t) - static_cast<int>(p.components.size());
        out.push_back(std::move(p));
    }
    return out;
}

// dim(S/J_G) = max over admissible T of n - |T| + c_G(T) = 2n - min height.
inline int krull_dim(const Graph& g, int size_guard = kPrimesSizeGuard) {
    int min_height = 2 * g.num_vertices();
    for (const MinimalPrime& p : minimal_primes(g, size_guard))
        min_height = std::min(min_height, p.height);
    return 2 * g.num_vertices() - min_height;
}

// Unmixed iff every minimal prime has the height of P_empty, namely n - 1.
inline bool is_unmixed(const Graph& g, int size_guard = kPrimesSizeGuard) {
    for (const MinimalPrime& p : minimal_primes(g, size_guard))
        if (p.height != g.num_vertices() - 1) return false;
    return true;
}

}  // namespace bei
