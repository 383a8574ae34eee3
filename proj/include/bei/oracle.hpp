#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bei/graph.hpp"

// Ground-truth depth/dimension/Cohen-Macaulayness for the binomial edge
// ideal J_G, computed through its squarefree initial ideal: the lex order
// with x_1 > ... > x_n > y_1 > ... > y_n degenerates J_G to a squarefree
// monomial ideal generated by admissible paths; passing to the initial
// ideal preserves Krull dimension and (squarefreeness) depth, and both are
// read off the Stanley-Reisner complex via Hochster's formula together with
// Auslander-Buchsbaum. Nothing here shares code with the formula modules.

namespace bei {

// Maps vertex v (0-based) to its pair of variable indices in 0..2n-1.
struct VariableIndexing {
    int n = 0;

    int x_index(int v) const { return v; }
    int y_index(int v) const { return n + v; }
    int num_vars() const { return 2 * n; }

    std::string name(int idx) const {
        return idx < n ? "x" + std::to_string(idx + 1) : "y" + std::to_string(idx - n + 1);
    }
};

struct AdmissiblePath {
    std::vector<int> vertices;  // i = first, j = last, i < j
    Vset monomial;              // variable-index support of the initial term
};

namespace detail {

inline bool reachable_within(const Graph& g, int from, int to, Vset within) {
    if (from == to) return true;
    Vset frontier = vbit(from) & within, seen = frontier;
    while (frontier) {
        Vset next = 0;
        for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
        next &= within & ~seen;
        if ((next >> to) & 1) return true;
        seen |= next;
        frontier = next;
    }
    return false;
}

// A path i = p_0, ..., p_r = j (i < j) is admissible when every interior
// vertex is < i or > j and no proper subset of the interior vertices yields
// an i-j path. Every proper interior subset is tested explicitly.
inline bool interior_minimal(const Graph& g, int i, int j, Vset interior) {
    if (!interior) return true;
    Vset sub = (interior - 1) & interior;
    while (true) {
        if (reachable_within(g, i, j, sub | vbit(i) | vbit(j))) return false;
        if (!sub) break;
        sub = (sub - 1) & interior;
    }
    return true;
}

inline void path_dfs(const Graph& g, int i, int j, Vset allowed_interior,
                     std::vector<int>& path, Vset visited,
                     std::vector<AdmissiblePath>& out) {
    const VariableIndexing vars{g.num_vertices()};
    for_each_bit(g.neighbors(path.back()) & ~visited, [&](int w) {
        if (w == j) {
            Vset interior = visited & ~vbit(i);
            if (!interior_minimal(g, i, j, interior)) return;
            Vset monomial = vbit(vars.x_index(i)) | vbit(vars.y_index(j));
            for_each_bit(interior, [&](int v) {
                monomial |= v > j ? vbit(vars.x_index(v)) : vbit(vars.y_index(v));
            });
            path.push_back(j);
            out.push_back({path, monomial});
            path.pop_back();
        } else if ((allowed_interior >> w) & 1) {
            path.push_back(w);
            path_dfs(g, i, j, allowed_interior, path, visited | vbit(w), out);
            path.pop_back();
        }
    });
}

}  // namespace detail

// All admissible paths, in (i, j, DFS) order.
inline std::vector<AdmissiblePath> admissible_paths(const Graph& g) {
    int n = g.num_vertices();
    if (2 * n > 64) throw SizeGuardError("variable masks support at most 32 vertices");
    std::vector<AdmissiblePath> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vset allowed = 0;
            for (int v = 0; v < i; ++v) allowed |= vbit(v);
            for (int v = j + 1; v < n; ++v) allowed |= vbit(v);
            std::vector<int> path{i};
            detail::path_dfs(g, i, j, allowed, path, vbit(i), out);
        }
    return out;
}

// Squarefree monomial ideal as variable-index supports; generators minimal
// and sorted by size then lexicographically.
struct MonomialIdeal {
    int num_vars = 0;
    std::vector<Vset> generators;
};

// The initial ideal of J_G under the fixed lex order.
inline MonomialIdeal initial_ideal(const Graph& g) {
    MonomialIdeal ideal;
    ideal.num_vars = 2 * g.num_vertices();
    std::vector<Vset> mons;
    for (const AdmissiblePath& p : admissible_paths(g)) mons.push_back(p.monomial);
    std::sort(mons.begin(), mons.end(), set_size_lex_less);
    mons.erase(std::unique(mons.begin(), mons.end()), mons.end());
    for (Vset m : mons) {
        bool redundant = false;
        for (Vset kept : ideal.generators)
            if ((kept & ~m) == 0) {
                redundant = true;
                break;
            }
        if (!redundant) ideal.generators.push_back(m);
    }
    return ideal;
}

// Faces are the subsets of variable indices containing no generator.
struct SimplicialComplex {
    int num_vertices = 0;
    std::vector<Vset> facets;
};

// Facets by iterated non-face splitting: start from the full vertex set,
// branch on a contained generator by deleting one of its elements, then keep
// the inclusion-maximal leaves.
inline SimplicialComplex stanley_reisner(const MonomialIdeal& ideal) {
    if (ideal.num_vars < 0 || ideal.num_vars > 64)
        throw SizeGuardError("complexes are limited to 64 vertices");
    for (Vset gen : ideal.generators)
        if (popcount(gen) < 2)
            throw std::invalid_argument("stanley_reisner rejects generators of size < 2");
    SimplicialComplex out;
    out.num_vertices = ideal.num_vars;
    Vset full = ideal.num_vars == 64 ? ~Vset{0} : vbit(ideal.num_vars) - 1;
    std::unordered_set<Vset> visited;
    std::vector<Vset> stack{full}, leaves;
    while (!stack.empty()) {
        Vset m = stack.back();
        stack.pop_back();
        if (!visited.insert(m).second) continue;
        Vset offending = 0;
        for (Vset gen : ideal.generators)
            if ((gen & ~m) == 0) {
                offending = gen;
                break;
            }
        if (!offending) {
            leaves.push_back(m);
            continue;
        }
        for_each_bit(offending, [&](int b) { stack.push_back(m & ~vbit(b)); });
    }
    std::sort(leaves.begin(), leaves.end(),
              [](Vset a, Vset b) { return popcount(a) > popcount(b); });
    for (Vset m : leaves) {
        bool dominated = false;
        for (Vset kept : out.facets)
            if ((m & ~kept) == 0) {
                dominated = true;
                break;
            }
        if (!dominated) out.facets.push_back(m);
    }
    std::sort(out.facets.begin(), out.facets.end(), set_size_lex_less);
    return out;
}

enum class Field { gf2, rational };

inline const char* to_string(Field f) { return f == Field::gf2 ? "gf2" : "rational"; }

namespace detail {

// --- exact rank computation -------------------------------------------------

inline int rank_gf2(std::vector<std::vector<std::uint64_t>> rows, int ncols) {
    int words = (ncols + 63) / 64;
    std::vector<int> pivot_of_col(static_cast<size_t>(ncols), -1);
    std::vector<std::vector<std::uint64_t>> pivots;
    int rank = 0;
    for (auto& row : rows) {
        while (true) {
            int col = -1;
            for (int w = 0; w < words; ++w)
                if (row[static_cast<size_t>(w)]) {
                    col = w * 64 + std::countr_zero(row[static_cast<size_t>(w)]);
                    break;
                }
            if (col < 0) break;
            int p = pivot_of_col[static_cast<size_t>(col)];
            if (p < 0) {
                pivot_of_col[static_cast<size_t>(col)] = static_cast<int>(pivots.size());
                pivots.push_back(std::move(row));
                ++rank;
                break;
            }
            const auto& pr = pivots[static_cast<size_t>(p)];
            for (int w = col / 64; w < words; ++w) row[static_cast<size_t>(w)] ^= pr[static_cast<size_t>(w)];
        }
    }
    return rank;
}

struct Int64Overflow {};

inline bool cmp_abs_less(const mpz_class& a, const mpz_class& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

inline mpz_class exact_div(const mpz_class& num, const mpz_class& den) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

struct CheckedInt64 {
    std::int64_t v = 0;
    CheckedInt64() = default;
    CheckedInt64(std::int64_t x) : v(x) {}
    friend CheckedInt64 operator*(CheckedInt64 a, CheckedInt64 b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw Int64Overflow{};
        return r;
    }
    friend CheckedInt64 operator-(CheckedInt64 a, CheckedInt64 b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw Int64Overflow{};
        return r;
    }
    friend bool operator!=(CheckedInt64 a, int b) { return a.v != b; }
};

inline bool cmp_abs_less(CheckedInt64 a, CheckedInt64 b) {
    unsigned long long ua = a.v < 0 ? 0ULL - static_cast<unsigned long long>(a.v)
                                    : static_cast<unsigned long long>(a.v);
    unsigned long long ub = b.v < 0 ? 0ULL - static_cast<unsigned long long>(b.v)
                                    : static_cast<unsigned long long>(b.v);
    return ua < ub;
}

inline CheckedInt64 exact_div(CheckedInt64 num, CheckedInt64 den) { return num.v / den.v; }

// Fraction-free (Bareiss) elimination rank; entries stay exact minors.
template <typename Int>
int rank_bareiss(std::vector<std::vector<Int>> m) {
    size_t nr = m.size();
    if (nr == 0) return 0;
    size_t nc = m[0].size();
    Int prev = 1;
    size_t rank = 0;
    for (size_t step = 0; rank < std::min(nr, nc); ++step) {
        // Smallest-magnitude pivot keeps intermediate minors small.
        size_t pi = nr, pj = nc;
        for (size_t i = rank; i < nr; ++i)
            for (size_t j = rank; j < nc; ++j)
                if (m[i][j] != 0 &&
                    (pi == nr || cmp_abs_less(m[i][j], m[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == nr) break;
        std::swap(m[rank], m[pi]);
        for (size_t i = 0; i < nr; ++i) std::swap(m[i][rank], m[i][pj]);
        const Int pivot = m[rank][rank];
        for (size_t i = rank + 1; i < nr; ++i) {
            for (size_t j = rank + 1; j < nc; ++j)
                m[i][j] = exact_div(pivot * m[i][j] - m[i][rank] * m[rank][j], prev);
            m[i][rank] = 0;
        }
        prev = pivot;
        ++rank;
    }
    return static_cast<int>(rank);
}

using SparseRow = std::vector<std::pair<int, int>>;  // (column, +-1)

inline int rank_rational(const std::vector<SparseRow>& rows, int ncols) {
    auto densify = [&](auto zero) {
        using Int = decltype(zero);
        std::vector<std::vector<Int>> m(rows.size(), std::vector<Int>(static_cast<size_t>(ncols), Int(0)));
        for (size_t i = 0; i < rows.size(); ++i)
            for (auto [c, s] : rows[i]) m[i][static_cast<size_t>(c)] = Int(s);
        return m;
    };
    try {
        return rank_bareiss(densify(CheckedInt64(0)));
    } catch (const Int64Overflow&) {
        return rank_bareiss(densify(mpz_class(0)));
    }
}

// Rank of the simplicial boundary map from `faces` (dimension k) down to the
// (k-1)-faces listed in `subfaces`. Orientation is chosen to minimize the
// bit-row width in the GF(2) path.
inline int boundary_rank(const std::vector<Vset>& faces, const std::vector<Vset>& subfaces,
                         Field field) {
    if (faces.empty() || subfaces.empty()) return 0;
    std::unordered_map<Vset, int> index;
    index.reserve(subfaces.size() * 2);
    for (size_t i = 0; i < subfaces.size(); ++i) index.emplace(subfaces[i], static_cast<int>(i));
    if (field == Field::gf2) {
        bool transpose = faces.size() < subfaces.size();
        int nrows = static_cast<int>(transpose ? subfaces.size() : faces.size());
        int ncols = static_cast<int>(transpose ? faces.size() : subfaces.size());
        int words = (ncols + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows(
            static_cast<size_t>(nrows), std::vector<std::uint64_t>(static_cast<size_t>(words), 0));
        for (size_t f = 0; f < faces.size(); ++f)
            for_each_bit(faces[f], [&](int b) {
                int sub = index.at(faces[f] & ~vbit(b));
                size_t r = transpose ? static_cast<size_t>(sub) : f;
                int c = transpose ? static_cast<int>(f) : sub;
                rows[r][static_cast<size_t>(c) / 64] |= std::uint64_t{1} << (c % 64);
            });
        return rank_gf2(std::move(rows), ncols);
    }
    std::vector<SparseRow> rows(faces.size());
    for (size_t f = 0; f < faces.size(); ++f) {
        int position = 0;
        for_each_bit(faces[f], [&](int b) {
            rows[f].emplace_back(index.at(faces[f] & ~vbit(b)), position % 2 == 0 ? 1 : -1);
            ++position;
        });
    }
    return rank_rational(rows, static_cast<int>(subfaces.size()));
}

template <typename IsFace>
std::vector<Vset> faces_of_dimension(Vset sigma, int dim, const IsFace& is_face) {
    std::vector<Vset> out;
    for_each_subset_of_size(sigma, dim + 1, [&](Vset f) {
        if (is_face(f)) out.push_back(f);
    });
    return out;
}

}  // namespace detail

// Ranks of reduced homology over the chosen field; rank(k) for k >= -1.
struct HomologyProfile {
    std::vector<int> ranks;  // ranks[k + 1] = rank of reduced H_k

    int rank(int k) const {
        size_t idx = static_cast<size_t>(k + 1);
        return k >= -1 && idx < ranks.size() ? ranks[idx] : 0;
    }
};

// Reduced homology of the restriction of the complex to a vertex subset.
// Conventions: the complex whose only face is the empty set has one unit of
// homology in dimension -1; restricting to the empty vertex set yields no
// homology at all; the void complex (no facets) has none either.
inline HomologyProfile reduced_homology(const SimplicialComplex& complex, Vset restrict_to,
                                        Field field = Field::gf2) {
    HomologyProfile profile;
    if (!restrict_to && !complex.facets.empty()) {
        bool only_empty_face = true;
        for (Vset f : complex.facets)
            if (f) only_empty_face = false;
        if (!only_empty_face) return profile;
    }
    auto is_face = [&](Vset f) {
        for (Vset facet : complex.facets)
            if ((f & ~facet) == 0) return true;
        return false;
    };
    if (!is_face(0)) return profile;  // void complex
    std::vector<Vset> cur{0};         // dimension -1
    int rank_cur = 0;                 // boundary rank out of dimension -1
    for (int k = -1;; ++k) {
        std::vector<Vset> next = detail::faces_of_dimension(restrict_to, k + 1, is_face);
        int rank_next = detail::boundary_rank(next, cur, field);
        profile.ranks.push_back(static_cast<int>(cur.size()) - rank_cur - rank_next);
        if (next.empty()) break;
        cur = std::move(next);
        rank_cur = rank_next;
    }
    return profile;
}

enum class PdStrategy { lcm_lattice, full_sweep };

namespace detail {

// The lcm lattice of a squarefree ideal: all unions of generator supports.
inline std::vector<Vset> lcm_lattice(const MonomialIdeal& ideal) {
    std::unordered_set<Vset> seen;
    std::vector<Vset> lattice;
    for (Vset gen : ideal.generators) {
        size_t old_size = lattice.size();
        if (seen.insert(gen).second) lattice.push_back(gen);
        for (size_t i = 0; i < old_size; ++i) {
            Vset joined = lattice[i] | gen;
            if (seen.insert(joined).second) lattice.push_back(joined);
        }
    }
    std::sort(lattice.begin(), lattice.end(), set_size_lex_less);
    return lattice;
}

}  // namespace detail

// pd(S/I) = max over sigma and i >= 1 with nonzero Hochster homology
// rank H~_{|sigma|-i-1}(Delta restricted to sigma) of i. Only subsets in the
// lcm lattice can contribute; the full-sweep strategy checks all subsets of
// size >= 2 instead and exists as a cross-check on small inputs.
inline int projective_dimension(const MonomialIdeal& ideal, Field field = Field::gf2,
                                PdStrategy strategy = PdStrategy::lcm_lattice) {
    if (ideal.generators.empty()) return 0;
    for (Vset gen : ideal.generators)
        if (popcount(gen) < 2)
            throw std::invalid_argument("projective_dimension expects generators of size >= 2");

    std::vector<Vset> sigmas;
    if (strategy == PdStrategy::lcm_lattice) {
        sigmas = detail::lcm_lattice(ideal);
    } else {
        if (ideal.num_vars > 20)
            throw SizeGuardError("full-sweep strategy capped at 20 variables");
        Vset full = vbit(ideal.num_vars) - 1;
        for (Vset s = 0; s <= full; ++s)
            if (popcount(s) >= 2) sigmas.push_back(s);
        std::sort(sigmas.begin(), sigmas.end(), set_size_lex_less);
    }

    std::vector<Vset> edge_gens;  // size-2 generators obstruct skeleton edges
    for (Vset gen : ideal.generators)
        if (popcount(gen) == 2) edge_gens.push_back(gen);

    // beta_{1, gen} != 0 for every minimal generator, so pd >= 1.
    int best = 1;

    // Pass 1: connectivity of every restriction. A disconnected restriction
    // contributes |sigma| - 1, and dominates everything else that sigma has
    // to offer, so such sigmas never need deeper homology.
    std::vector<char> connected(sigmas.size(), 1);
    for (size_t s = 0; s < sigmas.size(); ++s) {
        Vset sigma = sigmas[s];
        std::vector<int> elems = set_to_vector(sigma);
        std::vector<int> parent(elems.size());
        for (size_t i = 0; i < elems.size(); ++i) parent[i] = static_cast<int>(i);
        auto find = [&](int a) {
            while (parent[static_cast<size_t>(a)] != a) a = parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            return a;
        };
        for (size_t a = 0; a < elems.size(); ++a)
            for (size_t b = a + 1; b < elems.size(); ++b) {
                Vset pair = vbit(elems[a]) | vbit(elems[b]);
                bool face = true;
                for (Vset gen : edge_gens)
                    if ((gen & ~pair) == 0) {
                        face = false;
                        break;
                    }
                if (face) parent[static_cast<size_t>(find(static_cast<int>(a)))] = find(static_cast<int>(b));
            }
        int comps = 0;
        for (size_t i = 0; i < elems.size(); ++i)
            if (find(static_cast<int>(i)) == static_cast<int>(i)) ++comps;
        if (comps >= 2) {
            connected[s] = 0;
            best = std::max(best, popcount(sigma) - 1);
        }
    }

    // Pass 2: bottom-up homology of the connected restrictions, stopping at
    // the first nonzero rank (lowest dimension wins) and skipping dimensions
    // that cannot beat the best contribution found so far.
    for (size_t s = 0; s < sigmas.size(); ++s) {
        if (!connected[s]) continue;
        Vset sigma = sigmas[s];
        int size = popcount(sigma);
        if (size - 2 <= best) continue;
        std::vector<Vset> relevant;
        for (Vset gen : ideal.generators)
            if ((gen & ~sigma) == 0) relevant.push_back(gen);
        auto is_face = [&](Vset f) {
            for (Vset gen : relevant)
                if ((gen & ~f) == 0) return false;
            return true;
        };
        std::vector<Vset> cur = detail::faces_of_dimension(sigma, 1, is_face);
        // rank of the edge boundary map is |sigma| - #components = |sigma| - 1.
        int rank_cur = size - 1;
        for (int k = 1; size - 1 - k > best; ++k) {
            std::vector<Vset> next = detail::faces_of_dimension(sigma, k + 1, is_face);
            int rank_next = detail::boundary_rank(next, cur, field);
            int h = static_cast<int>(cur.size()) - rank_cur - rank_next;
            if (h > 0) {
                best = size - 1 - k;
                break;
            }
            if (next.empty()) break;
            cur = std::move(next);
            rank_cur = rank_next;
        }
    }
    return best;
}

struct OracleResult {
    int depth = 0;
    int dim = 0;
    int pd = 0;
    bool cm = false;
};

inline constexpr int kOracleSizeGuard = 9;

// depth(S/J_G), dim(S/J_G), pd(S/J_G) and Cohen-Macaulayness through the
// squarefree degeneration. The guard caps the lcm-lattice blowup; callers
// may raise it explicitly.
inline OracleResult hochster_depth_dim(const Graph& g, Field field = Field::gf2,
                                       int size_guard = kOracleSizeGuard) {
    int n = g.num_vertices();
    if (n > size_guard)
        throw SizeGuardError("homological oracle capped at n = " + std::to_string(size_guard) +
                             " (raise the guard to override)");
    if (n < 1) throw std::invalid_argument("oracle requires at least one vertex");
    MonomialIdeal ideal = initial_ideal(g);
    SimplicialComplex complex = stanley_reisner(ideal);
    OracleResult out;
    for (Vset f : complex.facets) out.dim = std::max(out.dim, popcount(f));
    out.pd = projective_dimension(ideal, field);
    out.depth = 2 * n - out.pd;
    out.cm = out.depth == out.dim;
    return out;
}

}  // namespace bei
