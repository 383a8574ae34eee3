#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bei {

// Vertex sets and variable-index sets are bitmasks; all size guards keep
// the universe at <= 64 elements.
using Vset = std::uint64_t;

constexpr Vset vbit(int v) { return Vset{1} << v; }

inline int popcount(Vset s) { return std::popcount(s); }

// Lowest element of a nonempty set.
inline int lowest(Vset s) { return std::countr_zero(s); }

template <typename F>
void for_each_bit(Vset s, F&& f) {
    while (s) {
        f(std::countr_zero(s));
        s &= s - 1;
    }
}

inline std::vector<int> set_to_vector(Vset s) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(popcount(s)));
    for_each_bit(s, [&](int v) { out.push_back(v); });
    return out;
}

// Lexicographic order on sets viewed as ascending element lists,
// e.g. {1,4} < {2,3}: the set owning the lowest differing element wins.
inline bool set_lex_less(Vset a, Vset b) {
    if (a == b) return false;
    Vset d = a ^ b;
    return (a >> std::countr_zero(d)) & 1;
}

// Size first, then lexicographic. Report/enumeration order.
inline bool set_size_lex_less(Vset a, Vset b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return set_lex_less(a, b);
}

// Calls f(mask) for every k-subset of the given universe, in size-lex order.
template <typename F>
void for_each_subset_of_size(Vset universe, int k, F&& f) {
    std::vector<int> elems = set_to_vector(universe);
    int m = static_cast<int>(elems.size());
    if (k < 0 || k > m) return;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        Vset mask = 0;
        for (int i : idx) mask |= vbit(elems[static_cast<size_t>(i)]);
        f(mask);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

// Malformed user input (graph files, raw edge lists).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation was refused because the input exceeds a size guard.
struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "{1, 2, 5}" with external 1-indexed labels.
inline std::string format_set(Vset s) {
    std::string out = "{";
    bool first = true;
    for_each_bit(s, [&](int v) {
        if (!first) out += ", ";
        out += std::to_string(v + 1);
        first = false;
    });
    return out + "}";
}

}  // namespace bei
