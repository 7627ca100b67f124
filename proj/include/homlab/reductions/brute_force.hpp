#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "homlab/cnf.hpp"
#include "homlab/errors.hpp"
#include "homlab/graph.hpp"

namespace homlab::brute {

/// Enumerates all 2^variables assignments.
inline bool satisfiable(const CnfFormula& f) {
    if (f.variables > 30)
        throw BudgetExceeded("satisfiability enumeration over more than 30 variables");
    std::vector<bool> value(f.variables + 1);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.variables); ++bits) {
        for (int v = 1; v <= f.variables; ++v)
            value[v] = (bits >> (v - 1)) & 1;
        if (f.satisfied_by(value))
            return true;
    }
    return false;
}

namespace detail {
inline void check_size(const Graph& G, int limit) {
    if (G.vertex_count() > limit)
        throw BudgetExceeded("subset enumeration over more than " + std::to_string(limit) + " vertices");
}

inline int cut_size(const Graph& G, std::uint64_t side) {
    int c = 0;
    for (const Edge& e : G.edges())
        c += ((side >> e.u) & 1) != ((side >> e.v) & 1);
    return c;
}
} // namespace detail

inline int max_cut(const Graph& G) {
    detail::check_size(G, 30);
    int best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << G.vertex_count()); ++s)
        best = std::max(best, detail::cut_size(G, s));
    return best;
}

/// Largest cut with equal sides; empty for odd vertex counts.
inline std::optional<int> max_bisection(const Graph& G) {
    detail::check_size(G, 30);
    const int n = G.vertex_count();
    if (n % 2)
        return std::nullopt;
    int best = -1;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
        if (std::popcount(s) * 2 == n)
            best = std::max(best, detail::cut_size(G, s));
    return best;
}

/// Does every maximum cut have equal sides?
inline bool maximum_cuts_are_bisections(const Graph& G) {
    const int best = max_cut(G);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << G.vertex_count()); ++s)
        if (detail::cut_size(G, s) == best && std::popcount(s) * 2 != G.vertex_count())
            return false;
    return true;
}

inline int independence_number(const Graph& G) {
    detail::check_size(G, 30);
    int best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << G.vertex_count()); ++s) {
        bool independent = true;
        for (const Edge& e : G.edges())
            if (((s >> e.u) & 1) && ((s >> e.v) & 1)) {
                independent = false;
                break;
            }
        if (independent)
            best = std::max(best, std::popcount(s));
    }
    return best;
}

} // namespace homlab::brute
