#pragma once

#include <vector>

#include "homlab/graph.hpp"

namespace homlab {

namespace detail {
// Extends an induced path ending at `last`; `blocked[x]` counts path vertices
// adjacent to x (or equal to it). A new vertex must touch exactly the last one.
inline int grow_induced_path(const Graph& G, Vertex last, int length, int cap, std::vector<int>& blocked) {
    int best = length;
    if (best > cap)
        return best;
    for (Vertex y : G.neighbors(last)) {
        if (y == last || blocked[y] != 1)
            continue;
        for (Vertex z : G.neighbors(y))
            ++blocked[z];
        ++blocked[y];
        best = std::max(best, grow_induced_path(G, y, length + 1, cap, blocked));
        --blocked[y];
        for (Vertex z : G.neighbors(y))
            --blocked[z];
        if (best > cap)
            return best;
    }
    return best;
}
} // namespace detail

/// Number of vertices on a longest induced path, or cap + 1 once a path
/// longer than `cap` is found. Loops are ignored.
inline int longest_induced_path_length(const Graph& G, int cap) {
    int best = 0;
    std::vector<int> blocked(G.vertex_count(), 0);
    for (Vertex s = 0; s < G.vertex_count(); ++s) {
        for (Vertex z : G.neighbors(s))
            if (z != s)
                ++blocked[z];
        ++blocked[s];
        best = std::max(best, detail::grow_induced_path(G, s, 1, cap, blocked));
        --blocked[s];
        for (Vertex z : G.neighbors(s))
            if (z != s)
                --blocked[z];
        if (best > cap)
            return cap + 1;
    }
    return best;
}

} // namespace homlab
