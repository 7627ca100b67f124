#pragma once

#include <algorithm>
#include <iterator>
#include <optional>
#include <vector>

#include "homlab/graph.hpp"
#include "homlab/targets.hpp"

namespace homlab {

/// True iff no two distinct vertices of H have two or more common neighbours
/// (a loop at v counts v as its own neighbour).
inline bool has_property_star(const Graph& H) {
    const int n = H.vertex_count();
    std::vector<Vertex> common;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            common.clear();
            const auto& a = H.neighbors(u);
            const auto& b = H.neighbors(v);
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
            if (common.size() >= 2)
                return false;
        }
    return true;
}

/// An induced copy of one of the seven minimal forbidden graphs:
/// `embedding[i]` is the H-vertex playing vertex i of targets::forbidden(pattern).
struct ForbiddenWitness {
    int pattern = 0;
    std::vector<Vertex> embedding;

    char name() const { return targets::forbidden_name(pattern); }
};

namespace detail {
inline bool extend_embedding(const Graph& H, const Graph& P, std::vector<Vertex>& emb, std::vector<bool>& used) {
    const int i = static_cast<int>(emb.size());
    if (i == P.vertex_count())
        return true;
    for (Vertex x = 0; x < H.vertex_count(); ++x) {
        if (used[x] || H.has_loop(x) != P.has_loop(i))
            continue;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j)
            ok = H.adjacent(emb[j], x) == P.adjacent(j, i);
        if (!ok)
            continue;
        emb.push_back(x);
        used[x] = true;
        if (extend_embedding(H, P, emb, used))
            return true;
        used[x] = false;
        emb.pop_back();
    }
    return false;
}
} // namespace detail

/// First induced forbidden graph found, trying patterns (a)..(g) in order and,
/// within a pattern, the lexicographically least vertex tuple.
inline std::optional<ForbiddenWitness> forbidden_subgraph_witness(const Graph& H) {
    for (int p = 0; p < targets::forbidden_count; ++p) {
        Graph P = targets::forbidden(p);
        std::vector<Vertex> emb;
        std::vector<bool> used(H.vertex_count(), false);
        if (detail::extend_embedding(H, P, emb, used))
            return ForbiddenWitness{p, emb};
    }
    return std::nullopt;
}

} // namespace homlab
