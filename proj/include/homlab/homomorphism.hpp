#pragma once

#include <algorithm>
#include <vector>

#include "homlab/errors.hpp"
#include "homlab/graph.hpp"

namespace homlab {

namespace detail {
inline void check_map(const Graph& G, const Graph& H, const Homomorphism& h) {
    if (static_cast<int>(h.size()) != G.vertex_count())
        throw MalformedInput("map size " + std::to_string(h.size()) + " does not match |V(G)| = " +
                             std::to_string(G.vertex_count()));
    for (Vertex a : h)
        if (a < 0 || a >= H.vertex_count())
            throw MalformedInput("image " + std::to_string(a) + " is not a vertex of H");
}

enum class Local { injective, bijective, surjective };

inline bool local_at(const Graph& G, const Graph& H, const Homomorphism& h, Vertex v, Local kind) {
    std::vector<Vertex> image;
    image.reserve(G.degree(v));
    for (Vertex u : G.neighbors(v))
        image.push_back(h[u]);
    std::sort(image.begin(), image.end());
    bool repeats = std::adjacent_find(image.begin(), image.end()) != image.end();
    image.erase(std::unique(image.begin(), image.end()), image.end());
    const auto& target = H.neighbors(h[v]);
    // the image is always inside N_H(h(v)) for a homomorphism
    bool onto = image.size() == target.size();
    switch (kind) {
    case Local::injective: return !repeats;
    case Local::bijective: return !repeats && onto;
    case Local::surjective: return onto;
    }
    return false;
}
} // namespace detail

/// True iff every edge uv of G (loops included) maps onto an edge h(u)h(v) of H.
inline bool is_homomorphism(const Graph& G, const Graph& H, const Homomorphism& h) {
    detail::check_map(G, H, h);
    for (const Edge& e : G.edges())
        if (!H.adjacent(h[e.u], h[e.v]))
            return false;
    return true;
}

namespace detail {
inline bool locally(const Graph& G, const Graph& H, const Homomorphism& h, Local kind) {
    if (!is_homomorphism(G, H, h))
        return false;
    for (Vertex v = 0; v < G.vertex_count(); ++v)
        if (!local_at(G, H, h, v, kind))
            return false;
    return true;
}
} // namespace detail

/// Homomorphism whose restriction to every N(v) is injective into N(h(v)).
/// Maps that are not homomorphisms give false.
inline bool is_locally_injective(const Graph& G, const Graph& H, const Homomorphism& h) {
    return detail::locally(G, H, h, detail::Local::injective);
}

inline bool is_locally_bijective(const Graph& G, const Graph& H, const Homomorphism& h) {
    return detail::locally(G, H, h, detail::Local::bijective);
}

inline bool is_locally_surjective(const Graph& G, const Graph& H, const Homomorphism& h) {
    return detail::locally(G, H, h, detail::Local::surjective);
}

/// Vertices v with h(N(v)) = N(h(v)). Defined for any total map.
inline std::vector<Vertex> happy_vertices(const Graph& G, const Graph& H, const Homomorphism& h) {
    detail::check_map(G, H, h);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < G.vertex_count(); ++v) {
        std::vector<Vertex> image;
        for (Vertex u : G.neighbors(v))
            image.push_back(h[u]);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        if (image == H.neighbors(h[v]))
            out.push_back(v);
    }
    return out;
}

} // namespace homlab
