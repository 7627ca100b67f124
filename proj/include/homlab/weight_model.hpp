#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "homlab/errors.hpp"
#include "homlab/extended_weight.hpp"
#include "homlab/graph.hpp"
#include "homlab/homomorphism.hpp"
#include "homlab/targets.hpp"

namespace homlab {

/// Solvers keep lists as 64-bit masks, so targets are capped at 64 vertices.
inline constexpr int max_target_size = 64;

using Mask = std::uint64_t;

inline constexpr Mask bit(int i) { return Mask{1} << i; }

inline constexpr Mask low_bits(int k) { return k >= 64 ? ~Mask{0} : (bit(k) - 1); }

inline int popcount(Mask m) { return std::popcount(m); }

inline int lowest(Mask m) { return std::countr_zero(m); }

/// Vertex and edge weights over V(G)xV(H) and E(G)xE(H). Unset entries are 0.
/// Edge lookups ignore the orientation of both the G-edge and the H-edge.
class WeightModel {
public:
    WeightModel() = default;

    WeightModel(const Graph& G, const Graph& H)
        : g_edges_(G.edges()), h_edges_(H.edges()), ng_(G.vertex_count()), nh_(H.vertex_count()) {
        vertex_.assign(static_cast<std::size_t>(ng_) * nh_, ExtendedWeight(0));
        edge_.assign(g_edges_.size() * h_edges_.size(), ExtendedWeight(0));
    }

    int g_vertex_count() const { return ng_; }
    int h_vertex_count() const { return nh_; }

    ExtendedWeight vertex_weight(Vertex v, Vertex a) const { return vertex_[vindex(v, a)]; }

    void set_vertex_weight(Vertex v, Vertex a, ExtendedWeight w) {
        vertex_[vindex(v, a)] = w;
        if (w != ExtendedWeight(0))
            zero_ = false;
    }

    ExtendedWeight edge_weight(Vertex u, Vertex v, Vertex a, Vertex b) const {
        return edge_[eindex(g_index(u, v), h_index(a, b))];
    }

    /// Weight by positions in G.edges() and H.edges().
    ExtendedWeight edge_weight_at(int g_edge, int h_edge) const { return edge_[eindex(g_edge, h_edge)]; }

    void set_edge_weight(Vertex u, Vertex v, Vertex a, Vertex b, ExtendedWeight w) {
        edge_[eindex(g_index(u, v), h_index(a, b))] = w;
        if (w != ExtendedWeight(0)) {
            zero_ = false;
            zero_edges_ = false;
        }
    }

    bool all_zero() const { return zero_; }
    bool edges_all_zero() const { return zero_edges_; }

    int g_edge_index(Vertex u, Vertex v) const { return g_index(u, v); }
    int h_edge_index(Vertex a, Vertex b) const { return h_index(a, b); }
    int h_edge_count() const { return static_cast<int>(h_edges_.size()); }

    /// True iff the model was built for graphs with these vertex and edge sets.
    bool fits(const Graph& G, const Graph& H) const {
        return ng_ == G.vertex_count() && nh_ == H.vertex_count() && g_edges_ == G.edges() && h_edges_ == H.edges();
    }

private:
    std::size_t vindex(Vertex v, Vertex a) const {
        if (v < 0 || v >= ng_ || a < 0 || a >= nh_)
            throw MalformedInput("vertex weight index (" + std::to_string(v) + "," + std::to_string(a) +
                                 ") out of range");
        return static_cast<std::size_t>(v) * nh_ + a;
    }

    static int find(const std::vector<Edge>& es, Vertex u, Vertex v, const char* which) {
        Edge e(u, v);
        auto it = std::lower_bound(es.begin(), es.end(), e);
        if (it == es.end() || *it != e)
            throw MalformedInput(std::string(which) + " pair (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") is not an edge");
        return static_cast<int>(it - es.begin());
    }

    int g_index(Vertex u, Vertex v) const { return find(g_edges_, u, v, "G"); }
    int h_index(Vertex a, Vertex b) const { return find(h_edges_, a, b, "H"); }

    std::size_t eindex(int ge, int he) const { return static_cast<std::size_t>(ge) * h_edges_.size() + he; }

    std::vector<Edge> g_edges_;
    std::vector<Edge> h_edges_;
    int ng_ = 0;
    int nh_ = 0;
    std::vector<ExtendedWeight> vertex_;
    std::vector<ExtendedWeight> edge_;
    bool zero_ = true;
    bool zero_edges_ = true;
};

/// Admissible H-vertices per G-vertex, stored as bitmasks.
class ListAssignment {
public:
    ListAssignment() = default;

    /// Every list holds all of V(H).
    static ListAssignment full(int g_count, int h_count) {
        check_target(h_count);
        ListAssignment l;
        l.h_count_ = h_count;
        l.masks_.assign(g_count, low_bits(h_count));
        return l;
    }

    static ListAssignment full(const Graph& G, const Graph& H) { return full(G.vertex_count(), H.vertex_count()); }

    int size() const { return static_cast<int>(masks_.size()); }
    int h_count() const { return h_count_; }

    Mask mask(Vertex v) const { return masks_.at(v); }

    void set_mask(Vertex v, Mask m) {
        if (m & ~low_bits(h_count_))
            throw MalformedInput("list for vertex " + std::to_string(v) + " names a vertex outside H");
        masks_.at(v) = m;
    }

    void set(Vertex v, const std::vector<Vertex>& allowed) {
        Mask m = 0;
        for (Vertex a : allowed) {
            if (a < 0 || a >= h_count_)
                throw MalformedInput("list entry " + std::to_string(a) + " is not a vertex of H");
            m |= bit(a);
        }
        set_mask(v, m);
    }

    bool contains(Vertex v, Vertex a) const { return (masks_.at(v) >> a) & 1U; }

    std::vector<Vertex> list(Vertex v) const {
        std::vector<Vertex> out;
        for (Mask m = masks_.at(v); m; m &= m - 1)
            out.push_back(lowest(m));
        return out;
    }

    bool respects(const Homomorphism& h) const {
        if (static_cast<int>(h.size()) != size())
            return false;
        for (int v = 0; v < size(); ++v)
            if (h[v] < 0 || h[v] >= h_count_ || !contains(v, h[v]))
                return false;
        return true;
    }

    static void check_target(int h_count) {
        if (h_count > max_target_size)
            throw InvalidInstance("target graphs are limited to 64 vertices");
    }

private:
    std::vector<Mask> masks_;
    int h_count_ = 0;
};

/// Total weight of h: vertex terms plus edge terms, -inf absorbing.
inline ExtendedWeight weight_of(const Graph& G, const Graph& H, const WeightModel& w, const Homomorphism& h) {
    if (!is_homomorphism(G, H, h))
        throw ContractViolation("weight_of needs a homomorphism");
    ExtendedWeight total(0);
    for (Vertex v = 0; v < G.vertex_count(); ++v)
        total += w.vertex_weight(v, h[v]);
    const auto& es = G.edges();
    for (int i = 0; i < static_cast<int>(es.size()); ++i)
        total += w.edge_weight_at(i, w.h_edge_index(h[es[i].u], h[es[i].v]));
    return total;
}

/// Target graph with a weight model whose optimum encodes a graph parameter.
struct WeightedTarget {
    Graph target;
    WeightModel weights;
};

/// loop_edge with weight 1 on every G-edge mapped to ab: optimum = max cut.
inline WeightedTarget weight_model_maxcut(const Graph& G) {
    Graph H = targets::loop_edge();
    WeightModel w(G, H);
    for (const Edge& e : G.edges())
        if (!e.is_loop())
            w.set_edge_weight(e.u, e.v, 0, 1, 1);
    return {H, std::move(w)};
}

/// oct_target with weight 1 on b and c: optimum = largest induced bipartite subgraph.
inline WeightedTarget weight_model_oct(const Graph& G) {
    Graph H = targets::oct_target();
    WeightModel w(G, H);
    for (Vertex v = 0; v < G.vertex_count(); ++v) {
        w.set_vertex_weight(v, 1, 1);
        w.set_vertex_weight(v, 2, 1);
    }
    return {H, std::move(w)};
}

/// loop_pendant with weight 1 on the loopless vertex: optimum = independence number.
inline WeightedTarget weight_model_independent_set(const Graph& G) {
    Graph H = targets::loop_pendant();
    WeightModel w(G, H);
    for (Vertex v = 0; v < G.vertex_count(); ++v)
        w.set_vertex_weight(v, 0, 1);
    return {H, std::move(w)};
}

} // namespace homlab
