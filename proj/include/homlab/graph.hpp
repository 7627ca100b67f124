#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homlab/errors.hpp"

namespace homlab {

using Vertex = int;

/// Unordered vertex pair with u <= v; u == v is a loop.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    bool is_loop() const { return u == v; }
    Vertex other(Vertex x) const { return x == u ? v : u; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph that may carry loops.
///
/// A loop at v puts v into N(v) and adds one to deg(v). Duplicate edges are
/// merged. The graph is immutable after construction.
class Graph {
public:
    Graph() = default;

    explicit Graph(int vertex_count) : Graph(vertex_count, {}) {}

    Graph(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges,
          std::vector<std::string> labels = {})
        : n_(vertex_count), labels_(std::move(labels)) {
        if (vertex_count < 0)
            throw MalformedInput("negative vertex count");
        if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
            throw MalformedInput("label count does not match vertex count");
        edges_.reserve(edges.size());
        for (auto [a, b] : edges) {
            check_vertex(a);
            check_vertex(b);
            edges_.emplace_back(a, b);
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

        words_ = (static_cast<std::size_t>(n_) + 63) / 64;
        matrix_.assign(static_cast<std::size_t>(n_) * words_, 0);
        adj_.assign(n_, {});
        for (const Edge& e : edges_) {
            set_bit(e.u, e.v);
            set_bit(e.v, e.u);
            adj_[e.u].push_back(e.v);
            if (!e.is_loop())
                adj_[e.v].push_back(e.u);
        }
        for (auto& row : adj_)
            std::sort(row.begin(), row.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<Vertex>& neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    bool adjacent(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        return (matrix_[u * words_ + v / 64] >> (v % 64)) & 1U;
    }

    bool has_loop(Vertex v) const { return adjacent(v, v); }

    bool has_loops() const {
        return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
    }

    int max_degree() const {
        int d = 0;
        for (const auto& row : adj_)
            d = std::max(d, static_cast<int>(row.size()));
        return d;
    }

    int min_degree() const {
        if (n_ == 0)
            return 0;
        int d = n_ + 1;
        for (const auto& row : adj_)
            d = std::min(d, static_cast<int>(row.size()));
        return d;
    }

    /// Neighbourhood as a bitmask; only for graphs with at most 64 vertices.
    std::uint64_t neighbor_mask(Vertex v) const {
        if (n_ > 64)
            throw ContractViolation("neighbor_mask needs at most 64 vertices");
        check_vertex(v);
        return matrix_[v];
    }

    /// Position of edge uv in edges(), if present.
    std::optional<int> edge_index(Vertex u, Vertex v) const {
        Edge e(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e)
            return std::nullopt;
        return static_cast<int>(it - edges_.begin());
    }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }

    std::string label(Vertex v) const {
        check_vertex(v);
        return labels_.empty() ? std::to_string(v) : labels_[v];
    }

    std::optional<Vertex> find_label(const std::string& name) const {
        for (int v = 0; v < n_; ++v)
            if (label(v) == name)
                return v;
        return std::nullopt;
    }

    /// Subgraph induced by `vs`; vertex i of the result is vs[i].
    Graph induced(const std::vector<Vertex>& vs) const {
        std::vector<std::pair<Vertex, Vertex>> es;
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i; j < vs.size(); ++j)
                if (adjacent(vs[i], vs[j]))
                    es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        std::vector<std::string> ls;
        if (has_labels())
            for (Vertex v : vs)
                ls.push_back(labels_[v]);
        return Graph(static_cast<int>(vs.size()), es, std::move(ls));
    }

    std::vector<std::pair<Vertex, Vertex>> edge_pairs() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        out.reserve(edges_.size());
        for (const Edge& e : edges_)
            out.emplace_back(e.u, e.v);
        return out;
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    std::vector<std::vector<Vertex>> components() const {
        std::vector<int> comp(n_, -1);
        std::vector<std::vector<Vertex>> out;
        for (Vertex s = 0; s < n_; ++s) {
            if (comp[s] >= 0)
                continue;
            std::vector<Vertex> cur{s};
            comp[s] = static_cast<int>(out.size());
            for (std::size_t i = 0; i < cur.size(); ++i)
                for (Vertex w : adj_[cur[i]])
                    if (comp[w] < 0) {
                        comp[w] = comp[s];
                        cur.push_back(w);
                    }
            std::sort(cur.begin(), cur.end());
            out.push_back(std::move(cur));
        }
        return out;
    }

    bool is_connected() const { return n_ <= 1 || components().size() == 1; }

    /// Two-colouring (0/1 per vertex, each component's smallest vertex gets 0), if bipartite.
    std::optional<std::vector<int>> bipartition() const {
        std::vector<int> side(n_, -1);
        for (Vertex s = 0; s < n_; ++s) {
            if (side[s] >= 0)
                continue;
            side[s] = 0;
            std::vector<Vertex> stack{s};
            while (!stack.empty()) {
                Vertex x = stack.back();
                stack.pop_back();
                for (Vertex y : adj_[x]) {
                    if (side[y] < 0) {
                        side[y] = 1 - side[x];
                        stack.push_back(y);
                    } else if (side[y] == side[x]) {
                        return std::nullopt;
                    }
                }
            }
        }
        return side;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw MalformedInput("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
    }

    void set_bit(Vertex r, Vertex c) { matrix_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> matrix_;
    std::vector<std::string> labels_;
};

/// Mapping V(G) -> V(H) stored as image per vertex.
using Homomorphism = std::vector<Vertex>;

} // namespace homlab
