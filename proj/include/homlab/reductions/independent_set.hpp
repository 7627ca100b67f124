#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "homlab/graph.hpp"
#include "homlab/reductions/output.hpp"
#include "homlab/targets.hpp"
#include "homlab/weight_model.hpp"

namespace homlab {

/// Independent set to odd cycle transversal (weighted homomorphism into the
/// looped-apex triangle with weight 1 on b and c).
///
/// Axis-parallel grid: x_i horizontal at y = 10i, y_j vertical at x = 10j.
/// Vertices: x_1..x_n, y_1..y_n, then d1..d7 at each crossing x_i y_i, then
/// for each edge v_i v_j (i < j) the segments e_ij (at x_i y_j) and e_ji.
/// Each e lies on its y segment and crosses its x segment. In a gadget both
/// x and y lie on a 5-cycle avoiding the other, so a gadget next to exactly
/// one colour-a segment still needs an a of its own.
/// Size 9n + 2m; threshold 7n + 2m + k; two slopes.
inline ReductionOutput is_to_oct_segments(const Graph& G, std::int64_t k) {
    using namespace reductions::detail;
    if (G.has_loops())
        throw InvalidInstance("independent set input must be loopless");
    const int n = G.vertex_count();
    const auto es = G.edge_pairs();
    const long long m = static_cast<long long>(es.size());
    const Rational len = q(10LL * n + 10);

    Builder b;
    std::vector<int> xs(n), ys(n);
    for (int i = 1; i <= n; ++i)
        xs[i - 1] = b.add(name("x", i), seg(q(0), q(10 * i), len, q(10 * i)));
    for (int j = 1; j <= n; ++j)
        ys[j - 1] = b.add(name("y", j), seg(q(10 * j), q(0), q(10 * j), len));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            b.edge(xs[i], ys[j]);

    // vertex gadget in tenths relative to the crossing: vertical (u; v1..v2) or horizontal (v; u1..u2)
    struct Piece {
        bool vertical;
        int at, from, to;
    };
    const Piece gadget[7] = {
        {true, -18, -6, 8},   // d1: crosses x, overlaps d7
        {true, -8, -6, 11},   // d2: crosses x and d6
        {false, 14, -22, 6},  // d3: crosses y and d7
        {false, 21, -9, 6},   // d4: crosses y, meets d5 end to end
        {false, 21, -24, -9}, // d5: crosses d7
        {false, 10, -24, 0},  // d6: crosses d2 and d7, ends on y
        {true, -18, 0, 24},   // d7: ends on x
    };
    const std::pair<int, int> inner[] = {{1, 5}, {5, 6}, {2, 6}, {4, 6}, {0, 6}, {3, 4}};
    for (int i = 1; i <= n; ++i) {
        const Rational cx = q(10 * i), cy = q(10 * i);
        int ids[7];
        for (int t = 0; t < 7; ++t) {
            const Piece& p = gadget[t];
            ids[t] = p.vertical
                         ? b.add(name("d", i, t + 1), seg(cx + q(p.at, 10), cy + q(p.from, 10), cx + q(p.at, 10), cy + q(p.to, 10)))
                         : b.add(name("d", i, t + 1), seg(cx + q(p.from, 10), cy + q(p.at, 10), cx + q(p.to, 10), cy + q(p.at, 10)));
        }
        b.edge(ids[0], xs[i - 1]);
        b.edge(ids[1], xs[i - 1]);
        b.edge(ids[2], ys[i - 1]);
        b.edge(ids[3], ys[i - 1]);
        b.edge(ids[6], xs[i - 1]);
        b.edge(ids[5], ys[i - 1]);
        for (auto [s, t] : inner)
            b.edge(ids[s], ids[t]);
    }
    auto edge_gadget = [&](int i, int j) {
        const Rational cx = q(10 * (j + 1)), cy = q(10 * (i + 1));
        int e = b.add(name("e", i + 1, j + 1), seg(cx, cy - q(1), cx, cy + q(1)));
        b.edge(e, xs[i]);
        b.edge(e, ys[j]);
    };
    for (auto [u, v] : es) {
        edge_gadget(u, v);
        edge_gadget(v, u);
    }

    ReductionOutput out;
    out.instance = b.graph();
    out.target = targets::oct_target();
    out.weights = weight_model_oct(out.instance).weights;
    out.lists = ListAssignment::full(out.instance, out.target);
    out.threshold = ExtendedWeight(7LL * n + 2 * m + k);
    out.arrangement = b.arrangement();
    out.claimed_slope_count = 2;
    out.notes = "independent set to odd cycle transversal on an axis-parallel grid with 7-segment vertex gadgets";
    return out;
}

/// Independent set to weighted list homomorphism into C4 (a b c d), encoded
/// entirely in weights on the grid K_{n,n}.
///
/// Vertices x_1..x_n (horizontal at y = i) then y_1..y_n (vertical at x = j).
/// Weight 1 on a and b. Edge x_i y_i allows only ab and cd; for each edge
/// v_i v_j of G, the edges x_i y_j and x_j y_i forbid ab. Threshold 2k.
inline ReductionOutput is_to_whom_c4(const Graph& G, std::int64_t k) {
    using namespace reductions::detail;
    if (G.has_loops())
        throw InvalidInstance("independent set input must be loopless");
    const int n = G.vertex_count();
    Builder b;
    for (int i = 1; i <= n; ++i)
        b.add(name("x", i), seg(q(0), q(i), q(n + 1), q(i)));
    for (int j = 1; j <= n; ++j)
        b.add(name("y", j), seg(q(j), q(0), q(j), q(n + 1)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            b.edge(i, n + j);

    ReductionOutput out;
    out.instance = b.graph();
    out.target = targets::c4();
    constexpr Vertex a = 0, bb = 1, c = 2, d = 3;
    WeightModel w(out.instance, out.target);
    for (Vertex v = 0; v < 2 * n; ++v) {
        w.set_vertex_weight(v, a, 1);
        w.set_vertex_weight(v, bb, 1);
    }
    for (int i = 0; i < n; ++i) {
        w.set_edge_weight(i, n + i, bb, c, NEG_INF);
        w.set_edge_weight(i, n + i, d, a, NEG_INF);
    }
    for (auto [u, v] : G.edge_pairs()) {
        w.set_edge_weight(u, n + v, a, bb, NEG_INF);
        w.set_edge_weight(v, n + u, a, bb, NEG_INF);
    }
    out.weights = std::move(w);
    out.lists = ListAssignment::full(out.instance, out.target);
    out.threshold = ExtendedWeight(2 * k);
    out.arrangement = b.arrangement();
    out.claimed_slope_count = 2;
    out.notes = "independent set to weighted list homomorphism into C4 on a complete bipartite grid";
    return out;
}

} // namespace homlab
