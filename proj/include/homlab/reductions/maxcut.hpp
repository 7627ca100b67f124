#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "homlab/cnf.hpp"
#include "homlab/graph.hpp"
#include "homlab/reductions/output.hpp"
#include "homlab/targets.hpp"
#include "homlab/weight_model.hpp"

namespace homlab {

/// A graph with a cut-size threshold.
struct CutInstance {
    Graph graph;
    std::int64_t threshold = 0;
};

/// Positive NAE formula to max cut. Vertices: x_1..x_n for the variables, then
/// l1 r1 l2 r2 l3 r3 for each 3-clause in input order. A 2-clause is an edge,
/// a 3-clause closes the 9-cycle l1 x_i r1 l2 x_j r2 l3 x_k r3.
/// Satisfiable iff the cut threshold m2 + 8*m3 is met.
inline CutInstance posnae3sat_to_maxcut(const CnfFormula& f) {
    if (f.dialect != CnfDialect::pos_nae_3sat)
        throw InvalidInstance("max cut reduction needs a positive NAE formula");
    validate_pos_nae(f);
    for (int v = 1; v <= f.variables; ++v)
        if (f.occurrences(v) > 3)
            throw InvalidInstance("variable " + std::to_string(v) + " occurs more than 3 times");
    std::vector<std::string> labels;
    for (int v = 1; v <= f.variables; ++v)
        labels.push_back(reductions::detail::name("x", v));
    std::vector<std::pair<Vertex, Vertex>> es;
    int gadget = 0;
    for (const auto& cl : f.clauses) {
        if (cl.size() == 2) {
            es.emplace_back(cl[0] - 1, cl[1] - 1);
            continue;
        }
        ++gadget;
        const int base = static_cast<int>(labels.size());
        for (const char* side : {"l1.", "r1.", "l2.", "r2.", "l3.", "r3."})
            labels.push_back(side + std::to_string(gadget));
        const std::vector<Vertex> cyc{base,         cl[0] - 1, base + 1, base + 2, cl[1] - 1,
                                      base + 3,     base + 4,  cl[2] - 1, base + 5};
        for (std::size_t i = 0; i < cyc.size(); ++i)
            es.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
    }
    const int n = static_cast<int>(labels.size());
    return {Graph(n, es, labels), f.clause_count(2) + 8 * f.clause_count(3)};
}

/// Adds a pendant v' = v + n to every vertex. Cut >= k in G iff F has a
/// bisection of size >= n + k; every maximum cut of F is a bisection.
inline CutInstance maxcut_to_bisection(const Graph& G, std::int64_t k) {
    if (G.has_loops())
        throw InvalidInstance("max cut input must be loopless");
    const int n = G.vertex_count();
    auto es = G.edge_pairs();
    std::vector<std::string> labels;
    for (Vertex v = 0; v < n; ++v)
        labels.push_back(reductions::detail::name("v", v));
    for (Vertex v = 0; v < n; ++v) {
        es.emplace_back(v, n + v);
        labels.push_back(reductions::detail::name("v", v) + "'");
    }
    return {Graph(2 * n, es, labels), n + k};
}

/// Max bisection (of a graph whose maximum cuts are bisections) to a weighted
/// homomorphism instance into the looped edge with the max cut weights.
///
/// Segments: x_1..x_n (a pencil through (-D, 0)), y_1..y_n (a pencil through
/// (0, -D)), then 16 parallel segments D_i across each crossing x_i y_i, then
/// for each edge v_i v_j (i < j) the pairs alpha_ij, beta_ij at x_i y_j and
/// alpha_ji, beta_ji at x_j y_i. alpha touches x and beta touches y.
/// Size 18n + 4m; threshold n^2 + 32n + 4m + 2k.
inline ReductionOutput bisection_to_maxcut_segments(const Graph& G, std::int64_t k) {
    using namespace reductions::detail;
    if (G.has_loops())
        throw InvalidInstance("bisection input must be loopless");
    const int n = G.vertex_count();
    const auto es = G.edge_pairs();
    const long long m = static_cast<long long>(es.size());
    const Rational D = q(1000LL * std::max(n, 1));
    const Rational far = q(n + 1);

    // crossing of x_i and y_j (1-based), x_i: y = i(x + D)/D, y_j: x = j(y + D)/D
    auto crossing = [&](int i, int j) {
        Rational y = q(i) * D * (q(j) + D) / (D * D - q(i) * q(j));
        return Point{q(j) * (y + D) / D, y};
    };

    Builder b;
    std::vector<int> xs(n), ys(n);
    for (int i = 1; i <= n; ++i)
        xs[i - 1] = b.add(name("x", i), seg(-D, q(0), far, q(i) * (far + D) / D));
    for (int j = 1; j <= n; ++j)
        ys[j - 1] = b.add(name("y", j), seg(q(0), -D, q(j) * (far + D) / D, far));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            b.edge(xs[i], ys[j]);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            b.edge(xs[i], xs[j]);
            b.edge(ys[i], ys[j]);
        }
    for (int i = 1; i <= n; ++i) {
        const Point c = crossing(i, i);
        const Rational e = q(1, 50);
        for (int t = 1; t <= 16; ++t) {
            const Rational d = q(t, 100);
            int id = b.add(name("D", i, t), seg(c.x + d + e, c.y - e, c.x - e, c.y + d + e));
            b.edge(id, xs[i - 1]);
            b.edge(id, ys[i - 1]);
        }
    }
    auto edge_gadget = [&](int i, int j) {
        const Point c = crossing(i + 1, j + 1);
        int alpha = b.add(name("alpha", i + 1, j + 1), seg(c.x - q(1, 10), c.y - q(1, 20), c.x - q(1, 10), c.y + q(3, 20)));
        int beta = b.add(name("beta", i + 1, j + 1), seg(c.x - q(3, 20), c.y + q(1, 10), c.x + q(1, 20), c.y + q(1, 10)));
        b.edge(alpha, xs[i]);
        b.edge(beta, ys[j]);
        b.edge(alpha, beta);
    };
    for (auto [u, v] : es) {
        edge_gadget(u, v);
        edge_gadget(v, u);
    }

    ReductionOutput out;
    out.instance = b.graph();
    out.target = targets::loop_edge();
    out.weights = weight_model_maxcut(out.instance).weights;
    out.lists = ListAssignment::full(out.instance, out.target);
    out.threshold = ExtendedWeight(static_cast<std::int64_t>(n) * n + 32LL * n + 4 * m + 2 * k);
    out.arrangement = b.arrangement();
    out.notes = "max bisection to weighted homomorphism into the looped edge (segment grid with 16-segment vertex "
                "gadgets)";
    return out;
}

} // namespace homlab
