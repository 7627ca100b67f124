#pragma once

#include <string>
#include <utility>
#include <vector>

#include "homlab/cnf.hpp"
#include "homlab/graph.hpp"
#include "homlab/reductions/output.hpp"
#include "homlab/targets.hpp"

namespace homlab {

namespace reductions::detail {

/// One literal occurrence, in left-to-right order of occurrence segments.
struct Occurrence {
    int variable; // 1-based
    bool positive;
    int clause;   // 0-based
};

/// Occurrences grouped as positive u_1, negative u_1, positive u_2, ...; clause order within a group.
inline std::vector<Occurrence> ordered_occurrences(const CnfFormula& f) {
    std::vector<Occurrence> out;
    for (int v = 1; v <= f.variables; ++v)
        for (bool pos : {true, false})
            for (int c = 0; c < static_cast<int>(f.clauses.size()); ++c)
                for (int lit : f.clauses[c])
                    if (lit == (pos ? v : -v))
                        out.push_back({v, pos, c});
    return out;
}

/// Lengths that distinguish the path and cycle targets.
struct LshomShape {
    int spine;         // segments in T
    int spine_clause;  // index in T touched by clause pendants
    int spine_column;  // index in T reached by the occurrence paths
    int column_path;   // segments from an occurrence segment to T
    int variable_path; // segments in a variable gadget
    int member_path;   // segments between alpha and beta
};

/// Occurrence segments are vertical columns (x = 10c, shorter to the right),
/// clause segments horizontal rows (y = 10p); pendants run right to the
/// vertical path T at x = 10L + 20. Variable gadgets sit at y = 2 under their
/// columns; membership gadgets sit just above-right of their crossing.
inline ReductionOutput lshom_skeleton(const CnfFormula& f, const LshomShape& shape, Graph target) {
    const auto occ = ordered_occurrences(f);
    const int L = static_cast<int>(occ.size());
    const int m = static_cast<int>(f.clauses.size());
    const Rational spine_x = q(10LL * L + 20);
    auto top = [&](int c) { return q(10LL * m + 12 + 2LL * (L - c)); }; // c is 1-based

    Builder b;
    std::vector<int> xs(L), ys(m), yps(m), ts(shape.spine);
    for (int c = 1; c <= L; ++c) {
        const auto& o = occ[c - 1];
        xs[c - 1] = b.add((o.positive ? "x" : "~x") + std::to_string(o.variable) + "@" + std::to_string(o.clause + 1),
                          seg(q(10 * c), q(0), q(10 * c), top(c)));
    }
    for (int p = 1; p <= m; ++p)
        ys[p - 1] = b.add(name("y", p), seg(q(5), q(10 * p), q(10LL * L + 5), q(10 * p)));
    for (int p = 1; p <= m; ++p)
        yps[p - 1] = b.add(name("y'", p), seg(q(10LL * L + 5), q(10 * p), spine_x, q(10 * p)));

    // T: the clause piece spans the rows, the column piece spans the occurrence heights
    {
        std::vector<Segment> pieces;
        auto vertical = [&](const Rational& lo, const Rational& hi, int count) {
            if (count <= 0)
                return;
            auto ps = polyline_pieces({Point{spine_x, lo}, Point{spine_x, hi}}, count);
            pieces.insert(pieces.end(), ps.begin(), ps.end());
        };
        const Rational rows_end = q(10LL * m + 1), gap_end = q(10LL * m + 10), heights_end = q(10LL * m + 12 + 2LL * L);
        if (shape.spine_clause == shape.spine_column) {
            vertical(q(9), heights_end, 1);
        } else {
            vertical(q(9), rows_end, 1);
            vertical(rows_end, gap_end, shape.spine_column - shape.spine_clause - 1);
            vertical(gap_end, heights_end, 1);
        }
        vertical(heights_end, heights_end + q(10), shape.spine - 1 - shape.spine_column);
        for (int t = 0; t < shape.spine; ++t)
            ts[t] = b.add(name("t", t + 1), pieces[t]);
        for (int t = 0; t + 1 < shape.spine; ++t)
            b.edge(ts[t], ts[t + 1]);
    }
    for (int p = 0; p < m; ++p) {
        b.edge(ys[p], yps[p]);
        b.edge(yps[p], ts[shape.spine_clause]);
        for (int c = 0; c < L; ++c)
            b.edge(ys[p], xs[c]);
    }
    for (int c = 1; c <= L; ++c) {
        const Rational h = top(c) - q(1);
        auto ps = polyline_pieces({Point{q(10 * c), h}, Point{spine_x, h}}, shape.column_path);
        int prev = xs[c - 1];
        for (int j = 0; j < shape.column_path; ++j) {
            int id = b.add(name("q", c, j + 1), ps[j]);
            b.edge(prev, id);
            prev = id;
        }
        b.edge(prev, ts[shape.spine_column]);
    }
    for (int v = 1; v <= f.variables; ++v) {
        int first = -1, last_pos = -1, last = -1;
        for (int c = 1; c <= L; ++c)
            if (occ[c - 1].variable == v) {
                if (first < 0)
                    first = c;
                if (occ[c - 1].positive)
                    last_pos = c;
                last = c;
            }
        const int middle = shape.variable_path - 2;
        const Rational split = q(10LL * last_pos + 5);
        std::vector<Segment> pieces;
        if (middle == 0) {
            pieces.push_back(seg(q(10LL * first - 2), q(2), split, q(2)));
            pieces.push_back(seg(split, q(2), q(10LL * last + 2), q(2)));
        } else {
            pieces.push_back(seg(q(10LL * first - 2), q(2), q(10LL * last_pos + 2), q(2)));
            auto mid = polyline_pieces({Point{q(10LL * last_pos + 2), q(2)}, Point{q(10LL * last_pos + 8), q(2)}}, middle);
            pieces.insert(pieces.end(), mid.begin(), mid.end());
            pieces.push_back(seg(q(10LL * last_pos + 8), q(2), q(10LL * last + 2), q(2)));
        }
        std::vector<int> rs;
        for (int j = 0; j < shape.variable_path; ++j) {
            rs.push_back(b.add(name("r", v, j + 1), pieces[j]));
            if (j > 0)
                b.edge(rs[j - 1], rs[j]);
        }
        for (int c = 1; c <= L; ++c)
            if (occ[c - 1].variable == v)
                b.edge(occ[c - 1].positive ? rs.front() : rs.back(), xs[c - 1]);
    }
    for (int c = 1; c <= L; ++c) {
        const int p = occ[c - 1].clause + 1;
        const Rational cx = q(10 * c), cy = q(10 * p);
        int alpha = b.add(name("alpha", c), seg(cx - q(1), cy + q(2), cx + q(3), cy + q(2)));
        int beta = b.add(name("beta", c), seg(cx + q(2), cy - q(1), cx + q(2), cy + q(3)));
        b.edge(alpha, xs[c - 1]);
        b.edge(beta, ys[p - 1]);
        b.edge(alpha, beta);
        std::vector<Segment> pieces;
        if (shape.member_path == 1)
            pieces.push_back(seg(cx + q(1), cy + q(2), cx + q(2), cy + q(2)));
        else
            pieces = polyline_pieces({Point{cx + q(3), cy + q(2)}, Point{cx + q(3), cy + q(3)}, Point{cx + q(2), cy + q(3)}},
                                     shape.member_path);
        int prev = alpha;
        for (int j = 0; j < shape.member_path; ++j) {
            int id = b.add(name("s", c, j + 1), pieces[j]);
            b.edge(prev, id);
            prev = id;
        }
        b.edge(prev, beta);
    }

    ReductionOutput out;
    out.instance = b.graph();
    out.target = std::move(target);
    out.arrangement = b.arrangement();
    out.claimed_slope_count = 2;
    return out;
}

} // namespace reductions::detail

/// 3-SAT to locally surjective homomorphism into the path 1..k (k >= 4).
///
/// Vertex order: occurrence segments (positive u_1, negative u_1, positive
/// u_2, ...), clause segments y_p, pendants y'_p, the path T = t_1..t_{2k-1},
/// per occurrence the path q_1..q_{k-3} to t_k, per variable the path
/// r_1..r_{2k-3}, per occurrence alpha, beta and s_1..s_{2k-4}.
inline ReductionOutput threesat_to_lshom_path(const CnfFormula& f, int k) {
    if (k < 4)
        throw InvalidInstance("path target needs k >= 4");
    validate_three_sat(f);
    auto out = reductions::detail::lshom_skeleton(f, {2 * k - 1, 0, k - 1, k - 3, 2 * k - 3, 2 * k - 4},
                                                  targets::path(k));
    out.notes = "3-SAT to locally surjective homomorphism into P" + std::to_string(k) + " on an axis-parallel layout";
    return out;
}

/// 3-SAT to locally surjective homomorphism into the cycle 1..k (k >= 3, k != 4).
///
/// Same layout as the path version with T = t_1..t_{k-2}, a single segment x'
/// from each occurrence segment to t_{k-2}, variable paths of k-1 segments and
/// k-2 segments between alpha and beta.
inline ReductionOutput threesat_to_lshom_cycle(const CnfFormula& f, int k) {
    if (k < 3 || k == 4)
        throw InvalidInstance("cycle target needs k >= 3 and k != 4");
    validate_three_sat(f);
    auto out = reductions::detail::lshom_skeleton(f, {k - 2, 0, k - 3, 1, k - 1, k - 2}, targets::cycle(k));
    out.notes = "3-SAT to locally surjective homomorphism into C" + std::to_string(k) + " on an axis-parallel layout";
    return out;
}

/// 3-SAT (exactly three literals per clause) to locally surjective
/// homomorphism into the looped pendant (a - b, loop at b). Abstract graph only.
///
/// Vertex order: x_i, y_i per variable; per clause z, q1..q3, p1..p3; per
/// occurrence (clause order, literal order) s, e, f. Edges x_i y_i, z q_j,
/// q_j p_j, s to p_j of its clause and to x_i (positive) or y_i (negative),
/// s e and e f. With `occurrence_clique` all occurrence segments are pairwise adjacent.
inline ReductionOutput threesat_to_lshom_loopedge(const CnfFormula& f, bool occurrence_clique = false) {
    using reductions::detail::name;
    validate_three_sat(f, true);
    std::vector<std::string> labels;
    std::vector<std::pair<Vertex, Vertex>> es;
    auto add = [&](std::string label) {
        labels.push_back(std::move(label));
        return static_cast<int>(labels.size()) - 1;
    };
    std::vector<int> xs, ys;
    for (int v = 1; v <= f.variables; ++v) {
        xs.push_back(add(name("x", v)));
        ys.push_back(add(name("y", v)));
        es.emplace_back(xs.back(), ys.back());
    }
    std::vector<std::vector<int>> ps;
    for (int c = 1; c <= static_cast<int>(f.clauses.size()); ++c) {
        int z = add(name("z", c));
        ps.emplace_back();
        int qs[3];
        for (int j = 0; j < 3; ++j)
            qs[j] = add(name("q", c, j + 1));
        for (int j = 0; j < 3; ++j) {
            ps.back().push_back(add(name("p", c, j + 1)));
            es.emplace_back(z, qs[j]);
            es.emplace_back(qs[j], ps.back()[j]);
        }
    }
    std::vector<int> occ;
    for (int c = 0; c < static_cast<int>(f.clauses.size()); ++c)
        for (int j = 0; j < 3; ++j) {
            const int lit = f.clauses[c][j];
            int s = add(name("s", c + 1, j + 1));
            int e = add(name("e", c + 1, j + 1));
            int fv = add(name("f", c + 1, j + 1));
            es.emplace_back(s, lit > 0 ? xs[lit - 1] : ys[-lit - 1]);
            es.emplace_back(s, ps[c][j]);
            es.emplace_back(s, e);
            es.emplace_back(e, fv);
            occ.push_back(s);
        }
    if (occurrence_clique)
        for (std::size_t i = 0; i < occ.size(); ++i)
            for (std::size_t j = i + 1; j < occ.size(); ++j)
                es.emplace_back(occ[i], occ[j]);
    ReductionOutput out;
    out.instance = Graph(static_cast<int>(labels.size()), es, labels);
    out.target = targets::loop_pendant();
    out.notes = "3-SAT to locally surjective homomorphism into the looped pendant edge";
    return out;
}

} // namespace homlab
