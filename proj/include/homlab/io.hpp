#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "homlab/cnf.hpp"
#include "homlab/errors.hpp"
#include "homlab/extended_weight.hpp"
#include "homlab/geometry.hpp"
#include "homlab/graph.hpp"
#include "homlab/reductions/output.hpp"
#include "homlab/weight_model.hpp"
#include "homlab/whom_solver.hpp"

namespace homlab::io {

namespace detail {

/// Splits the stream into whitespace-separated tokens per line, skipping
/// blank lines and `#` comments (whole-line or trailing). Calls f(tokens, line_number).
template <class F>
void for_each_line(std::istream& in, F&& f) {
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t && t[0] != '#';)
            tok.push_back(std::move(t));
        if (tok.empty())
            continue;
        f(tok, number);
    }
}

inline int to_int(const std::string& s, int line) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty())
        throw MalformedInput("line " + std::to_string(line) + ": expected an integer, got '" + s + "'");
    return v;
}

inline void expect(bool ok, int line, const std::string& msg) {
    if (!ok)
        throw MalformedInput("line " + std::to_string(line) + ": " + msg);
}

} // namespace detail

/// `n <count>`, then `e <u> <v>` lines (0-based, `e v v` is a loop).
/// Optional `label <v> <text>` lines name vertices.
inline Graph read_graph(std::istream& in) {
    std::optional<int> n;
    std::vector<std::pair<Vertex, Vertex>> es;
    std::vector<std::pair<int, std::string>> named;
    detail::for_each_line(in, [&](const std::vector<std::string>& t, int line) {
        if (t[0] == "n") {
            detail::expect(t.size() == 2 && !n, line, "expected a single `n <count>` line");
            n = detail::to_int(t[1], line);
            detail::expect(*n >= 0, line, "negative vertex count");
        } else if (t[0] == "e") {
            detail::expect(n.has_value(), line, "edge before `n` line");
            detail::expect(t.size() == 3, line, "expected `e <u> <v>`");
            int u = detail::to_int(t[1], line), v = detail::to_int(t[2], line);
            detail::expect(u >= 0 && u < *n && v >= 0 && v < *n, line, "edge endpoint out of range");
            es.emplace_back(u, v);
        } else if (t[0] == "label") {
            detail::expect(n.has_value() && t.size() == 3, line, "expected `label <v> <text>`");
            int v = detail::to_int(t[1], line);
            detail::expect(v >= 0 && v < *n, line, "label vertex out of range");
            named.emplace_back(v, t[2]);
        } else {
            detail::expect(false, line, "unknown record '" + t[0] + "'");
        }
    });
    if (!n)
        throw MalformedInput("graph file has no `n` line");
    std::vector<std::string> labels;
    if (!named.empty()) {
        for (int v = 0; v < *n; ++v)
            labels.push_back(std::to_string(v));
        for (auto& [v, s] : named)
            labels[v] = s;
    }
    return Graph(*n, es, std::move(labels));
}

inline void write_graph(std::ostream& out, const Graph& G) {
    out << "n " << G.vertex_count() << '\n';
    for (const Edge& e : G.edges())
        out << "e " << e.u << ' ' << e.v << '\n';
    if (G.has_labels())
        for (Vertex v = 0; v < G.vertex_count(); ++v)
            out << "label " << v << ' ' << G.label(v) << '\n';
}

/// `vw <v> <a> <w>` and `ew <u> <v> <a> <b> <w>`; `w` may be `-inf`.
inline WeightModel read_weights(std::istream& in, const Graph& G, const Graph& H) {
    WeightModel w(G, H);
    detail::for_each_line(in, [&](const std::vector<std::string>& t, int line) {
        if (t[0] == "vw") {
            detail::expect(t.size() == 4, line, "expected `vw <v> <a> <w>`");
            w.set_vertex_weight(detail::to_int(t[1], line), detail::to_int(t[2], line), ExtendedWeight::parse(t[3]));
        } else if (t[0] == "ew") {
            detail::expect(t.size() == 6, line, "expected `ew <u> <v> <a> <b> <w>`");
            w.set_edge_weight(detail::to_int(t[1], line), detail::to_int(t[2], line), detail::to_int(t[3], line),
                              detail::to_int(t[4], line), ExtendedWeight::parse(t[5]));
        } else {
            detail::expect(false, line, "unknown record '" + t[0] + "'");
        }
    });
    return w;
}

/// Writes the non-zero entries only.
inline void write_weights(std::ostream& out, const Graph& G, const Graph& H, const WeightModel& w) {
    for (Vertex v = 0; v < G.vertex_count(); ++v)
        for (Vertex a = 0; a < H.vertex_count(); ++a)
            if (w.vertex_weight(v, a) != ExtendedWeight(0))
                out << "vw " << v << ' ' << a << ' ' << w.vertex_weight(v, a) << '\n';
    const auto& ge = G.edges();
    const auto& he = H.edges();
    for (int i = 0; i < static_cast<int>(ge.size()); ++i)
        for (int j = 0; j < static_cast<int>(he.size()); ++j)
            if (w.edge_weight_at(i, j) != ExtendedWeight(0))
                out << "ew " << ge[i].u << ' ' << ge[i].v << ' ' << he[j].u << ' ' << he[j].v << ' '
                    << w.edge_weight_at(i, j) << '\n';
}

/// `l <v> <a1> <a2> ...`; vertices without a line keep the full list.
inline ListAssignment read_lists(std::istream& in, const Graph& G, const Graph& H) {
    auto L = ListAssignment::full(G, H);
    detail::for_each_line(in, [&](const std::vector<std::string>& t, int line) {
        detail::expect(t[0] == "l" && t.size() >= 2, line, "expected `l <v> <a1> ...`");
        int v = detail::to_int(t[1], line);
        detail::expect(v >= 0 && v < G.vertex_count(), line, "list vertex out of range");
        std::vector<Vertex> as;
        for (std::size_t i = 2; i < t.size(); ++i)
            as.push_back(detail::to_int(t[i], line));
        L.set(v, as);
    });
    return L;
}

/// Writes only the lists that are not full.
inline void write_lists(std::ostream& out, const ListAssignment& L) {
    const Mask all = low_bits(L.h_count());
    for (Vertex v = 0; v < L.size(); ++v) {
        if (L.mask(v) == all)
            continue;
        out << "l " << v;
        for (Vertex a : L.list(v))
            out << ' ' << a;
        out << '\n';
    }
}

/// `s <x1> <y1> <x2> <y2>` with integer or `p/q` coordinates; id is line order.
/// An optional fifth token is the label.
inline geometry::SegmentArrangement read_segments(std::istream& in) {
    geometry::SegmentArrangement arr;
    detail::for_each_line(in, [&](const std::vector<std::string>& t, int line) {
        detail::expect(t[0] == "s" && (t.size() == 5 || t.size() == 6), line, "expected `s <x1> <y1> <x2> <y2>`");
        geometry::Segment s(geometry::parse_rational(t[1]), geometry::parse_rational(t[2]),
                            geometry::parse_rational(t[3]), geometry::parse_rational(t[4]));
        arr.add(std::move(s), t.size() == 6 ? t[5] : std::string());
    });
    return arr;
}

inline void write_segments(std::ostream& out, const geometry::SegmentArrangement& arr) {
    using geometry::to_string;
    for (int i = 0; i < arr.size(); ++i) {
        const auto& s = arr[i];
        out << "s " << to_string(s.p().x) << ' ' << to_string(s.p().y) << ' ' << to_string(s.q().x) << ' '
            << to_string(s.q().y);
        if (!arr.label(i).empty())
            out << ' ' << arr.label(i);
        out << '\n';
    }
}

/// `m <v> <a>` lines sorted by v.
inline void write_witness(std::ostream& out, const Homomorphism& h) {
    for (Vertex v = 0; v < static_cast<int>(h.size()); ++v)
        out << "m " << v << ' ' << h[v] << '\n';
}

/// `optimum <w|-inf|infeasible>` followed by the witness.
inline void write_result(std::ostream& out, const WhomResult& r) {
    out << "optimum " << r.optimum_text() << '\n';
    if (r.feasible)
        write_witness(out, r.witness);
}

/// `yes` plus the witness, or `no`.
inline void write_decision(std::ostream& out, const std::optional<Homomorphism>& h) {
    out << (h ? "yes" : "no") << '\n';
    if (h)
        write_witness(out, *h);
}

/// Summary record of a generated instance: size, threshold or decision marker, slopes, notes.
inline void write_info(std::ostream& out, const ReductionOutput& r) {
    out << "vertices " << r.instance.vertex_count() << '\n';
    out << "edges " << r.instance.edge_count() << '\n';
    if (r.threshold)
        out << "threshold " << *r.threshold << '\n';
    else
        out << "decision locally-surjective\n";
    if (r.claimed_slope_count)
        out << "slopes " << *r.claimed_slope_count << '\n';
    out << "notes " << r.notes << '\n';
}

} // namespace homlab::io
