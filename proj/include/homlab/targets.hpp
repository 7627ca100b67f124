#pragma once

#include <string>
#include <utility>
#include <vector>

#include "homlab/errors.hpp"
#include "homlab/graph.hpp"

namespace homlab::targets {

namespace detail {
inline std::vector<std::string> numbered(int k) {
    std::vector<std::string> out;
    for (int i = 1; i <= k; ++i)
        out.push_back(std::to_string(i));
    return out;
}

inline void require(bool ok, const std::string& msg) {
    if (!ok)
        throw InvalidInstance(msg);
}
} // namespace detail

/// Path 1-2-...-k.
inline Graph path(int k) {
    detail::require(k >= 1, "path needs k >= 1");
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i + 1 < k; ++i)
        es.emplace_back(i, i + 1);
    return Graph(k, es, detail::numbered(k));
}

/// Cycle 1-2-...-k-1.
inline Graph cycle(int k) {
    detail::require(k >= 3, "cycle needs k >= 3");
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < k; ++i)
        es.emplace_back(i, (i + 1) % k);
    return Graph(k, es, detail::numbered(k));
}

inline Graph complete(int k) {
    detail::require(k >= 1, "complete graph needs k >= 1");
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            es.emplace_back(i, j);
    return Graph(k, es, detail::numbered(k));
}

/// Complete graph with a loop on every vertex.
inline Graph reflexive_complete(int k) {
    detail::require(k >= 1, "complete graph needs k >= 1");
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
            es.emplace_back(i, j);
    return Graph(k, es, detail::numbered(k));
}

/// Complement of the path 1-...-k; locally injective maps into it are k-L(2,1)-labelings.
inline Graph complement_of_path(int k) {
    detail::require(k >= 1, "complement of path needs k >= 1");
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < k; ++i)
        for (int j = i + 2; j < k; ++j)
            es.emplace_back(i, j);
    return Graph(k, es, detail::numbered(k));
}

/// a, b with edges aa, ab, bb (MaxCut target).
inline Graph loop_edge() { return Graph(2, {{0, 0}, {0, 1}, {1, 1}}, {"a", "b"}); }

/// a, b with edges ab, bb (Independent Set target; a is the loopless vertex).
inline Graph loop_pendant() { return Graph(2, {{0, 1}, {1, 1}}, {"a", "b"}); }

/// Looped a adjacent to b and c, plus edge bc (odd cycle transversal target).
inline Graph oct_target() { return Graph(3, {{0, 0}, {0, 1}, {0, 2}, {1, 2}}, {"a", "b", "c"}); }

/// Cycle a-b-c-d-a.
inline Graph c4() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {"a", "b", "c", "d"}); }

/// The seven minimal graphs in which two distinct vertices share two neighbours,
/// indexed 0..6 for (a)..(g):
/// (a) two adjacent looped vertices, (b) triangle with one loop, (c) C4,
/// (d) C4 with one loop, (e) C4 with loops on two opposite vertices,
/// (f) diamond, (g) K4.
inline Graph forbidden(int index) {
    switch (index) {
    case 0: return Graph(2, {{0, 0}, {0, 1}, {1, 1}});
    case 1: return Graph(3, {{0, 0}, {0, 1}, {0, 2}, {1, 2}});
    case 2: return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    case 3: return Graph(4, {{0, 0}, {0, 1}, {1, 2}, {2, 3}, {3, 0}});
    case 4: return Graph(4, {{0, 0}, {2, 2}, {0, 1}, {1, 2}, {2, 3}, {3, 0}});
    case 5: return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
    case 6: return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    default: throw InvalidInstance("forbidden graph index must be 0..6");
    }
}

inline constexpr int forbidden_count = 7;

inline char forbidden_name(int index) { return static_cast<char>('a' + index); }

} // namespace homlab::targets
