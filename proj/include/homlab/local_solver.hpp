#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "homlab/budget.hpp"
#include "homlab/combinatorics.hpp"
#include "homlab/graph.hpp"
#include "homlab/homomorphism.hpp"
#include "homlab/local_oracle.hpp"
#include "homlab/separator.hpp"
#include "homlab/weight_model.hpp"

namespace homlab {

struct LocalConfig {
    /// Separator size budget is ceil(separator_constant * sqrt(m)).
    double separator_constant = 2.0;
    std::uint64_t separator_node_budget = 20000;
    /// Regions with at most this many free vertices are enumerated directly.
    int base_size = 2;
    Balance beta{};
    SearchBudget* budget = nullptr;
};

struct LocalStats {
    std::uint64_t regions = 0;
    std::uint64_t separator_steps = 0;
    std::uint64_t guesses = 0;
    std::uint64_t enumerated_regions = 0;
    std::uint64_t memo_hits = 0;
};

namespace injective_detail {

/// A coloured vertex next to a region: its colour and the exact set of
/// colours its neighbours inside the region must receive (one each).
struct Boundary {
    Vertex v;
    Vertex colour;
    Mask image;

    friend auto operator<=>(const Boundary&, const Boundary&) = default;
};

using Assignment = std::vector<std::pair<Vertex, Vertex>>;

/// Masks of the first `k` elements of `from` taken in colex order, for every k-subset.
inline std::vector<Mask> colex_submasks(Mask from, int k) {
    std::vector<int> elems;
    for (Mask m = from; m; m &= m - 1)
        elems.push_back(lowest(m));
    std::vector<Mask> out;
    for (ColexSubsets c(static_cast<int>(elems.size()), k); !c.done(); c.next()) {
        Mask s = 0;
        for (int i : c.current())
            s |= bit(elems[i]);
        out.push_back(s);
    }
    return out;
}

class Solver {
public:
    Solver(const Graph& G, const Graph& H, bool bijective, std::vector<Mask> lists, const LocalConfig& cfg,
           LocalStats& stats)
        : G(G), H(H), bijective(bijective), lists(std::move(lists)), cfg(cfg), stats(stats) {
        for (Vertex a = 0; a < H.vertex_count(); ++a)
            hnbr.push_back(H.neighbor_mask(a));
    }

    /// Colours every vertex of `free` subject to the boundary constraints.
    std::optional<Assignment> solve(const std::vector<Vertex>& free, const std::vector<Boundary>& boundary) {
        ++stats.regions;
        tick();
        if (static_cast<int>(free.size()) <= cfg.base_size)
            return enumerate(free, boundary);
        std::vector<int> local(G.vertex_count(), -1);
        for (int i = 0; i < static_cast<int>(free.size()); ++i)
            local[free[i]] = i;
        std::vector<std::pair<Vertex, Vertex>> es;
        for (int i = 0; i < static_cast<int>(free.size()); ++i)
            for (Vertex u : G.neighbors(free[i]))
                if (local[u] > i)
                    es.emplace_back(i, local[u]);
        Graph sub(static_cast<int>(free.size()), es);
        const int n = sub.vertex_count();
        const int max_size = std::min(
            n, static_cast<int>(std::ceil(cfg.separator_constant * std::sqrt(static_cast<double>(sub.edge_count())))));
        auto usable = [&](const std::optional<Separation>& s) {
            return s && static_cast<int>(s->S.size()) <= max_size && static_cast<int>(s->S.size()) < n;
        };
        std::optional<Separation> sep = heuristic_separator(sub, cfg.beta);
        if (!usable(sep)) {
            SearchBudget b(cfg.separator_node_budget);
            try {
                sep = find_balanced_separator(sub, max_size, cfg.beta, &b);
            } catch (const BudgetExceeded&) {
                sep.reset();
            }
        }
        if (!usable(sep))
            return enumerate(free, boundary);
        ++stats.separator_steps;
        Separation global;
        for (int i : sep->S)
            global.S.push_back(free[i]);
        for (int i : sep->V1)
            global.V1.push_back(free[i]);
        for (int i : sep->V2)
            global.V2.push_back(free[i]);
        return divide(global, boundary);
    }

private:
    std::optional<Assignment> divide(const Separation& sep, const std::vector<Boundary>& boundary) {
        const int n = G.vertex_count();
        // 0: outside, 1: V1, 2: V2, 3: S
        std::vector<char> where(n, 0);
        for (Vertex v : sep.V1)
            where[v] = 1;
        for (Vertex v : sep.V2)
            where[v] = 2;
        for (Vertex v : sep.S)
            where[v] = 3;
        std::vector<Vertex> colour(n, -1);
        for (const Boundary& b : boundary)
            colour[b.v] = b.colour;
        auto count_side = [&](Vertex v, int side) {
            int c = 0;
            for (Vertex u : G.neighbors(v))
                if (where[u] == side)
                    ++c;
            return c;
        };
        const int k = static_cast<int>(sep.S.size());
        std::vector<Boundary> next[2];
        std::map<std::vector<Boundary>, std::optional<Assignment>> memo[2];
        std::optional<Assignment> answer;

        auto recurse = [&]() -> bool {
            Assignment total;
            for (int side = 0; side < 2; ++side) {
                std::vector<Boundary> key = next[side];
                std::sort(key.begin(), key.end());
                auto it = memo[side].find(key);
                if (it == memo[side].end())
                    it = memo[side].emplace(key, solve(side == 0 ? sep.V1 : sep.V2, key)).first;
                else
                    ++stats.memo_hits;
                if (!it->second)
                    return false;
                total.insert(total.end(), it->second->begin(), it->second->end());
            }
            for (Vertex v : sep.S)
                total.emplace_back(v, colour[v]);
            answer = std::move(total);
            return true;
        };

        // split the remaining image of each old boundary vertex between the sides
        auto split_boundary = [&](auto&& self, std::size_t i) -> bool {
            if (i == boundary.size())
                return recurse();
            const Boundary& b = boundary[i];
            Mask used = 0;
            for (Vertex u : G.neighbors(b.v))
                if (where[u] == 3) {
                    Mask c = bit(colour[u]);
                    if ((used & c) || !(b.image & c))
                        return false;
                    used |= c;
                }
            const Mask rest = b.image & ~used;
            const int c1 = count_side(b.v, 1);
            const int c2 = count_side(b.v, 2);
            if (popcount(rest) != c1 + c2)
                return false;
            for (Mask r1 : colex_submasks(rest, c1)) {
                ++stats.guesses;
                if (c1 > 0)
                    next[0].push_back({b.v, b.colour, r1});
                if (c2 > 0)
                    next[1].push_back({b.v, b.colour, rest & ~r1});
                bool ok = self(self, i + 1);
                if (c1 > 0)
                    next[0].pop_back();
                if (c2 > 0)
                    next[1].pop_back();
                if (ok)
                    return true;
            }
            return false;
        };

        // for each separator vertex, the disjoint colour sets of its neighbours in V1 and V2
        auto guess_images = [&](auto&& self, int i) -> bool {
            if (i == k)
                return split_boundary(split_boundary, 0);
            const Vertex s = sep.S[i];
            const Vertex a = colour[s];
            Mask known = 0;
            for (Vertex u : G.neighbors(s))
                if (where[u] == 3 || (where[u] == 0 && colour[u] >= 0)) {
                    Mask c = bit(colour[u]);
                    if (known & c)
                        return false;
                    known |= c;
                }
            const int c1 = count_side(s, 1);
            const int c2 = count_side(s, 2);
            const Mask avail = hnbr[a] & ~known;
            for (Mask t1 : colex_submasks(avail, c1))
                for (Mask t2 : colex_submasks(avail & ~t1, c2)) {
                    if (bijective && (known | t1 | t2) != hnbr[a])
                        continue;
                    ++stats.guesses;
                    if (c1 > 0)
                        next[0].push_back({s, a, t1});
                    if (c2 > 0)
                        next[1].push_back({s, a, t2});
                    bool ok = self(self, i + 1);
                    if (c1 > 0)
                        next[0].pop_back();
                    if (c2 > 0)
                        next[1].pop_back();
                    if (ok)
                        return true;
                }
            return false;
        };

        // colour the separator, respecting lists and edges to coloured vertices
        auto colour_separator = [&](auto&& self, int i) -> bool {
            tick();
            if (i == k)
                return guess_images(guess_images, 0);
            const Vertex s = sep.S[i];
            for (Mask m = lists[s]; m; m &= m - 1) {
                const Vertex a = lowest(m);
                colour[s] = a;
                bool ok = true;
                for (Vertex u : G.neighbors(s))
                    if (colour[u] >= 0 && !(hnbr[a] & bit(colour[u]))) {
                        ok = false;
                        break;
                    }
                if (ok && self(self, i + 1))
                    return true;
            }
            colour[s] = -1;
            return false;
        };
        colour_separator(colour_separator, 0);
        return answer;
    }

    /// Direct search over a small region.
    std::optional<Assignment> enumerate(const std::vector<Vertex>& free, const std::vector<Boundary>& boundary) {
        ++stats.enumerated_regions;
        const int n = G.vertex_count();
        std::vector<Vertex> colour(n, -1);
        std::vector<char> in_region(n, 0);
        for (Vertex v : free)
            in_region[v] = 1;
        std::vector<const Boundary*> by_vertex(n, nullptr);
        for (const Boundary& b : boundary) {
            colour[b.v] = b.colour;
            by_vertex[b.v] = &b;
        }
        auto check_vertex = [&](Vertex w, bool complete) {
            // neighbours of w that are coloured must have distinct colours in N(h(w))
            Mask seen = 0;
            bool all = true;
            for (Vertex u : G.neighbors(w)) {
                if (by_vertex[w] && !in_region[u])
                    continue; // boundary vertex: only its region neighbours are constrained here
                if (colour[u] < 0) {
                    all = false;
                    continue;
                }
                Mask c = bit(colour[u]);
                if (seen & c)
                    return false;
                if (colour[w] >= 0 && !(hnbr[colour[w]] & c))
                    return false;
                seen |= c;
            }
            if (by_vertex[w]) {
                if (seen & ~by_vertex[w]->image)
                    return false;
                if (complete && seen != by_vertex[w]->image)
                    return false;
            } else if (bijective && complete && all && colour[w] >= 0 && seen != hnbr[colour[w]]) {
                return false;
            }
            return true;
        };
        auto rec = [&](auto&& self, std::size_t i) -> bool {
            tick();
            if (i == free.size()) {
                for (Vertex v : free)
                    if (!check_vertex(v, true))
                        return false;
                for (const Boundary& b : boundary)
                    if (!check_vertex(b.v, true))
                        return false;
                return true;
            }
            const Vertex v = free[i];
            for (Mask m = lists[v]; m; m &= m - 1) {
                colour[v] = lowest(m);
                bool ok = check_vertex(v, false);
                for (Vertex u : G.neighbors(v))
                    if (ok && u != v && (in_region[u] || by_vertex[u]))
                        ok = check_vertex(u, false);
                if (ok && self(self, i + 1))
                    return true;
            }
            colour[v] = -1;
            return false;
        };
        if (!rec(rec, 0))
            return std::nullopt;
        Assignment out;
        for (Vertex v : free)
            out.emplace_back(v, colour[v]);
        return out;
    }

    void tick() {
        if (cfg.budget)
            cfg.budget->tick("locally injective solver");
    }

    const Graph& G;
    const Graph& H;
    bool bijective;
    std::vector<Mask> lists;
    const LocalConfig& cfg;
    LocalStats& stats;
    std::vector<Mask> hnbr;
};

inline std::optional<Homomorphism> run(const Graph& G, const Graph& H, bool bijective, const LocalConfig& cfg,
                                       LocalStats* stats) {
    ListAssignment::check_target(H.vertex_count());
    LocalStats local;
    LocalStats& st = stats ? *stats : local;
    const int n = G.vertex_count();
    std::vector<Mask> lists(n, low_bits(H.vertex_count()));
    if (bijective) {
        for (Vertex v = 0; v < n; ++v) {
            Mask keep = 0;
            for (Vertex a = 0; a < H.vertex_count(); ++a)
                if (G.degree(v) == H.degree(a))
                    keep |= bit(a);
            lists[v] = keep;
            if (!keep)
                return std::nullopt;
        }
    } else if (G.max_degree() > H.max_degree()) {
        return std::nullopt;
    }
    Solver solver(G, H, bijective, std::move(lists), cfg, st);
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v)
        all[v] = v;
    auto result = solver.solve(all, {});
    if (!result)
        return std::nullopt;
    Homomorphism h(n, -1);
    for (auto [v, a] : *result)
        h[v] = a;
    return h;
}

} // namespace injective_detail

/// Locally injective homomorphism G -> H, if one exists.
///
/// Rejects when some vertex of G has more neighbours than any vertex of H;
/// otherwise recurses on balanced separators, guessing each separator vertex's
/// colour and the disjoint colour sets its neighbours take on either side.
inline std::optional<Homomorphism> solve_lihom(const Graph& G, const Graph& H, const LocalConfig& cfg = {},
                                               LocalStats* stats = nullptr) {
    return injective_detail::run(G, H, false, cfg, stats);
}

/// Locally bijective homomorphism G -> H, if one exists. Lists are first cut
/// down to targets of equal degree.
inline std::optional<Homomorphism> solve_lbhom(const Graph& G, const Graph& H, const LocalConfig& cfg = {},
                                               LocalStats* stats = nullptr) {
    return injective_detail::run(G, H, true, cfg, stats);
}

} // namespace homlab
