#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "homlab/budget.hpp"
#include "homlab/errors.hpp"
#include "homlab/extended_weight.hpp"
#include "homlab/graph.hpp"
#include "homlab/homomorphism.hpp"
#include "homlab/property_star.hpp"
#include "homlab/separator.hpp"
#include "homlab/weight_model.hpp"

namespace homlab {

/// Weighted list homomorphism instance. An unset threshold means optimisation.
struct WhomInstance {
    Graph G;
    Graph H;
    WeightModel weights;
    ListAssignment lists;
    std::optional<ExtendedWeight> threshold;

    WhomInstance() = default;

    WhomInstance(Graph g, Graph h)
        : G(std::move(g)), H(std::move(h)), weights(G, H), lists(ListAssignment::full(G, H)) {}

    WhomInstance(Graph g, Graph h, WeightModel w)
        : G(std::move(g)), H(std::move(h)), weights(std::move(w)), lists(ListAssignment::full(G, H)) {}

    WhomInstance(Graph g, Graph h, WeightModel w, ListAssignment l)
        : G(std::move(g)), H(std::move(h)), weights(std::move(w)), lists(std::move(l)) {}

    void validate() const {
        ListAssignment::check_target(H.vertex_count());
        if (!weights.fits(G, H))
            throw MalformedInput("weight model does not match G and H");
        if (lists.size() != G.vertex_count() || lists.h_count() != H.vertex_count())
            throw MalformedInput("list assignment does not match G and H");
    }
};

/// Optimum over list-respecting homomorphisms; `feasible` is false when none exists.
struct WhomResult {
    bool feasible = false;
    ExtendedWeight optimum = NEG_INF;
    Homomorphism witness;

    bool meets(ExtendedWeight threshold) const { return feasible && optimum >= threshold; }

    std::string optimum_text() const { return feasible ? optimum.to_string() : std::string("infeasible"); }
};

enum class SeparatorStrategy { heuristic_first, exhaustive_first };

struct WhomConfig {
    /// Separator size budget is ceil(separator_constant * n^(2/3)).
    double separator_constant = 4.0;
    SeparatorStrategy strategy = SeparatorStrategy::heuristic_first;
    /// Subsets the exhaustive separator search may test per call.
    std::uint64_t separator_node_budget = 20000;
    /// Subproblems with at most this many vertices are enumerated directly.
    int base_size = 2;
    Balance beta{};
    /// Optional global budget (nodes and/or deadline) for the whole solve.
    SearchBudget* budget = nullptr;
};

/// Counters describing which steps a solve used.
struct WhomStats {
    std::uint64_t calls = 0;
    std::uint64_t branch_steps = 0;
    std::uint64_t separator_steps = 0;
    std::uint64_t separator_colourings = 0;
    std::uint64_t enumerated_leaves = 0;
    std::uint64_t oracle_fallbacks = 0;
    std::uint64_t memo_hits = 0;
    std::size_t largest_separator = 0;
};

/// Output of list preprocessing: the reduced instance lives on G[kept].
struct Preprocessed {
    bool feasible = true;
    WhomInstance reduced;
    std::vector<Vertex> kept;
    Homomorphism partial; // -1 where unassigned
    ExtendedWeight accumulated = 0;
};

namespace whom_detail {

using Optimum = std::optional<ExtendedWeight>; // nullopt: infeasible

inline bool better(const Optimum& a, const Optimum& b) {
    if (!a)
        return false;
    if (!b)
        return true;
    return *a > *b;
}

inline Optimum add(const Optimum& a, const Optimum& b) {
    if (!a || !b)
        return std::nullopt;
    return *a + *b;
}

struct Result {
    Optimum value;
    std::vector<std::pair<Vertex, Vertex>> assign; // (original vertex, colour)
};

/// A residual subproblem: an induced subgraph of G with reduced lists and
/// vertex weights into which every already-coloured neighbour has been folded.
struct Sub {
    std::vector<Vertex> orig;
    std::vector<Mask> list;
    std::vector<ExtendedWeight> vw;                   // size() * nh
    std::vector<std::vector<std::pair<int, int>>> adj; // (local neighbour, G-edge index)

    int size() const { return static_cast<int>(orig.size()); }
};

class Context {
public:
    Context(const WhomInstance& inst, const WhomConfig& cfg, WhomStats& stats)
        : G(inst.G), H(inst.H), w(inst.weights), cfg(cfg), stats(stats), nh(inst.H.vertex_count()) {
        hnbr.resize(nh);
        hedge.assign(static_cast<std::size_t>(nh) * nh, -1);
        for (Vertex a = 0; a < nh; ++a)
            hnbr[a] = H.neighbor_mask(a);
        for (int i = 0; i < H.edge_count(); ++i) {
            const Edge& e = H.edges()[i];
            hedge[e.u * nh + e.v] = i;
            hedge[e.v * nh + e.u] = i;
        }
        star = has_property_star(H);
    }

    ExtendedWeight ew(int gedge, Vertex a, Vertex b) const { return w.edge_weight_at(gedge, hedge[a * nh + b]); }

    /// Root subproblem: loops of G are folded into the lists and vertex weights.
    Sub root(const ListAssignment& L) const {
        Sub s;
        const int n = G.vertex_count();
        s.orig.resize(n);
        s.list.resize(n);
        s.vw.resize(static_cast<std::size_t>(n) * nh);
        s.adj.assign(n, {});
        for (Vertex v = 0; v < n; ++v) {
            s.orig[v] = v;
            s.list[v] = L.mask(v);
            for (Vertex a = 0; a < nh; ++a)
                s.vw[v * nh + a] = w.vertex_weight(v, a);
        }
        for (int i = 0; i < G.edge_count(); ++i) {
            const Edge& e = G.edges()[i];
            if (e.is_loop()) {
                Mask keep = 0;
                for (Mask m = s.list[e.u]; m; m &= m - 1) {
                    Vertex a = lowest(m);
                    if (hnbr[a] & bit(a)) {
                        keep |= bit(a);
                        s.vw[e.u * nh + a] += ew(i, a, a);
                    }
                }
                s.list[e.u] = keep;
            } else {
                s.adj[e.u].emplace_back(e.v, i);
                s.adj[e.v].emplace_back(e.u, i);
            }
        }
        return s;
    }

    /// Subproblem on the given local vertices (sorted), with every other
    /// vertex coloured by `colour` (-1 = not coloured and not adjacent).
    Sub restrict(const Sub& s, const std::vector<int>& keep, const std::vector<Vertex>& colour) const {
        Sub t;
        const int k = static_cast<int>(keep.size());
        std::vector<int> local(s.size(), -1);
        for (int i = 0; i < k; ++i)
            local[keep[i]] = i;
        t.orig.resize(k);
        t.list.resize(k);
        t.vw.resize(static_cast<std::size_t>(k) * nh);
        t.adj.assign(k, {});
        for (int i = 0; i < k; ++i) {
            int x = keep[i];
            t.orig[i] = s.orig[x];
            t.list[i] = s.list[x];
            std::copy(s.vw.begin() + static_cast<std::ptrdiff_t>(x) * nh,
                      s.vw.begin() + static_cast<std::ptrdiff_t>(x + 1) * nh, t.vw.begin() + static_cast<std::ptrdiff_t>(i) * nh);
            for (auto [y, e] : s.adj[x]) {
                if (local[y] >= 0) {
                    t.adj[i].emplace_back(local[y], e);
                } else if (colour[y] >= 0) {
                    fold(t, i, colour[y], e);
                }
            }
        }
        return t;
    }

    /// Fixes neighbour colour c across G-edge e for local vertex x.
    void fold(Sub& t, int x, Vertex c, int e) const {
        Mask keep = 0;
        for (Mask m = t.list[x] & hnbr[c]; m; m &= m - 1) {
            Vertex b = lowest(m);
            keep |= bit(b);
            t.vw[x * nh + b] += ew(e, c, b);
        }
        t.list[x] = keep;
    }

    /// Arc consistency followed by singleton elimination, to a fixed point.
    /// Eliminated vertices go to `assigned`; their weight is added to `acc`.
    /// Returns false if some list empties.
    bool preprocess(Sub& s, std::vector<std::pair<Vertex, Vertex>>& assigned, ExtendedWeight& acc) const {
        while (true) {
            if (!arc_consistency(s))
                return false;
            std::vector<int> singles;
            for (int v = 0; v < s.size(); ++v)
                if (popcount(s.list[v]) == 1)
                    singles.push_back(v);
            if (singles.empty())
                return true;
            std::vector<Vertex> colour(s.size(), -1);
            std::vector<int> keep;
            for (int v = 0; v < s.size(); ++v) {
                if (popcount(s.list[v]) == 1) {
                    Vertex a = lowest(s.list[v]);
                    colour[v] = a;
                    assigned.emplace_back(s.orig[v], a);
                    acc += s.vw[v * nh + a];
                } else {
                    keep.push_back(v);
                }
            }
            // edges between two eliminated vertices are charged here exactly once
            for (int v : singles)
                for (auto [u, e] : s.adj[v])
                    if (colour[u] >= 0 && v < u)
                        acc += ew(e, colour[v], colour[u]);
            s = restrict(s, keep, colour);
        }
    }

    bool arc_consistency(Sub& s) const {
        std::deque<int> queue;
        std::vector<char> queued(s.size(), 1);
        for (int v = 0; v < s.size(); ++v) {
            if (!s.list[v])
                return false;
            queue.push_back(v);
        }
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            queued[v] = 0;
            for (auto [u, e] : s.adj[v]) {
                Mask keep = 0;
                for (Mask m = s.list[u]; m; m &= m - 1) {
                    Vertex b = lowest(m);
                    if (hnbr[b] & s.list[v])
                        keep |= bit(b);
                }
                if (keep != s.list[u]) {
                    s.list[u] = keep;
                    if (!keep)
                        return false;
                    if (!queued[u]) {
                        queued[u] = 1;
                        queue.push_back(u);
                    }
                }
            }
        }
        return true;
    }

    Result solve(Sub s) {
        ++stats.calls;
        tick();
        Result out;
        ExtendedWeight acc = 0;
        if (!preprocess(s, out.assign, acc))
            return Result{};
        out.value = acc;
        if (s.size() == 0)
            return out;

        auto comps = components(s);
        if (comps.size() > 1) {
            std::vector<Vertex> none(s.size(), -1);
            for (const auto& c : comps) {
                Result r = solve(restrict(s, c, none));
                if (!r.value)
                    return Result{};
                merge(out, r);
            }
            return out;
        }

        Result r = solve_connected(s);
        if (!r.value)
            return Result{};
        merge(out, r);
        return out;
    }

    Result solve_connected(const Sub& s) {
        const int n = s.size();
        if (n <= cfg.base_size)
            return enumerate(s);
        if (star) {
            if (auto r = try_branch(s))
                return *r;
        }
        if (auto r = try_separator(s))
            return *r;
        ++stats.oracle_fallbacks;
        return enumerate(s);
    }

    /// Branch on a vertex of degree above ceil(n^(1/3)): h(v) = a, or a removed from L(v).
    std::optional<Result> try_branch(const Sub& s) {
        const int n = s.size();
        int threshold = 0;
        while (threshold * threshold * threshold < n)
            ++threshold;
        int v = -1;
        for (int x = 0; x < n; ++x)
            if (static_cast<int>(s.adj[x].size()) > threshold &&
                (v < 0 || s.adj[x].size() > s.adj[v].size()))
                v = x;
        if (v < 0)
            return std::nullopt;
        // most frequent list among the neighbours, ties to the smaller mask
        std::map<Mask, int> freq;
        for (auto [u, e] : s.adj[v])
            ++freq[s.list[u]];
        Mask common = 0;
        int best = -1;
        for (auto [m, c] : freq)
            if (c > best) {
                best = c;
                common = m;
            }
        Vertex a = -1;
        for (Mask m = s.list[v]; m && a < 0; m &= m - 1) {
            Vertex c = lowest(m);
            if (common & ~hnbr[c])
                a = c;
        }
        if (a < 0)
            return std::nullopt;
        ++stats.branch_steps;
        Sub fixed = s;
        fixed.list[v] = bit(a);
        Sub rest = s;
        rest.list[v] &= ~bit(a);
        Result r1 = solve(std::move(fixed));
        Result r2 = solve(std::move(rest));
        return better(r2.value, r1.value) ? r2 : r1;
    }

    std::optional<Result> try_separator(const Sub& s) {
        const int n = s.size();
        Graph local = local_graph(s);
        const int max_size =
            std::min(n, static_cast<int>(std::ceil(cfg.separator_constant * std::cbrt(static_cast<double>(n) * n))));
        std::optional<Separation> sep;
        auto usable = [&](const std::optional<Separation>& cand) {
            return cand && static_cast<int>(cand->S.size()) <= max_size && static_cast<int>(cand->S.size()) < n;
        };
        auto exhaustive = [&]() -> std::optional<Separation> {
            SearchBudget b(cfg.separator_node_budget);
            try {
                return find_balanced_separator(local, max_size, cfg.beta, &b);
            } catch (const BudgetExceeded&) {
                return std::nullopt;
            }
        };
        if (cfg.strategy == SeparatorStrategy::heuristic_first) {
            sep = heuristic_separator(local, cfg.beta);
            if (!usable(sep))
                sep = exhaustive();
        } else {
            sep = exhaustive();
            if (!usable(sep))
                sep = heuristic_separator(local, cfg.beta);
        }
        if (!usable(sep))
            return std::nullopt;
        ++stats.separator_steps;
        stats.largest_separator = std::max(stats.largest_separator, sep->S.size());
        return divide(s, *sep);
    }

    Result divide(const Sub& s, const Separation& sep) {
        const int n = s.size();
        const std::vector<int>& S = sep.S;
        std::vector<int> pos_in_s(n, -1);
        for (int i = 0; i < static_cast<int>(S.size()); ++i)
            pos_in_s[S[i]] = i;
        // S-vertices adjacent to each side; memo keys are their colours
        std::vector<std::vector<int>> boundary(2);
        const std::vector<int>* sides[2] = {&sep.V1, &sep.V2};
        for (int k = 0; k < 2; ++k) {
            std::vector<char> mark(S.size(), 0);
            for (int x : *sides[k])
                for (auto [y, e] : s.adj[x])
                    if (pos_in_s[y] >= 0)
                        mark[pos_in_s[y]] = 1;
            for (int i = 0; i < static_cast<int>(S.size()); ++i)
                if (mark[i])
                    boundary[k].push_back(i);
        }
        std::map<std::vector<Vertex>, Result> memo[2];
        std::vector<Vertex> colour(n, -1);
        Result best;
        std::vector<Vertex> key;

        auto leaf = [&](ExtendedWeight inside) {
            ++stats.separator_colourings;
            tick();
            Result total;
            total.value = inside;
            for (int k = 0; k < 2; ++k) {
                key.clear();
                for (int i : boundary[k])
                    key.push_back(colour[S[i]]);
                auto it = memo[k].find(key);
                if (it == memo[k].end()) {
                    Result r = solve(restrict(s, *sides[k], colour));
                    it = memo[k].emplace(key, std::move(r)).first;
                } else {
                    ++stats.memo_hits;
                }
                if (!it->second.value)
                    return;
                total.value = add(total.value, it->second.value);
                total.assign.insert(total.assign.end(), it->second.assign.begin(), it->second.assign.end());
            }
            if (better(total.value, best.value)) {
                for (int x : S)
                    total.assign.emplace_back(s.orig[x], colour[x]);
                best = std::move(total);
            }
        };

        // colour S in order, pruning on lists and S-internal adjacency
        auto rec = [&](auto&& self, int i, ExtendedWeight inside) -> void {
            if (i == static_cast<int>(S.size())) {
                leaf(inside);
                return;
            }
            const int x = S[i];
            Mask allowed = s.list[x];
            for (auto [y, e] : s.adj[x])
                if (pos_in_s[y] >= 0 && pos_in_s[y] < i)
                    allowed &= hnbr[colour[y]];
            for (Mask m = allowed; m; m &= m - 1) {
                Vertex a = lowest(m);
                colour[x] = a;
                ExtendedWeight add_w = inside + s.vw[x * nh + a];
                for (auto [y, e] : s.adj[x])
                    if (pos_in_s[y] >= 0 && pos_in_s[y] < i)
                        add_w += ew(e, colour[y], a);
                self(self, i + 1, add_w);
            }
            colour[x] = -1;
        };
        rec(rec, 0, ExtendedWeight(0));
        return best;
    }

    /// Exhaustive branch and bound over a subproblem; used for tiny pieces and as fallback.
    Result enumerate(const Sub& s) {
        const int n = s.size();
        // static optimistic bound: best vertex term per vertex plus best term per edge,
        // charging each edge to its later endpoint
        std::vector<ExtendedWeight> suffix(n + 1, ExtendedWeight(0));
        for (int v = n - 1; v >= 0; --v) {
            ExtendedWeight top = NEG_INF;
            for (Mask m = s.list[v]; m; m &= m - 1)
                top = std::max(top, s.vw[v * nh + lowest(m)]);
            for (auto [u, e] : s.adj[v])
                if (u < v) {
                    ExtendedWeight et = NEG_INF;
                    for (Mask m = s.list[v]; m; m &= m - 1)
                        for (Mask q = s.list[u] & hnbr[lowest(m)]; q; q &= q - 1)
                            et = std::max(et, ew(e, lowest(m), lowest(q)));
                    top += et;
                }
            suffix[v] = suffix[v + 1] + top;
        }
        std::vector<Vertex> colour(n, -1);
        std::vector<Vertex> best_colour;
        Optimum best;
        auto rec = [&](auto&& self, int v, ExtendedWeight acc) -> void {
            tick();
            if (v == n) {
                ++stats.enumerated_leaves;
                if (better(acc, best)) {
                    best = acc;
                    best_colour = colour;
                }
                return;
            }
            if (best && !better(acc + suffix[v], best))
                return;
            Mask allowed = s.list[v];
            for (auto [u, e] : s.adj[v])
                if (u < v)
                    allowed &= hnbr[colour[u]];
            for (Mask m = allowed; m; m &= m - 1) {
                Vertex a = lowest(m);
                colour[v] = a;
                ExtendedWeight next = acc + s.vw[v * nh + a];
                for (auto [u, e] : s.adj[v])
                    if (u < v)
                        next += ew(e, colour[u], a);
                self(self, v + 1, next);
            }
            colour[v] = -1;
        };
        rec(rec, 0, ExtendedWeight(0));
        Result r;
        r.value = best;
        if (best)
            for (int v = 0; v < n; ++v)
                r.assign.emplace_back(s.orig[v], best_colour[v]);
        return r;
    }

    Graph local_graph(const Sub& s) const {
        std::vector<std::pair<Vertex, Vertex>> es;
        for (int x = 0; x < s.size(); ++x)
            for (auto [y, e] : s.adj[x])
                if (x < y)
                    es.emplace_back(x, y);
        return Graph(s.size(), es);
    }

    static std::vector<std::vector<int>> components(const Sub& s) {
        std::vector<int> comp(s.size(), -1);
        std::vector<std::vector<int>> out;
        for (int r = 0; r < s.size(); ++r) {
            if (comp[r] >= 0)
                continue;
            std::vector<int> cur{r};
            comp[r] = static_cast<int>(out.size());
            for (std::size_t i = 0; i < cur.size(); ++i)
                for (auto [y, e] : s.adj[cur[i]])
                    if (comp[y] < 0) {
                        comp[y] = comp[r];
                        cur.push_back(y);
                    }
            std::sort(cur.begin(), cur.end());
            out.push_back(std::move(cur));
        }
        return out;
    }

    static void merge(Result& into, const Result& part) {
        into.value = add(into.value, part.value);
        into.assign.insert(into.assign.end(), part.assign.begin(), part.assign.end());
    }

    void tick() {
        if (cfg.budget)
            cfg.budget->tick("weighted homomorphism solver");
    }

    const Graph& G;
    const Graph& H;
    const WeightModel& w;
    const WhomConfig& cfg;
    WhomStats& stats;
    int nh;
    std::vector<Mask> hnbr;
    std::vector<int> hedge;
    bool star = false;
};

inline WhomResult to_result(const WhomInstance& inst, const Result& r) {
    WhomResult out;
    if (!r.value)
        return out;
    out.feasible = true;
    out.optimum = *r.value;
    out.witness.assign(inst.G.vertex_count(), -1);
    for (auto [v, a] : r.assign)
        out.witness[v] = a;
    return out;
}

} // namespace whom_detail

/// Arc consistency and singleton elimination on the full instance.
inline Preprocessed preprocess(const WhomInstance& inst) {
    inst.validate();
    WhomConfig cfg;
    WhomStats stats;
    whom_detail::Context ctx(inst, cfg, stats);
    whom_detail::Sub s = ctx.root(inst.lists);
    Preprocessed out;
    out.partial.assign(inst.G.vertex_count(), -1);
    std::vector<std::pair<Vertex, Vertex>> assigned;
    ExtendedWeight acc = 0;
    if (!ctx.preprocess(s, assigned, acc)) {
        out.feasible = false;
        return out;
    }
    for (auto [v, a] : assigned)
        out.partial[v] = a;
    out.accumulated = acc;
    out.kept = s.orig;
    const int nh = inst.H.vertex_count();
    Graph reduced_g = inst.G.induced(s.orig);
    WeightModel w(reduced_g, inst.H);
    ListAssignment l = ListAssignment::full(reduced_g, inst.H);
    // loops were folded into vertex weights, so reduced loops keep weight 0
    for (int i = 0; i < s.size(); ++i) {
        l.set_mask(i, s.list[i]);
        for (Vertex a = 0; a < nh; ++a)
            w.set_vertex_weight(i, a, s.vw[i * nh + a]);
    }
    for (const Edge& e : reduced_g.edges()) {
        if (e.is_loop())
            continue;
        int ge = *inst.G.edge_index(s.orig[e.u], s.orig[e.v]);
        for (const Edge& he : inst.H.edges())
            w.set_edge_weight(e.u, e.v, he.u, he.v, inst.weights.edge_weight_at(ge, inst.weights.h_edge_index(he.u, he.v)));
    }
    out.reduced = WhomInstance(std::move(reduced_g), inst.H, std::move(w), std::move(l));
    return out;
}

/// Exact maximum-weight list homomorphism with witness.
///
/// Preprocesses, splits into components, branches on high-degree vertices when
/// H has property (*), and otherwise divides along a balanced separator.
/// Pieces without a usable separator are enumerated.
inline WhomResult solve_whom(const WhomInstance& inst, const WhomConfig& cfg = {}, WhomStats* stats = nullptr) {
    inst.validate();
    WhomStats local;
    WhomStats& st = stats ? *stats : local;
    whom_detail::Context ctx(inst, cfg, st);
    return whom_detail::to_result(inst, ctx.solve(ctx.root(inst.lists)));
}

namespace whom_detail {
// Plain search over V(G) in index order used by the oracle and counter;
// independent of the solver's subproblem machinery.
struct Enumerator {
    const WhomInstance& inst;
    SearchBudget& budget;
    int n;
    int nh;
    std::vector<std::vector<std::pair<Vertex, int>>> earlier; // neighbours u < v with edge index
    std::vector<int> loop_edge;
    std::vector<ExtendedWeight> suffix;
    std::vector<Vertex> h;

    Enumerator(const WhomInstance& i, SearchBudget& b)
        : inst(i), budget(b), n(i.G.vertex_count()), nh(i.H.vertex_count()), earlier(n), loop_edge(n, -1) {
        const auto& es = inst.G.edges();
        for (int k = 0; k < static_cast<int>(es.size()); ++k) {
            if (es[k].is_loop())
                loop_edge[es[k].u] = k;
            else
                earlier[es[k].v].emplace_back(es[k].u, k);
        }
        // optimistic completion value from vertex v onward
        suffix.assign(n + 1, ExtendedWeight(0));
        for (int v = n - 1; v >= 0; --v) {
            ExtendedWeight top = NEG_INF;
            for (Vertex a : inst.lists.list(v))
                top = std::max(top, inst.weights.vertex_weight(v, a));
            for (auto [u, k] : earlier[v])
                top += max_edge(k);
            if (loop_edge[v] >= 0)
                top += max_edge(loop_edge[v]);
            suffix[v] = suffix[v + 1] + top;
        }
        h.assign(n, -1);
    }

    ExtendedWeight max_edge(int k) const {
        ExtendedWeight best = NEG_INF;
        for (int j = 0; j < inst.H.edge_count(); ++j)
            best = std::max(best, inst.weights.edge_weight_at(k, j));
        return best;
    }

    // weight contributed by placing v at a, given earlier vertices; nullopt if not allowed
    std::optional<ExtendedWeight> place(Vertex v, Vertex a) const {
        if (!inst.lists.contains(v, a))
            return std::nullopt;
        ExtendedWeight add = inst.weights.vertex_weight(v, a);
        if (loop_edge[v] >= 0) {
            if (!inst.H.adjacent(a, a))
                return std::nullopt;
            add += inst.weights.edge_weight(v, v, a, a);
        }
        for (auto [u, k] : earlier[v]) {
            if (!inst.H.adjacent(h[u], a))
                return std::nullopt;
            add += inst.weights.edge_weight_at(k, inst.weights.h_edge_index(h[u], a));
        }
        return add;
    }
};
} // namespace whom_detail

/// Exhaustive search: exact optimum and the lexicographically least optimal witness.
inline WhomResult oracle_whom(const WhomInstance& inst, SearchBudget budget = SearchBudget(200'000'000)) {
    inst.validate();
    whom_detail::Enumerator en(inst, budget);
    WhomResult best;
    auto rec = [&](auto&& self, Vertex v, ExtendedWeight acc) -> void {
        budget.tick("weighted homomorphism oracle");
        if (v == en.n) {
            if (!best.feasible || acc > best.optimum) {
                best.feasible = true;
                best.optimum = acc;
                best.witness = en.h;
            }
            return;
        }
        if (best.feasible && acc + en.suffix[v] <= best.optimum)
            return;
        for (Vertex a = 0; a < en.nh; ++a) {
            auto add = en.place(v, a);
            if (!add)
                continue;
            en.h[v] = a;
            self(self, v + 1, acc + *add);
            en.h[v] = -1;
        }
    };
    rec(rec, 0, ExtendedWeight(0));
    return best;
}

/// Number of list-respecting homomorphisms of weight >= threshold, by enumeration.
inline std::uint64_t count_whom(const WhomInstance& inst, ExtendedWeight threshold,
                                SearchBudget budget = SearchBudget(200'000'000)) {
    inst.validate();
    whom_detail::Enumerator en(inst, budget);
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, Vertex v, ExtendedWeight acc) -> void {
        budget.tick("homomorphism counter");
        if (v == en.n) {
            if (acc >= threshold)
                ++count;
            return;
        }
        if (acc + en.suffix[v] < threshold)
            return;
        for (Vertex a = 0; a < en.nh; ++a) {
            auto add = en.place(v, a);
            if (!add)
                continue;
            en.h[v] = a;
            self(self, v + 1, acc + *add);
            en.h[v] = -1;
        }
    };
    rec(rec, 0, ExtendedWeight(0));
    return count;
}

} // namespace homlab
