#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homlab/budget.hpp"
#include "homlab/errors.hpp"
#include "homlab/graph.hpp"
#include "homlab/homomorphism.hpp"
#include "homlab/weight_model.hpp"

namespace homlab {

enum class LocalVariant { injective, bijective, surjective };

inline const char* to_string(LocalVariant v) {
    switch (v) {
    case LocalVariant::injective: return "injective";
    case LocalVariant::bijective: return "bijective";
    case LocalVariant::surjective: return "surjective";
    }
    return "?";
}

inline bool is_locally(LocalVariant v, const Graph& G, const Graph& H, const Homomorphism& h) {
    switch (v) {
    case LocalVariant::injective: return is_locally_injective(G, H, h);
    case LocalVariant::bijective: return is_locally_bijective(G, H, h);
    case LocalVariant::surjective: return is_locally_surjective(G, H, h);
    }
    return false;
}

namespace local_oracle_detail {

// Is there a matching covering `left`, each x matched to a colour in dom[x] & allowed?
inline bool has_matching(const std::vector<Vertex>& left, const std::vector<Mask>& dom, Mask allowed) {
    std::vector<int> owner(max_target_size, -1);
    std::vector<char> seen;
    auto augment = [&](auto&& self, int i) -> bool {
        for (Mask m = dom[left[i]] & allowed; m; m &= m - 1) {
            int c = lowest(m);
            if (seen[c])
                continue;
            seen[c] = 1;
            if (owner[c] < 0 || self(self, owner[c])) {
                owner[c] = i;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < static_cast<int>(left.size()); ++i) {
        seen.assign(max_target_size, 0);
        if (!augment(augment, i))
            return false;
    }
    return true;
}

class Csp {
public:
    Csp(const Graph& G, const Graph& H, LocalVariant variant)
        : G(G), H(H), variant(variant), inj(variant != LocalVariant::surjective),
          surj(variant != LocalVariant::injective) {
        for (Vertex a = 0; a < H.vertex_count(); ++a)
            hnbr.push_back(H.neighbor_mask(a));
    }

    std::vector<Mask> initial() const {
        const int nh = H.vertex_count();
        std::vector<Mask> dom(G.vertex_count(), 0);
        for (Vertex v = 0; v < G.vertex_count(); ++v)
            for (Vertex a = 0; a < nh; ++a) {
                if (G.has_loop(v) && !H.has_loop(a))
                    continue;
                if (inj && G.degree(v) > H.degree(a))
                    continue;
                if (surj && G.degree(v) < H.degree(a))
                    continue;
                dom[v] |= bit(a);
            }
        return dom;
    }

    /// Narrows domains to a fixed point; false on a wipe-out.
    bool propagate(std::vector<Mask>& dom) const {
        bool changed = true;
        while (changed) {
            changed = false;
            auto narrow = [&](Vertex v, Mask keep) {
                Mask next = dom[v] & keep;
                if (next != dom[v]) {
                    dom[v] = next;
                    changed = true;
                }
                return next != 0;
            };
            for (const Edge& e : G.edges()) {
                if (e.is_loop())
                    continue;
                if (!narrow(e.u, support(dom[e.v])) || !narrow(e.v, support(dom[e.u])))
                    return false;
            }
            for (Vertex w = 0; w < G.vertex_count(); ++w) {
                if (popcount(dom[w]) != 1)
                    continue;
                const Vertex a = lowest(dom[w]);
                const auto& nb = G.neighbors(w);
                if (inj) {
                    for (Vertex x : nb) {
                        if (popcount(dom[x]) != 1)
                            continue;
                        for (Vertex y : nb)
                            if (y != x && !narrow(y, ~dom[x]))
                                return false;
                    }
                    if (!has_matching(nb, dom, hnbr[a]))
                        return false;
                }
                if (surj) {
                    for (Mask need = hnbr[a]; need; need &= need - 1) {
                        const int c = lowest(need);
                        int providers = 0;
                        Vertex last = -1;
                        for (Vertex x : nb)
                            if (dom[x] & bit(c)) {
                                ++providers;
                                last = x;
                            }
                        if (providers == 0)
                            return false;
                        if (providers == 1 && !narrow(last, bit(c)))
                            return false;
                    }
                }
            }
        }
        return true;
    }

    Mask support(Mask d) const {
        Mask s = 0;
        for (; d; d &= d - 1)
            s |= hnbr[lowest(d)];
        return s;
    }

    const Graph& G;
    const Graph& H;
    LocalVariant variant;
    bool inj;
    bool surj;
    std::vector<Mask> hnbr;
};

} // namespace local_oracle_detail

/// Exhaustive search for a locally injective / bijective / surjective
/// homomorphism. Returns the lexicographically least one (by image of vertex
/// 0, then 1, ...). Propagation only discards values that cannot appear in
/// any completion, so the first solution reached in index order is the least.
inline std::optional<Homomorphism> oracle_local(const Graph& G, const Graph& H, LocalVariant variant,
                                                SearchBudget budget = SearchBudget(200'000'000)) {
    ListAssignment::check_target(H.vertex_count());
    local_oracle_detail::Csp csp(G, H, variant);
    std::vector<Mask> dom = csp.initial();
    for (Mask d : dom)
        if (!d)
            return std::nullopt;
    if (!csp.propagate(dom))
        return std::nullopt;
    std::optional<Homomorphism> found;
    auto rec = [&](auto&& self, std::vector<Mask>& d) -> bool {
        budget.tick("local homomorphism oracle");
        Vertex v = -1;
        for (Vertex x = 0; x < G.vertex_count(); ++x)
            if (popcount(d[x]) > 1) {
                v = x;
                break;
            }
        if (v < 0) {
            Homomorphism h(G.vertex_count());
            for (Vertex x = 0; x < G.vertex_count(); ++x)
                h[x] = lowest(d[x]);
            found = std::move(h);
            return true;
        }
        for (Mask m = d[v]; m; m &= m - 1) {
            std::vector<Mask> next = d;
            next[v] = bit(lowest(m));
            if (csp.propagate(next) && self(self, next))
                return true;
        }
        return false;
    };
    rec(rec, dom);
    if (found && !is_locally(variant, G, H, *found))
        throw std::logic_error("local oracle produced an invalid witness");
    return found;
}

} // namespace homlab
