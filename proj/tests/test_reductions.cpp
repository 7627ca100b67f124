#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace homlab;
using namespace homlab::testing;

namespace {

CnfFormula cnf(int variables, std::vector<std::vector<int>> clauses, CnfDialect d = CnfDialect::three_sat) {
    CnfFormula f;
    f.variables = variables;
    f.clauses = std::move(clauses);
    f.dialect = d;
    return f;
}

CnfFormula nae(int variables, std::vector<std::vector<int>> clauses) {
    return cnf(variables, std::move(clauses), CnfDialect::pos_nae_3sat);
}

int occurrence_count(const CnfFormula& f) {
    int c = 0;
    for (const auto& cl : f.clauses)
        c += static_cast<int>(cl.size());
    return c;
}

// Per occurrence: its segment, q_1..q_{k-3}, alpha, beta, s_1..s_{2k-4}.
int path_vertex_count(const CnfFormula& f, int k) {
    const int n = f.variables, m = static_cast<int>(f.clauses.size());
    return occurrence_count(f) * (1 + (k - 3) + 2 + (2 * k - 4)) + n * (2 * k - 3) + 2 * m + (2 * k - 1);
}

// Per occurrence: its segment, x', alpha, beta and k-2 segments between them.
int cycle_vertex_count(const CnfFormula& f, int k) {
    const int n = f.variables, m = static_cast<int>(f.clauses.size());
    return occurrence_count(f) * (1 + 1 + 2 + (k - 2)) + n * (k - 1) + 2 * m + (k - 2);
}

// Random formula over `variables` with every variable in both polarities.
CnfFormula random_both_polarities(std::mt19937_64& rng, int variables, int clauses, bool exactly_three) {
    for (;;) {
        CnfFormula f = cnf(variables, {});
        for (int c = 0; c < clauses; ++c) {
            const int len = exactly_three ? 3 : 1 + static_cast<int>(rng() % 3);
            std::vector<int> cl;
            for (int i = 0; i < len; ++i) {
                const int v = 1 + static_cast<int>(rng() % variables);
                cl.push_back(rng() & 1U ? v : -v);
            }
            f.clauses.push_back(cl);
        }
        bool ok = true;
        for (int v = 1; v <= variables; ++v)
            ok = ok && f.has_both_polarities(v);
        if (ok)
            return f;
    }
}

void expect_faithful(const ReductionOutput& out) {
    ASSERT_TRUE(out.arrangement);
    EXPECT_EQ(out.arrangement->size(), out.instance.vertex_count());
    EXPECT_TRUE(out.arrangement_matches());
    EXPECT_TRUE(out.slope_claim_holds());
}

} // namespace

TEST(NaeToMaxCut, Examples) {
    auto two = posnae3sat_to_maxcut(nae(2, {{1, 2}}));
    EXPECT_EQ(two.graph, targets::complete(2));
    EXPECT_EQ(two.threshold, 1);
    auto three = posnae3sat_to_maxcut(nae(3, {{1, 2, 3}}));
    EXPECT_EQ(three.graph.vertex_count(), 9);
    EXPECT_EQ(three.graph.edge_count(), 9);
    EXPECT_EQ(three.threshold, 8);
    EXPECT_EQ(brute::max_cut(three.graph), 8);
    for (Vertex v = 0; v < 9; ++v)
        EXPECT_EQ(three.graph.degree(v), 2);
    EXPECT_EQ(longest_induced_path_length(three.graph, 20), 8);
    auto empty = posnae3sat_to_maxcut(nae(1, {}));
    EXPECT_EQ(empty.graph.vertex_count(), 1);
    EXPECT_EQ(empty.graph.edge_count(), 0);
    EXPECT_EQ(empty.threshold, 0);
}

TEST(NaeToMaxCut, RejectsBadFormulas) {
    EXPECT_THROW(posnae3sat_to_maxcut(cnf(2, {{1, 2}})), InvalidInstance);
    EXPECT_THROW(posnae3sat_to_maxcut(nae(2, {{1, -2}})), InvalidInstance);
    EXPECT_THROW(posnae3sat_to_maxcut(nae(2, {{1, 2}, {2, 1}})), InvalidInstance);
    EXPECT_THROW(posnae3sat_to_maxcut(nae(3, {{1}})), InvalidInstance);
    EXPECT_THROW(posnae3sat_to_maxcut(nae(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}})), InvalidInstance);
}

TEST(NaeToMaxCut, SatisfiableIffThresholdMet) {
    int checked = 0;
    for (int n = 0; n <= 3; ++n) {
        std::vector<std::vector<int>> possible;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) {
                possible.push_back({a, b});
                for (int c = b + 1; c <= n; ++c)
                    possible.push_back({a, b, c});
            }
        std::vector<std::vector<std::vector<int>>> sets = {{}};
        for (std::size_t i = 0; i < possible.size(); ++i) {
            sets.push_back({possible[i]});
            for (std::size_t j = i + 1; j < possible.size(); ++j)
                sets.push_back({possible[i], possible[j]});
        }
        for (const auto& cls : sets) {
            const CnfFormula f = nae(n, cls);
            auto c = posnae3sat_to_maxcut(f);
            ASSERT_EQ(brute::satisfiable(f), brute::max_cut(c.graph) >= c.threshold);
            ++checked;
        }
    }
    EXPECT_GT(checked, 10);
}

TEST(MaxCutToBisection, Examples) {
    auto k3 = maxcut_to_bisection(targets::complete(3), 2);
    EXPECT_EQ(k3.graph.vertex_count(), 6);
    EXPECT_EQ(k3.graph.edge_count(), 6);
    EXPECT_EQ(k3.threshold, 5);
    auto k1 = maxcut_to_bisection(targets::complete(1), 0);
    EXPECT_EQ(k1.graph, targets::complete(2));
    EXPECT_EQ(k1.threshold, 1);
    auto c4 = maxcut_to_bisection(targets::cycle(4), 4);
    EXPECT_EQ(c4.graph.vertex_count(), 8);
    EXPECT_EQ(c4.threshold, 8);
    EXPECT_EQ(brute::max_cut(c4.graph), 8);
    EXPECT_THROW(maxcut_to_bisection(targets::loop_edge(), 0), InvalidInstance);
}

TEST(MaxCutToBisection, CutIffBisection) {
    for (const Graph& G : all_graphs_up_to(5)) {
        const int best = brute::max_cut(G);
        for (int k = 0; k <= G.edge_count() + 1; ++k) {
            auto F = maxcut_to_bisection(G, k);
            if (G.vertex_count() > 0) {
                ASSERT_EQ(F.graph.max_degree(), G.max_degree() + 1);
            }
            auto bis = brute::max_bisection(F.graph);
            ASSERT_TRUE(bis);
            ASSERT_EQ(best >= k, *bis >= F.threshold);
        }
    }
}

TEST(MaxCutToBisection, MaximumCutsAreBisections) {
    for (const Graph& G : all_graphs_up_to(6)) {
        ASSERT_TRUE(brute::maximum_cuts_are_bisections(maxcut_to_bisection(G, 0).graph));
    }
}

TEST(SegmentMaxCut, Examples) {
    auto k2 = bisection_to_maxcut_segments(targets::complete(2), 1);
    EXPECT_EQ(k2.instance.vertex_count(), 40);
    EXPECT_EQ(*k2.threshold, ExtendedWeight(74));
    EXPECT_EQ(k2.target, targets::loop_edge());
    expect_faithful(k2);
    auto k1 = bisection_to_maxcut_segments(targets::complete(1), 0);
    EXPECT_EQ(k1.instance.vertex_count(), 18);
    EXPECT_EQ(*k1.threshold, ExtendedWeight(33));
    expect_faithful(k1);
}

TEST(SegmentMaxCut, OddGraphHasNoBisection) {
    auto k1 = bisection_to_maxcut_segments(targets::complete(1), 0);
    EXPECT_FALSE(brute::max_bisection(targets::complete(1)));
    EXPECT_TRUE(verify_reduction(false, k1));
    WhomInstance inst(k1.instance, k1.target, *k1.weights, *k1.lists);
    EXPECT_EQ(oracle_whom(inst).optimum, ExtendedWeight(32));
}

TEST(SegmentMaxCut, EdgeInstanceMatchesBisectionWithExactSolver) {
    // 2^40 maps is out of oracle range; the exact solver answers instead
    for (int k = 1; k <= 2; ++k) {
        auto out = bisection_to_maxcut_segments(targets::complete(2), k);
        WhomInstance inst(out.instance, out.target, *out.weights, *out.lists);
        auto r = solve_whom(inst);
        ASSERT_TRUE(r.feasible);
        EXPECT_EQ(r.optimum, ExtendedWeight(74));
        EXPECT_EQ(r.meets(*out.threshold), *brute::max_bisection(targets::complete(2)) >= k);
        EXPECT_EQ(weight_of(inst.G, inst.H, inst.weights, r.witness), r.optimum);
    }
}

TEST(OctSegments, Examples) {
    auto k2 = is_to_oct_segments(targets::complete(2), 1);
    EXPECT_EQ(k2.instance.vertex_count(), 20);
    EXPECT_EQ(*k2.threshold, ExtendedWeight(17));
    EXPECT_EQ(k2.target, targets::oct_target());
    expect_faithful(k2);
    EXPECT_EQ(*k2.claimed_slope_count, 2);
    auto k1 = is_to_oct_segments(targets::complete(1), 1);
    EXPECT_EQ(k1.instance.vertex_count(), 9);
    EXPECT_EQ(*k1.threshold, ExtendedWeight(8));
    EXPECT_TRUE(verify_reduction(true, k1));
}

TEST(OctSegments, IndependenceIffThresholdMet) {
    const std::vector<Graph> gs = {targets::complete(1), targets::complete(2), targets::path(3), targets::complete(3),
                                   Graph(2), Graph(3, {{0, 1}}), targets::cycle(4), targets::path(4)};
    for (const Graph& G : gs) {
        const int alpha = brute::independence_number(G);
        for (int k = 0; k <= G.vertex_count() + 1; ++k) {
            auto out = is_to_oct_segments(G, k);
            ASSERT_TRUE(verify_reduction(alpha >= k, out)) << G.vertex_count() << " vertices, k=" << k;
        }
    }
}

TEST(OctSegments, VertexGadgetWeights) {
    // gadget weight with x and y pinned: 7 when both are a, at most 6 otherwise
    auto out = is_to_oct_segments(targets::complete(1), 0);
    const Graph& H = out.target;
    for (Vertex hx = 0; hx < 3; ++hx)
        for (Vertex hy = 0; hy < 3; ++hy) {
            if (!H.adjacent(hx, hy))
                continue;
            ListAssignment lists = *out.lists;
            lists.set(0, {hx});
            lists.set(1, {hy});
            auto r = oracle_whom(WhomInstance(out.instance, H, *out.weights, lists));
            ASSERT_TRUE(r.feasible);
            const std::int64_t gadget = r.optimum.value() - (hx != 0) - (hy != 0);
            if (hx == 0 && hy == 0) {
                EXPECT_EQ(gadget, 7);
            } else {
                EXPECT_LE(gadget, 6) << hx << " " << hy;
            }
        }
}

TEST(C4Grid, Examples) {
    auto k2 = is_to_whom_c4(targets::complete(2), 1);
    EXPECT_EQ(k2.instance.vertex_count(), 4);
    EXPECT_EQ(k2.instance.edge_count(), 4);
    EXPECT_EQ(*k2.threshold, ExtendedWeight(2));
    expect_faithful(k2);
    auto empty = is_to_whom_c4(Graph(2), 2);
    EXPECT_EQ(*empty.threshold, ExtendedWeight(4));
    EXPECT_TRUE(verify_reduction(true, empty));
    auto k3 = is_to_whom_c4(targets::complete(3), 2);
    EXPECT_TRUE(verify_reduction(false, k3));
    WhomInstance inst(k3.instance, k3.target, *k3.weights, *k3.lists);
    EXPECT_LT(oracle_whom(inst).optimum, ExtendedWeight(4));
}

TEST(C4Grid, IndependenceIffThresholdMet) {
    for (const Graph& G : all_graphs_up_to(4)) {
        const int alpha = brute::independence_number(G);
        for (int k = 0; k <= 4; ++k) {
            ASSERT_TRUE(verify_reduction(alpha >= k, is_to_whom_c4(G, k)));
        }
    }
}

TEST(Corpus, SizesAndArrangements) {
    const auto corpus = reduction_corpus();
    ASSERT_EQ(corpus.size(), 50U);
    for (const auto& c : corpus) {
        SCOPED_TRACE(c.name);
        EXPECT_EQ(c.instance.vertex_count(), c.expected_vertices);
        if (c.expected_edges) {
            EXPECT_EQ(c.instance.edge_count(), *c.expected_edges);
        }
        if (c.output && c.output->arrangement) {
            EXPECT_TRUE(c.output->arrangement_matches());
            EXPECT_TRUE(c.output->slope_claim_holds());
        }
    }
}

TEST(Corpus, InducedPathsStayShort) {
    int checked = 0;
    for (const auto& c : reduction_corpus()) {
        if (c.instance.vertex_count() > 60)
            continue;
        if (c.family == Family::maxcut_segments) {
            ASSERT_LE(longest_induced_path_length(c.instance, 6), 6) << c.name;
            ++checked;
        }
        if (c.family == Family::oct_segments) {
            ASSERT_LE(longest_induced_path_length(c.instance, 12), 12) << c.name;
            ++checked;
        }
    }
    EXPECT_GE(checked, 8);
}

TEST(LshomPath, Preconditions) {
    EXPECT_THROW(threesat_to_lshom_path(cnf(2, {{1, -1, 2}}), 4), InvalidInstance);
    EXPECT_THROW(threesat_to_lshom_path(cnf(1, {{1}, {-1}}), 3), InvalidInstance);
    EXPECT_THROW(threesat_to_lshom_path(cnf(1, {{1, -1, 1, -1}}), 4), InvalidInstance);
}

TEST(LshomPath, ToyFormulas) {
    const CnfFormula sat = cnf(2, {{1, 2}, {-1, -2}});
    auto out = threesat_to_lshom_path(sat, 4);
    EXPECT_EQ(out.target, targets::path(4));
    EXPECT_TRUE(out.is_decision());
    EXPECT_EQ(out.instance.vertex_count(), path_vertex_count(sat, 4));
    expect_faithful(out);
    EXPECT_TRUE(verify_reduction(true, out));
    auto unsat = threesat_to_lshom_path(cnf(1, {{1}, {-1}}), 4);
    EXPECT_TRUE(verify_reduction(false, unsat));
    auto k5 = threesat_to_lshom_path(sat, 5);
    EXPECT_EQ(k5.instance.vertex_count(), path_vertex_count(sat, 5));
    expect_faithful(k5);
    EXPECT_TRUE(verify_reduction(true, k5));
}

TEST(LshomPath, RandomSmallFormulas) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 25; ++t) {
        const CnfFormula f = random_both_polarities(rng, 1 + static_cast<int>(rng() % 2), 2 + static_cast<int>(rng() % 2), false);
        auto out = threesat_to_lshom_path(f, 4);
        ASSERT_EQ(out.instance.vertex_count(), path_vertex_count(f, 4));
        ASSERT_TRUE(out.arrangement_matches());
        ASSERT_TRUE(verify_reduction(brute::satisfiable(f), out));
    }
}

TEST(LshomCycle, Preconditions) {
    EXPECT_THROW(threesat_to_lshom_cycle(cnf(2, {{1, 2}, {-1, -2}}), 4), InvalidInstance);
    EXPECT_THROW(threesat_to_lshom_cycle(cnf(2, {{1, 2}, {-1, -2}}), 2), InvalidInstance);
    EXPECT_THROW(threesat_to_lshom_cycle(cnf(2, {{1, 2}}), 3), InvalidInstance);
}

TEST(LshomCycle, ToyFormulas) {
    const CnfFormula sat = cnf(2, {{1, 2}, {-1, -2}});
    for (int k : {3, 5}) {
        auto out = threesat_to_lshom_cycle(sat, k);
        EXPECT_EQ(out.target, targets::cycle(k));
        EXPECT_EQ(out.instance.vertex_count(), cycle_vertex_count(sat, k));
        expect_faithful(out);
        EXPECT_TRUE(verify_reduction(true, out)) << "k=" << k;
        EXPECT_TRUE(verify_reduction(false, threesat_to_lshom_cycle(cnf(1, {{1}, {-1}}), k))) << "k=" << k;
    }
}

TEST(LshomCycle, RandomSmallFormulas) {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 25; ++t) {
        const CnfFormula f = random_both_polarities(rng, 1 + static_cast<int>(rng() % 2), 2 + static_cast<int>(rng() % 2), false);
        auto out = threesat_to_lshom_cycle(f, 3);
        ASSERT_EQ(out.instance.vertex_count(), cycle_vertex_count(f, 3));
        ASSERT_TRUE(out.arrangement_matches());
        ASSERT_TRUE(verify_reduction(brute::satisfiable(f), out));
    }
}

TEST(LshomLoopPendant, ToyFormulas) {
    std::vector<CnfFormula> toys = {cnf(2, {{1, 2, -1}, {-2, 1, 2}}), cnf(1, {{1, 1, 1}, {-1, -1, -1}}),
                                    cnf(2, {{1, 2, 2}, {-1, -2, -2}, {1, -2, -2}, {-1, 2, 2}})};
    CnfFormula all_eight = cnf(3, {});
    for (int s = 0; s < 8; ++s)
        all_eight.clauses.push_back({s & 1 ? 1 : -1, s & 2 ? 2 : -2, s & 4 ? 3 : -3});
    toys.push_back(all_eight);
    all_eight.clauses.pop_back();
    toys.push_back(all_eight);
    int yes = 0, no = 0;
    for (const CnfFormula& f : toys) {
        const bool sat = brute::satisfiable(f);
        (sat ? yes : no)++;
        auto out = threesat_to_lshom_loopedge(f);
        EXPECT_EQ(out.target, targets::loop_pendant());
        EXPECT_FALSE(out.arrangement);
        EXPECT_EQ(out.instance.vertex_count(), 2 * f.variables + 16 * static_cast<int>(f.clauses.size()));
        EXPECT_TRUE(verify_reduction(sat, out));
        EXPECT_TRUE(verify_reduction(sat, threesat_to_lshom_loopedge(f, true)));
    }
    EXPECT_GE(yes, 2);
    EXPECT_GE(no, 2);
    EXPECT_THROW(threesat_to_lshom_loopedge(cnf(2, {{1, 2}, {-1, -2}})), InvalidInstance);
}

TEST(LshomLoopPendant, RandomSmallFormulas) {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 30; ++t) {
        const CnfFormula f = random_both_polarities(rng, 2 + static_cast<int>(rng() % 2), 2 + static_cast<int>(rng() % 3), true);
        ASSERT_TRUE(verify_reduction(brute::satisfiable(f), threesat_to_lshom_loopedge(f)));
    }
}

TEST(LshomLoopPendant, ClauseGadgetWithAllLiteralsFalse) {
    // z q1 q2 q3 p1 p2 p3 with every p on the unlooped vertex a
    const Graph gadget(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
    const Graph H = targets::loop_pendant();
    int maps = 0;
    for_each_map(4, 2, [&](const Homomorphism& head) {
        Homomorphism h = head;
        h.insert(h.end(), {0, 0, 0});
        if (!is_homomorphism(gadget, H, h))
            return;
        ++maps;
        auto happy = happy_vertices(gadget, H, h);
        int happy_core = 0;
        for (Vertex v : happy)
            happy_core += v < 4;
        EXPECT_LT(happy_core, 4);
    });
    EXPECT_EQ(maps, 2);
}
