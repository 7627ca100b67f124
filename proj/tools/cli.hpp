#pragma once

#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "homlab.hpp"

namespace homlab::cli {

/// Exit codes.
enum Exit : int { ok = 0, error = 1, negative = 2, budget = 3 };

/// Target graph from a name: P3, Pk:5, C4, Ck:6, K3, Kk:4, Kk-reflexive:3,
/// coP:5, loop-edge, loop-pendant, oct, c4, forbidden:a .. forbidden:g.
inline Graph named_target(const std::string& name) {
    static const std::regex family(R"(^(P|C|K|Kk-reflexive|coP)(?:k)?:?(\d+)$)");
    std::smatch m;
    if (name == "loop-edge")
        return targets::loop_edge();
    if (name == "loop-pendant")
        return targets::loop_pendant();
    if (name == "oct")
        return targets::oct_target();
    if (name == "c4")
        return targets::c4();
    if (name.rfind("forbidden:", 0) == 0 && name.size() == 11 && name[10] >= 'a' &&
        name[10] < 'a' + targets::forbidden_count)
        return targets::forbidden(name[10] - 'a');
    if (std::regex_match(name, m, family)) {
        const int k = std::stoi(m[2]);
        const std::string f = m[1];
        if (f == "P")
            return targets::path(k);
        if (f == "C")
            return targets::cycle(k);
        if (f == "K")
            return targets::complete(k);
        if (f == "Kk-reflexive")
            return targets::reflexive_complete(k);
        return targets::complement_of_path(k);
    }
    throw MalformedInput("unknown target '" + name + "'");
}

struct Options {
    std::string problem;
    std::string graph_path;
    std::string target;
    std::string target_path;
    std::string weights;
    std::string lists_path;
    std::string threshold;
    std::string variant = "inj";
    std::string cnf_path;
    std::string dialect;
    std::string output;
    std::string segments_path;
    std::string beta = "2/3";
    long long k = 0;
    bool k_set = false;
    int count = 40;
    int grid = 12;
    int max_length = 10;
    int cap = 64;
    int max_size = -1;
    bool heuristic = false;
    bool occ_clique = false;
    bool stats = false;
    std::uint64_t seed = 1;
    std::uint64_t nodes = 200'000'000;
    long long time_ms = 0;
    int jobs = 1;
};

namespace detail {

inline std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw MalformedInput("cannot open '" + path + "'");
    return in;
}

inline Graph load_graph(const std::string& path) {
    if (path.empty())
        throw MalformedInput("missing graph file (-g)");
    auto in = open(path);
    return io::read_graph(in);
}

inline SearchBudget make_budget(const Options& o) {
    SearchBudget b(o.nodes);
    if (o.time_ms > 0)
        b.with_time_limit(std::chrono::milliseconds(o.time_ms));
    b.with_env_time_limit();
    return b;
}

inline Graph load_target(const Options& o, const std::optional<Graph>& fallback = std::nullopt) {
    if (!o.target_path.empty()) {
        auto in = open(o.target_path);
        return io::read_graph(in);
    }
    if (!o.target.empty())
        return named_target(o.target);
    if (fallback)
        return *fallback;
    throw MalformedInput("missing target (--target or --target-file)");
}

inline WhomInstance load_whom(const Options& o) {
    Graph G = load_graph(o.graph_path);
    std::optional<WeightedTarget> model;
    if (o.weights == "maxcut")
        model = weight_model_maxcut(G);
    else if (o.weights == "oct")
        model = weight_model_oct(G);
    else if (o.weights == "independent-set")
        model = weight_model_independent_set(G);
    Graph H = load_target(o, model ? std::optional<Graph>(model->target) : std::nullopt);
    WhomInstance inst(G, H);
    if (model) {
        if (!(model->target == H))
            throw MalformedInput("weight model '" + o.weights + "' needs its own target");
        inst.weights = model->weights;
    } else if (!o.weights.empty()) {
        auto in = open(o.weights);
        inst.weights = io::read_weights(in, G, H);
    }
    if (!o.lists_path.empty()) {
        auto in = open(o.lists_path);
        inst.lists = io::read_lists(in, G, H);
    }
    if (!o.threshold.empty())
        inst.threshold = ExtendedWeight::parse(o.threshold);
    return inst;
}

inline LocalVariant variant_of(const Options& o) {
    if (o.problem == "lihom")
        return LocalVariant::injective;
    if (o.problem == "lbhom")
        return LocalVariant::bijective;
    if (o.problem == "lshom")
        return LocalVariant::surjective;
    if (o.variant == "inj")
        return LocalVariant::injective;
    if (o.variant == "bij")
        return LocalVariant::bijective;
    if (o.variant == "surj")
        return LocalVariant::surjective;
    throw MalformedInput("unknown variant '" + o.variant + "'");
}

inline int report_whom(const WhomInstance& inst, const WhomResult& r, std::ostream& out) {
    io::write_result(out, r);
    if (inst.threshold) {
        out << "threshold " << *inst.threshold << '\n';
        return r.meets(*inst.threshold) ? ok : negative;
    }
    return r.feasible ? ok : negative;
}

inline int solve_or_oracle(const Options& o, bool oracle, std::ostream& out, std::ostream& err) {
    SearchBudget budget = make_budget(o);
    if (o.problem == "whom") {
        WhomInstance inst = load_whom(o);
        if (oracle)
            return report_whom(inst, oracle_whom(inst, budget), out);
        WhomConfig cfg;
        cfg.budget = &budget;
        WhomStats st;
        auto r = solve_whom(inst, cfg, &st);
        if (o.stats)
            err << "calls " << st.calls << " branch " << st.branch_steps << " separator " << st.separator_steps
                << " colourings " << st.separator_colourings << " leaves " << st.enumerated_leaves << " fallbacks "
                << st.oracle_fallbacks << " largest-separator " << st.largest_separator << '\n';
        return report_whom(inst, r, out);
    }
    if (o.problem != "lihom" && o.problem != "lbhom" && o.problem != "lshom" && o.problem != "local")
        throw MalformedInput("unknown problem '" + o.problem + "' (whom, lihom, lbhom, lshom, local)");
    const Graph G = load_graph(o.graph_path);
    const Graph H = load_target(o);
    const LocalVariant v = variant_of(o);
    std::optional<Homomorphism> h;
    if (oracle) {
        h = oracle_local(G, H, v, budget);
    } else if (v == LocalVariant::surjective) {
        SurjectiveConfig cfg;
        cfg.budget = &budget;
        if (H == targets::path(3))
            h = solve_lshom_p3(G, cfg);
        else if (H == targets::cycle(4))
            h = solve_lshom_c4(G, cfg);
        else
            throw InvalidInstance("the locally surjective solver handles P3 and C4 only; use `oracle`");
    } else {
        LocalConfig cfg;
        cfg.budget = &budget;
        h = v == LocalVariant::injective ? solve_lihom(G, H, cfg) : solve_lbhom(G, H, cfg);
    }
    io::write_decision(out, h);
    return h ? ok : negative;
}

/// A generated instance with the two sides of its equivalence.
struct Generated {
    ReductionOutput out;
    std::function<bool()> source_answer;
    std::function<bool()> generated_answer;
};

inline CnfFormula load_cnf(const Options& o, CnfDialect fallback) {
    if (o.cnf_path.empty())
        throw MalformedInput("missing formula (--cnf)");
    CnfDialect d = fallback;
    if (o.dialect == "posnae3")
        d = CnfDialect::pos_nae_3sat;
    else if (o.dialect == "3sat")
        d = CnfDialect::three_sat;
    else if (!o.dialect.empty())
        throw MalformedInput("unknown dialect '" + o.dialect + "' (posnae3, 3sat)");
    auto in = open(o.cnf_path);
    return parse_dimacs(in, d);
}

/// Wraps a cut instance as a weighted homomorphism into the looped edge.
inline ReductionOutput as_maxcut(const CutInstance& c, std::string notes) {
    auto model = weight_model_maxcut(c.graph);
    ReductionOutput r;
    r.instance = c.graph;
    r.target = model.target;
    r.weights = model.weights;
    r.lists = ListAssignment::full(c.graph, model.target);
    r.threshold = ExtendedWeight(c.threshold);
    r.notes = std::move(notes);
    return r;
}

inline Generated generate(const Options& o) {
    const std::string& kind = o.problem;
    auto need_k = [&] {
        if (!o.k_set)
            throw MalformedInput("generator '" + kind + "' needs -k");
        return o.k;
    };
    auto whom_answer = [](const ReductionOutput& r, SearchBudget b) {
        return [r, b] { return homlab::generated_answer(r, b); };
    };
    SearchBudget budget = make_budget(o);
    Generated g;
    if (kind == "maxcut") {
        CnfFormula f = load_cnf(o, CnfDialect::pos_nae_3sat);
        g.out = as_maxcut(posnae3sat_to_maxcut(f), "positive NAE formula to max cut with 9-cycle clause gadgets");
        g.source_answer = [f] { return brute::satisfiable(f); };
        g.generated_answer = whom_answer(g.out, budget);
    } else if (kind == "bisection") {
        Graph G = load_graph(o.graph_path);
        const long long k = need_k();
        CutInstance c = maxcut_to_bisection(G, k);
        g.out.instance = c.graph;
        g.out.target = targets::loop_edge();
        g.out.threshold = ExtendedWeight(c.threshold);
        g.out.notes = "max cut to max bisection by adding a pendant to every vertex (threshold is a bisection size)";
        g.source_answer = [G, k] { return brute::max_cut(G) >= k; };
        g.generated_answer = [c] {
            auto b = brute::max_bisection(c.graph);
            return b && *b >= c.threshold;
        };
    } else if (kind == "maxcut-segments") {
        Graph G = load_graph(o.graph_path);
        const long long k = need_k();
        g.out = bisection_to_maxcut_segments(G, k);
        g.source_answer = [G, k] {
            auto b = brute::max_bisection(G);
            return b && *b >= k;
        };
        g.generated_answer = whom_answer(g.out, budget);
    } else if (kind == "oct" || kind == "c4") {
        Graph G = load_graph(o.graph_path);
        const long long k = need_k();
        g.out = kind == "oct" ? is_to_oct_segments(G, k) : is_to_whom_c4(G, k);
        g.source_answer = [G, k] { return brute::independence_number(G) >= k; };
        g.generated_answer = whom_answer(g.out, budget);
    } else if (kind == "lshom-path" || kind == "lshom-cycle" || kind == "lshom-loop-pendant") {
        CnfFormula f = load_cnf(o, CnfDialect::three_sat);
        if (kind == "lshom-path")
            g.out = threesat_to_lshom_path(f, static_cast<int>(need_k()));
        else if (kind == "lshom-cycle")
            g.out = threesat_to_lshom_cycle(f, static_cast<int>(need_k()));
        else
            g.out = threesat_to_lshom_loopedge(f, o.occ_clique);
        g.source_answer = [f] { return brute::satisfiable(f); };
        g.generated_answer = whom_answer(g.out, budget);
    } else if (kind == "random-2dir") {
        auto arr = random_axis_parallel(o.count, o.seed, o.grid, o.max_length);
        auto model = weight_model_maxcut(geometry::intersection_graph(arr));
        g.out.instance = geometry::intersection_graph(arr);
        g.out.target = model.target;
        g.out.weights = model.weights;
        g.out.lists = ListAssignment::full(g.out.instance, g.out.target);
        g.out.threshold = ExtendedWeight(0);
        g.out.arrangement = std::move(arr);
        g.out.claimed_slope_count = 2;
        g.out.notes = "seeded random axis-parallel segments with the max cut weight model (seed " +
                      std::to_string(o.seed) + ")";
    } else {
        throw MalformedInput("unknown generator '" + kind +
                             "' (maxcut, bisection, maxcut-segments, oct, c4, lshom-path, lshom-cycle, "
                             "lshom-loop-pendant, random-2dir)");
    }
    return g;
}

inline void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
    std::ofstream f(path);
    if (!f)
        throw MalformedInput("cannot write '" + path + "'");
    body(f);
}

inline int cmd_generate(const Options& o, std::ostream& out) {
    Generated g = generate(o);
    const ReductionOutput& r = g.out;
    io::write_info(out, r);
    if (r.arrangement)
        out << "segments " << r.arrangement->size() << '\n';
    if (o.output.empty())
        return ok;
    write_file(o.output + ".graph", [&](std::ostream& f) { io::write_graph(f, r.instance); });
    write_file(o.output + ".target", [&](std::ostream& f) { io::write_graph(f, r.target); });
    if (r.weights)
        write_file(o.output + ".weights", [&](std::ostream& f) { io::write_weights(f, r.instance, r.target, *r.weights); });
    if (r.lists)
        write_file(o.output + ".lists", [&](std::ostream& f) { io::write_lists(f, *r.lists); });
    if (r.arrangement)
        write_file(o.output + ".seg", [&](std::ostream& f) { io::write_segments(f, *r.arrangement); });
    write_file(o.output + ".info", [&](std::ostream& f) { io::write_info(f, r); });
    return ok;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
    Generated g = generate(o);
    if (!g.source_answer)
        throw MalformedInput("generator '" + o.problem + "' has no source problem to verify against");
    bool source = false, generated = false;
    if (o.jobs > 1) {
        auto s = std::async(std::launch::async, g.source_answer);
        generated = g.generated_answer();
        source = s.get();
    } else {
        source = g.source_answer();
        generated = g.generated_answer();
    }
    const bool fidelity = g.out.arrangement_matches() && g.out.slope_claim_holds();
    out << "source " << (source ? "yes" : "no") << '\n';
    out << "generated " << (generated ? "yes" : "no") << '\n';
    out << "arrangement " << (g.out.arrangement ? (fidelity ? "matches" : "mismatch") : "none") << '\n';
    const bool equal = source == generated && fidelity;
    out << "equivalent " << (equal ? "true" : "false") << '\n';
    return equal ? ok : negative;
}

inline int cmd_check_star(const Options& o, std::ostream& out) {
    Graph H = o.graph_path.empty() ? load_target(o) : load_graph(o.graph_path);
    const bool star = has_property_star(H);
    out << (star ? "true" : "false") << '\n';
    if (auto w = forbidden_subgraph_witness(H)) {
        out << "witness " << w->name() << '\n';
        for (std::size_t i = 0; i < w->embedding.size(); ++i)
            out << "embed " << i << ' ' << w->embedding[i] << '\n';
    }
    return ok;
}

inline geometry::SegmentArrangement load_segments(const std::string& path) {
    auto in = open(path);
    return io::read_segments(in);
}

inline Balance parse_beta(const std::string& text) {
    auto r = geometry::parse_rational(text);
    Balance b{static_cast<std::int64_t>(numerator(r)), static_cast<std::int64_t>(denominator(r))};
    b.check();
    return b;
}

inline void print_set(std::ostream& out, const char* name, const std::vector<Vertex>& vs) {
    out << name;
    for (Vertex v : vs)
        out << ' ' << v;
    out << '\n';
}

inline int cmd_separator(const Options& o, std::ostream& out) {
    Graph G = load_graph(o.graph_path);
    Balance beta = parse_beta(o.beta);
    std::optional<Separation> sep;
    if (o.heuristic) {
        sep = heuristic_separator(G, beta);
    } else {
        SearchBudget budget = make_budget(o);
        sep = find_balanced_separator(G, o.max_size < 0 ? G.vertex_count() : o.max_size, beta, &budget);
    }
    if (!sep) {
        out << "none\n";
        return negative;
    }
    if (!verify_separation(G, *sep))
        throw ContractViolation("separator finder returned an invalid separation");
    out << "size " << sep->S.size() << '\n';
    print_set(out, "S", sep->S);
    print_set(out, "V1", sep->V1);
    print_set(out, "V2", sep->V2);
    return ok;
}

inline int cmd_segments_to_graph(const Options& o, std::ostream& out) {
    auto arr = load_segments(o.segments_path);
    Graph G = geometry::intersection_graph(arr);
    out << "# slopes " << geometry::slope_count(arr) << '\n';
    io::write_graph(out, G);
    return ok;
}

inline int cmd_induced_path(const Options& o, std::ostream& out) {
    Graph G = load_graph(o.graph_path);
    const int len = longest_induced_path_length(G, o.cap);
    if (len > o.cap)
        out << "longest-induced-path >" << o.cap << '\n';
    else
        out << "longest-induced-path " << len << '\n';
    return ok;
}

} // namespace detail

/// Runs the command line; returns the exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app("Homomorphism solvers and hardness-instance generators for segment graphs", "homlab");
    app.require_subcommand(1);
    Options o;

    auto budget_flags = [&](CLI::App* c) {
        c->add_option("--nodes", o.nodes, "node budget for exhaustive searches")->check(CLI::PositiveNumber);
        c->add_option("--time-ms", o.time_ms, "wall-clock cap in milliseconds (HOMLAB_BUDGET_MS overrides)")
            ->check(CLI::PositiveNumber);
        c->add_option("--jobs", o.jobs, "worker threads; 1 is the deterministic reference mode")
            ->check(CLI::PositiveNumber);
    };
    auto instance_flags = [&](CLI::App* c) {
        c->add_option("problem", o.problem, "whom, lihom, lbhom, lshom or local")->required();
        c->add_option("-g,--graph", o.graph_path, "instance graph file");
        c->add_option("-t,--target", o.target, "named target (P3, Ck:6, Kk:4, Kk-reflexive:3, coP:5, loop-edge, ...)");
        c->add_option("--target-file", o.target_path, "target graph file");
        c->add_option("-w,--weights", o.weights, "maxcut, oct, independent-set or a weight file");
        c->add_option("-l,--lists", o.lists_path, "list file");
        c->add_option("--threshold", o.threshold, "decision threshold (integer or -inf)");
        c->add_option("--variant", o.variant, "inj, bij or surj (for `local`)");
        c->add_flag("--stats", o.stats, "print solver counters to stderr");
        budget_flags(c);
    };
    auto generator_flags = [&](CLI::App* c) {
        c->add_option("kind", o.problem, "generator")->required();
        c->add_option("--cnf", o.cnf_path, "DIMACS formula");
        c->add_option("--dialect", o.dialect, "posnae3 or 3sat");
        c->add_option("-g,--graph", o.graph_path, "source graph file");
        auto* k = c->add_option("-k", o.k, "threshold or target size");
        c->callback([&o, k] { o.k_set = k->count() > 0; });
        c->add_flag("--occ-clique", o.occ_clique, "make occurrence vertices a clique (lshom-loop-pendant)");
        c->add_option("--count", o.count, "segments (random-2dir)");
        c->add_option("--grid", o.grid, "coordinate range (random-2dir)");
        c->add_option("--max-length", o.max_length, "longest segment (random-2dir)");
        c->add_option("--seed", o.seed, "random seed (random-2dir)");
        budget_flags(c);
    };

    auto* solve = app.add_subcommand("solve", "run the structured solver");
    instance_flags(solve);
    auto* oracle = app.add_subcommand("oracle", "run the exhaustive oracle");
    instance_flags(oracle);
    auto* gen = app.add_subcommand("generate", "emit a generated instance");
    generator_flags(gen);
    gen->add_option("-o,--output", o.output, "file prefix for .graph/.target/.weights/.lists/.seg/.info");
    auto* verify = app.add_subcommand("verify", "check a generated instance against its source by brute force");
    generator_flags(verify);
    auto* star = app.add_subcommand("check-star", "test property (*) and print a forbidden induced subgraph");
    star->add_option("graph", o.graph_path, "graph file");
    star->add_option("-t,--target", o.target, "named graph instead of a file");
    auto* sep = app.add_subcommand("separator", "minimum balanced separator");
    sep->add_option("graph", o.graph_path, "graph file")->required();
    sep->add_option("--max-size", o.max_size, "largest separator to try (default n)");
    sep->add_option("--beta", o.beta, "balance, a rational in (1/2, 1)");
    sep->add_flag("--heuristic", o.heuristic, "BFS-layer heuristic instead of exhaustive search");
    budget_flags(sep);
    auto* s2g = app.add_subcommand("segments-to-graph", "intersection graph of a segment file");
    s2g->add_option("segments", o.segments_path, "segment file")->required();
    auto* ip = app.add_subcommand("induced-path", "longest induced path (vertices)");
    ip->add_option("graph", o.graph_path, "graph file")->required();
    ip->add_option("--cap", o.cap, "stop searching beyond this many vertices")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : error;
    }

    try {
        if (*solve)
            return detail::solve_or_oracle(o, false, out, err);
        if (*oracle)
            return detail::solve_or_oracle(o, true, out, err);
        if (*gen)
            return detail::cmd_generate(o, out);
        if (*verify)
            return detail::cmd_verify(o, out);
        if (*star)
            return detail::cmd_check_star(o, out);
        if (*sep)
            return detail::cmd_separator(o, out);
        if (*s2g)
            return detail::cmd_segments_to_graph(o, out);
        if (*ip)
            return detail::cmd_induced_path(o, out);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return budget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return error;
    }
    return error;
}

} // namespace homlab::cli
