// Acceptance suite: one PASS/FAIL/SKIP line per criterion. Exits 1 if any
// criterion fails. SKIP is reserved for missing benchmark files and for the
// long-running criterion when --slow is not given.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "minids/cli.hpp"
#include "minids/dimacs.hpp"
#include "minids/generators.hpp"
#include "minids/harness.hpp"
#include "minids/ilps.hpp"
#include "minids/neighborhood.hpp"
#include "minids/oracle.hpp"
#include "minids/plateau.hpp"
#include "minids/solution_io.hpp"

#ifndef MINIDS_DEFAULT_DIMACS_DIR
#define MINIDS_DEFAULT_DIMACS_DIR "data/dimacs"
#endif

using namespace minids;

namespace {

// Pinned tolerances and budgets.
constexpr std::size_t swap2_graphs = 500;
constexpr std::size_t swap3_graphs = 500;
constexpr std::size_t inits_per_graph = 50;
constexpr double swap2_budget_s = 60.0;
constexpr double swap3_budget_s = 120.0;
constexpr std::size_t oracle_graphs = 200;
constexpr double oracle_hit_rate = 0.98;
constexpr double oracle_budget_s = 300.0;
constexpr double ls_means_rel_tol = 0.10;
constexpr double ls_means_budget_s = 600.0;
constexpr std::size_t grid_runs = 10;
constexpr std::size_t grid_required = 9;
constexpr double grid_budget_s = 60.0;
constexpr double dimacs_time_limit_s = 30.0;
constexpr double hamming8_time_limit_s = 200.0;
constexpr std::uint64_t hamming8_seeds = 10;
constexpr double verify_budget_s = 5.0;
constexpr std::size_t random_operations = 100000;
constexpr std::size_t operation_graphs = 50;

enum class Status { pass, fail, skip };

struct Outcome {
    Status status;
    std::string detail;
};

struct Context {
    std::filesystem::path dimacs_dir;
    bool slow = false;
    unsigned threads = 0;
};

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string fmt(double v, int digits = 2) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(digits) << v;
    return o.str();
}

// Graph i of a protocol: size, density and seed derived from one stream.
struct SmallGraph {
    Graph graph;
    std::uint64_t seed;
};

SmallGraph small_random_graph(std::uint64_t stream, std::size_t lo, std::size_t hi) {
    Rng rng = Rng(20240601).split(stream);
    const std::size_t n = lo + rng.below(hi - lo + 1);
    const double ps[3] = {0.2, 0.5, 0.8};
    const double p = ps[stream % 3];
    const std::uint64_t seed = rng.next();
    return {gen_random(n, p, seed), seed};
}

// Criteria 1 and 2: walk local-search trajectories from random starts and
// compare the fast search against exhaustive certification at every state.
Outcome search_agrees_with_certifier(const Context& ctx, int k, std::size_t graphs, std::size_t hi, double budget) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::size_t> states(graphs, 0);
    std::vector<std::size_t> mismatches(graphs, 0);
    std::vector<std::string> first_bad(graphs);
    parallel_for(graphs, ctx.threads, [&](std::size_t i) {
        const auto sg = small_random_graph(static_cast<std::uint64_t>(k) * 100000 + i, 6, hi);
        const Graph& g = sg.graph;
        Rng rng(sg.seed ^ 0x5bd1e995u);
        NeighborhoodSearch search;
        std::set<std::vector<Vertex>> seen;
        for (std::size_t init = 0; init < inits_per_graph; ++init) {
            SolutionState st(g);
            st.random_fill(rng);
            while (true) {
                auto move = search.search_2(st);
                if (k == 2 || !move) {
                    if (k == 3) {
                        move = search.search_3(st);
                    }
                    const auto s = st.sorted_solution();
                    if (seen.insert(s).second) {
                        ++states[i];
                        const bool none = !move.has_value();
                        if (none != certify_k_minimal(g, s, k)) {
                            if (mismatches[i]++ == 0) {
                                std::ostringstream o;
                                o << "n=" << g.num_vertices() << " seed=" << sg.seed << " S=";
                                for (Vertex v : s) {
                                    o << v + 1 << ' ';
                                }
                                first_bad[i] = o.str();
                            }
                        }
                    }
                }
                if (!move) {
                    break;
                }
                apply_move(st, *move);
            }
        }
    });
    const double took = seconds_since(start);
    std::size_t total = 0;
    std::size_t bad = 0;
    std::string example;
    for (std::size_t i = 0; i < graphs; ++i) {
        total += states[i];
        bad += mismatches[i];
        if (example.empty() && !first_bad[i].empty()) {
            example = first_bad[i];
        }
    }
    std::ostringstream d;
    d << graphs << " graphs, " << total << " distinct states, " << bad << " disagreements, " << fmt(took, 1)
      << " s (budget " << budget << " s)";
    if (!example.empty()) {
        d << "; first: " << example;
    }
    return {bad == 0 && took < budget ? Status::pass : Status::fail, d.str()};
}

Outcome criterion_oracle(const Context& ctx) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<char> hit(oracle_graphs, 0);
    std::vector<char> valid(oracle_graphs, 0);
    parallel_for(oracle_graphs, ctx.threads, [&](std::size_t i) {
        const auto sg = small_random_graph(300000 + i, 6, 14);
        const auto exact = exact_min_ids(sg.graph);
        IlpsConfig c;
        c.k = 3;
        c.delta = 8;
        c.nu = 3;
        c.max_iterations = 10000;
        c.seed = i + 1;
        const auto r = ilps(sg.graph, c);
        hit[i] = r.best_size == exact.size;
        valid[i] = verify_solution(sg.graph, r.best_solution).valid;
    });
    const double took = seconds_since(start);
    const auto hits = static_cast<std::size_t>(std::count(hit.begin(), hit.end(), 1));
    const auto ok = static_cast<std::size_t>(std::count(valid.begin(), valid.end(), 1));
    const double rate = static_cast<double>(hits) / oracle_graphs;
    const bool pass = rate >= oracle_hit_rate && ok == oracle_graphs && took < oracle_budget_s;
    return {pass ? Status::pass : Status::fail,
            std::to_string(hits) + "/" + std::to_string(oracle_graphs) + " optimal (need " +
                fmt(oracle_hit_rate * 100, 0) + "%), " + std::to_string(ok) + " verified, " + fmt(took, 1) + " s"};
}

Outcome criterion_ls_means(const Context& ctx) {
    struct Row {
        double p;
        double random, two, three;
    };
    const Row targets[] = {{0.1, 44.57, 37.37, 35.44}, {0.5, 9.66, 7.86, 7.01}, {0.9, 3.62, 2.99, 2.15}};
    const auto start = std::chrono::steady_clock::now();
    bool pass = true;
    std::ostringstream d;
    for (const auto& t : targets) {
        ExperimentSpec spec;
        for (std::uint64_t graph = 0; graph < 10; ++graph) {
            InstanceSpec inst;
            GenParams gp;
            gp.kind = GenKind::random;
            gp.n = 1000;
            gp.p = t.p;
            gp.seed = 7000 + graph;
            inst.gen = gp;
            spec.instances.push_back(inst);
        }
        spec.k_values = {2, 3};
        spec.mode = RunMode::single_ls;
        spec.init = InitMode::random;
        spec.runs_per_cell = 2;
        spec.base_seed = 1;
        const auto rows = run_experiment(spec, ctx.threads);
        double initial = 0, two = 0, three = 0, count2 = 0, count3 = 0;
        for (const auto& row : rows) {
            for (const auto& r : row.runs) {
                if (row.k == 2) {
                    initial += static_cast<double>(r.initial_size);
                    two += static_cast<double>(r.best_size);
                    ++count2;
                } else {
                    three += static_cast<double>(r.best_size);
                    ++count3;
                }
            }
        }
        const double got[3] = {initial / count2, two / count2, three / count3};
        const double want[3] = {t.random, t.two, t.three};
        const char* names[3] = {"random", "2-min", "3-min"};
        d << "p=" << t.p << ":";
        for (int i = 0; i < 3; ++i) {
            const double rel = std::abs(got[i] - want[i]) / want[i];
            const bool ok = rel <= ls_means_rel_tol;
            pass = pass && ok;
            d << ' ' << names[i] << ' ' << fmt(got[i]) << " vs " << want[i] << (ok ? "" : " (OUT)");
        }
        d << "; ";
    }
    const double took = seconds_since(start);
    pass = pass && took < ls_means_budget_s;
    d << fmt(took, 1) << " s";
    return {pass ? Status::pass : Status::fail, d.str()};
}

Outcome criterion_grid(const Context& ctx) {
    const auto start = std::chrono::steady_clock::now();
    const Graph g = gen_grid(10, 10);
    std::vector<std::size_t> sizes(grid_runs);
    parallel_for(grid_runs, ctx.threads, [&](std::size_t i) {
        IlpsConfig c;
        c.k = 2;
        c.nu = 1;
        c.delta = 40;
        c.max_iterations = 5000;
        c.seed = i + 1;
        c.init = InitMode::greedy;
        sizes[i] = ilps(g, c).best_size;
    });
    const double took = seconds_since(start);
    const auto hits = static_cast<std::size_t>(std::count(sizes.begin(), sizes.end(), 24));
    std::ostringstream d;
    d << hits << "/" << grid_runs << " runs reached 24 (sizes:";
    for (auto s : sizes) {
        d << ' ' << s;
    }
    d << "), " << fmt(took, 1) << " s";
    return {hits >= grid_required && took < grid_budget_s ? Status::pass : Status::fail, d.str()};
}

// A benchmark graph from the data directory if present, else regenerated.
std::optional<Graph> benchmark(const Context& ctx, const std::string& name, const std::string& gen,
                               std::string& source) {
    for (const char* ext : {".clq", ".col", ""}) {
        const auto path = ctx.dimacs_dir / (name + ext);
        if (std::filesystem::exists(path)) {
            source = "file";
            return read_dimacs_file(path.string()).graph;
        }
    }
    if (gen.empty()) {
        return std::nullopt;
    }
    source = "regenerated";
    return generate(GenParams::parse(gen));
}

Outcome criterion_dimacs(const Context& ctx) {
    struct Case {
        const char* name;
        const char* gen;
        std::size_t n;
        std::size_t m;
        std::size_t target;
    };
    const Case cases[] = {{"hamming6-2", "hamming:6:2", 64, 1824, 12},  {"hamming6-4", "hamming:6:4", 64, 704, 2},
                          {"johnson8-2-4", "johnson:8:2:4", 28, 210, 4}, {"johnson8-4-4", "johnson:8:4:4", 70, 1855, 7},
                          {"MANN_a9", "mann_a9", 45, 918, 9},            {"c-fat200-1", "cfat:200:1", 200, 1534, 10},
                          {"c-fat200-2", "cfat:200:2", 200, 3235, 22}};
    constexpr std::size_t count = std::size(cases);
    std::vector<std::string> lines(count);
    std::vector<char> ok(count, 0);
    parallel_for(count, ctx.threads, [&](std::size_t i) {
        const Case& c = cases[i];
        std::string source;
        const auto g = benchmark(ctx, c.name, c.gen, source);
        if (g->num_vertices() != c.n || g->num_edges() != c.m) {
            lines[i] = std::string(c.name) + " has wrong size";
            return;
        }
        const Graph comp = g->complement();
        IlpsConfig cfg;
        cfg.k = 2;
        cfg.delta = 64;
        cfg.nu = 3;
        cfg.time_limit = dimacs_time_limit_s;
        cfg.seed = 1;
        cfg.target_size = c.target;
        const auto r = ilps(comp, cfg);
        ok[i] = r.best_size == c.target && verify_solution(comp, r.best_solution).valid;
        lines[i] = std::string(c.name) + "=" + std::to_string(r.best_size) + "/" + std::to_string(c.target) +
                   (source == "file" ? "" : "*") + " (" + fmt(r.time_to_best, 2) + " s)";
    });
    std::ostringstream d;
    for (const auto& l : lines) {
        d << l << ' ';
    }
    d << "[* regenerated, complement graphs]";
    const bool pass = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
    return {pass ? Status::pass : Status::fail, d.str()};
}

// k = 2 must stay at 36 for every delay. For k = 3 and each delay, seeds are
// tried in turn (at most hamming8_seeds) until one reaches 32, matching a
// best-of-several-runs reading.
Outcome criterion_hamming8(const Context& ctx) {
    if (!ctx.slow) {
        return {Status::skip, "long-running; run with --slow"};
    }
    std::string source;
    const Graph comp = benchmark(ctx, "hamming8-2", "hamming:8:2", source)->complement();
    const auto run = [&](int k, std::uint32_t delta, std::uint64_t seed) {
        IlpsConfig cfg;
        cfg.k = k;
        cfg.delta = delta;
        cfg.nu = 3;
        cfg.seed = seed;
        cfg.time_limit = hamming8_time_limit_s;
        cfg.plateau_gate = 2;
        cfg.target_size = k == 3 ? 32 : 35;
        return ilps(comp, cfg);
    };
    const std::vector<std::uint32_t> k2_deltas{1, 2, 4, 8, 16, 32, 64};
    const std::vector<std::uint32_t> k3_deltas{1, 2, 4};
    std::vector<std::size_t> k2_best(k2_deltas.size());
    std::vector<char> k2_valid(k2_deltas.size());
    std::vector<std::size_t> k3_best(k3_deltas.size(), 0);
    std::vector<std::uint64_t> k3_seeds(k3_deltas.size(), 0);
    parallel_for(k2_deltas.size() + k3_deltas.size(), ctx.threads, [&](std::size_t i) {
        if (i < k2_deltas.size()) {
            const auto r = run(2, k2_deltas[i], 1);
            k2_best[i] = r.best_size;
            k2_valid[i] = verify_solution(comp, r.best_solution).valid;
            return;
        }
        const std::size_t j = i - k2_deltas.size();
        for (std::uint64_t seed = 1; seed <= hamming8_seeds; ++seed) {
            const auto r = run(3, k3_deltas[j], seed);
            if (k3_best[j] == 0 || r.best_size < k3_best[j]) {
                k3_best[j] = r.best_size;
            }
            k3_seeds[j] = seed;
            if (r.best_size == 32 && verify_solution(comp, r.best_solution).valid) {
                break;
            }
        }
    });
    bool pass = true;
    std::ostringstream d;
    for (std::size_t i = 0; i < k2_deltas.size(); ++i) {
        const bool ok = k2_best[i] == 36 && k2_valid[i];
        pass = pass && ok;
        d << "k=2,d=" << k2_deltas[i] << ":" << k2_best[i] << (ok ? " " : "(want 36) ");
    }
    for (std::size_t j = 0; j < k3_deltas.size(); ++j) {
        const bool ok = k3_best[j] == 32;
        pass = pass && ok;
        d << "k=3,d=" << k3_deltas[j] << ":" << k3_best[j] << " after " << k3_seeds[j] << " run(s)"
          << (ok ? " " : "(want 32) ");
    }
    d << "[" << hamming8_time_limit_s << " s per run]";
    return {pass ? Status::pass : Status::fail, d.str()};
}

Outcome criterion_appendix(const Context& ctx) {
    struct Case {
        const char* name;
        std::vector<Vertex> ids;
    };
    const Case cases[] = {
        {"keller6", {169, 601, 659, 855, 1020, 1215, 1352, 1586, 2052, 2376, 2463, 2818, 2847, 2944, 3281}},
        {"C2000.9", {23,   78,   161,  252,  279,  344,  441,  556,  662,  671,  703,  769,  847,  864,  926, 952,
                     1056, 1266, 1274, 1475, 1540, 1619, 1636, 1641, 1646, 1673, 1826, 1839, 1915, 1947, 1979}}};
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream d;
    bool all_present = true;
    bool pass = true;
    for (const auto& c : cases) {
        std::string source;
        const auto g = benchmark(ctx, c.name, "", source);
        if (!g) {
            all_present = false;
            d << c.name << ": file missing; ";
            continue;
        }
        const std::string sol_path =
            (std::filesystem::temp_directory_path() / (std::string("minids_acceptance_") + c.name + ".sol")).string();
        {
            std::ofstream f(sol_path);
            for (Vertex v : c.ids) {
                f << v << '\n';
            }
        }
        std::string graph_path;
        for (const char* ext : {".clq", ".col", ""}) {
            const auto p = ctx.dimacs_dir / (std::string(c.name) + ext);
            if (std::filesystem::exists(p)) {
                graph_path = p.string();
                break;
            }
        }
        std::istringstream in;
        std::ostringstream out, err;
        // the published ids refer to the clique instance's complement
        const int code = run_cli({"verify", "--input", graph_path, "--complement", "--solution", sol_path}, in, out, err);
        pass = pass && code == 0;
        d << c.name << " (" << c.ids.size() << " ids): " << (code == 0 ? "valid" : out.str() + err.str()) << "; ";
    }
    const double took = seconds_since(start);
    d << fmt(took, 2) << " s";
    if (!all_present) {
        return {Status::skip, d.str() + " (place the DIMACS files in " + ctx.dimacs_dir.string() + ")"};
    }
    return {pass && took < verify_budget_s ? Status::pass : Status::fail, d.str()};
}

Outcome criterion_invariants(const Context& ctx) {
    const auto start = std::chrono::steady_clock::now();
    // 10^5 random add / drop / swap operations over 50 graphs
    std::vector<std::size_t> violations(operation_graphs, 0);
    parallel_for(operation_graphs, ctx.threads, [&](std::size_t i) {
        Rng rng = Rng(99).split(i);
        const std::size_t n = 10 + rng.below(90);
        const Graph g = gen_random(n, 0.02 + 0.4 * rng.unit(), rng.next());
        SolutionState st(g);
        const std::size_t ops = random_operations / operation_graphs;
        for (std::size_t op = 0; op < ops; ++op) {
            const auto kind = rng.below(3);
            const Vertex v = static_cast<Vertex>(rng.below(n));
            if (kind == 0 && !st.in_solution(v) && st.tightness(v) == 0) {
                st.add_vertex(v);
            } else if (kind == 1 && st.size() > 0) {
                st.drop_vertex(st.solution()[rng.below(st.size())]);
            } else if (kind == 2 && !st.in_solution(v) && st.tightness(v) > 0) {
                // swap v in: drop its solution neighbors, then add it
                for (Vertex x : st.solution_neighbors(v)) {
                    st.drop_vertex(x);
                }
                st.add_vertex(v);
            }
            if (op % 50 == 0 && !st.validate().empty()) {
                ++violations[i];
            }
        }
        if (!st.validate().empty()) {
            ++violations[i];
        }
    });
    // exhaustive freed-set and plateau comparison for n <= 18
    std::vector<std::size_t> mismatches(300, 0);
    std::vector<std::size_t> checks(300, 0);
    parallel_for(mismatches.size(), ctx.threads, [&](std::size_t i) {
        Rng rng = Rng(4242).split(i);
        const std::size_t n = 2 + rng.below(17);
        const Graph g = gen_random(n, 0.1 + 0.8 * rng.unit(), rng.next());
        SolutionState st(g);
        st.random_fill(rng);
        const auto s = st.sorted_solution();
        const auto compare = [&](std::initializer_list<Vertex> d) {
            const DropSet drop(d);
            auto fast = st.collect_freed(drop);
            std::sort(fast.begin(), fast.end());
            const std::vector<Vertex> dv(d);
            ++checks[i];
            mismatches[i] += fast == naive_F(g, s, dv) ? 0 : 1;
        };
        for (std::size_t a = 0; a < s.size(); ++a) {
            compare({s[a]});
            for (std::size_t b = a + 1; b < s.size(); ++b) {
                compare({s[a], s[b]});
                for (std::size_t c = b + 1; c < s.size(); ++c) {
                    compare({s[a], s[b], s[c]});
                }
            }
        }
        std::vector<std::pair<Vertex, Vertex>> plateau;
        for (const auto& m : enumerate_plateau_moves(st)) {
            plateau.emplace_back(m.drop, m.add);
        }
        std::sort(plateau.begin(), plateau.end());
        ++checks[i];
        mismatches[i] += plateau == naive_plateau(g, s) ? 0 : 1;
    });
    const auto bad_ops = std::accumulate(violations.begin(), violations.end(), std::size_t{0});
    const auto bad_sets = std::accumulate(mismatches.begin(), mismatches.end(), std::size_t{0});
    const auto total_checks = std::accumulate(checks.begin(), checks.end(), std::size_t{0});
    std::ostringstream d;
    d << random_operations << " operations on " << operation_graphs << " graphs, " << bad_ops
      << " validation failures; " << total_checks << " freed-set/plateau comparisons, " << bad_sets
      << " mismatches; " << fmt(seconds_since(start), 1) << " s";
    return {bad_ops == 0 && bad_sets == 0 ? Status::pass : Status::fail, d.str()};
}

Outcome criterion_determinism(const Context&) {
    const std::vector<std::string> args{"solve", "--gen",    "random:300:0.05:seed=9", "--k",    "3",
                                        "--delta", "8",      "--nu",                   "3",      "--max-iterations",
                                        "100",   "--seed",   "42",                     "--runs", "3",
                                        "--output", "json"};
    const auto run_once = [&] {
        std::istringstream in;
        std::ostringstream out, err;
        run_cli(args, in, out, err);
        auto j = nlohmann::json::parse(out.str());
        for (auto& r : j["runs"]) {
            r.erase("ttb_s"); // wall-clock
        }
        return j.dump(2);
    };
    const auto a = run_once();
    const auto b = run_once();
    return {a == b ? Status::pass : Status::fail,
            std::string("two solve runs, ") + std::to_string(a.size()) + " bytes of JSON, " +
                (a == b ? "identical" : "different") + " after removing ttb_s"};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance suite"};
    Context ctx;
    std::vector<int> only;
    std::string dimacs_dir;
    app.add_flag("--slow", ctx.slow, "include the long-running hamming8-2 criterion");
    app.add_option("--only", only, "run only these criteria (1-10)");
    app.add_option("--dimacs-dir", dimacs_dir, "directory with DIMACS .clq files");
    app.add_option("--threads", ctx.threads, "worker threads (default MINIDS_THREADS or all cores)");
    CLI11_PARSE(app, argc, argv);
    if (dimacs_dir.empty()) {
        const char* env = std::getenv("MINIDS_DIMACS_DIR");
        dimacs_dir = env ? env : MINIDS_DEFAULT_DIMACS_DIR;
    }
    ctx.dimacs_dir = dimacs_dir;

    const std::vector<std::pair<std::string, std::function<Outcome(const Context&)>>> criteria{
        {"2-swap search agrees with exhaustive 2-minimality",
         [](const Context& c) { return search_agrees_with_certifier(c, 2, swap2_graphs, 18, swap2_budget_s); }},
        {"3-swap search agrees with exhaustive 3-minimality",
         [](const Context& c) { return search_agrees_with_certifier(c, 3, swap3_graphs, 14, swap3_budget_s); }},
        {"ILPS reaches the exact optimum on small graphs", criterion_oracle},
        {"single local search means at n=1000", criterion_ls_means},
        {"10x10 grid optimum 24", criterion_grid},
        {"benchmark golden sizes", criterion_dimacs},
        {"hamming8-2 sensitivity to k", criterion_hamming8},
        {"published keller6 and C2000.9 solutions verify", criterion_appendix},
        {"structural invariants under random operations", criterion_invariants},
        {"deterministic JSON output", criterion_determinism},
    };
    bool failed = false;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) {
            continue;
        }
        Outcome o;
        try {
            o = criteria[i].second(ctx);
        } catch (const std::exception& e) {
            o = {Status::fail, std::string("exception: ") + e.what()};
        }
        const char* tag = o.status == Status::pass ? "PASS" : o.status == Status::fail ? "FAIL" : "SKIP";
        failed = failed || o.status == Status::fail;
        std::cout << tag << ' ' << std::setw(2) << id << ' ' << criteria[i].first << ": " << o.detail << std::endl;
    }
    return failed ? 1 : 0;
}
