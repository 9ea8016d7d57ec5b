#include "minids/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "minids/dimacs.hpp"
#include "minids/generators.hpp"
#include "minids/harness.hpp"
#include "minids/ilps.hpp"
#include "minids/oracle.hpp"
#include "minids/solution_io.hpp"

namespace minids {

namespace {

// Thrown for problems with the input data rather than the flags.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphSource {
    std::string input;
    std::string gen;
    bool complement = false;

    void add_to(CLI::App& cmd) {
        auto* file = cmd.add_option("--input", input, "DIMACS graph file ('-' reads stdin)");
        auto* spec = cmd.add_option("--gen", gen, "generator: random:N:P[:seed=S], grid:WxH, hamming:N:D, johnson:N:W:D, cfat:N:C, mann_a9");
        file->excludes(spec);
        cmd.add_flag("--complement", complement, "use the complement graph");
    }

    bool given() const { return !input.empty() || !gen.empty(); }

    LoadedInstance load(std::istream& in) const {
        LoadedInstance out;
        try {
            if (!gen.empty()) {
                InstanceSpec spec;
                spec.gen = GenParams::parse(gen);
                spec.complement = complement;
                return load_instance(spec);
            }
            if (input == "-") {
                out.graph = parse_dimacs(in).graph;
                out.id = "stdin";
            } else {
                InstanceSpec spec;
                spec.file = input;
                spec.complement = complement;
                return load_instance(spec);
            }
        } catch (const ParseError& e) {
            throw InputError(e.what());
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        } catch (const std::runtime_error& e) {
            throw InputError(e.what());
        }
        if (complement) {
            out.graph = out.graph.complement();
            out.id += ":complement";
        }
        out.p_or_density = out.graph.density();
        return out;
    }
};

std::string join_one_based(const std::vector<Vertex>& s) {
    std::ostringstream o;
    for (std::size_t i = 0; i < s.size(); ++i) {
        o << (i ? " " : "") << s[i] + 1;
    }
    return o.str();
}

std::vector<Vertex> one_based(std::vector<Vertex> s) {
    for (auto& v : s) {
        ++v;
    }
    return s;
}

struct SolveOptions {
    GraphSource source;
    int k = 2;
    std::uint32_t delta = 1;
    std::uint32_t nu = 1;
    std::optional<double> time_limit;
    std::optional<std::uint64_t> max_iterations;
    std::uint64_t seed = 1;
    std::size_t runs = 1;
    std::string init = "greedy";
    std::optional<std::size_t> plateau_gate;
    std::optional<std::size_t> target_size;
    std::string output = "text";
    std::string trace;
    std::string solution_out;
};

int cmd_solve(const SolveOptions& o, std::istream& in, std::ostream& out) {
    const LoadedInstance inst = o.source.load(in);
    IlpsConfig base;
    base.k = o.k;
    base.delta = o.delta;
    base.nu = o.nu;
    base.time_limit = o.time_limit;
    base.max_iterations = o.max_iterations;
    if (!base.time_limit && !base.max_iterations) {
        base.time_limit = 10.0;
    }
    base.init = parse_init_mode(o.init);
    base.plateau_gate = o.plateau_gate;
    base.target_size = o.target_size;
    base.validate();

    std::vector<RunResult> results(o.runs);
    std::vector<std::string> traces(o.runs);
    parallel_for(o.runs, 0, [&](std::size_t run) {
        IlpsConfig c = base;
        c.seed = o.seed + run;
        IlpsHooks hooks;
        std::ostringstream trace;
        if (!o.trace.empty()) {
            hooks.iteration = [&](const IterationRecord& r) {
                trace << nlohmann::json{{"run", run},
                                        {"seed", c.seed},
                                        {"iteration", r.iteration},
                                        {"after_local_search", r.after_local_search},
                                        {"after_plateau", r.after_plateau},
                                        {"best_size", r.best_size},
                                        {"elapsed_s", r.elapsed}}
                             .dump()
                      << '\n';
                return false;
            };
        }
        results[run] = ilps(inst.graph, c, hooks);
        traces[run] = trace.str();
    });
    if (!o.trace.empty()) {
        std::ofstream t(o.trace);
        if (!t) {
            throw InputError("cannot write trace file " + o.trace);
        }
        for (const auto& s : traces) {
            t << s;
        }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < results.size(); ++i) {
        if (results[i].best_size < results[best].best_size) {
            best = i;
        }
    }
    if (!o.solution_out.empty()) {
        std::ofstream s(o.solution_out);
        if (!s) {
            throw InputError("cannot write solution file " + o.solution_out);
        }
        write_solution(s, results[best].best_solution);
    }

    const Graph& g = inst.graph;
    if (o.output == "json") {
        nlohmann::json runs = nlohmann::json::array();
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            runs.push_back({{"run", i},
                            {"seed", r.seed},
                            {"best_size", r.best_size},
                            {"initial_size", r.initial_size},
                            {"iterations", r.iterations},
                            {"ttb_s", r.time_to_best},
                            {"solution", one_based(r.best_solution)}});
        }
        nlohmann::json config{{"k", base.k},
                              {"delta", base.delta},
                              {"nu", base.nu},
                              {"seed", o.seed},
                              {"runs", o.runs},
                              {"init", o.init}};
        config["time_limit"] = base.time_limit ? nlohmann::json(*base.time_limit) : nlohmann::json(nullptr);
        config["max_iterations"] =
            base.max_iterations ? nlohmann::json(*base.max_iterations) : nlohmann::json(nullptr);
        config["plateau_gate"] = base.plateau_gate ? nlohmann::json(*base.plateau_gate) : nlohmann::json(nullptr);
        config["target_size"] = base.target_size ? nlohmann::json(*base.target_size) : nlohmann::json(nullptr);
        nlohmann::json doc{{"instance", inst.id},
                           {"n", g.num_vertices()},
                           {"m", g.num_edges()},
                           {"config", config},
                           {"best_size", results[best].best_size},
                           {"solution", one_based(results[best].best_solution)},
                           {"runs", runs}};
        out << doc.dump(2) << '\n';
    } else if (o.output == "csv") {
        out << "instance,n,p_or_density,k,delta,nu,run,seed,best_size,ttb_s,iterations,initial_size\n";
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            out << inst.id << ',' << g.num_vertices() << ',' << inst.p_or_density << ',' << base.k << ','
                << base.delta << ',' << base.nu << ',' << i << ',' << r.seed << ',' << r.best_size << ','
                << r.time_to_best << ',' << r.iterations << ',' << r.initial_size << '\n';
        }
    } else {
        out << "instance " << inst.id << ": n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i];
            out << "run " << i << " seed " << r.seed << ": size " << r.best_size << ", ttb " << r.time_to_best
                << " s, iterations " << r.iterations << '\n';
        }
        out << "best size: " << results[best].best_size << '\n';
        out << "solution: " << join_one_based(results[best].best_solution) << '\n';
    }
    return 0;
}

int cmd_verify(const GraphSource& source, const std::string& solution_file, std::istream& in, std::ostream& out) {
    const LoadedInstance inst = source.load(in);
    std::vector<Vertex> s;
    try {
        s = read_solution_file(solution_file, inst.graph.num_vertices());
    } catch (const std::exception& e) {
        throw InputError(solution_file + ": " + e.what());
    }
    const VerifyReport report = verify_solution(inst.graph, s);
    if (report.valid) {
        out << "valid: independent dominating set of size " << s.size() << '\n';
        return 0;
    }
    out << "invalid: " << report.message << '\n';
    return 1;
}

int cmd_oracle(const GraphSource& source, const std::string& output, std::istream& in, std::ostream& out) {
    const LoadedInstance inst = source.load(in);
    ExactResult r;
    try {
        r = exact_min_ids(inst.graph);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    if (output == "json") {
        out << nlohmann::json{{"instance", inst.id},
                              {"n", inst.graph.num_vertices()},
                              {"m", inst.graph.num_edges()},
                              {"optimum", r.size},
                              {"solution", one_based(r.solution)}}
                   .dump(2)
            << '\n';
    } else {
        out << "optimum: " << r.size << '\n' << "solution: " << join_one_based(r.solution) << '\n';
    }
    return 0;
}

int cmd_gen(const std::string& spec, bool complement, const std::string& file, std::ostream& out) {
    GenParams params;
    try {
        params = GenParams::parse(spec);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    Graph g = generate(params);
    std::string comment = "generated by minids gen " + spec;
    if (complement) {
        g = g.complement();
        comment += " --complement";
    }
    if (file.empty() || file == "-") {
        write_dimacs(out, g, comment);
        return 0;
    }
    std::ofstream f(file);
    if (!f) {
        throw InputError("cannot write " + file);
    }
    write_dimacs(f, g, comment);
    return 0;
}

struct ExperimentOptions {
    std::string spec_file;
    std::string runs_csv;
    std::string json_file;
    bool table = false;
    unsigned threads = 0;
};

int cmd_experiment(const ExperimentOptions& o, std::ostream& out) {
    std::ifstream f(o.spec_file);
    if (!f) {
        throw InputError("cannot open experiment spec " + o.spec_file);
    }
    ExperimentSpec spec;
    try {
        spec = ExperimentSpec::from_json(nlohmann::json::parse(f));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(o.spec_file + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(o.spec_file + ": " + e.what());
    }
    // resolve relative instance paths against the spec's directory
    const auto base = std::filesystem::path(o.spec_file).parent_path();
    for (auto& inst : spec.instances) {
        if (inst.file && std::filesystem::path(*inst.file).is_relative() && !std::filesystem::exists(*inst.file)) {
            inst.file = (base / *inst.file).string();
        }
    }
    std::vector<AggregateRow> rows;
    try {
        rows = run_experiment(spec, o.threads);
    } catch (const ParseError& e) {
        throw InputError(e.what());
    }
    if (o.table) {
        write_table(out, rows);
    } else {
        write_aggregate_csv(out, rows);
    }
    if (!o.runs_csv.empty()) {
        std::ofstream r(o.runs_csv);
        if (!r) {
            throw InputError("cannot write " + o.runs_csv);
        }
        write_runs_csv(r, rows);
    }
    if (!o.json_file.empty()) {
        std::ofstream j(o.json_file);
        if (!j) {
            throw InputError("cannot write " + o.json_file);
        }
        j << to_json(rows).dump(2) << '\n';
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimum independent dominating set solver", "minids"};
    app.require_subcommand(1);

    SolveOptions solve;
    auto* solve_cmd = app.add_subcommand("solve", "run iterated local search on a graph");
    solve.source.add_to(*solve_cmd);
    solve_cmd->add_option("--k", solve.k, "swap neighborhood size")->check(CLI::IsMember({2, 3}));
    solve_cmd->add_option("--delta", solve.delta, "penalty delay")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--nu", solve.nu, "expected number of forced vertices per kick")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--time-limit", solve.time_limit, "seconds per run (default 10 without --max-iterations)")
        ->check(CLI::NonNegativeNumber);
    solve_cmd->add_option("--max-iterations", solve.max_iterations, "iteration cap per run");
    solve_cmd->add_option("--seed", solve.seed, "seed of the first run; run i uses seed + i");
    solve_cmd->add_option("--runs", solve.runs, "independent runs")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--init", solve.init, "initial solution")->check(CLI::IsMember({"greedy", "random"}));
    solve_cmd->add_option("--plateau-gate", solve.plateau_gate, "k=3: plateau search only when |S| <= |S*| + gate");
    solve_cmd->add_option("--target-size", solve.target_size, "stop once a solution this small is found");
    solve_cmd->add_option("--output", solve.output, "report format")->check(CLI::IsMember({"text", "json", "csv"}));
    solve_cmd->add_option("--trace", solve.trace, "write per-iteration JSON lines here");
    solve_cmd->add_option("--solution-out", solve.solution_out, "write the best solution (1-based ids) here");

    GraphSource verify_source;
    std::string solution_file;
    auto* verify_cmd = app.add_subcommand("verify", "check that a vertex set is independent and dominating");
    verify_source.add_to(*verify_cmd);
    verify_cmd->add_option("--solution", solution_file, "file of 1-based vertex ids")->required();

    GraphSource oracle_source;
    std::string oracle_output = "text";
    auto* oracle_cmd = app.add_subcommand("oracle", "exact minimum by exhaustive search (n <= 26)");
    oracle_source.add_to(*oracle_cmd);
    oracle_cmd->add_option("--output", oracle_output, "report format")->check(CLI::IsMember({"text", "json"}));

    std::string gen_spec;
    bool gen_complement = false;
    std::string gen_file;
    auto* gen_cmd = app.add_subcommand("gen", "write a generated graph in DIMACS format");
    gen_cmd->add_option("spec", gen_spec, "generator spec")->required();
    gen_cmd->add_flag("--complement", gen_complement, "write the complement graph");
    gen_cmd->add_option("--output,-o", gen_file, "output file (default stdout)");

    ExperimentOptions exp;
    auto* exp_cmd = app.add_subcommand("experiment", "run an experiment spec (JSON) and print per-cell CSV");
    exp_cmd->add_option("spec", exp.spec_file, "experiment spec file")->required();
    exp_cmd->add_option("--runs-csv", exp.runs_csv, "also write per-run CSV here");
    exp_cmd->add_option("--json", exp.json_file, "also write rows and runs as JSON here");
    exp_cmd->add_flag("--table", exp.table, "print an aligned table instead of CSV");
    exp_cmd->add_option("--threads", exp.threads, "worker threads (default MINIDS_THREADS or all cores)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if ((solve_cmd->parsed() && !solve.source.given()) || (verify_cmd->parsed() && !verify_source.given()) ||
            (oracle_cmd->parsed() && !oracle_source.given())) {
            throw CLI::RequiredError("--input or --gen");
        }
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        for (const auto* sub : app.get_subcommands()) {
            target = sub;
        }
        out << target->help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n";
        const CLI::App* target = &app;
        for (const auto* sub : app.get_subcommands()) {
            target = sub;
        }
        err << target->help();
        return 2;
    }

    try {
        if (solve_cmd->parsed()) {
            return cmd_solve(solve, in, out);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(verify_source, solution_file, in, out);
        }
        if (oracle_cmd->parsed()) {
            return cmd_oracle(oracle_source, oracle_output, in, out);
        }
        if (gen_cmd->parsed()) {
            return cmd_gen(gen_spec, gen_complement, gen_file, out);
        }
        return cmd_experiment(exp, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace minids
