#include "minids/harness.hpp"

#include <algorithm>
#include <chrono>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "minids/dimacs.hpp"
#include "minids/neighborhood.hpp"

namespace minids {

std::string InstanceSpec::id() const {
    std::string base;
    if (file) {
        base = std::filesystem::path(*file).filename().string();
    } else if (gen) {
        base = gen->to_string();
    }
    return complement ? base + ":complement" : base;
}

LoadedInstance load_instance(const InstanceSpec& spec) {
    if (spec.file.has_value() == spec.gen.has_value()) {
        throw std::invalid_argument("an instance needs exactly one of a file and a generator");
    }
    LoadedInstance out;
    out.id = spec.id();
    out.graph = spec.file ? read_dimacs_file(*spec.file).graph : generate(*spec.gen);
    if (spec.complement) {
        out.graph = out.graph.complement();
    }
    out.p_or_density = spec.gen && spec.gen->kind == GenKind::random && !spec.complement ? spec.gen->p
                                                                                       : out.graph.density();
    return out;
}

void ExperimentSpec::validate() const {
    if (instances.empty()) {
        throw std::invalid_argument("experiment: instances must not be empty");
    }
    if (k_values.empty() || delta_values.empty() || nu_values.empty()) {
        throw std::invalid_argument("experiment: k, delta and nu need at least one value each");
    }
    for (int k : k_values) {
        if (k != 2 && k != 3) {
            throw std::invalid_argument("experiment: k values must be 2 or 3");
        }
    }
    if (std::find(delta_values.begin(), delta_values.end(), 0u) != delta_values.end()) {
        throw std::invalid_argument("experiment: delta values must be positive");
    }
    if (std::find(nu_values.begin(), nu_values.end(), 0u) != nu_values.end()) {
        throw std::invalid_argument("experiment: nu values must be positive");
    }
    if (runs_per_cell == 0) {
        throw std::invalid_argument("experiment: runs must be at least 1");
    }
    if (mode == RunMode::ilps && !time_limit && !max_iterations) {
        throw std::invalid_argument("experiment: ilps mode needs time_limit or max_iterations");
    }
}

namespace {

template <typename T>
std::vector<T> number_list(const nlohmann::json& j, const char* key) {
    const auto& v = j.at(key);
    if (v.is_array()) {
        return v.get<std::vector<T>>();
    }
    return {v.get<T>()};
}

InstanceSpec instance_from_json(const nlohmann::json& j) {
    InstanceSpec spec;
    if (j.is_string()) {
        const auto text = j.get<std::string>();
        try {
            spec.gen = GenParams::parse(text);
        } catch (const std::invalid_argument&) {
            spec.file = text;
        }
        return spec;
    }
    if (j.contains("file")) {
        spec.file = j.at("file").get<std::string>();
    }
    if (j.contains("gen")) {
        spec.gen = GenParams::parse(j.at("gen").get<std::string>());
    }
    spec.complement = j.value("complement", false);
    if (spec.file.has_value() == spec.gen.has_value()) {
        throw std::invalid_argument("experiment: each instance needs exactly one of \"file\" and \"gen\"");
    }
    return spec;
}

} // namespace

ExperimentSpec ExperimentSpec::from_json(const nlohmann::json& j) {
    ExperimentSpec spec;
    try {
        for (const auto& item : j.at("instances")) {
            spec.instances.push_back(instance_from_json(item));
        }
        if (j.contains("k")) {
            spec.k_values = number_list<int>(j, "k");
        }
        if (j.contains("delta")) {
            spec.delta_values = number_list<std::uint32_t>(j, "delta");
        }
        if (j.contains("nu")) {
            spec.nu_values = number_list<std::uint32_t>(j, "nu");
        }
        spec.runs_per_cell = j.value("runs", std::size_t{1});
        if (j.contains("time_limit")) {
            spec.time_limit = j.at("time_limit").get<double>();
        }
        if (j.contains("max_iterations")) {
            spec.max_iterations = j.at("max_iterations").get<std::uint64_t>();
        }
        spec.base_seed = j.value("base_seed", std::uint64_t{1});
        const auto mode = j.value("mode", std::string("ilps"));
        if (mode == "ilps") {
            spec.mode = RunMode::ilps;
        } else if (mode == "single_ls") {
            spec.mode = RunMode::single_ls;
        } else {
            throw std::invalid_argument("experiment: mode must be \"ilps\" or \"single_ls\"");
        }
        spec.init = parse_init_mode(j.value("init", spec.mode == RunMode::single_ls ? std::string("random")
                                                                                   : std::string("greedy")));
        if (j.contains("plateau_gate")) {
            spec.plateau_gate = j.at("plateau_gate").get<std::size_t>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("experiment: ") + e.what());
    }
    spec.validate();
    return spec;
}

AggregateRow aggregate(std::vector<RunRecord> runs) {
    if (runs.empty()) {
        throw std::invalid_argument("aggregate needs at least one run");
    }
    AggregateRow row;
    const RunRecord& first = runs.front();
    row.instance = first.instance;
    row.n = first.n;
    row.p_or_density = first.p_or_density;
    row.k = first.k;
    row.delta = first.delta;
    row.nu = first.nu;
    row.min = first.best_size;
    row.max = first.best_size;
    double sum = 0;
    double ttb = 0;
    double initial = 0;
    for (const auto& r : runs) {
        row.min = std::min(row.min, r.best_size);
        row.max = std::max(row.max, r.best_size);
        sum += static_cast<double>(r.best_size);
        ttb += r.ttb_s;
        initial += static_cast<double>(r.initial_size);
    }
    const auto count = static_cast<double>(runs.size());
    row.avg = sum / count;
    row.mean_ttb_s = ttb / count;
    row.mean_initial = initial / count;
    row.runs = std::move(runs);
    return row;
}

unsigned harness_threads() {
    if (const char* env = std::getenv("MINIDS_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
    if (threads == 0) {
        threads = harness_threads();
    }
    const std::size_t workers = std::min<std::size_t>(threads, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (!failed) {
                const std::size_t i = next++;
                if (i >= count) {
                    return;
                }
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                    failed = true;
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

std::vector<AggregateRow> run_experiment(const ExperimentSpec& spec, unsigned threads) {
    spec.validate();
    std::vector<LoadedInstance> loaded;
    loaded.reserve(spec.instances.size());
    for (const auto& inst : spec.instances) {
        loaded.push_back(load_instance(inst));
    }
    return run_experiment(spec, loaded, threads);
}

std::vector<AggregateRow> run_experiment(const ExperimentSpec& spec, const std::vector<LoadedInstance>& instances,
                                         unsigned threads) {
    struct Cell {
        const LoadedInstance* instance;
        int k;
        std::uint32_t delta;
        std::uint32_t nu;
    };
    std::vector<Cell> cells;
    for (const auto& inst : instances) {
        for (int k : spec.k_values) {
            for (std::uint32_t delta : spec.delta_values) {
                for (std::uint32_t nu : spec.nu_values) {
                    cells.push_back({&inst, k, delta, nu});
                }
            }
        }
    }
    const std::size_t runs = spec.runs_per_cell;
    std::vector<RunRecord> records(cells.size() * runs);
    parallel_for(records.size(), threads, [&](std::size_t job) {
        const Cell& cell = cells[job / runs];
        const std::size_t run = job % runs;
        const Graph& g = cell.instance->graph;
        RunRecord& rec = records[job];
        rec.instance = cell.instance->id;
        rec.n = g.num_vertices();
        rec.p_or_density = cell.instance->p_or_density;
        rec.k = cell.k;
        rec.delta = cell.delta;
        rec.nu = cell.nu;
        rec.run = run;
        rec.seed = spec.base_seed + run;
        if (spec.mode == RunMode::single_ls) {
            const auto start = std::chrono::steady_clock::now();
            Rng rng(rec.seed);
            SolutionState st(g);
            if (spec.init == InitMode::random) {
                st.random_fill(rng);
            } else {
                st.greedy_max_degree();
            }
            rec.initial_size = st.size();
            const Deadline deadline = spec.time_limit ? Deadline::after(*spec.time_limit) : Deadline{};
            NeighborhoodSearch search;
            search.local_search(st, cell.k, deadline);
            rec.best_size = st.size();
            rec.solution = st.sorted_solution();
            rec.iterations = search.stats().moves_applied;
            rec.ttb_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return;
        }
        IlpsConfig config;
        config.k = cell.k;
        config.delta = cell.delta;
        config.nu = cell.nu;
        config.time_limit = spec.time_limit;
        config.max_iterations = spec.max_iterations;
        config.seed = rec.seed;
        config.init = spec.init;
        config.plateau_gate = spec.plateau_gate;
        const RunResult result = ilps(g, config);
        rec.best_size = result.best_size;
        rec.initial_size = result.initial_size;
        rec.ttb_s = result.time_to_best;
        rec.iterations = result.iterations;
        rec.solution = result.best_solution;
    });
    std::vector<AggregateRow> rows;
    rows.reserve(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
        rows.push_back(aggregate({records.begin() + static_cast<std::ptrdiff_t>(c * runs),
                                  records.begin() + static_cast<std::ptrdiff_t>((c + 1) * runs)}));
    }
    return rows;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

} // namespace

void write_runs_csv(std::ostream& out, const std::vector<AggregateRow>& rows) {
    out << "instance,n,p_or_density,k,delta,nu,run,seed,best_size,ttb_s,iterations,initial_size\n";
    for (const auto& row : rows) {
        for (const auto& r : row.runs) {
            out << csv_field(r.instance) << ',' << r.n << ',' << r.p_or_density << ',' << r.k << ',' << r.delta
                << ',' << r.nu << ',' << r.run << ',' << r.seed << ',' << r.best_size << ',' << r.ttb_s << ','
                << r.iterations << ',' << r.initial_size << '\n';
        }
    }
}

void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows) {
    out << "instance,n,p_or_density,k,delta,nu,runs,min,avg,max,mean_ttb_s\n";
    for (const auto& row : rows) {
        std::ostringstream avg;
        avg << std::fixed << std::setprecision(1) << row.avg;
        out << csv_field(row.instance) << ',' << row.n << ',' << row.p_or_density << ',' << row.k << ','
            << row.delta << ',' << row.nu << ',' << row.runs.size() << ',' << row.min << ',' << avg.str() << ','
            << row.max << ',' << row.mean_ttb_s << '\n';
    }
}

void write_table(std::ostream& out, const std::vector<AggregateRow>& rows) {
    std::size_t width = 8;
    for (const auto& row : rows) {
        width = std::max(width, row.instance.size());
    }
    out << std::left << std::setw(static_cast<int>(width)) << "instance" << std::right << std::setw(7) << "n"
        << std::setw(3) << "k" << std::setw(7) << "delta" << std::setw(4) << "nu" << std::setw(6) << "Min"
        << std::setw(8) << "Avg" << std::setw(6) << "Max" << std::setw(9) << "TTB" << '\n';
    for (const auto& row : rows) {
        std::ostringstream ttb;
        if (row.mean_ttb_s < 0.1) {
            ttb << "eps";
        } else {
            ttb << std::fixed << std::setprecision(1) << row.mean_ttb_s;
        }
        out << std::left << std::setw(static_cast<int>(width)) << row.instance << std::right << std::setw(7)
            << row.n << std::setw(3) << row.k << std::setw(7) << row.delta << std::setw(4) << row.nu
            << std::setw(6) << row.min << std::setw(8) << std::fixed << std::setprecision(1) << row.avg
            << std::setw(6) << row.max << std::setw(9) << ttb.str() << '\n';
        out.unsetf(std::ios::floatfield);
    }
}

nlohmann::json to_json(const std::vector<AggregateRow>& rows, bool include_wall_clock) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json runs = nlohmann::json::array();
        for (const auto& r : row.runs) {
            nlohmann::json jr{{"instance", r.instance}, {"n", r.n},           {"p_or_density", r.p_or_density},
                              {"k", r.k},               {"delta", r.delta},   {"nu", r.nu},
                              {"run", r.run},           {"seed", r.seed},     {"best_size", r.best_size},
                              {"iterations", r.iterations},                   {"initial_size", r.initial_size}};
            if (include_wall_clock) {
                jr["ttb_s"] = r.ttb_s;
            }
            std::vector<Vertex> one_based(r.solution);
            for (auto& v : one_based) {
                ++v;
            }
            jr["solution"] = one_based;
            runs.push_back(std::move(jr));
        }
        nlohmann::json jrow{{"instance", row.instance}, {"n", row.n},   {"p_or_density", row.p_or_density},
                            {"k", row.k},               {"delta", row.delta}, {"nu", row.nu},
                            {"min", row.min},           {"avg", row.avg},     {"max", row.max},
                            {"runs", std::move(runs)}};
        if (include_wall_clock) {
            jrow["mean_ttb_s"] = row.mean_ttb_s;
        }
        out.push_back(std::move(jrow));
    }
    return out;
}

std::vector<AggregateRow> rows_from_json(const nlohmann::json& j) {
    std::vector<AggregateRow> rows;
    for (const auto& jrow : j) {
        std::vector<RunRecord> runs;
        for (const auto& jr : jrow.at("runs")) {
            RunRecord r;
            r.instance = jr.at("instance").get<std::string>();
            r.n = jr.at("n").get<std::size_t>();
            r.p_or_density = jr.at("p_or_density").get<double>();
            r.k = jr.at("k").get<int>();
            r.delta = jr.at("delta").get<std::uint32_t>();
            r.nu = jr.at("nu").get<std::uint32_t>();
            r.run = jr.at("run").get<std::size_t>();
            r.seed = jr.at("seed").get<std::uint64_t>();
            r.best_size = jr.at("best_size").get<std::size_t>();
            r.iterations = jr.at("iterations").get<std::uint64_t>();
            r.initial_size = jr.at("initial_size").get<std::size_t>();
            r.ttb_s = jr.value("ttb_s", 0.0);
            r.solution = jr.at("solution").get<std::vector<Vertex>>();
            for (auto& v : r.solution) {
                --v;
            }
            runs.push_back(std::move(r));
        }
        rows.push_back(aggregate(std::move(runs)));
    }
    return rows;
}

CoverStudy cover_study(const Graph& g, IlpsConfig config, CoverTarget target, std::size_t runs,
                       std::uint64_t base_seed, std::optional<std::size_t> optimum, unsigned threads) {
    if (target == CoverTarget::optimum_found && !optimum) {
        throw std::invalid_argument("cover study: optimum_found needs the optimal size");
    }
    CoverStudy study;
    study.per_run.resize(runs);
    parallel_for(runs, threads, [&](std::size_t run) {
        IlpsConfig c = config;
        c.seed = base_seed + run;
        std::optional<std::uint64_t> hit;
        if (target == CoverTarget::all_covered) {
            std::vector<char> covered(g.num_vertices(), 0);
            std::size_t remaining = g.num_vertices();
            IlpsHooks hooks;
            hooks.initial = [&](std::uint64_t iteration, std::span<const Vertex> s) {
                for (Vertex v : s) {
                    if (!covered[v]) {
                        covered[v] = 1;
                        --remaining;
                    }
                }
                if (remaining == 0) {
                    hit = iteration;
                    return true;
                }
                return false;
            };
            ilps(g, c, hooks);
        } else {
            c.target_size = optimum;
            const RunResult r = ilps(g, c);
            if (r.best_size <= *optimum) {
                hit = r.iterations;
            }
        }
        study.per_run[run] = hit;
    });
    double sum = 0;
    std::size_t finished = 0;
    for (const auto& r : study.per_run) {
        if (r) {
            sum += static_cast<double>(*r);
            ++finished;
        } else {
            ++study.censored;
        }
    }
    study.mean_iterations = finished > 0 ? sum / static_cast<double>(finished) : 0.0;
    return study;
}

} // namespace minids
