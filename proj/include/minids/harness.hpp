#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "minids/generators.hpp"
#include "minids/graph.hpp"
#include "minids/ilps.hpp"

namespace minids {

/// A graph source: a DIMACS file or a generator, optionally complemented.
struct InstanceSpec {
    std::optional<std::string> file;
    std::optional<GenParams> gen;
    bool complement = false;

    std::string id() const;
};

struct LoadedInstance {
    std::string id;
    Graph graph;
    double p_or_density = 0.0; // generator p for random graphs, else edge density
};

/// Throws on unreadable files or parse errors.
LoadedInstance load_instance(const InstanceSpec& spec);

enum class RunMode {
    ilps,      // full iterated local search per run
    single_ls, // random or greedy start, one local search, no iterations
};

struct ExperimentSpec {
    std::vector<InstanceSpec> instances;
    std::vector<int> k_values{2};
    std::vector<std::uint32_t> delta_values{1};
    std::vector<std::uint32_t> nu_values{1};
    std::size_t runs_per_cell = 1;
    std::optional<double> time_limit;
    std::optional<std::uint64_t> max_iterations;
    std::uint64_t base_seed = 1;
    RunMode mode = RunMode::ilps;
    InitMode init = InitMode::greedy;
    std::optional<std::size_t> plateau_gate;

    /// Throws std::invalid_argument with the offending field.
    void validate() const;

    /// Keys: instances (list of {"file", "complement"} or {"gen"} objects, or
    /// bare strings: a generator spec or a file path), k, delta, nu (number or
    /// list), runs, time_limit, max_iterations, base_seed,
    /// mode ("ilps" | "single_ls"), init, plateau_gate.
    static ExperimentSpec from_json(const nlohmann::json& j);
};

struct RunRecord {
    std::string instance;
    std::size_t n = 0;
    double p_or_density = 0.0;
    int k = 2;
    std::uint32_t delta = 1;
    std::uint32_t nu = 1;
    std::size_t run = 0;
    std::uint64_t seed = 0;
    std::size_t best_size = 0;
    std::size_t initial_size = 0;
    double ttb_s = 0.0;
    std::uint64_t iterations = 0;
    std::vector<Vertex> solution;
};

struct AggregateRow {
    std::string instance;
    std::size_t n = 0;
    double p_or_density = 0.0;
    int k = 2;
    std::uint32_t delta = 1;
    std::uint32_t nu = 1;
    std::size_t min = 0;
    double avg = 0.0;
    std::size_t max = 0;
    double mean_ttb_s = 0.0;
    double mean_initial = 0.0;
    std::vector<RunRecord> runs;
};

/// Recomputes min/avg/max/means from runs (which must be non-empty and
/// share one cell).
AggregateRow aggregate(std::vector<RunRecord> runs);

/// Thread count for harness work: MINIDS_THREADS if set to a positive
/// integer, otherwise the hardware concurrency (at least 1).
unsigned harness_threads();

/// Runs body(0..count-1) on up to `threads` workers. The first exception
/// thrown by any call is rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

/// One row per (instance, k, delta, nu) in spec order. Runs within and
/// across cells execute in parallel; results do not depend on the thread
/// count apart from wall-clock fields.
std::vector<AggregateRow> run_experiment(const ExperimentSpec& spec, unsigned threads = 0);

/// Same with instances already loaded (spec.instances is ignored).
std::vector<AggregateRow> run_experiment(const ExperimentSpec& spec, const std::vector<LoadedInstance>& instances,
                                         unsigned threads = 0);

/// Per-run CSV: instance,n,p_or_density,k,delta,nu,run,seed,best_size,ttb_s,iterations,initial_size
void write_runs_csv(std::ostream& out, const std::vector<AggregateRow>& rows);
/// One line per cell: instance,n,p_or_density,k,delta,nu,runs,min,avg,max,mean_ttb_s
void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows);
/// Aligned table with Avg to one decimal; TTB under 0.1 s printed as "eps".
void write_table(std::ostream& out, const std::vector<AggregateRow>& rows);

nlohmann::json to_json(const std::vector<AggregateRow>& rows, bool include_wall_clock = true);
std::vector<AggregateRow> rows_from_json(const nlohmann::json& j);

enum class CoverTarget { all_covered, optimum_found };

struct CoverStudy {
    std::vector<std::optional<std::uint64_t>> per_run; // none = censored
    double mean_iterations = 0.0;                      // over uncensored runs
    std::size_t censored = 0;
};

/// For runs with seeds base_seed .. base_seed + runs - 1: the first
/// iteration whose initial solution completes the cover of V
/// (all_covered), or the iteration count at which the incumbent first
/// reaches `optimum` (optimum_found; 0 means the constructed start was
/// already optimal). config.max_iterations bounds each run.
CoverStudy cover_study(const Graph& g, IlpsConfig config, CoverTarget target, std::size_t runs,
                       std::uint64_t base_seed, std::optional<std::size_t> optimum = std::nullopt,
                       unsigned threads = 0);

} // namespace minids
