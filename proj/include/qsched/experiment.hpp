#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "qsched/collision.hpp"
#include "qsched/csv.hpp"
#include "qsched/demand.hpp"
#include "qsched/errors.hpp"
#include "qsched/rng.hpp"
#include "qsched/schedule.hpp"
#include "qsched/solvers.hpp"
#include "qsched/transforms.hpp"

namespace qsched {

struct CompareOptions {
    int scale = 2;
    int num_seeds = 50;
    int warmup_days = 30;
    int test_days = 30;
    std::vector<Method> methods = {Method::greedy, Method::hybrid1, Method::hybrid2};
    double arrival_rate = -1.0;  // <= 0 keeps the demand default for the scale
    std::uint64_t seed = 1;
};

// Rejection-ordered filling factor curves for every method over a shared set
// of synthetic booking streams.
inline HarnessResult run_compare(const CompareOptions& opt) {
    if (opt.scale < 1) throw config_error("scale must be >= 1");
    if (opt.methods.empty()) throw config_error("need at least one method");
    const CampusConfig campus = default_campus(opt.scale);
    DemandModel demand = default_demand_model(opt.scale);
    if (opt.arrival_rate > 0.0) demand.arrival_rate_per_day = opt.arrival_rate;
    return run_failure_harness(opt.methods, opt.num_seeds, campus, demand, opt.seed,
                               opt.warmup_days, opt.test_days);
}

// --- annealing-time sweep -------------------------------------------------------

struct SweepOptions {
    std::vector<int> scales = {1, 2};
    std::vector<int> sweep_counts = {1, 10, 100, 1000};
    int num_samples = 1000;
    int realizations = 7;
    std::vector<double> quantiles = {0.05, 0.25};
    int stream_days = 30;
    std::uint64_t seed = 1;
    int threads = 1;
};

struct SweepRow {
    int scale = 0;
    int num_vertices = 0;
    int sweeps = 0;
    int num_samples = 0;
    double quantile = 0.0;
    bool descent = false;  // false: raw samples, true: after steepest descent
    double mean_energy = 0.0;  // quantile energy per campus scale unit
    double stderr_energy = 0.0;
};

// Sweeps anneal length on collision instances drawn from the demand model,
// one instance per scale. Each row aggregates quantile energies over
// independent sampler realizations, normalized by scale so instance sizes
// stay comparable.
inline std::vector<SweepRow> run_sweep_anneal(const SweepOptions& opt) {
    if (opt.realizations < 2) throw config_error("need at least 2 realizations");
    if (opt.num_samples < 1 || opt.stream_days < 1)
        throw config_error("need positive samples and stream days");
    for (double q : opt.quantiles)
        if (!(q > 0.0 && q <= 1.0)) throw config_error("quantiles must lie in (0, 1]");
    std::vector<SweepRow> rows;
    for (std::size_t si = 0; si < opt.scales.size(); ++si) {
        const int scale = opt.scales[si];
        if (scale < 1) throw config_error("scale must be >= 1");
        const DemandModel demand = default_demand_model(scale);
        auto stream_rng = make_rng(opt.seed, "sweep-stream", static_cast<std::uint64_t>(si));
        const auto stream = generate_stream(demand, opt.stream_days, stream_rng);
        if (stream.empty()) throw config_error("stream produced no requests");
        MvvcProblem problem;
        problem.graph = build_collision_graph(stream);
        std::map<int, int> durations;
        int max_duration = 1;
        for (const auto& r : stream) {
            durations[r.id] = r.duration;
            max_duration = std::max(max_duration, r.duration);
        }
        auto value_rng = make_rng(opt.seed, "sweep-values", static_cast<std::uint64_t>(si));
        problem.values = random_values(problem.graph, max_duration, durations, value_rng);
        const IsingModel ising = qubo_to_ising(mvvc_qubo(problem));

        for (int sweeps : opt.sweep_counts) {
            // quantile index -> (variant raw=0/descent=1) -> per-realization energies
            std::vector<std::array<std::vector<double>, 2>> observed(opt.quantiles.size());
            for (int real = 0; real < opt.realizations; ++real) {
                SolverConfig cfg;
                cfg.num_samples = opt.num_samples;
                cfg.sweeps = sweeps;
                cfg.threads = opt.threads;
                cfg.seed = derive_seed(opt.seed, "sweep-real",
                                       (static_cast<std::uint64_t>(si) << 32) ^
                                           (static_cast<std::uint64_t>(sweeps) << 8) ^
                                           static_cast<std::uint64_t>(real));
                const SampleSet raw = sa_sample(ising, cfg);
                const SampleSet polished = steepest_descent(ising, raw);
                for (std::size_t qi = 0; qi < opt.quantiles.size(); ++qi) {
                    observed[qi][0].push_back(quantile_energy(raw, opt.quantiles[qi]));
                    observed[qi][1].push_back(quantile_energy(polished, opt.quantiles[qi]));
                }
            }
            for (std::size_t qi = 0; qi < opt.quantiles.size(); ++qi) {
                for (int variant = 0; variant < 2; ++variant) {
                    const auto& vals = observed[qi][variant];
                    double mean = std::accumulate(vals.begin(), vals.end(), 0.0) / vals.size();
                    double var = 0.0;
                    for (double v : vals) var += (v - mean) * (v - mean);
                    var /= static_cast<double>(vals.size() - 1);
                    SweepRow row;
                    row.scale = scale;
                    row.num_vertices = static_cast<int>(problem.graph.vertices.size());
                    row.sweeps = sweeps;
                    row.num_samples = opt.num_samples;
                    row.quantile = opt.quantiles[qi];
                    row.descent = variant == 1;
                    row.mean_energy = mean / scale;
                    row.stderr_energy = std::sqrt(var / vals.size()) / scale;
                    rows.push_back(row);
                }
            }
        }
    }
    return rows;
}

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    write_csv_row(out, {"scale", "num_vertices", "sweeps", "num_samples", "quantile", "variant",
                        "mean_energy", "stderr"});
    for (const auto& row : rows)
        write_csv_row(out,
                      {std::to_string(row.scale), std::to_string(row.num_vertices),
                       std::to_string(row.sweeps), std::to_string(row.num_samples),
                       detail::format_double(row.quantile),
                       row.descent ? "descent" : "raw", detail::format_double(row.mean_energy),
                       detail::format_double(row.stderr_energy)});
}

}  // namespace qsched
