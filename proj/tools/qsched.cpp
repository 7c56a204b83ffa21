// Command line front end for the booking pipeline: synthetic demand streams,
// schedulers, conflict-graph reformulations, samplers, the simulated noisy
// annealer and its calibration loops.
//
// Exit codes: 0 success, 2 usage, 3 configuration, 4 capacity, 5 calibration.
// Relative output paths land in $QSCHED_OUT_DIR when it is set.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsched/qsched.hpp"

namespace {

namespace fs = std::filesystem;

fs::path resolve_out(const std::string& name) {
    fs::path p(name);
    if (p.is_relative()) {
        if (const char* base = std::getenv("QSCHED_OUT_DIR")) p = fs::path(base) / p;
    }
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    return p;
}

std::ofstream open_output(const std::string& name) {
    const fs::path p = resolve_out(name);
    std::ofstream out(p);
    if (!out) throw qsched::config_error("cannot write '" + p.string() + "'");
    return out;
}

std::ifstream open_input(const std::string& name) {
    std::ifstream in(name);
    if (!in) throw qsched::config_error("cannot read '" + name + "'");
    return in;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Conflict problems come either from a booking stream (values drawn from the
// durations) or from an explicit problem JSON.
qsched::MvvcProblem load_problem(const std::string& path, std::uint64_t seed, double gamma) {
    qsched::MvvcProblem problem;
    problem.gamma = gamma;
    if (ends_with(path, ".json")) {
        auto in = open_input(path);
        nlohmann::json j;
        try {
            in >> j;
            std::vector<qsched::BookingRequest> dummy;
            std::vector<int> vertices = j.at("vertices").get<std::vector<int>>();
            std::vector<std::pair<int, int>> edges;
            for (const auto& e : j.at("edges"))
                edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
            problem.graph = qsched::make_collision_graph(vertices, edges);
            for (const auto& entry : j.at("values"))
                problem.values[entry.at(0).get<int>()] = entry.at(1).get<double>();
            if (j.contains("gamma")) problem.gamma = j.at("gamma").get<double>();
        } catch (const nlohmann::json::exception& e) {
            throw qsched::config_error(std::string("bad problem file: ") + e.what());
        }
        qsched::validate_mvvc(problem);
        return problem;
    }
    auto in = open_input(path);
    const auto stream = qsched::read_stream_csv(in);
    if (stream.empty()) throw qsched::config_error("stream has no requests");
    problem.graph = qsched::build_collision_graph(stream);
    std::map<int, int> durations;
    int max_duration = 1;
    for (const auto& r : stream) {
        durations[r.id] = r.duration;
        max_duration = std::max(max_duration, r.duration);
    }
    auto rng = qsched::make_rng(seed, "problem-values");
    problem.values = qsched::random_values(problem.graph, max_duration, durations, rng);
    return problem;
}

struct DeviceSpec {
    bool noisy = false;
    std::uint64_t seed = 0;
};

DeviceSpec parse_device(const std::string& text) {
    if (text == "ideal") return {};
    if (text.rfind("noisy:", 0) == 0) {
        DeviceSpec spec;
        spec.noisy = true;
        try {
            spec.seed = std::stoull(text.substr(6));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad device spec '" + text + "'");
        }
        return spec;
    }
    throw std::invalid_argument("device must be 'ideal' or 'noisy:SEED'");
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int run_gen_stream(int scale, int days, std::uint64_t seed, double rate,
                   const std::string& out_name) {
    qsched::DemandModel demand = qsched::default_demand_model(scale);
    if (rate > 0.0) demand.arrival_rate_per_day = rate;
    auto rng = qsched::make_rng(seed, "stream");
    const auto stream = qsched::generate_stream(demand, days, rng);
    auto out = open_output(out_name);
    qsched::write_stream_csv(out, stream);
    std::cout << "wrote " << stream.size() << " requests over " << days << " days to "
              << resolve_out(out_name).string() << "\n";
    return 0;
}

int run_schedule(const std::string& in_name, const std::string& method_name, int scale,
                 int horizon, const std::string& out_name) {
    auto in = open_input(in_name);
    const auto stream = qsched::read_stream_csv(in);
    const auto campus = qsched::default_campus(scale);
    int needed = 1;
    for (const auto& r : stream) needed = std::max(needed, r.end_day());
    if (horizon <= 0) horizon = needed;
    if (horizon < needed) throw qsched::config_error("horizon shorter than the stream");
    const auto method = qsched::parse_method(method_name);
    const auto result = qsched::run_simulation(method, stream, campus, horizon);
    auto out = open_output(out_name);
    qsched::write_csv_row(out, {"request_id", "accepted", "reason", "rooms"});
    for (const auto& [id, outcome] : result.outcomes) {
        std::string reason;
        if (!outcome.accepted)
            reason = outcome.reason == qsched::RejectReason::capacity ? "capacity" : "conflict";
        std::string rooms;
        for (std::size_t k = 0; k < outcome.rooms.size(); ++k) {
            if (k) rooms += ';';
            rooms += std::to_string(outcome.rooms[k]);
        }
        qsched::write_csv_row(out, {std::to_string(id), outcome.accepted ? "1" : "0", reason, rooms});
    }
    char line[160];
    std::snprintf(line, sizeof(line), "%s: accepted %d rejected %d filling %.4f\n",
                  method_name.c_str(), result.accepted, result.rejected, result.final_filling);
    std::cout << line;
    return 0;
}

int run_compare(int scale, int seeds, int warmup, int test_days, const std::string& methods_text,
                double rate, std::uint64_t seed, const std::string& out_name) {
    qsched::CompareOptions opt;
    opt.scale = scale;
    opt.num_seeds = seeds;
    opt.warmup_days = warmup;
    opt.test_days = test_days;
    opt.arrival_rate = rate;
    opt.seed = seed;
    opt.methods.clear();
    for (const auto& name : split_list(methods_text)) opt.methods.push_back(qsched::parse_method(name));
    const auto result = qsched::run_compare(opt);
    auto out = open_output(out_name);
    qsched::write_curves_csv(out, result);
    for (const auto& [method, curve] : result.curves) {
        if (curve.empty()) {
            std::cout << method << ": no rejections in the test window\n";
            continue;
        }
        char line[160];
        std::snprintf(line, sizeof(line), "%s: first-failure filling %.4f +/- %.4f (n=%d)\n",
                      method.c_str(), curve[0].mean_filling, curve[0].stderr_filling,
                      curve[0].num_seeds);
        std::cout << line;
    }
    return 0;
}

int run_qubo(const std::string& in_name, const std::string& transform_text, double gamma,
             std::uint64_t seed, const std::string& out_name) {
    const auto problem = load_problem(in_name, seed, gamma);
    const auto tokens = split_list(transform_text);
    if (tokens.empty() || tokens[0] != "mvvc")
        throw std::invalid_argument("transform chain must start with 'mvvc'");

    enum class Stage { qubo, ising };
    Stage stage = Stage::qubo;
    qsched::QuboModel qubo = qsched::mvvc_qubo(problem);
    qsched::IsingModel ising;
    bool have_aux = false;
    for (std::size_t k = 1; k < tokens.size(); ++k) {
        const std::string& t = tokens[k];
        if (t == "redistribute") {
            if (stage != Stage::qubo)
                throw qsched::config_error("'redistribute' must precede 'ising'");
            qubo = qsched::redistribute_values(qubo, problem.graph,
                                               qsched::uniform_neighbor_weights(problem.graph));
        } else if (t == "ising") {
            if (stage != Stage::qubo) throw qsched::config_error("duplicate 'ising' step");
            ising = qsched::qubo_to_ising(qubo);
            stage = Stage::ising;
        } else if (t == "xor") {
            if (stage != Stage::ising) throw qsched::config_error("'xor' needs 'ising' first");
            if (have_aux) throw qsched::config_error("duplicate 'xor' step");
            ising = qsched::eliminate_linear_terms(ising);
            have_aux = true;
        } else if (t.rfind("split:", 0) == 0) {
            if (!have_aux) throw qsched::config_error("'split:M' needs 'xor' first");
            int m = 0;
            try {
                m = std::stoi(t.substr(6));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad split count in '" + t + "'");
            }
            ising = qsched::split_aux_spin(ising, m);
        } else {
            throw std::invalid_argument("unknown transform '" + t + "'");
        }
    }
    auto out = open_output(out_name);
    if (stage == Stage::qubo) {
        qsched::write_model(out, qubo);
        std::cout << "qubo with " << qubo.num_vars << " variables, " << qubo.quadratic.size()
                  << " couplings\n";
    } else {
        qsched::write_model(out, ising);
        std::cout << "ising with " << ising.num_spins << " spins, " << ising.J.size()
                  << " couplings\n";
    }
    return 0;
}

int run_solve(const std::string& in_name, const std::string& solver, const std::string& device_text,
              const std::string& calibration_name, qsched::SolverConfig cfg, bool descent,
              const std::string& out_name) {
    auto in = open_input(in_name);
    const auto parsed = qsched::read_model(in);

    qsched::SampleSet samples;
    if (solver == "exact") {
        const auto result = parsed.is_qubo ? qsched::exact_solve(parsed.qubo)
                                           : qsched::exact_solve(parsed.ising);
        samples.domain = parsed.is_qubo ? qsched::Domain::binary : qsched::Domain::spin;
        samples.num_vars = parsed.is_qubo ? parsed.qubo.num_vars : parsed.ising.num_spins;
        for (const auto& config : result.configs)
            samples.entries.push_back({config, result.energy, 1});
    } else {
        const qsched::IsingModel model =
            parsed.is_qubo ? qsched::qubo_to_ising(parsed.qubo) : parsed.ising;
        const DeviceSpec spec = parse_device(device_text);
        if (spec.noisy) {
            qsched::NoiseModel noise;
            noise.seed = spec.seed;
            noise.field_bias_std = 0.05;
            noise.coupling_bias_std = 0.05;
            qsched::Device device(noise);
            if (!calibration_name.empty()) {
                auto calib_in = open_input(calibration_name);
                qsched::apply_calibration(device, qsched::read_calibration_json(calib_in));
            }
            samples = qsched::device_sample(device, model, cfg);
        } else {
            if (!calibration_name.empty())
                throw qsched::config_error("--calibration needs a noisy device");
            samples = qsched::sa_sample(model, cfg);
        }
        if (descent) samples = qsched::steepest_descent(model, samples);
    }
    auto out = open_output(out_name);
    qsched::write_samples_csv(out, samples);
    char line[160];
    std::snprintf(line, sizeof(line), "%d configurations, minimum energy %.6f\n",
                  static_cast<int>(samples.entries.size()), samples.min_energy());
    std::cout << line;
    return 0;
}

int run_calibrate(const std::string& in_name, const std::string& device_text, double field_std,
                  double coupling_std, double readout, double autocorr, std::uint64_t seed,
                  int shots, int batches, int max_iters, bool skip_flux, bool skip_pairwise,
                  bool skip_offset, const std::string& out_name) {
    const auto problem = load_problem(in_name, seed, 1.0);
    const DeviceSpec spec = parse_device(device_text);
    if (!spec.noisy) throw qsched::config_error("calibration needs a noisy device");
    qsched::NoiseModel noise;
    noise.seed = spec.seed;
    noise.field_bias_std = field_std;
    noise.coupling_bias_std = coupling_std;
    noise.readout_flip_prob = readout;
    noise.autocorrelation_strength = autocorr;
    qsched::Device device(noise);

    qsched::CalibrationData data;
    if (!skip_flux) {
        qsched::FluxCalibrationOptions opt;
        opt.num_spins = static_cast<int>(problem.graph.vertices.size());
        opt.shots = shots;
        opt.seed = qsched::derive_seed(seed, "cli-flux");
        const auto result = qsched::flux_bias_calibrate(device, opt);
        std::cout << "flux: " << (result.converged ? "converged" : "not converged") << " after "
                  << result.iterations << " rounds\n";
    }
    if (!skip_pairwise) {
        qsched::PairwiseCalibrationOptions opt;
        opt.shots_per_batch = shots;
        opt.batches = batches;
        opt.max_iterations = max_iters;
        opt.seed = qsched::derive_seed(seed, "cli-pairwise");
        const auto result = qsched::calibrate_pairwise(device, problem, opt);
        data.pairwise_converged = result.converged;
        data.pairwise_iterations = result.iterations;
        data.pairwise_sigma = result.sigma;
        data.pairwise_trace = result.trace;
        std::cout << "pairwise: " << (result.converged ? "converged" : "not converged")
                  << " after " << result.iterations << " iterations\n";
    }
    if (!skip_offset) {
        qsched::OffsetScaleOptions opt;
        opt.shots = shots;
        opt.seed = qsched::derive_seed(seed, "cli-offset");
        const auto result = qsched::offset_scale_calibrate(device, problem, opt);
        data.offset_scale = result.scale;
        char line[160];
        std::snprintf(line, sizeof(line), "offset scale %.4f (width %.4f, midpoint %.4f)\n",
                      result.scale, result.fit.width, result.fit.midpoint);
        std::cout << line;
    }
    const auto snapshot = qsched::snapshot_calibration(device);
    data.flux_offsets = snapshot.flux_offsets;
    data.corrections = snapshot.corrections;
    auto out = open_output(out_name);
    qsched::write_calibration_json(out, data);
    std::cout << "wrote " << resolve_out(out_name).string() << "\n";
    return 0;
}

int run_sweep(const std::string& scales_text, const std::string& sweeps_text, int samples,
              int realizations, const std::string& quantiles_text, int days, std::uint64_t seed,
              int threads, const std::string& out_name) {
    qsched::SweepOptions opt;
    opt.scales.clear();
    for (const auto& s : split_list(scales_text)) opt.scales.push_back(std::stoi(s));
    opt.sweep_counts.clear();
    for (const auto& s : split_list(sweeps_text)) opt.sweep_counts.push_back(std::stoi(s));
    opt.quantiles.clear();
    for (const auto& s : split_list(quantiles_text)) opt.quantiles.push_back(std::stod(s));
    opt.num_samples = samples;
    opt.realizations = realizations;
    opt.stream_days = days;
    opt.seed = seed;
    opt.threads = threads;
    const auto rows = qsched::run_sweep_anneal(opt);
    auto out = open_output(out_name);
    qsched::write_sweep_csv(out, rows);
    std::cout << "wrote " << rows.size() << " rows to " << resolve_out(out_name).string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hybrid booking pipeline: demand, schedulers, conflict-graph models, samplers"};
    app.require_subcommand(1);

    // gen-stream
    auto* gen = app.add_subcommand("gen-stream", "sample a synthetic booking request stream");
    int gen_scale = 2, gen_days = 30;
    std::uint64_t gen_seed = 1;
    double gen_rate = -1.0;
    std::string gen_out = "stream.csv";
    gen->add_option("--scale", gen_scale, "campus scale factor")->check(CLI::PositiveNumber);
    gen->add_option("--days", gen_days, "stream length in days")->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--rate", gen_rate, "arrival rate per day (default 0.6 * scale)");
    gen->add_option("--out", gen_out, "output CSV path");

    // schedule
    auto* sched = app.add_subcommand("schedule", "run one scheduler over a stream");
    std::string sched_in, sched_method = "greedy", sched_out = "schedule.csv";
    int sched_scale = 2, sched_horizon = 0;
    sched->add_option("--in", sched_in, "input stream CSV")->required();
    sched->add_option("--method", sched_method, "scheduler")
        ->check(CLI::IsMember({"greedy", "hybrid1", "hybrid2", "exact"}));
    sched->add_option("--scale", sched_scale, "campus scale factor")->check(CLI::PositiveNumber);
    sched->add_option("--horizon", sched_horizon, "occupancy horizon in days (0 = fit stream)");
    sched->add_option("--out", sched_out, "output CSV path");

    // compare
    auto* cmp = app.add_subcommand("compare", "failure harness over shared streams");
    int cmp_scale = 2, cmp_seeds = 50, cmp_warmup = 30, cmp_test = 30;
    double cmp_rate = -1.0;
    std::uint64_t cmp_seed = 1;
    std::string cmp_methods = "greedy,hybrid1,hybrid2", cmp_out = "curves.csv";
    cmp->add_option("--scale", cmp_scale, "campus scale factor")->check(CLI::PositiveNumber);
    cmp->add_option("--seeds", cmp_seeds, "number of streams")->check(CLI::PositiveNumber);
    cmp->add_option("--warmup", cmp_warmup, "warmup days before recording");
    cmp->add_option("--test-days", cmp_test, "recorded days")->check(CLI::PositiveNumber);
    cmp->add_option("--methods", cmp_methods, "comma list of schedulers");
    cmp->add_option("--rate", cmp_rate, "arrival rate per day (default 0.6 * scale)");
    cmp->add_option("--seed", cmp_seed, "random seed");
    cmp->add_option("--out", cmp_out, "output CSV path");

    // qubo
    auto* qubo = app.add_subcommand("qubo", "build conflict-graph models from a stream or problem");
    std::string qubo_in, qubo_transform = "mvvc", qubo_out = "model.txt";
    double qubo_gamma = 1.0;
    std::uint64_t qubo_seed = 1;
    qubo->add_option("--in", qubo_in, "stream CSV or problem JSON")->required();
    qubo->add_option("--transform", qubo_transform,
                     "comma chain: mvvc[,redistribute][,ising[,xor[,split:M]]]");
    qubo->add_option("--gamma", qubo_gamma, "conflict penalty")->check(CLI::PositiveNumber);
    qubo->add_option("--seed", qubo_seed, "seed for synthetic vertex values");
    qubo->add_option("--out", qubo_out, "output model path");

    // solve
    auto* solve = app.add_subcommand("solve", "minimize a stored model");
    std::string solve_in, solve_solver = "sa", solve_device = "ideal", solve_calib,
                solve_out = "samples.csv";
    qsched::SolverConfig solve_cfg;
    bool solve_descent = false;
    solve->add_option("--in", solve_in, "input model path")->required();
    solve->add_option("--solver", solve_solver, "solver")->check(CLI::IsMember({"exact", "sa"}));
    solve->add_option("--device", solve_device, "'ideal' or 'noisy:SEED'");
    solve->add_option("--calibration", solve_calib, "calibration JSON for a noisy device");
    solve->add_option("--samples", solve_cfg.num_samples, "number of anneals")
        ->check(CLI::PositiveNumber);
    solve->add_option("--sweeps", solve_cfg.sweeps, "sweeps per anneal")->check(CLI::PositiveNumber);
    solve->add_option("--beta0", solve_cfg.beta_initial, "initial inverse temperature");
    solve->add_option("--beta1", solve_cfg.beta_final, "final inverse temperature");
    solve->add_option("--seed", solve_cfg.seed, "random seed");
    solve->add_option("--threads", solve_cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    solve->add_flag("--descent", solve_descent, "post-process samples by steepest descent");
    solve->add_option("--out", solve_out, "output CSV path");

    // calibrate
    auto* calib = app.add_subcommand("calibrate", "calibrate a noisy device on a problem graph");
    std::string calib_in, calib_device = "noisy:1", calib_out = "calib.json";
    double calib_field = 0.05, calib_coupling = 0.05, calib_readout = 0.0, calib_autocorr = 0.0;
    std::uint64_t calib_seed = 1;
    int calib_shots = 1000, calib_batches = 2, calib_iters = 50;
    bool calib_skip_flux = false, calib_skip_pairwise = false, calib_skip_offset = false;
    calib->add_option("--in", calib_in, "stream CSV or problem JSON")->required();
    calib->add_option("--device", calib_device, "'noisy:SEED'");
    calib->add_option("--field-bias-std", calib_field, "hidden field bias width");
    calib->add_option("--coupling-bias-std", calib_coupling, "hidden coupling bias width");
    calib->add_option("--readout-flip", calib_readout, "readout flip probability");
    calib->add_option("--autocorr", calib_autocorr, "inter-submission autocorrelation");
    calib->add_option("--seed", calib_seed, "calibration seed");
    calib->add_option("--shots", calib_shots, "shots per batch")->check(CLI::PositiveNumber);
    calib->add_option("--batches", calib_batches, "batches per iteration")
        ->check(CLI::PositiveNumber);
    calib->add_option("--max-iters", calib_iters, "pairwise iteration cap")
        ->check(CLI::PositiveNumber);
    calib->add_flag("--skip-flux", calib_skip_flux, "skip single-spin flux zeroing");
    calib->add_flag("--skip-pairwise", calib_skip_pairwise, "skip pairwise statistics loop");
    calib->add_flag("--skip-offset", calib_skip_offset, "skip offset scale probe");
    calib->add_option("--out", calib_out, "output calibration JSON");

    // sweep-anneal
    auto* sweep = app.add_subcommand("sweep-anneal", "quantile energy vs anneal length");
    std::string sweep_scales = "1,2", sweep_counts = "1,10,100,1000",
                sweep_quantiles = "0.05,0.25", sweep_out = "sweep.csv";
    int sweep_samples = 1000, sweep_real = 7, sweep_days = 30, sweep_threads = 1;
    std::uint64_t sweep_seed = 1;
    sweep->add_option("--scales", sweep_scales, "comma list of campus scales");
    sweep->add_option("--sweep-counts", sweep_counts, "comma list of anneal lengths");
    sweep->add_option("--samples", sweep_samples, "samples per realization")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--realizations", sweep_real, "sampler realizations per point")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--quantiles", sweep_quantiles, "comma list of energy quantiles");
    sweep->add_option("--days", sweep_days, "stream days per instance")->check(CLI::PositiveNumber);
    sweep->add_option("--seed", sweep_seed, "random seed");
    sweep->add_option("--threads", sweep_threads, "worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--out", sweep_out, "output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return run_gen_stream(gen_scale, gen_days, gen_seed, gen_rate, gen_out);
        if (sched->parsed())
            return run_schedule(sched_in, sched_method, sched_scale, sched_horizon, sched_out);
        if (cmp->parsed())
            return run_compare(cmp_scale, cmp_seeds, cmp_warmup, cmp_test, cmp_methods, cmp_rate,
                               cmp_seed, cmp_out);
        if (qubo->parsed())
            return run_qubo(qubo_in, qubo_transform, qubo_gamma, qubo_seed, qubo_out);
        if (solve->parsed())
            return run_solve(solve_in, solve_solver, solve_device, solve_calib, solve_cfg,
                             solve_descent, solve_out);
        if (calib->parsed())
            return run_calibrate(calib_in, calib_device, calib_field, calib_coupling,
                                 calib_readout, calib_autocorr, calib_seed, calib_shots,
                                 calib_batches, calib_iters, calib_skip_flux, calib_skip_pairwise,
                                 calib_skip_offset, calib_out);
        if (sweep->parsed())
            return run_sweep(sweep_scales, sweep_counts, sweep_samples, sweep_real,
                             sweep_quantiles, sweep_days, sweep_seed, sweep_threads, sweep_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const qsched::calibration_error& e) {
        std::cerr << "calibration error: " << e.what() << "\n";
        if (!e.trace.empty()) {
            std::cerr << "trace:";
            for (double v : e.trace) std::cerr << ' ' << v;
            std::cerr << "\n";
        }
        return 5;
    } catch (const qsched::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 4;
    } catch (const qsched::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
