#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "qsched/collision.hpp"
#include "qsched/device.hpp"
#include "qsched/errors.hpp"
#include "qsched/model.hpp"
#include "qsched/rng.hpp"
#include "qsched/solvers.hpp"
#include "qsched/transforms.hpp"

namespace qsched {

// Joint and marginal occupation statistics over binary configurations.
// pair_probs[{i,j}][2a + b] is the probability of (x_i, x_j) = (a, b).
struct PairStatistics {
    std::map<pair_key, std::array<double, 4>> pair_probs;
    std::map<int, double> vertex_inclusion;
    double shots = 0.0;
};

// Two readings of the trajectory weight. A trajectory grows a conflict-free
// set one random pick at a time; a set of size k reached through picks with
// c_1..c_k choices occurs with probability prod(1/c_t), and each of its k!
// insertion orders is realizable. Weighting a visit by prod(c_t)/k! therefore
// gives every nonempty conflict-free set unit expected weight, which is what
// an unbiased uniform average needs. Weighting by prod(c_t) alone looks
// natural but over-counts each set by k!, skewing averages toward large sets.
enum class CoverWeighting { importance, factorial };

// Monte Carlo estimate of statistics under the uniform distribution over
// nonempty conflict-free vertex sets. Each trajectory contributes every
// prefix of a random maximal set; suffix-summed weights make the accumulation
// linear in trajectory depth plus the pairs it touches.
inline PairStatistics mc_cover_sample(const CollisionGraph& graph, long trajectories,
                                      std::mt19937_64& rng,
                                      CoverWeighting weighting = CoverWeighting::importance) {
    if (graph.vertices.empty()) throw std::invalid_argument("mc_cover_sample needs vertices");
    if (trajectories < 1) throw std::invalid_argument("need at least one trajectory");
    double total = 0.0;
    std::map<int, double> inclusion;
    std::map<pair_key, double> both;
    std::vector<int> picked;
    std::vector<double> weights;
    for (long traj = 0; traj < trajectories; ++traj) {
        std::vector<int> available = graph.vertices;
        picked.clear();
        weights.clear();
        double w = 1.0;
        while (!available.empty()) {
            const auto c = available.size();
            std::uniform_int_distribution<std::size_t> pick(0, c - 1);
            const int v = available[pick(rng)];
            picked.push_back(v);
            w *= static_cast<double>(c);
            if (weighting == CoverWeighting::importance) w /= static_cast<double>(picked.size());
            weights.push_back(w);
            std::vector<int> next;
            const auto& blocked = graph.adjacency.at(v);
            for (int u : available)
                if (u != v && !std::binary_search(blocked.begin(), blocked.end(), u))
                    next.push_back(u);
            available = std::move(next);
        }
        // weights[t] covers prefixes of length t+1; a vertex inserted at t
        // appears in every longer prefix, so it collects the suffix sum.
        std::vector<double> suffix(weights.size() + 1, 0.0);
        for (std::size_t t = weights.size(); t-- > 0;) suffix[t] = suffix[t + 1] + weights[t];
        total += suffix[0];
        for (std::size_t t = 0; t < picked.size(); ++t) {
            inclusion[picked[t]] += suffix[t];
            for (std::size_t u = 0; u < t; ++u)
                both[make_pair_key(picked[u], picked[t])] += suffix[t];
        }
    }
    if (total <= 0.0) throw calibration_error("cover sampling accumulated no weight");
    PairStatistics stats;
    stats.shots = static_cast<double>(trajectories);
    for (int v : graph.vertices) {
        auto it = inclusion.find(v);
        stats.vertex_inclusion[v] = it == inclusion.end() ? 0.0 : it->second / total;
    }
    for (std::size_t a = 0; a < graph.vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < graph.vertices.size(); ++b) {
            const int i = graph.vertices[a];
            const int j = graph.vertices[b];
            const auto key = make_pair_key(i, j);
            auto it = both.find(key);
            const double p11 = it == both.end() ? 0.0 : it->second / total;
            const double p10 = stats.vertex_inclusion[i] - p11;
            const double p01 = stats.vertex_inclusion[j] - p11;
            stats.pair_probs[key] = {1.0 - p10 - p01 - p11, p01, p10, p11};
        }
    }
    return stats;
}

// Occupation statistics of device samples in the binary picture (spin up
// means occupied). Dropping all-empty configurations conditions on nonempty
// sets, matching the reference distribution above.
inline PairStatistics sample_pair_stats(Device& device, const IsingModel& model,
                                        const std::vector<pair_key>& pairs,
                                        const SolverConfig& cfg, bool drop_empty = true) {
    const SampleSet samples = device_sample(device, model, cfg);
    PairStatistics stats;
    for (const auto& key : pairs) {
        if (key.second >= model.num_spins)
            throw std::invalid_argument("pair index beyond model size");
        stats.pair_probs[key] = {0.0, 0.0, 0.0, 0.0};
    }
    std::map<int, double> inclusion;
    double retained = 0.0;
    for (const auto& entry : samples.entries) {
        bool empty = true;
        for (auto s : entry.config)
            if (s > 0) {
                empty = false;
                break;
            }
        if (drop_empty && empty) continue;
        retained += entry.count;
        for (int i = 0; i < model.num_spins; ++i)
            if (entry.config[i] > 0) inclusion[i] += entry.count;
        for (auto& [key, probs] : stats.pair_probs) {
            const int a = entry.config[key.first] > 0 ? 1 : 0;
            const int b = entry.config[key.second] > 0 ? 1 : 0;
            probs[2 * a + b] += entry.count;
        }
    }
    stats.shots = retained;
    if (retained == 0.0) return stats;
    for (auto& [key, probs] : stats.pair_probs)
        for (auto& p : probs) p /= retained;
    for (int i = 0; i < model.num_spins; ++i) {
        auto it = inclusion.find(i);
        stats.vertex_inclusion[i] = it == inclusion.end() ? 0.0 : it->second / retained;
    }
    return stats;
}

inline PairStatistics average_stats(const std::vector<PairStatistics>& batches) {
    if (batches.empty()) throw std::invalid_argument("nothing to average");
    PairStatistics out;
    for (const auto& b : batches) {
        out.shots += b.shots;
        for (const auto& [key, probs] : b.pair_probs) {
            auto& acc = out.pair_probs.try_emplace(key, std::array<double, 4>{}).first->second;
            for (int k = 0; k < 4; ++k) acc[k] += probs[k];
        }
        for (const auto& [v, p] : b.vertex_inclusion) out.vertex_inclusion[v] += p;
    }
    const double r = static_cast<double>(batches.size());
    for (auto& [key, probs] : out.pair_probs)
        for (auto& p : probs) p /= r;
    for (auto& [v, p] : out.vertex_inclusion) p /= r;
    return out;
}

// Single-batch noise scale of the probability entries: per-entry variance
// across replicate batches, pooled over the three compared components of
// every pair. Floored at the shot-noise level so a lucky pair of identical
// batches cannot report zero noise.
inline double estimate_sigma(const std::vector<PairStatistics>& batches,
                             const std::vector<pair_key>& pairs) {
    if (batches.empty()) throw std::invalid_argument("no batches");
    double total_shots = 0.0;
    for (const auto& b : batches) total_shots += b.shots;
    const double floor = total_shots > 0.0 ? 1.0 / std::sqrt(total_shots) : 1.0;
    const auto r = batches.size();
    if (r < 2) return floor;
    double pooled = 0.0;
    int entries = 0;
    for (const auto& key : pairs) {
        for (int component = 0; component < 3; ++component) {
            double mean = 0.0;
            for (const auto& b : batches) mean += b.pair_probs.at(key)[component];
            mean /= static_cast<double>(r);
            double var = 0.0;
            for (const auto& b : batches) {
                const double d = b.pair_probs.at(key)[component] - mean;
                var += d * d;
            }
            var /= static_cast<double>(r - 1);
            pooled += var;
            ++entries;
        }
    }
    if (entries == 0) return floor;
    return std::max(floor, std::sqrt(pooled / entries));
}

// Expected |x - y| for two reads of the same quantity under gaussian noise of
// width sigma; discrepancies at this level carry no signal.
inline double noise_floor(double sigma) { return 2.0 * sigma / std::sqrt(M_PI); }

struct CorrectionStep {
    QuboModel delta;
    double mean_abs_delta = 0.0;
};

// One pairwise correction: for each tracked pair, the (0,0), (0,1) and (1,0)
// occupation mismatches are fed back as energy shifts on the matching
// indicator polynomials, attenuated by erf(|mismatch| / sigma) so noise-level
// discrepancies barely move the model. The (1,1) component is left alone: the
// conflict penalty itself handles co-occupation.
inline CorrectionStep correction_step(const PairStatistics& reference,
                                      const PairStatistics& measured,
                                      const std::vector<pair_key>& pairs, double sigma,
                                      double epsilon, int num_vars) {
    if (sigma <= 0.0) throw std::invalid_argument("sigma must be positive");
    CorrectionStep step;
    step.delta.num_vars = num_vars;
    double sum_abs = 0.0;
    for (const auto& key : pairs) {
        const auto& p = reference.pair_probs.at(key);
        const auto& q = measured.pair_probs.at(key);
        const int i = key.first;
        const int j = key.second;
        for (int component = 0; component < 3; ++component) {
            const double delta = q[component] - p[component];
            sum_abs += std::abs(delta);
            const double c = epsilon * delta * std::erf(std::abs(delta) / sigma);
            if (c == 0.0) continue;
            switch (component) {
                case 0:  // (1 - x_i)(1 - x_j)
                    step.delta.offset += c;
                    step.delta.add_linear(i, -c);
                    step.delta.add_linear(j, -c);
                    step.delta.add_quadratic(i, j, c);
                    break;
                case 1:  // (1 - x_i) x_j
                    step.delta.add_linear(j, c);
                    step.delta.add_quadratic(i, j, -c);
                    break;
                case 2:  // x_i (1 - x_j)
                    step.delta.add_linear(i, c);
                    step.delta.add_quadratic(i, j, -c);
                    break;
            }
        }
    }
    step.mean_abs_delta = pairs.empty() ? 0.0 : sum_abs / (3.0 * pairs.size());
    return step;
}

struct PairwiseCalibrationOptions {
    int max_iterations = 50;
    int batches = 2;
    int shots_per_batch = 1000;
    int sweeps = 100;
    double beta_initial = 0.1;
    double beta_final = 5.0;
    double epsilon_initial = 1.0;
    double epsilon_decay = 0.8;
    int divergence_window = 8;
    long reference_trajectories = 100000;
    std::uint64_t seed = 0;
};

struct PairwiseCalibrationResult {
    bool converged = false;
    int iterations = 0;
    double sigma = 0.0;
    std::vector<double> trace;  // mean absolute mismatch per iteration
};

// Iterative pairwise calibration against a value-free probe of the conflict
// graph. At a cold enough final temperature the probe thermal state is close
// to uniform over conflict-free sets, so the Monte Carlo reference applies.
// Each round measures batch-averaged pair statistics, stops once the mean
// mismatch falls below the noise floor, and otherwise feeds the mismatch back
// with a geometrically decaying step. Corrections accumulate on the device
// and carry over to later submissions on the same variables.
inline PairwiseCalibrationResult calibrate_pairwise(Device& device, const MvvcProblem& problem,
                                                    const PairwiseCalibrationOptions& opt) {
    if (opt.max_iterations < 1 || opt.batches < 1 || opt.shots_per_batch < 1)
        throw config_error("calibration needs positive iterations, batches and shots");
    if (opt.epsilon_initial <= 0.0 || opt.epsilon_decay <= 0.0 || opt.epsilon_decay > 1.0)
        throw config_error("need epsilon > 0 and decay in (0, 1]");
    PairwiseCalibrationResult result;
    const auto& graph = problem.graph;
    if (graph.edges.empty()) {
        result.converged = true;
        return result;
    }
    MvvcProblem probe;
    probe.graph = graph;
    probe.gamma = problem.gamma;
    for (int v : graph.vertices) probe.values[v] = 0.0;
    const IsingModel ising = qubo_to_ising(mvvc_qubo(probe));

    std::vector<pair_key> pairs;
    for (const auto& e : graph.edges)
        pairs.push_back(make_pair_key(mvvc_var_index(probe, e.first),
                                      mvvc_var_index(probe, e.second)));

    auto ref_rng = make_rng(opt.seed, "mc-cover");
    const PairStatistics raw_reference =
        mc_cover_sample(graph, opt.reference_trajectories, ref_rng);
    PairStatistics reference;
    reference.shots = raw_reference.shots;
    for (std::size_t k = 0; k < graph.edges.size(); ++k) {
        const auto& e = graph.edges[k];
        reference.pair_probs[pairs[k]] = raw_reference.pair_probs.at(make_pair_key(e.first, e.second));
    }

    double epsilon = opt.epsilon_initial;
    int rises = 0;
    for (int iter = 0; iter < opt.max_iterations; ++iter) {
        std::vector<PairStatistics> batches;
        for (int r = 0; r < opt.batches; ++r) {
            SolverConfig cfg;
            cfg.num_samples = opt.shots_per_batch;
            cfg.sweeps = opt.sweeps;
            cfg.beta_initial = opt.beta_initial;
            cfg.beta_final = opt.beta_final;
            cfg.seed = derive_seed(opt.seed, "probe-batch",
                                   static_cast<std::uint64_t>(iter) * opt.batches + r);
            batches.push_back(sample_pair_stats(device, ising, pairs, cfg, true));
            device.rest();
            if (batches.back().shots == 0.0)
                throw calibration_error("device returned only empty configurations",
                                        result.trace);
        }
        const PairStatistics measured = average_stats(batches);
        const double sigma = estimate_sigma(batches, pairs);
        const CorrectionStep step =
            correction_step(reference, measured, pairs, sigma, epsilon, ising.num_spins);
        result.trace.push_back(step.mean_abs_delta);
        result.sigma = sigma;
        result.iterations = iter + 1;
        if (step.mean_abs_delta < noise_floor(sigma)) {
            result.converged = true;
            return result;
        }
        const auto k = result.trace.size();
        rises = (k >= 2 && result.trace[k - 1] > result.trace[k - 2]) ? rises + 1 : 0;
        if (rises >= opt.divergence_window)
            throw calibration_error("pairwise calibration diverging", result.trace);
        device.apply_corrections(step.delta);
        epsilon *= opt.epsilon_decay;
    }
    return result;
}

struct FluxCalibrationOptions {
    int num_spins = 0;
    int shots = 10000;
    int sweeps = 100;
    double beta_initial = 0.1;
    double beta_final = 5.0;
    double relaxation = 0.8;
    int max_iterations = 20;
    std::uint64_t seed = 0;
};

struct FluxCalibrationResult {
    bool converged = false;
    int iterations = 0;
    std::vector<double> magnetizations;  // final measurement
};

// Zeroes single-spin magnetization on an empty problem. With no couplings the
// magnetization of spin i under a residual field f is -tanh(beta f), so the
// inverse map estimates the field directly; under-relaxation keeps sampling
// noise from ringing. Stops once every spin is within shot noise of zero.
inline FluxCalibrationResult flux_bias_calibrate(Device& device,
                                                 const FluxCalibrationOptions& opt) {
    if (opt.num_spins < 1) throw config_error("flux calibration needs num_spins >= 1");
    if (opt.shots < 4) throw config_error("flux calibration needs shots >= 4");
    if (opt.relaxation <= 0.0 || opt.relaxation > 1.0)
        throw config_error("relaxation must lie in (0, 1]");
    IsingModel zero;
    zero.num_spins = opt.num_spins;
    const double threshold = 3.0 / std::sqrt(static_cast<double>(opt.shots));
    FluxCalibrationResult result;
    for (int iter = 0; iter < opt.max_iterations; ++iter) {
        SolverConfig cfg;
        cfg.num_samples = opt.shots;
        cfg.sweeps = opt.sweeps;
        cfg.beta_initial = opt.beta_initial;
        cfg.beta_final = opt.beta_final;
        cfg.seed = derive_seed(opt.seed, "flux-batch", static_cast<std::uint64_t>(iter));
        const SampleSet samples = device_sample(device, zero, cfg);
        device.rest();
        std::vector<double> m(opt.num_spins, 0.0);
        for (const auto& entry : samples.entries)
            for (int i = 0; i < opt.num_spins; ++i)
                m[i] += static_cast<double>(entry.count) * entry.config[i];
        for (auto& v : m) v /= static_cast<double>(opt.shots);
        result.magnetizations = m;
        result.iterations = iter + 1;
        bool all_quiet = true;
        std::map<int, double> delta;
        for (int i = 0; i < opt.num_spins; ++i) {
            if (std::abs(m[i]) < threshold) continue;
            all_quiet = false;
            const double clamped = std::clamp(m[i], -0.999999, 0.999999);
            delta[i] = opt.relaxation * std::atanh(clamped) / opt.beta_final;
        }
        if (all_quiet) {
            result.converged = true;
            return result;
        }
        device.apply_flux_offsets(delta);
    }
    return result;
}

// --- response curve fitting ---------------------------------------------------

struct SigmoidFit {
    double lower = 0.0;     // asymptote for small inputs
    double upper = 0.0;     // asymptote for large inputs
    double midpoint = 0.0;  // input at half height
    double width = 0.0;     // transition width, positive
    double rmse = 0.0;
    int iterations = 0;
};

inline double sigmoid_value(double x, double lower, double upper, double midpoint, double width) {
    return lower + 0.5 * (upper - lower) * (std::tanh((x - midpoint) / width) + 1.0);
}

inline double sigmoid_value(double x, const SigmoidFit& f) {
    return sigmoid_value(x, f.lower, f.upper, f.midpoint, f.width);
}

namespace detail {

// Solves a 4x4 linear system in place; returns false when singular.
inline bool solve4(std::array<std::array<double, 4>, 4>& a, std::array<double, 4>& b,
                   std::array<double, 4>& x) {
    std::array<int, 4> rows = {0, 1, 2, 3};
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(a[rows[r]][col]) > std::abs(a[rows[pivot]][col])) pivot = r;
        std::swap(rows[col], rows[pivot]);
        const double head = a[rows[col]][col];
        if (std::abs(head) < 1e-300) return false;
        for (int r = col + 1; r < 4; ++r) {
            const double factor = a[rows[r]][col] / head;
            if (factor == 0.0) continue;
            for (int c = col; c < 4; ++c) a[rows[r]][c] -= factor * a[rows[col]][c];
            b[rows[r]] -= factor * b[rows[col]];
        }
    }
    for (int col = 4; col-- > 0;) {
        double acc = b[rows[col]];
        for (int c = col + 1; c < 4; ++c) acc -= a[rows[col]][c] * x[c];
        x[col] = acc / a[rows[col]][col];
    }
    return true;
}

}  // namespace detail

// Least-squares sigmoid fit via Levenberg-Marquardt with an analytic
// Jacobian. Asymptotes start from the outer quintiles of the data, the
// midpoint and width from the half-height and quartile crossings. A negative
// fitted width is the same curve with swapped asymptotes and is normalized
// away. Flat or degenerate responses are calibration failures.
inline SigmoidFit fit_sigmoid(std::vector<double> xs, std::vector<double> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("x/y size mismatch");
    const auto n = xs.size();
    if (n < 5) throw std::invalid_argument("need at least 5 points");
    std::vector<std::size_t> order(n);
    for (std::size_t k = 0; k < n; ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    std::vector<double> sx(n), sy(n);
    for (std::size_t k = 0; k < n; ++k) {
        sx[k] = xs[order[k]];
        sy[k] = ys[order[k]];
    }
    const double span = sx.back() - sx.front();
    if (!(span > 0.0)) throw std::invalid_argument("probe inputs must not coincide");

    const std::size_t tail = std::max<std::size_t>(1, n / 5);
    double lower = 0.0, upper = 0.0;
    for (std::size_t k = 0; k < tail; ++k) {
        lower += sy[k];
        upper += sy[n - 1 - k];
    }
    lower /= tail;
    upper /= tail;
    auto crossing = [&](double level) {
        const bool rising = upper >= lower;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            const double y0 = sy[k], y1 = sy[k + 1];
            const bool hit = rising ? (y0 <= level && y1 >= level) : (y0 >= level && y1 <= level);
            if (hit && y0 != y1) return sx[k] + (level - y0) / (y1 - y0) * (sx[k + 1] - sx[k]);
        }
        return sx[n / 2];
    };
    double midpoint = crossing(0.5 * (lower + upper));
    double width = (crossing(lower + 0.75 * (upper - lower)) -
                    crossing(lower + 0.25 * (upper - lower))) / 2.0;
    if (!(std::abs(width) > 1e-12)) width = span / 4.0;

    std::array<double, 4> p = {upper, lower, midpoint, width};  // (a, b, v0, w)
    auto sse_of = [&](const std::array<double, 4>& q) {
        double sse = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double r = sigmoid_value(sx[k], q[1], q[0], q[2], q[3]) - sy[k];
            sse += r * r;
        }
        return sse;
    };
    double sse = sse_of(p);
    double lambda = 1e-3;
    int iterations = 0;
    for (int iter = 0; iter < 200; ++iter) {
        iterations = iter + 1;
        std::array<std::array<double, 4>, 4> jtj{};
        std::array<double, 4> jtr{};
        for (std::size_t k = 0; k < n; ++k) {
            const double z = (sx[k] - p[2]) / p[3];
            const double t = std::tanh(z);
            const double sech2 = 1.0 - t * t;
            const double r = p[1] + 0.5 * (p[0] - p[1]) * (t + 1.0) - sy[k];
            const std::array<double, 4> grad = {
                0.5 * (t + 1.0),
                0.5 * (1.0 - t),
                -0.5 * (p[0] - p[1]) * sech2 / p[3],
                -0.5 * (p[0] - p[1]) * sech2 * z / p[3],
            };
            for (int a = 0; a < 4; ++a) {
                jtr[a] += grad[a] * r;
                for (int b = 0; b < 4; ++b) jtj[a][b] += grad[a] * grad[b];
            }
        }
        bool accepted = false;
        for (int attempt = 0; attempt < 25 && !accepted; ++attempt) {
            auto damped = jtj;
            for (int a = 0; a < 4; ++a) damped[a][a] += lambda * std::max(jtj[a][a], 1e-12);
            std::array<double, 4> rhs;
            for (int a = 0; a < 4; ++a) rhs[a] = -jtr[a];
            std::array<double, 4> deltap;
            if (!detail::solve4(damped, rhs, deltap)) {
                lambda *= 10.0;
                continue;
            }
            std::array<double, 4> trial = p;
            for (int a = 0; a < 4; ++a) trial[a] += deltap[a];
            if (std::abs(trial[3]) < 1e-9 * span) {
                lambda *= 10.0;
                continue;
            }
            const double trial_sse = sse_of(trial);
            if (trial_sse <= sse) {
                double step = 0.0;
                for (int a = 0; a < 4; ++a) step = std::max(step, std::abs(deltap[a]));
                const bool done = step < 1e-11 || sse - trial_sse < 1e-15 * (1.0 + sse);
                p = trial;
                sse = trial_sse;
                lambda = std::max(lambda / 3.0, 1e-12);
                accepted = true;
                if (done) iter = 200;
            } else {
                lambda *= 5.0;
            }
        }
        if (!accepted) break;
    }

    SigmoidFit fit;
    fit.upper = p[0];
    fit.lower = p[1];
    fit.midpoint = p[2];
    fit.width = p[3];
    if (fit.width < 0.0) {
        std::swap(fit.lower, fit.upper);
        fit.width = -fit.width;
    }
    fit.rmse = std::sqrt(sse / static_cast<double>(n));
    fit.iterations = iterations;
    if (!std::isfinite(fit.width) || !std::isfinite(fit.midpoint) || !std::isfinite(fit.lower) ||
        !std::isfinite(fit.upper))
        throw calibration_error("sigmoid fit did not converge");
    if (std::abs(fit.upper - fit.lower) < 0.02)
        throw calibration_error("response is flat; no transition to fit");
    if (fit.width <= 0.0 || fit.width > 100.0 * span)
        throw calibration_error("degenerate transition width");
    return fit;
}

// --- offset scale -------------------------------------------------------------

enum class ScaleDirection { multiply, divide };

struct OffsetScaleOptions {
    std::vector<double> probe_offsets;  // defaults to 0..3 in steps of 0.25
    int vertex = -1;                    // defaults to the smallest vertex id
    int shots = 2000;
    int sweeps = 100;
    double beta_initial = 0.1;
    double beta_final = 5.0;
    std::uint64_t seed = 0;
};

struct OffsetScaleResult {
    SigmoidFit fit;
    double scale = 0.0;  // 3 x fitted width
    std::vector<double> offsets;
    std::vector<double> inclusion;
};

// Measures how strongly a vertex must be rewarded before the device reliably
// includes it: a sweep of reward offsets against inclusion probability is a
// sigmoid whose width sets the device's value resolution. The derived scale
// is three widths, comfortably past the transition.
inline OffsetScaleResult offset_scale_calibrate(Device& device, const MvvcProblem& problem,
                                                const OffsetScaleOptions& opt) {
    OffsetScaleResult result;
    result.offsets = opt.probe_offsets;
    if (result.offsets.empty())
        for (int k = 0; k <= 12; ++k) result.offsets.push_back(0.25 * k);
    const auto& graph = problem.graph;
    if (graph.vertices.empty()) throw config_error("offset scale needs a nonempty graph");
    const int vertex = opt.vertex < 0 ? graph.vertices.front() : opt.vertex;
    const int var = mvvc_var_index(problem, vertex);
    for (std::size_t k = 0; k < result.offsets.size(); ++k) {
        MvvcProblem probe;
        probe.graph = graph;
        probe.gamma = problem.gamma;
        for (int v : graph.vertices) probe.values[v] = 0.0;
        probe.values[vertex] = result.offsets[k];
        const IsingModel ising = qubo_to_ising(mvvc_qubo(probe));
        SolverConfig cfg;
        cfg.num_samples = opt.shots;
        cfg.sweeps = opt.sweeps;
        cfg.beta_initial = opt.beta_initial;
        cfg.beta_final = opt.beta_final;
        cfg.seed = derive_seed(opt.seed, "offset-probe", static_cast<std::uint64_t>(k));
        const SampleSet samples = device_sample(device, ising, cfg);
        device.rest();
        double hits = 0.0;
        for (const auto& entry : samples.entries)
            if (entry.config[var] > 0) hits += entry.count;
        result.inclusion.push_back(hits / static_cast<double>(opt.shots));
    }
    result.fit = fit_sigmoid(result.offsets, result.inclusion);
    result.scale = 3.0 * result.fit.width;
    return result;
}

// Rescales team values by the calibrated offset scale before submission.
inline std::map<int, double> scaled_values(const std::map<int, double>& values, double scale,
                                           ScaleDirection direction = ScaleDirection::multiply) {
    if (!(scale > 0.0)) throw config_error("offset scale must be positive");
    std::map<int, double> out;
    for (const auto& [v, value] : values)
        out[v] = direction == ScaleDirection::multiply ? value * scale : value / scale;
    return out;
}

}  // namespace qsched
