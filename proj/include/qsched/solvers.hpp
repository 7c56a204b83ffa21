#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "qsched/errors.hpp"
#include "qsched/model.hpp"
#include "qsched/rng.hpp"
#include "qsched/transforms.hpp"

namespace qsched {

enum class Domain { binary, spin };

struct Sample {
    std::vector<std::int8_t> config;
    double energy = 0.0;
    int count = 1;
};

// Aggregated draws over one model. Entries are collapsed per configuration
// and kept sorted by (energy, config), so identical runs serialize
// identically. Energies always come from a fresh model evaluation of the
// stored configuration.
struct SampleSet {
    Domain domain = Domain::spin;
    int num_vars = 0;
    std::vector<Sample> entries;

    int total_count() const {
        int n = 0;
        for (const auto& e : entries) n += e.count;
        return n;
    }

    double min_energy() const {
        if (entries.empty()) throw std::invalid_argument("empty sample set");
        double best = entries.front().energy;
        for (const auto& e : entries) best = std::min(best, e.energy);
        return best;
    }
};

namespace detail {

inline void sort_entries(std::vector<Sample>& entries) {
    std::sort(entries.begin(), entries.end(), [](const Sample& a, const Sample& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        return a.config < b.config;
    });
}

inline SampleSet collapse(Domain domain, int num_vars,
                          const std::vector<std::vector<std::int8_t>>& configs,
                          const std::function<double(const std::vector<std::int8_t>&)>& energy) {
    std::map<std::vector<std::int8_t>, int> counts;
    for (const auto& c : configs) counts[c] += 1;
    SampleSet out;
    out.domain = domain;
    out.num_vars = num_vars;
    for (const auto& [config, count] : counts) out.entries.push_back({config, energy(config), count});
    sort_entries(out.entries);
    return out;
}

// Neighbor lists with coupling values, shared by the annealer and the
// steepest descent passes.
struct ModelView {
    int n = 0;
    bool is_qubo = false;
    std::vector<double> linear;
    std::vector<std::vector<std::pair<int, double>>> neighbors;
    double offset = 0.0;

    static ModelView of(const QuboModel& m) {
        ModelView v;
        v.n = m.num_vars;
        v.is_qubo = true;
        v.offset = m.offset;
        v.linear.assign(v.n, 0.0);
        v.neighbors.assign(v.n, {});
        for (const auto& [i, c] : m.linear) v.linear[i] = c;
        for (const auto& [ij, c] : m.quadratic) {
            v.neighbors[ij.first].emplace_back(ij.second, c);
            v.neighbors[ij.second].emplace_back(ij.first, c);
        }
        return v;
    }

    static ModelView of(const IsingModel& m) {
        ModelView v;
        v.n = m.num_spins;
        v.is_qubo = false;
        v.offset = m.offset;
        v.linear.assign(v.n, 0.0);
        v.neighbors.assign(v.n, {});
        for (const auto& [i, c] : m.h) v.linear[i] = c;
        for (const auto& [ij, c] : m.J) {
            v.neighbors[ij.first].emplace_back(ij.second, c);
            v.neighbors[ij.second].emplace_back(ij.first, c);
        }
        return v;
    }

    // Energy change of flipping variable i in configuration v.
    double flip_delta(const std::vector<std::int8_t>& state, int i) const {
        double field = linear[i];
        for (const auto& [j, c] : neighbors[i])
            field += is_qubo ? (state[j] ? c : 0.0) : c * state[j];
        if (is_qubo) return state[i] ? -field : field;
        return -2.0 * state[i] * field;
    }
};

}  // namespace detail

// --- exact solver -----------------------------------------------------------

struct ExactResult {
    double energy = 0.0;
    std::vector<std::vector<std::int8_t>> configs;  // every optimum, sorted
};

namespace detail {

// Depth-first branch and bound over a fixed influence-ordered variable list.
// The bound assumes every remaining term lands on its best case, so no
// optimum can be pruned; ties within 1e-12 are all collected.
class ExactSearch {
  public:
    ExactSearch(const ModelView& view) : view_(view) {
        order_.resize(view.n);
        for (int i = 0; i < view.n; ++i) order_[i] = i;
        std::vector<double> influence(view.n, 0.0);
        for (int i = 0; i < view.n; ++i) {
            influence[i] = std::abs(view.linear[i]);
            for (const auto& [j, c] : view.neighbors[i]) influence[i] += std::abs(c);
        }
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return influence[a] > influence[b]; });
        depth_of_.assign(view.n, 0);
        for (int d = 0; d < view.n; ++d) depth_of_[order_[d]] = d;
    }

    ExactResult run() {
        state_.assign(view_.n, 0);
        // Best case of every pairwise term among still-free variables.
        free_pair_bound_ = 0.0;
        for (int i = 0; i < view_.n; ++i)
            for (const auto& [j, c] : view_.neighbors[i])
                if (j > i) free_pair_bound_ += pair_floor(c);
        eff_.assign(view_.n, 0.0);
        for (int i = 0; i < view_.n; ++i) eff_[i] = view_.linear[i];
        best_ = std::numeric_limits<double>::infinity();
        descend(0, view_.offset);
        ExactResult out;
        out.energy = best_;
        out.configs = std::move(found_);
        std::sort(out.configs.begin(), out.configs.end());
        return out;
    }

  private:
    double pair_floor(double c) const { return view_.is_qubo ? std::min(0.0, c) : -std::abs(c); }
    double lin_floor(double c) const { return view_.is_qubo ? std::min(0.0, c) : -std::abs(c); }

    double bound(int depth, double partial) const {
        double b = partial + free_pair_bound_;
        for (int d = depth; d < view_.n; ++d) b += lin_floor(eff_[order_[d]]);
        return b;
    }

    void descend(int depth, double partial) {
        if (depth == view_.n) {
            if (partial < best_ - kTie) {
                best_ = partial;
                found_.clear();
            }
            if (partial <= best_ + kTie) found_.push_back(state_);
            return;
        }
        if (bound(depth, partial) > best_ + kTie) return;
        const int v = order_[depth];
        // Fixing v removes its free-free pair slack and freezes its field.
        double removed = 0.0;
        for (const auto& [j, c] : view_.neighbors[v])
            if (depth_of_[j] > depth) removed += pair_floor(c);
        free_pair_bound_ -= removed;

        const std::array<std::int8_t, 2> choices =
            view_.is_qubo ? std::array<std::int8_t, 2>{0, 1} : std::array<std::int8_t, 2>{-1, 1};
        for (std::int8_t value : choices) {
            state_[v] = value;
            double delta = view_.is_qubo ? (value ? eff_[v] : 0.0) : eff_[v] * value;
            for (const auto& [j, c] : view_.neighbors[v]) {
                if (depth_of_[j] > depth)
                    eff_[j] += view_.is_qubo ? (value ? c : 0.0) : c * value;
            }
            descend(depth + 1, partial + delta);
            for (const auto& [j, c] : view_.neighbors[v]) {
                if (depth_of_[j] > depth)
                    eff_[j] -= view_.is_qubo ? (value ? c : 0.0) : c * value;
            }
        }
        state_[v] = 0;
        free_pair_bound_ += removed;
    }

    static constexpr double kTie = 1e-12;
    const ModelView& view_;
    std::vector<int> order_;
    std::vector<int> depth_of_;
    std::vector<std::int8_t> state_;
    std::vector<double> eff_;
    double free_pair_bound_ = 0.0;
    double best_ = 0.0;
    std::vector<std::vector<std::int8_t>> found_;
};

inline ExactResult exact_solve_view(const ModelView& view) {
    if (view.n > 60)
        throw capacity_error("exact solver handles at most 60 variables, got " +
                             std::to_string(view.n));
    if (view.n == 0) return {view.offset, {{}}};
    ExactSearch search(view);
    return search.run();
}

}  // namespace detail

inline ExactResult exact_solve(const QuboModel& m) {
    return detail::exact_solve_view(detail::ModelView::of(m));
}

inline ExactResult exact_solve(const IsingModel& m) {
    return detail::exact_solve_view(detail::ModelView::of(m));
}

// --- simulated annealing ----------------------------------------------------

// Stand-in for an annealing device: independent Metropolis anneals under a
// geometric inverse-temperature ramp. `sweeps` plays the role of anneal time.
struct SolverConfig {
    int num_samples = 1000;
    int sweeps = 100;
    double beta_initial = 0.1;
    double beta_final = 10.0;
    std::uint64_t seed = 0;
    int threads = 1;
};

inline void validate_solver_config(const SolverConfig& c) {
    if (c.num_samples < 1) throw std::invalid_argument("num_samples must be >= 1");
    if (c.sweeps < 1) throw std::invalid_argument("sweeps must be >= 1");
    if (!(c.beta_initial > 0.0) || !(c.beta_final >= c.beta_initial))
        throw std::invalid_argument("need 0 < beta_initial <= beta_final");
}

namespace detail {

inline void anneal_one(const ModelView& view, const SolverConfig& cfg, std::mt19937_64& rng,
                       std::vector<std::int8_t>& state) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    state.resize(view.n);
    for (int i = 0; i < view.n; ++i)
        state[i] = (rng() & 1u) ? std::int8_t{1} : std::int8_t{-1};
    const double ratio = cfg.beta_final / cfg.beta_initial;
    for (int sweep = 0; sweep < cfg.sweeps; ++sweep) {
        const double frac = cfg.sweeps == 1 ? 1.0 : static_cast<double>(sweep) / (cfg.sweeps - 1);
        const double beta = cfg.beta_initial * std::pow(ratio, frac);
        for (int i = 0; i < view.n; ++i) {
            const double delta = view.flip_delta(state, i);
            if (delta <= 0.0 || unit(rng) < std::exp(-beta * delta)) state[i] = -state[i];
        }
    }
}

// Fills configs[s] with the result of anneal s. Sample s always sees the same
// derived rng, so the output is independent of the thread count.
inline void run_anneals(const ModelView& view, const SolverConfig& cfg,
                        std::vector<std::vector<std::int8_t>>& configs) {
    configs.resize(cfg.num_samples);
    auto worker = [&](int begin, int end) {
        for (int s = begin; s < end; ++s) {
            auto rng = make_rng(cfg.seed, "sa-sample", static_cast<std::uint64_t>(s));
            anneal_one(view, cfg, rng, configs[s]);
        }
    };
    const int threads = std::max(1, cfg.threads);
    if (threads == 1 || cfg.num_samples < 2 * threads) {
        worker(0, cfg.num_samples);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (cfg.num_samples + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int begin = t * chunk;
            const int end = std::min(cfg.num_samples, begin + chunk);
            if (begin < end) pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }
}

}  // namespace detail

inline SampleSet sa_sample(const IsingModel& model, const SolverConfig& cfg) {
    validate_solver_config(cfg);
    const auto view = detail::ModelView::of(model);
    std::vector<std::vector<std::int8_t>> configs;
    detail::run_anneals(view, cfg, configs);
    return detail::collapse(Domain::spin, model.num_spins, configs,
                            [&](const std::vector<std::int8_t>& s) { return model.energy(s); });
}

// --- steepest descent -------------------------------------------------------

// Repeatedly applies the single flip with the largest energy decrease (ties
// to the lowest index) until no flip strictly decreases the energy. The
// result is a local minimum and the pass is idempotent.
template <typename Model>
inline std::vector<std::int8_t> steepest_descent(const Model& model,
                                                 std::vector<std::int8_t> config) {
    const auto view = detail::ModelView::of(model);
    if (static_cast<int>(config.size()) != view.n)
        throw std::invalid_argument("configuration length does not match model");
    for (;;) {
        int best_i = -1;
        double best_delta = 0.0;
        for (int i = 0; i < view.n; ++i) {
            const double d = view.flip_delta(config, i);
            if (d < best_delta - 1e-15) {
                best_delta = d;
                best_i = i;
            }
        }
        if (best_i < 0) return config;
        if (view.is_qubo)
            config[best_i] = config[best_i] ? 0 : 1;
        else
            config[best_i] = -config[best_i];
    }
}

template <typename Model>
inline SampleSet steepest_descent(const Model& model, const SampleSet& samples) {
    std::vector<std::vector<std::int8_t>> configs;
    configs.reserve(samples.entries.size());
    std::vector<int> counts;
    for (const auto& e : samples.entries) {
        configs.push_back(steepest_descent(model, e.config));
        counts.push_back(e.count);
    }
    std::map<std::vector<std::int8_t>, int> merged;
    for (std::size_t k = 0; k < configs.size(); ++k) merged[configs[k]] += counts[k];
    SampleSet out;
    out.domain = samples.domain;
    out.num_vars = samples.num_vars;
    for (const auto& [config, count] : merged)
        out.entries.push_back({config, model.energy(config), count});
    detail::sort_entries(out.entries);
    return out;
}

// --- quantiles --------------------------------------------------------------

// Lower-interpolation quantile of the energy multiset: the energy of the
// ceil(q * N)-th draw in ascending order, counts respected.
inline double quantile_energy(const SampleSet& samples, double q) {
    if (samples.entries.empty()) throw std::invalid_argument("empty sample set");
    if (!(q > 0.0) || q > 1.0) throw std::invalid_argument("quantile must be in (0, 1]");
    const int total = samples.total_count();
    const int rank = std::max<int>(1, static_cast<int>(std::ceil(q * total)));
    std::vector<const Sample*> sorted;
    sorted.reserve(samples.entries.size());
    for (const auto& e : samples.entries) sorted.push_back(&e);
    std::sort(sorted.begin(), sorted.end(),
              [](const Sample* a, const Sample* b) { return a->energy < b->energy; });
    int seen = 0;
    for (const auto* e : sorted) {
        seen += e->count;
        if (seen >= rank) return e->energy;
    }
    return sorted.back()->energy;
}

// --- vertex selection -------------------------------------------------------

// A selector returns an independent set of vertex ids for an MVVC instance.
using MvvcSelector = std::function<std::vector<int>(const MvvcProblem&)>;

namespace detail {

// Exhaustive max-value independent set with deterministic tie-breaking:
// highest value, then most vertices, then lexicographically smallest ids.
// Preferring larger sets keeps degenerate all-zero-value instances useful:
// the selection is then a maximal set instead of the empty one.
class MvvcSearch {
  public:
    MvvcSearch(const MvvcProblem& p) : p_(p) {
        ids_ = p.graph.vertices;
        suffix_positive_.assign(ids_.size() + 1, 0.0);
        for (int k = static_cast<int>(ids_.size()) - 1; k >= 0; --k) {
            const double v = p.values.at(ids_[k]);
            suffix_positive_[k] = suffix_positive_[k + 1] + std::max(0.0, v);
        }
    }

    std::vector<int> run() {
        best_value_ = 0.0;
        best_.clear();
        have_best_ = true;  // empty selection is always feasible
        descend(0, 0.0);
        return best_;
    }

  private:
    void descend(std::size_t k, double value) {
        if (value + suffix_positive_[k] < best_value_ - kTie) return;
        if (k == ids_.size()) {
            consider(value);
            return;
        }
        const int v = ids_[k];
        bool blocked = false;
        for (int chosen : current_)
            if (p_.graph.has_edge(chosen, v)) {
                blocked = true;
                break;
            }
        if (!blocked) {
            current_.push_back(v);
            descend(k + 1, value + p_.values.at(v));
            current_.pop_back();
        }
        descend(k + 1, value);
    }

    void consider(double value) {
        if (!have_best_ || value > best_value_ + kTie) {
            best_value_ = value;
            best_ = current_;
            have_best_ = true;
            return;
        }
        if (value < best_value_ - kTie) return;
        if (current_.size() > best_.size() ||
            (current_.size() == best_.size() && current_ < best_)) {
            best_ = current_;
        }
    }

    static constexpr double kTie = 1e-12;
    const MvvcProblem& p_;
    std::vector<int> ids_;
    std::vector<double> suffix_positive_;
    std::vector<int> current_;
    std::vector<int> best_;
    double best_value_ = 0.0;
    bool have_best_ = false;
};

}  // namespace detail

inline std::vector<int> exact_mvvc_select(const MvvcProblem& p) {
    validate_mvvc(p);
    if (p.graph.vertices.size() > 60)
        throw capacity_error("exact selection handles at most 60 vertices");
    detail::MvvcSearch search(p);
    return search.run();
}

inline MvvcSelector exact_mvvc_selector() {
    return [](const MvvcProblem& p) { return exact_mvvc_select(p); };
}

// Sampler-backed selection: anneal the redistributed model with values
// normalized under the edge penalty, take the best draw, then repair any
// remaining edge violations (drop the cheaper endpoint) and greedily add
// free positive-value vertices.
inline std::vector<int> sampled_mvvc_select(const MvvcProblem& p, const SolverConfig& cfg) {
    validate_mvvc(p);
    if (p.graph.vertices.empty()) return {};
    MvvcProblem scaled = p;
    double max_abs = 0.0;
    for (const auto& [_, v] : p.values) max_abs = std::max(max_abs, std::abs(v));
    if (max_abs > 0.0)
        for (auto& [_, v] : scaled.values) v /= max_abs;
    QuboModel qubo = redistribute_values(mvvc_qubo(scaled), scaled.graph,
                                         uniform_neighbor_weights(scaled.graph));
    SampleSet samples = sa_sample(qubo_to_ising(qubo), cfg);
    samples = steepest_descent(qubo_to_ising(qubo), samples);

    std::vector<int> chosen;
    const auto& best = samples.entries.front().config;
    for (std::size_t k = 0; k < p.graph.vertices.size(); ++k)
        if (best[k] > 0) chosen.push_back(p.graph.vertices[k]);
    // Repair: drop the lower-value endpoint of any kept edge.
    for (bool changed = true; changed;) {
        changed = false;
        for (auto [a, b] : p.graph.edges) {
            const bool has_a = std::find(chosen.begin(), chosen.end(), a) != chosen.end();
            const bool has_b = std::find(chosen.begin(), chosen.end(), b) != chosen.end();
            if (!has_a || !has_b) continue;
            const int drop = p.values.at(a) < p.values.at(b) ? a : b;
            chosen.erase(std::find(chosen.begin(), chosen.end(), drop));
            changed = true;
        }
    }
    for (int v : p.graph.vertices) {
        if (p.values.at(v) <= 0.0) continue;
        if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) continue;
        bool blocked = false;
        for (int c : chosen)
            if (p.graph.has_edge(c, v)) {
                blocked = true;
                break;
            }
        if (!blocked) chosen.push_back(v);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

inline MvvcSelector sampled_mvvc_selector(SolverConfig cfg) {
    return [cfg](const MvvcProblem& p) { return sampled_mvvc_select(p, cfg); };
}

}  // namespace qsched
