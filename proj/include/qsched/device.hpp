#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "qsched/errors.hpp"
#include "qsched/model.hpp"
#include "qsched/rng.hpp"
#include "qsched/solvers.hpp"
#include "qsched/transforms.hpp"

namespace qsched {

// Imperfections of the simulated annealer hardware. Biases are frozen
// per-index draws from `seed`, so the same device always mis-implements the
// same spin the same way; readout errors and the inter-submission transient
// are dynamic.
struct NoiseModel {
    double field_bias_std = 0.0;
    double coupling_bias_std = 0.0;
    double readout_flip_prob = 0.0;
    double autocorrelation_strength = 0.0;
    std::uint64_t seed = 0;
};

inline void validate_noise_model(const NoiseModel& m) {
    if (m.field_bias_std < 0.0 || m.coupling_bias_std < 0.0)
        throw config_error("noise bias widths must be non-negative");
    if (m.readout_flip_prob < 0.0 || m.readout_flip_prob > 0.5)
        throw config_error("readout flip probability must lie in [0, 0.5]");
    if (m.autocorrelation_strength < 0.0 || m.autocorrelation_strength >= 1.0)
        throw config_error("autocorrelation strength must lie in [0, 1)");
}

struct DeviceProbe;

// A stand-in annealer that distorts every submitted problem. Field biases
// apply to every spin; coupling biases only to couplers the problem actually
// exercises. Calibration data (flux offsets, pairwise corrections) is folded
// into submissions until cleared.
class Device {
  public:
    explicit Device(const NoiseModel& noise)
        : noise_(noise), readout_rng_(make_rng(noise.seed, "readout")) {
        validate_noise_model(noise);
    }

    const NoiseModel& noise() const { return noise_; }

    // Lets lingering state from the previous submission die out.
    void rest() { prev_magnetization_.clear(); }

    void clear_calibration() {
        flux_offsets_.clear();
        corrections_ = QuboModel{};
    }

    void apply_flux_offsets(const std::map<int, double>& delta) {
        for (const auto& [spin, value] : delta) {
            if (spin < 0) throw std::invalid_argument("flux offset on negative spin index");
            flux_offsets_[spin] += value;
        }
    }

    const std::map<int, double>& flux_offsets() const { return flux_offsets_; }

    void apply_corrections(const QuboModel& delta) {
        corrections_.num_vars = std::max(corrections_.num_vars, delta.num_vars);
        corrections_.offset += delta.offset;
        for (const auto& [var, c] : delta.linear) corrections_.add_linear(var, c);
        for (const auto& [key, c] : delta.quadratic)
            corrections_.add_quadratic(key.first, key.second, c);
    }

    const QuboModel& corrections() const { return corrections_; }

  private:
    friend struct DeviceProbe;
    friend SampleSet device_sample(Device& device, const IsingModel& submitted,
                                   const SolverConfig& cfg);

    double hidden_field(int spin) const {
        auto it = field_override_.find(spin);
        if (it != field_override_.end()) return it->second;
        if (noise_.field_bias_std == 0.0) return 0.0;
        auto rng = make_rng(noise_.seed, "hidden-field", static_cast<std::uint64_t>(spin));
        std::normal_distribution<double> gauss(0.0, noise_.field_bias_std);
        return gauss(rng);
    }

    double hidden_coupling(int a, int b) const {
        const auto key = make_pair_key(a, b);
        auto it = coupling_override_.find(key);
        if (it != coupling_override_.end()) return it->second;
        if (noise_.coupling_bias_std == 0.0) return 0.0;
        const auto packed = (static_cast<std::uint64_t>(key.first) << 32) |
                            static_cast<std::uint64_t>(key.second);
        auto rng = make_rng(noise_.seed, "hidden-coupling", packed);
        std::normal_distribution<double> gauss(0.0, noise_.coupling_bias_std);
        return gauss(rng);
    }

    NoiseModel noise_;
    std::map<int, double> flux_offsets_;
    QuboModel corrections_;
    std::map<int, double> field_override_;
    std::map<pair_key, double> coupling_override_;
    std::vector<double> prev_magnetization_;
    std::mt19937_64 readout_rng_;
};

// Submits an Ising problem and returns samples. The device anneals an
// effective model: submitted terms, stored corrections, flux offsets, frozen
// hidden biases (couplings only where the effective coupler is active), and a
// field pulled toward the previous submission's magnetization. Readout then
// flips each reported spin independently. Energies are reported under the
// submitted model; with an all-zero noise model and no stored calibration the
// output matches sa_sample exactly.
inline SampleSet device_sample(Device& device, const IsingModel& submitted,
                               const SolverConfig& cfg) {
    validate_solver_config(cfg);
    const int n = submitted.num_spins;
    IsingModel effective = submitted;
    if (device.corrections_.num_vars > 0 || !device.corrections_.linear.empty() ||
        !device.corrections_.quadratic.empty()) {
        if (device.corrections_.num_vars > n)
            throw config_error("stored corrections cover more variables than the model");
        QuboModel padded = device.corrections_;
        padded.num_vars = n;
        const IsingModel corr = qubo_to_ising(padded);
        effective.offset += corr.offset;
        for (const auto& [spin, h] : corr.h) effective.add_field(spin, h);
        for (const auto& [key, j] : corr.J) effective.add_coupling(key.first, key.second, j);
    }
    for (const auto& [spin, value] : device.flux_offsets_) {
        if (spin >= n) throw config_error("flux offset beyond model size");
        effective.add_field(spin, value);
    }
    for (int i = 0; i < n; ++i) effective.add_field(i, device.hidden_field(i));
    if (device.noise_.coupling_bias_std > 0.0 || !device.coupling_override_.empty()) {
        std::vector<pair_key> active;
        for (const auto& [key, j] : effective.J)
            if (j != 0.0) active.push_back(key);
        for (const auto& key : active)
            effective.add_coupling(key.first, key.second,
                                   device.hidden_coupling(key.first, key.second));
    }
    if (device.noise_.autocorrelation_strength > 0.0) {
        const int known = std::min(n, static_cast<int>(device.prev_magnetization_.size()));
        for (int i = 0; i < known; ++i)
            effective.add_field(i, -device.noise_.autocorrelation_strength *
                                       device.prev_magnetization_[i]);
    }

    const auto view = detail::ModelView::of(effective);
    std::vector<std::vector<std::int8_t>> configs(cfg.num_samples);
    detail::run_anneals(view, cfg, configs);

    // Persist the pre-readout magnetization for the next submission.
    device.prev_magnetization_.assign(n, 0.0);
    for (const auto& config : configs)
        for (int i = 0; i < n; ++i) device.prev_magnetization_[i] += config[i];
    for (int i = 0; i < n; ++i) device.prev_magnetization_[i] /= std::max(1, cfg.num_samples);

    if (device.noise_.readout_flip_prob > 0.0) {
        std::bernoulli_distribution flip(device.noise_.readout_flip_prob);
        for (auto& config : configs)
            for (int i = 0; i < n; ++i)
                if (flip(device.readout_rng_)) config[i] = static_cast<std::int8_t>(-config[i]);
    }

    return detail::collapse(Domain::spin, n, configs,
                            [&](const std::vector<std::int8_t>& c) { return submitted.energy(c); });
}

// Test access to the otherwise hidden per-index biases.
struct DeviceProbe {
    static double hidden_field(const Device& d, int spin) { return d.hidden_field(spin); }
    static double hidden_coupling(const Device& d, int a, int b) {
        return d.hidden_coupling(a, b);
    }
    static void set_hidden_field(Device& d, int spin, double value) {
        d.field_override_[spin] = value;
    }
    static void set_hidden_coupling(Device& d, int a, int b, double value) {
        d.coupling_override_[make_pair_key(a, b)] = value;
    }
};

}  // namespace qsched
