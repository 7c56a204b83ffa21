#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <string>

#include <json.hpp>

#include "qsched/calibration.hpp"
#include "qsched/device.hpp"
#include "qsched/errors.hpp"
#include "qsched/model.hpp"

namespace qsched {

// Everything a calibration run learned about a device. Hidden biases are
// keyed by the device seed, so data saved for one seed reproduces on a fresh
// device built with the same seed.
struct CalibrationData {
    std::map<int, double> flux_offsets;
    QuboModel corrections;
    double offset_scale = 0.0;  // 0 means the offset probe was not run
    bool pairwise_converged = false;
    int pairwise_iterations = 0;
    double pairwise_sigma = 0.0;
    std::vector<double> pairwise_trace;
};

inline CalibrationData snapshot_calibration(const Device& device) {
    CalibrationData data;
    data.flux_offsets = device.flux_offsets();
    data.corrections = device.corrections();
    return data;
}

inline void apply_calibration(Device& device, const CalibrationData& data) {
    device.clear_calibration();
    device.apply_flux_offsets(data.flux_offsets);
    device.apply_corrections(data.corrections);
}

inline void write_calibration_json(std::ostream& out, const CalibrationData& data) {
    nlohmann::json j;
    j["flux_offsets"] = nlohmann::json::array();
    for (const auto& [spin, value] : data.flux_offsets)
        j["flux_offsets"].push_back({spin, value});
    nlohmann::json corr;
    corr["num_vars"] = data.corrections.num_vars;
    corr["offset"] = data.corrections.offset;
    corr["linear"] = nlohmann::json::array();
    for (const auto& [var, c] : data.corrections.linear) corr["linear"].push_back({var, c});
    corr["quadratic"] = nlohmann::json::array();
    for (const auto& [key, c] : data.corrections.quadratic)
        corr["quadratic"].push_back({key.first, key.second, c});
    j["corrections"] = corr;
    j["offset_scale"] = data.offset_scale;
    j["pairwise"] = {{"converged", data.pairwise_converged},
                     {"iterations", data.pairwise_iterations},
                     {"sigma", data.pairwise_sigma},
                     {"trace", data.pairwise_trace}};
    out << j.dump(2) << '\n';
}

inline CalibrationData read_calibration_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("bad calibration file: ") + e.what());
    }
    CalibrationData data;
    try {
        for (const auto& entry : j.at("flux_offsets"))
            data.flux_offsets[entry.at(0).get<int>()] = entry.at(1).get<double>();
        const auto& corr = j.at("corrections");
        data.corrections.num_vars = corr.at("num_vars").get<int>();
        data.corrections.offset = corr.at("offset").get<double>();
        for (const auto& entry : corr.at("linear"))
            data.corrections.add_linear(entry.at(0).get<int>(), entry.at(1).get<double>());
        for (const auto& entry : corr.at("quadratic"))
            data.corrections.add_quadratic(entry.at(0).get<int>(), entry.at(1).get<int>(),
                                           entry.at(2).get<double>());
        data.offset_scale = j.at("offset_scale").get<double>();
        const auto& pw = j.at("pairwise");
        data.pairwise_converged = pw.at("converged").get<bool>();
        data.pairwise_iterations = pw.at("iterations").get<int>();
        data.pairwise_sigma = pw.at("sigma").get<double>();
        data.pairwise_trace = pw.at("trace").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("bad calibration file: ") + e.what());
    }
    return data;
}

}  // namespace qsched
