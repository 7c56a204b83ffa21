#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qsched {

// Error taxonomy mirrored by the CLI exit codes: usage 2, config 3,
// capacity 4, calibration 5. Contract violations on in-process calls use
// std::invalid_argument and are treated as usage errors at the CLI boundary.

class config_error : public std::runtime_error {
  public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

class capacity_error : public std::runtime_error {
  public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

class calibration_error : public std::runtime_error {
  public:
    explicit calibration_error(const std::string& what) : std::runtime_error(what) {}
    calibration_error(const std::string& what, std::vector<double> trace)
        : std::runtime_error(what), trace(std::move(trace)) {}

    // Mean absolute statistic mismatch per iteration, for post-mortems.
    std::vector<double> trace;
};

}  // namespace qsched
