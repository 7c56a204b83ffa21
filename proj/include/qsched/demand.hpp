#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsched/errors.hpp"
#include "qsched/rng.hpp"

namespace qsched {

struct RoomSpec {
    int id = 0;
    int capacity = 0;
};

// A campus is a flat list of rooms. The stock unit mix sums to 57 beds, so a
// campus built at scale s holds exactly 57 * s beds.
struct CampusConfig {
    std::vector<RoomSpec> rooms;
    int scaling_factor = 1;

    int total_beds() const {
        int beds = 0;
        for (const auto& r : rooms) beds += r.capacity;
        return beds;
    }
};

// Capacity -> room count for one scale unit: 5x1 + 10x2 + 4x4 + 2x8 = 57.
inline std::map<int, int> default_unit_mix() {
    return {{1, 5}, {2, 10}, {4, 4}, {8, 2}};
}

inline CampusConfig make_campus(const std::map<int, int>& unit_mix, int scale) {
    if (scale < 1) throw std::invalid_argument("campus scale must be >= 1");
    CampusConfig campus;
    campus.scaling_factor = scale;
    int id = 0;
    for (int unit = 0; unit < scale; ++unit) {
        for (auto it = unit_mix.rbegin(); it != unit_mix.rend(); ++it) {
            for (int k = 0; k < it->second; ++k)
                campus.rooms.push_back({id++, it->first});
        }
    }
    return campus;
}

inline CampusConfig default_campus(int scale) { return make_campus(default_unit_mix(), scale); }

// Rebuilds a campus at a new scale, keeping the per-unit capacity mix of the
// base campus. The base room counts must divide evenly by its scaling factor.
inline CampusConfig scale_campus(const CampusConfig& base, int scale) {
    if (scale < 1) throw std::invalid_argument("campus scale must be >= 1");
    if (base.scaling_factor < 1 || base.rooms.empty())
        throw std::invalid_argument("base campus is empty");
    std::map<int, int> counts;
    for (const auto& r : base.rooms) counts[r.capacity] += 1;
    std::map<int, int> unit_mix;
    for (const auto& [cap, count] : counts) {
        if (count % base.scaling_factor != 0)
            throw std::invalid_argument("base campus room counts are not a multiple of its scale");
        unit_mix[cap] = count / base.scaling_factor;
    }
    return make_campus(unit_mix, scale);
}

struct BookingRequest {
    int id = 0;
    int start_day = 0;
    int duration = 0;  // in days, occupies [start_day, start_day + duration)
    int beds = 0;

    int end_day() const { return start_day + duration; }

    bool overlaps(const BookingRequest& other) const {
        return start_day < other.end_day() && other.start_day < end_day();
    }
};

// Synthetic booking demand. Team sizes follow a gamma distribution (rounded,
// clamped to >= 1); stay lengths follow a discrete histogram peaked on short
// camps; arrivals per day are Poisson. A request starts on its arrival day.
struct DemandModel {
    double gamma_shape = 5.86;
    double gamma_scale = 5.72;
    std::map<int, double> duration_histogram = {
        {2, 0.10}, {3, 0.30}, {4, 0.15}, {5, 0.25}, {7, 0.10}, {10, 0.05}, {14, 0.05}};
    double arrival_rate_per_day = 1.2;
    int horizon_days = 30;
};

// Default demand scales with the campus so that 30-day bed demand exceeds
// campus capacity at every scale, which is what drives scheduling failures.
inline DemandModel default_demand_model(int scale) {
    DemandModel m;
    m.arrival_rate_per_day = 0.6 * scale;
    return m;
}

inline void validate_demand(const DemandModel& m) {
    if (m.gamma_shape <= 0.0 || m.gamma_scale <= 0.0)
        throw config_error("gamma parameters must be positive");
    if (m.horizon_days < 1) throw config_error("horizon_days must be >= 1");
    if (m.arrival_rate_per_day < 0.0) throw config_error("arrival rate must be >= 0");
    if (m.duration_histogram.empty()) throw config_error("duration histogram is empty");
    double total = 0.0;
    for (const auto& [days, p] : m.duration_histogram) {
        if (days < 1) throw config_error("duration histogram contains a non-positive duration");
        if (p < 0.0) throw config_error("duration histogram contains a negative probability");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw config_error("duration histogram probabilities must sum to 1");
}

inline int sample_beds(const DemandModel& m, std::mt19937_64& rng) {
    std::gamma_distribution<double> gamma(m.gamma_shape, m.gamma_scale);
    const double draw = gamma(rng);
    return std::max(1, static_cast<int>(std::lround(draw)));
}

inline int sample_duration(const DemandModel& m, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double u = unit(rng);
    double cum = 0.0;
    int last = 1;
    for (const auto& [days, p] : m.duration_histogram) {
        cum += p;
        last = days;
        if (u < cum) return days;
    }
    return last;
}

inline BookingRequest sample_request(const DemandModel& m, int day, std::mt19937_64& rng) {
    validate_demand(m);
    BookingRequest r;
    r.start_day = day;
    r.beds = sample_beds(m, rng);
    r.duration = sample_duration(m, rng);
    return r;
}

// Stream of requests over days [0, days). Durations are truncated at the end
// of the window so every booked date falls inside it.
inline std::vector<BookingRequest> generate_stream(const DemandModel& m, int days,
                                                   std::mt19937_64& rng) {
    validate_demand(m);
    if (days < 1) throw std::invalid_argument("stream length must be >= 1 day");
    std::vector<BookingRequest> stream;
    std::poisson_distribution<int> arrivals(m.arrival_rate_per_day);
    int id = 0;
    for (int day = 0; day < days; ++day) {
        const int count = m.arrival_rate_per_day > 0.0 ? arrivals(rng) : 0;
        for (int k = 0; k < count; ++k) {
            BookingRequest r = sample_request(m, day, rng);
            r.id = id++;
            r.duration = std::min(r.duration, days - day);
            stream.push_back(r);
        }
    }
    return stream;
}

}  // namespace qsched
