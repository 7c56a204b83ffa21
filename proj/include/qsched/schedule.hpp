#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsched/collision.hpp"
#include "qsched/demand.hpp"
#include "qsched/errors.hpp"
#include "qsched/solvers.hpp"
#include "qsched/transforms.hpp"

namespace qsched {

// Room-by-day occupancy grid. A request books a room for its whole stay; a
// room hosts at most one request per day. Room ids index campus.rooms.
class OccupancyState {
  public:
    OccupancyState(int num_rooms, int horizon_days)
        : horizon_(horizon_days), occupant_(num_rooms, std::vector<int>(horizon_days, -1)) {
        if (num_rooms < 0 || horizon_days < 1)
            throw std::invalid_argument("occupancy needs rooms >= 0 and horizon >= 1");
    }

    int num_rooms() const { return static_cast<int>(occupant_.size()); }
    int horizon_days() const { return horizon_; }

    int occupant(int room, int day) const {
        check(room, day);
        return occupant_[room][day];
    }

    bool room_free_over(int room, int start_day, int duration) const {
        check(room, start_day);
        check(room, start_day + duration - 1);
        for (int d = start_day; d < start_day + duration; ++d)
            if (occupant_[room][d] != -1) return false;
        return true;
    }

    void book(int room, const BookingRequest& r) {
        if (!room_free_over(room, r.start_day, r.duration))
            throw std::invalid_argument("room already booked on an overlapping day");
        for (int d = r.start_day; d < r.end_day(); ++d) occupant_[room][d] = r.id;
        booked_rooms_[r.id].push_back(room);
    }

    void release(int request_id) {
        auto it = booked_rooms_.find(request_id);
        if (it == booked_rooms_.end()) return;
        for (auto& column : occupant_)
            for (auto& cell : column)
                if (cell == request_id) cell = -1;
        booked_rooms_.erase(it);
    }

    const std::vector<int>& rooms_of(int request_id) const {
        static const std::vector<int> empty;
        auto it = booked_rooms_.find(request_id);
        return it == booked_rooms_.end() ? empty : it->second;
    }

    // Beds committed on a day: summed capacity of every booked room.
    int booked_capacity(const std::vector<RoomSpec>& rooms, int day) const {
        int beds = 0;
        for (int room = 0; room < num_rooms(); ++room)
            if (occupant_[room][day] != -1) beds += rooms[room].capacity;
        return beds;
    }

  private:
    void check(int room, int day) const {
        if (room < 0 || room >= num_rooms() || day < 0 || day >= horizon_)
            throw std::invalid_argument("room or day out of range");
    }

    int horizon_;
    std::vector<std::vector<int>> occupant_;
    std::map<int, std::vector<int>> booked_rooms_;
};

// --- feasibility ------------------------------------------------------------

enum class RejectReason { none, capacity, conflict };

struct FeasibilityResult {
    bool accepted = false;
    RejectReason reason = RejectReason::none;
};

// A request fits if the candidate rooms free over its whole stay carry enough
// beds. `conflict` flags the case where the candidates would suffice but
// existing bookings block them; `capacity` means they never could.
inline FeasibilityResult check_feasibility(const OccupancyState& state, const BookingRequest& r,
                                           const std::vector<RoomSpec>& candidates) {
    int free_beds = 0, all_beds = 0;
    for (const auto& room : candidates) {
        all_beds += room.capacity;
        if (state.room_free_over(room.id, r.start_day, r.duration)) free_beds += room.capacity;
    }
    if (free_beds >= r.beds) return {true, RejectReason::none};
    return {false, all_beds >= r.beds ? RejectReason::conflict : RejectReason::capacity};
}

// --- greedy -----------------------------------------------------------------

namespace detail {

// Exhaustive minimum-waste subset over at most 20 free rooms. Criteria, in
// order: least wasted beds, fewest rooms, lexicographically smallest ids.
// Once a branch reaches the requested beds, adding rooms only hurts, so the
// search never descends past a feasible prefix.
struct SubsetSearch {
    const std::vector<RoomSpec>& rooms;
    int need;
    std::vector<int> suffix_beds;
    std::vector<int> current;
    std::vector<int> best;
    int best_waste = 0;
    bool found = false;

    SubsetSearch(const std::vector<RoomSpec>& rooms, int need) : rooms(rooms), need(need) {
        suffix_beds.assign(rooms.size() + 1, 0);
        for (int k = static_cast<int>(rooms.size()) - 1; k >= 0; --k)
            suffix_beds[k] = suffix_beds[k + 1] + rooms[k].capacity;
    }

    void consider(int sum) {
        const int waste = sum - need;
        if (!found || waste < best_waste ||
            (waste == best_waste && (current.size() < best.size() ||
                                     (current.size() == best.size() && ids() < best_ids())))) {
            found = true;
            best_waste = waste;
            best = current;
        }
    }

    std::vector<int> ids() const {
        std::vector<int> out;
        for (int k : current) out.push_back(rooms[k].id);
        return out;
    }
    std::vector<int> best_ids() const {
        std::vector<int> out;
        for (int k : best) out.push_back(rooms[k].id);
        return out;
    }

    void descend(std::size_t k, int sum) {
        if (sum >= need) {
            consider(sum);
            return;
        }
        if (k == rooms.size() || sum + suffix_beds[k] < need) return;
        if (found && best_waste == 0 && sum + suffix_beds[k] == need) {
            // Only an exact fill could tie; still worth exploring for the
            // count and id tie-breaks, which stay cheap at this size.
        }
        current.push_back(static_cast<int>(k));
        descend(k + 1, sum + rooms[k].capacity);
        current.pop_back();
        descend(k + 1, sum);
    }
};

}  // namespace detail

struct ScheduleOutcome {
    bool accepted = false;
    RejectReason reason = RejectReason::none;
    std::vector<int> rooms;  // booked room ids
};

// Books the free-room subset wasting the fewest beds. With more than 20 free
// rooms the exhaustive search gives way to first-fit-decreasing.
inline ScheduleOutcome greedy_schedule(OccupancyState& state, const BookingRequest& r,
                                       const std::vector<RoomSpec>& rooms) {
    if (r.beds < 1 || r.duration < 1)
        throw std::invalid_argument("request needs positive beds and duration");
    std::vector<RoomSpec> free;
    int all_beds = 0;
    for (const auto& room : rooms) {
        all_beds += room.capacity;
        if (state.room_free_over(room.id, r.start_day, r.duration)) free.push_back(room);
    }
    int free_beds = 0;
    for (const auto& room : free) free_beds += room.capacity;
    if (free_beds < r.beds)
        return {false, all_beds >= r.beds ? RejectReason::conflict : RejectReason::capacity, {}};

    std::vector<int> chosen;
    if (free.size() <= 20) {
        std::sort(free.begin(), free.end(),
                  [](const RoomSpec& a, const RoomSpec& b) { return a.id < b.id; });
        detail::SubsetSearch search(free, r.beds);
        search.descend(0, 0);
        for (int k : search.best) chosen.push_back(free[k].id);
    } else {
        std::sort(free.begin(), free.end(), [](const RoomSpec& a, const RoomSpec& b) {
            if (a.capacity != b.capacity) return a.capacity > b.capacity;
            return a.id < b.id;
        });
        int sum = 0;
        for (std::size_t next = 0; sum < r.beds; ++next) {
            chosen.push_back(free[next].id);
            sum += free[next].capacity;
        }
        std::sort(chosen.begin(), chosen.end());
    }
    for (int room : chosen) state.book(room, r);
    return {true, RejectReason::none, chosen};
}

// --- hybrid -----------------------------------------------------------------

// Per-room worth of a team: squared filled beds times stay length; the
// occupancy-aware variant additionally cubes the peak committed-bed fraction
// over the team's dates, boosting teams that sit on contested days.
inline double hybrid_value(int kind, int room_capacity, int unassigned_beds, int duration,
                           double max_fill, double alpha = 2.0) {
    if (kind != 1 && kind != 2) throw std::invalid_argument("hybrid kind must be 1 or 2");
    if (room_capacity < 1 || unassigned_beds < 0 || duration < 1)
        throw std::invalid_argument("bad hybrid value inputs");
    if (max_fill < 0.0 || max_fill > 1.0)
        throw std::invalid_argument("fill fraction must lie in [0, 1]");
    const double filled = std::min(room_capacity, unassigned_beds);
    double v = std::pow(filled, alpha) * duration;
    if (kind == 2) v *= max_fill * max_fill * max_fill;
    return v;
}

// One pass over rooms, largest first. Each room gathers the pending teams it
// could host over their full stay, scores them, and books the selector's
// max-value conflict-free subset. Teams still short of beds at the end are
// rolled back. A single pass suffices: selections are maximal per room, so a
// team passed over has its dates blocked in that room for good.
inline std::map<int, ScheduleOutcome> hybrid_schedule(OccupancyState& state,
                                                      const std::vector<BookingRequest>& pending,
                                                      const CampusConfig& campus, int kind,
                                                      const MvvcSelector& selector) {
    std::map<int, ScheduleOutcome> outcomes;
    std::map<int, const BookingRequest*> by_id;
    std::map<int, int> assigned_beds;
    for (const auto& r : pending) {
        if (by_id.count(r.id)) throw std::invalid_argument("duplicate request id in batch");
        by_id[r.id] = &r;
        assigned_beds[r.id] = 0;
    }
    std::vector<RoomSpec> order = campus.rooms;
    std::sort(order.begin(), order.end(), [](const RoomSpec& a, const RoomSpec& b) {
        if (a.capacity != b.capacity) return a.capacity > b.capacity;
        return a.id < b.id;
    });
    const int total_beds = campus.total_beds();
    for (const auto& room : order) {
        std::vector<BookingRequest> candidates;
        for (const auto& [id, r] : by_id) {
            if (assigned_beds[id] >= r->beds) continue;
            if (state.room_free_over(room.id, r->start_day, r->duration))
                candidates.push_back(*r);
        }
        if (candidates.empty()) continue;
        MvvcProblem problem;
        problem.graph = build_collision_graph(candidates);
        for (const auto& r : candidates) {
            double max_fill = 0.0;
            if (kind == 2 && total_beds > 0) {
                for (int d = r.start_day; d < r.end_day(); ++d)
                    max_fill = std::max(
                        max_fill, static_cast<double>(state.booked_capacity(campus.rooms, d)) /
                                      total_beds);
            }
            problem.values[r.id] =
                hybrid_value(kind, room.capacity, r.beds - assigned_beds[r.id], r.duration,
                             max_fill);
        }
        for (int id : selector(problem)) {
            state.book(room.id, *by_id.at(id));
            assigned_beds[id] += room.capacity;
        }
    }
    for (const auto& [id, r] : by_id) {
        if (assigned_beds[id] >= r->beds) {
            outcomes[id] = {true, RejectReason::none, state.rooms_of(id)};
        } else {
            state.release(id);
            outcomes[id] = {false, RejectReason::capacity, {}};
        }
    }
    return outcomes;
}

// --- exact day scheduler ----------------------------------------------------

// Toy-scale joint admission for one day's batch: tries every processing order
// with minimum-waste completions and keeps the order maximizing (accepted
// count, served bed-days, least booked capacity). Only usable for the small
// batches the synthetic demand produces.
inline std::map<int, ScheduleOutcome> exact_day_schedule(OccupancyState& state,
                                                         const std::vector<BookingRequest>& batch,
                                                         const CampusConfig& campus) {
    std::map<int, ScheduleOutcome> best_outcomes;
    if (batch.empty()) return best_outcomes;
    if (batch.size() > 8) throw capacity_error("exact day scheduler handles at most 8 requests");
    std::vector<int> perm(batch.size());
    std::iota(perm.begin(), perm.end(), 0);
    long best_count = -1;
    long best_served = -1;
    long best_booked = 0;
    do {
        OccupancyState trial = state;
        std::map<int, ScheduleOutcome> outcomes;
        long count = 0, served = 0, booked = 0;
        for (int k : perm) {
            const auto& r = batch[k];
            auto outcome = greedy_schedule(trial, r, campus.rooms);
            if (outcome.accepted) {
                ++count;
                served += static_cast<long>(r.beds) * r.duration;
                for (int room : outcome.rooms)
                    booked += static_cast<long>(campus.rooms[room].capacity) * r.duration;
            }
            outcomes[r.id] = outcome;
        }
        if (count > best_count || (count == best_count && served > best_served) ||
            (count == best_count && served == best_served && (best_count < 0 || booked < best_booked))) {
            best_count = count;
            best_served = served;
            best_booked = booked;
            best_outcomes = outcomes;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    // Replay the winning order on the real state.
    std::vector<BookingRequest> ordered = batch;
    std::sort(ordered.begin(), ordered.end(), [&](const BookingRequest& a, const BookingRequest& b) {
        return a.id < b.id;
    });
    for (const auto& r : ordered) {
        const auto& outcome = best_outcomes.at(r.id);
        if (outcome.accepted)
            for (int room : outcome.rooms) state.book(room, r);
    }
    return best_outcomes;
}

// --- simulation and failure harness -----------------------------------------

enum class Method { greedy, hybrid1, hybrid2, exact };

inline Method parse_method(const std::string& name) {
    if (name == "greedy") return Method::greedy;
    if (name == "hybrid1") return Method::hybrid1;
    if (name == "hybrid2") return Method::hybrid2;
    if (name == "exact") return Method::exact;
    throw config_error("unknown method '" + name + "'");
}

inline std::string method_name(Method m) {
    switch (m) {
        case Method::greedy: return "greedy";
        case Method::hybrid1: return "hybrid1";
        case Method::hybrid2: return "hybrid2";
        case Method::exact: return "exact";
    }
    return "?";
}

struct RejectionEvent {
    int day = 0;
    int request_id = 0;
    double filling_factor = 0.0;
};

struct SimulationResult {
    std::map<int, ScheduleOutcome> outcomes;
    std::vector<RejectionEvent> rejections;  // test-period rejections, in order
    int accepted = 0;
    int rejected = 0;
    double final_filling = 0.0;
};

// Served bed-days up to `day` divided by available bed-days up to `day`.
// Serving counts the requested beds of accepted requests, not the booked
// capacity, so wasted beds in oversized rooms never count as filled.
class FillingTracker {
  public:
    FillingTracker(int total_beds, int horizon) : total_beds_(total_beds), served_(horizon, 0) {}

    void add(const BookingRequest& r) {
        for (int d = r.start_day; d < r.end_day() && d < static_cast<int>(served_.size()); ++d)
            served_[d] += r.beds;
    }

    double filling(int day) const {
        if (total_beds_ <= 0) return 0.0;
        long served = 0;
        for (int d = 0; d <= day && d < static_cast<int>(served_.size()); ++d) served += served_[d];
        return static_cast<double>(served) / (static_cast<double>(total_beds_) * (day + 1));
    }

  private:
    int total_beds_;
    std::vector<long> served_;
};

// Runs one method over one stream day by day. Each day's arrivals are decided
// that day; a rejected request is dropped. Rejections on or after
// `record_from_day` are recorded with the filling factor at that moment.
inline SimulationResult run_simulation(Method method, const std::vector<BookingRequest>& stream,
                                       const CampusConfig& campus, int horizon_days,
                                       int record_from_day = 0,
                                       const MvvcSelector& selector = exact_mvvc_selector()) {
    OccupancyState state(static_cast<int>(campus.rooms.size()), horizon_days);
    FillingTracker filling(campus.total_beds(), horizon_days);
    SimulationResult result;
    std::map<int, std::vector<BookingRequest>> by_day;
    for (const auto& r : stream) {
        if (r.start_day < 0 || r.end_day() > horizon_days)
            throw std::invalid_argument("request outside horizon");
        by_day[r.start_day].push_back(r);
    }
    for (auto& [day, batch] : by_day) {
        std::sort(batch.begin(), batch.end(),
                  [](const BookingRequest& a, const BookingRequest& b) { return a.id < b.id; });
        std::map<int, ScheduleOutcome> outcomes;
        switch (method) {
            case Method::greedy:
                for (const auto& r : batch) outcomes[r.id] = greedy_schedule(state, r, campus.rooms);
                break;
            case Method::hybrid1:
            case Method::hybrid2:
                outcomes = hybrid_schedule(state, batch, campus,
                                           method == Method::hybrid1 ? 1 : 2, selector);
                break;
            case Method::exact:
                outcomes = exact_day_schedule(state, batch, campus);
                break;
        }
        for (const auto& r : batch) {
            const auto& outcome = outcomes.at(r.id);
            if (outcome.accepted) {
                filling.add(r);
                ++result.accepted;
            } else {
                ++result.rejected;
                if (day >= record_from_day)
                    result.rejections.push_back({day, r.id, filling.filling(day)});
            }
            result.outcomes[r.id] = outcome;
        }
    }
    result.final_filling = filling.filling(horizon_days - 1);
    return result;
}

struct CurvePoint {
    int rejection_index = 0;  // 1-based
    double mean_filling = 0.0;
    double stderr_filling = 0.0;
    int num_seeds = 0;
};

struct HarnessResult {
    std::map<std::string, std::vector<CurvePoint>> curves;
    std::map<std::string, std::vector<std::vector<double>>> per_seed_fillings;
};

// Failure harness: 50 identical streams per method by default, 30 warmup days
// plus 30 recorded days, curves aggregated per rejection index over seeds.
inline HarnessResult run_failure_harness(const std::vector<Method>& methods, int num_seeds,
                                         const CampusConfig& campus, const DemandModel& demand,
                                         std::uint64_t base_seed, int warmup_days = 30,
                                         int test_days = 30) {
    if (num_seeds < 1) throw std::invalid_argument("need at least one seed");
    const int horizon = warmup_days + test_days;
    HarnessResult result;
    std::vector<std::vector<BookingRequest>> streams;
    streams.reserve(num_seeds);
    for (int s = 0; s < num_seeds; ++s) {
        auto rng = make_rng(base_seed, "harness-stream", static_cast<std::uint64_t>(s));
        streams.push_back(generate_stream(demand, horizon, rng));
    }
    for (Method method : methods) {
        auto& fillings = result.per_seed_fillings[method_name(method)];
        for (int s = 0; s < num_seeds; ++s) {
            auto sim = run_simulation(method, streams[s], campus, horizon, warmup_days);
            std::vector<double> seq;
            for (const auto& e : sim.rejections) seq.push_back(e.filling_factor);
            fillings.push_back(std::move(seq));
        }
        auto& curve = result.curves[method_name(method)];
        for (int index = 1;; ++index) {
            std::vector<double> vals;
            for (const auto& seq : fillings)
                if (static_cast<int>(seq.size()) >= index) vals.push_back(seq[index - 1]);
            if (vals.empty()) break;
            double mean = std::accumulate(vals.begin(), vals.end(), 0.0) / vals.size();
            double var = 0.0;
            for (double v : vals) var += (v - mean) * (v - mean);
            const double se =
                vals.size() > 1 ? std::sqrt(var / (vals.size() - 1) / vals.size()) : 0.0;
            curve.push_back({index, mean, se, static_cast<int>(vals.size())});
        }
    }
    return result;
}

}  // namespace qsched
