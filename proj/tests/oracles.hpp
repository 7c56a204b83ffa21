#pragma once

// Reference implementations used only by the test suite. Everything here is
// plain enumeration, kept deliberately independent of the library code it
// checks: no shared helpers beyond the model types themselves.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "qsched/model.hpp"

namespace oracle {

using config = std::vector<std::int8_t>;

// Full 2^n spectrum of a QUBO, energies indexed by the configuration bits
// (bit i of the state index is x_i).
inline std::vector<double> qubo_spectrum(const qsched::QuboModel& m) {
    const int n = m.num_vars;
    std::vector<double> energies;
    energies.reserve(std::size_t{1} << n);
    config x(n, 0);
    for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
        for (int i = 0; i < n; ++i) x[i] = (state >> i) & 1u;
        energies.push_back(m.energy(x));
    }
    return energies;
}

inline std::vector<double> ising_spectrum(const qsched::IsingModel& m) {
    const int n = m.num_spins;
    std::vector<double> energies;
    energies.reserve(std::size_t{1} << n);
    config s(n, 1);
    for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
        for (int i = 0; i < n; ++i) s[i] = ((state >> i) & 1u) ? 1 : -1;
        energies.push_back(m.energy(s));
    }
    return energies;
}

// All states attaining the minimum of the spectrum within tol.
template <typename Model>
inline std::vector<config> argmin_states(const Model& m, double tol = 1e-9) {
    const int n = [&] {
        if constexpr (std::is_same_v<Model, qsched::QuboModel>)
            return m.num_vars;
        else
            return m.num_spins;
    }();
    constexpr bool is_qubo = std::is_same_v<Model, qsched::QuboModel>;
    double best = 0.0;
    bool have = false;
    std::vector<config> out;
    config v(n, 0);
    for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
        for (int i = 0; i < n; ++i) {
            if constexpr (is_qubo)
                v[i] = (state >> i) & 1u;
            else
                v[i] = ((state >> i) & 1u) ? 1 : -1;
        }
        double e = m.energy(v);
        if (!have || e < best - tol) {
            best = e;
            have = true;
            out.clear();
            out.push_back(v);
        } else if (e <= best + tol) {
            out.push_back(v);
        }
    }
    return out;
}

// --- independent sets -------------------------------------------------------

struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

inline bool is_independent(const Graph& g, std::uint64_t mask) {
    for (auto [a, b] : g.edges)
        if (((mask >> a) & 1u) && ((mask >> b) & 1u)) return false;
    return true;
}

inline std::vector<std::uint64_t> nonempty_independent_sets(const Graph& g) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.n); ++mask)
        if (is_independent(g, mask)) out.push_back(mask);
    return out;
}

// Exact pair and vertex statistics of the uniform distribution over all
// nonempty independent sets: probs[{i,j}][2a+b] = P(x_i = a, x_j = b).
struct UniformCoverStats {
    std::map<std::pair<int, int>, std::array<double, 4>> pair_probs;
    std::vector<double> vertex_inclusion;
};

inline UniformCoverStats uniform_cover_stats(const Graph& g) {
    UniformCoverStats st;
    st.vertex_inclusion.assign(g.n, 0.0);
    auto sets = nonempty_independent_sets(g);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) st.pair_probs[{i, j}] = {0, 0, 0, 0};
    for (auto mask : sets) {
        for (int i = 0; i < g.n; ++i) {
            const bool a = (mask >> i) & 1u;
            if (a) st.vertex_inclusion[i] += 1.0;
            for (int j = i + 1; j < g.n; ++j) {
                const bool b = (mask >> j) & 1u;
                st.pair_probs[{i, j}][2 * int(a) + int(b)] += 1.0;
            }
        }
    }
    const double total = static_cast<double>(sets.size());
    for (auto& [_, probs] : st.pair_probs)
        for (auto& p : probs) p /= total;
    for (auto& p : st.vertex_inclusion) p /= total;
    return st;
}

// Maximum total value over independent sets; returns the best value and all
// optimal vertex sets as sorted id vectors.
inline std::pair<double, std::vector<std::vector<int>>> best_independent_sets(
    const Graph& g, const std::vector<double>& values, double tol = 1e-9) {
    double best = 0.0;  // empty set
    std::vector<std::vector<int>> argmax{{}};
    for (auto mask : nonempty_independent_sets(g)) {
        double v = 0.0;
        std::vector<int> ids;
        for (int i = 0; i < g.n; ++i)
            if ((mask >> i) & 1u) {
                v += values[i];
                ids.push_back(i);
            }
        if (v > best + tol) {
            best = v;
            argmax.assign(1, ids);
        } else if (v >= best - tol) {
            argmax.push_back(ids);
        }
    }
    return {best, argmax};
}

// --- scheduling helpers -----------------------------------------------------

inline bool dates_overlap(int start_a, int dur_a, int start_b, int dur_b) {
    for (int d = start_a; d < start_a + dur_a; ++d)
        if (d >= start_b && d < start_b + dur_b) return true;
    return false;
}

// Exhaustive minimum-waste room subset: capacities indexed by position; the
// returned index set minimizes (sum - need, count, lexicographic ids) subject
// to sum >= need. Empty optional-like: returns {false, {}} when infeasible.
struct SubsetPick {
    bool feasible = false;
    std::vector<int> indices;
    int waste = 0;
};

inline SubsetPick min_waste_subset(const std::vector<int>& caps, int need) {
    SubsetPick best;
    const int n = static_cast<int>(caps.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        int sum = 0, count = 0;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1u) {
                sum += caps[i];
                ++count;
            }
        if (sum < need) continue;
        std::vector<int> ids;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1u) ids.push_back(i);
        const int waste = sum - need;
        if (!best.feasible || waste < best.waste ||
            (waste == best.waste &&
             (count < static_cast<int>(best.indices.size()) ||
              (count == static_cast<int>(best.indices.size()) && ids < best.indices)))) {
            best.feasible = true;
            best.indices = ids;
            best.waste = waste;
        }
    }
    return best;
}

}  // namespace oracle
