#pragma once

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qsched/collision.hpp"
#include "qsched/demand.hpp"
#include "qsched/model.hpp"

namespace qsched {

// Maximum value vertex cover instance: pick a set of vertices with no
// internal collision edge, maximizing the summed values. QUBO variables are
// positions in the sorted vertex list.
struct MvvcProblem {
    CollisionGraph graph;
    std::map<int, double> values;  // keyed by vertex id
    double gamma = 1.0;
};

inline int mvvc_var_index(const MvvcProblem& p, int vertex_id) {
    auto it = std::lower_bound(p.graph.vertices.begin(), p.graph.vertices.end(), vertex_id);
    if (it == p.graph.vertices.end() || *it != vertex_id)
        throw std::invalid_argument("vertex id not in problem");
    return static_cast<int>(it - p.graph.vertices.begin());
}

inline void validate_mvvc(const MvvcProblem& p) {
    if (p.gamma <= 0.0) throw std::invalid_argument("gamma must be positive");
    for (int v : p.graph.vertices) {
        auto it = p.values.find(v);
        if (it == p.values.end()) throw std::invalid_argument("missing value for vertex");
        if (!std::isfinite(it->second)) throw std::invalid_argument("vertex value must be finite");
    }
}

// Plain penalty form: gamma on every collision edge, minus the value on each
// selected vertex. When two adjacent values both exceed gamma the minimum can
// sit on a state that keeps the edge, which is what the value redistribution
// below removes.
inline QuboModel mvvc_qubo(const MvvcProblem& p) {
    validate_mvvc(p);
    QuboModel q;
    q.num_vars = static_cast<int>(p.graph.vertices.size());
    for (int v : p.graph.vertices) q.add_linear(mvvc_var_index(p, v), -p.values.at(v));
    for (auto [a, b] : p.graph.edges)
        q.add_quadratic(mvvc_var_index(p, a), mvvc_var_index(p, b), p.gamma);
    return q;
}

// Synthetic per-vertex values: duration ratio plus a small integer jitter,
// both normalized by the largest duration.
inline std::map<int, double> random_values(const CollisionGraph& graph, int max_duration,
                                           const std::map<int, int>& durations,
                                           std::mt19937_64& rng) {
    if (max_duration < 1) throw std::invalid_argument("max_duration must be >= 1");
    std::uniform_int_distribution<int> jitter(-3, 3);
    std::map<int, double> values;
    for (int v : graph.vertices) {
        auto it = durations.find(v);
        if (it == durations.end()) throw std::invalid_argument("missing duration for vertex");
        values[v] = (static_cast<double>(it->second) + jitter(rng)) / max_duration;
    }
    return values;
}

// Directed redistribution weights w[(i,j)]: the share of vertex i's value
// moved onto edge (i,j). The uniform choice splits evenly over neighbors.
using EdgeWeights = std::map<std::pair<int, int>, double>;

inline EdgeWeights uniform_neighbor_weights(const CollisionGraph& graph) {
    EdgeWeights w;
    for (int v : graph.vertices) {
        const int deg = graph.degree(v);
        if (deg == 0) continue;
        for (int u : graph.adjacency.at(v)) w[{v, u}] = 1.0 / deg;
    }
    return w;
}

// Rewrites each non-isolated vertex's linear term through the identity
// x_i = sum_j w_ij x_i (1 - x_j) on edge-free states, which holds whenever
// the weights out of i sum to 1. Energies on independent sets are unchanged;
// states keeping an edge lose the value credit of both endpoints, so the
// penalty no longer competes with large values. Isolated vertices keep their
// plain linear term.
inline QuboModel redistribute_values(const QuboModel& qubo, const CollisionGraph& graph,
                                     const EdgeWeights& weights) {
    if (qubo.num_vars != static_cast<int>(graph.vertices.size()))
        throw std::invalid_argument("model size does not match graph");
    std::map<int, double> weight_sum;
    for (const auto& [edge, w] : weights) {
        auto [i, j] = edge;
        auto it = std::find(graph.vertices.begin(), graph.vertices.end(), i);
        auto jt = std::find(graph.vertices.begin(), graph.vertices.end(), j);
        if (it == graph.vertices.end() || jt == graph.vertices.end())
            throw std::invalid_argument("weight references unknown vertex");
        if (!graph.has_edge(i, j)) throw std::invalid_argument("weight on a non-edge");
        weight_sum[i] += w;
    }
    for (int v : graph.vertices) {
        if (graph.degree(v) == 0) continue;
        auto it = weight_sum.find(v);
        if (it == weight_sum.end() || std::abs(it->second - 1.0) > 1e-9)
            throw std::invalid_argument("weights out of each covered vertex must sum to 1");
    }
    auto var = [&](int id) {
        return static_cast<int>(std::lower_bound(graph.vertices.begin(), graph.vertices.end(), id) -
                                graph.vertices.begin());
    };
    QuboModel out = qubo;
    for (const auto& [edge, w] : weights) {
        auto [i, j] = edge;
        auto lin = qubo.linear.find(var(i));
        const double c = lin == qubo.linear.end() ? 0.0 : lin->second;
        if (c != 0.0) out.add_quadratic(var(i), var(j), -w * c);
    }
    return out;
}

// Variable change x = (s + 1) / 2.
inline IsingModel qubo_to_ising(const QuboModel& q) {
    IsingModel m;
    m.num_spins = q.num_vars;
    m.offset = q.offset;
    for (const auto& [i, c] : q.linear) {
        m.offset += c / 2.0;
        m.add_field(i, c / 2.0);
    }
    for (const auto& [ij, c] : q.quadratic) {
        m.offset += c / 4.0;
        m.add_field(ij.first, c / 4.0);
        m.add_field(ij.second, c / 4.0);
        m.add_coupling(ij.first, ij.second, c / 4.0);
    }
    return m;
}

// Replaces every field h_i by a coupling to one extra spin X appended at the
// end. States (s, X=+1) keep their original energy and (s, X=-1) mirrors
// (-s, X=+1), so the spectrum doubles exactly and the X=+1 sector projects
// back onto the original model.
inline IsingModel eliminate_linear_terms(const IsingModel& in) {
    IsingModel out;
    out.num_spins = in.num_spins + 1;
    out.offset = in.offset;
    out.J = in.J;
    out.aux_spin = in.num_spins;
    for (const auto& [i, c] : in.h) out.add_coupling(i, out.aux_spin, c);
    return out;
}

// Splits the designated auxiliary spin into m ferromagnetically locked
// copies. Couplings to the auxiliary are divided evenly over the copies, and
// every copy pair is tied with -1/(m-1) so that breaking the lock costs a
// fixed energy 2 regardless of m. In the aligned sector the energy equals the
// unsplit model up to the constant -m/2 from the lock itself.
inline IsingModel split_aux_spin(const IsingModel& in, int m) {
    if (m < 1) throw std::invalid_argument("split count must be >= 1");
    if (in.aux_spin < 0) throw std::invalid_argument("model has no designated auxiliary spin");
    if (in.aux_spin != in.num_spins - 1)
        throw std::invalid_argument("auxiliary spin must be the last index");
    if (m == 1) return in;
    IsingModel out;
    const int aux = in.aux_spin;
    out.num_spins = in.num_spins - 1 + m;
    out.offset = in.offset;
    out.aux_group_start = aux;
    out.aux_group_size = m;
    for (const auto& [i, c] : in.h) {
        if (i == aux) {
            for (int k = 0; k < m; ++k) out.add_field(aux + k, c / m);
        } else {
            out.add_field(i, c);
        }
    }
    for (const auto& [ij, c] : in.J) {
        if (ij.second == aux) {
            for (int k = 0; k < m; ++k) out.add_coupling(ij.first, aux + k, c / m);
        } else {
            out.add_coupling(ij.first, ij.second, c);
        }
    }
    const double lock = -1.0 / (m - 1);
    for (int k = 0; k < m; ++k)
        for (int l = k + 1; l < m; ++l) out.add_coupling(aux + k, aux + l, lock);
    return out;
}

// Per-bond ferromagnetic strength needed to hold a chain of physical spins
// together: the summed magnitude of everything pulling on the chain from
// outside, spread over its internal bonds.
inline double chain_strength(const IsingModel& model, const std::vector<int>& chain) {
    if (chain.empty()) throw std::invalid_argument("chain must be nonempty");
    if (chain.size() == 1) return 0.0;
    std::vector<bool> in_chain(model.num_spins, false);
    for (int i : chain) {
        if (i < 0 || i >= model.num_spins) throw std::invalid_argument("chain index out of range");
        in_chain[i] = true;
    }
    double pull = 0.0;
    for (int i : chain) {
        auto it = model.h.find(i);
        if (it != model.h.end()) pull += std::abs(it->second);
    }
    for (const auto& [ij, c] : model.J) {
        const bool a = in_chain[ij.first], b = in_chain[ij.second];
        if (a != b) pull += std::abs(c);
    }
    return pull / (static_cast<double>(chain.size()) - 1.0);
}

// Physical qubits needed to embed a K-spin clique on a chimera-like lattice.
inline int clique_embedding_estimate(int k) {
    if (k < 1) throw std::invalid_argument("clique size must be >= 1");
    return static_cast<int>(std::ceil(k * k / 8.0 + k));
}

// --- full assignment problem ------------------------------------------------

// One binary variable per (request, room) pair plus per-request slack bits
// encoding the allowed over-capacity H in [0, S_max - 1]. The quadratic
// penalty enforces sum(cap_i x_ri) = beds_r + H_r, a conflict penalty keeps
// date-sharing requests out of the same room, and a small linear reward pulls
// assignments on. lambda must dominate the reward for the penalty to bind.
struct FullProblem {
    QuboModel qubo;
    int num_requests = 0;
    int num_rooms = 0;
    int slack_bits = 0;
    std::vector<int> slack_weights;

    int assign_index(int request, int room) const { return request * num_rooms + room; }
    int slack_index(int request, int bit) const {
        return num_requests * num_rooms + request * slack_bits + bit;
    }
};

inline std::vector<int> slack_bit_weights(int s_max) {
    if (s_max < 1) throw std::invalid_argument("largest room size must be >= 1");
    if (s_max == 1) return {};
    const int bits = static_cast<int>(std::ceil(std::log2(static_cast<double>(s_max))));
    std::vector<int> weights;
    for (int b = 0; b + 1 < bits; ++b) weights.push_back(1 << b);
    weights.push_back((s_max - 1) - ((1 << (bits - 1)) - 1));
    return weights;
}

inline FullProblem full_problem_qubo(const std::vector<BookingRequest>& requests,
                                     const std::vector<RoomSpec>& rooms, double lambda = 10.0,
                                     double mu = 1.0) {
    if (lambda <= 0.0) throw std::invalid_argument("lambda must be positive");
    if (requests.empty()) return {};
    if (rooms.empty()) throw std::invalid_argument("need at least one room");
    int s_max = 0;
    for (const auto& r : rooms) {
        if (r.capacity < 1) throw std::invalid_argument("room capacity must be >= 1");
        s_max = std::max(s_max, r.capacity);
    }
    for (const auto& r : requests)
        if (r.beds < 1 || r.duration < 1)
            throw std::invalid_argument("request needs positive beds and duration");

    FullProblem fp;
    fp.num_requests = static_cast<int>(requests.size());
    fp.num_rooms = static_cast<int>(rooms.size());
    fp.slack_weights = slack_bit_weights(s_max);
    fp.slack_bits = static_cast<int>(fp.slack_weights.size());
    fp.qubo.num_vars = fp.num_requests * fp.num_rooms + fp.num_requests * fp.slack_bits;

    for (int r = 0; r < fp.num_requests; ++r) {
        const double need = requests[r].beds;
        fp.qubo.offset += lambda * need * need;
        for (int i = 0; i < fp.num_rooms; ++i) {
            const double cap = rooms[i].capacity;
            fp.qubo.add_linear(fp.assign_index(r, i),
                               lambda * (cap * cap - 2.0 * need * cap) - mu * cap / need);
            for (int j = i + 1; j < fp.num_rooms; ++j)
                fp.qubo.add_quadratic(fp.assign_index(r, i), fp.assign_index(r, j),
                                      lambda * 2.0 * cap * rooms[j].capacity);
        }
        for (int b = 0; b < fp.slack_bits; ++b) {
            const double w = fp.slack_weights[b];
            fp.qubo.add_linear(fp.slack_index(r, b), lambda * (w * w + 2.0 * need * w));
            for (int c = b + 1; c < fp.slack_bits; ++c)
                fp.qubo.add_quadratic(fp.slack_index(r, b), fp.slack_index(r, c),
                                      lambda * 2.0 * w * fp.slack_weights[c]);
            for (int i = 0; i < fp.num_rooms; ++i)
                fp.qubo.add_quadratic(fp.assign_index(r, i), fp.slack_index(r, b),
                                      -lambda * 2.0 * rooms[i].capacity * w);
        }
    }
    for (int a = 0; a < fp.num_requests; ++a) {
        for (int b = a + 1; b < fp.num_requests; ++b) {
            int shared = 0;
            for (int d = requests[a].start_day; d < requests[a].end_day(); ++d)
                if (d >= requests[b].start_day && d < requests[b].end_day()) ++shared;
            if (shared == 0) continue;
            for (int i = 0; i < fp.num_rooms; ++i)
                fp.qubo.add_quadratic(fp.assign_index(a, i), fp.assign_index(b, i),
                                      lambda * shared);
        }
    }
    return fp;
}

}  // namespace qsched
