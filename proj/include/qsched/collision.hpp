#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qsched/demand.hpp"

namespace qsched {

// Undirected conflict graph over booking requests: an edge joins two requests
// whose date ranges intersect, so no room can host both. Vertices are request
// ids; adjacency is kept sorted for deterministic iteration.
struct CollisionGraph {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;  // canonical (a < b)
    std::map<int, std::vector<int>> adjacency;

    int degree(int v) const {
        auto it = adjacency.find(v);
        return it == adjacency.end() ? 0 : static_cast<int>(it->second.size());
    }

    bool has_edge(int a, int b) const {
        auto it = adjacency.find(a);
        if (it == adjacency.end()) return false;
        return std::binary_search(it->second.begin(), it->second.end(), b);
    }
};

inline CollisionGraph make_collision_graph(const std::vector<int>& vertices,
                                           const std::vector<std::pair<int, int>>& edges) {
    CollisionGraph g;
    std::set<int> seen;
    for (int v : vertices) {
        if (!seen.insert(v).second) throw std::invalid_argument("duplicate vertex id");
        g.vertices.push_back(v);
        g.adjacency[v];
    }
    std::set<std::pair<int, int>> dedup;
    for (auto [a, b] : edges) {
        if (a == b) throw std::invalid_argument("self loop");
        if (!seen.count(a) || !seen.count(b)) throw std::invalid_argument("edge off the vertex set");
        const auto key = std::minmax(a, b);
        if (!dedup.insert({key.first, key.second}).second) continue;
        g.edges.emplace_back(key.first, key.second);
        g.adjacency[key.first].push_back(key.second);
        g.adjacency[key.second].push_back(key.first);
    }
    std::sort(g.vertices.begin(), g.vertices.end());
    std::sort(g.edges.begin(), g.edges.end());
    for (auto& [_, nbrs] : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

inline CollisionGraph build_collision_graph(const std::vector<BookingRequest>& requests) {
    CollisionGraph g;
    std::set<int> seen;
    for (const auto& r : requests) {
        if (!seen.insert(r.id).second)
            throw std::invalid_argument("duplicate request id in collision graph input");
        g.vertices.push_back(r.id);
        g.adjacency[r.id];
    }
    for (std::size_t a = 0; a < requests.size(); ++a) {
        for (std::size_t b = a + 1; b < requests.size(); ++b) {
            if (!requests[a].overlaps(requests[b])) continue;
            const int u = std::min(requests[a].id, requests[b].id);
            const int v = std::max(requests[a].id, requests[b].id);
            g.edges.emplace_back(u, v);
            g.adjacency[u].push_back(v);
            g.adjacency[v].push_back(u);
        }
    }
    std::sort(g.vertices.begin(), g.vertices.end());
    std::sort(g.edges.begin(), g.edges.end());
    for (auto& [_, nbrs] : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

}  // namespace qsched
