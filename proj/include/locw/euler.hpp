#ifndef LOCW_EULER_HPP
#define LOCW_EULER_HPP

#include <algorithm>
#include <vector>

#include "locw/errors.hpp"
#include "locw/graph.hpp"

namespace locw {

struct EdgeTraversal {
    int from = 0;
    int to = 0;
    int edge = 0;  // index into the graph's edge list
};

// Hierholzer's algorithm. Requires every degree even and all edges in one
// connected component (isolated vertices are ignored). Deterministic: the
// walk starts at the smallest incident vertex and always leaves over the
// unused edge towards the smallest neighbour (smallest edge index on ties);
// the circuit is the reversal of the stack pop order.
inline std::vector<EdgeTraversal> eulerian_cycle(const MultiGraph& g) {
    const int n = g.num_vertices();
    const int m = g.num_edges();
    if (m == 0) return {};

    for (int v = 0; v < n; ++v)
        if (g.degree(v) % 2 != 0)
            throw precondition_error("eulerian_cycle: vertex " + std::to_string(v) + " has odd degree");

    // incidence lists sorted by (neighbour, edge index)
    std::vector<std::vector<std::pair<int, int>>> inc(static_cast<std::size_t>(n));
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edge(e);
        inc[static_cast<std::size_t>(u)].emplace_back(v, e);
        inc[static_cast<std::size_t>(v)].emplace_back(u, e);
    }
    for (auto& lst : inc) std::sort(lst.begin(), lst.end());

    int start = 0;
    while (g.degree(start) == 0) ++start;

    std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    std::vector<int> stack{start};
    std::vector<int> tour;  // vertices, reversed
    while (!stack.empty()) {
        int v = stack.back();
        auto& lst = inc[static_cast<std::size_t>(v)];
        std::size_t& i = next[static_cast<std::size_t>(v)];
        while (i < lst.size() && used[static_cast<std::size_t>(lst[i].second)]) ++i;
        if (i == lst.size()) {
            tour.push_back(v);
            stack.pop_back();
        } else {
            used[static_cast<std::size_t>(lst[i].second)] = 1;
            stack.push_back(lst[i].first);
        }
    }
    std::reverse(tour.begin(), tour.end());

    if (static_cast<int>(tour.size()) != m + 1)
        throw precondition_error("eulerian_cycle: edge set is not connected");

    // recover edge indices along the tour
    std::vector<char> taken(static_cast<std::size_t>(m), 0);
    std::vector<EdgeTraversal> cycle;
    cycle.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i + 1 < tour.size(); ++i) {
        int a = tour[i], b = tour[i + 1];
        int found = -1;
        for (const auto& [nb, e] : inc[static_cast<std::size_t>(a)]) {
            if (nb == b && !taken[static_cast<std::size_t>(e)]) {
                found = e;
                break;
            }
        }
        if (found < 0) throw contract_violation_error("eulerian_cycle: tour reconstruction failed");
        taken[static_cast<std::size_t>(found)] = 1;
        cycle.push_back({a, b, found});
    }
    return cycle;
}

// Every edge traversed exactly once, consecutive traversals chained, closed.
inline bool is_eulerian_cycle_of(const MultiGraph& g, const std::vector<EdgeTraversal>& cycle) {
    if (g.num_edges() == 0) return cycle.empty();
    if (static_cast<int>(cycle.size()) != g.num_edges()) return false;
    std::vector<char> seen(static_cast<std::size_t>(g.num_edges()), 0);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const auto& t = cycle[i];
        if (t.edge < 0 || t.edge >= g.num_edges() || seen[static_cast<std::size_t>(t.edge)]) return false;
        seen[static_cast<std::size_t>(t.edge)] = 1;
        auto [u, v] = g.edge(t.edge);
        if (!((t.from == u && t.to == v) || (t.from == v && t.to == u))) return false;
        if (cycle[(i + 1) % cycle.size()].from != t.to) return false;
    }
    return true;
}

}  // namespace locw

#endif  // LOCW_EULER_HPP
