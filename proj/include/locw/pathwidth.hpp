#ifndef LOCW_PATHWIDTH_HPP
#define LOCW_PATHWIDTH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "locw/errors.hpp"
#include "locw/graph.hpp"
#include "locw/path_decomposition.hpp"

namespace locw {

inline constexpr int kDefaultPathwidthVertexCap = 22;

struct PathwidthResult {
    int value = 0;
    PathDecomposition witness;
};

namespace detail {

// Pathwidth of one connected block as the vertex separation number:
//   r(S) = min_{v not in S} max(|boundary(S u {v})|, r(S u {v})),  r(V) = 0,
// where boundary(S) = vertices of S with a neighbour outside S. The vertex
// order is turned into a decomposition below and certified independently, so
// the pw = vs equivalence is only an internal device here.
struct VsBlock {
    int value = 0;
    std::vector<int> order;  // lexicographically smallest optimal order
};

inline VsBlock vertex_separation_block(const MultiGraph& g, const std::vector<int>& verts) {
    const int k = static_cast<int>(verts.size());
    if (k == 0) return {};
    if (k == 1) return {0, verts};

    std::vector<int> local(static_cast<std::size_t>(g.num_vertices()), -1);
    for (int i = 0; i < k; ++i) local[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] = i;
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(k), 0);
    for (const auto& [u, v] : g.edges()) {
        int a = local[static_cast<std::size_t>(u)], b = local[static_cast<std::size_t>(v)];
        if (a < 0 || b < 0) continue;
        adj[static_cast<std::size_t>(a)] |= std::uint32_t{1} << b;
        adj[static_cast<std::size_t>(b)] |= std::uint32_t{1} << a;
    }

    const std::uint32_t full = (std::uint32_t{1} << k) - 1;
    auto boundary = [&](std::uint32_t mask) {
        int b = 0;
        for (std::uint32_t rem = mask; rem; rem &= rem - 1)
            b += (adj[static_cast<std::size_t>(std::countr_zero(rem))] & ~mask) != 0;
        return static_cast<std::uint8_t>(b);
    };

    std::vector<std::uint8_t> bnd(std::size_t{1} << k, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) bnd[mask] = boundary(mask);

    std::vector<std::uint8_t> r(std::size_t{1} << k, 0);
    for (std::uint32_t mask = full - 1;; --mask) {
        std::uint8_t best = std::numeric_limits<std::uint8_t>::max();
        for (int v = 0; v < k; ++v) {
            if (mask >> v & 1u) continue;
            std::uint32_t next = mask | (std::uint32_t{1} << v);
            best = std::min(best, std::max(bnd[next], r[next]));
        }
        r[mask] = best;
        if (mask == 0) break;
    }

    const std::uint8_t opt = r[0];
    std::vector<int> order;
    std::uint32_t mask = 0;
    std::uint8_t seen_max = 0;
    for (int step = 0; step < k; ++step) {
        for (int v = 0; v < k; ++v) {
            if (mask >> v & 1u) continue;
            std::uint32_t next = mask | (std::uint32_t{1} << v);
            if (std::max({seen_max, bnd[next], r[next]}) <= opt) {
                order.push_back(verts[static_cast<std::size_t>(v)]);
                mask = next;
                seen_max = std::max(seen_max, bnd[next]);
                break;
            }
        }
    }
    return {opt, std::move(order)};
}

// Bags from a vertex order: B_i = boundary(first i-1 vertices) u {v_i}.
// Valid by construction, width = the order's vertex separation.
inline PathDecomposition order_to_decomposition(const MultiGraph& g, const std::vector<int>& order) {
    PathDecomposition q;
    const int n = g.num_vertices();
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<int> prefix;
    for (int v : order) {
        std::vector<int> bag;
        for (int u : prefix) {
            bool has_outside = false;
            for (int t : adj[static_cast<std::size_t>(u)])
                if (!placed[static_cast<std::size_t>(t)]) {
                    has_outside = true;
                    break;
                }
            if (has_outside) bag.push_back(u);
        }
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        q.bags.push_back(std::move(bag));
        placed[static_cast<std::size_t>(v)] = 1;
        prefix.push_back(v);
    }
    if (q.bags.empty()) q.bags.push_back({});
    return q;
}

}  // namespace detail

// Exact pathwidth with a witness decomposition. Parallel edges are collapsed
// first; disconnected graphs are solved per component (max of the values,
// decompositions concatenated).
inline PathwidthResult pathwidth_exact(const MultiGraph& g_in, int vertex_cap = kDefaultPathwidthVertexCap) {
    const MultiGraph g = g_in.collapsed_simple();
    if (g.num_vertices() == 0) return {0, PathDecomposition{{{}}}};
    PathwidthResult out;
    for (const auto& comp : g.components()) {
        if (static_cast<int>(comp.size()) > vertex_cap)
            throw resource_limit_error("pathwidth_exact: component size " + std::to_string(comp.size()) +
                                       " exceeds cap " + std::to_string(vertex_cap));
        auto block = detail::vertex_separation_block(g, comp);
        out.value = std::max(out.value, block.value);
        auto q = detail::order_to_decomposition(g, block.order);
        out.witness.bags.insert(out.witness.bags.end(), q.bags.begin(), q.bags.end());
    }
    return out;
}

}  // namespace locw

#endif  // LOCW_PATHWIDTH_HPP
