#ifndef LOCW_ARRANGEMENT_HPP
#define LOCW_ARRANGEMENT_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "locw/errors.hpp"
#include "locw/graph.hpp"

namespace locw {

// A permutation of the vertices; the certificate format for cutwidth.
struct LinearArrangement {
    std::vector<int> order;

    std::size_t size() const { return order.size(); }
    bool operator==(const LinearArrangement& other) const { return order == other.order; }
};

inline constexpr int kDefaultCutwidthVertexCap = 24;

inline bool is_vertex_permutation(const MultiGraph& g, const LinearArrangement& l) {
    if (static_cast<int>(l.order.size()) != g.num_vertices()) return false;
    std::vector<char> seen(l.order.size(), 0);
    for (int v : l.order) {
        if (v < 0 || v >= g.num_vertices() || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

namespace detail {

// Cut sizes |E_L(i)| for i = 0..n, with E_L(0) = E_L(n) = empty.
inline std::vector<int> prefix_cut_sizes(const MultiGraph& g, const LinearArrangement& l) {
    if (!is_vertex_permutation(g, l))
        throw invalid_certificate_error("arrangement is not a permutation of the vertices");
    const int n = g.num_vertices();
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(l.order[static_cast<std::size_t>(i)])] = i;
    std::vector<int> cuts(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : g.edges()) {
        int a = pos[static_cast<std::size_t>(u)], b = pos[static_cast<std::size_t>(v)];
        if (a > b) std::swap(a, b);
        // edge crosses cuts a+1 .. b
        ++cuts[static_cast<std::size_t>(a) + 1];
        --cuts[static_cast<std::size_t>(b) + 1];
    }
    int run = 0;
    for (int i = 1; i <= n; ++i) {
        run += cuts[static_cast<std::size_t>(i)];
        cuts[static_cast<std::size_t>(i)] = run;
    }
    if (n > 0) cuts[static_cast<std::size_t>(n)] = 0;
    return cuts;
}

}  // namespace detail

inline int cutwidth_of_arrangement(const MultiGraph& g, const LinearArrangement& l) {
    auto cuts = detail::prefix_cut_sizes(g, l);
    return *std::max_element(cuts.begin(), cuts.end());
}

// max_i |E_L(i-1) u E_L(i)| with parallel edges as distinct elements. An edge
// {v_a, v_b} (a < b in L) lies in the union at i iff a <= i <= b, so the union
// size at i counts the edges whose position interval covers i.
inline int second_order_cutwidth_of_arrangement(const MultiGraph& g, const LinearArrangement& l) {
    if (!is_vertex_permutation(g, l))
        throw invalid_certificate_error("arrangement is not a permutation of the vertices");
    const int n = g.num_vertices();
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(l.order[static_cast<std::size_t>(i)])] = i;
    std::vector<int> cover(static_cast<std::size_t>(n) + 2, 0);
    for (const auto& [u, v] : g.edges()) {
        int a = pos[static_cast<std::size_t>(u)], b = pos[static_cast<std::size_t>(v)];
        if (a > b) std::swap(a, b);
        ++cover[static_cast<std::size_t>(a) + 1];
        --cover[static_cast<std::size_t>(b) + 2];
    }
    int run = 0, best = 0;
    for (int i = 1; i <= n; ++i) {
        run += cover[static_cast<std::size_t>(i)];
        best = std::max(best, run);
    }
    return best;
}

struct CutwidthResult {
    int value = 0;
    LinearArrangement witness;
};

namespace detail {

// Exact cutwidth of one connected block of vertices via the subset DP
//   r(S) = min_{v not in S} max(cut(S u {v}), r(S u {v})),  r(V) = 0,
// over subsets of `verts`. The witness is the lexicographically smallest
// optimal arrangement, recovered by a forward walk over the r-table.
inline CutwidthResult cutwidth_block(const MultiGraph& g, const std::vector<int>& verts) {
    const int k = static_cast<int>(verts.size());
    if (k == 0) return {0, {}};
    if (k == 1) return {0, {{verts}}};

    // local weighted adjacency
    std::vector<std::vector<std::uint32_t>> w(static_cast<std::size_t>(k),
                                              std::vector<std::uint32_t>(static_cast<std::size_t>(k), 0));
    std::vector<int> local(static_cast<std::size_t>(g.num_vertices()), -1);
    for (int i = 0; i < k; ++i) local[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] = i;
    std::vector<std::uint32_t> deg(static_cast<std::size_t>(k), 0);
    for (const auto& [u, v] : g.edges()) {
        int a = local[static_cast<std::size_t>(u)], b = local[static_cast<std::size_t>(v)];
        if (a < 0 || b < 0) continue;
        ++w[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        ++w[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
    }

    const std::uint32_t full = (std::uint32_t{1} << k) - 1;
    std::vector<std::uint32_t> cut(std::size_t{1} << k, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        int x = std::countr_zero(mask);
        std::uint32_t rest = mask & (mask - 1);
        std::uint32_t into = 0;
        for (std::uint32_t rem = rest; rem; rem &= rem - 1)
            into += w[static_cast<std::size_t>(x)][static_cast<std::size_t>(std::countr_zero(rem))];
        cut[mask] = cut[rest] + deg[static_cast<std::size_t>(x)] - 2 * into;
    }

    std::vector<std::uint32_t> r(std::size_t{1} << k, 0);
    for (std::uint32_t mask = full - 1;; --mask) {
        std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
        for (int v = 0; v < k; ++v) {
            if (mask >> v & 1u) continue;
            std::uint32_t next = mask | (std::uint32_t{1} << v);
            best = std::min(best, std::max(cut[next], r[next]));
        }
        r[mask] = best;
        if (mask == 0) break;
    }

    const std::uint32_t opt = r[0];
    LinearArrangement order;
    std::uint32_t mask = 0, seen_max = 0;
    for (int step = 0; step < k; ++step) {
        for (int v = 0; v < k; ++v) {
            if (mask >> v & 1u) continue;
            std::uint32_t next = mask | (std::uint32_t{1} << v);
            if (std::max({seen_max, cut[next], r[next]}) <= opt) {
                order.order.push_back(verts[static_cast<std::size_t>(v)]);
                mask = next;
                seen_max = std::max(seen_max, cut[next]);
                break;
            }
        }
    }
    return {static_cast<int>(opt), std::move(order)};
}

}  // namespace detail

// Exact cutwidth with an optimal witness arrangement. Disconnected graphs are
// solved per component (max of the values; arrangements concatenated in order
// of smallest component vertex).
inline CutwidthResult cutwidth_exact(const MultiGraph& g, int vertex_cap = kDefaultCutwidthVertexCap) {
    const int n = g.num_vertices();
    if (n == 0) return {0, {}};
    CutwidthResult out;
    for (const auto& comp : g.components()) {
        if (static_cast<int>(comp.size()) > vertex_cap)
            throw resource_limit_error("cutwidth_exact: component size " + std::to_string(comp.size()) +
                                       " exceeds cap " + std::to_string(vertex_cap));
        CutwidthResult part = detail::cutwidth_block(g, comp);
        out.value = std::max(out.value, part.value);
        out.witness.order.insert(out.witness.order.end(), part.witness.order.begin(), part.witness.order.end());
    }
    return out;
}

}  // namespace locw

#endif  // LOCW_ARRANGEMENT_HPP
