#ifndef LOCW_PATH_DECOMPOSITION_HPP
#define LOCW_PATH_DECOMPOSITION_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "locw/errors.hpp"
#include "locw/graph.hpp"

namespace locw {

// Ordered bag sequence; the certificate format for pathwidth.
struct PathDecomposition {
    std::vector<std::vector<int>> bags;

    // max |B_i| - 1; -1 for an all-empty (or empty) bag list.
    int width() const {
        int w = -1;
        for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
        return w;
    }

    void normalize() {
        for (auto& b : bags) {
            std::sort(b.begin(), b.end());
            b.erase(std::unique(b.begin(), b.end()), b.end());
        }
    }
};

struct DecompositionCheck {
    bool valid = true;
    std::string violation;  // first violated edge or vertex, human readable
};

// Cover property: every edge inside some bag. Connectivity property: the bag
// indices of each vertex form a contiguous interval. Vertices that appear in
// no bag violate cover as soon as they have an edge, and violate nothing on
// their own only if the graph has no isolated coverage requirement; we require
// every vertex of g to occur in some bag.
inline DecompositionCheck check_path_decomposition(const MultiGraph& g, const PathDecomposition& q) {
    const int n = g.num_vertices();
    std::vector<int> first(static_cast<std::size_t>(n), -1), last(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < q.bags.size(); ++i) {
        for (int v : q.bags[i]) {
            if (v < 0 || v >= n) return {false, "bag " + std::to_string(i) + " contains unknown vertex " + std::to_string(v)};
            if (first[static_cast<std::size_t>(v)] < 0) first[static_cast<std::size_t>(v)] = static_cast<int>(i);
            last[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }
    for (int v = 0; v < n; ++v)
        if (first[static_cast<std::size_t>(v)] < 0)
            return {false, "vertex " + std::to_string(v) + " occurs in no bag"};
    // connectivity
    for (std::size_t i = 0; i < q.bags.size(); ++i) {
        std::set<int> in_bag(q.bags[i].begin(), q.bags[i].end());
        for (int v = 0; v < n; ++v) {
            bool should = first[static_cast<std::size_t>(v)] <= static_cast<int>(i) &&
                          static_cast<int>(i) <= last[static_cast<std::size_t>(v)];
            if (should && !in_bag.count(v))
                return {false, "vertex " + std::to_string(v) + " missing from bag " + std::to_string(i) +
                                   " inside its interval"};
        }
    }
    // cover
    for (const auto& [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& b : q.bags) {
            bool hu = std::find(b.begin(), b.end(), u) != b.end();
            bool hv = std::find(b.begin(), b.end(), v) != b.end();
            if (hu && hv) {
                covered = true;
                break;
            }
        }
        if (!covered)
            return {false, "edge {" + std::to_string(u) + "," + std::to_string(v) + "} not covered by any bag"};
    }
    return {};
}

inline bool is_valid_path_decomposition(const MultiGraph& g, const PathDecomposition& q) {
    return check_path_decomposition(g, q).valid;
}

inline bool is_nice(const PathDecomposition& q) {
    if (q.bags.empty()) return false;
    if (!q.bags.front().empty() || !q.bags.back().empty()) return false;
    for (std::size_t i = 1; i < q.bags.size(); ++i) {
        std::set<int> a(q.bags[i - 1].begin(), q.bags[i - 1].end());
        std::set<int> b(q.bags[i].begin(), q.bags[i].end());
        std::vector<int> diff;
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
        if (diff.size() != 1) return false;
    }
    return true;
}

// Rewrites a valid decomposition into nice form (empty end bags, one-vertex
// steps) of the same width. Between consecutive bags, removals are emitted
// before insertions so intermediate bags never exceed the larger neighbour.
inline PathDecomposition make_nice(const PathDecomposition& q_in) {
    PathDecomposition q = q_in;
    q.normalize();
    // drop consecutive duplicates and leading/trailing empties
    std::vector<std::vector<int>> bags;
    for (auto& b : q.bags)
        if (bags.empty() || bags.back() != b) bags.push_back(std::move(b));

    PathDecomposition out;
    std::vector<int> cur;  // sorted
    out.bags.push_back(cur);
    auto emit_to = [&](const std::vector<int>& target) {
        std::vector<int> to_remove, to_add;
        std::set_difference(cur.begin(), cur.end(), target.begin(), target.end(), std::back_inserter(to_remove));
        std::set_difference(target.begin(), target.end(), cur.begin(), cur.end(), std::back_inserter(to_add));
        for (int v : to_remove) {
            cur.erase(std::find(cur.begin(), cur.end(), v));
            out.bags.push_back(cur);
        }
        for (int v : to_add) {
            cur.insert(std::upper_bound(cur.begin(), cur.end(), v), v);
            out.bags.push_back(cur);
        }
    };
    for (const auto& b : bags) emit_to(b);
    emit_to({});
    // collapse duplicates produced by empty transitions
    std::vector<std::vector<int>> dedup;
    for (auto& b : out.bags)
        if (dedup.empty() || dedup.back() != b) dedup.push_back(std::move(b));
    out.bags = std::move(dedup);
    if (out.bags.empty()) out.bags.push_back({});
    return out;
}

}  // namespace locw

#endif  // LOCW_PATH_DECOMPOSITION_HPP
