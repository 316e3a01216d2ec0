#ifndef LOCW_GRAPH_HPP
#define LOCW_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "locw/errors.hpp"

namespace locw {

// Undirected multigraph: vertex count plus an edge multiset. Loops are
// rejected at construction; none of the constructions here produce them.
// With `simple` set, parallel edges are rejected as well.
class MultiGraph {
public:
    MultiGraph() = default;
    explicit MultiGraph(int n, bool simple = false) : n_(n), simple_(simple) {
        if (n < 0) throw precondition_error("graph: negative vertex count");
    }

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    bool simple_flag() const { return simple_; }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }

    void add_edge(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw precondition_error("graph: edge endpoint out of range");
        if (u == v) throw precondition_error("graph: loops are not allowed");
        if (u > v) std::swap(u, v);
        if (simple_) {
            for (const auto& [a, b] : edges_)
                if (a == u && b == v) throw precondition_error("graph: parallel edge in simple graph");
        }
        edges_.emplace_back(u, v);
    }

    int degree(int v) const {
        int d = 0;
        for (const auto& [a, b] : edges_) d += (a == v) + (b == v);
        return d;
    }

    int multiplicity(int u, int v) const {
        if (u > v) std::swap(u, v);
        int c = 0;
        for (const auto& [a, b] : edges_) c += (a == u && b == v);
        return c;
    }

    bool has_labels() const { return !labels_.empty(); }
    void set_labels(std::vector<std::string> labels) {
        if (!labels.empty() && static_cast<int>(labels.size()) != n_)
            throw precondition_error("graph: label count does not match vertex count");
        labels_ = std::move(labels);
    }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int v) const {
        if (has_labels()) return labels_.at(static_cast<std::size_t>(v));
        return std::to_string(v);
    }

    // Same vertex set, multiplicities collapsed to one. Pathwidth ignores
    // multiplicity, cutwidth does not.
    MultiGraph collapsed_simple() const {
        MultiGraph g(n_, true);
        std::set<std::pair<int, int>> seen(edges_.begin(), edges_.end());
        for (const auto& [u, v] : seen) g.add_edge(u, v);
        g.set_labels(labels_);
        return g;
    }

    // Adjacency bitmask per vertex (requires n <= 64).
    std::vector<std::uint64_t> adjacency_masks() const {
        if (n_ > 64) throw resource_limit_error("graph: adjacency masks need n <= 64");
        std::vector<std::uint64_t> adj(static_cast<std::size_t>(n_), 0);
        for (const auto& [u, v] : edges_) {
            adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
            adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
        }
        return adj;
    }

    // Edge multiplicity matrix as flat n*n vector.
    std::vector<std::uint32_t> weight_matrix() const {
        std::vector<std::uint32_t> w(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
        for (const auto& [u, v] : edges_) {
            ++w[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
            ++w[static_cast<std::size_t>(v) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(u)];
        }
        return w;
    }

    // Connected components as sorted vertex lists, ordered by smallest member.
    std::vector<std::vector<int>> components() const {
        std::vector<int> comp(static_cast<std::size_t>(n_), -1);
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
        for (const auto& [u, v] : edges_) {
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
        }
        std::vector<std::vector<int>> out;
        for (int s = 0; s < n_; ++s) {
            if (comp[static_cast<std::size_t>(s)] != -1) continue;
            std::vector<int> stack{s}, members;
            comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                members.push_back(v);
                for (int u : adj[static_cast<std::size_t>(v)]) {
                    if (comp[static_cast<std::size_t>(u)] == -1) {
                        comp[static_cast<std::size_t>(u)] = comp[static_cast<std::size_t>(s)];
                        stack.push_back(u);
                    }
                }
            }
            std::sort(members.begin(), members.end());
            out.push_back(std::move(members));
        }
        return out;
    }

    bool is_connected() const { return n_ <= 1 || components().size() == 1; }

private:
    int n_ = 0;
    bool simple_ = false;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::string> labels_;
};

// Number of edges, with multiplicity, having exactly one endpoint in `left`.
inline int cut_size(const MultiGraph& g, const std::vector<bool>& left) {
    if (static_cast<int>(left.size()) != g.num_vertices())
        throw precondition_error("cut_size: side vector size mismatch");
    int c = 0;
    for (const auto& [u, v] : g.edges())
        c += left[static_cast<std::size_t>(u)] != left[static_cast<std::size_t>(v)];
    return c;
}

inline int cut_size(const MultiGraph& g, const std::vector<int>& left_vertices) {
    std::vector<bool> left(static_cast<std::size_t>(g.num_vertices()), false);
    for (int v : left_vertices) left.at(static_cast<std::size_t>(v)) = true;
    return cut_size(g, left);
}

// Doubles every edge. All degrees become even and the cutwidth doubles.
inline MultiGraph duplicate_edges(const MultiGraph& g) {
    MultiGraph out(g.num_vertices(), false);
    for (const auto& [u, v] : g.edges()) {
        out.add_edge(u, v);
        out.add_edge(u, v);
    }
    out.set_labels(g.labels());
    return out;
}

}  // namespace locw

#endif  // LOCW_GRAPH_HPP
