// Test-only oracles and instance generators. Everything here is independent
// of the solver paths it is used to check: widths by raw permutation search,
// words and graphs by direct random construction.
#ifndef LOCW_TESTS_ORACLES_HPP
#define LOCW_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "locw/arrangement.hpp"
#include "locw/graph.hpp"
#include "locw/marking.hpp"
#include "locw/word.hpp"

namespace locw::testing {

// Minimum peak over all sigma! marking sequences, by direct enumeration.
inline int loc_by_permutations(const Word& w) {
    if (w.empty()) return 0;
    std::vector<Symbol> perm(static_cast<std::size_t>(w.alphabet_size()));
    std::iota(perm.begin(), perm.end(), 0);
    int best = static_cast<int>(w.size());
    do {
        best = std::min(best, marking_peak(w, MarkingSequence{perm}));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Minimum cutwidth over all n! arrangements.
inline int cutwidth_by_permutations(const MultiGraph& g) {
    const int n = g.num_vertices();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    int best = g.num_edges();
    do {
        best = std::min(best, cutwidth_of_arrangement(g, LinearArrangement{perm}));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Minimum vertex separation over all n! orders; equals the pathwidth.
inline int pathwidth_by_permutations(const MultiGraph& g_in) {
    const MultiGraph g = g_in.collapsed_simple();
    const int n = g.num_vertices();
    if (n == 0) return 0;
    auto adj = g.adjacency_masks();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    int best = n;
    do {
        std::uint64_t placed = 0;
        int peak = 0;
        for (int v : perm) {
            placed |= std::uint64_t{1} << v;
            int b = 0;
            for (int u = 0; u < n; ++u)
                if ((placed >> u & 1u) && (adj[static_cast<std::size_t>(u)] & ~placed)) ++b;
            peak = std::max(peak, b);
        }
        best = std::min(best, peak);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Random condensed word with dense first-occurrence symbol ids.
inline Word random_condensed_word(std::mt19937& rng, int max_sigma, int max_len, int min_len = 1) {
    std::uniform_int_distribution<int> len_dist(min_len, max_len);
    int m = len_dist(rng);
    int pool = std::uniform_int_distribution<int>(m >= 2 ? 2 : 1, std::max(max_sigma, m >= 2 ? 2 : 1))(rng);
    std::vector<std::string> tokens;
    int prev = -1;
    for (int i = 0; i < m; ++i) {
        int s;
        do {
            s = std::uniform_int_distribution<int>(0, pool - 1)(rng);
        } while (s == prev);
        tokens.push_back("t" + std::to_string(s));
        prev = s;
    }
    return Word::from_tokens(tokens);
}

// Random multigraph; optionally forced connected via a random spanning tree.
inline MultiGraph random_multigraph(std::mt19937& rng, int n, int extra_edges, bool connected) {
    MultiGraph g(n);
    std::vector<int> verts(static_cast<std::size_t>(n));
    std::iota(verts.begin(), verts.end(), 0);
    if (connected && n >= 2) {
        std::shuffle(verts.begin(), verts.end(), rng);
        for (int i = 1; i < n; ++i) {
            int j = std::uniform_int_distribution<int>(0, i - 1)(rng);
            g.add_edge(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)]);
        }
    }
    for (int e = 0; e < extra_edges; ++e) {
        int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
        int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
        if (u == v) continue;
        g.add_edge(u, v);
    }
    return g;
}

// Random simple graph with edge probability p.
inline MultiGraph random_simple_graph(std::mt19937& rng, int n, double p) {
    MultiGraph g(n, true);
    std::bernoulli_distribution flip(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) g.add_edge(u, v);
    return g;
}

// All non-isomorphic simple graphs on exactly n labelled-canonical vertices.
// Canonical form: minimum edge bitmask over all vertex permutations.
inline std::vector<MultiGraph> nonisomorphic_graphs(int n, bool connected_only) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const int np = static_cast<int>(pairs.size());
    std::vector<int> pair_index(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    for (int i = 0; i < np; ++i) {
        auto [u, v] = pairs[static_cast<std::size_t>(i)];
        pair_index[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] = i;
        pair_index[static_cast<std::size_t>(v) * static_cast<std::size_t>(n) + static_cast<std::size_t>(u)] = i;
    }

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> pair_maps;  // per permutation: image of each pair index
    do {
        std::vector<int> map(static_cast<std::size_t>(np));
        for (int i = 0; i < np; ++i) {
            auto [u, v] = pairs[static_cast<std::size_t>(i)];
            int pu = perm[static_cast<std::size_t>(u)], pv = perm[static_cast<std::size_t>(v)];
            map[static_cast<std::size_t>(i)] =
                pair_index[static_cast<std::size_t>(pu) * static_cast<std::size_t>(n) + static_cast<std::size_t>(pv)];
        }
        pair_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::uint32_t> canon;
    std::vector<MultiGraph> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << np); ++mask) {
        std::uint32_t best = mask;
        for (const auto& map : pair_maps) {
            std::uint32_t img = 0;
            for (int i = 0; i < np; ++i)
                if (mask >> i & 1u) img |= std::uint32_t{1} << map[static_cast<std::size_t>(i)];
            best = std::min(best, img);
        }
        if (best != mask || canon.count(mask)) continue;
        MultiGraph g(n, true);
        for (int i = 0; i < np; ++i)
            if (mask >> i & 1u) g.add_edge(pairs[static_cast<std::size_t>(i)].first, pairs[static_cast<std::size_t>(i)].second);
        if (connected_only && !g.is_connected()) continue;
        canon.insert(mask);
        out.push_back(std::move(g));
    }
    return out;
}

// All condensed words with alphabet <= max_sigma and length <= max_len, in
// canonical first-occurrence naming. Enumerated recursively.
inline std::vector<Word> all_condensed_words(int max_sigma, int max_len, int min_len = 1) {
    std::vector<Word> out;
    std::vector<Symbol> cur;
    auto emit = [&](int used) {
        std::vector<std::string> names;
        for (int i = 0; i < used; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
        out.emplace_back(std::vector<Symbol>(cur), std::move(names));
    };
    std::function<void(int)> rec = [&](int used) {
        if (static_cast<int>(cur.size()) >= min_len && used > 0) emit(used);
        if (static_cast<int>(cur.size()) == max_len) return;
        int prev = cur.empty() ? -1 : cur.back();
        for (int s = 0; s < used; ++s) {
            if (s == prev) continue;
            cur.push_back(s);
            rec(used);
            cur.pop_back();
        }
        if (used < max_sigma) {
            cur.push_back(used);
            rec(used + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace locw::testing

#endif  // LOCW_TESTS_ORACLES_HPP
