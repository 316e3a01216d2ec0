#ifndef LOCW_LOCALITY_HPP
#define LOCW_LOCALITY_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "locw/errors.hpp"
#include "locw/marking.hpp"
#include "locw/word.hpp"

namespace locw {

struct LocalityResult {
    int value = 0;
    MarkingSequence witness;
};

inline constexpr int kDefaultBruteforceAlphabetCap = 9;
inline constexpr int kDefaultSubsetDpAlphabetCap = 24;

namespace detail {

// Per-symbol occurrence list of a condensed word, with the (distinct) neighbour
// symbols of each occurrence. Drives the incremental block-count updates: in a
// condensed word occurrences of one symbol are pairwise non-adjacent, so the
// block delta of marking x depends only on which neighbour symbols are marked.
struct CondensedIndex {
    // occ_left[x][j] / occ_right[x][j]: neighbour symbol of the j-th occurrence
    // of x, or -1 at the word border.
    std::vector<std::vector<int>> occ_left, occ_right;

    explicit CondensedIndex(const Word& w) {
        const int sigma = w.alphabet_size();
        occ_left.resize(static_cast<std::size_t>(sigma));
        occ_right.resize(static_cast<std::size_t>(sigma));
        const int m = static_cast<int>(w.size());
        for (int i = 0; i < m; ++i) {
            Symbol x = w[static_cast<std::size_t>(i)];
            occ_left[static_cast<std::size_t>(x)].push_back(i > 0 ? w[static_cast<std::size_t>(i - 1)] : -1);
            occ_right[static_cast<std::size_t>(x)].push_back(i + 1 < m ? w[static_cast<std::size_t>(i + 1)] : -1);
        }
    }

    // Change of the block count when x is marked on top of marked-set `mask`
    // (x itself not in mask).
    int delta(Symbol x, std::uint32_t mask) const {
        int d = 0;
        const auto& ls = occ_left[static_cast<std::size_t>(x)];
        const auto& rs = occ_right[static_cast<std::size_t>(x)];
        for (std::size_t j = 0; j < ls.size(); ++j) {
            bool l = ls[j] >= 0 && (mask >> ls[j] & 1u);
            bool r = rs[j] >= 0 && (mask >> rs[j] & 1u);
            d += 1 - static_cast<int>(l) - static_cast<int>(r);
        }
        return d;
    }
};

// Block count for every subset of the alphabet, built incrementally from the
// lowest set bit. Values fit uint16 (block count <= |w|/2 + 1).
inline std::vector<std::uint16_t> subset_block_table(const CondensedIndex& idx, int sigma) {
    std::vector<std::uint16_t> blocks(std::size_t{1} << sigma, 0);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << sigma); ++mask) {
        int x = std::countr_zero(mask);
        std::uint32_t rest = mask & (mask - 1);
        blocks[mask] = static_cast<std::uint16_t>(blocks[rest] + idx.delta(x, rest));
    }
    return blocks;
}

}  // namespace detail

// Exact locality by the subset recurrence
//   loc_S = max(k_S, min_{x in S} loc_{S \ {x}}),  loc_{} = 0,
// where k_S is the block count with exactly S marked. The word is condensed
// internally first. O*(2^sigma) time and space; the practical cap pair is
// (sigma <= 24, |condensed(w)| <= 65000).
//
// Witness ties: at each backtracking step (which picks the *last* symbol of
// the remaining prefix) the smallest symbol id among minimisers is taken.
inline LocalityResult locality_subset_dp(const Word& input, int alphabet_cap = kDefaultSubsetDpAlphabetCap) {
    const Word w = condense(input);
    const int sigma = w.alphabet_size();
    if (w.empty()) return {0, {}};
    if (sigma > alphabet_cap)
        throw resource_limit_error("locality_subset_dp: alphabet size " + std::to_string(sigma) +
                                   " exceeds cap " + std::to_string(alphabet_cap));
    if (w.size() > 65000)
        throw resource_limit_error("locality_subset_dp: condensed length exceeds 65000");

    detail::CondensedIndex idx(w);
    const std::uint32_t full = (sigma == 32) ? ~0u : ((std::uint32_t{1} << sigma) - 1);
    std::vector<std::uint16_t> blocks = detail::subset_block_table(idx, sigma);
    std::vector<std::uint16_t> loc(std::size_t{1} << sigma, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint16_t best = std::numeric_limits<std::uint16_t>::max();
        for (std::uint32_t rem = mask; rem; rem &= rem - 1) {
            int x = std::countr_zero(rem);
            best = std::min(best, loc[mask & ~(std::uint32_t{1} << x)]);
        }
        loc[mask] = std::max(blocks[mask], best);
    }

    MarkingSequence witness;
    witness.order.assign(static_cast<std::size_t>(sigma), 0);
    std::uint32_t mask = full;
    for (int step = sigma - 1; step >= 0; --step) {
        int pick = -1;
        std::uint16_t best = std::numeric_limits<std::uint16_t>::max();
        for (int x = 0; x < sigma; ++x) {
            if (!(mask >> x & 1u)) continue;
            std::uint16_t v = loc[mask & ~(std::uint32_t{1} << x)];
            if (v < best) {
                best = v;
                pick = x;
            }
        }
        witness.order[static_cast<std::size_t>(step)] = pick;
        mask &= ~(std::uint32_t{1} << pick);
    }
    return {loc[full], std::move(witness)};
}

// Independent oracle: enumerate all sigma! marking sequences in lexicographic
// order, return the minimum peak and the lexicographically smallest witness.
inline LocalityResult locality_bruteforce(const Word& input, int alphabet_cap = kDefaultBruteforceAlphabetCap) {
    const Word w = condense(input);
    const int sigma = w.alphabet_size();
    if (w.empty()) return {0, {}};
    if (sigma > alphabet_cap)
        throw resource_limit_error("locality_bruteforce: alphabet size " + std::to_string(sigma) +
                                   " exceeds cap " + std::to_string(alphabet_cap));

    MarkingSequence s;
    s.order.resize(static_cast<std::size_t>(sigma));
    std::iota(s.order.begin(), s.order.end(), 0);
    int best = std::numeric_limits<int>::max();
    MarkingSequence witness;
    do {
        int peak = marking_peak(w, s);
        if (peak < best) {
            best = peak;
            witness = s;
        }
    } while (std::next_permutation(s.order.begin(), s.order.end()));
    return {best, std::move(witness)};
}

// A word is strictly k-local if loc(w) = k and every optimal marking sequence
// reaches a stage with exactly k marked blocks. Since the marking number is
// the maximum over stages, every optimal sequence attains its peak, so the
// predicate amounts to loc(w) = k.
inline bool is_strictly_k_local(const Word& w, int k, int alphabet_cap = kDefaultBruteforceAlphabetCap) {
    if (w.empty()) return k == 0;
    return locality_bruteforce(w, alphabet_cap).value == k;
}

enum class BorderSide { Left, Right, Both };

// Border-priority-markable test by exhaustive enumeration of optimal marking
// sequences: true iff some optimal sequence keeps the requested border
// letter(s) marked at every stage whose block count equals loc(w).
inline bool border_priority(const Word& input, BorderSide side, int alphabet_cap = kDefaultBruteforceAlphabetCap) {
    const Word w = condense(input);
    if (w.empty()) throw precondition_error("border_priority: empty word");
    const int sigma = w.alphabet_size();
    if (sigma > alphabet_cap)
        throw resource_limit_error("border_priority: alphabet size exceeds cap");

    const int k = locality_bruteforce(w, alphabet_cap).value;
    if (!is_strictly_k_local(w, k, alphabet_cap))
        throw precondition_error("border_priority: word is not strictly k-local for k = loc(w)");
    const Symbol first = w[0];
    const Symbol last = w[w.size() - 1];

    MarkingSequence s;
    s.order.resize(static_cast<std::size_t>(sigma));
    std::iota(s.order.begin(), s.order.end(), 0);
    do {
        auto [peak, trace] = marking_number(w, s);
        if (peak != k) continue;
        std::vector<char> marked(static_cast<std::size_t>(sigma), 0);
        bool ok = true;
        for (std::size_t stage = 0; stage < s.order.size(); ++stage) {
            marked[static_cast<std::size_t>(s.order[stage])] = 1;
            if (trace.block_counts[stage] != k) continue;
            bool l = marked[static_cast<std::size_t>(first)];
            bool r = marked[static_cast<std::size_t>(last)];
            if (side == BorderSide::Left && !l) ok = false;
            if (side == BorderSide::Right && !r) ok = false;
            if (side == BorderSide::Both && !(l && r)) ok = false;
            if (!ok) break;
        }
        if (ok) return true;
    } while (std::next_permutation(s.order.begin(), s.order.end()));
    return false;
}

}  // namespace locw

#endif  // LOCW_LOCALITY_HPP
