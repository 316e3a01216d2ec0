#ifndef LOCW_MARKING_HPP
#define LOCW_MARKING_HPP

#include <algorithm>
#include <vector>

#include "locw/errors.hpp"
#include "locw/word.hpp"

namespace locw {

// An enumeration of the word's alphabet; marking a symbol marks every one of
// its occurrences at once.
struct MarkingSequence {
    std::vector<Symbol> order;

    std::size_t size() const { return order.size(); }
    bool operator==(const MarkingSequence& other) const { return order == other.order; }
    bool operator<(const MarkingSequence& other) const { return order < other.order; }
};

// Block counts after each stage; the peak is the marking number.
struct MarkingTrace {
    std::vector<int> block_counts;

    int peak() const {
        int p = 0;
        for (int b : block_counts) p = std::max(p, b);
        return p;
    }
};

inline bool is_permutation_of_alphabet(const Word& w, const MarkingSequence& s) {
    if (static_cast<int>(s.order.size()) != w.alphabet_size()) return false;
    std::vector<char> seen(s.order.size(), 0);
    for (Symbol x : s.order) {
        if (x < 0 || x >= w.alphabet_size() || seen[static_cast<std::size_t>(x)]) return false;
        seen[static_cast<std::size_t>(x)] = 1;
    }
    return true;
}

// Number of maximal runs of positions whose symbol lies in `marked`.
inline int blocks_after_marking(const Word& w, const std::vector<bool>& marked) {
    int blocks = 0;
    bool in_block = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        bool m = marked[static_cast<std::size_t>(w[i])];
        if (m && !in_block) ++blocks;
        in_block = m;
    }
    return blocks;
}

inline int blocks_after_marking(const Word& w, const std::vector<Symbol>& marked_symbols) {
    std::vector<bool> marked(static_cast<std::size_t>(w.alphabet_size()), false);
    for (Symbol x : marked_symbols) marked.at(static_cast<std::size_t>(x)) = true;
    return blocks_after_marking(w, marked);
}

// Marking number pi_s(w) with per-stage block counts. The word need not be
// condensed; block counts are taken after each stage completes.
inline std::pair<int, MarkingTrace> marking_number(const Word& w, const MarkingSequence& s) {
    if (w.empty()) {
        if (!s.order.empty()) throw invalid_certificate_error("marking sequence for empty word must be empty");
        return {0, MarkingTrace{}};
    }
    if (!is_permutation_of_alphabet(w, s))
        throw invalid_certificate_error("marking sequence is not a permutation of the word's alphabet");

    const int m = static_cast<int>(w.size());
    std::vector<std::vector<int>> pos(static_cast<std::size_t>(w.alphabet_size()));
    for (int i = 0; i < m; ++i) pos[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])].push_back(i);

    std::vector<char> marked(static_cast<std::size_t>(m), 0);
    MarkingTrace trace;
    trace.block_counts.reserve(s.order.size());
    int blocks = 0;
    for (Symbol x : s.order) {
        for (int p : pos[static_cast<std::size_t>(x)]) {
            bool left = p > 0 && marked[static_cast<std::size_t>(p - 1)];
            bool right = p + 1 < m && marked[static_cast<std::size_t>(p + 1)];
            blocks += 1 - static_cast<int>(left) - static_cast<int>(right);
            marked[static_cast<std::size_t>(p)] = 1;
        }
        trace.block_counts.push_back(blocks);
    }
    return {trace.peak(), std::move(trace)};
}

inline int marking_peak(const Word& w, const MarkingSequence& s) {
    return marking_number(w, s).first;
}

// sigma^R(i) = sigma(|X|-i+1); an involution.
inline MarkingSequence reverse_sequence(const MarkingSequence& s) {
    MarkingSequence r = s;
    std::reverse(r.order.begin(), r.order.end());
    return r;
}

}  // namespace locw

#endif  // LOCW_MARKING_HPP
