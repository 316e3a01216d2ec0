#ifndef LOCW_FAMILIES_HPP
#define LOCW_FAMILIES_HPP

#include <string>
#include <vector>

#include "locw/errors.hpp"
#include "locw/word.hpp"

namespace locw {

namespace detail {
inline std::vector<std::string> x_names(int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}
}  // namespace detail

// Z_1 = x_1, Z_{i+1} = Z_i x_{i+1} Z_i. |Z_i| = 2^i - 1, loc(Z_i) = 2^{i-2}.
inline Word zimin(int i, std::size_t length_cap = 1u << 22) {
    if (i < 1) throw precondition_error("zimin: index must be >= 1");
    if (((std::size_t{1} << i) - 1) > length_cap)
        throw resource_limit_error("zimin: word longer than length cap");
    std::vector<Symbol> syms{0};
    for (int level = 2; level <= i; ++level) {
        std::vector<Symbol> next = syms;
        next.push_back(level - 1);
        next.insert(next.end(), syms.begin(), syms.end());
        syms = std::move(next);
    }
    return Word(std::move(syms), detail::x_names(i));
}

// alpha(n, k) = (x_1 x_2 ... x_n x_{n-1} ... x_2)^k x_1.
// loc = k and pw(G_alpha) = 2k: the pathwidth bound is tight from above.
inline Word tightness_alpha(int n, int k) {
    if (n < 3) throw precondition_error("tightness_alpha: requires n >= 3");
    if (k < 1) throw precondition_error("tightness_alpha: requires k >= 1");
    std::vector<Symbol> block;
    for (int i = 0; i < n; ++i) block.push_back(i);
    for (int i = n - 2; i >= 1; --i) block.push_back(i);
    std::vector<Symbol> syms;
    for (int r = 0; r < k; ++r) syms.insert(syms.end(), block.begin(), block.end());
    syms.push_back(0);
    return Word(std::move(syms), detail::x_names(n));
}

// beta(k) = (x_1 x_2)^k. loc = pw(G_beta) = k: tight from below.
inline Word tightness_beta(int k) {
    if (k < 1) throw precondition_error("tightness_beta: requires k >= 1");
    std::vector<Symbol> syms;
    for (int r = 0; r < k; ++r) {
        syms.push_back(0);
        syms.push_back(1);
    }
    return Word(std::move(syms), detail::x_names(2));
}

}  // namespace locw

#endif  // LOCW_FAMILIES_HPP
