#ifndef LOCW_WORD_HPP
#define LOCW_WORD_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "locw/errors.hpp"

namespace locw {

// Symbols are dense integer ids: a word over s distinct symbols uses exactly
// {0, ..., s-1}. External tokens map to ids in first-occurrence order; the
// inverse map is kept in Word::names for output.
using Symbol = int;

class Word {
public:
    Word() = default;

    // Takes symbol ids plus a name per id. Ids must be dense.
    Word(std::vector<Symbol> symbols, std::vector<std::string> names)
        : syms_(std::move(symbols)), names_(std::move(names)) {
        check_dense();
    }

    static Word from_chars(const std::string& text) {
        std::vector<std::string> tokens;
        tokens.reserve(text.size());
        for (char c : text) tokens.emplace_back(1, c);
        return from_tokens(tokens);
    }

    static Word from_tokens(const std::vector<std::string>& tokens) {
        std::vector<Symbol> syms;
        std::vector<std::string> names;
        std::unordered_map<std::string, Symbol> intern;
        syms.reserve(tokens.size());
        for (const auto& t : tokens) {
            auto [it, inserted] = intern.emplace(t, static_cast<Symbol>(names.size()));
            if (inserted) names.push_back(t);
            syms.push_back(it->second);
        }
        return Word(std::move(syms), std::move(names));
    }

    std::size_t size() const { return syms_.size(); }
    bool empty() const { return syms_.empty(); }
    int alphabet_size() const { return static_cast<int>(names_.size()); }
    Symbol operator[](std::size_t i) const { return syms_[i]; }

    const std::vector<Symbol>& symbols() const { return syms_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(Symbol x) const { return names_.at(static_cast<std::size_t>(x)); }

    // Position set of x (0-based storage positions, ascending).
    std::vector<int> positions(Symbol x) const {
        std::vector<int> p;
        for (int i = 0; i < static_cast<int>(syms_.size()); ++i)
            if (syms_[static_cast<std::size_t>(i)] == x) p.push_back(i);
        return p;
    }

    int occurrences(Symbol x) const {
        return static_cast<int>(std::count(syms_.begin(), syms_.end(), x));
    }

    bool is_condensed() const {
        for (std::size_t i = 1; i < syms_.size(); ++i)
            if (syms_[i] == syms_[i - 1]) return false;
        return true;
    }

    bool operator==(const Word& other) const {
        return syms_ == other.syms_ && names_ == other.names_;
    }

private:
    void check_dense() {
        std::vector<char> seen(names_.size(), 0);
        for (Symbol s : syms_) {
            if (s < 0 || s >= static_cast<Symbol>(names_.size()))
                throw precondition_error("word: symbol id out of range");
            seen[static_cast<std::size_t>(s)] = 1;
        }
        for (char c : seen)
            if (!c) throw precondition_error("word: alphabet not dense (unused symbol id)");
    }

    std::vector<Symbol> syms_;
    std::vector<std::string> names_;
};

// Collapses every maximal run x^k to a single x. Locality-preserving.
inline Word condense(const Word& w) {
    std::vector<Symbol> out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        if (i == 0 || w[i] != w[i - 1]) out.push_back(w[i]);
    return Word(std::move(out), w.names());
}

// Concatenation of i copies of u (shared alphabet).
inline Word repeat(const Word& u, int times) {
    std::vector<Symbol> out;
    out.reserve(u.size() * static_cast<std::size_t>(times));
    for (int r = 0; r < times; ++r)
        out.insert(out.end(), u.symbols().begin(), u.symbols().end());
    return Word(std::move(out), u.names());
}

inline Word reverse(const Word& u) {
    std::vector<Symbol> out(u.symbols().rbegin(), u.symbols().rend());
    return Word(std::move(out), u.names());
}

}  // namespace locw

#endif  // LOCW_WORD_HPP
