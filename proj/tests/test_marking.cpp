#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "locw/marking.hpp"
#include "oracles.hpp"

using namespace locw;

namespace {
MarkingSequence seq(std::initializer_list<Symbol> xs) { return MarkingSequence{std::vector<Symbol>(xs)}; }
}  // namespace

TEST_CASE("worked marking numbers") {
    Word w = Word::from_chars("xyxyzxz");
    REQUIRE(marking_peak(w, seq({0, 1, 2})) == 3);  // (x,y,z)
    REQUIRE(marking_peak(w, seq({1, 0, 2})) == 2);  // (y,x,z)

    Word fig1 = Word::from_chars("abcbcdbada");
    // (c,b,d,a)
    REQUIRE(marking_peak(fig1, seq({2, 1, 3, 0})) == 2);

    REQUIRE(marking_peak(Word::from_chars("a"), seq({0})) == 1);
}

TEST_CASE("invalid marking sequences are rejected") {
    Word w = Word::from_chars("xyxyzxz");
    REQUIRE_THROWS_AS(marking_peak(w, seq({0, 1})), invalid_certificate_error);
    REQUIRE_THROWS_AS(marking_peak(w, seq({0, 1, 1})), invalid_certificate_error);
    REQUIRE_THROWS_AS(marking_peak(w, seq({0, 1, 3})), invalid_certificate_error);
}

TEST_CASE("blocks_after_marking counts maximal runs") {
    Word w = Word::from_chars("xyxyzxz");
    REQUIRE(blocks_after_marking(w, std::vector<Symbol>{0}) == 3);
    REQUIRE(blocks_after_marking(w, std::vector<Symbol>{}) == 0);
    REQUIRE(blocks_after_marking(w, std::vector<Symbol>{0, 1, 2}) == 1);
}

TEST_CASE("trace ends at one block and stage deltas are bounded") {
    std::mt19937 rng(42);
    for (int it = 0; it < 300; ++it) {
        Word w = testing::random_condensed_word(rng, 5, 12);
        std::vector<Symbol> perm(static_cast<std::size_t>(w.alphabet_size()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto [peak, trace] = marking_number(w, MarkingSequence{perm});
        REQUIRE(trace.block_counts.back() == 1);
        REQUIRE(peak >= 1);
        REQUIRE(peak <= (static_cast<int>(w.size()) + 1) / 2);
        int prev = 0;
        for (std::size_t i = 0; i < trace.block_counts.size(); ++i) {
            int occ = w.occurrences(perm[i]);
            REQUIRE(std::abs(trace.block_counts[i] - prev) <= occ);
            prev = trace.block_counts[i];
        }
    }
}

TEST_CASE("reversal is an involution and shifts the peak by at most one") {
    MarkingSequence s = seq({0, 1, 2});
    REQUIRE(reverse_sequence(s) == seq({2, 1, 0}));
    REQUIRE(reverse_sequence(reverse_sequence(s)) == s);

    std::mt19937 rng(7);
    for (int it = 0; it < 500; ++it) {
        Word w = testing::random_condensed_word(rng, 6, 14);
        std::vector<Symbol> perm(static_cast<std::size_t>(w.alphabet_size()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        MarkingSequence s1{perm};
        int a = marking_peak(w, s1);
        int b = marking_peak(w, reverse_sequence(s1));
        REQUIRE(std::abs(a - b) <= 1);
    }
}
