#include <catch2/catch_amalgamated.hpp>

#include "locw/families.hpp"
#include "locw/locality.hpp"

using namespace locw;

TEST_CASE("zimin words") {
    REQUIRE(zimin(1).symbols() == std::vector<Symbol>{0});
    REQUIRE(zimin(3).symbols() == std::vector<Symbol>{0, 1, 0, 2, 0, 1, 0});
    for (int i = 1; i <= 6; ++i) {
        Word z = zimin(i);
        REQUIRE(z.size() == (std::size_t{1} << i) - 1);
        REQUIRE(z.alphabet_size() == i);
        REQUIRE(z == Word(std::vector<Symbol>(z.symbols().rbegin(), z.symbols().rend()), z.names()));
    }
    // loc(Z_5) = 2^{5-2} = 8 on the 31-symbol word
    REQUIRE(zimin(5).size() == 31);
    REQUIRE(locality_subset_dp(zimin(5)).value == 8);
}

TEST_CASE("tightness families") {
    Word a32 = tightness_alpha(3, 2);
    REQUIRE(a32.symbols() == std::vector<Symbol>{0, 1, 2, 1, 0, 1, 2, 1, 0});
    REQUIRE(a32.is_condensed());
    REQUIRE(a32.size() == (2 * 3 - 2) * 2 + 1);
    REQUIRE(locality_subset_dp(a32).value == 2);
    REQUIRE(locality_bruteforce(tightness_alpha(3, 1)).value == 1);

    Word b3 = tightness_beta(3);
    REQUIRE(b3.size() == 6);
    REQUIRE(locality_subset_dp(b3).value == 3);

    for (int n = 3; n <= 5; ++n)
        for (int k = 1; k <= 3; ++k) {
            Word a = tightness_alpha(n, k);
            REQUIRE(a.is_condensed());
            REQUIRE(a.size() == static_cast<std::size_t>((2 * n - 2) * k + 1));
            REQUIRE(locality_subset_dp(a).value == k);
        }
    for (int k = 1; k <= 5; ++k) REQUIRE(locality_subset_dp(tightness_beta(k)).value == k);
}
