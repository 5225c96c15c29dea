#include <algorithm>

#include "ctk/permclose.hpp"
#include "doctest.h"

using namespace ctk::permclose;

TEST_CASE("brute force equals the recurrence for every alpha, n <= 10") {
    for (unsigned n = 1; n <= 10; ++n)
        for (std::uint32_t a = 0; a < (1u << n); ++a)
            CHECK(closeness_bruteforce(n, a) == closeness_recursive(n, a));
}

TEST_CASE("published minima and the first terms of the minimum sequence") {
    CHECK(min_closeness(1) == 4);
    CHECK(min_closeness(2) == 8);
    CHECK(min_closeness(3) == 24);
    CHECK(min_closeness(4) == 56);
    CHECK(min_closeness(5) == 152);
}

TEST_CASE("recurrence equals the exact closed form up to n = 40") {
    for (unsigned n = 1; n <= 40; ++n)
        CHECK(min_closeness(n) == min_closeness_closed_form(n));
}

TEST_CASE("minimizer sets match exhaustive argmin") {
    for (unsigned n = 1; n <= 12; ++n) {
        auto best = best_alphas(n);
        CHECK(best.c_min == min_closeness(n));
        CHECK(best.minimizers.size() == (n <= 2 ? 2 : 4));
        std::uint64_t cmin = ~0ULL;
        std::vector<std::uint32_t> argmin;
        for (std::uint32_t a = 0; a < (1u << n); ++a) {
            std::uint64_t c = closeness_recursive(n, a);
            if (c < cmin) { cmin = c; argmin.clear(); }
            if (c == cmin) argmin.push_back(a);
        }
        auto sorted = best.minimizers;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == argmin);
        CHECK(cmin == best.c_min);
    }
}

TEST_CASE("identity shift is maximally far from a permutation") {
    // alpha = 0 gives F(x) = 0 for all x: closeness 4^n (every pair collides)
    for (unsigned n = 1; n <= 10; ++n)
        CHECK(closeness_recursive(n, 0) == (std::uint64_t(1) << (2 * n)));
}

TEST_CASE("closeness counts ordered collision pairs directly, small n") {
    // independent oracle: literal definition, no histogram tricks
    for (unsigned n = 1; n <= 6; ++n)
        for (std::uint32_t alpha = 0; alpha < (1u << n); ++alpha) {
            std::uint32_t mod = 1u << n;
            std::uint64_t pairs = 0;
            for (std::uint32_t x = 0; x < mod; ++x)
                for (std::uint32_t y = 0; y < mod; ++y) {
                    std::uint32_t fx = x ^ ((x + alpha) % mod), fy = y ^ ((y + alpha) % mod);
                    pairs += fx == fy;
                }
            CHECK(pairs == closeness_recursive(n, alpha));
        }
}
