#include <algorithm>
#include <numeric>
#include <random>

#include "ctk/boolshare.hpp"
#include "doctest.h"

using namespace ctk;
using namespace ctk::share;

namespace {

// Published 3-share example: G1 = ad ^ ae ^ bd, G2 = be ^ bf ^ ce,
// G3 = cf ^ cd ^ af, shares (a,d), (b,e), (c,f) in consecutive blocks.
TruthTable example_sharing() {
    TruthTable g;
    g.in_bits = 6;
    g.out_bits = 3;
    g.table.resize(64);
    for (std::uint32_t z = 0; z < 64; ++z) {
        bool a = z & 1, d = z >> 1 & 1, b = z >> 2 & 1, e = z >> 3 & 1, c = z >> 4 & 1,
             f = z >> 5 & 1;
        g.table[z] = std::uint32_t((a & d) ^ (a & e) ^ (b & d)) |
                     std::uint32_t((b & e) ^ (b & f) ^ (c & e)) << 1 |
                     std::uint32_t((c & f) ^ (c & d) ^ (a & f)) << 2;
    }
    return g;
}

TruthTable random_function(unsigned n, unsigned m, std::mt19937_64& rng) {
    TruthTable f;
    f.in_bits = n;
    f.out_bits = m;
    f.table.resize(std::size_t(1) << n);
    for (auto& t : f.table) t = std::uint32_t(rng()) & ((1u << m) - 1);
    return f;
}

}  // namespace

TEST_CASE("the published example is a 3-sharing of F(x, y) = xy") {
    TruthTable g = example_sharing();
    for (auto* checker : {&is_sharing_ordered, &is_sharing_any, &anf_sharing_heuristic}) {
        SharingVerdict v = (*checker)(g, 3);
        REQUIRE(v.is_sharing);
        CHECK(v.f.in_bits == 2);
        CHECK(v.f.out_bits == 1);
        CHECK(v.f.table == std::vector<std::uint32_t>({0, 0, 0, 1}));
        CHECK(verify_sharing(g, 3, v.f, v.pi));
    }
}

TEST_CASE("non-sharings are rejected") {
    TruthTable g = example_sharing();
    g.table[5] ^= 1;  // break one entry
    CHECK(!is_sharing_ordered(g, 3).is_sharing);
    CHECK(!anf_sharing_heuristic(g, 3).is_sharing);
    CHECK(!is_sharing_any(g, 3).is_sharing);
}

TEST_CASE("make_sharing round trips through the ordered checker") {
    std::mt19937_64 rng(10);
    for (unsigned s : {1u, 2u, 3u}) {
        for (int trial = 0; trial < 10; ++trial) {
            TruthTable f = random_function(2, 2, rng);
            TruthTable g = make_sharing(f, s, rng());
            SharingVerdict v = is_sharing_ordered(g, s);
            REQUIRE(v.is_sharing);
            CHECK(v.f.table == f.table);
            CHECK(verify_sharing(g, s, v.f, v.pi));
            // the ANF heuristic agrees in the ordered case
            SharingVerdict h = anf_sharing_heuristic(g, s);
            REQUIRE(h.is_sharing);
            CHECK(h.f.table == f.table);
        }
    }
}

TEST_CASE("shuffled sharings are found by the permutation search") {
    std::mt19937_64 rng(20);
    const std::vector<std::pair<unsigned, unsigned>> shapes = {
        {2, 2}, {3, 2}, {2, 3}, {3, 3}, {2, 4}, {4, 2}};
    for (int trial = 0; trial < 30; ++trial) {
        auto [s, n] = shapes[std::size_t(trial) % shapes.size()];
        TruthTable f = random_function(n, 1, rng);
        TruthTable g = make_sharing(f, s, rng());
        std::vector<unsigned> pi(g.in_bits);
        std::iota(pi.begin(), pi.end(), 0u);
        std::shuffle(pi.begin(), pi.end(), rng);
        TruthTable shuffled = permute_inputs(g, pi);
        SharingVerdict v = is_sharing_any(shuffled, s);
        REQUIRE(v.is_sharing);
        CHECK(verify_sharing(shuffled, s, v.f, v.pi));
    }
}

TEST_CASE("permute_inputs composes correctly") {
    std::mt19937_64 rng(30);
    TruthTable g = random_function(5, 2, rng);
    std::vector<unsigned> pi = {2, 0, 4, 1, 3};
    TruthTable p = permute_inputs(g, pi);
    for (std::uint32_t z = 0; z < 32; ++z) {
        std::uint32_t w = 0;
        for (unsigned bit = 0; bit < 5; ++bit)
            if (z >> bit & 1) w |= 1u << pi[bit];
        CHECK(p.table[z] == g.table[w]);
    }
    // identity permutation is a no-op
    std::vector<unsigned> id = {0, 1, 2, 3, 4};
    CHECK(permute_inputs(g, id).table == g.table);
}

TEST_CASE("shape validation") {
    std::mt19937_64 rng(40);
    TruthTable f = random_function(3, 1, rng);
    CHECK_THROWS(is_sharing_ordered(f, 2));  // 3 bits not divisible by 2
    TruthTable big = random_function(5, 1, rng);
    CHECK_THROWS(is_sharing_any(big, 5));  // out_bits = 1 not divisible by s = 5
}
