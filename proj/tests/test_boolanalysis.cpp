#include <algorithm>
#include <bit>
#include <random>

#include "ctk/boolanalysis.hpp"
#include "doctest.h"

using namespace ctk;
using namespace ctk::boolfn;

TEST_CASE("differential uniformity: definition oracle on random sboxes") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        Sbox f{3, {}};
        f.table.resize(8);
        for (auto& t : f.table) t = std::uint32_t(rng()) & 7;
        // literal definition
        unsigned worst = 0;
        for (std::uint32_t a = 1; a < 8; ++a)
            for (std::uint32_t b = 0; b < 8; ++b) {
                unsigned cnt = 0;
                for (std::uint32_t x = 0; x < 8; ++x)
                    cnt += (f.table[x] ^ f.table[x ^ a]) == b;
                worst = std::max(worst, cnt);
            }
        CHECK(differential_uniformity(f) == worst);
    }
}

TEST_CASE("published APN exponents over GF(2^5)") {
    FieldGF2n gf5(5);
    CHECK(kasami_exponent(5, 2) == 13);
    CHECK(welch_exponent(5, 0) == 7);
    CHECK(inverse_exponent(5, 0) == 15);
    for (std::uint64_t d : {13ULL, 7ULL, 15ULL}) {
        Sbox f = power_map(gf5, d);
        CHECK(is_apn(f));
        CHECK(differential_uniformity(f) == 2);
    }
    // x^3 (Gold) is APN everywhere; x^1 is linear, never APN for n >= 2
    CHECK(is_apn(power_map(gf5, 3)));
    CHECK(!is_apn(power_map(gf5, 1)));
}

TEST_CASE("the exponent catalog produces APN maps for n = 5 and n = 7") {
    for (unsigned n : {5u, 7u}) {
        FieldGF2n field(n);
        for (const auto& fam : apn_catalog())
            for (unsigned param = 0; param <= n; ++param)
                if (auto d = fam.exponent(n, param)) CHECK(is_apn(power_map(field, *d)));
    }
}

TEST_CASE("component of the published 4-bit sbox") {
    Sbox s = students_sbox();
    for (std::uint32_t x = 0; x < 16; ++x) {
        int lhs = std::popcount(s.table[x] & 0xCu) & 1;
        int rhs = int(((x >> 3) & (x >> 2) & 1) ^ (x >> 1 & 1));
        CHECK(lhs == rhs);
    }
    // ANF of the component u = (1,1,0,0): x1 x2 ^ x3 exactly
    auto a = component_anf(s, 0xC);
    for (std::uint32_t mono = 0; mono < 16; ++mono) {
        bool expect = mono == 0xC || mono == 0x2;  // {x1 x2} and {x3}, x1 = MSB
        CHECK(bool(a[mono]) == expect);
    }
    // the derived first-round identity: f(S(x) ^ (0,1,a,b)) = u.x ^ a ^ 1
    for (std::uint32_t x = 0; x < 16; ++x)
        for (std::uint32_t ab = 0; ab < 4; ++ab) {
            std::uint32_t key = 0x4 | ab;  // (0,1,a,b)
            std::uint32_t y = s.table[x] ^ key;
            int f = int(((y >> 3) & (y >> 2) & 1) ^ (y >> 1 & 1));
            int rhs = int(std::popcount(x & 0xCu) & 1) ^ int(ab >> 1 & 1) ^ 1;
            CHECK(f == rhs);
        }
}

TEST_CASE("cipher invariant and the reported contradiction") {
    Sbox s = students_sbox();
    // for letter keys, u.E(x) ^ f(x) ^ x1 is constant in x
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        auto key = random_letter_key(9, seed);
        int c0 = -1;
        for (std::uint32_t x = 0; x < 16; ++x) {
            std::uint32_t y = students_cipher(s, key, x);
            int f = int(((x >> 3) & (x >> 2) & 1) ^ (x >> 1 & 1));
            int val = f ^ int(x >> 3 & 1) ^ int(std::popcount(y & 0xCu) & 1);
            if (c0 < 0) c0 = val;
            CHECK(val == c0);
        }
    }
    // the two published pairs give c = 0 and c = 1
    auto v = students_contradiction({{0xA, 0x5}, {0xC, 0x0}});
    CHECK(v.constants == std::vector<int>({0, 1}));
    CHECK(v.contradiction);
    // genuine pairs from one key never contradict
    auto key = random_letter_key(9, 77);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> honest;
    for (std::uint32_t x = 0; x < 16; ++x) honest.push_back({x, students_cipher(s, key, x)});
    CHECK(!students_contradiction(honest).contradiction);
}

TEST_CASE("distance to affine: exact on affine functions, bounded on random ones") {
    std::mt19937_64 rng(2);
    // affine functions have distance 0
    for (int trial = 0; trial < 5; ++trial) {
        std::uint32_t cols[4], cst = std::uint32_t(rng()) & 0xF;
        for (auto& c : cols) c = std::uint32_t(rng()) & 0xF;
        Sbox f{4, {}};
        f.table.resize(16);
        for (std::uint32_t x = 0; x < 16; ++x) {
            std::uint32_t y = cst;
            for (unsigned j = 0; j < 4; ++j)
                if (x >> j & 1) y ^= cols[j];
            f.table[x] = y;
        }
        auto w = distance_to_affine(f);
        CHECK(w.distance == 0);
    }
    // the published sbox has distance 9; random functions stay below 11
    CHECK(distance_to_affine(students_sbox()).distance == 9);
    for (int trial = 0; trial < 40; ++trial) {
        Sbox f{4, {}};
        f.table.resize(16);
        for (auto& t : f.table) t = std::uint32_t(rng()) & 0xF;
        auto w = distance_to_affine(f);
        CHECK(w.distance < 11);
        unsigned mism = 0;
        for (std::uint32_t x = 0; x < 16; ++x) mism += w.apply(x) != f.table[x];
        CHECK(mism == w.distance);
    }
}

TEST_CASE("permutation check for L1(x) + L2(F(x))") {
    FieldGF2n gf5(5);
    Sbox f = power_map(gf5, 13);
    std::vector<std::uint32_t> id(32), zero(32, 0);
    for (std::uint32_t x = 0; x < 32; ++x) id[x] = x;
    CHECK(is_permutation_l1_l2(f, zero, id));   // L2 = identity: x^13 is a bijection
    CHECK(is_permutation_l1_l2(f, id, zero));   // L1 = identity
    CHECK(!is_permutation_l1_l2(f, zero, zero));
}
