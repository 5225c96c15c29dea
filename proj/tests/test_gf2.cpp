#include <algorithm>
#include <random>
#include <sstream>

#include "ctk/gf2.hpp"
#include "doctest.h"

using namespace ctk;

TEST_CASE("BitVec basics") {
    BitVec v(130);
    CHECK(v.size() == 130);
    CHECK(v.is_zero());
    v.set(0, true);
    v.set(129, true);
    CHECK(v.get(0));
    CHECK(v.get(129));
    CHECK(v.popcount() == 2);
    v.flip(129);
    CHECK(!v.get(129));

    BitVec a = BitVec::from_string("1101");  // bits (1,1,0,1), index 0 first
    BitVec b = BitVec::from_uint(0b0110, 4);  // bits (0,1,1,0)
    CHECK(a.get(0));
    CHECK(!a.get(2));
    CHECK(a.dot(b) == true);  // overlap only at index 1
    a.xor_with(b);
    CHECK(a == BitVec::from_string("1011"));
}

TEST_CASE("gf2_solve against random systems with planted solutions") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t rows = 1 + rng() % 24, cols = 1 + rng() % 24;
        Gf2Matrix a(rows, cols);
        BitVec x(cols);
        for (std::size_t c = 0; c < cols; ++c) x.set(c, rng() & 1);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) a.set(r, c, rng() & 1);
        BitVec b = a.multiply(x);
        auto sol = gf2_solve(a, b);
        REQUIRE(sol.consistent());
        CHECK(a.multiply(*sol.particular) == b);
        for (const auto& nv : sol.nullspace_basis) CHECK(a.multiply(nv).is_zero());
        CHECK(sol.nullspace_basis.size() == cols - a.rank());
        // the planted solution lies in the affine space: particular ^ planted
        // must be in the nullspace span; verify via rank of the stacked basis
        Gf2Matrix stacked(sol.nullspace_basis.size() + 1, cols);
        for (std::size_t i = 0; i < sol.nullspace_basis.size(); ++i)
            stacked.row(i) = sol.nullspace_basis[i];
        BitVec diff = *sol.particular;
        diff.xor_with(x);
        stacked.row(sol.nullspace_basis.size()) = diff;
        CHECK(stacked.rank() == sol.nullspace_basis.size());
    }
}

TEST_CASE("gf2_solve detects inconsistency") {
    Gf2Matrix a(2, 1);
    a.set(0, 0, true);
    a.set(1, 0, true);
    BitVec b(2);
    b.set(0, true);  // x = 1 and x = 0
    CHECK(!gf2_solve(a, b).consistent());
}

TEST_CASE("determines() means constant over the solution set") {
    // x0 + x1 = 1 leaves x0 free; x0 ^ x1 is determined, x0 alone is not
    Gf2Matrix a(1, 2);
    a.set(0, 0, true);
    a.set(0, 1, true);
    BitVec b(1);
    b.set(0, true);
    auto sol = gf2_solve(a, b);
    REQUIRE(sol.consistent());
    BitVec both = BitVec::from_string("11"), first = BitVec::from_string("10");
    CHECK(sol.determines(both));
    CHECK(!sol.determines(first));
}

TEST_CASE("anf is involutive and matches known forms") {
    // f(x) = x0 x1 on 2 bits: table 0001 -> ANF has only the x0 x1 monomial
    std::vector<std::uint8_t> table = {0, 0, 0, 1};
    auto a = anf(table);
    CHECK(a == std::vector<std::uint8_t>({0, 0, 0, 1}));
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::uint8_t> t(64);
        for (auto& v : t) v = rng() & 1;
        CHECK(anf(anf(t)) == t);
    }
}

TEST_CASE("FieldGF2n arithmetic") {
    FieldGF2n f(5);
    CHECK(FieldGF2n::is_irreducible(f.modulus(), 5));
    // x^{2^5 - 1} = 1 for all nonzero x
    for (std::uint32_t x = 1; x < 32; ++x) CHECK(f.pow(x, 31) == 1);
    // Frobenius is additive: (a + b)^2 = a^2 + b^2
    for (std::uint32_t a = 0; a < 32; ++a)
        for (std::uint32_t b = 0; b < 32; ++b)
            CHECK(f.pow(a ^ b, 2) == (f.pow(a, 2) ^ f.pow(b, 2)));
}

TEST_CASE("Permutation cycles, tau and sign") {
    Permutation p({1, 2, 0, 4, 3});  // 3-cycle * transposition
    CHECK(p.cycle_lengths() == std::vector<std::size_t>({3, 2}));
    CHECK(p.tau() == 3);
    CHECK(p.sign() == -1);
    CHECK(Permutation::identity(6).sign() == +1);
    CHECK_THROWS(Permutation({0, 0, 1}));
    // sign is multiplicative
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::uint32_t> m1(8), m2(8);
        for (unsigned i = 0; i < 8; ++i) m1[i] = m2[i] = i;
        std::shuffle(m1.begin(), m1.end(), rng);
        std::shuffle(m2.begin(), m2.end(), rng);
        Permutation p1(m1), p2(m2);
        CHECK(p1.compose(p2).sign() == p1.sign() * p2.sign());
    }
}

TEST_CASE("truth table io round trip") {
    TruthTable t;
    t.in_bits = 3;
    t.out_bits = 4;
    t.table = {0, 7, 15, 2, 9, 4, 4, 11};
    std::stringstream ss;
    write_truth_table(ss, t);
    TruthTable back = read_truth_table(ss);
    CHECK(back.in_bits == 3);
    CHECK(back.out_bits == 4);
    CHECK(back.table == t.table);
}
