#include <random>
#include <set>
#include <string>

#include "ctk/dlog.hpp"
#include "doctest.h"

using namespace ctk::dlog;

TEST_CASE("modular helpers") {
    CHECK(mul_mod(0xFFFFFFFFFFFFFFFULL, 0xFFFFFFFFFFFFFFFULL, 1000000007ULL) ==
          std::uint64_t((unsigned __int128)0xFFFFFFFFFFFFFFFULL * 0xFFFFFFFFFFFFFFFULL %
                        1000000007ULL));
    CHECK(pow_mod(2, 10, 1000) == 24);
    CHECK(pow_mod(7, 0, 13) == 1);
    CHECK(prime_factors(2 * 3 * 5 * 7 * 11) == std::vector<std::uint64_t>({2, 3, 5, 7, 11}));
    CHECK(prime_factors(97) == std::vector<std::uint64_t>({97}));
    CHECK(is_primitive_root(3, 7));
    CHECK(!is_primitive_root(2, 7));
}

TEST_CASE("oracle machine hides residues injectively") {
    OracleMachine m(31, 12, 9);
    // same residue, same handle: 2^5 = 4^10 = 1 (mod 31)
    CHECK(m.query(2, 5) == m.query(4, 10));
    std::set<std::string> handles;
    for (std::uint64_t r = 1; r < 31; ++r) handles.insert(ctk::to_hex(m.query(r, 1)));
    CHECK(handles.size() == 30);
    CHECK(m.query(12, 3) == m.query_secret(3));  // k = 12
    CHECK_THROWS(m.query(31, 1));
}

TEST_CASE("all three strategies recover random secrets on small moduli") {
    // n prime with squarefree smooth n-1, g primitive
    struct Inst { std::uint64_t n, g; };
    for (Inst inst : {Inst{2311, 3}, Inst{211, 2}, Inst{1155 * 2 + 1, 0}}) {
        std::uint64_t n = inst.n;
        std::uint64_t g = inst.g;
        if (g == 0) {
            for (g = 2; !is_primitive_root(g, n); ++g) {}
        }
        REQUIRE(is_primitive_root(g, n));
        std::mt19937_64 rng(n);
        for (int trial = 0; trial < 8; ++trial) {
            std::uint64_t k = rng() % n;
            OracleMachine m(n, k, 1000 + trial);
            CHECK(pohlig_hellman_recover(m, g, false).k == k);
            CHECK(pohlig_hellman_recover(m, g, true).k == k);
            CHECK(bezout_recover(m, g).k == k);
        }
    }
}

TEST_CASE("published instance: answer and query economy") {
    const std::uint64_t n = 1060105447831ULL, k = 856182870494ULL, g = 12;
    CHECK(prime_factors(n - 1) ==
          std::vector<std::uint64_t>({2, 3, 5, 11, 13, 17, 19, 23, 29, 31, 37}));
    OracleMachine m(n, k, 2021);
    auto naive = pohlig_hellman_recover(m, g, false);
    auto bsgs = pohlig_hellman_recover(m, g, true);
    auto bez = bezout_recover(m, g);
    CHECK(naive.k == k);
    CHECK(bsgs.k == k);
    CHECK(bez.k == k);
    CHECK(bsgs.total_queries < naive.total_queries);
    // per-prime residues agree between strategies
    CHECK(naive.residues == bsgs.residues);
}

TEST_CASE("bsgs handles tiny primes") {
    OracleMachine m(7, 5, 3);  // n - 1 = 6 = 2 * 3
    CHECK(pohlig_hellman_recover(m, 3, true).k == 5);
}
