#include <random>
#include <set>

#include "ctk/fpe.hpp"
#include "ctk/prf.hpp"
#include "doctest.h"

using namespace ctk;

TEST_CASE("Block128 hex round trip") {
    Block128 b{0x0123456789abcdefULL, 0xfedcba9876543210ULL};
    CHECK(to_hex(b) == "0123456789abcdeffedcba9876543210");
    CHECK(block_from_hex(to_hex(b)) == b);
    CHECK_THROWS(block_from_hex("zz"));
}

TEST_CASE("ArxPrf is an invertible keyed permutation") {
    ArxPrf prf(Block128{1, 2});
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        Block128 x{rng(), rng()};
        Block128 y = prf.apply(x);
        CHECK(prf.invert(y) == x);
        CHECK(!(y == x));
    }
    // different keys give different streams
    ArxPrf other(Block128{1, 3});
    CHECK(!(prf.apply({0, 0}) == other.apply({0, 0})));
    // call counter observes every application
    prf.reset_call_count();
    prf.apply({0, 1});
    prf.apply({0, 2});
    CHECK(prf.call_count() == 2);
}

TEST_CASE("factor_close picks the balanced factorization") {
    CHECK(fpe::factor_close(12) == std::pair<std::uint64_t, std::uint64_t>{4, 3});
    CHECK(fpe::factor_close(5818342) == std::pair<std::uint64_t, std::uint64_t>{2594, 2243});
    CHECK(!fpe::factor_close(13).has_value());
    CHECK(!fpe::factor_close(3).has_value());
}

namespace {

template <class Cipher>
void check_bijection(const Cipher& c, const Prf128& prf, std::uint64_t n) {
    std::vector<bool> seen(n, false);
    prf.reset_call_count();
    std::uint64_t per = 0;
    for (std::uint64_t x = 0; x < n; ++x) {
        std::uint64_t before = prf.call_count();
        std::uint64_t y = c.encrypt(x);
        std::uint64_t used = prf.call_count() - before;
        if (x == 0) per = used;
        CHECK(used == per);
        REQUIRE(y < n);
        CHECK(!seen[y]);
        seen[y] = true;
        CHECK(c.decrypt(y) == x);
    }
}

}  // namespace

TEST_CASE("composite-domain Feistel is a bijection with constant PRF usage") {
    ArxPrf prf(Block128{42, 43});
    for (std::uint64_t n : {4ULL, 12ULL, 100ULL, 101 * 103ULL}) {
        auto dom = fpe::make_composite_domain(n);
        fpe::FpeComposite c(dom, fpe::FeistelParams{3, 0}, prf);
        check_bijection(c, prf, n);
    }
}

TEST_CASE("prime-domain variants are bijections with constant PRF usage") {
    ArxPrf prf(Block128{42, 43});
    for (std::uint64_t n : {5ULL, 101ULL, 10007ULL}) {
        fpe::FpePrimeDec dec(n, fpe::FeistelParams{3, n / 2}, prf);
        check_bijection(dec, prf, n);
        fpe::FpePrimeInc inc(n, fpe::FeistelParams{3, 0}, prf);
        check_bijection(inc, prf, n);
    }
}

TEST_CASE("ciphertexts depend on the PRF key") {
    ArxPrf k1(Block128{1, 1}), k2(Block128{2, 2});
    auto dom = fpe::make_composite_domain(10000);
    fpe::FpeComposite c1(dom, fpe::FeistelParams{3, 0}, k1), c2(dom, fpe::FeistelParams{3, 0}, k2);
    unsigned diff = 0;
    for (std::uint64_t x = 0; x < 1000; ++x) diff += c1.encrypt(x) != c2.encrypt(x);
    CHECK(diff > 900);
}
