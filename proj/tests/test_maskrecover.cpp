#include <sstream>

#include "ctk/maskrecover.hpp"
#include "doctest.h"

using namespace ctk::mask;

TEST_CASE("generator produces well-formed instances consistent with the witness") {
    auto gen = generate_instance(11);
    const auto& inst = gen.instance;
    const auto& wit = gen.witness;
    const auto& p = inst.params;
    CHECK(inst.rows.size() == 40);
    for (const auto& row : inst.rows) {
        CHECK(row.size() == p.symbols_per_row());
        for (char c : row) CHECK(std::string(kAlphabet).find(c) != std::string::npos);
    }
    CHECK(inst.prefix.size() == p.prefix_bits);
    for (std::size_t i = 0; i < p.prefix_bits; ++i)
        CHECK(inst.prefix.get(i) == wit.full_message.get(i));
    CHECK(wit.share_rows.size() == p.share_count);

    // decode the share rows through the witness encoding; their xor must be y
    std::array<std::uint8_t, 32> inv{};
    for (std::uint8_t v = 0; v < 32; ++v) inv[wit.encoding[v]] = v;
    ctk::BitVec acc(p.message_bits);
    for (std::size_t r : wit.share_rows) {
        for (std::size_t j = 0; j < p.symbols_per_row(); ++j) {
            std::uint8_t idx = 0;
            for (std::uint8_t i = 0; i < 32; ++i)
                if (kAlphabet[i] == inst.rows[r][j]) idx = i;
            std::uint8_t chunk = inv[idx];
            for (std::size_t b = 0; b < 5; ++b)
                if (chunk >> b & 1) acc.flip(5 * j + b);
        }
    }
    CHECK(acc == wit.full_message);
}

TEST_CASE("attack recovers the suffix and the share rows") {
    for (std::uint64_t seed : {2024ULL, 7ULL}) {
        auto gen = generate_instance(seed);
        auto res = attack(gen.instance);
        REQUIRE(res.recovered);
        CHECK(res.ambiguous_bits.empty());
        CHECK(res.suffix.size() == 128);
        std::size_t errors = 0;
        for (std::size_t i = 0; i < res.suffix.size(); ++i)
            errors += res.suffix.get(i) !=
                      gen.witness.full_message.get(gen.instance.params.prefix_bits + i);
        CHECK(errors == 0);
        CHECK(res.share_rows_determined);
        CHECK(res.share_rows == gen.witness.share_rows);
    }
}

TEST_CASE("instance file io round trip feeds the attack") {
    auto gen = generate_instance(5);
    std::stringstream ss;
    write_instance(ss, gen.instance);
    SharingInstance back = read_instance(ss);
    CHECK(back.params.prefix_bits == gen.instance.params.prefix_bits);
    CHECK(back.params.message_bits == gen.instance.params.message_bits);
    CHECK(back.rows == gen.instance.rows);
    auto res = attack(back);
    REQUIRE(res.recovered);
    for (std::size_t i = 0; i < res.suffix.size(); ++i)
        CHECK(res.suffix.get(i) ==
              gen.witness.full_message.get(gen.instance.params.prefix_bits + i));
}

TEST_CASE("attack rejects malformed input") {
    auto gen = generate_instance(1);
    gen.instance.rows.pop_back();
    CHECK_THROWS(attack(gen.instance));
}
