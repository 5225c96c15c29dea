#include "ctk/prf.hpp"

#include <bit>
#include <stdexcept>

namespace ctk {

std::string to_hex(const Block128& b) {
    static const char* digits = "0123456789abcdef";
    std::string s(32, '0');
    for (int i = 0; i < 16; ++i) s[std::size_t(i)] = digits[(b.hi >> (60 - 4 * i)) & 0xF];
    for (int i = 0; i < 16; ++i) s[std::size_t(16 + i)] = digits[(b.lo >> (60 - 4 * i)) & 0xF];
    return s;
}

Block128 block_from_hex(const std::string& hex32) {
    if (hex32.size() != 32) throw std::invalid_argument("block_from_hex: expected 32 hex digits");
    auto nibble = [](char c) -> std::uint64_t {
        if (c >= '0' && c <= '9') return std::uint64_t(c - '0');
        if (c >= 'a' && c <= 'f') return std::uint64_t(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return std::uint64_t(c - 'A' + 10);
        throw std::invalid_argument("block_from_hex: bad hex digit");
    };
    Block128 b;
    for (int i = 0; i < 16; ++i) b.hi = b.hi << 4 | nibble(hex32[std::size_t(i)]);
    for (int i = 0; i < 16; ++i) b.lo = b.lo << 4 | nibble(hex32[std::size_t(16 + i)]);
    return b;
}

namespace {
std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr int kRotA[12] = {13, 7, 29, 17, 41, 3, 23, 11, 37, 19, 5, 31};
constexpr int kRotB[12] = {32, 25, 8, 47, 16, 61, 40, 9, 28, 53, 14, 44};
}  // namespace

ArxPrf::ArxPrf(const Block128& key) {
    std::uint64_t state = key.hi ^ 0xA5A5A5A5A5A5A5A5ULL;
    state ^= splitmix64(state) ^ key.lo;
    for (auto& rk : round_keys_) rk = splitmix64(state);
}

Block128 ArxPrf::permute(const Block128& in) const {
    std::uint64_t a = in.hi, b = in.lo;
    for (int r = 0; r < kRounds; ++r) {
        a += round_keys_[2 * r];
        a = std::rotl(a, kRotA[r]);
        b ^= a;
        b += round_keys_[2 * r + 1];
        b = std::rotl(b, kRotB[r]);
        a ^= b;
    }
    return {a, b};
}

Block128 ArxPrf::invert(const Block128& out) const {
    std::uint64_t a = out.hi, b = out.lo;
    for (int r = kRounds - 1; r >= 0; --r) {
        a ^= b;
        b = std::rotr(b, kRotB[r]);
        b -= round_keys_[2 * r + 1];
        b ^= a;
        a = std::rotr(a, kRotA[r]);
        a -= round_keys_[2 * r];
    }
    return {a, b};
}

}  // namespace ctk
