#pragma once

#include <atomic>
#include <cstdint>
#include <string>

namespace ctk {

struct Block128 {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;
    bool operator==(const Block128&) const = default;
};

std::string to_hex(const Block128& b);
Block128 block_from_hex(const std::string& hex32);

/// Keyed deterministic 128-bit -> 128-bit primitive. Implementations are
/// permutations of the block space, so outputs are injective in the input.
/// The call counter is a test-only observer.
class Prf128 {
public:
    virtual ~Prf128() = default;

    Block128 apply(const Block128& in) const {
        ++calls_;
        return permute(in);
    }
    std::uint64_t call_count() const { return calls_.load(); }
    void reset_call_count() const { calls_.store(0); }

protected:
    virtual Block128 permute(const Block128& in) const = 0;

private:
    mutable std::atomic<std::uint64_t> calls_{0};
};

/// Reference backend: a keyed add-xor-rotate permutation with a fixed
/// rotation schedule and round keys derived from the 128-bit key.
/// Stands in for an external block cipher behind the same interface.
class ArxPrf : public Prf128 {
public:
    explicit ArxPrf(const Block128& key);
    static ArxPrf from_hex_key(const std::string& hex32) { return ArxPrf(block_from_hex(hex32)); }

    Block128 invert(const Block128& out) const;

protected:
    Block128 permute(const Block128& in) const override;

private:
    static constexpr int kRounds = 12;
    std::uint64_t round_keys_[2 * kRounds];
};

}  // namespace ctk
