#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ctk/gf2.hpp"

namespace ctk::mask {

inline constexpr char kAlphabet[] = "0123456789abcdefghijklmnopqrstuy";  // 32 symbols, y not v

struct SharingParams {
    std::size_t message_bits = 6560;   // W
    std::size_t share_count = 20;      // K
    std::size_t total_rows = 40;       // 2K: shares plus decoys
    std::size_t chunk_bits = 5;
    std::size_t prefix_bits = 6432;    // known prefix of y

    std::size_t symbols_per_row() const { return message_bits / chunk_bits; }
    std::size_t suffix_bits() const { return message_bits - prefix_bits; }
    void validate() const;
};

struct SharingInstance {
    SharingParams params;
    BitVec prefix;                   // prefix_bits known bits of y
    std::vector<std::string> rows;   // total_rows strings over the alphabet
};

/// Generator-side ground truth, used as the test oracle.
struct SecretWitness {
    BitVec full_message;                   // y
    std::vector<std::size_t> share_rows;   // positions of the K shares after shuffling
    std::vector<std::uint32_t> row_shuffle;    // sigma
    std::array<std::uint8_t, 32> encoding;     // rho: 5-bit value -> alphabet index
};

struct GeneratedInstance {
    SharingInstance instance;
    SecretWitness witness;
};

GeneratedInstance generate_instance(std::uint64_t seed, const SharingParams& params = {});

struct AttackResult {
    bool recovered = false;
    BitVec suffix;                        // suffix_bits predicted bits of y
    std::vector<std::size_t> ambiguous_bits;  // suffix offsets the system leaves open
    std::vector<std::size_t> share_rows;      // rows identified as shares (when determined)
    bool share_rows_determined = false;
};

/// Linearization attack: one GF(2) system per intra-chunk bit offset over
/// the row x symbol indicator variables, built from the fully known chunks.
AttackResult attack(const SharingInstance& instance);

// Instance file: line 1 = prefix as '0'/'1' chars; then one row per line.
void write_instance(std::ostream& out, const SharingInstance& instance);
SharingInstance read_instance(std::istream& in);

}  // namespace ctk::mask
