#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctk/gf2.hpp"

namespace ctk::boolfn {

struct Sbox {
    unsigned n = 0;
    std::vector<std::uint32_t> table;

    void validate() const;
};

/// The published 4-bit S-box of the letters-key SPN exercise.
Sbox students_sbox();

/// max over a != 0, b of #{x : F(x) ^ F(x ^ a) = b}; APN iff 2.
unsigned differential_uniformity(const Sbox& f);
bool is_apn(const Sbox& f);

/// x^d over GF(2^n) as an explicit table.
Sbox power_map(const FieldGF2n& field, std::uint64_t d);

/// The five published APN power-function families.
struct ApnFamily {
    std::string name;
    /// Exponent for this n, or nullopt when the side condition fails.
    std::optional<std::uint64_t> (*exponent)(unsigned n, unsigned param);
};

const std::vector<ApnFamily>& apn_catalog();

/// Kasami d = 2^{2i} - 2^i + 1 (gcd(i, n) = 1, 2 <= i <= n/2), Welch
/// d = 2^t + 3 (n = 2t+1), Niho, inverse d = 2^{2t} - 1 (n = 2t+1),
/// Dobbertin d = 2^{4i}+2^{3i}+2^{2i}+2^i-1 (n = 5i). Convenience helpers:
std::optional<std::uint64_t> kasami_exponent(unsigned n, unsigned i);
std::optional<std::uint64_t> welch_exponent(unsigned n, unsigned);
std::optional<std::uint64_t> niho_exponent(unsigned n, unsigned);
std::optional<std::uint64_t> inverse_exponent(unsigned n, unsigned);
std::optional<std::uint64_t> dobbertin_exponent(unsigned n, unsigned);

struct AffineWitness {
    std::vector<std::uint32_t> linear;  // L as n columns: linear[j] = L(e_j)
    std::uint32_t constant = 0;
    unsigned distance = 0;

    std::uint32_t apply(std::uint32_t x) const;
};

/// min over affine A of #{x : F(x) != A(x)}; exhaustive over 2^{n^2 + n}
/// maps, n <= 4. For each L the best constant is the most frequent value of
/// F(x) ^ Lx.
AffineWitness distance_to_affine(const Sbox& f);

/// ANF of the component x -> u . F(x) (dot over GF(2), x1 = MSB mask bit).
std::vector<std::uint8_t> component_anf(const Sbox& f, std::uint32_t u);

/// The students' cipher: r rounds of (xor key nibble, S), one final key
/// nibble. Keys are nibbles of an ASCII letter passphrase, so odd-indexed
/// (1-based) nibbles look like (0,1,a,b).
std::uint32_t students_cipher(const Sbox& s, const std::vector<std::uint8_t>& key_nibbles,
                              std::uint32_t x);

/// Random letters-only key for r rounds (r + 1 nibbles, r odd).
std::vector<std::uint8_t> random_letter_key(unsigned rounds, std::uint64_t seed);

struct ContradictionVerdict {
    bool contradiction = false;
    std::vector<int> constants;          // c = f(x) ^ u.y per pair
    std::vector<int> refined_constants;  // f(x) ^ x1 ^ u.y per pair
};

/// c = f(x) ^ u^T y per (plaintext, ciphertext) pair with u = (1,1,0,0),
/// f(x) = x1 x2 ^ x3; contradiction iff two pairs disagree. The exact
/// key-independent invariant of the construction carries an extra x1 from
/// the first round (u^T E(x) = f(x) ^ x1 ^ c); it is reported alongside and
/// also flags a contradiction. The two reference pairs have x1 = 1, so both
/// readings agree there.
ContradictionVerdict students_contradiction(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs);

/// Checker for the open Q1/Q2 experiments: is L1(x) + L2(F(x)) a bijection?
/// l1, l2 given as explicit 2^n tables of linear maps.
bool is_permutation_l1_l2(const Sbox& f, const std::vector<std::uint32_t>& l1,
                          const std::vector<std::uint32_t>& l2);

}  // namespace ctk::boolfn
