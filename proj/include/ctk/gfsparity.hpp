#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ctk/gf2.hpp"

namespace ctk::gfs {

/// Additive group of a commutative ring of order 2^t: a direct product of
/// cyclic 2-groups Z_{2^{e_1}} x ... x Z_{2^{e_u}}. Elements are packed
/// mixed-radix integers in [0, 2^t), factor e_1 in the low bits.
struct Group2t {
    std::vector<unsigned> exponents;

    unsigned t() const;  // total bit size
    unsigned c() const;  // char(R) = 2^c, c = max e_i
    std::uint32_t size() const { return std::uint32_t(1) << t(); }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    /// log2 of the additive order of x.
    unsigned ord_log2(std::uint32_t x) const;

    /// "z4", "z2^2", "z2xz4", "gf4" (additive part only, so gf4 == z2^2).
    static Group2t parse(const std::string& name);
    std::string name() const;
};

enum class Variant { NLFSR, GFS2, TH };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& name);

struct GfsSpec {
    Variant variant = Variant::NLFSR;
    unsigned m = 2;  // 2^ell blocks
    // NLFSR: h[0] has 2^{t(m-1)} entries; GFS2: m/2 tables of 2^t entries;
    // TH: m-1 tables of 2^t entries (h_2..h_m in order).
    std::vector<std::vector<std::uint32_t>> h;
    std::vector<std::uint32_t> k;  // NLFSR: 1, GFS2: m/2, TH: m-1

    unsigned ell() const;
    void validate(const Group2t& g) const;
};

/// Seeded random tables and keys for the given variant/size.
GfsSpec random_spec(Variant variant, unsigned m, const Group2t& g,
                    std::uint64_t h_seed, std::uint64_t k_seed);

/// Explicit permutation on R^m; state packs alpha_1 in the low t bits.
/// Requires t*m <= 20.
Permutation build_permutation(const GfsSpec& spec, const Group2t& g);

int sign_bruteforce(const GfsSpec& spec, const Group2t& g);

struct SignReport {
    int sign = 0;                 // 0 when undecidable
    bool in_scope = true;         // the closed-form classification applies
    bool used_bruteforce = false; // out-of-scope fallback
    std::string fired_case;
    unsigned t = 0, c = 0, ell = 0;
    std::vector<std::uint64_t> r;  // NLFSR: r_i for i = 0..c
};

SignReport sign_formula(const GfsSpec& spec, const Group2t& g);

struct RhoReport {
    std::uint64_t tau = 0;
    /// cycles_of_length[j] = number of cycles of length 2^j, j = 0..ell.
    std::vector<std::uint64_t> cycles_of_length;
    int sign() const { return (tau & 1) ? -1 : +1; }
};

/// Cycle census and tau of the block rotation rho on (2^t)^{2^ell} points.
/// Requires t * 2^ell <= 24.
RhoReport tau_rho(unsigned t, unsigned ell);

}  // namespace ctk::gfs
