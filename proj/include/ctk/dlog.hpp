#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ctk/prf.hpp"

namespace ctk::dlog {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Distinct prime factors of m (m squarefree for the instances here).
std::vector<std::uint64_t> prime_factors(std::uint64_t m);

/// Simulated cipher machine: query(x, d) returns Enc(x^d mod n), where Enc
/// is a keyed injective 128-bit encoding of residues. The secret k is only
/// reachable through query_secret.
class OracleMachine {
public:
    OracleMachine(std::uint64_t n, std::uint64_t k, std::uint64_t seed);

    std::uint64_t modulus() const { return n_; }
    Block128 query(std::uint64_t x, std::uint64_t d) const;
    Block128 query_secret(std::uint64_t d) const;
    std::uint64_t query_count() const { return enc_.call_count(); }
    void reset_query_count() const { enc_.reset_call_count(); }

private:
    Block128 encode(std::uint64_t residue) const;

    std::uint64_t n_, k_;
    ArxPrf enc_;
};

struct RecoveryReport {
    std::uint64_t k = 0;
    std::uint64_t total_queries = 0;
    std::map<std::uint64_t, std::uint64_t> residues;           // p -> x mod p
    std::map<std::uint64_t, std::uint64_t> queries_per_prime;  // p -> queries used
};

/// Pohlig-Hellman against the encoding oracle: per-prime naive scan of
/// Enc(g^{i(n-1)/p}) against Enc(k^{(n-1)/p}), then CRT.
RecoveryReport pohlig_hellman_recover(const OracleMachine& m, std::uint64_t g, bool use_bsgs);

/// Equality-only baby-step giant-step for one prime p | n-1: finds (j, l),
/// 1 <= j <= ceil(sqrt p), |l| <= ceil(sqrt p), with Enc(k^{je}) = Enc(g^{le})
/// and returns x_p = l * j^{-1} mod p.
std::uint64_t bsgs_subproblem(const OracleMachine& m, std::uint64_t g, std::uint64_t p,
                              std::uint64_t cofactor);

/// The root-combination strategy: k_i = k^{(n-1)/p_i} found among the p_i-th
/// roots of unity, recombined through Bezout coefficients of the a_i.
RecoveryReport bezout_recover(const OracleMachine& m, std::uint64_t g);

bool is_primitive_root(std::uint64_t g, std::uint64_t n);

}  // namespace ctk::dlog
