#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "ctk/prf.hpp"

namespace ctk::fpe {

/// Integer domain {0..n-1} with a two-factor split for the Feistel scheme.
struct SplitDomain {
    std::uint64_t n = 0;
    std::uint64_t n1 = 0, n2 = 0;  // n = n1 * n2, composite case
    bool prime = false;
};

/// Factor pair (n1, n2), n1 >= n2 > 1, minimizing |n1 - n2|. Absent when n
/// has no nontrivial split (n prime or < 4).
std::optional<std::pair<std::uint64_t, std::uint64_t>> factor_close(std::uint64_t n);

SplitDomain make_composite_domain(std::uint64_t n);  // throws if no split

struct FeistelParams {
    unsigned rounds = 3;              // at least 3 recommended
    std::uint64_t special_point = 0;  // 'a' for the prime-decrement variant
};

/// Unbalanced Number Feistel bijection on {0..n1*n2-1}. Two PRF calls per
/// round; round constants 2r and 2r+1 go in the high block word.
class FpeComposite {
public:
    FpeComposite(SplitDomain domain, FeistelParams params, const Prf128& prf);

    std::uint64_t encrypt(std::uint64_t x) const;
    std::uint64_t decrypt(std::uint64_t y) const;
    const SplitDomain& domain() const { return domain_; }

private:
    SplitDomain domain_;
    FeistelParams params_;
    const Prf128& prf_;
};

/// Prime modulus, decrement reduction: x = a maps to n-1 (with d dummy PRF
/// call pairs), the rest shift onto {0..n-2} and go through the composite
/// scheme on n-1. PRF call count is the same for every input.
class FpePrimeDec {
public:
    FpePrimeDec(std::uint64_t n, FeistelParams params, const Prf128& prf);

    std::uint64_t encrypt(std::uint64_t x) const;
    std::uint64_t decrypt(std::uint64_t y) const;

private:
    std::uint64_t n_;
    FeistelParams params_;
    FpeComposite inner_;  // on n - 1
    const Prf128& prf_;
};

/// Prime modulus, increment reduction (participant variant): a UNF bijection
/// E on {0..n} built over n+1; output is E(E(x)) when E(x) = n, else E(x).
/// Both evaluations always run, so the call count is constant.
class FpePrimeInc {
public:
    FpePrimeInc(std::uint64_t n, FeistelParams params, const Prf128& prf);

    std::uint64_t encrypt(std::uint64_t x) const;
    std::uint64_t decrypt(std::uint64_t y) const;

private:
    std::uint64_t n_;
    FpeComposite inner_;  // on n + 1
};

}  // namespace ctk::fpe
