#pragma once

#include <cstdint>
#include <vector>

namespace ctk::permclose {

/// C(F_alpha) for F_alpha(x) = x xor ((x + alpha) mod 2^n), counting ordered
/// pairs (x, y) with F(x) = F(y), x = y included. Histogram method, n <= 16.
std::uint64_t closeness_bruteforce(unsigned n, std::uint32_t alpha);

/// Same value through the recurrences C(a0) = 4 C(a), C(a1) = C(a) + C(~a),
/// bases C(0) = C(1) = 4 at n = 1. Exact for n <= 31.
std::uint64_t closeness_recursive(unsigned n, std::uint32_t alpha);

struct BestAlphas {
    std::vector<std::uint32_t> minimizers;
    std::uint64_t c_min = 0;
};

/// Minimizer set: {0, 1} for n = 1, {1, 3} for n = 2, four alternating
/// vectors for n > 2. Cross-checked against exhaustive argmin for n <= 14.
BestAlphas best_alphas(unsigned n);

/// Minimal closeness via C*_n = C*_{n-1} + 4 C*_{n-2}, bases 4, 8. The
/// closed form over Z[sqrt(17)] is evaluated exactly and asserted equal.
std::uint64_t min_closeness(unsigned n);

/// Closed-form evaluation in exact integer arithmetic over Z[sqrt(17)].
std::uint64_t min_closeness_closed_form(unsigned n);

}  // namespace ctk::permclose
