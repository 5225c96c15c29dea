#include "ctk/permclose.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace ctk::permclose {

std::uint64_t closeness_bruteforce(unsigned n, std::uint32_t alpha) {
    if (n < 1 || n > 16) throw std::invalid_argument("closeness_bruteforce: n must be in [1, 16]");
    const std::uint32_t size = std::uint32_t(1) << n;
    const std::uint32_t mask = size - 1;
    if (alpha >= size) throw std::invalid_argument("closeness_bruteforce: alpha out of range");
    std::vector<std::uint32_t> hist(size, 0);
    for (std::uint32_t x = 0; x < size; ++x)
        ++hist[x ^ ((x + alpha) & mask)];
    std::uint64_t c = 0;
    for (auto h : hist) c += std::uint64_t(h) * h;
    return c;
}

namespace {

std::uint64_t rec(unsigned n, std::uint32_t alpha,
                  std::unordered_map<std::uint64_t, std::uint64_t>& memo) {
    if (n == 1) return 4;
    std::uint64_t key = std::uint64_t(n) << 32 | alpha;
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    // the first (least significant) bit splits the recurrence
    std::uint32_t rest = alpha >> 1;
    std::uint32_t rest_mask = (std::uint32_t(1) << (n - 1)) - 1;
    std::uint64_t value;
    if ((alpha & 1) == 0)
        value = 4 * rec(n - 1, rest, memo);
    else
        value = rec(n - 1, rest, memo) + rec(n - 1, ~rest & rest_mask, memo);
    memo.emplace(key, value);
    return value;
}

}  // namespace

std::uint64_t closeness_recursive(unsigned n, std::uint32_t alpha) {
    if (n < 1 || n > 31) throw std::invalid_argument("closeness_recursive: n must be in [1, 31]");
    if (n < 32 && (std::uint64_t(alpha) >> n))
        throw std::invalid_argument("closeness_recursive: alpha out of range");
    std::unordered_map<std::uint64_t, std::uint64_t> memo;
    return rec(n, alpha, memo);
}

BestAlphas best_alphas(unsigned n) {
    if (n < 1) throw std::invalid_argument("best_alphas: n must be >= 1");
    BestAlphas out;
    if (n == 1) {
        out.minimizers = {0, 1};
        out.c_min = 4;
        return out;
    }
    if (n == 2) {
        out.minimizers = {1, 3};
        out.c_min = 8;
        return out;
    }
    out.c_min = min_closeness(n);
    if (n <= 14) {
        // exhaustive argmin, shares one memo across all alpha
        std::unordered_map<std::uint64_t, std::uint64_t> memo;
        std::uint64_t best = ~std::uint64_t(0);
        for (std::uint32_t a = 0; a < (std::uint32_t(1) << n); ++a) {
            std::uint64_t c = rec(n, a, memo);
            if (c < best) {
                best = c;
                out.minimizers.clear();
            }
            if (c == best) out.minimizers.push_back(a);
        }
        if (best != out.c_min) throw std::logic_error("best_alphas: recurrence mismatch");
        return out;
    }
    // constructed family: first bit 1, alternating middle keyed by bit 2,
    // free last bit
    for (std::uint32_t b2 = 0; b2 < 2; ++b2) {
        for (std::uint32_t bn = 0; bn < 2; ++bn) {
            std::uint32_t a = 1;
            for (unsigned i = 1; i + 1 < n; ++i)
                a |= ((i % 2 == 1 ? b2 : b2 ^ 1) & 1u) << i;
            a |= bn << (n - 1);
            out.minimizers.push_back(a);
        }
    }
    std::sort(out.minimizers.begin(), out.minimizers.end());
    return out;
}

std::uint64_t min_closeness_closed_form(unsigned n) {
    if (n < 1 || n > 40) throw std::invalid_argument("min_closeness_closed_form: n in [1, 40]");
    // (17 + 7 sqrt17)(1 + sqrt17)^n = a + b sqrt17; the conjugate term
    // cancels the sqrt17 part, so C = 2a / (34 * 2^n) = a / (17 * 2^n).
    __int128 a = 1, b = 0;  // (1 + sqrt17)^0
    for (unsigned i = 0; i < n; ++i) {
        __int128 na = a + 17 * b;
        __int128 nb = a + b;
        a = na;
        b = nb;
    }
    __int128 ra = 17 * a + 7 * 17 * b;
    __int128 denom = __int128(17) << n;
    if (ra % denom != 0) throw std::logic_error("closed form: non-integer result");
    return std::uint64_t(ra / denom);
}

std::uint64_t min_closeness(unsigned n) {
    if (n < 1) throw std::invalid_argument("min_closeness: n must be >= 1");
    std::uint64_t prev2 = 4, prev1 = 8;  // C*_1, C*_2
    std::uint64_t value = n == 1 ? prev2 : prev1;
    for (unsigned i = 3; i <= n; ++i) {
        value = prev1 + 4 * prev2;
        prev2 = prev1;
        prev1 = value;
    }
    if (n <= 40 && value != min_closeness_closed_form(n))
        throw std::logic_error("min_closeness: recurrence and closed form disagree");
    return value;
}

}  // namespace ctk::permclose
