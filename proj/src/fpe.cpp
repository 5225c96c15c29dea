#include "ctk/fpe.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ctk::fpe {

namespace {

std::uint64_t block_mod(const Block128& b, std::uint64_t m) {
    unsigned __int128 v = (unsigned __int128)b.hi << 64 | b.lo;
    return std::uint64_t(v % m);
}

// PRF of a domain value with a round constant in the high word.
std::uint64_t round_prf(const Prf128& prf, std::uint64_t value, std::uint64_t constant,
                        std::uint64_t reduce_mod) {
    return block_mod(prf.apply({constant, value}), reduce_mod);
}

}  // namespace

std::optional<std::pair<std::uint64_t, std::uint64_t>> factor_close(std::uint64_t n) {
    for (std::uint64_t d = std::uint64_t(std::sqrt(double(n))) + 1; d >= 2; --d) {
        if (d >= n) continue;
        if (n % d == 0) return std::make_pair(std::max(n / d, d), std::min(n / d, d));
    }
    return std::nullopt;
}

SplitDomain make_composite_domain(std::uint64_t n) {
    auto split = factor_close(n);
    if (!split) throw std::invalid_argument("make_composite_domain: no nontrivial factor split");
    return {n, split->first, split->second, false};
}

FpeComposite::FpeComposite(SplitDomain domain, FeistelParams params, const Prf128& prf)
    : domain_(domain), params_(params), prf_(prf) {
    if (params_.rounds < 1) throw std::invalid_argument("FpeComposite: rounds must be >= 1");
    if (domain_.n1 * domain_.n2 != domain_.n || domain_.n1 < 2 || domain_.n2 < 2)
        throw std::invalid_argument("FpeComposite: bad split");
}

std::uint64_t FpeComposite::encrypt(std::uint64_t x) const {
    if (x >= domain_.n) throw std::invalid_argument("FpeComposite: x out of range");
    std::uint64_t x1 = x / domain_.n2, x2 = x % domain_.n2;
    for (unsigned r = 0; r < params_.rounds; ++r) {
        std::uint64_t y1 = (x1 + round_prf(prf_, x2, 2 * r, domain_.n1)) % domain_.n1;
        std::uint64_t y2 = (x2 + round_prf(prf_, y1, 2 * r + 1, domain_.n2)) % domain_.n2;
        x1 = y1;
        x2 = y2;
    }
    return x1 * domain_.n2 + x2;
}

std::uint64_t FpeComposite::decrypt(std::uint64_t y) const {
    if (y >= domain_.n) throw std::invalid_argument("FpeComposite: y out of range");
    std::uint64_t y1 = y / domain_.n2, y2 = y % domain_.n2;
    for (unsigned r = params_.rounds; r-- > 0;) {
        std::uint64_t x2 = (y2 + domain_.n2 - round_prf(prf_, y1, 2 * r + 1, domain_.n2)) % domain_.n2;
        std::uint64_t x1 = (y1 + domain_.n1 - round_prf(prf_, x2, 2 * r, domain_.n1)) % domain_.n1;
        y1 = x1;
        y2 = x2;
    }
    return y1 * domain_.n2 + y2;
}

FpePrimeDec::FpePrimeDec(std::uint64_t n, FeistelParams params, const Prf128& prf)
    : n_(n), params_(params), inner_(make_composite_domain(n - 1), params, prf), prf_(prf) {
    if (params.special_point >= n)
        throw std::invalid_argument("FpePrimeDec: special point out of range");
}

std::uint64_t FpePrimeDec::encrypt(std::uint64_t x) const {
    if (x >= n_) throw std::invalid_argument("FpePrimeDec: x out of range");
    if (x == params_.special_point) {
        // dummy calls keep the PRF counter identical to the normal path
        for (unsigned r = 0; r < params_.rounds; ++r) {
            round_prf(prf_, 0, 2 * r, n_);
            round_prf(prf_, 0, 2 * r + 1, n_);
        }
        return n_ - 1;
    }
    std::uint64_t shifted = x < params_.special_point ? x : x - 1;
    return inner_.encrypt(shifted);
}

std::uint64_t FpePrimeDec::decrypt(std::uint64_t y) const {
    if (y >= n_) throw std::invalid_argument("FpePrimeDec: y out of range");
    if (y == n_ - 1) {
        for (unsigned r = 0; r < params_.rounds; ++r) {
            round_prf(prf_, 0, 2 * r, n_);
            round_prf(prf_, 0, 2 * r + 1, n_);
        }
        return params_.special_point;
    }
    std::uint64_t shifted = inner_.decrypt(y);
    return shifted < params_.special_point ? shifted : shifted + 1;
}

FpePrimeInc::FpePrimeInc(std::uint64_t n, FeistelParams params, const Prf128& prf)
    : n_(n), inner_(make_composite_domain(n + 1), params, prf) {}

std::uint64_t FpePrimeInc::encrypt(std::uint64_t x) const {
    if (x >= n_) throw std::invalid_argument("FpePrimeInc: x out of range");
    std::uint64_t y = inner_.encrypt(x);
    std::uint64_t z = inner_.encrypt(y == n_ ? n_ : y);  // always evaluated
    return y == n_ ? z : y;
}

std::uint64_t FpePrimeInc::decrypt(std::uint64_t y) const {
    if (y >= n_) throw std::invalid_argument("FpePrimeInc: y out of range");
    std::uint64_t w = inner_.decrypt(y);
    std::uint64_t w2 = inner_.decrypt(w == n_ ? n_ : w);  // always evaluated
    return w == n_ ? w2 : w;
}

}  // namespace ctk::fpe
