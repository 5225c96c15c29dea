#include "ctk/boolanalysis.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>

namespace ctk::boolfn {

void Sbox::validate() const {
    if (n < 1 || n > 16) throw std::invalid_argument("Sbox: n must be in [1, 16]");
    if (table.size() != std::size_t(1) << n) throw std::invalid_argument("Sbox: bad table length");
    for (auto v : table)
        if (v >> n) throw std::invalid_argument("Sbox: entry out of range");
}

Sbox students_sbox() {
    return Sbox{4, {0x3, 0xe, 0x6, 0x8, 0x0, 0xc, 0xb, 0x4,
                    0x1, 0xd, 0x5, 0xa, 0x7, 0x9, 0xf, 0x2}};
}

unsigned differential_uniformity(const Sbox& f) {
    f.validate();
    const std::size_t size = f.table.size();
    unsigned best = 0;
    std::vector<std::uint32_t> count(size);
    for (std::size_t a = 1; a < size; ++a) {
        std::fill(count.begin(), count.end(), 0);
        for (std::size_t x = 0; x < size; ++x)
            ++count[f.table[x] ^ f.table[x ^ a]];
        best = std::max(best, *std::max_element(count.begin(), count.end()));
    }
    return best;
}

bool is_apn(const Sbox& f) { return differential_uniformity(f) == 2; }

Sbox power_map(const FieldGF2n& field, std::uint64_t d) {
    Sbox f;
    f.n = field.degree();
    f.table.resize(field.order());
    for (std::uint32_t x = 0; x < field.order(); ++x) f.table[x] = field.pow(x, d);
    return f;
}

std::optional<std::uint64_t> kasami_exponent(unsigned n, unsigned i) {
    if (i < 2 || 2 * i > n || std::gcd(i, n) != 1) return std::nullopt;
    return (std::uint64_t(1) << (2 * i)) - (std::uint64_t(1) << i) + 1;
}

std::optional<std::uint64_t> welch_exponent(unsigned n, unsigned) {
    if (n < 3 || n % 2 == 0) return std::nullopt;
    unsigned t = (n - 1) / 2;
    return (std::uint64_t(1) << t) + 3;
}

std::optional<std::uint64_t> niho_exponent(unsigned n, unsigned) {
    if (n < 3 || n % 2 == 0) return std::nullopt;
    unsigned t = (n - 1) / 2;
    if (t % 2 == 0) return (std::uint64_t(1) << t) + (std::uint64_t(1) << (t / 2)) - 1;
    return (std::uint64_t(1) << t) + (std::uint64_t(1) << ((3 * t + 1) / 2)) - 1;
}

std::optional<std::uint64_t> inverse_exponent(unsigned n, unsigned) {
    if (n < 3 || n % 2 == 0) return std::nullopt;
    unsigned t = (n - 1) / 2;
    return (std::uint64_t(1) << (2 * t)) - 1;
}

std::optional<std::uint64_t> dobbertin_exponent(unsigned n, unsigned) {
    if (n % 5 != 0 || n == 0) return std::nullopt;
    unsigned i = n / 5;
    return (std::uint64_t(1) << (4 * i)) + (std::uint64_t(1) << (3 * i)) +
           (std::uint64_t(1) << (2 * i)) + (std::uint64_t(1) << i) - 1;
}

const std::vector<ApnFamily>& apn_catalog() {
    static const std::vector<ApnFamily> catalog = {
        {"kasami", kasami_exponent},     {"welch", welch_exponent},
        {"niho", niho_exponent},         {"inverse", inverse_exponent},
        {"dobbertin", dobbertin_exponent},
    };
    return catalog;
}

std::uint32_t AffineWitness::apply(std::uint32_t x) const {
    std::uint32_t y = constant;
    for (std::size_t j = 0; j < linear.size(); ++j)
        if (x >> j & 1) y ^= linear[j];
    return y;
}

AffineWitness distance_to_affine(const Sbox& f) {
    f.validate();
    if (f.n > 4) throw std::invalid_argument("distance_to_affine: n > 4");
    const unsigned n = f.n;
    const std::uint32_t size = std::uint32_t(1) << n;

    AffineWitness best;
    best.distance = size + 1;
    std::vector<std::uint32_t> count(size);
    std::vector<std::uint32_t> lx(size);
    const std::uint64_t l_total = std::uint64_t(1) << (n * n);
    for (std::uint64_t lcode = 0; lcode < l_total; ++lcode) {
        // columns packed n bits each, column 0 in the low bits
        std::uint32_t cols[4];
        for (unsigned j = 0; j < n; ++j) cols[j] = std::uint32_t(lcode >> (n * j)) & (size - 1);
        lx[0] = 0;
        for (std::uint32_t x = 1; x < size; ++x) {
            unsigned low = unsigned(std::countr_zero(x));
            lx[x] = lx[x & (x - 1)] ^ cols[low];
        }
        // best constant for this L is the most frequent F(x) ^ Lx
        std::fill(count.begin(), count.end(), 0);
        for (std::uint32_t x = 0; x < size; ++x) ++count[f.table[x] ^ lx[x]];
        auto it = std::max_element(count.begin(), count.end());
        unsigned dist = size - *it;
        if (dist < best.distance) {
            best.distance = dist;
            best.constant = std::uint32_t(it - count.begin());
            best.linear.assign(cols, cols + n);
            if (dist == 0) break;
        }
    }
    return best;
}

std::vector<std::uint8_t> component_anf(const Sbox& f, std::uint32_t u) {
    f.validate();
    if (u >> f.n) throw std::invalid_argument("component_anf: mask out of range");
    std::vector<std::uint8_t> tt(f.table.size());
    for (std::size_t x = 0; x < tt.size(); ++x)
        tt[x] = std::uint8_t(std::popcount(f.table[x] & u) & 1);
    return anf(tt);
}

std::uint32_t students_cipher(const Sbox& s, const std::vector<std::uint8_t>& key_nibbles,
                              std::uint32_t x) {
    if (key_nibbles.size() < 2) throw std::invalid_argument("students_cipher: need r+1 nibbles");
    const std::size_t rounds = key_nibbles.size() - 1;
    for (std::size_t i = 0; i < rounds; ++i) x = s.table[(x ^ key_nibbles[i]) & 0xF];
    return x ^ key_nibbles[rounds];
}

std::vector<std::uint8_t> random_letter_key(unsigned rounds, std::uint64_t seed) {
    if (rounds % 2 == 0) throw std::invalid_argument("random_letter_key: rounds must be odd");
    static const char* letters =
        "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, 51);
    std::vector<std::uint8_t> nibbles;
    nibbles.reserve(rounds + 1);
    while (nibbles.size() < rounds + 1) {
        std::uint8_t ch = std::uint8_t(letters[dist(rng)]);
        nibbles.push_back(ch >> 4);
        nibbles.push_back(ch & 0xF);
    }
    return nibbles;
}

ContradictionVerdict students_contradiction(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
    ContradictionVerdict v;
    auto f = [](std::uint32_t x) {  // x1 x2 ^ x3 with x1 the MSB
        return int(((x >> 3) & (x >> 2) & 1) ^ (x >> 1 & 1));
    };
    auto dot_u = [](std::uint32_t y) { return int(std::popcount(y & 0xCu) & 1); };
    for (auto [x, y] : pairs) {
        if (x > 0xF || y > 0xF) throw std::invalid_argument("students_contradiction: not nibbles");
        v.constants.push_back(f(x) ^ dot_u(y));
        v.refined_constants.push_back(f(x) ^ int(x >> 3 & 1) ^ dot_u(y));
    }
    // only the exact invariant is a sound distinguisher
    for (std::size_t i = 1; i < v.refined_constants.size(); ++i)
        if (v.refined_constants[i] != v.refined_constants[0]) v.contradiction = true;
    return v;
}

bool is_permutation_l1_l2(const Sbox& f, const std::vector<std::uint32_t>& l1,
                          const std::vector<std::uint32_t>& l2) {
    f.validate();
    const std::size_t size = f.table.size();
    if (l1.size() != size || l2.size() != size)
        throw std::invalid_argument("is_permutation_l1_l2: table sizes must match 2^n");
    std::vector<bool> seen(size, false);
    for (std::size_t x = 0; x < size; ++x) {
        std::uint32_t y = l1[x] ^ l2[f.table[x]];
        if (seen[y]) return false;
        seen[y] = true;
    }
    return true;
}

}  // namespace ctk::boolfn
