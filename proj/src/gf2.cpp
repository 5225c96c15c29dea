#include "ctk/gf2.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace ctk {

BitVec BitVec::from_uint(std::uint64_t value, std::size_t len) {
    BitVec v(len);
    if (len > 0) {
        if (len < 64) value &= (std::uint64_t(1) << len) - 1;
        v.words_[0] = value;
    }
    return v;
}

BitVec BitVec::from_string(const std::string& bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') v.set(i, true);
        else if (bits[i] != '0') throw std::invalid_argument("BitVec: expected '0' or '1'");
    }
    return v;
}

void BitVec::xor_with(const BitVec& other) {
    if (len_ != other.len_) throw std::invalid_argument("BitVec: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
}

bool BitVec::is_zero() const {
    for (auto w : words_) if (w) return false;
    return true;
}

std::size_t BitVec::popcount() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool BitVec::dot(const BitVec& other) const {
    if (len_ != other.len_) throw std::invalid_argument("BitVec: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1;
}

BitVec Gf2Matrix::multiply(const BitVec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("Gf2Matrix: dimension mismatch");
    BitVec y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) y.set(r, data_[r].dot(x));
    return y;
}

std::size_t Gf2Matrix::rank() const {
    std::vector<BitVec> work = data_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows_ && !work[pivot].get(col)) ++pivot;
        if (pivot == rows_) continue;
        std::swap(work[rank], work[pivot]);
        for (std::size_t r = 0; r < rows_; ++r)
            if (r != rank && work[r].get(col)) work[r].xor_with(work[rank]);
        ++rank;
    }
    return rank;
}

bool Gf2Solution::determines(const BitVec& f) const {
    for (const auto& v : nullspace_basis)
        if (f.dot(v)) return false;
    return true;
}

Gf2Solution gf2_solve(const Gf2Matrix& a, const BitVec& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("gf2_solve: dimension mismatch");
    const std::size_t rows = a.rows(), cols = a.cols();

    // Augmented rows: [A | b].
    std::vector<BitVec> aug(rows, BitVec(cols + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        aug[r] = BitVec(cols + 1);
        for (std::size_t w = 0; w < a.row(r).words().size(); ++w)
            aug[r].words()[w] = a.row(r).words()[w];
        // clear any padding bits beyond cols before writing b
        if (cols % 64) {
            std::uint64_t mask = (std::uint64_t(1) << (cols % 64)) - 1;
            aug[r].words()[cols / 64] &= mask;
        }
        aug[r].set(cols, b.get(r));
    }

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && !aug[pivot].get(col)) ++pivot;
        if (pivot == rows) continue;
        std::swap(aug[rank], aug[pivot]);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rank && aug[r].get(col)) aug[r].xor_with(aug[rank]);
        pivot_col.push_back(col);
        ++rank;
    }

    Gf2Solution sol;
    for (std::size_t r = rank; r < rows; ++r)
        if (aug[r].get(cols)) return sol;  // 0 = 1 row: inconsistent

    BitVec particular(cols);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t r = 0; r < rank; ++r) {
        is_pivot[pivot_col[r]] = true;
        particular.set(pivot_col[r], aug[r].get(cols));
    }
    sol.particular = particular;

    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        BitVec v(cols);
        v.set(free_col, true);
        for (std::size_t r = 0; r < rank; ++r)
            if (aug[r].get(free_col)) v.set(pivot_col[r], true);
        sol.nullspace_basis.push_back(std::move(v));
    }
    return sol;
}

std::vector<std::uint8_t> anf(const std::vector<std::uint8_t>& table) {
    const std::size_t n = table.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("anf: table length must be a power of two");
    std::vector<std::uint8_t> c = table;
    for (std::size_t step = 1; step < n; step <<= 1)
        for (std::size_t block = 0; block < n; block += step << 1)
            for (std::size_t i = block; i < block + step; ++i)
                c[i + step] ^= c[i];
    return c;
}

namespace {
// One canonical irreducible polynomial per degree (bitmask incl. leading term).
constexpr std::uint32_t kModuli[17] = {
    0, 0,
    0x7,     // n=2:  x^2+x+1
    0xB,     // n=3:  x^3+x+1
    0x13,    // n=4:  x^4+x+1
    0x25,    // n=5:  x^5+x^2+1
    0x43,    // n=6:  x^6+x+1
    0x83,    // n=7:  x^7+x+1
    0x11B,   // n=8:  x^8+x^4+x^3+x+1
    0x211,   // n=9:  x^9+x^4+1
    0x409,   // n=10: x^10+x^3+1
    0x805,   // n=11: x^11+x^2+1
    0x1053,  // n=12: x^12+x^6+x^4+x+1
    0x201B,  // n=13: x^13+x^4+x^3+x+1
    0x4143,  // n=14: x^14+x^8+x^6+x+1
    0x8003,  // n=15: x^15+x+1
    0x1002D, // n=16: x^16+x^5+x^3+x^2+1
};

unsigned poly_degree(std::uint64_t p) {
    unsigned d = 0;
    while (p > 1) { p >>= 1; ++d; }
    return d;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
    unsigned dm = poly_degree(m);
    while (a >> dm) {
        unsigned da = poly_degree(a);
        a ^= m << (da - dm);
    }
    return a;
}
}  // namespace

std::uint32_t FieldGF2n::default_modulus(unsigned n) {
    if (n < 2 || n > 16) throw std::invalid_argument("FieldGF2n: degree must be in [2, 16]");
    return kModuli[n];
}

bool FieldGF2n::is_irreducible(std::uint32_t poly, unsigned n) {
    if (poly_degree(poly) != n) return false;
    // Exhaustive divisor check, enough for n <= 16.
    for (std::uint64_t d = 2; poly_degree(d) <= n / 2; ++d)
        if (poly_mod(poly, d) == 0) return false;
    return true;
}

FieldGF2n::FieldGF2n(unsigned n) : FieldGF2n(n, default_modulus(n)) {}

FieldGF2n::FieldGF2n(unsigned n, std::uint32_t modulus) : n_(n), modulus_(modulus) {
    if (n < 2 || n > 16) throw std::invalid_argument("FieldGF2n: degree must be in [2, 16]");
    if (!is_irreducible(modulus, n)) throw std::invalid_argument("FieldGF2n: modulus is reducible");
}

std::uint32_t FieldGF2n::mul(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t acc = 0;
    std::uint64_t aa = a;
    while (b) {
        if (b & 1) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    return std::uint32_t(poly_mod(acc, modulus_));
}

std::uint32_t FieldGF2n::pow(std::uint32_t x, std::uint64_t d) const {
    std::uint32_t result = 1;
    std::uint32_t base = x;
    while (d) {
        if (d & 1) result = mul(result, base);
        base = mul(base, base);
        d >>= 1;
    }
    return result;
}

Permutation::Permutation(std::vector<std::uint32_t> map) : map_(std::move(map)) {
    std::vector<bool> seen(map_.size(), false);
    for (auto v : map_) {
        if (v >= map_.size() || seen[v]) throw std::invalid_argument("Permutation: not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::uint32_t> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = std::uint32_t(i);
    return Permutation(std::move(m));
}

Permutation Permutation::compose(const Permutation& then) const {
    if (size() != then.size()) throw std::invalid_argument("Permutation: size mismatch");
    std::vector<std::uint32_t> m(size());
    for (std::size_t i = 0; i < size(); ++i) m[i] = then.map_[map_[i]];
    return Permutation(std::move(m));
}

std::vector<std::size_t> Permutation::cycle_lengths() const {
    std::vector<bool> seen(map_.size(), false);
    std::vector<std::size_t> lens;
    for (std::size_t i = 0; i < map_.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = map_[j];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
}

std::uint64_t Permutation::tau() const {
    auto lens = cycle_lengths();
    std::uint64_t t = 0;
    for (auto l : lens) t += l - 1;
    return t;
}

TruthTable read_truth_table(std::istream& in) {
    TruthTable t;
    if (!(in >> t.in_bits >> t.out_bits)) throw std::runtime_error("truth table: bad header");
    if (t.in_bits > 24) throw std::runtime_error("truth table: too many input bits");
    std::size_t count = std::size_t(1) << t.in_bits;
    t.table.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::string tok;
        if (!(in >> tok)) throw std::runtime_error("truth table: truncated");
        t.table[i] = std::uint32_t(std::stoul(tok, nullptr, 16));
        if (t.out_bits < 32 && t.table[i] >> t.out_bits)
            throw std::runtime_error("truth table: entry out of range");
    }
    return t;
}

void write_truth_table(std::ostream& out, const TruthTable& t) {
    out << t.in_bits << ' ' << t.out_bits << '\n';
    for (auto v : t.table) out << std::hex << v << std::dec << '\n';
}

}  // namespace ctk
