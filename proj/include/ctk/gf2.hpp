#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctk {

/// Dense bit vector, bit i is the coefficient of 2^i (LSB-first).
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    static BitVec from_uint(std::uint64_t value, std::size_t len);
    static BitVec from_string(const std::string& bits);  // "0101", index 0 first

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= m; else words_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void xor_with(const BitVec& other);
    bool is_zero() const;
    std::size_t popcount() const;
    bool dot(const BitVec& other) const;  // parity of AND

    bool operator==(const BitVec& other) const { return len_ == other.len_ && words_ == other.words_; }

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Row-major matrix over GF(2).
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BitVec& row(std::size_t r) { return data_[r]; }
    const BitVec& row(std::size_t r) const { return data_[r]; }
    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { data_[r].set(c, v); }

    BitVec multiply(const BitVec& x) const;
    std::size_t rank() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVec> data_;
};

/// Affine solution set of A x = b: a particular solution (absent if
/// inconsistent) plus a basis of the nullspace of A.
struct Gf2Solution {
    std::optional<BitVec> particular;
    std::vector<BitVec> nullspace_basis;

    bool consistent() const { return particular.has_value(); }
    /// True iff the functional f has the same value over the whole
    /// solution set, i.e. f is orthogonal to the nullspace.
    bool determines(const BitVec& f) const;
};

/// Gaussian elimination with word-wide xor row ops. Pivot choice is the
/// lowest row index with a set pivot bit, so output is deterministic.
Gf2Solution gf2_solve(const Gf2Matrix& a, const BitVec& b);

/// Moebius transform of a single-output truth table (length 2^n).
/// Involutive: anf(anf(t)) = t.
std::vector<std::uint8_t> anf(const std::vector<std::uint8_t>& table);

/// GF(2^n) with a fixed irreducible modulus, n in [2, 16].
class FieldGF2n {
public:
    explicit FieldGF2n(unsigned n);                    // canonical modulus
    FieldGF2n(unsigned n, std::uint32_t modulus);      // custom modulus, verified

    unsigned degree() const { return n_; }
    std::uint32_t modulus() const { return modulus_; }
    std::uint32_t order() const { return std::uint32_t(1) << n_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow(std::uint32_t x, std::uint64_t d) const;

    static std::uint32_t default_modulus(unsigned n);
    static bool is_irreducible(std::uint32_t poly, unsigned n);

private:
    unsigned n_;
    std::uint32_t modulus_;
};

/// Bijection on [0, n).
class Permutation {
public:
    explicit Permutation(std::vector<std::uint32_t> map);
    static Permutation identity(std::size_t n);

    std::size_t size() const { return map_.size(); }
    std::uint32_t operator()(std::size_t i) const { return map_[i]; }
    const std::vector<std::uint32_t>& map() const { return map_; }

    Permutation compose(const Permutation& then) const;  // this followed by then

    /// Cycle lengths of the decomposition, descending.
    std::vector<std::size_t> cycle_lengths() const;
    /// tau = sum of cycle lengths minus number of cycles.
    std::uint64_t tau() const;
    int sign() const { return (tau() & 1) ? -1 : +1; }

private:
    std::vector<std::uint32_t> map_;
};

/// Truth-table text format: first line "n m"; then 2^n lines, each the
/// output in lowercase hex for inputs in increasing order (LSB-first).
struct TruthTable {
    unsigned in_bits = 0;
    unsigned out_bits = 0;
    std::vector<std::uint32_t> table;
};

TruthTable read_truth_table(std::istream& in);
void write_truth_table(std::ostream& out, const TruthTable& t);

}  // namespace ctk
