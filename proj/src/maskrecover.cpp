#include "ctk/maskrecover.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

namespace ctk::mask {

void SharingParams::validate() const {
    if (chunk_bits != 5) throw std::invalid_argument("SharingParams: chunk must be 5 bits");
    if (message_bits % chunk_bits != 0)
        throw std::invalid_argument("SharingParams: message bits not divisible by chunk");
    if (total_rows != 2 * share_count)
        throw std::invalid_argument("SharingParams: rows must be 2K");
    if (prefix_bits >= message_bits)
        throw std::invalid_argument("SharingParams: prefix must leave a suffix");
    // linearized variable count must be covered by the known-chunk equations
    if (prefix_bits / chunk_bits < total_rows * 32)
        throw std::invalid_argument("SharingParams: too few known chunks for linearization");
}

namespace {

std::uint8_t symbol_index(char c) {
    for (std::uint8_t i = 0; i < 32; ++i)
        if (kAlphabet[i] == c) return i;
    throw std::invalid_argument(std::string("instance: bad symbol '") + c + "'");
}

}  // namespace

GeneratedInstance generate_instance(std::uint64_t seed, const SharingParams& params) {
    params.validate();
    std::mt19937_64 rng(seed);
    const std::size_t W = params.message_bits;
    const std::size_t K = params.share_count;
    const std::size_t rows = params.total_rows;
    const std::size_t sym_per_row = params.symbols_per_row();

    GeneratedInstance out;
    out.instance.params = params;

    BitVec y(W);
    for (std::size_t i = 0; i < W; ++i) y.set(i, rng() & 1);
    out.witness.full_message = y;

    // K-1 random shares, the last one closes the xor; then K random decoys.
    std::vector<BitVec> vectors(rows, BitVec(W));
    for (std::size_t r = 0; r + 1 < K; ++r)
        for (std::size_t i = 0; i < W; ++i) vectors[r].set(i, rng() & 1);
    vectors[K - 1] = y;
    for (std::size_t r = 0; r + 1 < K; ++r) vectors[K - 1].xor_with(vectors[r]);
    for (std::size_t r = K; r < rows; ++r)
        for (std::size_t i = 0; i < W; ++i) vectors[r].set(i, rng() & 1);

    // sigma: destination row of original vector r
    std::vector<std::uint32_t> sigma(rows);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    out.witness.row_shuffle = sigma;
    for (std::size_t r = 0; r < K; ++r) out.witness.share_rows.push_back(sigma[r]);
    std::sort(out.witness.share_rows.begin(), out.witness.share_rows.end());

    // rho: random bijection from 5-bit chunks to alphabet indices
    std::array<std::uint8_t, 32> rho{};
    std::iota(rho.begin(), rho.end(), std::uint8_t(0));
    std::shuffle(rho.begin(), rho.end(), rng);
    out.witness.encoding = rho;

    out.instance.rows.assign(rows, std::string(sym_per_row, '0'));
    for (std::size_t r = 0; r < rows; ++r) {
        const BitVec& v = vectors[r];
        std::string& dst = out.instance.rows[sigma[r]];
        for (std::size_t j = 0; j < sym_per_row; ++j) {
            std::uint8_t chunk = 0;
            for (std::size_t b = 0; b < 5; ++b)
                chunk |= std::uint8_t(v.get(5 * j + b)) << b;
            dst[j] = kAlphabet[rho[chunk]];
        }
    }

    out.instance.prefix = BitVec(params.prefix_bits);
    for (std::size_t i = 0; i < params.prefix_bits; ++i)
        out.instance.prefix.set(i, y.get(i));
    return out;
}

AttackResult attack(const SharingInstance& instance) {
    const SharingParams& p = instance.params;
    p.validate();
    const std::size_t rows = p.total_rows;
    if (instance.rows.size() != rows) throw std::invalid_argument("attack: wrong row count");
    const std::size_t sym_per_row = p.symbols_per_row();
    for (const auto& row : instance.rows)
        if (row.size() != sym_per_row) throw std::invalid_argument("attack: wrong row length");

    const std::size_t vars = rows * 32;  // w_{i,c} = t_i * m_c, per offset
    const std::size_t known_chunks = p.prefix_bits / p.chunk_bits;  // fully known ones
    const std::size_t first_unknown_bit = p.prefix_bits;

    // pre-decode symbols to indices
    std::vector<std::vector<std::uint8_t>> sym(rows, std::vector<std::uint8_t>(sym_per_row));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t j = 0; j < sym_per_row; ++j)
            sym[r][j] = symbol_index(instance.rows[r][j]);

    AttackResult res;
    res.suffix = BitVec(p.suffix_bits());

    auto chunk_functional = [&](std::size_t j) {
        BitVec f(vars);
        for (std::size_t r = 0; r < rows; ++r) f.flip(r * 32 + sym[r][j]);
        return f;
    };

    std::vector<Gf2Solution> solutions(p.chunk_bits);
    for (std::size_t offset = 0; offset < p.chunk_bits; ++offset) {
        Gf2Matrix a(known_chunks, vars);
        BitVec b(known_chunks);
        for (std::size_t j = 0; j < known_chunks; ++j) {
            a.row(j) = chunk_functional(j);
            b.set(j, instance.prefix.get(p.chunk_bits * j + offset));
        }
        solutions[offset] = gf2_solve(a, b);
        if (!solutions[offset].consistent())
            throw std::runtime_error("attack: inconsistent system (malformed instance)");
    }

    for (std::size_t bit = first_unknown_bit; bit < p.message_bits; ++bit) {
        std::size_t j = bit / p.chunk_bits;
        std::size_t offset = bit % p.chunk_bits;
        const Gf2Solution& sol = solutions[offset];
        BitVec f = chunk_functional(j);
        std::size_t out_idx = bit - first_unknown_bit;
        if (!sol.determines(f)) {
            res.ambiguous_bits.push_back(out_idx);
            continue;
        }
        res.suffix.set(out_idx, f.dot(*sol.particular));
    }
    res.recovered = res.ambiguous_bits.empty();

    // Share-row identification. Every equation touches exactly one variable
    // per row block, so complementing a whole 32-column block flips each
    // equation once; sums over even subsets of blocks span the nullspace.
    // Modulo those directions the product solution w = t_i * m_c has a
    // balanced block (m is a bit of a bijective symbol encoding, weight 16)
    // exactly on share rows and a constant block (weight 0 or 32) on decoys,
    // so block weight classifies rows in any solution. We claim the
    // classification only when the computed nullspace is confined to
    // constant-block vectors and all offsets agree.
    auto block_weight = [&](const BitVec& v, std::size_t r) {
        std::size_t w = 0;
        for (std::size_t c = 0; c < 32; ++c) w += v.get(r * 32 + c);
        return w;
    };
    res.share_rows_determined = true;
    for (const Gf2Solution& sol : solutions) {
        for (const BitVec& nv : sol.nullspace_basis)
            for (std::size_t r = 0; r < rows && res.share_rows_determined; ++r) {
                std::size_t w = block_weight(nv, r);
                if (w != 0 && w != 32) res.share_rows_determined = false;
            }
        if (!res.share_rows_determined) break;
    }
    if (res.share_rows_determined) {
        std::vector<bool> is_share(rows, false);
        for (std::size_t off = 0; off < p.chunk_bits && res.share_rows_determined; ++off) {
            for (std::size_t r = 0; r < rows; ++r) {
                std::size_t w = block_weight(*solutions[off].particular, r);
                bool balanced = (w != 0 && w != 32);
                if (balanced && w != 16) res.share_rows_determined = false;
                if (off == 0)
                    is_share[r] = balanced;
                else if (is_share[r] != balanced)
                    res.share_rows_determined = false;
            }
        }
        if (res.share_rows_determined)
            for (std::size_t r = 0; r < rows; ++r)
                if (is_share[r]) res.share_rows.push_back(r);
    }
    return res;
}

void write_instance(std::ostream& out, const SharingInstance& instance) {
    for (std::size_t i = 0; i < instance.prefix.size(); ++i)
        out << (instance.prefix.get(i) ? '1' : '0');
    out << '\n';
    for (const auto& row : instance.rows) out << row << '\n';
}

SharingInstance read_instance(std::istream& in) {
    SharingInstance inst;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("instance: empty file");
    inst.params.prefix_bits = line.size();
    inst.prefix = BitVec::from_string(line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        inst.rows.push_back(line);
    }
    if (inst.rows.empty()) throw std::runtime_error("instance: no rows");
    inst.params.total_rows = inst.rows.size();
    inst.params.share_count = inst.params.total_rows / 2;
    inst.params.chunk_bits = 5;
    inst.params.message_bits = inst.rows.front().size() * 5;
    return inst;
}

}  // namespace ctk::mask
