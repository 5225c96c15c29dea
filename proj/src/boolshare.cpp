#include "ctk/boolshare.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace ctk::share {

namespace {

void check_shape(const TruthTable& g, unsigned s) {
    if (s < 1) throw std::invalid_argument("sharing: s must be >= 1");
    if (g.in_bits % s != 0 || g.out_bits % s != 0)
        throw std::invalid_argument("sharing: in/out bits not divisible by s");
    if (g.in_bits / s < 1 || g.out_bits / s < 1)
        throw std::invalid_argument("sharing: empty shares");
    if (g.table.size() != std::size_t(1) << g.in_bits)
        throw std::invalid_argument("sharing: bad table length");
}

std::uint32_t xor_blocks(std::uint32_t v, unsigned block, unsigned count) {
    std::uint32_t out = 0, mask = (std::uint32_t(1) << block) - 1;
    for (unsigned i = 0; i < count; ++i) out ^= (v >> (block * i)) & mask;
    return out;
}

}  // namespace

TruthTable permute_inputs(const TruthTable& g, const std::vector<unsigned>& pi) {
    if (pi.size() != g.in_bits) throw std::invalid_argument("permute_inputs: wrong length");
    TruthTable out;
    out.in_bits = g.in_bits;
    out.out_bits = g.out_bits;
    out.table.resize(g.table.size());
    for (std::size_t z = 0; z < out.table.size(); ++z) {
        std::size_t w = 0;
        for (unsigned p = 0; p < g.in_bits; ++p)
            if (z >> p & 1) w |= std::size_t(1) << pi[p];
        out.table[z] = g.table[w];
    }
    return out;
}

bool verify_sharing(const TruthTable& g, unsigned s, const TruthTable& f,
                    const std::vector<unsigned>& pi) {
    check_shape(g, s);
    const unsigned n = g.in_bits / s, m = g.out_bits / s;
    if (f.in_bits != n || f.out_bits != m) return false;
    TruthTable gp = permute_inputs(g, pi);
    for (std::size_t z = 0; z < gp.table.size(); ++z) {
        std::uint32_t x = xor_blocks(std::uint32_t(z), n, s);
        if (xor_blocks(gp.table[z], m, s) != f.table[x]) return false;
    }
    return true;
}

SharingVerdict is_sharing_ordered(const TruthTable& g, unsigned s) {
    check_shape(g, s);
    const unsigned n = g.in_bits / s, m = g.out_bits / s;
    SharingVerdict v;
    v.pi.resize(g.in_bits);
    std::iota(v.pi.begin(), v.pi.end(), 0u);
    v.f.in_bits = n;
    v.f.out_bits = m;
    std::vector<std::int32_t> memo(std::size_t(1) << n, -1);
    for (std::size_t z = 0; z < g.table.size(); ++z) {
        std::uint32_t x = xor_blocks(std::uint32_t(z), n, s);
        std::uint32_t val = xor_blocks(g.table[z], m, s);
        if (memo[x] < 0)
            memo[x] = std::int32_t(val);
        else if (memo[x] != std::int32_t(val))
            return v;  // is_sharing stays false
    }
    v.is_sharing = true;
    v.f.table.assign(memo.begin(), memo.end());
    return v;
}

SharingVerdict is_sharing_any(const TruthTable& g, unsigned s) {
    check_shape(g, s);
    const unsigned sn = g.in_bits, n = sn / s;
    if (sn > 9) throw std::invalid_argument("is_sharing_any: sn > 9");
    if (s == 1) return is_sharing_ordered(g, 1);

    // Candidates: partitions of the sn bits into s groups of n, groups
    // ordered by smallest element (quotients the s! share swaps); the first
    // group keeps its bits sorted (quotients the n! uniform renamings),
    // the rest take all n! orderings.
    std::vector<unsigned> pi(sn);
    std::vector<std::vector<unsigned>> groups;
    SharingVerdict found;
    bool done = false;

    // within-group orderings for groups 1..s-1
    auto try_orderings = [&](auto&& self, unsigned gi) -> void {
        if (done) return;
        if (gi == s) {
            // permuted slot i*n+j feeds original bit groups[i][j]
            for (unsigned i = 0; i < s; ++i)
                for (unsigned j = 0; j < n; ++j) pi[i * n + j] = groups[i][j];
            SharingVerdict v = is_sharing_ordered(permute_inputs(g, pi), s);
            if (v.is_sharing) {
                v.pi = pi;
                found = v;
                done = true;
            }
            return;
        }
        std::vector<unsigned> order = groups[gi];
        std::sort(order.begin(), order.end());
        do {
            groups[gi] = order;
            self(self, gi + 1);
            if (done) return;
        } while (std::next_permutation(order.begin(), order.end()));
    };

    // build the group partition recursively; each level owns its candidate
    std::vector<bool> used(sn, false);
    auto build = [&](auto&& self, unsigned gi) -> void {
        if (done) return;
        if (gi == s) {
            try_orderings(try_orderings, 1);  // group 0 stays sorted
            return;
        }
        unsigned anchor = 0;
        while (anchor < sn && used[anchor]) ++anchor;
        used[anchor] = true;
        std::vector<unsigned> current = {anchor};
        auto extend = [&](auto&& ext, unsigned start) -> void {
            if (done) return;
            if (current.size() == n) {
                groups.push_back(current);
                self(self, gi + 1);
                groups.pop_back();
                return;
            }
            for (unsigned b = start; b < sn; ++b) {
                if (used[b]) continue;
                used[b] = true;
                current.push_back(b);
                ext(ext, b + 1);
                current.pop_back();
                used[b] = false;
                if (done) return;
            }
        };
        extend(extend, anchor + 1);
        used[anchor] = false;
    };
    build(build, 0);

    if (done) return found;
    SharingVerdict v;
    v.f.in_bits = n;
    v.f.out_bits = g.out_bits / s;
    return v;
}

SharingVerdict anf_sharing_heuristic(const TruthTable& g, unsigned s) {
    check_shape(g, s);
    const unsigned n = g.in_bits / s, m = g.out_bits / s;
    SharingVerdict v;
    v.pi.resize(g.in_bits);
    std::iota(v.pi.begin(), v.pi.end(), 0u);
    v.f.in_bits = n;
    v.f.out_bits = m;
    v.f.table.assign(std::size_t(1) << n, 0);

    // H = xor of output shares, per output bit
    const std::size_t gn = g.table.size();
    std::vector<std::vector<std::uint8_t>> h_anf(m, std::vector<std::uint8_t>(gn));
    for (unsigned bit = 0; bit < m; ++bit) {
        std::vector<std::uint8_t> tt(gn);
        for (std::size_t z = 0; z < gn; ++z)
            tt[z] = std::uint8_t(xor_blocks(g.table[z], m, s) >> bit & 1);
        h_anf[bit] = anf(tt);
    }

    // For each output bit, peel F's monomials from the pure share-0
    // monomials, then compare the full expansion.
    std::vector<std::vector<std::uint8_t>> f_anf(m, std::vector<std::uint8_t>(std::size_t(1) << n, 0));
    for (unsigned bit = 0; bit < m; ++bit) {
        std::vector<std::uint8_t> expansion(gn, 0);
        for (std::size_t mono = 0; mono < (std::size_t(1) << n); ++mono) {
            if (!h_anf[bit][mono]) continue;  // share-0 block holds the monomial bits
            f_anf[bit][mono] = 1;
            // expand prod_j (xor_i z_{i,j}) over the columns of mono
            std::vector<unsigned> cols;
            for (unsigned j = 0; j < n; ++j)
                if (mono >> j & 1) cols.push_back(j);
            std::size_t combos = 1;
            for (std::size_t c = 0; c < cols.size(); ++c) combos *= s;
            for (std::size_t pick = 0; pick < combos; ++pick) {
                std::size_t term = 0, p = pick;
                for (unsigned j : cols) {
                    term |= std::size_t(1) << ((p % s) * n + j);
                    p /= s;
                }
                expansion[term] ^= 1;
            }
        }
        // every monomial of H must be explained by some expansion
        for (std::size_t z = 0; z < gn; ++z)
            if (expansion[z] != h_anf[bit][z]) return v;  // not an ordered sharing
    }
    for (unsigned bit = 0; bit < m; ++bit) {
        std::vector<std::uint8_t> tt = anf(f_anf[bit]);  // involutive: ANF -> table
        for (std::size_t x = 0; x < tt.size(); ++x)
            v.f.table[x] |= std::uint32_t(tt[x]) << bit;
    }
    v.is_sharing = true;
    return v;
}

TruthTable make_sharing(const TruthTable& f, unsigned s, std::uint64_t seed) {
    const unsigned n = f.in_bits, m = f.out_bits;
    TruthTable g;
    g.in_bits = s * n;
    g.out_bits = s * m;
    if (g.in_bits > 24) throw std::invalid_argument("make_sharing: too large");
    g.table.resize(std::size_t(1) << g.in_bits);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, (std::uint32_t(1) << m) - 1);
    for (std::size_t z = 0; z < g.table.size(); ++z) {
        std::uint32_t x = xor_blocks(std::uint32_t(z), n, s);
        std::uint32_t closing = f.table[x], packed = 0;
        for (unsigned i = 0; i + 1 < s; ++i) {
            std::uint32_t r = dist(rng);
            packed |= r << (m * i);
            closing ^= r;
        }
        packed |= closing << (m * (s - 1));
        g.table[z] = packed;
    }
    return g;
}

}  // namespace ctk::share
