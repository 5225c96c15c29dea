#pragma once

#include <cstdint>
#include <vector>

#include "ctk/gf2.hpp"

namespace ctk::share {

/// G has in_bits = s*n, out_bits = s*m; input share i occupies bits
/// [i*n, (i+1)*n) (LSB-first), output share i occupies [i*m, (i+1)*m).
struct SharingVerdict {
    bool is_sharing = false;
    bool conclusive = true;  // false only for an inconclusive heuristic run
    TruthTable f;            // shared function, valid when is_sharing
    /// Input-bit permutation: bit p of the permuted input feeds original
    /// input position pi[p]. Identity for the ordered checker.
    std::vector<unsigned> pi;
};

/// Identity partition: consecutive n-bit blocks are the shares. One pass
/// over 2^{sn} inputs with a 2^n-slot first-seen memo.
SharingVerdict is_sharing_ordered(const TruthTable& g, unsigned s);

/// Searches input-bit permutations modulo the symmetries that preserve the
/// verdict: permuting whole shares (s!) and renaming bit roles uniformly
/// across shares (n!), leaving (sn)!/(s!*n!) coset representatives.
/// Requires s*n <= 9.
SharingVerdict is_sharing_any(const TruthTable& g, unsigned s);

/// ANF peeling on H = xor of output shares: candidate monomial {j1..jd} of F
/// is read off from H's pure share-0 monomial, then the full expansion is
/// compared against H's ANF. Exact for the ordered partition.
SharingVerdict anf_sharing_heuristic(const TruthTable& g, unsigned s);

/// Definition re-check used as the soundness oracle in tests.
bool verify_sharing(const TruthTable& g, unsigned s, const TruthTable& f,
                    const std::vector<unsigned>& pi);

/// Build a sharing G of f with s shares: output share i of G is f applied to
/// per-bit xor masks drawn from the seed, arranged so the xor of output
/// shares equals f(xor of input shares).
TruthTable make_sharing(const TruthTable& f, unsigned s, std::uint64_t seed);

/// Apply an input-bit permutation: result(z) = g(w), bit pi[p] of w = bit p
/// of z.
TruthTable permute_inputs(const TruthTable& g, const std::vector<unsigned>& pi);

}  // namespace ctk::share
