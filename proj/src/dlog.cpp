#include "ctk/dlog.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ctk::dlog {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return std::uint64_t((unsigned __int128)a * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            primes.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) primes.push_back(m);
    return primes;
}

bool is_primitive_root(std::uint64_t g, std::uint64_t n) {
    for (auto p : prime_factors(n - 1))
        if (pow_mod(g, (n - 1) / p, n) == 1) return false;
    return true;
}

OracleMachine::OracleMachine(std::uint64_t n, std::uint64_t k, std::uint64_t seed)
    : n_(n), k_(k), enc_(Block128{seed, seed ^ 0x1BD11BDAA9FC1A22ULL}) {
    if (k >= n) throw std::invalid_argument("OracleMachine: k out of range");
}

Block128 OracleMachine::encode(std::uint64_t residue) const {
    return enc_.apply({0, residue});
}

Block128 OracleMachine::query(std::uint64_t x, std::uint64_t d) const {
    if (x >= n_) throw std::invalid_argument("OracleMachine: x out of range");
    return encode(pow_mod(x, d, n_));
}

Block128 OracleMachine::query_secret(std::uint64_t d) const {
    return encode(pow_mod(k_, d, n_));
}

namespace {

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = std::int64_t(m), new_r = std::int64_t(a % m);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (r != 1) throw std::invalid_argument("inv_mod: not invertible");
    return std::uint64_t(t < 0 ? t + std::int64_t(m) : t);
}

// per-prime naive scan: i with Enc(g^{ie}) = Enc(k^e)
std::uint64_t naive_subproblem(const OracleMachine& m, std::uint64_t g, std::uint64_t p,
                               std::uint64_t e) {
    Block128 target = m.query_secret(e);
    for (std::uint64_t i = 0; i < p; ++i)
        if (m.query(g, mul_mod(i, e, m.modulus() - 1)) == target) return i;
    throw std::runtime_error("dlog: no match for prime subproblem (g not primitive?)");
}

std::uint64_t crt_combine(const std::map<std::uint64_t, std::uint64_t>& residues) {
    std::uint64_t x = 0, mod = 1;
    for (auto [p, xp] : residues) {
        // x' = x (mod mod), x' = xp (mod p)
        std::uint64_t diff = (xp + p - x % p) % p;
        x += mul_mod(diff, inv_mod(mod % p, p), p) % p * mod;
        mod *= p;
    }
    return x;
}

}  // namespace

std::uint64_t bsgs_subproblem(const OracleMachine& m, std::uint64_t g, std::uint64_t p,
                              std::uint64_t cofactor) {
    const std::uint64_t order = m.modulus() - 1;
    const std::uint64_t e = cofactor;
    // j must stay invertible mod p, so cap the baby range at p - 1
    const std::uint64_t steps =
        std::min<std::uint64_t>(std::uint64_t(std::ceil(std::sqrt(double(p)))), p - 1);

    // baby steps on powers of the secret: Enc(k^{je}), 1 <= j <= steps;
    // the j = 1 baby doubles as the confirmation target
    std::map<std::string, std::uint64_t> babies;
    Block128 target{};
    for (std::uint64_t j = 1; j <= steps; ++j) {
        Block128 b = m.query_secret(mul_mod(j, e, order));
        if (j == 1) target = b;
        babies.emplace(to_hex(b), j);
    }

    // giant steps on powers of g: Enc(g^{le}), |l| <= steps.
    // A hit Enc(k^{je}) = Enc(g^{le}) means x_p * j = l (mod p).
    for (std::uint64_t l = 0; l <= steps; ++l) {
        for (int sgn = 0; sgn < (l == 0 ? 1 : 2); ++sgn) {
            std::uint64_t lp = sgn == 0 ? l % p : (p - l % p) % p;
            auto it = babies.find(to_hex(m.query(g, mul_mod(lp, e, order))));
            if (it == babies.end()) continue;
            std::uint64_t xp = mul_mod(lp, inv_mod(it->second, p), p);
            // one confirming query against the cached target; a stale hit
            // just continues the scan
            if (m.query(g, mul_mod(xp, e, order)) == target) return xp;
        }
    }
    throw std::runtime_error("bsgs: no collision (invalid parameters)");
}

RecoveryReport pohlig_hellman_recover(const OracleMachine& m, std::uint64_t g, bool use_bsgs) {
    const std::uint64_t n = m.modulus();
    RecoveryReport rep;
    m.reset_query_count();

    if (m.query(0, 1) == m.query_secret(1)) {
        rep.k = 0;
        rep.total_queries = m.query_count();
        return rep;
    }

    for (auto p : prime_factors(n - 1)) {
        std::uint64_t before = m.query_count();
        std::uint64_t e = (n - 1) / p;
        std::uint64_t xp = use_bsgs ? bsgs_subproblem(m, g, p, e) : naive_subproblem(m, g, p, e);
        rep.residues[p] = xp;
        rep.queries_per_prime[p] = m.query_count() - before;
    }

    std::uint64_t x = crt_combine(rep.residues);
    rep.k = pow_mod(g, x, n);
    if (!(m.query(rep.k, 1) == m.query_secret(1)))
        throw std::runtime_error("pohlig_hellman: verification failed (corrupted oracle?)");
    rep.total_queries = m.query_count();
    return rep;
}

RecoveryReport bezout_recover(const OracleMachine& m, std::uint64_t g) {
    const std::uint64_t n = m.modulus();
    const std::uint64_t order = n - 1;
    RecoveryReport rep;
    m.reset_query_count();

    if (m.query(0, 1) == m.query_secret(1)) {
        rep.k = 0;
        rep.total_queries = m.query_count();
        return rep;
    }

    auto primes = prime_factors(order);
    std::vector<std::uint64_t> roots;  // k_i = k^{(n-1)/p_i} mod n
    for (auto p : primes) {
        std::uint64_t before = m.query_count();
        std::uint64_t e = order / p;
        Block128 target = m.query_secret(e);
        bool found = false;
        for (std::uint64_t j = 0; j < p && !found; ++j) {
            std::uint64_t cand_exp = mul_mod(j, e, order);
            if (m.query(g, cand_exp) == target) {
                roots.push_back(pow_mod(g, cand_exp, n));
                rep.residues[p] = j;
                found = true;
            }
        }
        if (!found) throw std::runtime_error("bezout: root not found");
        rep.queries_per_prime[p] = m.query_count() - before;
    }

    // Bezout coefficients b_i with sum a_i b_i = 1, a_i = (n-1)/p_i.
    // Coefficients are kept mod n-1; only the exponent class matters.
    std::vector<std::uint64_t> coeff(primes.size(), 0);
    std::uint64_t g_cur = order / primes[0];
    coeff[0] = 1;
    for (std::size_t i = 1; i < primes.size(); ++i) {
        std::uint64_t a_i = order / primes[i];
        std::int64_t s = 1, new_s = 0, t = 0, new_t = 1;
        std::int64_t r = std::int64_t(a_i), new_r = std::int64_t(g_cur);
        // invariant r = s*a_i + t*g_cur, so gcd = s*a_i + t*g_cur at the end
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::swap(s -= q * new_s, new_s);
            std::swap(t -= q * new_t, new_t);
            std::swap(r -= q * new_r, new_r);
        }
        auto reduce = [&](std::int64_t v) {
            std::int64_t mm = std::int64_t(order);
            std::int64_t red = v % mm;
            return std::uint64_t(red < 0 ? red + mm : red);
        };
        std::uint64_t tt = reduce(t), ss = reduce(s);
        for (std::size_t j = 0; j < i; ++j) coeff[j] = mul_mod(coeff[j], tt, order);
        coeff[i] = ss;
        g_cur = std::uint64_t(r);
    }
    if (g_cur != 1) throw std::runtime_error("bezout: cofactors not coprime");

    std::uint64_t k = 1;
    for (std::size_t i = 0; i < primes.size(); ++i)
        k = mul_mod(k, pow_mod(roots[i], coeff[i], n), n);
    rep.k = k;
    if (!(m.query(rep.k, 1) == m.query_secret(1)))
        throw std::runtime_error("bezout: verification failed");
    rep.total_queries = m.query_count();
    return rep;
}

}  // namespace ctk::dlog
