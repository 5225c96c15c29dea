#include "ctk/puzzles.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ctk::puzzles {

std::optional<GenCostResult> min_generation_cost(std::uint64_t target_len) {
    if (target_len == 0) throw std::invalid_argument("min_generation_cost: length must be >= 1");
    constexpr std::uint64_t kInf = ~std::uint64_t(0);
    std::vector<std::uint64_t> cost(target_len + 1, kInf);
    std::vector<std::int8_t> back(target_len + 1, -1);  // 0 = +4, 1 = x3
    cost[1] = 1;
    for (std::uint64_t len = 1; len <= target_len; ++len) {
        if (cost[len] == kInf) continue;
        if (len + 4 <= target_len && cost[len] + 2 < cost[len + 4]) {
            cost[len + 4] = cost[len] + 2;
            back[len + 4] = 0;
        }
        if (len <= target_len / 3 && cost[len] + 5 < cost[len * 3]) {
            cost[len * 3] = cost[len] + 5;
            back[len * 3] = 1;
        }
    }
    if (cost[target_len] == kInf) return std::nullopt;
    GenCostResult res;
    res.cost = cost[target_len];
    for (std::uint64_t len = target_len; len != 1;) {
        if (back[len] == 0) {
            res.ops.push_back(GenOp::Plus4);
            len -= 4;
        } else {
            res.ops.push_back(GenOp::Times3);
            len /= 3;
        }
    }
    std::reverse(res.ops.begin(), res.ops.end());
    return res;
}

std::string fib_string(unsigned n) {
    if (n < 1 || n > 30) throw std::invalid_argument("fib_string: n must be in [1, 30]");
    std::string prev = "0", cur = "1";  // A_1, A_2
    if (n == 1) return prev;
    for (unsigned i = 3; i <= n; ++i) {
        std::string next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<std::int8_t> fib_ternary(unsigned n) {
    std::string a = fib_string(n);
    std::size_t m = a.size();
    std::vector<std::int8_t> b((m + 1) / 2);
    for (std::size_t i = 0; 2 * i + 1 < m; ++i)
        b[i] = std::int8_t((a[2 * i] - '0') - (a[2 * i + 1] - '0'));
    if (m % 2) b[m / 2] = std::int8_t(a[m - 1] - '0');
    return b;
}

bool fib_balanced_direct(unsigned n) {
    int ones = 0, minus = 0;
    for (auto v : fib_ternary(n)) {
        if (v == 1) ++ones;
        else if (v == -1) ++minus;
    }
    return ones == minus;
}

unsigned fib_residue_mod11(unsigned n) {
    // A_n = (-1)^{F_{n-2}} A_{n-1} + A_{n-2} (mod 11); F parity has period 3
    // (F_k even iff 3 | k), with F_1 = F_2 = 1.
    if (n == 1) return 0;
    if (n == 2) return 1;
    unsigned prev2 = 0, prev1 = 1;  // A_1, A_2
    for (unsigned i = 3; i <= n; ++i) {
        bool f_even = (i - 2) % 3 == 0;
        unsigned sign_term = f_even ? prev1 : (11 - prev1) % 11;
        unsigned cur = (sign_term + prev2) % 11;
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

bool fib_balanced_recurrence(unsigned n) {
    if (n < 1) throw std::invalid_argument("fib_balanced: n must be >= 1");
    return fib_residue_mod11(n) == 0;
}

namespace {

void check_digits(const std::string& s) {
    if (s.size() != 9) throw std::invalid_argument("password: expected 9 decimal digits");
    for (char c : s)
        if (c < '0' || c > '9') throw std::invalid_argument("password: expected 9 decimal digits");
}

unsigned mod7(const std::string& digits) {
    unsigned r = 0;
    for (char c : digits) r = (r * 10 + unsigned(c - '0')) % 7;
    return r;
}

// pw10[i] = 10^{9-i-1} mod 7 for position i in [0, 9)
std::array<unsigned, 9> place_values() {
    std::array<unsigned, 9> pw{};
    unsigned v = 1;
    for (int i = 8; i >= 0; --i) {
        pw[std::size_t(i)] = v;
        v = v * 10 % 7;
    }
    return pw;
}

unsigned inv_mod7(unsigned v) {
    for (unsigned i = 1; i < 7; ++i)
        if (v * i % 7 == 1) return i;
    throw std::logic_error("inv_mod7: not invertible");
}

}  // namespace

bool password_valid(const std::string& e, const std::string& candidate, PasswordSide side) {
    check_digits(e);
    check_digits(candidate);
    for (std::size_t i = 0; i < 9; ++i) {
        std::string probe = (side == PasswordSide::Tim) ? candidate : e;
        probe[i] = (side == PasswordSide::Tim) ? e[i] : candidate[i];
        if (mod7(probe) != 0) return false;
    }
    return true;
}

std::vector<std::string> related_passwords(const std::string& e, PasswordSide side) {
    check_digits(e);
    auto pw = place_values();
    std::vector<std::string> out;

    if (side == PasswordSide::Ann) {
        // Replacing e_i by f_i: E + (f_i - e_i) 10^{9-i} = 0 (mod 7), E known.
        // Each digit class is forced independently.
        unsigned em = mod7(e);
        std::vector<std::vector<char>> choices(9);
        for (std::size_t i = 0; i < 9; ++i) {
            unsigned need = (unsigned(e[i] - '0') + (7 - em) % 7 * inv_mod7(pw[i])) % 7;
            for (char d = '0'; d <= '9'; ++d)
                if (unsigned(d - '0') % 7 == need) choices[i].push_back(d);
        }
        std::string cand(9, '0');
        auto emit = [&](auto&& self, std::size_t pos) -> void {
            if (pos == 9) { out.push_back(cand); return; }
            for (char d : choices[pos]) { cand[pos] = d; self(self, pos + 1); }
        };
        emit(emit, 0);
        return out;
    }

    // Tim: replacing d_i by e_i in D must be divisible by 7, i.e.
    // D + (e_i - d_i) 10^{9-i} = 0 (mod 7) for every i. For each candidate
    // residue r of D mod 7 the digit class of d_i is forced; enumerate the
    // digit choices and keep those consistent with r.
    for (unsigned r = 0; r < 7; ++r) {
        std::vector<std::vector<char>> choices(9);
        bool feasible = true;
        for (std::size_t i = 0; i < 9 && feasible; ++i) {
            unsigned need = (unsigned(e[i] - '0') + r * inv_mod7(pw[i])) % 7;
            for (char d = '0'; d <= '9'; ++d)
                if (unsigned(d - '0') % 7 == need) choices[i].push_back(d);
            if (choices[i].empty()) feasible = false;
        }
        if (!feasible) continue;
        std::string cand(9, '0');
        auto emit = [&](auto&& self, std::size_t pos) -> void {
            if (pos == 9) {
                if (mod7(cand) == r) out.push_back(cand);
                return;
            }
            for (char d : choices[pos]) { cand[pos] = d; self(self, pos + 1); }
        };
        emit(emit, 0);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + b) % p; }
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + p - b % p) % p; }
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    // extended Euclid
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = std::int64_t(p), new_r = std::int64_t(a % p);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (r != 1) throw std::invalid_argument("mod_inv: not invertible");
    return std::uint64_t(t < 0 ? t + std::int64_t(p) : t);
}

}  // namespace

bool ec_on_curve(const EcCurve& c, const EcPoint& pt) {
    if (pt.infinity) return true;
    std::uint64_t lhs = mod_mul(pt.y, pt.y, c.p);
    std::uint64_t rhs = mod_add(mod_mul(mod_mul(pt.x, pt.x, c.p), pt.x, c.p),
                                mod_add(mod_mul(c.a, pt.x, c.p), c.b, c.p), c.p);
    return lhs == rhs;
}

EcPoint ec_neg(const EcCurve& c, const EcPoint& pt) {
    if (pt.infinity) return pt;
    return EcPoint::affine(pt.x, (c.p - pt.y) % c.p);
}

EcPoint ec_add(const EcCurve& c, const EcPoint& p1, const EcPoint& p2) {
    if (!ec_on_curve(c, p1) || !ec_on_curve(c, p2))
        throw std::invalid_argument("ec_add: point not on curve");
    if (p1.infinity) return p2;
    if (p2.infinity) return p1;
    if (p1.x == p2.x && (p1.y + p2.y) % c.p == 0) return EcPoint::at_infinity();
    std::uint64_t lambda;
    if (p1.x == p2.x && p1.y == p2.y) {
        std::uint64_t num = mod_add(mod_mul(3, mod_mul(p1.x, p1.x, c.p), c.p), c.a, c.p);
        lambda = mod_mul(num, mod_inv(mod_mul(2, p1.y, c.p), c.p), c.p);
    } else {
        std::uint64_t num = mod_sub(p2.y, p1.y, c.p);
        lambda = mod_mul(num, mod_inv(mod_sub(p2.x, p1.x, c.p), c.p), c.p);
    }
    std::uint64_t x3 = mod_sub(mod_sub(mod_mul(lambda, lambda, c.p), p1.x, c.p), p2.x, c.p);
    std::uint64_t y3 = mod_sub(mod_mul(lambda, mod_sub(p1.x, x3, c.p), c.p), p1.y, c.p);
    return EcPoint::affine(x3, y3);
}

EcPoint ec_scalar_mul(const EcCurve& c, const EcPoint& p, std::uint64_t k) {
    EcPoint acc = EcPoint::at_infinity();
    EcPoint base = p;
    while (k) {
        if (k & 1) acc = ec_add(c, acc, base);
        base = ec_add(c, base, base);
        k >>= 1;
    }
    return acc;
}

std::uint64_t ec_point_order(const EcCurve& c, const EcPoint& p) {
    if (p.infinity) return 1;
    std::uint64_t ord = 1;
    EcPoint acc = p;
    while (!acc.infinity) {
        acc = ec_add(c, acc, p);
        ++ord;
    }
    return ord;
}

std::vector<EcPoint> ec_enumerate_points(const EcCurve& c) {
    std::vector<EcPoint> pts{EcPoint::at_infinity()};
    // square table
    std::vector<std::vector<std::uint64_t>> roots(c.p);
    for (std::uint64_t y = 0; y < c.p; ++y) roots[y * y % c.p].push_back(y);
    for (std::uint64_t x = 0; x < c.p; ++x) {
        std::uint64_t rhs = mod_add(mod_mul(mod_mul(x, x, c.p), x, c.p),
                                    mod_add(mod_mul(c.a, x, c.p), c.b, c.p), c.p);
        for (auto y : roots[rhs]) pts.push_back(EcPoint::affine(x, y));
    }
    return pts;
}

QrReport odd_subgroup_qr_property(const EcCurve& c, const EcPoint& r) {
    if (c.b != 0) throw std::invalid_argument("odd_subgroup_qr_property: requires b = 0");
    if (r.infinity) throw std::invalid_argument("odd_subgroup_qr_property: R must not be O");
    if (!ec_on_curve(c, r)) throw std::invalid_argument("odd_subgroup_qr_property: R not on curve");
    QrReport rep;
    rep.subgroup_order = ec_point_order(c, r);
    if (rep.subgroup_order % 2 == 0)
        throw std::invalid_argument("odd_subgroup_qr_property: R has even order");

    EcPoint acc = EcPoint::at_infinity();
    rep.subgroup.push_back(acc);
    for (std::uint64_t i = 1; i < rep.subgroup_order; ++i) {
        acc = ec_add(c, acc, r);
        rep.subgroup.push_back(acc);
    }

    rep.all_quadratic_residues = true;
    rep.halving_identity_holds = true;
    for (const auto& q : rep.subgroup) {
        if (q.infinity) continue;
        // Euler criterion: u^{(p-1)/2} = 1 (or u = 0)
        if (q.x != 0) {
            std::uint64_t euler = 1, base = q.x, exp = (c.p - 1) / 2;
            while (exp) {
                if (exp & 1) euler = mod_mul(euler, base, c.p);
                base = mod_mul(base, base, c.p);
                exp >>= 1;
            }
            if (euler != 1) rep.all_quadratic_residues = false;
        }
        // halving identity x(2P) = ((x^2 - a) / 2y)^2 whenever y != 0
        if (q.y != 0) {
            EcPoint dbl = ec_add(c, q, q);
            std::uint64_t t = mod_mul(mod_sub(mod_mul(q.x, q.x, c.p), c.a, c.p),
                                      mod_inv(mod_mul(2, q.y, c.p), c.p), c.p);
            std::uint64_t expect = mod_mul(t, t, c.p);
            if (dbl.infinity || dbl.x != expect) rep.halving_identity_holds = false;
        }
    }
    return rep;
}

}  // namespace ctk::puzzles
