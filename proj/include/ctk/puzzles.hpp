#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ctk::puzzles {

// --- generation cost ---------------------------------------------------

enum class GenOp : std::uint8_t { Plus4, Times3 };

struct GenCostResult {
    std::uint64_t cost = 0;
    std::vector<GenOp> ops;  // applied in order, starting from length 1
};

/// Minimal cost to generate a sequence of length L, starting from length 1
/// (cost 1), with ops +4 (cost 2) and x3 (cost 5). Absent if unreachable.
std::optional<GenCostResult> min_generation_cost(std::uint64_t target_len);

// --- Fibonacci strings -------------------------------------------------

/// A_1 = "0", A_2 = "1", A_n = A_{n-1} A_{n-2}. 1 <= n <= 30.
std::string fib_string(unsigned n);

/// B_n entries in {-1, 0, +1}: b_i = a_{2i-1} - a_{2i}, odd tail b_l = a_m.
std::vector<std::int8_t> fib_ternary(unsigned n);

/// True iff B_n has equally many 1s and -1s; direct construction (n <= 30).
bool fib_balanced_direct(unsigned n);

/// Same verdict via the residue recurrence of A_n mod 11 (unbounded n).
bool fib_balanced_recurrence(unsigned n);

/// A_n mod 11 via the recurrence.
unsigned fib_residue_mod11(unsigned n);

// --- related passwords -------------------------------------------------

enum class PasswordSide { Tim, Ann };

/// All 9-digit passwords for the given side and reference digits e.
/// Tim: every replacement of d_i by e_i in D is divisible by 7.
/// Ann: every replacement of e_i by f_i in E is divisible by 7.
std::vector<std::string> related_passwords(const std::string& e, PasswordSide side);

/// Definition re-check for one candidate password.
bool password_valid(const std::string& e, const std::string& candidate, PasswordSide side);

// --- elliptic curves ---------------------------------------------------

struct EcCurve {
    std::uint64_t p;  // prime > 3, p <= 10^4 for order enumeration
    std::uint64_t a;
    std::uint64_t b;
};

struct EcPoint {
    bool infinity = true;
    std::uint64_t x = 0, y = 0;

    static EcPoint at_infinity() { return {}; }
    static EcPoint affine(std::uint64_t x, std::uint64_t y) { return {false, x, y}; }
    bool operator==(const EcPoint&) const = default;
};

bool ec_on_curve(const EcCurve& c, const EcPoint& p);
EcPoint ec_neg(const EcCurve& c, const EcPoint& p);
EcPoint ec_add(const EcCurve& c, const EcPoint& p1, const EcPoint& p2);
EcPoint ec_scalar_mul(const EcCurve& c, const EcPoint& p, std::uint64_t k);
std::uint64_t ec_point_order(const EcCurve& c, const EcPoint& p);
std::vector<EcPoint> ec_enumerate_points(const EcCurve& c);  // incl. infinity

struct QrReport {
    bool all_quadratic_residues = false;   // every affine x-coord in <R> is a QR (or 0)
    bool halving_identity_holds = false;   // x(2P) = ((x^2 - a) / 2y)^2 on <R>
    std::uint64_t subgroup_order = 0;
    std::vector<EcPoint> subgroup;
};

/// For a curve with b = 0 and R of odd order, checks the Euler criterion on
/// every affine x-coordinate of <R> and the halving identity.
QrReport odd_subgroup_qr_property(const EcCurve& c, const EcPoint& r);

}  // namespace ctk::puzzles
