#include <algorithm>
#include <random>

#include "ctk/puzzles.hpp"
#include "doctest.h"

using namespace ctk::puzzles;

namespace {

std::uint64_t replay_cost(const GenCostResult& r, std::uint64_t* final_len = nullptr) {
    std::uint64_t len = 1, cost = 1;
    for (auto op : r.ops) {
        if (op == GenOp::Plus4) { len += 4; cost += 2; }
        else { len *= 3; cost += 5; }
    }
    if (final_len) *final_len = len;
    return cost;
}

}  // namespace

TEST_CASE("generation cost: published value and witness replay") {
    auto r = min_generation_cost(2021);
    REQUIRE(r.has_value());
    CHECK(r->cost == 47);
    std::uint64_t len = 0;
    CHECK(replay_cost(*r, &len) == 47);
    CHECK(len == 2021);
}

TEST_CASE("generation cost: optimality against exhaustive search, small lengths") {
    // breadth-first over (length, cost) as the independent oracle
    constexpr std::uint64_t kMax = 400, kInf = ~std::uint64_t(0);
    std::vector<std::uint64_t> best(kMax + 1, kInf);
    best[1] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::uint64_t l = 1; l <= kMax; ++l) {
            if (best[l] == kInf) continue;
            if (l + 4 <= kMax && best[l] + 2 < best[l + 4]) { best[l + 4] = best[l] + 2; changed = true; }
            if (l * 3 <= kMax && best[l] + 5 < best[l * 3]) { best[l * 3] = best[l] + 5; changed = true; }
        }
    }
    for (std::uint64_t l = 1; l <= kMax; ++l) {
        auto r = min_generation_cost(l);
        if (best[l] == kInf) {
            CHECK(!r.has_value());
        } else {
            REQUIRE(r.has_value());
            CHECK(r->cost == best[l]);
            std::uint64_t len = 0;
            CHECK(replay_cost(*r, &len) == r->cost);
            CHECK(len == l);
        }
    }
}

TEST_CASE("fibonacci strings: structure and balance") {
    CHECK(fib_string(1) == "0");
    CHECK(fib_string(2) == "1");
    CHECK(fib_string(3) == "10");
    CHECK(fib_string(4) == "101");
    CHECK(fib_string(5) == "10110");
    for (unsigned n = 3; n <= 20; ++n)
        CHECK(fib_string(n) == fib_string(n - 1) + fib_string(n - 2));
    for (unsigned n = 1; n <= 24; ++n)
        CHECK(fib_balanced_direct(n) == fib_balanced_recurrence(n));
    // the residue recurrence matches A_n read as a decimal numeral mod 11
    // (the alternating digit sum, which is what balance measures)
    for (unsigned n = 1; n <= 24; ++n) {
        unsigned lit = 0;
        for (char c : fib_string(n)) lit = (lit * 10 + unsigned(c - '0')) % 11;
        CHECK(fib_residue_mod11(n) == lit);
    }
    for (unsigned n = 1; n <= 200; ++n)
        CHECK(fib_balanced_recurrence(n) == (n % 6 == 1));
}

TEST_CASE("related passwords: definition oracle and cross congruence") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        std::string e(9, '0');
        for (auto& c : e) c = char('0' + rng() % 10);
        auto tim = related_passwords(e, PasswordSide::Tim);
        auto ann = related_passwords(e, PasswordSide::Ann);
        REQUIRE(!tim.empty());
        REQUIRE(!ann.empty());
        for (const auto& d : tim) CHECK(password_valid(e, d, PasswordSide::Tim));
        for (const auto& f : ann) CHECK(password_valid(e, f, PasswordSide::Ann));
        for (std::size_t i = 0; i < 9; ++i)
            CHECK((tim.front()[i] - '0') % 7 == (ann.front()[i] - '0') % 7);
    }
}

TEST_CASE("password_valid rejects corrupted candidates") {
    std::string e = "123456789";
    auto tim = related_passwords(e, PasswordSide::Tim);
    REQUIRE(!tim.empty());
    std::string bad = tim.front();
    bad[0] = char('0' + (bad[0] - '0' + 1) % 10);  // shift one digit off its residue class
    if ((bad[0] - '0') % 7 != (tim.front()[0] - '0') % 7)
        CHECK(!password_valid(e, bad, PasswordSide::Tim));
}

TEST_CASE("elliptic curve group law") {
    EcCurve c{11, 4, 0};  // y^2 = x^3 + 4x over F_11
    auto pts = ec_enumerate_points(c);
    for (const auto& p : pts) CHECK(ec_on_curve(c, p));
    // closure, neutral element, inverses, associativity on a sample
    for (const auto& p : pts)
        for (const auto& q : pts) {
            EcPoint s = ec_add(c, p, q);
            CHECK(ec_on_curve(c, s));
            CHECK(ec_add(c, p, EcPoint::at_infinity()) == p);
            CHECK(ec_add(c, p, ec_neg(c, p)) == EcPoint::at_infinity());
        }
    for (const auto& p : pts)
        for (const auto& q : pts)
            for (const auto& r : {pts[0], pts[pts.size() / 2], pts.back()})
                CHECK(ec_add(c, ec_add(c, p, q), r) == ec_add(c, p, ec_add(c, q, r)));
    // scalar multiples respect the point order (Lagrange)
    for (const auto& p : pts) {
        std::uint64_t ord = ec_point_order(c, p);
        CHECK(ec_scalar_mul(c, p, ord) == EcPoint::at_infinity());
        CHECK(pts.size() % ord == 0);
    }
}

TEST_CASE("odd-order subgroup quadratic residue property") {
    for (std::uint64_t p : {5, 7, 11, 13, 17, 19, 23}) {
        for (std::uint64_t a = 1; a < p; ++a) {
            EcCurve c{p, a, 0};
            for (const auto& pt : ec_enumerate_points(c)) {
                if (pt.infinity) continue;
                if (ec_point_order(c, pt) % 2 == 0) continue;
                auto rep = odd_subgroup_qr_property(c, pt);
                CHECK(rep.all_quadratic_residues);
                CHECK(rep.halving_identity_holds);
                CHECK(rep.subgroup_order == ec_point_order(c, pt));
                CHECK(rep.subgroup.size() == rep.subgroup_order);
            }
        }
    }
}
