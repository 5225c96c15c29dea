#include "ctk/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "ctk/boolanalysis.hpp"
#include "ctk/boolshare.hpp"
#include "ctk/dlog.hpp"
#include "ctk/fpe.hpp"
#include "ctk/gf2.hpp"
#include "ctk/gfsparity.hpp"
#include "ctk/maskrecover.hpp"
#include "ctk/permclose.hpp"
#include "ctk/prf.hpp"
#include "ctk/puzzles.hpp"
#include "ctk/quantumsim.hpp"
#include "ctk/routing.hpp"

namespace ctk::acceptance {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

#define REQUIRE_MSG(cond, msg)                      \
    do {                                            \
        if (!(cond)) {                              \
            log << "    check failed: " << msg << '\n'; \
            return false;                           \
        }                                           \
    } while (0)

// 1. Discrete log: both strategies recover the published secret; BSGS beats
// the naive scan on oracle queries.
bool crit_dlog(std::ostream& log, bool quick) {
    (void)quick;
    const std::uint64_t n = 1060105447831ULL, g = 12, k = 856182870494ULL;
    dlog::OracleMachine m(n, k, /*seed=*/2021);
    auto t0 = clock_type::now();
    auto naive = dlog::pohlig_hellman_recover(m, g, /*use_bsgs=*/false);
    auto bsgs = dlog::pohlig_hellman_recover(m, g, /*use_bsgs=*/true);
    auto bez = dlog::bezout_recover(m, g);
    double dt = seconds_since(t0);
    REQUIRE_MSG(naive.k == k, "naive k = " << naive.k);
    REQUIRE_MSG(bsgs.k == k, "bsgs k = " << bsgs.k);
    REQUIRE_MSG(bez.k == k, "bezout k = " << bez.k);
    REQUIRE_MSG(bsgs.total_queries < naive.total_queries,
                "bsgs " << bsgs.total_queries << " !< naive " << naive.total_queries);
    REQUIRE_MSG(dt < 5.0, "took " << dt << " s (budget 5 s)");
    log << "    k recovered; queries bsgs " << bsgs.total_queries << " < naive "
        << naive.total_queries << "; " << dt << " s\n";
    return true;
}

// Bijectivity sweep helper: encrypt the whole domain, check it is a
// permutation with a constant PRF call count per input.
template <class Cipher>
bool sweep_bijective(std::ostream& log, const Cipher& c, const Prf128& prf, std::uint64_t n,
                     const char* tag) {
    std::vector<std::uint64_t> seen((n + 63) / 64, 0);
    prf.reset_call_count();
    std::uint64_t per_input = 0;
    for (std::uint64_t x = 0; x < n; ++x) {
        std::uint64_t before = prf.call_count();
        std::uint64_t y = c.encrypt(x);
        std::uint64_t used = prf.call_count() - before;
        if (x == 0) per_input = used;
        REQUIRE_MSG(used == per_input,
                    tag << ": call count varies (" << used << " vs " << per_input << ")");
        REQUIRE_MSG(y < n, tag << ": output out of range");
        std::uint64_t mask = std::uint64_t(1) << (y & 63);
        REQUIRE_MSG(!(seen[y >> 6] & mask), tag << ": collision at y = " << y);
        seen[y >> 6] |= mask;
    }
    // spot-check the inverse on a deterministic sample
    for (std::uint64_t x = 0; x < n; x += n / 97 + 1)
        REQUIRE_MSG(c.decrypt(c.encrypt(x)) == x, tag << ": decrypt mismatch at " << x);
    log << "    " << tag << ": bijective on " << n << ", " << per_input << " PRF calls/input\n";
    return true;
}

// 2. FPE: exhaustive bijectivity for the composite and both prime variants.
bool crit_fpe(std::ostream& log, bool quick) {
    ArxPrf prf(Block128{0x0123456789abcdefULL, 0xfedcba9876543210ULL});
    fpe::FeistelParams params{3, 0};
    auto t0 = clock_type::now();

    const std::uint64_t nc = quick ? 10403 : 5818342;  // 101*103 in quick mode
    fpe::SplitDomain dom = fpe::make_composite_domain(nc);
    if (!quick)
        REQUIRE_MSG(dom.n1 == 2594 && dom.n2 == 2243,
                    "split " << dom.n1 << "x" << dom.n2 << " != 2594x2243");
    fpe::FpeComposite comp(dom, params, prf);
    if (!sweep_bijective(log, comp, prf, nc, "composite")) return false;

    const std::uint64_t np = quick ? 10007 : 5818343;
    fpe::FpePrimeDec dec(np, fpe::FeistelParams{3, /*special_point=*/12345 % np}, prf);
    if (!sweep_bijective(log, dec, prf, np, "prime-dec")) return false;
    fpe::FpePrimeInc inc(np, params, prf);
    if (!sweep_bijective(log, inc, prf, np, "prime-inc")) return false;

    double dt = seconds_since(t0);
    REQUIRE_MSG(quick || dt < 60.0, "took " << dt << " s (budget 60 s)");
    log << "    total " << dt << " s\n";
    return true;
}

// 3. Mask recovery: seeded instances, zero suffix bit errors each.
bool crit_mask(std::ostream& log, bool quick) {
    const unsigned instances = quick ? 3 : 20;
    for (unsigned seed = 1; seed <= instances; ++seed) {
        auto t0 = clock_type::now();
        auto gen = mask::generate_instance(seed);
        auto res = mask::attack(gen.instance);
        REQUIRE_MSG(res.recovered, "seed " << seed << ": ambiguous bits remain");
        std::size_t prefix = gen.instance.params.prefix_bits;
        for (std::size_t i = 0; i < res.suffix.size(); ++i)
            REQUIRE_MSG(res.suffix.get(i) == gen.witness.full_message.get(prefix + i),
                        "seed " << seed << ": suffix bit " << i << " wrong");
        REQUIRE_MSG(res.share_rows_determined && res.share_rows == gen.witness.share_rows,
                    "seed " << seed << ": share rows misidentified");
        double dt = seconds_since(t0);
        REQUIRE_MSG(dt < 60.0, "seed " << seed << " took " << dt << " s (budget 60 s)");
    }
    log << "    " << instances << " instances, zero bit errors, share rows identified\n";
    return true;
}

// 4. Closeness to permutation.
bool crit_permclose(std::ostream& log, bool quick) {
    const unsigned n_exhaustive = quick ? 9 : 12;
    for (unsigned n = 1; n <= n_exhaustive; ++n)
        for (std::uint32_t a = 0; a < (1u << n); ++a)
            REQUIRE_MSG(permclose::closeness_bruteforce(n, a) == permclose::closeness_recursive(n, a),
                        "brute != recursive at n=" << n << " alpha=" << a);
    REQUIRE_MSG(permclose::min_closeness(1) == 4 && permclose::min_closeness(2) == 8,
                "published minima 4, 8 not reproduced");
    for (unsigned n = 1; n <= 40; ++n)
        REQUIRE_MSG(permclose::min_closeness(n) == permclose::min_closeness_closed_form(n),
                    "recurrence != closed form at n=" << n);
    const unsigned n_argmin = quick ? 10 : 14;
    for (unsigned n = 1; n <= n_argmin; ++n) {
        auto best = permclose::best_alphas(n);
        std::size_t want = n <= 2 ? 2 : 4;
        REQUIRE_MSG(best.minimizers.size() == want, "minimizer cardinality at n=" << n);
        REQUIRE_MSG(best.c_min == permclose::min_closeness(n), "c_min mismatch at n=" << n);
        // independent exhaustive argmin
        std::uint64_t cmin = ~0ULL;
        std::vector<std::uint32_t> argmin;
        for (std::uint32_t a = 0; a < (1u << n); ++a) {
            std::uint64_t c = permclose::closeness_recursive(n, a);
            if (c < cmin) { cmin = c; argmin.clear(); }
            if (c == cmin) argmin.push_back(a);
        }
        auto sorted = best.minimizers;
        std::sort(sorted.begin(), sorted.end());
        REQUIRE_MSG(cmin == best.c_min && sorted == argmin, "argmin set mismatch at n=" << n);
    }
    log << "    exhaustive n<=" << n_exhaustive << ", closed form to n=40, argmin to n="
        << n_argmin << '\n';
    return true;
}

// 5. Generalized Feistel parity: formula vs brute force on a parameter grid.
bool crit_gfs(std::ostream& log, bool quick) {
    const unsigned draws = quick ? 40 : 200;
    const std::vector<std::string> groups = {"z2", "z4", "z2^2", "z2xz4"};
    const std::vector<gfs::Variant> variants = {gfs::Variant::NLFSR, gfs::Variant::GFS2,
                                                gfs::Variant::TH};
    std::uint64_t checked = 0, in_scope = 0;
    for (auto variant : variants)
        for (const auto& gname : groups)
            for (unsigned m : {2u, 4u}) {
                if (variant != gfs::Variant::NLFSR && m < 4) continue;  // GFS2/TH need ell >= 2
                gfs::Group2t g = gfs::Group2t::parse(gname);
                for (unsigned d = 0; d < draws; ++d) {
                    auto spec = gfs::random_spec(variant, m, g, 1000 * checked + d, 77 * d + 1);
                    auto rep = gfs::sign_formula(spec, g);
                    int brute = gfs::sign_bruteforce(spec, g);
                    ++checked;
                    if (!rep.used_bruteforce) ++in_scope;
                    REQUIRE_MSG(rep.sign == brute,
                                gfs::variant_name(variant) << " " << gname << " m=" << m
                                << " draw=" << d << ": formula " << rep.sign << " != brute "
                                << brute << " (case " << rep.fired_case << ")");
                }
            }
    REQUIRE_MSG(in_scope > 0, "no in-scope cells exercised");
    log << "    " << checked << " draws, " << in_scope << " via the classification, 0 disagreements\n";
    return true;
}

// Published 3-share example: shares (a,d), (b,e), (c,f) in consecutive
// blocks, output bit i = G_{i+1}.
TruthTable example_sharing() {
    TruthTable g;
    g.in_bits = 6;
    g.out_bits = 3;
    g.table.resize(64);
    for (std::uint32_t z = 0; z < 64; ++z) {
        bool a = z & 1, d = z >> 1 & 1, b = z >> 2 & 1, e = z >> 3 & 1, c = z >> 4 & 1,
             f = z >> 5 & 1;
        std::uint32_t g1 = (a & d) ^ (a & e) ^ (b & d);
        std::uint32_t g2 = (b & e) ^ (b & f) ^ (c & e);
        std::uint32_t g3 = (c & f) ^ (c & d) ^ (a & f);
        g.table[z] = g1 | g2 << 1 | g3 << 2;
    }
    return g;
}

// 6. s-Boolean sharing detection.
bool crit_boolshare(std::ostream& log, bool quick) {
    TruthTable g = example_sharing();
    auto v = share::is_sharing_any(g, 3);
    REQUIRE_MSG(v.is_sharing, "example not recognized as a 3-sharing");
    REQUIRE_MSG(v.f.in_bits == 2 && v.f.out_bits == 1 &&
                    v.f.table == std::vector<std::uint32_t>({0, 0, 0, 1}),
                "recovered F is not xy");
    REQUIRE_MSG(share::verify_sharing(g, 3, v.f, v.pi), "witness fails the definition");

    const unsigned trips = quick ? 20 : 100;
    std::mt19937_64 rng(424242);
    const std::vector<std::pair<unsigned, unsigned>> shapes = {
        {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {4, 2}};
    for (unsigned trip = 0; trip < trips; ++trip) {
        auto [s, n] = shapes[trip % shapes.size()];
        TruthTable f;
        f.in_bits = n;
        f.out_bits = 1 + trip % 2;
        f.table.resize(std::size_t(1) << n);
        for (auto& t : f.table) t = std::uint32_t(rng()) & ((1u << f.out_bits) - 1);
        TruthTable shared = share::make_sharing(f, s, rng());
        std::vector<unsigned> pi(shared.in_bits);
        std::iota(pi.begin(), pi.end(), 0u);
        std::shuffle(pi.begin(), pi.end(), rng);
        TruthTable shuffled = share::permute_inputs(shared, pi);
        auto verdict = share::is_sharing_any(shuffled, s);
        REQUIRE_MSG(verdict.is_sharing, "round trip " << trip << " (s=" << s << ", n=" << n
                                                      << ") not detected");
        REQUIRE_MSG(share::verify_sharing(shuffled, s, verdict.f, verdict.pi),
                    "round trip " << trip << ": witness fails the definition");
    }
    log << "    example F(x,y) = xy recovered; " << trips << " shuffle round trips\n";
    return true;
}

// 7. Boolean analysis: APN exponents, the 4-bit component identity, the two
// published plaintext/ciphertext pairs, random affine distances.
bool crit_boolanalysis(std::ostream& log, bool quick) {
    FieldGF2n gf5(5);
    for (std::uint64_t d : {13ULL, 7ULL, 15ULL})
        REQUIRE_MSG(boolfn::is_apn(boolfn::power_map(gf5, d)),
                    "x^" << d << " over GF(2^5) not APN");

    boolfn::Sbox s = boolfn::students_sbox();
    for (std::uint32_t x = 0; x < 16; ++x) {
        int lhs = std::popcount(s.table[x] & 0xCu) & 1;
        int rhs = int(((x >> 3) & (x >> 2) & 1) ^ (x >> 1 & 1));
        REQUIRE_MSG(lhs == rhs, "u.S(x) != x1x2 ^ x3 at x=" << x);
    }

    auto verdict = boolfn::students_contradiction({{0xA, 0x5}, {0xC, 0x0}});
    REQUIRE_MSG(verdict.constants == std::vector<int>({0, 1}),
                "published constants are not 0, 1");
    REQUIRE_MSG(verdict.contradiction, "contradiction not flagged");

    const unsigned funcs = quick ? 100 : 1000;
    std::mt19937_64 rng(777);
    for (unsigned i = 0; i < funcs; ++i) {
        boolfn::Sbox f{4, {}};
        f.table.resize(16);
        for (auto& t : f.table) t = std::uint32_t(rng()) & 0xF;
        auto w = boolfn::distance_to_affine(f);
        REQUIRE_MSG(w.distance < 11, "distance " << w.distance << " >= 11 at function " << i);
        unsigned mismatches = 0;
        for (std::uint32_t x = 0; x < 16; ++x) mismatches += w.apply(x) != f.table[x];
        REQUIRE_MSG(mismatches == w.distance, "witness does not achieve its distance");
    }
    log << "    APN trio, component identity, constants {0,1}, " << funcs
        << " random distances < 11\n";
    return true;
}

// 8. Quantum: Bell prep, singlet transform, distinguisher, correction.
bool crit_quantum(std::ostream& log, bool quick) {
    const double tol = 1e-10;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    qsim::StateVector bell = qsim::bell_pair();
    REQUIRE_MSG(std::abs(bell.amp[0] - inv_sqrt2) < tol && std::abs(bell.amp[1]) < tol &&
                    std::abs(bell.amp[2]) < tol && std::abs(bell.amp[3] - inv_sqrt2) < tol,
                "Bell amplitudes off");

    qsim::StateVector singlet = qsim::bell_pair();
    qsim::bell_to_singlet(singlet);
    REQUIRE_MSG(std::abs(singlet.amp[0]) < tol && std::abs(singlet.amp[1] - inv_sqrt2) < tol &&
                    std::abs(singlet.amp[2] + inv_sqrt2) < tol && std::abs(singlet.amp[3]) < tol,
                "singlet amplitudes off");

    auto make2 = [&](qsim::cplx a01, qsim::cplx a10, bool plus) {
        qsim::StateVector st = qsim::StateVector::basis(2, 0);
        st.amp = {plus ? inv_sqrt2 : 0.0, a01, a10, plus ? inv_sqrt2 : 0.0};
        return st;
    };
    struct Case { qsim::StateVector st; const char* label; };
    std::vector<Case> cases = {
        {make2(0, 0, true), "00"},
        {make2(inv_sqrt2, inv_sqrt2, false), "01"},
        {make2(inv_sqrt2, -inv_sqrt2, false), "11"},
    };
    for (auto& cse : cases) {
        auto out = qsim::distinguish_bell(cse.st);
        REQUIRE_MSG(out.deterministic && out.label == cse.label,
                    "distinguisher gave " << out.label << " for expected " << cse.label);
    }

    const unsigned trials = quick ? 20 : 100;
    std::mt19937_64 rng(31337);
    std::uniform_real_distribution<double> uni(0.0, 2.0 * 3.14159265358979323846);
    qsim::Circuit main_c = qsim::correction_circuit();
    qsim::Circuit alt_c = qsim::alt_correction_circuit();
    unsigned toffoli = 0;
    for (const auto& gate : alt_c) toffoli += gate.kind == qsim::GateKind::Toffoli;
    REQUIRE_MSG(toffoli == 1, "alt circuit Toffoli census = " << toffoli);
    for (unsigned t = 0; t < trials; ++t) {
        double phi = uni(rng), theta = uni(rng);
        qsim::cplx alpha = std::cos(phi);
        qsim::cplx beta = std::sin(phi) * std::exp(qsim::cplx(0, theta));
        for (int flip = -1; flip < 3; ++flip)
            for (const auto* circuit : {&main_c, &alt_c}) {
                qsim::StateVector st = qsim::with_ancillas(qsim::repetition_encode(alpha, beta));
                if (flip >= 0) qsim::inject_bitflip(st, unsigned(flip));
                qsim::run(st, *circuit);
                double fid = qsim::data_fidelity(st, alpha, beta);
                REQUIRE_MSG(fid >= 1.0 - 1e-12,
                            "fidelity " << fid << " (trial " << t << ", flip " << flip << ")");
            }
    }
    log << "    exact states, deterministic distinguisher, " << trials
        << " corrected states, 1 Toffoli in the compact circuit\n";
    return true;
}

// 9. Routing the published 64-bit permutation.
bool crit_routing(std::ostream& log, bool quick) {
    (void)quick;
    Permutation present = route::present_permutation();
    route::WirePlan plan = route::route_two_layer(present);
    auto conflicts = route::verify_plan(plan);
    REQUIRE_MSG(conflicts.empty(), conflicts.size() << " conflicts in the routed plan");
    auto decision = route::min_layers(present);
    REQUIRE_MSG(decision.layers == 2, "min_layers(P) = " << decision.layers);
    REQUIRE_MSG(route::min_layers(Permutation::identity(64)).layers == 1,
                "min_layers(identity) != 1");
    std::string svg1 = route::emit_svg(plan);
    std::string svg2 = route::emit_svg(route::route_two_layer(present));
    REQUIRE_MSG(!svg1.empty() && svg1 == svg2, "SVG output not byte-deterministic");
    log << "    0 conflicts, layers 2/1, " << decision.inversions
        << " inversions, deterministic SVG (" << svg1.size() << " bytes)\n";
    return true;
}

// 10. Warm-up puzzles.
bool crit_puzzles(std::ostream& log, bool quick) {
    auto cost = puzzles::min_generation_cost(2021);
    REQUIRE_MSG(cost && cost->cost == 47, "cost(2021) != 47");
    std::uint64_t len = 1, replay = 1;
    for (auto op : cost->ops) {
        if (op == puzzles::GenOp::Plus4) { len += 4; replay += 2; }
        else { len *= 3; replay += 5; }
    }
    REQUIRE_MSG(len == 2021 && replay == cost->cost, "cost witness does not replay");

    for (unsigned n = 1; n <= 24; ++n)
        REQUIRE_MSG(puzzles::fib_balanced_direct(n) == puzzles::fib_balanced_recurrence(n),
                    "balance verdicts disagree at n=" << n);
    for (unsigned n = 1; n <= 100; ++n)
        REQUIRE_MSG(puzzles::fib_balanced_recurrence(n) == (n % 6 == 1),
                    "n = 1 mod 6 rule fails at n=" << n);

    const std::uint64_t pmax = quick ? 50 : 200;
    std::uint64_t curves = 0, points = 0;
    for (std::uint64_t p = 5; p <= pmax; ++p) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) { prime = false; break; }
        if (!prime) continue;
        for (std::uint64_t a = 1; a < p; ++a) {
            puzzles::EcCurve c{p, a, 0};
            ++curves;
            for (const auto& pt : puzzles::ec_enumerate_points(c)) {
                if (pt.infinity) continue;
                if (puzzles::ec_point_order(c, pt) % 2 == 0) continue;
                auto rep = puzzles::odd_subgroup_qr_property(c, pt);
                ++points;
                REQUIRE_MSG(rep.all_quadratic_residues && rep.halving_identity_holds,
                            "QR property fails, p=" << p << " a=" << a << " P=(" << pt.x << ","
                                                    << pt.y << ")");
            }
        }
    }

    const unsigned seeds = quick ? 20 : 100;
    std::mt19937_64 rng(1234);
    for (unsigned sd = 0; sd < seeds; ++sd) {
        std::string e(9, '0');
        for (auto& ch : e) ch = char('0' + rng() % 10);
        auto tim = puzzles::related_passwords(e, puzzles::PasswordSide::Tim);
        auto ann = puzzles::related_passwords(e, puzzles::PasswordSide::Ann);
        REQUIRE_MSG(!tim.empty() && !ann.empty(), "no passwords for e=" << e);
        // all outputs on each side share one residue vector mod 7, and the
        // two sides' vectors coincide digit by digit
        auto residues = [](const std::string& s) {
            std::vector<int> r;
            for (char ch : s) r.push_back((ch - '0') % 7);
            return r;
        };
        auto want = residues(tim.front());
        for (const auto& d : tim)
            REQUIRE_MSG(residues(d) == want, "Tim residue drift for e=" << e);
        for (const auto& f : ann)
            REQUIRE_MSG(residues(f) == want, "d_i != f_i (mod 7) for e=" << e);
        REQUIRE_MSG(puzzles::password_valid(e, tim.front(), puzzles::PasswordSide::Tim) &&
                        puzzles::password_valid(e, ann.front(), puzzles::PasswordSide::Ann),
                    "definition re-check fails for e=" << e);
    }
    log << "    cost 47, balance rule to n=100, " << curves << " curves / " << points
        << " odd-order points, " << seeds << " password seeds\n";
    return true;
}

#undef REQUIRE_MSG

}  // namespace

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {"dlog-oracle-recovery", crit_dlog},
        {"fpe-bijectivity-sweeps", crit_fpe},
        {"mask-suffix-recovery", crit_mask},
        {"permutation-closeness", crit_permclose},
        {"gfs-parity-formula", crit_gfs},
        {"boolean-sharing-detection", crit_boolshare},
        {"boolean-analysis", crit_boolanalysis},
        {"quantum-circuits", crit_quantum},
        {"two-layer-routing", crit_routing},
        {"warmup-puzzles", crit_puzzles},
    };
    return list;
}

bool run_all(std::ostream& out, bool quick) {
    bool all = true;
    for (const auto& crit : criteria()) {
        std::ostringstream detail;
        bool ok = false;
        try {
            ok = crit.run(detail, quick);
        } catch (const std::exception& e) {
            detail << "    exception: " << e.what() << '\n';
        }
        out << (ok ? "[PASS] " : "[FAIL] ") << crit.name << '\n' << detail.str();
        all = all && ok;
    }
    out << (all ? "selftest: all criteria passed" : "selftest: FAILURES present") << '\n';
    return all;
}

}  // namespace ctk::acceptance
