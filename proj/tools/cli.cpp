// Command-line front end: one subcommand per module, uniform --json/--seed
// reporting, and a selftest command running the acceptance suite.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ctk/acceptance.hpp"
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

using json = nlohmann::json;

namespace {

struct Options {
    bool as_json = false;
    std::uint64_t seed = 1;
    unsigned threads = 0;  // 0 = library default; accepted for sweep commands
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("CTK_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
        }
    }
    return 1;
}

void emit(const Options& opt, const json& report, const std::string& text) {
    if (opt.as_json)
        std::cout << report.dump(2) << '\n';
    else
        std::cout << text << '\n';
}

std::string bits_to_string(const ctk::BitVec& v) {
    std::string s(v.size(), '0');
    for (std::size_t i = 0; i < v.size(); ++i) s[i] = v.get(i) ? '1' : '0';
    return s;
}

ctk::TruthTable load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open truth table file: " + path);
    return ctk::read_truth_table(in);
}

// ---------------------------------------------------------------- puzzle --

void add_puzzle(CLI::App& app, Options& opt) {
    auto* puzzle = app.add_subcommand("puzzle", "warm-up puzzle solvers");
    puzzle->require_subcommand(1);

    auto* cost = puzzle->add_subcommand("cost", "minimal generation cost for a target length");
    auto len = std::make_shared<std::uint64_t>(1);
    cost->add_option("length", *len, "target sequence length")->required();
    cost->callback([&opt, len] {
        auto r = ctk::puzzles::min_generation_cost(*len);
        if (!r) throw std::runtime_error("length unreachable");
        std::string ops;
        for (auto op : r->ops) ops += op == ctk::puzzles::GenOp::Plus4 ? "+4 " : "x3 ";
        emit(opt, {{"command", "puzzle cost"}, {"length", *len}, {"cost", r->cost}, {"ops", ops}},
             "cost(" + std::to_string(*len) + ") = " + std::to_string(r->cost) + "  [" + ops + "]");
    });

    auto* fib = puzzle->add_subcommand("fib", "Fibonacci-string balance verdict");
    auto fn = std::make_shared<unsigned>(1);
    fib->add_option("n", *fn, "index of the Fibonacci string")->required();
    fib->callback([&opt, fn] {
        bool balanced = ctk::puzzles::fib_balanced_recurrence(*fn);
        json rep = {{"command", "puzzle fib"},
                    {"n", *fn},
                    {"balanced", balanced},
                    {"residue_mod11", ctk::puzzles::fib_residue_mod11(*fn)}};
        if (*fn <= 24) rep["direct_check"] = ctk::puzzles::fib_balanced_direct(*fn);
        emit(opt, rep, "B_" + std::to_string(*fn) + (balanced ? " is balanced" : " is unbalanced"));
    });

    auto* pw = puzzle->add_subcommand("passwords", "related 9-digit passwords");
    auto e = std::make_shared<std::string>();
    auto side = std::make_shared<std::string>("tim");
    pw->add_option("--e", *e, "reference password digits")->required();
    pw->add_option("--side", *side, "tim or ann")->check(CLI::IsMember({"tim", "ann"}));
    pw->callback([&opt, e, side] {
        auto out = ctk::puzzles::related_passwords(
            *e, *side == "tim" ? ctk::puzzles::PasswordSide::Tim : ctk::puzzles::PasswordSide::Ann);
        std::string text = std::to_string(out.size()) + " candidates";
        for (std::size_t i = 0; i < out.size() && i < 8; ++i) text += "\n  " + out[i];
        emit(opt, {{"command", "puzzle passwords"}, {"e", *e}, {"side", *side}, {"passwords", out}},
             text);
    });

    auto* ec = puzzle->add_subcommand("ec-qr", "odd-subgroup quadratic residue property");
    auto p = std::make_shared<std::uint64_t>(11);
    auto a = std::make_shared<std::uint64_t>(1);
    auto px = std::make_shared<std::int64_t>(-1);
    auto py = std::make_shared<std::int64_t>(-1);
    ec->add_option("--p", *p, "prime modulus")->required();
    ec->add_option("--a", *a, "curve coefficient in y^2 = x^3 + ax")->required();
    ec->add_option("--x", *px, "generator x (default: scan all odd-order points)");
    ec->add_option("--y", *py, "generator y");
    ec->callback([&opt, p, a, px, py] {
        ctk::puzzles::EcCurve curve{*p, *a, 0};
        std::vector<ctk::puzzles::EcPoint> gens;
        if (*px >= 0 && *py >= 0)
            gens.push_back(ctk::puzzles::EcPoint::affine(std::uint64_t(*px), std::uint64_t(*py)));
        else
            for (const auto& pt : ctk::puzzles::ec_enumerate_points(curve))
                if (!pt.infinity && ctk::puzzles::ec_point_order(curve, pt) % 2 == 1)
                    gens.push_back(pt);
        json points = json::array();
        bool all_ok = true;
        for (const auto& g : gens) {
            auto rep = ctk::puzzles::odd_subgroup_qr_property(curve, g);
            all_ok = all_ok && rep.all_quadratic_residues && rep.halving_identity_holds;
            points.push_back({{"x", g.x},
                              {"y", g.y},
                              {"order", rep.subgroup_order},
                              {"all_qr", rep.all_quadratic_residues},
                              {"halving", rep.halving_identity_holds}});
        }
        emit(opt,
             {{"command", "puzzle ec-qr"}, {"p", *p}, {"a", *a}, {"points", points},
              {"all_hold", all_ok}},
             std::to_string(gens.size()) + " odd-order points checked, property " +
                 (all_ok ? "holds" : "VIOLATED"));
        if (!all_ok) throw std::runtime_error("QR property violated");
    });
}

// ------------------------------------------------------------------- fpe --

void add_fpe(CLI::App& app, Options& opt) {
    auto* fpe_cmd = app.add_subcommand("fpe", "format-preserving encryption on {0..n-1}");
    fpe_cmd->require_subcommand(1);
    auto n = std::make_shared<std::uint64_t>(0);
    auto variant = std::make_shared<std::string>("auto");
    auto key = std::make_shared<std::string>("000102030405060708090a0b0c0d0e0f");
    auto rounds = std::make_shared<unsigned>(3);

    auto add_common = [&](CLI::App* c) {
        c->add_option("--n", *n, "domain size")->required();
        c->add_option("--variant", *variant, "auto, composite, prime-dec or prime-inc")
            ->check(CLI::IsMember({"auto", "composite", "prime-dec", "prime-inc"}));
        c->add_option("--key", *key, "PRF key, 32 hex digits");
        c->add_option("--rounds", *rounds, "Feistel rounds (default 3)");
    };

    // one dispatcher so encrypt/decrypt/sweep share construction logic
    auto with_cipher = [n, variant, key, rounds](auto&& fn) {
        ctk::ArxPrf prf = ctk::ArxPrf::from_hex_key(*key);
        ctk::fpe::FeistelParams params{*rounds, *n / 2};
        std::string v = *variant;
        if (v == "auto") v = ctk::fpe::factor_close(*n) ? "composite" : "prime-dec";
        if (v == "composite") {
            ctk::fpe::FpeComposite c(ctk::fpe::make_composite_domain(*n), params, prf);
            fn(c, prf, v);
        } else if (v == "prime-dec") {
            ctk::fpe::FpePrimeDec c(*n, params, prf);
            fn(c, prf, v);
        } else {
            ctk::fpe::FpePrimeInc c(*n, params, prf);
            fn(c, prf, v);
        }
    };

    auto* enc = fpe_cmd->add_subcommand("encrypt", "encrypt one value");
    auto x = std::make_shared<std::uint64_t>(0);
    add_common(enc);
    enc->add_option("--x", *x, "plaintext value")->required();
    enc->callback([&opt, with_cipher, x, n] {
        with_cipher([&](const auto& c, const ctk::Prf128&, const std::string& v) {
            std::uint64_t y = c.encrypt(*x);
            emit(opt, {{"command", "fpe encrypt"}, {"n", *n}, {"variant", v}, {"x", *x}, {"y", y}},
                 std::to_string(*x) + " -> " + std::to_string(y));
        });
    });

    auto* dec = fpe_cmd->add_subcommand("decrypt", "decrypt one value");
    auto y = std::make_shared<std::uint64_t>(0);
    add_common(dec);
    dec->add_option("--y", *y, "ciphertext value")->required();
    dec->callback([&opt, with_cipher, y, n] {
        with_cipher([&](const auto& c, const ctk::Prf128&, const std::string& v) {
            std::uint64_t x2 = c.decrypt(*y);
            emit(opt, {{"command", "fpe decrypt"}, {"n", *n}, {"variant", v}, {"y", *y}, {"x", x2}},
                 std::to_string(*y) + " -> " + std::to_string(x2));
        });
    });

    auto* sweep = fpe_cmd->add_subcommand("sweep", "exhaustive bijectivity check");
    add_common(sweep);
    sweep->callback([&opt, with_cipher, n] {
        with_cipher([&](const auto& c, const ctk::Prf128& prf, const std::string& v) {
            std::vector<bool> seen(*n, false);
            prf.reset_call_count();
            std::uint64_t per = 0;
            for (std::uint64_t i = 0; i < *n; ++i) {
                std::uint64_t before = prf.call_count();
                std::uint64_t out = c.encrypt(i);
                if (i == 0) per = prf.call_count() - before;
                else if (prf.call_count() - before != per)
                    throw std::runtime_error("PRF call count varies across inputs");
                if (out >= *n || seen[out]) throw std::runtime_error("not a bijection");
                seen[out] = true;
            }
            emit(opt,
                 {{"command", "fpe sweep"}, {"n", *n}, {"variant", v}, {"bijective", true},
                  {"prf_calls_per_input", per}},
                 "bijective on " + std::to_string(*n) + " (" + v + ", " + std::to_string(per) +
                     " PRF calls/input)");
        });
    });
}

// ------------------------------------------------------------------ dlog --

void add_dlog(CLI::App& app, Options& opt) {
    auto* d = app.add_subcommand("dlog", "oracle discrete logarithm recovery");
    auto* solve = d->add_subcommand("solve", "recover the secret from a simulated oracle");
    auto n = std::make_shared<std::uint64_t>(1060105447831ULL);
    auto g = std::make_shared<std::uint64_t>(12);
    auto k = std::make_shared<std::uint64_t>(856182870494ULL);
    auto method = std::make_shared<std::string>("ph-bsgs");
    solve->add_option("--n", *n, "modulus (n - 1 squarefree)");
    solve->add_option("--g", *g, "primitive root");
    solve->add_option("--k", *k, "planted secret for the simulated machine");
    solve->add_option("--method", *method, "ph-naive, ph-bsgs or bezout")
        ->check(CLI::IsMember({"ph-naive", "ph-bsgs", "bezout"}));
    d->require_subcommand(1);
    solve->callback([&opt, n, g, k, method] {
        ctk::dlog::OracleMachine m(*n, *k, opt.seed);
        ctk::dlog::RecoveryReport rep;
        if (*method == "bezout")
            rep = ctk::dlog::bezout_recover(m, *g);
        else
            rep = ctk::dlog::pohlig_hellman_recover(m, *g, *method == "ph-bsgs");
        json residues = json::object();
        for (auto [p, r] : rep.residues) residues[std::to_string(p)] = r;
        emit(opt,
             {{"command", "dlog solve"}, {"n", *n}, {"g", *g}, {"method", *method},
              {"k", rep.k}, {"queries", rep.total_queries}, {"residues", residues}},
             "k = " + std::to_string(rep.k) + " (" + std::to_string(rep.total_queries) +
                 " oracle queries)");
        if (rep.k != *k) throw std::runtime_error("recovered secret does not match");
    });
}

// ------------------------------------------------------------------ mask --

void add_mask(CLI::App& app, Options& opt) {
    auto* m = app.add_subcommand("mask", "masked-sharing linearization attack");
    m->require_subcommand(1);

    auto* gen = m->add_subcommand("gen", "generate a seeded instance");
    auto out_path = std::make_shared<std::string>();
    gen->add_option("--out", *out_path, "instance file (stdout when omitted)");
    gen->callback([&opt, out_path] {
        auto inst = ctk::mask::generate_instance(opt.seed);
        std::ostringstream buf;
        ctk::mask::write_instance(buf, inst.instance);
        if (out_path->empty()) {
            std::cout << buf.str();
        } else {
            std::ofstream f(*out_path);
            if (!f) throw std::runtime_error("cannot write " + *out_path);
            f << buf.str();
            emit(opt, {{"command", "mask gen"}, {"seed", opt.seed}, {"out", *out_path}},
                 "instance written to " + *out_path);
        }
    });

    auto* attack = m->add_subcommand("attack", "recover the unknown suffix");
    auto in_path = std::make_shared<std::string>();
    attack->add_option("--in", *in_path, "instance file (seeded self-test when omitted)");
    attack->callback([&opt, in_path] {
        ctk::mask::SharingInstance inst;
        json extra;
        if (in_path->empty()) {
            auto gen2 = ctk::mask::generate_instance(opt.seed);
            inst = gen2.instance;
            auto res = ctk::mask::attack(inst);
            std::size_t errors = 0;
            for (std::size_t i = 0; i < res.suffix.size(); ++i)
                errors += res.suffix.get(i) !=
                          gen2.witness.full_message.get(inst.params.prefix_bits + i);
            emit(opt,
                 {{"command", "mask attack"}, {"seed", opt.seed}, {"recovered", res.recovered},
                  {"suffix", bits_to_string(res.suffix)}, {"bit_errors", errors},
                  {"share_rows", res.share_rows}},
                 "suffix recovered with " + std::to_string(errors) + " bit errors; " +
                     std::to_string(res.share_rows.size()) + " share rows identified");
            if (errors) throw std::runtime_error("suffix recovery failed");
            return;
        }
        std::ifstream f(*in_path);
        if (!f) throw std::runtime_error("cannot open " + *in_path);
        inst = ctk::mask::read_instance(f);
        auto res = ctk::mask::attack(inst);
        emit(opt,
             {{"command", "mask attack"}, {"in", *in_path}, {"recovered", res.recovered},
              {"suffix", bits_to_string(res.suffix)}, {"share_rows", res.share_rows},
              {"ambiguous_bits", res.ambiguous_bits}},
             res.recovered ? "suffix: " + bits_to_string(res.suffix)
                           : "system leaves bits ambiguous");
    });
}

// ------------------------------------------------------------- permclose --

void add_permclose(CLI::App& app, Options& opt) {
    auto* pc = app.add_subcommand("permclose", "closeness of x ^ (x + a) to a permutation");
    pc->require_subcommand(1);

    auto* value = pc->add_subcommand("value", "closeness of one alpha");
    auto n = std::make_shared<unsigned>(4);
    auto alpha = std::make_shared<std::uint32_t>(1);
    value->add_option("--n", *n, "bit width")->required();
    value->add_option("--alpha", *alpha, "shift constant")->required();
    value->callback([&opt, n, alpha] {
        std::uint64_t c = ctk::permclose::closeness_recursive(*n, *alpha);
        emit(opt, {{"command", "permclose value"}, {"n", *n}, {"alpha", *alpha}, {"closeness", c}},
             "C = " + std::to_string(c));
    });

    auto* min = pc->add_subcommand("min", "minimum closeness and its minimizers");
    min->add_option("--n", *n, "bit width")->required();
    min->callback([&opt, n] {
        auto best = ctk::permclose::best_alphas(*n);
        std::string text = "C* = " + std::to_string(best.c_min) + ", minimizers:";
        for (auto a : best.minimizers) text += " " + std::to_string(a);
        emit(opt,
             {{"command", "permclose min"}, {"n", *n}, {"c_min", best.c_min},
              {"minimizers", best.minimizers}},
             text);
    });
}

// ------------------------------------------------------------------- gfs --

void add_gfs(CLI::App& app, Options& opt) {
    auto* gfs_cmd = app.add_subcommand("gfs", "generalized Feistel permutation parity");
    gfs_cmd->require_subcommand(1);

    auto* sign = gfs_cmd->add_subcommand("sign", "sign of a seeded scheme instance");
    auto variant = std::make_shared<std::string>("nlfsr");
    auto group = std::make_shared<std::string>("z4");
    auto m = std::make_shared<unsigned>(2);
    auto h_seed = std::make_shared<std::uint64_t>(1);
    auto k_seed = std::make_shared<std::uint64_t>(1);
    auto method = std::make_shared<std::string>("both");
    sign->add_option("--variant", *variant, "nlfsr, gfs2 or th");
    sign->add_option("--group", *group, "z2, z4, z2^2, z2xz4, ...");
    sign->add_option("--m", *m, "number of blocks");
    sign->add_option("--h-seed", *h_seed, "feedback table seed");
    sign->add_option("--k-seed", *k_seed, "round key seed");
    sign->add_option("--method", *method, "formula, brute or both")
        ->check(CLI::IsMember({"formula", "brute", "both"}));
    sign->callback([&opt, variant, group, m, h_seed, k_seed, method] {
        ctk::gfs::Group2t g = ctk::gfs::Group2t::parse(*group);
        auto spec = ctk::gfs::random_spec(ctk::gfs::parse_variant(*variant), *m, g, *h_seed,
                                          *k_seed);
        json rep = {{"command", "gfs sign"}, {"variant", *variant}, {"group", g.name()},
                    {"m", *m}};
        std::string text;
        if (*method != "brute") {
            auto r = ctk::gfs::sign_formula(spec, g);
            rep["formula_sign"] = r.sign;
            rep["fired_case"] = r.fired_case;
            rep["in_scope"] = r.in_scope;
            text += "formula: " + std::to_string(r.sign) + " (" + r.fired_case + ")";
        }
        if (*method != "formula") {
            int b = ctk::gfs::sign_bruteforce(spec, g);
            rep["brute_sign"] = b;
            if (!text.empty()) text += ", ";
            text += "brute force: " + std::to_string(b);
        }
        if (*method == "both" &&
            rep["formula_sign"].get<int>() != rep["brute_sign"].get<int>())
            throw std::runtime_error("formula and brute force disagree");
        emit(opt, rep, text);
    });

    auto* tau = gfs_cmd->add_subcommand("tau", "cycle census of the block rotation");
    auto t = std::make_shared<unsigned>(2);
    auto ell = std::make_shared<unsigned>(1);
    tau->add_option("--t", *t, "log2 of the ring size")->required();
    tau->add_option("--ell", *ell, "log2 of the block count")->required();
    tau->callback([&opt, t, ell] {
        auto rep = ctk::gfs::tau_rho(*t, *ell);
        emit(opt,
             {{"command", "gfs tau"}, {"t", *t}, {"ell", *ell}, {"tau", rep.tau},
              {"sign", rep.sign()}, {"cycles_of_length", rep.cycles_of_length}},
             "tau = " + std::to_string(rep.tau) + ", sign " + std::to_string(rep.sign()));
    });
}

// ----------------------------------------------------------------- share --

void add_share(CLI::App& app, Options& opt) {
    auto* sh = app.add_subcommand("share", "s-Boolean sharing detection");
    sh->require_subcommand(1);

    auto* check = sh->add_subcommand("check", "test a truth table for being a sharing");
    auto s = std::make_shared<unsigned>(2);
    auto path = std::make_shared<std::string>();
    auto mode = std::make_shared<std::string>("any");
    check->add_option("--s", *s, "share count")->required();
    check->add_option("--table", *path, "truth table file")->required();
    check->add_option("--mode", *mode, "ordered, any or anf")
        ->check(CLI::IsMember({"ordered", "any", "anf"}));
    check->callback([&opt, s, path, mode] {
        ctk::TruthTable g = load_table(*path);
        ctk::share::SharingVerdict v;
        if (*mode == "ordered") v = ctk::share::is_sharing_ordered(g, *s);
        else if (*mode == "anf") v = ctk::share::anf_sharing_heuristic(g, *s);
        else v = ctk::share::is_sharing_any(g, *s);
        json rep = {{"command", "share check"}, {"s", *s}, {"mode", *mode},
                    {"is_sharing", v.is_sharing}};
        std::string text = v.is_sharing ? "sharing detected" : "not a sharing";
        if (v.is_sharing) {
            std::ostringstream f;
            ctk::write_truth_table(f, v.f);
            rep["f"] = f.str();
            rep["pi"] = v.pi;
            text += "; shared function:\n" + f.str();
        }
        emit(opt, rep, text);
    });

    auto* make = sh->add_subcommand("make", "build a seeded sharing of a random function");
    auto n = std::make_shared<unsigned>(2);
    auto m = std::make_shared<unsigned>(1);
    make->add_option("--s", *s, "share count")->required();
    make->add_option("--n", *n, "input bits of the shared function");
    make->add_option("--m", *m, "output bits of the shared function");
    make->callback([&opt, s, n, m] {
        std::mt19937_64 rng(opt.seed);
        ctk::TruthTable f;
        f.in_bits = *n;
        f.out_bits = *m;
        f.table.resize(std::size_t(1) << *n);
        for (auto& v : f.table) v = std::uint32_t(rng()) & ((1u << *m) - 1);
        ctk::TruthTable g = ctk::share::make_sharing(f, *s, rng());
        std::ostringstream buf;
        ctk::write_truth_table(buf, g);
        std::cout << buf.str();
    });
}

// ------------------------------------------------------------------ sbox --

void add_sbox(CLI::App& app, Options& opt) {
    auto* sb = app.add_subcommand("sbox", "Boolean function analysis");
    sb->require_subcommand(1);

    auto* apn = sb->add_subcommand("apn", "differential uniformity of x^d over GF(2^n)");
    auto n = std::make_shared<unsigned>(5);
    auto d = std::make_shared<std::uint64_t>(13);
    apn->add_option("--n", *n, "field degree")->required();
    apn->add_option("--d", *d, "exponent")->required();
    apn->callback([&opt, n, d] {
        ctk::FieldGF2n field(*n);
        auto f = ctk::boolfn::power_map(field, *d);
        unsigned du = ctk::boolfn::differential_uniformity(f);
        emit(opt,
             {{"command", "sbox apn"}, {"n", *n}, {"d", *d}, {"differential_uniformity", du},
              {"apn", du == 2}},
             "delta(x^" + std::to_string(*d) + ") = " + std::to_string(du) +
                 (du == 2 ? " (APN)" : ""));
    });

    auto* dist = sb->add_subcommand("dist", "distance to the nearest affine function");
    auto hex = std::make_shared<std::string>();
    dist->add_option("--table", *hex,
                     "2^n hex digits, outputs for inputs 0..2^n-1 (default: built-in 4-bit S)");
    dist->callback([&opt, hex] {
        ctk::boolfn::Sbox f;
        if (hex->empty()) {
            f = ctk::boolfn::students_sbox();
        } else {
            f.table.reserve(hex->size());
            for (char c : *hex)
                f.table.push_back(std::uint32_t(std::stoul(std::string(1, c), nullptr, 16)));
            f.n = 0;
            while ((std::size_t(1) << f.n) < f.table.size()) ++f.n;
        }
        auto w = ctk::boolfn::distance_to_affine(f);
        emit(opt,
             {{"command", "sbox dist"}, {"distance", w.distance}, {"constant", w.constant},
              {"linear_columns", w.linear}},
             "distance to affine = " + std::to_string(w.distance));
    });

    auto* rc = sb->add_subcommand("rounds-check", "invariant contradiction for claimed pairs");
    auto pairs = std::make_shared<std::vector<std::string>>();
    rc->add_option("--pair", *pairs, "plaintext:ciphertext nibble pair in hex, repeatable")
        ->required();
    rc->callback([&opt, pairs] {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> parsed;
        for (const auto& s : *pairs) {
            auto colon = s.find(':');
            if (colon == std::string::npos) throw std::runtime_error("pair must be x:y");
            parsed.push_back({std::uint32_t(std::stoul(s.substr(0, colon), nullptr, 16)),
                              std::uint32_t(std::stoul(s.substr(colon + 1), nullptr, 16))});
        }
        auto v = ctk::boolfn::students_contradiction(parsed);
        emit(opt,
             {{"command", "sbox rounds-check"}, {"constants", v.constants},
              {"refined_constants", v.refined_constants}, {"contradiction", v.contradiction}},
             v.contradiction ? "pairs are inconsistent with the cipher structure"
                             : "pairs are consistent");
    });
}

// ------------------------------------------------------------------ qsim --

void add_qsim(CLI::App& app, Options& opt) {
    auto* q = app.add_subcommand("qsim", "small state-vector quantum simulator");
    q->require_subcommand(1);

    auto* run_cmd = q->add_subcommand("run", "run a circuit file on |0...0>");
    auto qubits = std::make_shared<unsigned>(2);
    auto path = std::make_shared<std::string>();
    run_cmd->add_option("--qubits", *qubits, "number of wires")->required();
    run_cmd->add_option("--circuit", *path, "file with one gate per line")->required();
    run_cmd->callback([&opt, qubits, path] {
        std::ifstream in(*path);
        if (!in) throw std::runtime_error("cannot open " + *path);
        ctk::qsim::Circuit circuit;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            circuit.push_back(ctk::qsim::Gate::parse(line));
        }
        auto st = ctk::qsim::StateVector::basis(*qubits, 0);
        ctk::qsim::run(st, circuit);
        json amps = json::array();
        std::string text;
        auto probs = st.probabilities();
        for (std::size_t i = 0; i < st.amp.size(); ++i) {
            amps.push_back({{"re", st.amp[i].real()}, {"im", st.amp[i].imag()}});
            if (probs[i] > 1e-12) {
                std::string basis;
                for (unsigned b = 0; b < *qubits; ++b)
                    basis += char('0' + (i >> (*qubits - 1 - b) & 1));
                std::ostringstream os;
                os << "|" << basis << ">: " << st.amp[i] << "\n";
                text += os.str();
            }
        }
        emit(opt, {{"command", "qsim run"}, {"qubits", *qubits}, {"amplitudes", amps}}, text);
    });

    auto* demo = q->add_subcommand("qec-demo", "repetition-code error correction walkthrough");
    auto alt = std::make_shared<bool>(false);
    demo->add_flag("--alt", *alt, "use the single-Toffoli correction circuit");
    demo->callback([&opt, alt] {
        auto circuit = *alt ? ctk::qsim::alt_correction_circuit()
                            : ctk::qsim::correction_circuit();
        json flips = json::array();
        std::string text;
        ctk::qsim::cplx alpha = 0.6, beta = 0.8;
        for (int flip = -1; flip < 3; ++flip) {
            auto st = ctk::qsim::with_ancillas(ctk::qsim::repetition_encode(alpha, beta));
            if (flip >= 0) ctk::qsim::inject_bitflip(st, unsigned(flip));
            ctk::qsim::run(st, circuit);
            double fid = ctk::qsim::data_fidelity(st, alpha, beta);
            std::string label = flip < 0 ? "none" : "qubit " + std::to_string(flip);
            flips.push_back({{"flip", label}, {"fidelity", fid}});
            text += "flip " + label + ": fidelity " + std::to_string(fid) + "\n";
        }
        emit(opt, {{"command", "qsim qec-demo"}, {"alt_circuit", *alt}, {"cases", flips}}, text);
    });

    auto* noise = q->add_subcommand("noise", "logical error rate sweep");
    auto eps = std::make_shared<std::vector<double>>();
    auto trials = std::make_shared<unsigned>(500);
    auto alt2 = std::make_shared<bool>(false);
    noise->add_option("--eps", *eps, "noise strengths, repeatable")->required();
    noise->add_option("--trials", *trials, "trials per point");
    noise->add_flag("--alt", *alt2, "use the single-Toffoli circuit");
    noise->callback([&opt, eps, trials, alt2] {
        auto pts = ctk::qsim::noise_sweep(*eps, *trials, opt.seed, *alt2);
        json arr = json::array();
        std::string text;
        for (const auto& p : pts) {
            arr.push_back({{"eps", p.eps}, {"logical_rate", p.logical_rate},
                           {"unprotected_rate", p.unprotected_rate}});
            text += "eps " + std::to_string(p.eps) + ": logical " +
                    std::to_string(p.logical_rate) + ", unprotected " +
                    std::to_string(p.unprotected_rate) + "\n";
        }
        emit(opt, {{"command", "qsim noise"}, {"seed", opt.seed}, {"points", arr}}, text);
    });
}

// ----------------------------------------------------------------- route --

void add_route(CLI::App& app, Options& opt) {
    auto* r = app.add_subcommand("route", "two-layer routing of a bit permutation");
    auto present = std::make_shared<bool>(false);
    auto present16 = std::make_shared<bool>(false);
    auto perm_path = std::make_shared<std::string>();
    auto svg_path = std::make_shared<std::string>();
    auto verify = std::make_shared<bool>(false);
    r->add_flag("--present", *present, "use the built-in 64-bit permutation");
    r->add_flag("--present16", *present16, "use the 16-bit school variant");
    r->add_option("--perm", *perm_path, "JSON array file with P(0..n-1)");
    r->add_option("--svg", *svg_path, "write the plan as SVG");
    r->add_flag("--verify", *verify, "run the conflict verifier");
    r->callback([&opt, present, present16, perm_path, svg_path, verify] {
        ctk::Permutation p = ctk::Permutation::identity(1);
        if (*present) p = ctk::route::present_permutation();
        else if (*present16) p = ctk::route::present16_permutation();
        else if (!perm_path->empty()) {
            std::ifstream in(*perm_path);
            if (!in) throw std::runtime_error("cannot open " + *perm_path);
            json arr = json::parse(in);
            p = ctk::Permutation(arr.get<std::vector<std::uint32_t>>());
        } else {
            throw CLI::ValidationError("route", "need --present, --present16 or --perm");
        }
        auto plan = ctk::route::route_two_layer(p);
        auto decision = ctk::route::min_layers(p);
        json rep = {{"command", "route"}, {"n", plan.n}, {"min_layers", decision.layers},
                    {"inversions", decision.inversions}};
        std::string text = "n = " + std::to_string(plan.n) + ", min layers " +
                           std::to_string(decision.layers) + " (" +
                           std::to_string(decision.inversions) + " inversions)";
        if (*verify) {
            auto conflicts = ctk::route::verify_plan(plan);
            rep["conflicts"] = conflicts.size();
            text += ", " + std::to_string(conflicts.size()) + " conflicts";
            if (!conflicts.empty()) {
                emit(opt, rep, text);
                throw std::runtime_error("plan has conflicts");
            }
        }
        if (!svg_path->empty()) {
            std::ofstream out(*svg_path);
            if (!out) throw std::runtime_error("cannot write " + *svg_path);
            out << ctk::route::emit_svg(plan);
            rep["svg"] = *svg_path;
            text += ", SVG -> " + *svg_path;
        }
        emit(opt, rep, text);
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cryptanalysis toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global --json/--seed may follow the subcommand
    Options opt;
    opt.seed = default_seed();
    app.add_flag("--json", opt.as_json, "machine-readable JSON reports");
    app.add_option("--seed", opt.seed, "seed for randomized commands (env CTK_SEED)");
    app.add_option("--threads", opt.threads, "worker cap for sweep commands");

    add_puzzle(app, opt);
    add_fpe(app, opt);
    add_dlog(app, opt);
    add_mask(app, opt);
    add_permclose(app, opt);
    add_gfs(app, opt);
    add_share(app, opt);
    add_sbox(app, opt);
    add_qsim(app, opt);
    add_route(app, opt);

    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    auto quick = std::make_shared<bool>(false);
    selftest->add_flag("--quick", *quick, "reduced sweep sizes");
    selftest->callback([quick] {
        if (!ctk::acceptance::run_all(std::cout, *quick))
            throw std::runtime_error("selftest failed");
    });

    if (argc <= 1) {
        std::cerr << app.help();
        return 2;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n' << "run with --help for usage\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
