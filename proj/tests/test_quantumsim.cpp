#include <cmath>
#include <random>

#include "ctk/quantumsim.hpp"
#include "doctest.h"

using namespace ctk::qsim;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kTol = 1e-10;

StateVector random_qubit(std::mt19937_64& rng, cplx& alpha, cplx& beta) {
    std::uniform_real_distribution<double> uni(0.0, 2.0 * 3.14159265358979323846);
    double phi = uni(rng), theta = uni(rng);
    alpha = std::cos(phi);
    beta = std::sin(phi) * std::exp(cplx(0, theta));
    StateVector st = StateVector::basis(1, 0);
    st.amp = {alpha, beta};
    return st;
}
}  // namespace

TEST_CASE("gate parsing round trips") {
    for (const char* line : {"X 0", "Z 2", "H 1", "CNOT 0 1", "SWAP 1 2", "Toffoli 0 1 2"}) {
        Gate g = Gate::parse(line);
        CHECK(Gate::parse(g.to_string()).to_string() == g.to_string());
    }
    CHECK(Gate::parse("CX 0 1").kind == GateKind::CNOT);
    CHECK(Gate::parse("CCX 0 1 2").kind == GateKind::Toffoli);
    CHECK_THROWS(Gate::parse("CNOT 0 0"));
    CHECK_THROWS(Gate::parse("FROB 1"));
}

TEST_CASE("single-qubit gates act on the correct wire (qubit 0 = MSB)") {
    StateVector st = StateVector::basis(2, 0b00);
    apply(st, Gate::parse("X 0"));
    CHECK(std::abs(st.amp[0b10] - 1.0) < kTol);
    apply(st, Gate::parse("X 1"));
    CHECK(std::abs(st.amp[0b11] - 1.0) < kTol);
    apply(st, Gate::parse("Z 0"));
    CHECK(std::abs(st.amp[0b11] + 1.0) < kTol);
    // H twice is identity
    apply(st, Gate::parse("H 1"));
    apply(st, Gate::parse("H 1"));
    CHECK(std::abs(st.amp[0b11] + 1.0) < kTol);
    CHECK(std::abs(st.norm() - 1.0) < kTol);
}

TEST_CASE("controlled gates") {
    StateVector st = StateVector::basis(2, 0b10);  // qubit 0 set
    apply(st, Gate::parse("CNOT 0 1"));
    CHECK(std::abs(st.amp[0b11] - 1.0) < kTol);
    StateVector off = StateVector::basis(2, 0b01);  // control clear
    apply(off, Gate::parse("CNOT 0 1"));
    CHECK(std::abs(off.amp[0b01] - 1.0) < kTol);
    StateVector t = StateVector::basis(3, 0b110);
    apply(t, Gate::parse("Toffoli 0 1 2"));
    CHECK(std::abs(t.amp[0b111] - 1.0) < kTol);
    StateVector sw = StateVector::basis(2, 0b10);
    apply(sw, Gate::parse("SWAP 0 1"));
    CHECK(std::abs(sw.amp[0b01] - 1.0) < kTol);
}

TEST_CASE("bell pair, singlet transform, distinguisher") {
    StateVector bell = bell_pair();
    CHECK(std::abs(bell.amp[0] - kInvSqrt2) < kTol);
    CHECK(std::abs(bell.amp[3] - kInvSqrt2) < kTol);
    CHECK(std::abs(bell.amp[1]) < kTol);
    CHECK(std::abs(bell.amp[2]) < kTol);

    bell_to_singlet(bell);
    CHECK(std::abs(bell.amp[1] - kInvSqrt2) < kTol);
    CHECK(std::abs(bell.amp[2] + kInvSqrt2) < kTol);

    StateVector phi_plus = bell_pair();
    CHECK(distinguish_bell(phi_plus).label == "00");
    StateVector psi_plus = StateVector::basis(2, 0);
    psi_plus.amp = {0, kInvSqrt2, kInvSqrt2, 0};
    CHECK(distinguish_bell(psi_plus).label == "01");
    StateVector singlet = StateVector::basis(2, 0);
    singlet.amp = {0, kInvSqrt2, -kInvSqrt2, 0};
    auto out = distinguish_bell(singlet);
    CHECK(out.deterministic);
    CHECK(out.label == "11");
}

TEST_CASE("repetition code corrects every single bit flip, both circuits") {
    std::mt19937_64 rng(123);
    Circuit main_c = correction_circuit();
    Circuit alt_c = alt_correction_circuit();
    unsigned toffoli = 0;
    for (const auto& g : alt_c) toffoli += g.kind == GateKind::Toffoli;
    CHECK(toffoli == 1);
    for (int trial = 0; trial < 25; ++trial) {
        cplx alpha, beta;
        random_qubit(rng, alpha, beta);
        for (int flip = -1; flip < 3; ++flip)
            for (const auto* circuit : {&main_c, &alt_c}) {
                StateVector st = with_ancillas(repetition_encode(alpha, beta));
                if (flip >= 0) inject_bitflip(st, unsigned(flip));
                run(st, *circuit);
                CHECK(data_fidelity(st, alpha, beta) >= 1.0 - 1e-12);
            }
    }
}

TEST_CASE("two flips defeat the code (syndrome ambiguity)") {
    StateVector st = with_ancillas(repetition_encode(1.0, 0.0));
    inject_bitflip(st, 0);
    inject_bitflip(st, 1);
    run(st, correction_circuit());
    CHECK(data_fidelity(st, 1.0, 0.0) < 0.5);
}

TEST_CASE("noisy runs: eps = 0 is exact, eps = 1 flips everything") {
    std::mt19937_64 rng(9);
    StateVector a = bell_pair();
    StateVector b = StateVector::basis(2, 0);
    Circuit prep = {Gate::parse("H 0"), Gate::parse("CNOT 0 1")};
    run_noisy(b, prep, 0.0, rng);
    CHECK(fidelity(a, b) > 1.0 - kTol);
}

TEST_CASE("noise sweep: monotone logical rate, protection at small eps") {
    std::vector<double> eps = {0.0, 0.02, 0.2};
    auto pts = noise_sweep(eps, 300, 5, false);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].logical_rate == 0.0);
    CHECK(pts[0].unprotected_rate == 0.0);
    CHECK(pts[1].logical_rate <= pts[2].logical_rate);
    // determinism for a fixed seed
    auto again = noise_sweep(eps, 300, 5, false);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(pts[i].logical_rate == again[i].logical_rate);
        CHECK(pts[i].unprotected_rate == again[i].unprotected_rate);
    }
}
