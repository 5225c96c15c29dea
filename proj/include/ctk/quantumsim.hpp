#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace ctk::qsim {

using cplx = std::complex<double>;

/// Dense state vector. Qubit 0 is the top wire of a circuit diagram and the
/// most significant bit of the basis index.
struct StateVector {
    unsigned num_qubits = 0;
    std::vector<cplx> amp;

    static StateVector basis(unsigned qubits, std::size_t index);
    double norm() const;
    /// Probability of each computational basis state.
    std::vector<double> probabilities() const;
};

/// |<a|b>|^2 (global phase ignored).
double fidelity(const StateVector& a, const StateVector& b);

enum class GateKind { X, Z, H, CNOT, SWAP, Toffoli };

struct Gate {
    GateKind kind;
    std::array<unsigned, 3> wires{};  // controls first, target last

    unsigned arity() const;
    static Gate parse(const std::string& line);  // "CNOT 0 1"
    std::string to_string() const;
};

using Circuit = std::vector<Gate>;

void apply(StateVector& state, const Gate& gate);
void run(StateVector& state, const Circuit& circuit);

/// Noisy execution: after each gate every touched wire gets an extra X with
/// independent probability eps. eps = 0 reproduces run() bit-for-bit.
void run_noisy(StateVector& state, const Circuit& circuit, double eps, std::mt19937_64& rng);

/// H then CNOT on |00>: the Bell state (|00> + |11>)/sqrt(2).
StateVector bell_pair();

/// Q1 circuit: Z then X on the second qubit, Bell -> singlet.
void bell_to_singlet(StateVector& state);

struct BellOutcome {
    bool deterministic = false;
    std::string label;           // "00", "01", "10" or "11" when deterministic
    std::vector<double> probabilities;
};

/// Q2 circuit: CNOT (wire 0 controlling wire 1) then H on wire 0, followed
/// by measurement. Deterministic for the three reference Bell-type states.
BellOutcome distinguish_bell(const StateVector& state);

/// 3-qubit repetition code, data on wires 0..2.
StateVector repetition_encode(cplx alpha, cplx beta);
void inject_bitflip(StateVector& state, unsigned wire);

/// Syndrome extraction onto ancillas 3, 4 plus the Toffoli/X correction
/// network (reference correction circuit). Acts on a 5-qubit state.
Circuit correction_circuit();

/// The participants' circuit with a single Toffoli gate.
Circuit alt_correction_circuit();

/// Extend a 3-qubit data state with |00> ancillas.
StateVector with_ancillas(const StateVector& data3);

/// Overlap of the 5-qubit state with alpha|000> + beta|111> on the data
/// wires, summed over all ancilla configurations.
double data_fidelity(const StateVector& state5, cplx alpha, cplx beta);

struct NoisePoint {
    double eps = 0;
    double logical_rate = 0;      // P(data fidelity < 1/2) after noisy correction
    double unprotected_rate = 0;  // single unencoded qubit, one noisy gate slot
};

std::vector<NoisePoint> noise_sweep(const std::vector<double>& epsilons, unsigned trials,
                                    std::uint64_t seed, bool use_alt_circuit = false);

}  // namespace ctk::qsim
