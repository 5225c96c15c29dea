#include "ctk/quantumsim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ctk::qsim {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

StateVector StateVector::basis(unsigned qubits, std::size_t index) {
    if (qubits > 20) throw std::invalid_argument("StateVector: > 20 qubits");
    StateVector s;
    s.num_qubits = qubits;
    s.amp.assign(std::size_t(1) << qubits, cplx(0, 0));
    s.amp.at(index) = 1.0;
    return s;
}

double StateVector::norm() const {
    double n = 0;
    for (const auto& a : amp) n += std::norm(a);
    return n;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amp.size());
    for (std::size_t i = 0; i < amp.size(); ++i) p[i] = std::norm(amp[i]);
    return p;
}

double fidelity(const StateVector& a, const StateVector& b) {
    if (a.amp.size() != b.amp.size()) throw std::invalid_argument("fidelity: size mismatch");
    cplx inner(0, 0);
    for (std::size_t i = 0; i < a.amp.size(); ++i) inner += std::conj(a.amp[i]) * b.amp[i];
    return std::norm(inner);
}

unsigned Gate::arity() const {
    switch (kind) {
        case GateKind::X:
        case GateKind::Z:
        case GateKind::H: return 1;
        case GateKind::CNOT:
        case GateKind::SWAP: return 2;
        case GateKind::Toffoli: return 3;
    }
    throw std::logic_error("Gate::arity");
}

Gate Gate::parse(const std::string& line) {
    std::istringstream in(line);
    std::string name;
    in >> name;
    std::transform(name.begin(), name.end(), name.begin(), ::toupper);
    Gate g{};
    if (name == "X") g.kind = GateKind::X;
    else if (name == "Z") g.kind = GateKind::Z;
    else if (name == "H") g.kind = GateKind::H;
    else if (name == "CNOT" || name == "CX") g.kind = GateKind::CNOT;
    else if (name == "SWAP") g.kind = GateKind::SWAP;
    else if (name == "TOFFOLI" || name == "CCX" || name == "CCNOT") g.kind = GateKind::Toffoli;
    else throw std::invalid_argument("unknown gate '" + name + "'");
    for (unsigned i = 0; i < g.arity(); ++i)
        if (!(in >> g.wires[i])) throw std::invalid_argument("gate '" + name + "': missing wire");
    for (unsigned i = 0; i < g.arity(); ++i)
        for (unsigned j = i + 1; j < g.arity(); ++j)
            if (g.wires[i] == g.wires[j]) throw std::invalid_argument("gate wires must be distinct");
    return g;
}

std::string Gate::to_string() const {
    static const char* names[] = {"X", "Z", "H", "CNOT", "SWAP", "TOFFOLI"};
    std::ostringstream out;
    out << names[int(kind)];
    for (unsigned i = 0; i < arity(); ++i) out << ' ' << wires[i];
    return out.str();
}

void apply(StateVector& state, const Gate& gate) {
    const unsigned q = state.num_qubits;
    for (unsigned i = 0; i < gate.arity(); ++i)
        if (gate.wires[i] >= q) throw std::invalid_argument("gate wire out of range");
    auto bit = [q](unsigned wire) { return std::size_t(1) << (q - 1 - wire); };
    auto& amp = state.amp;
    const std::size_t size = amp.size();

    switch (gate.kind) {
        case GateKind::X: {
            std::size_t m = bit(gate.wires[0]);
            for (std::size_t i = 0; i < size; ++i)
                if (!(i & m)) std::swap(amp[i], amp[i | m]);
            break;
        }
        case GateKind::Z: {
            std::size_t m = bit(gate.wires[0]);
            for (std::size_t i = 0; i < size; ++i)
                if (i & m) amp[i] = -amp[i];
            break;
        }
        case GateKind::H: {
            std::size_t m = bit(gate.wires[0]);
            for (std::size_t i = 0; i < size; ++i) {
                if (i & m) continue;
                cplx a = amp[i], b = amp[i | m];
                amp[i] = (a + b) * kInvSqrt2;
                amp[i | m] = (a - b) * kInvSqrt2;
            }
            break;
        }
        case GateKind::CNOT: {
            std::size_t c = bit(gate.wires[0]), t = bit(gate.wires[1]);
            for (std::size_t i = 0; i < size; ++i)
                if ((i & c) && !(i & t)) std::swap(amp[i], amp[i | t]);
            break;
        }
        case GateKind::SWAP: {
            std::size_t a = bit(gate.wires[0]), b = bit(gate.wires[1]);
            for (std::size_t i = 0; i < size; ++i)
                if ((i & a) && !(i & b)) std::swap(amp[i], amp[(i & ~a) | b]);
            break;
        }
        case GateKind::Toffoli: {
            std::size_t c1 = bit(gate.wires[0]), c2 = bit(gate.wires[1]), t = bit(gate.wires[2]);
            for (std::size_t i = 0; i < size; ++i)
                if ((i & c1) && (i & c2) && !(i & t)) std::swap(amp[i], amp[i | t]);
            break;
        }
    }
}

void run(StateVector& state, const Circuit& circuit) {
    for (const auto& g : circuit) apply(state, g);
}

void run_noisy(StateVector& state, const Circuit& circuit, double eps, std::mt19937_64& rng) {
    if (eps < 0 || eps > 1) throw std::invalid_argument("run_noisy: eps outside [0, 1]");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (const auto& g : circuit) {
        apply(state, g);
        if (eps == 0) continue;
        for (unsigned i = 0; i < g.arity(); ++i)
            if (unit(rng) < eps) apply(state, Gate{GateKind::X, {g.wires[i]}});
    }
}

StateVector bell_pair() {
    StateVector s = StateVector::basis(2, 0);
    apply(s, Gate{GateKind::H, {0}});
    apply(s, Gate{GateKind::CNOT, {0, 1}});
    return s;
}

void bell_to_singlet(StateVector& state) {
    apply(state, Gate{GateKind::Z, {1}});
    apply(state, Gate{GateKind::X, {1}});
}

BellOutcome distinguish_bell(const StateVector& state) {
    if (state.num_qubits != 2) throw std::invalid_argument("distinguish_bell: need 2 qubits");
    StateVector s = state;
    apply(s, Gate{GateKind::CNOT, {0, 1}});
    apply(s, Gate{GateKind::H, {0}});
    BellOutcome out;
    out.probabilities = s.probabilities();
    for (std::size_t i = 0; i < 4; ++i) {
        if (out.probabilities[i] > 1.0 - 1e-10) {
            out.deterministic = true;
            out.label = {char('0' + (i >> 1 & 1)), char('0' + (i & 1))};
        }
    }
    return out;
}

StateVector repetition_encode(cplx alpha, cplx beta) {
    double n = std::norm(alpha) + std::norm(beta);
    if (std::abs(n - 1.0) > 1e-9) throw std::invalid_argument("repetition_encode: not normalized");
    StateVector s = StateVector::basis(3, 0);
    s.amp[0] = alpha;
    s.amp[0b100] = beta;  // qubit 0 is the high bit
    apply(s, Gate{GateKind::CNOT, {0, 1}});
    apply(s, Gate{GateKind::CNOT, {1, 2}});
    return s;
}

void inject_bitflip(StateVector& state, unsigned wire) {
    apply(state, Gate{GateKind::X, {wire}});
}

Circuit correction_circuit() {
    return {
        // syndrome extraction: a3 = q0 ^ q1, a4 = q0 ^ q2
        Gate{GateKind::CNOT, {0, 3}},
        Gate{GateKind::CNOT, {1, 3}},
        Gate{GateKind::CNOT, {0, 4}},
        Gate{GateKind::CNOT, {2, 4}},
        // correction: 11 -> q0, 10 -> q1, 01 -> q2
        Gate{GateKind::Toffoli, {3, 4, 0}},
        Gate{GateKind::X, {4}},
        Gate{GateKind::Toffoli, {3, 4, 1}},
        Gate{GateKind::X, {3}},
        Gate{GateKind::X, {4}},
        Gate{GateKind::Toffoli, {3, 4, 2}},
    };
}

Circuit alt_correction_circuit() {
    return {
        Gate{GateKind::CNOT, {0, 3}},
        Gate{GateKind::CNOT, {3, 0}},
        Gate{GateKind::CNOT, {1, 4}},
        Gate{GateKind::CNOT, {4, 1}},
        Gate{GateKind::CNOT, {2, 3}},
        Gate{GateKind::CNOT, {2, 4}},
        Gate{GateKind::Toffoli, {3, 4, 2}},
        Gate{GateKind::CNOT, {2, 1}},
        Gate{GateKind::CNOT, {2, 0}},
    };
}

StateVector with_ancillas(const StateVector& data3) {
    if (data3.num_qubits != 3) throw std::invalid_argument("with_ancillas: need 3 qubits");
    StateVector s;
    s.num_qubits = 5;
    s.amp.assign(32, cplx(0, 0));
    for (std::size_t i = 0; i < 8; ++i) s.amp[i << 2] = data3.amp[i];
    return s;
}

double data_fidelity(const StateVector& state5, cplx alpha, cplx beta) {
    if (state5.num_qubits != 5) throw std::invalid_argument("data_fidelity: need 5 qubits");
    double total = 0;
    for (std::size_t anc = 0; anc < 4; ++anc) {
        cplx inner = std::conj(alpha) * state5.amp[(0b000 << 2) | anc] +
                     std::conj(beta) * state5.amp[(0b111 << 2) | anc];
        total += std::norm(inner);
    }
    return total;
}

std::vector<NoisePoint> noise_sweep(const std::vector<double>& epsilons, unsigned trials,
                                    std::uint64_t seed, bool use_alt_circuit) {
    if (trials < 1) throw std::invalid_argument("noise_sweep: trials < 1");
    std::vector<NoisePoint> out;
    const Circuit circuit = use_alt_circuit ? alt_correction_circuit() : correction_circuit();
    for (double eps : epsilons) {
        std::mt19937_64 rng(seed ^ std::bit_cast<std::uint64_t>(eps));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        unsigned logical = 0, unprotected = 0;
        for (unsigned t = 0; t < trials; ++t) {
            double phi = unit(rng) * 2 * 3.14159265358979323846;
            cplx alpha = std::cos(phi), beta = std::sin(phi);
            StateVector s = with_ancillas(repetition_encode(alpha, beta));
            run_noisy(s, circuit, eps, rng);
            if (data_fidelity(s, alpha, beta) < 0.5) ++logical;
            // comparison point: an unencoded qubit through one noisy gate slot
            if (unit(rng) < eps) ++unprotected;
        }
        out.push_back({eps, double(logical) / trials, double(unprotected) / trials});
    }
    return out;
}

}  // namespace ctk::qsim
