// Circuit data model, the .qcirc text format, and the gadget transform that
// rewrites every T/Tdg/Rz gate into a CNOT onto a fresh post-selected qubit
// consuming one phase-state |A_theta> = (|0> + e^{i theta}|1>)/sqrt(2).
//
// Rz(theta) here means the phase gate diag(1, e^{i theta}), so T == Rz(pi/4)
// exactly (no global-phase fudging anywhere in the pipeline).
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qcsat/pauli.hpp"

namespace qcsat {

enum class GateKind { H, S, Sdg, X, Y, Z, CX, CZ, Swap, T, Tdg, Rz };

struct Gate {
  GateKind kind = GateKind::H;
  std::uint32_t q0 = 0;
  std::uint32_t q1 = 0;  // CX target / second qubit of CZ, Swap
  double angle = 0.0;    // Rz only

  static Gate h(std::uint32_t q) { return {GateKind::H, q, 0, 0}; }
  static Gate s(std::uint32_t q) { return {GateKind::S, q, 0, 0}; }
  static Gate sdg(std::uint32_t q) { return {GateKind::Sdg, q, 0, 0}; }
  static Gate x(std::uint32_t q) { return {GateKind::X, q, 0, 0}; }
  static Gate y(std::uint32_t q) { return {GateKind::Y, q, 0, 0}; }
  static Gate z(std::uint32_t q) { return {GateKind::Z, q, 0, 0}; }
  static Gate cx(std::uint32_t c, std::uint32_t t) {
    return {GateKind::CX, c, t, 0};
  }
  static Gate cz(std::uint32_t a, std::uint32_t b) {
    return {GateKind::CZ, a, b, 0};
  }
  static Gate swap(std::uint32_t a, std::uint32_t b) {
    return {GateKind::Swap, a, b, 0};
  }
  static Gate t(std::uint32_t q) { return {GateKind::T, q, 0, 0}; }
  static Gate tdg(std::uint32_t q) { return {GateKind::Tdg, q, 0, 0}; }
  static Gate rz(double theta, std::uint32_t q) {
    return {GateKind::Rz, q, 0, theta};
  }

  bool operator==(const Gate&) const = default;
};

bool is_clifford(GateKind kind);
bool is_two_qubit(GateKind kind);
const char* gate_name(GateKind kind);

// Inverse of a single gate (CX/CZ/Swap/H/X/Y/Z are self-inverse).
Gate dagger(const Gate& g);

// Inverse of a gate sequence: daggers in reverse order.
std::vector<Gate> dagger_sequence(const std::vector<Gate>& gates);

// Same gates with qubit i renamed to map[i] (map must be injective).
std::vector<Gate> remap_qubits(const std::vector<Gate>& gates,
                               const std::vector<std::size_t>& map);

struct Circuit {
  std::size_t num_qubits = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(std::size_t n) : num_qubits(n) {}

  void append(const Gate& g) { gates.push_back(g); }
  // Number of non-Clifford gates (T, Tdg, Rz), counted structurally.
  std::size_t t_count() const;
  bool is_clifford_only() const;
};

// Conjugate p by one Clifford gate: p <- g p g^dagger. Throws on T/Tdg/Rz.
void conjugate_by_gate(PauliString& p, const Gate& g);

// A decision-problem instance: the circuit acts on witness + ancilla qubits
// (a partition of [0, num_qubits)); acceptance means every output qubit
// measures 1.
struct QcsatInstance {
  Circuit circuit;
  std::vector<std::size_t> witness;
  std::vector<std::size_t> ancilla;
  std::vector<std::size_t> outputs;
};

// Throws ParseError when registers are missing/overlapping/out of range.
void validate_instance(const QcsatInstance& inst);

// Text format (one item per line, '#' comments, 0-based qubits):
//   qubits N
//   witness 0 2..4        (indices and inclusive ranges; may repeat)
//   ancilla 1 5
//   output 5
//   h 0 | s 0 | sdg 0 | x 0 | y 0 | z 0 | t 0 | tdg 0
//   rz <angle> <qubit>
//   cx <control> <target> | cz a b | swap a b
// witness/ancilla default to each other's complement when only one is given;
// both may be omitted for circuits used purely as unitaries.
QcsatInstance parse_qcsat(std::istream& in);
QcsatInstance parse_qcsat_file(const std::string& path);
std::string serialize_qcsat(const QcsatInstance& inst);

// Result of replacing each non-Clifford phase gate with a gadget.
struct GadgetizedCircuit {
  Circuit clifford;            // on base_qubits + angles.size() qubits
  std::vector<double> angles;  // gadget j sits at qubit base_qubits + j
  std::size_t base_qubits = 0;
};

GadgetizedCircuit gadgetize(const Circuit& c);

}  // namespace qcsat
