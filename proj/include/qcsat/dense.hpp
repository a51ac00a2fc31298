// Brute-force dense oracle: statevector simulation, circuit unitaries,
// exact optimal acceptance values by eigensolve, and the exact
// distance-to-identity of a unitary. Exponential in qubit count; guarded by
// the caps in config.hpp. Everything downstream is validated against this.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qcsat/circuit.hpp"
#include "qcsat/pauli.hpp"

namespace qcsat {

using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

// |0...0> on n qubits (throws CapExceeded past kDenseStateCap).
CVec zero_state(std::size_t n);

// Basis state |index> on n qubits.
CVec basis_state(std::size_t n, std::size_t index);

// In-place gate application; qubit q is bit q of the amplitude index.
void apply_gate_dense(CVec& state, const Gate& g);

CVec apply_circuit_dense(const Circuit& c, CVec state);

// Full 2^n x 2^n unitary (throws past kDenseUnitaryCap).
CMat circuit_unitary(const Circuit& c);

// Dense matrix of a signed Pauli string.
CMat dense_pauli(const PauliString& p);

void apply_pauli_dense(CVec& state, const PauliString& p);

// Probability that all output qubits read 1 when the circuit runs on
// |witness_state> (x) |0...0>_ancilla. witness_state has one amplitude per
// basis state of the witness register (bit i <-> inst.witness[i], sorted).
double acceptance_probability(const QcsatInstance& inst,
                              const CVec& witness_state);

// As above but with explicit initial amplitudes for the whole register.
double acceptance_probability_full(const QcsatInstance& inst,
                                   const CVec& full_state);

struct DenseVal {
  double value = 0.0;  // max over unit witness states of the acceptance prob
  CVec witness;        // an optimal witness state
};

// Exact optimum by eigensolve of the acceptance Gram matrix.
DenseVal exact_val_dense(const QcsatInstance& inst);

// min over phases phi of max_j |lambda_j - e^{i phi}| for the unitary's
// eigenvalues lambda_j: how far the unitary is from the identity after
// discounting global phase.
double identity_distance(const CMat& u);

}  // namespace qcsat
