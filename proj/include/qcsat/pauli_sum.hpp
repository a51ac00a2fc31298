// Heisenberg-picture solver: propagate Z on the single output qubit backwards
// through the circuit as a sum of Pauli terms over a short product basis.
//
// A TermSum represents the operator
//
//     O = sum_mask terms[mask] * prod_{k in mask, ascending} basis[k]
//
// where `basis` is a list of signed Pauli strings whose symplectic (x|z)
// vectors are GF(2)-independent. Rotations diag(1, e^{i theta}) split a term
// in two (cos/sin), but after re-eliminating the basis so that at most one
// element anticommutes with Z on the rotated qubit, each rotation enlarges
// the basis by at most one element; hence b <= t + 1 after propagating a
// circuit with t rotation gates, independent of qubit count.
//
// The propagated operator is the Heisenberg pullback U^dag Z_out U of the
// output observable (U = circuit unitary, first gate applied first), so that
// after pinning the ancillas the acceptance operator is (I - M)/2 with
// M = <0_anc| U^dag Z_out U |0_anc> and Val = (1 - lambda_min(M)) / 2.
#pragma once

#include <complex>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qcsat/circuit.hpp"
#include "qcsat/dense.hpp"
#include "qcsat/pauli.hpp"
#include "qcsat/solver.hpp"

namespace qcsat {

struct TermSum {
  std::size_t num_qubits = 0;
  // GF(2)-independent signed Pauli strings; every element is Hermitian.
  std::vector<PauliString> basis;
  // Bit k of the key selects basis[k]; value is the term coefficient.
  std::unordered_map<std::uint64_t, std::complex<double>> terms;
};

// Ordered product prod_{k in mask, ascending} sum.basis[k] with exact phase.
PauliString term_pauli(const TermSum& sum, std::uint64_t mask);

// Dense 2^num_qubits matrix of the represented operator (testing oracle).
// Throws CapExceeded when num_qubits > kDenseUnitaryCap.
CMat dense_term_sum(const TermSum& sum);

// Pull Z on the (single) output qubit backwards through the circuit:
// returns a TermSum for U^dag Z_out U on all circuit qubits. Clifford gates
// conjugate the basis in place; each rotation re-eliminates the basis on the
// rotated qubit and splits the affected terms. Coefficients with magnitude
// below kCoeffPrune are dropped when `prune` is set.
// Throws std::invalid_argument unless the instance has exactly one output;
// throws CapExceeded if the basis outgrows 64 elements (term masks).
TermSum propagate(const QcsatInstance& inst, bool prune = true);

// Final basis size b of propagate(inst), computed without tracking terms
// (polynomial time and memory for any t). Equals propagate(inst).basis.size()
// by construction: every basis decision depends only on the basis itself.
std::size_t predict_width(const QcsatInstance& inst);

// <0_A| O |0_A>: pin the listed qubits to |0>, dropping them from the
// register. Terms whose Pauli acts as X or Y on a pinned qubit vanish;
// the survivors are re-expressed over a freshly built independent basis.
// An empty `ancilla` list returns `sum` unchanged.
TermSum project_ancillas(const TermSum& sum, const std::vector<std::size_t>& ancilla);

// Compress to a 2^b' x 2^b' matrix (b' = number of basis elements referenced
// by at least one term, so b' <= b) with the same eigenvalue set up to
// multiplicity: map each live basis element to a string of X's and a Z that
// reproduces every pairwise (anti)commutation relation and every sign, then
// evaluate the term sum over the mapped basis densely.
// Throws std::invalid_argument on a dependent basis and CapExceeded when the
// compressed width exceeds kCompressCap.
CMat compress(const TermSum& sum);

// Full pipeline for single-output instances:
// Val = (1 - lambda_min(compress(project_ancillas(propagate(inst))))) / 2.
// The eigenvalue is obtained by a dense Hermitian solve, so the result is
// exact up to floating point regardless of `delta` (recorded in the output).
ValEstimate solve_appendix(const QcsatInstance& inst, double delta = 1e-3);

}  // namespace qcsat
