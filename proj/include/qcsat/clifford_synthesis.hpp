// Gate-synthesis primitives shared by tableau compilation, the bipartite
// projector canonical form, and stabilizer-state construction:
//
//  - reduce_to_single: one Hermitian Pauli -> exactly +X_q or +Z_q;
//  - reduce_anticommuting_pair: (P, Q) -> exactly (+X_q, +Z_q);
//  - map_commuting_family_to_z: an independent commuting Hermitian family
//    -> exactly {+Z at chosen target qubits}, gates only (no row mixing).
//
// All functions return gates in application order: conjugating the inputs by
// the gates one after another produces the stated normal form. Gates touch
// only the supports of the (evolving) inputs and the target qubits, so
// callers can rely on untouched registers staying untouched.
#pragma once

#include <cstddef>
#include <vector>

#include "qcsat/circuit.hpp"
#include "qcsat/pauli.hpp"

namespace qcsat {

// Conjugate p by gates in order.
void conjugate_by_gates(PauliString& p, const std::vector<Gate>& gates);

// p: Hermitian, non-identity. kind is 'X' or 'Z'.
std::vector<Gate> reduce_to_single(PauliString p, std::size_t q, char kind);

// P, Q: Hermitian and anticommuting.
std::vector<Gate> reduce_anticommuting_pair(PauliString p, PauliString q,
                                            std::size_t target);

// rhos: pairwise commuting, Hermitian, and independent as symplectic vectors;
// targets: distinct qubits, one per rho. After conjugation by the returned
// gates, rho_i == +Z at targets[i] exactly.
std::vector<Gate> map_commuting_family_to_z(
    std::vector<PauliString> rhos, const std::vector<std::size_t>& targets);

// Circuit (gates applied to |0...0>) preparing the unique joint +1 eigenstate
// of n independent commuting Hermitian Pauli strings on n qubits.
std::vector<Gate> state_prep_from_stabilizers(
    const std::vector<PauliString>& generators);

}  // namespace qcsat
