// Stabilizer projectors 2^{log2_scalar} * prod_g (I+g)/2 with exact scalars,
// plus the two structural operations the solver pipeline is built from:
//
//   * project_qubit_zero:  <0|_q Pi |0>_q  =  sigma * Pi'   (sigma in {0,1/2,1})
//   * bipartite_canonical_form: local Cliffords C_L, C_R and per-qubit tags
//     (Zero / Free / EPR / Copy) with Pi = (C_L (x) C_R)^dag Pi_tags (C_L (x) C_R).
#pragma once

#include <cstdint>
#include <vector>

#include "qcsat/dense.hpp"
#include "qcsat/pauli.hpp"
#include "qcsat/tableau.hpp"

namespace qcsat {

struct StabilizerProjector {
  std::size_t num_qubits = 0;
  std::vector<PauliString> generators;  // independent, commuting, Hermitian
  long long log2_scalar = 0;
  bool is_zero = false;
};

// Validates (Hermitian, commuting), drops redundant generators, and detects
// the -I degeneracy (which zeroes the projector).
StabilizerProjector make_projector(std::size_t num_qubits,
                                   std::vector<PauliString> generators,
                                   long long log2_scalar = 0);

// Sign-tracked GF(2) reduction of a Pauli list to an independent set.
// Returns false when a product collapses to -I (the group is inconsistent,
// i.e. the projector vanishes). +I redundancies are silently dropped.
bool reduce_pauli_generators(std::vector<PauliString>& gens);

// Elementwise U g U^dag, scalar unchanged.
StabilizerProjector conjugate_projector(const StabilizerProjector& p,
                                        const CliffordTableau& t);

// <0|_qubit Pi |0>_qubit = sigma() * projector  (on num_qubits - 1 qubits).
struct QubitProjection {
  bool halved = false;
  StabilizerProjector projector;
  double sigma() const { return projector.is_zero ? 0.0 : (halved ? 0.5 : 1.0); }
};
QubitProjection project_qubit_zero(const StabilizerProjector& p,
                                   std::size_t qubit);

enum class TagKind { Free, Zero, Epr, Copy };

struct QubitTag {
  TagKind kind = TagKind::Free;
  std::size_t partner = 0;  // original index of the paired qubit (Epr/Copy)
};

struct CanonicalBipartiteForm {
  CliffordTableau c_left{0};
  CliffordTableau c_right{0};
  std::vector<std::size_t> left;   // original indices of the L register
  std::vector<std::size_t> right;  // original indices of the R register
  std::vector<QubitTag> tags;      // indexed by original qubit
};

// left/right must partition [0, num_qubits); p must be nonzero. Every EPR or
// Copy tag pairs one L qubit with one R qubit; processing is deterministic
// (ascending elimination and target order).
CanonicalBipartiteForm bipartite_canonical_form(
    const StabilizerProjector& p, const std::vector<std::size_t>& left,
    const std::vector<std::size_t>& right);

// Generators of the tag product (Zero -> +Z, Epr -> +XX & +ZZ, Copy -> +ZZ)
// on the full register, listed deterministically.
std::vector<PauliString> tag_generators(const CanonicalBipartiteForm& form,
                                        std::size_t num_qubits);

// Tableau of C_L (x) C_R on the full register.
CliffordTableau embed_product_tableau(std::size_t num_qubits,
                                      const CanonicalBipartiteForm& form);

// Exact 2^{log2_scalar} * prod (I+g)/2; throws CapExceeded for large n.
CMat dense_matrix(const StabilizerProjector& p);

}  // namespace qcsat
