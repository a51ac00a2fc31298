#include "qcsat/tableau.hpp"

#include "qcsat/clifford_synthesis.hpp"
#include "qcsat/config.hpp"

namespace qcsat {

CliffordTableau::CliffordTableau(std::size_t n) : n_(n) {
  x_images_.reserve(n);
  z_images_.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    x_images_.push_back(PauliString::single(n, j, 'X'));
    z_images_.push_back(PauliString::single(n, j, 'Z'));
  }
}

CliffordTableau CliffordTableau::from_gates(std::size_t n,
                                            const std::vector<Gate>& gates) {
  CliffordTableau t(n);
  for (const auto& g : gates) t.apply_gate(g);
  return t;
}

CliffordTableau CliffordTableau::from_circuit(const Circuit& c) {
  return from_gates(c.num_qubits, c.gates);
}

void CliffordTableau::apply_gate(const Gate& g) {
  for (auto& p : x_images_) conjugate_by_gate(p, g);
  for (auto& p : z_images_) conjugate_by_gate(p, g);
}

PauliString CliffordTableau::conjugate_pauli(const PauliString& p) const {
  PauliString acc(n_);
  acc.phase_exp = p.phase_exp;
  for (std::size_t j = 0; j < n_; ++j) {
    if (p.x.get(j)) acc *= x_images_[j];
    if (p.z.get(j)) acc *= z_images_[j];
  }
  return acc;
}

CliffordTableau CliffordTableau::compose(const CliffordTableau& a,
                                         const CliffordTableau& b) {
  QCSAT_CHECK(a.n_ == b.n_, "compose: size mismatch");
  CliffordTableau out(a.n_);
  for (std::size_t j = 0; j < a.n_; ++j) {
    out.x_images_[j] = a.conjugate_pauli(b.x_images_[j]);
    out.z_images_[j] = a.conjugate_pauli(b.z_images_[j]);
  }
  return out;
}

CliffordTableau CliffordTableau::inverse() const {
  // Bit part: the symplectic inverse J M^T J of the image matrix M (rows =
  // (x|z) vectors of the images, pairing J swaps the x and z blocks).
  CliffordTableau inv(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    PauliString ix(n_), iz(n_);
    for (std::size_t b = 0; b < n_; ++b) {
      ix.x.set(b, z_images_[b].z.get(j));
      ix.z.set(b, x_images_[b].z.get(j));
      iz.x.set(b, z_images_[b].x.get(j));
      iz.z.set(b, x_images_[b].x.get(j));
    }
    inv.x_images_[j] = PauliString::hermitian_canonical(ix.x, ix.z);
    inv.z_images_[j] = PauliString::hermitian_canonical(iz.x, iz.z);
  }
  // Sign part: U (U^dag P U) U^dag must reproduce P exactly.
  for (std::size_t j = 0; j < n_; ++j) {
    const PauliString back_x = conjugate_pauli(inv.x_images_[j]);
    QCSAT_CHECK(back_x.x == PauliString::single(n_, j, 'X').x &&
                    back_x.z == PauliString::single(n_, j, 'X').z,
                "inverse: symplectic inverse bits are wrong");
    if (back_x.phase_exp == 2) inv.x_images_[j].negate();
    const PauliString back_z = conjugate_pauli(inv.z_images_[j]);
    if (back_z.phase_exp == 2) inv.z_images_[j].negate();
  }
  return inv;
}

std::vector<Gate> CliffordTableau::compile() const {
  CliffordTableau work = *this;
  std::vector<Gate> applied;
  for (std::size_t q = 0; q < n_; ++q) {
    // Later images commute with the completed +X/+Z pairs, so reducing the
    // pair for q never touches qubits < q again.
    const auto gates =
        reduce_anticommuting_pair(work.x_images_[q], work.z_images_[q], q);
    for (const auto& g : gates) work.apply_gate(g);
    applied.insert(applied.end(), gates.begin(), gates.end());
  }
  QCSAT_CHECK(work.is_identity(), "compile: did not reach the identity");
  // applied (in order) times U equals the identity, so U is the reversed
  // daggers applied in circuit order.
  return dagger_sequence(applied);
}

bool CliffordTableau::is_identity() const {
  for (std::size_t j = 0; j < n_; ++j) {
    if (!(x_images_[j] == PauliString::single(n_, j, 'X'))) return false;
    if (!(z_images_[j] == PauliString::single(n_, j, 'Z'))) return false;
  }
  return true;
}

}  // namespace qcsat
