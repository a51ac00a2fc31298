// Clifford tableaux: a unitary U tracked through its images U X_j U^dag and
// U Z_j U^dag (signed Pauli strings). Supports gate application, Pauli
// conjugation, composition, exact inversion, and compilation back into an
// elementary-gate circuit (unique up to global phase).
#pragma once

#include <cstddef>
#include <vector>

#include "qcsat/circuit.hpp"
#include "qcsat/pauli.hpp"

namespace qcsat {

class CliffordTableau {
 public:
  explicit CliffordTableau(std::size_t n);

  static CliffordTableau identity(std::size_t n) { return CliffordTableau(n); }
  static CliffordTableau from_gates(std::size_t n,
                                    const std::vector<Gate>& gates);
  static CliffordTableau from_circuit(const Circuit& c);

  std::size_t num_qubits() const { return n_; }
  const PauliString& x_image(std::size_t j) const { return x_images_[j]; }
  const PauliString& z_image(std::size_t j) const { return z_images_[j]; }

  // U <- g * U: conjugates every image by g. Throws on non-Clifford gates.
  void apply_gate(const Gate& g);

  // U p U^dag for an arbitrary signed Pauli p.
  PauliString conjugate_pauli(const PauliString& p) const;

  // Tableau of A * B (B acts first).
  static CliffordTableau compose(const CliffordTableau& a,
                                 const CliffordTableau& b);

  // Tableau of U^dag (exact, including signs).
  CliffordTableau inverse() const;

  // Elementary-gate circuit realizing this tableau (global phase free).
  std::vector<Gate> compile() const;

  bool is_identity() const;
  bool operator==(const CliffordTableau&) const = default;

 private:
  std::size_t n_;
  std::vector<PauliString> x_images_;
  std::vector<PauliString> z_images_;
};

}  // namespace qcsat
