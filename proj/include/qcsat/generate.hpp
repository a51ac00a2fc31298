// Instance generators: seeded random Clifford+T instances and the reduction
// from Ising ground-state energy to circuit satisfiability.
#pragma once

#include <cstdint>
#include <istream>
#include <utility>
#include <vector>

#include "qcsat/circuit.hpp"
#include "qcsat/dense.hpp"

namespace qcsat {

// Simple undirected graph for the Ising Hamiltonian
// H' = sum_{(a,b) in edges} Z_a Z_b + sum_a Z_a.
struct IsingSpec {
  std::size_t num_vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// Rejects self-loops, duplicate edges (either orientation), out-of-range
// endpoints, and the empty graph.
void validate_ising(const IsingSpec& spec);

// Edge-list format: a `vertices N` header line, then one `u v` pair per
// line; blank lines and `#` comments ignored. Throws ParseError.
IsingSpec parse_ising(std::istream& in);

// min over spin assignments of H' (diagonal, so this is its least
// eigenvalue; exact integer arithmetic). Throws CapExceeded when
// num_vertices > kDenseStateCap.
long long ising_min_energy(const IsingSpec& spec);

// The reduction's exact value: ((min H' - m') / m)^2 with m' = |edges| +
// |vertices| and m = 2 m'.
double ising_value(const IsingSpec& spec);

// Dense |W_m> = (1/sqrt(m)) sum_i |e_i> (testing oracle for preparations
// that have no small Clifford+T circuit).
CVec w_state(std::size_t m);

// Clifford preparation of |W_2> = (|01> + |10>)/sqrt(2) on 2 qubits.
Circuit w2_preparation();

// Rotation-cascade preparation of |W_m> on exactly m qubits (no junk):
// X on qubit 0, then a controlled-Y-rotation ladder compiled from CX, S, H
// and Rz. Uses 2(m-1) rotation gates; w_state_preparation(2) is not the
// Clifford w2_preparation but prepares the same state.
Circuit w_state_preparation(std::size_t m);

// The Clifford control layer on qubits [0, v) (computational) and
// [v, v + 2m') (control): control qubit i < m' applies the i-th Hamiltonian
// term (edges first, then vertices) as CZ gates onto the computational
// register; control qubits m' <= i < 2m' each get a plain Z, realizing the
// -m' shift that makes the Hamiltonian negative semidefinite.
Circuit ising_control_circuit(const IsingSpec& spec);

// Full reduction: witness = computational register, ancillas = control
// register plus wprep's junk qubits, outputs = the control register. The
// circuit is wprep, then the control layer, then wprep reversed, then an X
// on every control qubit (the all-zeros acceptance event becomes QCSAT's
// all-ones). With wprep preparing |W_m> (x) junk, Val = ising_value(spec).
// Throws std::invalid_argument when wprep spans fewer than m qubits.
QcsatInstance ising_to_qcsat(const IsingSpec& spec, const Circuit& wprep);

// Seeded random instance: witness {0..n-1}, ancillas {n..n+m-1}, s gates of
// which exactly t are T gates (uniform kinds, uniform qubits, shuffled
// positions), outputs a random nonempty ancilla subset. Deterministic in
// seed. Throws std::invalid_argument when t > s or m == 0.
QcsatInstance random_instance(std::size_t n, std::size_t m, std::size_t s,
                              std::size_t t, std::uint64_t seed);

}  // namespace qcsat
