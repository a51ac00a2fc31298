#include "qcsat/dense.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qcsat/config.hpp"

namespace qcsat {

namespace {

using complexd = std::complex<double>;

void check_state_cap(std::size_t n) {
  if (n > kDenseStateCap)
    throw CapExceeded("dense statevector limited to " +
                      std::to_string(kDenseStateCap) + " qubits (got " +
                      std::to_string(n) + ")");
}

// Apply a general 2x2 matrix to qubit q.
void apply_1q(CVec& state, std::size_t q, complexd u00, complexd u01,
              complexd u10, complexd u11) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < static_cast<std::size_t>(state.size()); ++i) {
    if (i & bit) continue;
    const complexd a0 = state[i], a1 = state[i | bit];
    state[i] = u00 * a0 + u01 * a1;
    state[i | bit] = u10 * a0 + u11 * a1;
  }
}

}  // namespace

CVec zero_state(std::size_t n) { return basis_state(n, 0); }

CVec basis_state(std::size_t n, std::size_t index) {
  check_state_cap(n);
  CVec v = CVec::Zero(std::int64_t{1} << n);
  v[static_cast<std::int64_t>(index)] = 1.0;
  return v;
}

void apply_gate_dense(CVec& state, const Gate& g) {
  static const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
  const std::size_t q = g.q0;
  switch (g.kind) {
    case GateKind::H:
      apply_1q(state, q, kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2);
      return;
    case GateKind::S:
      apply_1q(state, q, 1, 0, 0, complexd(0, 1));
      return;
    case GateKind::Sdg:
      apply_1q(state, q, 1, 0, 0, complexd(0, -1));
      return;
    case GateKind::X:
      apply_1q(state, q, 0, 1, 1, 0);
      return;
    case GateKind::Y:
      apply_1q(state, q, 0, complexd(0, -1), complexd(0, 1), 0);
      return;
    case GateKind::Z:
      apply_1q(state, q, 1, 0, 0, -1);
      return;
    case GateKind::T:
      apply_1q(state, q, 1, 0, 0, std::polar(1.0, M_PI / 4));
      return;
    case GateKind::Tdg:
      apply_1q(state, q, 1, 0, 0, std::polar(1.0, -M_PI / 4));
      return;
    case GateKind::Rz:
      apply_1q(state, q, 1, 0, 0, std::polar(1.0, g.angle));
      return;
    case GateKind::CX: {
      const std::size_t c = std::size_t{1} << g.q0;
      const std::size_t t = std::size_t{1} << g.q1;
      for (std::size_t i = 0; i < static_cast<std::size_t>(state.size()); ++i)
        if ((i & c) && !(i & t)) std::swap(state[i], state[i | t]);
      return;
    }
    case GateKind::CZ: {
      const std::size_t a = std::size_t{1} << g.q0;
      const std::size_t b = std::size_t{1} << g.q1;
      for (std::size_t i = 0; i < static_cast<std::size_t>(state.size()); ++i)
        if ((i & a) && (i & b)) state[i] = -state[i];
      return;
    }
    case GateKind::Swap: {
      const std::size_t a = std::size_t{1} << g.q0;
      const std::size_t b = std::size_t{1} << g.q1;
      for (std::size_t i = 0; i < static_cast<std::size_t>(state.size()); ++i)
        if ((i & a) && !(i & b)) std::swap(state[i], state[(i ^ a) | b]);
      return;
    }
  }
}

CVec apply_circuit_dense(const Circuit& c, CVec state) {
  QCSAT_CHECK(state.size() == (std::int64_t{1} << c.num_qubits),
              "apply_circuit_dense: dimension mismatch");
  for (const auto& g : c.gates) apply_gate_dense(state, g);
  return state;
}

CMat circuit_unitary(const Circuit& c) {
  if (c.num_qubits > kDenseUnitaryCap)
    throw CapExceeded("dense unitary limited to " +
                      std::to_string(kDenseUnitaryCap) + " qubits (got " +
                      std::to_string(c.num_qubits) + ")");
  const std::int64_t dim = std::int64_t{1} << c.num_qubits;
  CMat u(dim, dim);
  for (std::int64_t b = 0; b < dim; ++b)
    u.col(b) = apply_circuit_dense(
        c, basis_state(c.num_qubits, static_cast<std::size_t>(b)));
  return u;
}

CMat dense_pauli(const PauliString& p) {
  check_state_cap(p.n);
  const std::size_t dim = std::size_t{1} << p.n;
  static const complexd kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  CMat m = CMat::Zero(dim, dim);
  std::size_t xmask = 0, zmask = 0;
  for (std::size_t q = 0; q < p.n; ++q) {
    if (p.x.get(q)) xmask |= std::size_t{1} << q;
    if (p.z.get(q)) zmask |= std::size_t{1} << q;
  }
  for (std::size_t b = 0; b < dim; ++b) {
    const bool neg = std::popcount(b & zmask) & 1u;
    m(b ^ xmask, b) = kPhase[p.phase_exp] * (neg ? -1.0 : 1.0);
  }
  return m;
}

void apply_pauli_dense(CVec& state, const PauliString& p) {
  CVec out(state.size());
  static const complexd kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::size_t xmask = 0, zmask = 0;
  for (std::size_t q = 0; q < p.n; ++q) {
    if (p.x.get(q)) xmask |= std::size_t{1} << q;
    if (p.z.get(q)) zmask |= std::size_t{1} << q;
  }
  for (std::size_t b = 0; b < static_cast<std::size_t>(state.size()); ++b) {
    const bool neg = std::popcount(b & zmask) & 1u;
    out[b ^ xmask] = kPhase[p.phase_exp] * (neg ? -1.0 : 1.0) * state[b];
  }
  state = std::move(out);
}

namespace {

// Scatter the witness-register state into the full register with ancillas 0.
CVec inject_witness(const QcsatInstance& inst, const CVec& witness_state) {
  const std::size_t nw = inst.witness.size();
  QCSAT_CHECK(witness_state.size() == (std::int64_t{1} << nw),
              "witness state has the wrong dimension");
  CVec full = CVec::Zero(std::int64_t{1} << inst.circuit.num_qubits);
  for (std::size_t w = 0; w < (std::size_t{1} << nw); ++w) {
    std::size_t b = 0;
    for (std::size_t i = 0; i < nw; ++i)
      if ((w >> i) & 1u) b |= std::size_t{1} << inst.witness[i];
    full[static_cast<std::int64_t>(b)] = witness_state[static_cast<std::int64_t>(w)];
  }
  return full;
}

double accept_mass(const QcsatInstance& inst, const CVec& evolved) {
  std::size_t omask = 0;
  for (const std::size_t q : inst.outputs) omask |= std::size_t{1} << q;
  double p = 0.0;
  for (std::size_t b = 0; b < static_cast<std::size_t>(evolved.size()); ++b)
    if ((b & omask) == omask) p += std::norm(evolved[b]);
  return p;
}

}  // namespace

double acceptance_probability(const QcsatInstance& inst,
                              const CVec& witness_state) {
  check_state_cap(inst.circuit.num_qubits);
  const CVec evolved =
      apply_circuit_dense(inst.circuit, inject_witness(inst, witness_state));
  return accept_mass(inst, evolved);
}

double acceptance_probability_full(const QcsatInstance& inst,
                                   const CVec& full_state) {
  return accept_mass(inst, apply_circuit_dense(inst.circuit, full_state));
}

DenseVal exact_val_dense(const QcsatInstance& inst) {
  const std::size_t n_all = inst.circuit.num_qubits;
  check_state_cap(n_all);
  const std::size_t nw = inst.witness.size();
  if (nw > kDenseStateCap / 2)
    throw CapExceeded("exact_val_dense: witness register too large");

  // Columns of A: the accepted component of U (|w> (x) |0>) for each witness
  // basis state w, compacted onto the accepting subspace.
  std::size_t omask = 0;
  for (const std::size_t q : inst.outputs) omask |= std::size_t{1} << q;
  std::vector<std::size_t> accept_idx;
  for (std::size_t b = 0; b < (std::size_t{1} << n_all); ++b)
    if ((b & omask) == omask) accept_idx.push_back(b);

  const std::int64_t wd = std::int64_t{1} << nw;
  CMat a(static_cast<std::int64_t>(accept_idx.size()), wd);
  for (std::int64_t w = 0; w < wd; ++w) {
    const CVec evolved = apply_circuit_dense(
        inst.circuit, inject_witness(inst, basis_state(nw, static_cast<std::size_t>(w))));
    for (std::size_t r = 0; r < accept_idx.size(); ++r)
      a(static_cast<std::int64_t>(r), w) = evolved[static_cast<std::int64_t>(accept_idx[r])];
  }

  // Val = lambda_max(A^dag A); eigensolve the smaller Gram side.
  DenseVal out;
  if (a.rows() >= a.cols()) {
    Eigen::SelfAdjointEigenSolver<CMat> es(a.adjoint() * a);
    const std::int64_t top = es.eigenvalues().size() - 1;
    out.value = std::max(0.0, es.eigenvalues()[top]);
    out.witness = es.eigenvectors().col(top);
  } else {
    Eigen::SelfAdjointEigenSolver<CMat> es(a * a.adjoint());
    const std::int64_t top = es.eigenvalues().size() - 1;
    out.value = std::max(0.0, es.eigenvalues()[top]);
    // Recover the witness-side singular vector.
    CVec v = a.adjoint() * es.eigenvectors().col(top);
    const double norm = v.norm();
    if (norm > 1e-12)
      out.witness = v / norm;
    else
      out.witness = basis_state(nw, 0);  // value is 0; any witness works
  }
  return out;
}

double identity_distance(const CMat& u) {
  Eigen::ComplexEigenSolver<CMat> es(u, /*computeEigenvectors=*/false);
  std::vector<double> phases;
  phases.reserve(static_cast<std::size_t>(es.eigenvalues().size()));
  for (std::int64_t i = 0; i < es.eigenvalues().size(); ++i)
    phases.push_back(std::arg(es.eigenvalues()[i]));
  std::sort(phases.begin(), phases.end());
  const std::size_t m = phases.size();
  const auto score = [&](double phi) {
    double worst = 0.0;
    for (const double th : phases)
      worst = std::max(worst, std::abs(std::polar(1.0, th) - std::polar(1.0, phi)));
    return worst;
  };
  // The optimal phase is the antipode of the midpoint of the largest empty
  // arc between adjacent eigenphases (the center of the covering arc); try
  // every gap midpoint and its antipode to stay robust to ties.
  double best = score(phases[0]);
  for (std::size_t i = 0; i < m; ++i) {
    const double lo = phases[i];
    const double hi = (i + 1 < m) ? phases[i + 1] : phases[0] + 2 * M_PI;
    const double mid = 0.5 * (lo + hi);
    best = std::min({best, score(mid), score(mid + M_PI)});
  }
  return best;
}

}  // namespace qcsat
