#include "qcsat/clifford_synthesis.hpp"

#include "qcsat/bitmat.hpp"
#include "qcsat/config.hpp"

namespace qcsat {

void conjugate_by_gates(PauliString& p, const std::vector<Gate>& gates) {
  for (const auto& g : gates) conjugate_by_gate(p, g);
}

namespace {

void emit(std::vector<Gate>* out, PauliString& p, const Gate& g) {
  conjugate_by_gate(p, g);
  out->push_back(g);
}

// Conjugation by H*S*H fixes X_q and maps Y_q -> +Z_q.
void emit_sqrt_x(std::vector<Gate>* out, PauliString& p, std::size_t q) {
  emit(out, p, Gate::h(static_cast<std::uint32_t>(q)));
  emit(out, p, Gate::s(static_cast<std::uint32_t>(q)));
  emit(out, p, Gate::h(static_cast<std::uint32_t>(q)));
}

}  // namespace

std::vector<Gate> reduce_to_single(PauliString p, std::size_t q, char kind) {
  QCSAT_CHECK(p.is_hermitian(), "reduce_to_single: input not Hermitian");
  QCSAT_CHECK(!p.is_identity_bits(), "reduce_to_single: identity input");
  std::vector<Gate> out;
  // Turn every single-qubit factor into X.
  for (std::size_t j = 0; j < p.n; ++j) {
    const bool xj = p.x.get(j), zj = p.z.get(j);
    if (xj && zj) {
      emit(&out, p, Gate::sdg(static_cast<std::uint32_t>(j)));  // Y -> X
    } else if (!xj && zj) {
      emit(&out, p, Gate::h(static_cast<std::uint32_t>(j)));  // Z -> X
    }
  }
  // Fold the X-support onto a single qubit with CNOTs out of the pivot.
  std::size_t pivot = q;
  if (!p.x.get(q)) pivot = static_cast<std::size_t>(p.x.first_set());
  for (std::size_t j = 0; j < p.n; ++j) {
    if (j != pivot && p.x.get(j))
      emit(&out, p, Gate::cx(static_cast<std::uint32_t>(pivot),
                             static_cast<std::uint32_t>(j)));
  }
  if (pivot != q)
    emit(&out, p, Gate::swap(static_cast<std::uint32_t>(pivot),
                             static_cast<std::uint32_t>(q)));
  // p is now (+/-) X_q; a Z on q flips the sign.
  if (p.phase_exp == 2) emit(&out, p, Gate::z(static_cast<std::uint32_t>(q)));
  QCSAT_CHECK(p == PauliString::single(p.n, q, 'X'),
              "reduce_to_single: X normal form not reached");
  if (kind == 'Z') {
    emit(&out, p, Gate::h(static_cast<std::uint32_t>(q)));
    QCSAT_CHECK(p == PauliString::single(p.n, q, 'Z'),
                "reduce_to_single: Z normal form not reached");
  }
  return out;
}

std::vector<Gate> reduce_anticommuting_pair(PauliString p, PauliString q,
                                            std::size_t target) {
  QCSAT_CHECK(!p.commutes(q), "reduce_anticommuting_pair: pair commutes");
  std::vector<Gate> out = reduce_to_single(p, target, 'X');
  conjugate_by_gates(q, out);
  // q anticommutes with X_target, so it carries Z or Y there.
  QCSAT_CHECK(q.z.get(target), "pair reduction: expected Z component");
  if (q.x.get(target)) emit_sqrt_x(&out, q, target);  // Y -> Z, X_t fixed
  // Turn remaining factors of q into Z (single-qubit maps fix X_target since
  // they act elsewhere), then fold Z-support into target with CNOTs.
  for (std::size_t j = 0; j < q.n; ++j) {
    if (j == target) continue;
    const bool xj = q.x.get(j), zj = q.z.get(j);
    if (xj && zj) {
      emit_sqrt_x(&out, q, j);  // Y -> Z
    } else if (xj && !zj) {
      emit(&out, q, Gate::h(static_cast<std::uint32_t>(j)));  // X -> Z
    }
  }
  for (std::size_t j = 0; j < q.n; ++j) {
    if (j != target && q.z.get(j))
      emit(&out, q, Gate::cx(static_cast<std::uint32_t>(j),
                             static_cast<std::uint32_t>(target)));
  }
  if (q.phase_exp == 2) emit(&out, q, Gate::x(static_cast<std::uint32_t>(target)));
  QCSAT_CHECK(q == PauliString::single(q.n, target, 'Z'),
              "pair reduction: Z normal form not reached");
  return out;
}

std::vector<Gate> map_commuting_family_to_z(
    std::vector<PauliString> rhos, const std::vector<std::size_t>& targets) {
  QCSAT_CHECK(rhos.size() == targets.size(),
              "map_commuting_family_to_z: size mismatch");
  if (rhos.empty()) return {};
  const std::size_t n = rhos[0].n;
  const std::size_t k = rhos.size();

  // Symplectic partners: mu_i anticommutes with rho_i and commutes with every
  // other rho_j. The symplectic pairing <a,b> = parity(a.x & b.z) xor
  // parity(a.z & b.x) is linear in a's (x|z) vector against (b.z|b.x).
  std::vector<BitVec> pairing_rows;
  pairing_rows.reserve(k);
  for (const auto& r : rhos) pairing_rows.push_back(r.z.concat(r.x));
  std::vector<PauliString> mus(k);
  for (std::size_t i = 0; i < k; ++i) {
    BitVec rhs(k);
    rhs.set(i, true);
    const auto sys = gf2_solve_affine(pairing_rows, rhs, 2 * n);
    QCSAT_CHECK(sys.has_value(),
                "map_commuting_family_to_z: generators are dependent");
    BitVec mx(n), mz(n);
    for (std::size_t b = 0; b < n; ++b) {
      mx.set(b, sys->particular.get(b));
      mz.set(b, sys->particular.get(n + b));
    }
    mus[i] = PauliString::hermitian_canonical(std::move(mx), std::move(mz));
  }
  // Make partners mutually commuting: multiplying mu_j by rho_i flips its
  // pairing with mu_i and preserves all pairings against the rho family.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (!mus[j].commutes(mus[i])) {
        const PauliString prod = mus[j] * rhos[i];
        mus[j] = PauliString::hermitian_canonical(prod.x, prod.z);
      }

  std::vector<Gate> out;
  for (std::size_t i = 0; i < k; ++i) {
    const auto gates = reduce_anticommuting_pair(mus[i], rhos[i], targets[i]);
    for (std::size_t j = i; j < k; ++j) {
      conjugate_by_gates(rhos[j], gates);
      conjugate_by_gates(mus[j], gates);
    }
    out.insert(out.end(), gates.begin(), gates.end());
    QCSAT_CHECK(rhos[i] == PauliString::single(n, targets[i], 'Z'),
                "map_commuting_family_to_z: target not reached");
    // Every later family member commutes with X_target and Z_target, hence
    // is trivial on the completed qubit; later rounds will not disturb it.
  }
  return out;
}

std::vector<Gate> state_prep_from_stabilizers(
    const std::vector<PauliString>& generators) {
  QCSAT_CHECK(!generators.empty(), "state_prep_from_stabilizers: empty family");
  const std::size_t n = generators[0].n;
  QCSAT_CHECK(generators.size() == n,
              "state_prep_from_stabilizers: need exactly n generators");
  std::vector<std::size_t> targets(n);
  for (std::size_t i = 0; i < n; ++i) targets[i] = i;
  // V rho_i V^dag = Z_i  =>  the stabilized state is V^dag |0...0>.
  return dagger_sequence(map_commuting_family_to_z(generators, targets));
}

}  // namespace qcsat
