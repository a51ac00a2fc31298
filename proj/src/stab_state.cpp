#include "qcsat/stab_state.hpp"

#include <algorithm>

#include "qcsat/clifford_synthesis.hpp"
#include "qcsat/config.hpp"

namespace qcsat {

// ---------------------------------------------------------------------------
// QuadForm
// ---------------------------------------------------------------------------

void QuadForm::grow_to(std::size_t nvars) {
  if (nvars <= cap_) return;
  std::size_t nc = std::max<std::size_t>(8, std::max(nvars, 2 * cap_));
  ell_.resize(nc, 0);
  for (auto& row : q_) row.resize(nc);
  while (q_.size() < nc) q_.emplace_back(nc);
  cap_ = nc;
}

std::size_t QuadForm::add_variable() {
  grow_to(r_ + 1);
  ++r_;
  QCSAT_CHECK(ell_[r_ - 1] == 0 && !q_[r_ - 1].any(),
              "add_variable: fresh slot not clean");
  return r_ - 1;
}

void QuadForm::flip_pair(std::size_t j, std::size_t k) {
  QCSAT_CHECK(j != k && j < r_ && k < r_, "flip_pair: bad indices");
  q_[j].flip(k);
  q_[k].flip(j);
}

void QuadForm::add_xor_term(const BitVec& mask, std::uint8_t k) {
  k &= 3u;
  if (k == 0) return;
  const auto bits = mask.set_bits();
  for (std::size_t j : bits) QCSAT_CHECK(j < r_, "add_xor_term: dead variable");
  if (k & 1u) {
    // XOR == sum - 2*(pairs both set) over Z4, so an odd coefficient adds
    // k to every linear term and flips every quadratic pair inside `mask`.
    for (std::size_t j : bits) add_linear(j, k);
    for (std::size_t i = 0; i + 1 < bits.size(); ++i)
      for (std::size_t j = i + 1; j < bits.size(); ++j)
        flip_pair(bits[i], bits[j]);
  } else {
    // 2*XOR == 2*sum (mod 4): the pair corrections vanish.
    for (std::size_t j : bits) add_linear(j, 2);
  }
}

void QuadForm::add_and_term(const BitVec& a, const BitVec& b) {
  // 2 * XOR_a(u) * XOR_b(u): toggles Q_jk once per (j in a, k in b)
  // incidence; the diagonal hits cancel pairwise and resurface as the
  // linear terms 2*u_j for j in both masks.
  for (std::size_t j : a.set_bits()) {
    QCSAT_CHECK(j < r_, "add_and_term: dead variable");
    q_[j] ^= b;
  }
  for (std::size_t k : b.set_bits()) {
    QCSAT_CHECK(k < r_, "add_and_term: dead variable");
    q_[k] ^= a;
  }
  BitVec both = a;
  both &= b;
  for (std::size_t j : both.set_bits()) add_linear(j, 2);
}

std::uint8_t QuadForm::eval(const BitVec& u) const {
  unsigned s = 0;
  for (std::size_t j : u.set_bits()) {
    QCSAT_CHECK(j < r_, "eval: dead variable");
    s += ell_[j];
    if (BitVec::and_parity_below(q_[j], u, j)) s += 2;  // pairs k < j once
  }
  return static_cast<std::uint8_t>(s & 3u);
}

void QuadForm::merge_variable(std::size_t p, const BitVec& kappa) {
  QCSAT_CHECK(p < r_ && kappa.get(p), "merge_variable: p not in kappa");
  BitVec rest = kappa;
  rest.set(p, false);
  const auto ks = rest.set_bits();
  if (ks.empty()) return;

  // New linear coefficient at p under u_i -> u_i (+) kappa_i * u_p (i != p).
  unsigned lp = ell_[p];
  for (std::size_t j : ks) {
    QCSAT_CHECK(j < r_, "merge_variable: dead variable in kappa");
    lp += ell_[j];
  }
  unsigned pair_par = 0;
  for (std::size_t j : ks) pair_par ^= BitVec::and_parity_below(q_[j], rest, j);
  BitVec w(cap_);
  for (std::size_t j : ks) w ^= q_[j];
  lp += 2u * pair_par + 2u * (w.get(p) ? 1u : 0u);

  // Row/column p flips: at XOR-of-rows bits, plus at odd-linear members.
  BitVec flips = w;
  flips.set(p, false);
  for (std::size_t j : ks)
    if (ell_[j] & 1u) flips.flip(j);
  for (std::size_t i : flips.set_bits()) flip_pair(i, p);

  ell_[p] = static_cast<std::uint8_t>(lp & 3u);
}

QuadForm::ElimStep QuadForm::eliminate_variable(std::size_t p) {
  QCSAT_CHECK(p < r_, "eliminate_variable: dead variable");
  ElimStep out;
  const unsigned lp = ell_[p];
  BitVec m = q_[p];  // coupling row; excludes p (zero diagonal)

  // Detach p from the form before folding the branch factor back in.
  ell_[p] = 0;
  for (std::size_t k : m.set_bits()) q_[k].set(p, false);
  q_[p] = BitVec(cap_);

  if (lp & 1u) {
    // sum_{u_p} i^{lp*u_p + 2*u_p*X} = sqrt(2) * omega^{+-1} * i^{c*X}.
    out.scalar_half_log2 = 1;
    out.scalar_octant = (lp == 1) ? 1 : 7;
    add_xor_term(m, (lp == 1) ? 3 : 1);
    return out;
  }
  const bool b = (lp == 2);
  if (!m.any()) {
    if (b) {
      out.is_zero = true;  // 1 + (-1) = 0 for every assignment
    } else {
      out.scalar_half_log2 = 2;  // a plain doubling
    }
    return out;
  }
  // Factor 2 on the slice XOR_m(u) = b; substitute the pivot away.
  out.scalar_half_log2 = 2;
  out.constrained = true;
  const int k0i = m.first_set();
  const std::size_t k0 = static_cast<std::size_t>(k0i);
  out.pivot = k0;
  m.set(k0, false);
  out.others = m;
  out.rhs = b;

  const unsigned l0 = ell_[k0];
  BitVec row0 = q_[k0];
  ell_[k0] = 0;
  for (std::size_t k : row0.set_bits()) q_[k].set(k0, false);
  q_[k0] = BitVec(cap_);

  // u_k0 := b (+) XOR_others(u), folded into the surviving form:
  //   i^{l0*u_k0}          -> i^{l0*b} * i^{l0' * XOR_others}
  //   i^{2*u_k0*(row0.u)}  -> i^{2b*(row0.u)} * i^{2*XOR_others*(row0.u)}
  out.scalar_octant = static_cast<int>((2 * l0 * (b ? 1u : 0u)) % 8u);
  add_xor_term(out.others, static_cast<std::uint8_t>(b ? ((4u - l0) & 3u) : l0));
  if (b) add_xor_term(row0, 2);
  add_and_term(out.others, row0);
  return out;
}

void QuadForm::remove_variable(std::size_t p) {
  QCSAT_CHECK(p < r_, "remove_variable: out of range");
  QCSAT_CHECK(ell_[p] == 0 && !q_[p].any(), "remove_variable: variable live");
  const std::size_t last = r_ - 1;
  if (p != last) {
    ell_[p] = ell_[last];
    ell_[last] = 0;
    q_[p] = q_[last];
    q_[last] = BitVec(cap_);
    for (std::size_t j = 0; j < last; ++j) {
      QCSAT_CHECK(!q_[j].get(p), "remove_variable: column p live");
      if (q_[j].get(last)) {
        q_[j].set(last, false);
        q_[j].set(p, true);
      }
    }
    QCSAT_CHECK(!q_[p].get(p), "remove_variable: moved row self-reference");
  }
  --r_;
}

ExactComplex gauss_sum(QuadForm form) {
  ExactComplex s = ExactComplex::one();
  while (form.num_vars() > 0) {
    auto st = form.eliminate_variable(0);
    if (st.is_zero) return ExactComplex::zero_value();
    s.mul_pow_sqrt2(st.scalar_half_log2);
    s.mul_omega(st.scalar_octant);
    if (st.constrained) {
      QCSAT_CHECK(st.pivot > 0, "gauss_sum: pivot collides with eliminated var");
      form.remove_variable(st.pivot);  // higher index first
      form.remove_variable(0);
    } else {
      form.remove_variable(0);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------
// StabilizerState
// ---------------------------------------------------------------------------

StabilizerState::StabilizerState(std::size_t n)
    : n_(n), rows_(n), c_(n), scalar_(ExactComplex::one()) {}

StabilizerState StabilizerState::zero_state(std::size_t n) {
  return StabilizerState(n);
}

StabilizerState StabilizerState::from_generators(
    const std::vector<PauliString>& gens) {
  QCSAT_CHECK(!gens.empty(), "from_generators: empty family");
  const std::size_t n = gens.size();
  for (const auto& g : gens) {
    QCSAT_CHECK(g.n == n, "from_generators: need n strings on n qubits");
    QCSAT_CHECK(g.is_hermitian(), "from_generators: non-Hermitian generator");
  }
  StabilizerState st = zero_state(n);
  st.apply_gates(state_prep_from_stabilizers(gens));
  return st;
}

void StabilizerState::ensure_capacity(std::size_t nvars) {
  (void)nvars;
  for (auto& row : rows_) row.resize(form_.capacity());
}

void StabilizerState::check_normalized() const {
  QCSAT_CHECK(!scalar_.zero, "stabilizer state vanished");
  QCSAT_CHECK(scalar_.half_log2 ==
                  -static_cast<long long>(form_.num_vars()),
              "normalization invariant violated");
}

void StabilizerState::apply_h(std::size_t q) {
  const BitVec old_row = rows_[q];
  const bool cq = c_.get(q);
  const std::size_t v = form_.add_variable();
  ensure_capacity(v + 1);
  BitVec ev(form_.capacity());
  ev.set(v, true);
  // H|x> = 2^{-1/2} sum_y (-1)^{x_q y} |x with bit q := y>.
  if (cq) form_.add_xor_term(ev, 2);
  form_.add_and_term(ev, old_row);
  rows_[q] = ev;
  c_.set(q, false);
  scalar_.mul_pow_sqrt2(-1);
  if (old_row.any()) canonicalize();
  check_normalized();
}

void StabilizerState::canonicalize() {
  auto kern = gf2_kernel(rows_, form_.num_vars());
  QCSAT_CHECK(kern.size() <= 1, "carrier rank deficit exceeds one");
  if (kern.empty()) return;
  const BitVec kappa = kern[0];
  const int pi = kappa.first_set();
  QCSAT_CHECK(pi >= 0, "empty kernel vector");
  const std::size_t p = static_cast<std::size_t>(pi);

  form_.merge_variable(p, kappa);
  for (auto& row : rows_) {
    QCSAT_CHECK(!BitVec::and_parity(row, kappa), "kappa not in carrier kernel");
    row.set(p, false);
  }

  auto st = form_.eliminate_variable(p);
  QCSAT_CHECK(!st.is_zero, "unitary evolution annihilated the state");
  scalar_.mul_pow_sqrt2(st.scalar_half_log2);
  scalar_.mul_omega(st.scalar_octant);
  if (st.constrained) {
    substitute_column(st.pivot, st.others, st.rhs);
    const std::size_t hi = std::max(p, st.pivot);
    const std::size_t lo = std::min(p, st.pivot);
    remove_variable_everywhere(hi);
    remove_variable_everywhere(lo);
  } else {
    remove_variable_everywhere(p);
  }
}

void StabilizerState::substitute_column(std::size_t pivot, const BitVec& others,
                                        bool rhs) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (!rows_[i].get(pivot)) continue;
    rows_[i].set(pivot, false);
    rows_[i] ^= others;
    if (rhs) c_.flip(i);
  }
}

void StabilizerState::remove_variable_everywhere(std::size_t p) {
  const std::size_t last = form_.num_vars() - 1;
  form_.remove_variable(p);
  if (p != last) {
    for (auto& row : rows_) {
      QCSAT_CHECK(!row.get(p), "removing a carrier-live variable");
      if (row.get(last)) {
        row.set(last, false);
        row.set(p, true);
      }
    }
  }
}

void StabilizerState::apply_gate(const Gate& g) {
  QCSAT_CHECK(is_clifford(g.kind), "stabilizer update needs Clifford gates");
  const std::size_t a = g.q0;
  const std::size_t b = g.q1;
  switch (g.kind) {
    case GateKind::H:
      apply_h(a);
      return;
    case GateKind::S:
    case GateKind::Sdg: {
      // diag phase i^{k*x_a} with x_a = (row_a . u) (+) c_a.
      const unsigned k = (g.kind == GateKind::S) ? 1 : 3;
      const bool ca = c_.get(a);
      scalar_.mul_omega(static_cast<int>(2 * k * (ca ? 1u : 0u)));
      form_.add_xor_term(rows_[a],
                         static_cast<std::uint8_t>(ca ? ((4u - k) & 3u) : k));
      break;
    }
    case GateKind::Z: {
      const bool ca = c_.get(a);
      scalar_.mul_omega(ca ? 4 : 0);
      form_.add_xor_term(rows_[a], 2);
      break;
    }
    case GateKind::X:
      c_.flip(a);
      break;
    case GateKind::Y: {
      // Y = i * X Z applied to |x>: phase i*(-1)^{x_a}, then flip bit a.
      const bool ca = c_.get(a);
      scalar_.mul_omega(2 + (ca ? 4 : 0));
      form_.add_xor_term(rows_[a], 2);
      c_.flip(a);
      break;
    }
    case GateKind::CX:
      rows_[b] ^= rows_[a];
      if (c_.get(a)) c_.flip(b);
      break;
    case GateKind::CZ: {
      // (-1)^{x_a x_b} expanded over the affine bits.
      const bool ca = c_.get(a);
      const bool cb = c_.get(b);
      scalar_.mul_omega((ca && cb) ? 4 : 0);
      if (cb) form_.add_xor_term(rows_[a], 2);
      if (ca) form_.add_xor_term(rows_[b], 2);
      form_.add_and_term(rows_[a], rows_[b]);
      break;
    }
    case GateKind::Swap: {
      std::swap(rows_[a], rows_[b]);
      const bool ca = c_.get(a);
      c_.set(a, c_.get(b));
      c_.set(b, ca);
      break;
    }
    default:
      QCSAT_CHECK(false, "unhandled gate kind");
  }
  check_normalized();
}

void StabilizerState::apply_gates(const std::vector<Gate>& gates) {
  for (const auto& g : gates) apply_gate(g);
}

ExactComplex StabilizerState::amplitude(const BitVec& basis) const {
  const std::size_t r = form_.num_vars();
  BitVec rhs(n_);
  for (std::size_t i = 0; i < n_; ++i)
    rhs.set(i, basis.get(i) != c_.get(i));
  auto sys = gf2_solve_affine(rows_, rhs, r);
  if (!sys) return ExactComplex::zero_value();
  QCSAT_CHECK(sys->kernel.empty(), "carrier matrix lost full column rank");
  ExactComplex out = scalar_;
  out.mul_omega(2 * form_.eval(sys->particular));
  return out;
}

BitVec StabilizerState::canonical_support_point() const {
  // Greedily zero bits from the most significant down, tracking the affine
  // constraints <rows_[q], u> = d accumulated so far in echelon form.
  const std::size_t r = form_.num_vars();
  std::vector<BitVec> pivots;
  std::vector<bool> rhs;
  BitVec out(n_);
  for (std::size_t qi = n_; qi-- > 0;) {
    BitVec row = rows_[qi];
    row.resize(r);
    bool d = false;
    for (bool changed = true; changed && row.any();) {
      changed = false;
      for (std::size_t j = 0; j < pivots.size(); ++j) {
        const int lead = pivots[j].first_set();
        if (lead >= 0 && row.get(static_cast<std::size_t>(lead))) {
          row ^= pivots[j];
          d = d != rhs[j];
          changed = true;
        }
      }
    }
    if (!row.any()) {
      // <rows_[qi], u> is forced to d on the current solution set.
      out.set(qi, d != c_.get(qi));
    } else {
      // Free: pin the bit to zero with a new constraint. Keep the pivot set
      // mutually reduced so every pivot's lead is unique to it (this bounds
      // the reduction loop above).
      const bool nd = d != c_.get(qi);
      const int lead = row.first_set();
      for (std::size_t j = 0; j < pivots.size(); ++j) {
        if (pivots[j].get(static_cast<std::size_t>(lead))) {
          pivots[j] ^= row;
          rhs[j] = rhs[j] != nd;
        }
      }
      pivots.push_back(row);
      rhs.push_back(nd);
      out.set(qi, false);
    }
  }
  return out;
}

std::vector<std::complex<double>> StabilizerState::to_dense() const {
  QCSAT_CHECK(n_ <= kDenseStateCap, "to_dense: too many qubits");
  const std::size_t r = form_.num_vars();
  QCSAT_CHECK(r <= n_, "more variables than qubits");
  std::vector<std::complex<double>> out(std::size_t{1} << n_,
                                        std::complex<double>(0.0, 0.0));
  // Basis index of column j, as an integer.
  std::vector<std::uint64_t> col(r, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (rows_[i].get(j)) col[j] |= std::uint64_t{1} << i;
  std::uint64_t base = 0;
  for (std::size_t i = 0; i < n_; ++i)
    if (c_.get(i)) base |= std::uint64_t{1} << i;

  const std::complex<double> s = scalar_.to_complex();
  static const std::complex<double> kI4[4] = {
      {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  BitVec u(r);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << r); ++m) {
    for (std::size_t j = 0; j < r; ++j) u.set(j, (m >> j) & 1u);
    std::uint64_t idx = base;
    for (std::size_t j = 0; j < r; ++j)
      if ((m >> j) & 1u) idx ^= col[j];
    out[idx] += s * kI4[form_.eval(u)];
  }
  return out;
}

ExactComplex StabilizerState::inner_product(const StabilizerState& a,
                                            const StabilizerState& b) {
  QCSAT_CHECK(a.n_ == b.n_, "inner_product: qubit count mismatch");
  const std::size_t n = a.n_;
  const std::size_t ra = a.form_.num_vars();
  const std::size_t rb = b.form_.num_vars();
  const std::size_t nv = ra + rb;

  // Joint constraint A_a u (+) A_b w = c_a (+) c_b over (u || w).
  std::vector<BitVec> lhs(n);
  BitVec rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    BitVec row(nv);
    for (std::size_t j = 0; j < ra; ++j)
      if (a.rows_[i].get(j)) row.set(j, true);
    for (std::size_t j = 0; j < rb; ++j)
      if (b.rows_[i].get(j)) row.set(ra + j, true);
    lhs[i] = std::move(row);
    rhs.set(i, a.c_.get(i) != b.c_.get(i));
  }
  auto sys = gf2_solve_affine(lhs, rhs, nv);
  if (!sys) return ExactComplex::zero_value();
  const std::size_t d = sys->kernel.size();

  // psi(v) = phi_b(w(v)) - phi_a(u(v)) on the solution affine subspace.
  auto psi = [&](const BitVec& vmask) -> unsigned {
    BitVec t = sys->particular;
    for (std::size_t j : vmask.set_bits()) t ^= sys->kernel[j];
    BitVec u(ra), w(rb);
    for (std::size_t j = 0; j < ra; ++j) u.set(j, t.get(j));
    for (std::size_t j = 0; j < rb; ++j) w.set(j, t.get(ra + j));
    return (4u + b.form_.eval(w) - a.form_.eval(u)) & 3u;
  };

  const unsigned psi0 = psi(BitVec(d));
  QuadForm form(d);
  std::vector<unsigned> lin(d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    BitVec vj(d);
    vj.set(j, true);
    lin[j] = (4u + psi(vj) - psi0) & 3u;
    form.add_linear(j, static_cast<std::uint8_t>(lin[j]));
  }
  for (std::size_t j = 0; j + 1 < d; ++j) {
    for (std::size_t k = j + 1; k < d; ++k) {
      BitVec vjk(d);
      vjk.set(j, true);
      vjk.set(k, true);
      const unsigned cross = (8u + psi(vjk) - lin[j] - lin[k] - psi0) & 3u;
      QCSAT_CHECK((cross & 1u) == 0, "odd cross coefficient in phase form");
      if (cross == 2) form.flip_pair(j, k);
    }
  }

  ExactComplex out = a.scalar_.conjugated() * b.scalar_;
  out.mul_omega(static_cast<int>(2 * psi0));
  out *= gauss_sum(std::move(form));
  return out;
}

}  // namespace qcsat
