#include "qcsat/nic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "qcsat/config.hpp"
#include "qcsat/dense.hpp"

namespace qcsat {
namespace {

// v * 2^e as an exact rational.
mpq_class mul_pow2(const mpz_class& v, long long e) {
  mpz_class shifted;
  if (e >= 0) {
    mpz_mul_2exp(shifted.get_mpz_t(), v.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(e));
    return mpq_class(shifted);
  }
  mpz_mul_2exp(shifted.get_mpz_t(), mpz_class(1).get_mpz_t(),
               static_cast<mp_bitcnt_t>(-e));
  mpq_class q(v, shifted);
  q.canonicalize();
  return q;
}

mpq_class pow2q(long long e) { return mul_pow2(mpz_class(1), e); }

mpq_class mpq_pow(const mpq_class& q, unsigned e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), e);
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

// Exact sum of coeff * value terms, each value a 2-power times an eighth
// root of unity. Accumulates in Z[omega] over a common 2^{hmin/2} scale and
// demands a real total.
QuadraticReal fold_real(
    const std::vector<std::pair<mpz_class, ExactComplex>>& terms) {
  long long hmin = 0;
  bool any = false;
  for (const auto& [coeff, value] : terms) {
    if (value.zero || coeff == 0) continue;
    if (!any || value.half_log2 < hmin) hmin = value.half_log2;
    any = true;
  }
  if (!any) return {};

  // Coefficients of 1, omega, omega^2, omega^3 (omega^4 = -1 folds back).
  std::array<mpz_class, 4> basis{};
  auto add = [&basis](int oct, const mpz_class& w) {
    oct &= 7;
    if (oct < 4)
      basis[oct] += w;
    else
      basis[oct - 4] -= w;
  };
  for (const auto& [coeff, value] : terms) {
    if (value.zero || coeff == 0) continue;
    const long long d = value.half_log2 - hmin;
    mpz_class w;
    mpz_mul_2exp(w.get_mpz_t(), coeff.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(d / 2));
    if (d % 2 == 0) {
      add(value.octant, w);
    } else {
      // sqrt(2) * omega^m = omega^{m+1} + omega^{m-1}
      add(value.octant + 1, w);
      add(value.octant + 7, w);
    }
  }
  QCSAT_CHECK(basis[2] == 0 && basis[1] == -basis[3],
              "trace accumulation produced a non-real total");
  // Total = 2^{hmin/2} (basis0 + basis1 * sqrt(2)).
  if (hmin % 2 == 0) {
    const long long e = hmin / 2;
    return {mul_pow2(basis[0], e), mul_pow2(basis[1], e)};
  }
  const long long e = (hmin - 1) / 2;  // exact also for negative odd hmin
  return {mul_pow2(basis[1], e + 1), mul_pow2(basis[0], e)};
}

// |Phi> = 2^{-n/2} sum_i |i,i> with pair (j, n+j).
StabilizerState entangled_pairs(std::size_t n) {
  StabilizerState phi = StabilizerState::zero_state(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    phi.apply_gate(Gate::h(static_cast<std::uint32_t>(j)));
    phi.apply_gate(Gate::cx(static_cast<std::uint32_t>(j),
                            static_cast<std::uint32_t>(n + j)));
  }
  return phi;
}

std::vector<Gate> shift_to_upper_half(const std::vector<Gate>& gates,
                                      std::size_t n) {
  std::vector<std::size_t> map(n);
  for (std::size_t j = 0; j < n; ++j) map[j] = n + j;
  return remap_qubits(gates, map);
}

// Tr(C^i) for i = -p..p (index p + i), phases coherent with the gate list
// as written: positive powers apply the list repeatedly, negative powers the
// daggered list.
std::vector<ExactComplex> trace_powers(const Circuit& c, unsigned p) {
  const std::size_t n = c.num_qubits;
  std::vector<ExactComplex> taus(2 * static_cast<std::size_t>(p) + 1);
  taus[p] = ExactComplex::make(2 * static_cast<long long>(n), 0);  // 2^n
  if (n == 0) {
    for (auto& t : taus) t = ExactComplex::one();
    return taus;
  }
  const StabilizerState phi = entangled_pairs(n);
  const std::vector<Gate> fwd_gates = shift_to_upper_half(c.gates, n);
  const std::vector<Gate> bwd_gates = dagger_sequence(fwd_gates);
  StabilizerState fwd = phi, bwd = phi;
  for (unsigned i = 1; i <= p; ++i) {
    fwd.apply_gates(fwd_gates);
    ExactComplex tf = StabilizerState::inner_product(phi, fwd);
    tf.mul_pow_sqrt2(2 * static_cast<long long>(n));
    taus[p + i] = tf;
    bwd.apply_gates(bwd_gates);
    ExactComplex tb = StabilizerState::inner_product(phi, bwd);
    tb.mul_pow_sqrt2(2 * static_cast<long long>(n));
    taus[p - i] = tb;
  }
  return taus;
}

// sum_i a_i omega^{-k i} Tr(C^i): the trace of (2I - D - D^dag)^p for the
// phase-shifted circuit D = omega^{-k} C.
QuadraticReal accumulate_h_trace(const std::vector<mpz_class>& coeffs,
                                 const std::vector<ExactComplex>& taus,
                                 int k) {
  const int p = static_cast<int>(taus.size() / 2);
  std::vector<std::pair<mpz_class, ExactComplex>> terms;
  terms.reserve(taus.size());
  for (int i = -p; i <= p; ++i) {
    ExactComplex t = taus[static_cast<std::size_t>(p + i)];
    t.mul_omega(((-k * i) % 8 + 8) % 8);
    terms.emplace_back(coeffs[static_cast<std::size_t>(p + i)], t);
  }
  QuadraticReal out = fold_real(terms);
  QCSAT_CHECK(out.sign() >= 0, "trace of a PSD power came out negative");
  return out;
}

// Octant of the amplitude at the canonical support point of gates|0...0>;
// dividing the unitary by omega^{octant} makes that amplitude positive real.
int canonical_phase_octant(std::size_t n, const std::vector<Gate>& gates) {
  StabilizerState psi = StabilizerState::zero_state(n);
  psi.apply_gates(gates);
  const ExactComplex a = psi.amplitude(psi.canonical_support_point());
  QCSAT_CHECK(!a.zero, "canonical support point has zero amplitude");
  return a.octant;
}

void require_clifford(const Circuit& c, const char* who) {
  if (!c.is_clifford_only())
    throw std::invalid_argument(
        std::string(who) +
        ": circuit contains non-Clifford gates; use the lightcone decider "
        "(constant depth) or the qcsat solver instead");
}

std::vector<std::size_t> gate_qubits(const Gate& g) {
  if (is_two_qubit(g.kind)) return {g.q0, g.q1};
  return {g.q0};
}

}  // namespace

int QuadraticReal::sign() const {
  const int sa = sgn(a), sb = sgn(b);
  if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  // Mixed signs: a + b*sqrt(2) and a - b*sqrt(2) have product a^2 - 2 b^2,
  // and the conjugate's sign equals sa. Equality is impossible (sqrt(2) is
  // irrational), so the comparison of squares is strict.
  const mpq_class disc = a * a - 2 * b * b;
  return sa > 0 ? sgn(disc) : -sgn(disc);
}

double QuadraticReal::to_double() const {
  return a.get_d() + b.get_d() * std::sqrt(2.0);
}

std::string QuadraticReal::str() const {
  if (b == 0) return a.get_str();
  const std::string bs = mpq_class(abs(b)).get_str() + "*sqrt(2)";
  if (a == 0) return (sgn(b) < 0 ? "-" : "") + bs;
  return a.get_str() + (sgn(b) < 0 ? " - " : " + ") + bs;
}

int compare(const QuadraticReal& x, const QuadraticReal& y) {
  return (x - y).sign();
}

ExactComplex clifford_trace(const Circuit& c) {
  require_clifford(c, "clifford_trace");
  if (c.num_qubits == 0) return ExactComplex::one();
  const std::size_t n = c.num_qubits;
  const StabilizerState phi = entangled_pairs(n);
  StabilizerState psi = phi;
  psi.apply_gates(shift_to_upper_half(c.gates, n));
  ExactComplex tr = StabilizerState::inner_product(phi, psi);
  tr.mul_pow_sqrt2(2 * static_cast<long long>(n));
  return tr;
}

ExactComplex clifford_trace(const CliffordTableau& t) {
  Circuit rep(t.num_qubits());
  rep.gates = t.compile();
  ExactComplex tr = clifford_trace(rep);
  tr.mul_omega(-canonical_phase_octant(t.num_qubits(), rep.gates));
  return tr;
}

std::vector<mpz_class> power_coefficients(unsigned p) {
  if (p == 0)
    throw std::invalid_argument("power_coefficients: p must be >= 1");
  std::vector<mpz_class> coeffs{1};  // (2 - x - x^{-1})^0
  for (unsigned step = 0; step < p; ++step) {
    std::vector<mpz_class> next(coeffs.size() + 2);
    for (std::size_t j = 0; j < next.size(); ++j) {
      // next exponent range widens by one on each side; contribution of the
      // old coefficient at offset j-1 times 2, j times -x^{-1}, j-2 times -x.
      if (j >= 1 && j - 1 < coeffs.size()) next[j] += 2 * coeffs[j - 1];
      if (j < coeffs.size()) next[j] -= coeffs[j];
      if (j >= 2 && j - 2 < coeffs.size()) next[j] -= coeffs[j - 2];
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

QuadraticReal trace_h_power(const Circuit& c, unsigned p) {
  if (p == 0) throw std::invalid_argument("trace_h_power: p must be >= 1");
  require_clifford(c, "trace_h_power");
  return accumulate_h_trace(power_coefficients(p), trace_powers(c, p), 0);
}

QuadraticReal trace_h_power(const CliffordTableau& t, unsigned p) {
  if (p == 0) throw std::invalid_argument("trace_h_power: p must be >= 1");
  Circuit rep(t.num_qubits());
  rep.gates = t.compile();
  return accumulate_h_trace(power_coefficients(p), trace_powers(rep, p),
                            canonical_phase_octant(t.num_qubits(), rep.gates));
}

NicCliffordResult decide_nic_clifford(const NicInstance& inst) {
  require_clifford(inst.circuit, "decide_nic_clifford");
  if (!(inst.beta >= 0.0 && inst.beta < inst.alpha && inst.alpha <= 2.0))
    throw std::invalid_argument(
        "decide_nic_clifford: thresholds must satisfy 0 <= beta < alpha <= 2");
  const std::size_t n = inst.circuit.num_qubits;
  const mpq_class aq(inst.alpha), bq(inst.beta);  // doubles are exact dyadics
  const mpq_class a2 = aq * aq, b2 = bq * bq;

  // Minimal p separating the promise bands: alpha^{2p} >= 2^{n+1} beta^{2p}.
  unsigned p = 1;
  mpq_class pa = a2, pb = b2;
  if (inst.beta > 0.0) {
    const mpq_class sep = pow2q(static_cast<long long>(n) + 1);
    const unsigned p_cap = 64 * static_cast<unsigned>(std::max<std::size_t>(n, 1));
    while (pa < sep * pb) {
      if (++p > p_cap)
        throw std::invalid_argument(
            "decide_nic_clifford: alpha/beta gap too small to separate "
            "within the p <= 64n budget");
      pa *= a2;
      pb *= b2;
    }
  }

  const auto coeffs = power_coefficients(p);
  const auto taus = trace_powers(inst.circuit, p);
  // d minimizes over the global phase; the realizable Clifford phases are
  // the eighth roots of unity, and each shifted trace reuses the same data.
  QuadraticReal best = accumulate_h_trace(coeffs, taus, 0);
  for (int k = 1; k < 8; ++k) {
    QuadraticReal v = accumulate_h_trace(coeffs, taus, k);
    if (compare(v, best) < 0) best = v;
  }

  NicCliffordResult res;
  res.p = p;
  res.trace = best;
  res.yes_threshold = {pa, 0};
  res.no_threshold = {pow2q(static_cast<long long>(n)) * pb, 0};
  // Geometric mean of the two thresholds; strictly between them whenever the
  // p-inequality holds, so under the promise the comparison agrees with both
  // one-sided tests and stays deterministic off-promise.
  const mpq_class ab = mpq_pow(aq, p) * mpq_pow(bq, p);
  QuadraticReal mean;
  if (n % 2 == 0)
    mean = {pow2q(static_cast<long long>(n) / 2) * ab, 0};
  else
    mean = {0, pow2q((static_cast<long long>(n) - 1) / 2) * ab};
  res.yes = compare(best, mean) > 0;
  return res;
}

std::size_t circuit_depth(const Circuit& c, std::vector<std::size_t>* layers) {
  std::vector<std::size_t> last(c.num_qubits, 0);
  if (layers) layers->assign(c.gates.size(), 0);
  std::size_t depth = 0;
  for (std::size_t gi = 0; gi < c.gates.size(); ++gi) {
    std::size_t layer = 1;
    for (std::size_t q : gate_qubits(c.gates[gi]))
      layer = std::max(layer, last.at(q) + 1);
    for (std::size_t q : gate_qubits(c.gates[gi])) last.at(q) = layer;
    if (layers) (*layers)[gi] = layer;
    depth = std::max(depth, layer);
  }
  return depth;
}

NicLightconeResult decide_nic_lightcone(const NicInstance& inst) {
  const Circuit& c = inst.circuit;
  std::vector<std::size_t> layers;
  NicLightconeResult res;
  res.depth = circuit_depth(c, &layers);
  if (inst.depth_bound && res.depth > *inst.depth_bound)
    throw std::invalid_argument(
        "decide_nic_lightcone: circuit depth exceeds the declared bound");

  // Gate indices grouped by layer, for the backward cone sweep.
  std::vector<std::vector<std::size_t>> by_layer(res.depth + 1);
  for (std::size_t gi = 0; gi < c.gates.size(); ++gi)
    by_layer[layers[gi]].push_back(gi);

  for (std::size_t target = 0; target < c.num_qubits; ++target) {
    std::vector<bool> active(c.num_qubits, false);
    active[target] = true;
    std::size_t active_count = 1;
    std::vector<std::size_t> cone;  // gate indices, later sorted to order
    for (std::size_t layer = res.depth; layer >= 1; --layer) {
      for (std::size_t gi : by_layer[layer]) {
        const auto qs = gate_qubits(c.gates[gi]);
        if (std::none_of(qs.begin(), qs.end(),
                         [&](std::size_t q) { return active[q]; }))
          continue;
        cone.push_back(gi);
        for (std::size_t q : qs) {
          if (!active[q]) {
            active[q] = true;
            ++active_count;
          }
        }
      }
    }
    res.lightcone_size = std::max(res.lightcone_size, active_count);
    if (cone.empty()) continue;  // untouched qubit: cone unitary is I
    if (active_count > static_cast<std::size_t>(kLightconeConeCap))
      throw CapExceeded(
          "decide_nic_lightcone: causal cone exceeds the dense cap");

    // Build the cone circuit on its own qubits, in original gate order.
    std::sort(cone.begin(), cone.end());
    std::vector<std::size_t> local(c.num_qubits, 0);
    std::size_t width = 0;
    for (std::size_t q = 0; q < c.num_qubits; ++q)
      if (active[q]) local[q] = width++;
    Circuit sub(width);
    std::vector<Gate> picked;
    for (std::size_t gi : cone) picked.push_back(c.gates[gi]);
    sub.gates = remap_qubits(picked, local);

    const CMat u = circuit_unitary(sub);
    const Eigen::Index dim = u.rows();
    Eigen::Index d0 = -1;
    for (Eigen::Index d = 0; d < dim; ++d) {
      if (std::abs(u(d, d)) > kIdentityTol) {
        d0 = d;
        break;
      }
    }
    bool is_phase_identity = d0 >= 0;
    if (is_phase_identity) {
      const std::complex<double> phase = u(d0, d0) / std::abs(u(d0, d0));
      CMat diff = u - phase * CMat::Identity(dim, dim);
      is_phase_identity = diff.cwiseAbs().maxCoeff() <= kIdentityTol;
    }
    if (!is_phase_identity) {
      res.yes = true;
      res.failing_qubit = target;
      res.lightcone_size = active_count;
      return res;
    }
  }
  return res;
}

}  // namespace qcsat
