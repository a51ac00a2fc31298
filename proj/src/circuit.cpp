#include "qcsat/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "qcsat/config.hpp"

namespace qcsat {

bool is_clifford(GateKind kind) {
  switch (kind) {
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::Rz:
      return false;
    default:
      return true;
  }
}

bool is_two_qubit(GateKind kind) {
  return kind == GateKind::CX || kind == GateKind::CZ || kind == GateKind::Swap;
}

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::Swap: return "swap";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::Rz: return "rz";
  }
  return "?";
}

Gate dagger(const Gate& g) {
  Gate d = g;
  switch (g.kind) {
    case GateKind::S: d.kind = GateKind::Sdg; break;
    case GateKind::Sdg: d.kind = GateKind::S; break;
    case GateKind::T: d.kind = GateKind::Tdg; break;
    case GateKind::Tdg: d.kind = GateKind::T; break;
    case GateKind::Rz: d.angle = -g.angle; break;
    default: break;  // self-inverse
  }
  return d;
}

std::vector<Gate> dagger_sequence(const std::vector<Gate>& gates) {
  std::vector<Gate> out;
  out.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it)
    out.push_back(dagger(*it));
  return out;
}

std::vector<Gate> remap_qubits(const std::vector<Gate>& gates,
                               const std::vector<std::size_t>& map) {
  std::vector<Gate> out;
  out.reserve(gates.size());
  for (Gate g : gates) {
    QCSAT_CHECK(g.q0 < map.size(), "remap_qubits: qubit out of range");
    g.q0 = static_cast<std::uint32_t>(map[g.q0]);
    if (is_two_qubit(g.kind)) {
      QCSAT_CHECK(g.q1 < map.size(), "remap_qubits: qubit out of range");
      g.q1 = static_cast<std::uint32_t>(map[g.q1]);
    }
    out.push_back(g);
  }
  return out;
}

std::size_t Circuit::t_count() const {
  std::size_t t = 0;
  for (const auto& g : gates)
    if (!is_clifford(g.kind)) ++t;
  return t;
}

bool Circuit::is_clifford_only() const { return t_count() == 0; }

void conjugate_by_gate(PauliString& p, const Gate& g) {
  switch (g.kind) {
    case GateKind::H: p.conj_h(g.q0); break;
    case GateKind::S: p.conj_s(g.q0); break;
    case GateKind::Sdg: p.conj_sdg(g.q0); break;
    case GateKind::X: p.conj_x(g.q0); break;
    case GateKind::Y: p.conj_y(g.q0); break;
    case GateKind::Z: p.conj_z(g.q0); break;
    case GateKind::CX: p.conj_cx(g.q0, g.q1); break;
    case GateKind::CZ: p.conj_cz(g.q0, g.q1); break;
    case GateKind::Swap: p.conj_swap(g.q0, g.q1); break;
    default:
      throw std::logic_error("conjugate_by_gate: non-Clifford gate");
  }
}

void validate_instance(const QcsatInstance& inst) {
  const std::size_t n = inst.circuit.num_qubits;
  std::vector<int> owner(n, -1);
  for (const std::size_t q : inst.witness) {
    if (q >= n) throw ParseError("witness qubit out of range");
    if (owner[q] != -1) throw ParseError("witness qubit listed twice");
    owner[q] = 0;
  }
  for (const std::size_t q : inst.ancilla) {
    if (q >= n) throw ParseError("ancilla qubit out of range");
    if (owner[q] != -1)
      throw ParseError("witness and ancilla registers must be disjoint");
    owner[q] = 1;
  }
  for (std::size_t q = 0; q < n; ++q)
    if (owner[q] == -1)
      throw ParseError("every qubit must be witness or ancilla");
  if (inst.outputs.empty()) throw ParseError("no output qubits declared");
  std::set<std::size_t> seen;
  for (const std::size_t q : inst.outputs) {
    if (q >= n) throw ParseError("output qubit out of range");
    if (!seen.insert(q).second) throw ParseError("output qubit listed twice");
  }
}

namespace {

struct LineError : ParseError {
  using ParseError::ParseError;
};

std::size_t parse_qubit(const std::string& tok, std::size_t n) {
  std::size_t pos = 0;
  unsigned long long v;
  try {
    v = std::stoull(tok, &pos);
  } catch (const std::exception&) {
    throw LineError("expected a qubit index, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw LineError("expected a qubit index, got '" + tok + "'");
  if (v >= n) throw LineError("qubit index " + tok + " out of range");
  return static_cast<std::size_t>(v);
}

// Index list item: "k" or "i..j" (inclusive).
void parse_index_item(const std::string& tok, std::size_t n,
                      std::vector<std::size_t>* out) {
  const auto dots = tok.find("..");
  if (dots == std::string::npos) {
    out->push_back(parse_qubit(tok, n));
    return;
  }
  const std::size_t lo = parse_qubit(tok.substr(0, dots), n);
  const std::size_t hi = parse_qubit(tok.substr(dots + 2), n);
  if (lo > hi) throw LineError("empty range '" + tok + "'");
  for (std::size_t q = lo; q <= hi; ++q) out->push_back(q);
}

double parse_angle(const std::string& tok) {
  std::size_t pos = 0;
  double v;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw LineError("expected an angle, got '" + tok + "'");
  }
  if (pos != tok.size() || !std::isfinite(v))
    throw LineError("expected a finite angle, got '" + tok + "'");
  return v;
}

std::vector<std::size_t> sorted_unique(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

QcsatInstance parse_qcsat(std::istream& in) {
  QcsatInstance inst;
  bool have_qubits = false;
  bool have_witness = false, have_ancilla = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    try {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      std::istringstream ls(line);
      std::string op;
      if (!(ls >> op)) continue;  // blank
      std::vector<std::string> args;
      for (std::string tok; ls >> tok;) args.push_back(tok);

      if (op == "qubits") {
        if (have_qubits) throw LineError("duplicate qubits line");
        if (args.size() != 1) throw LineError("usage: qubits N");
        unsigned long long n;
        std::size_t pos = 0;
        try {
          n = std::stoull(args[0], &pos);
        } catch (const std::exception&) {
          throw LineError("qubits needs a count");
        }
        if (pos != args[0].size() || n == 0)
          throw LineError("qubits needs a positive count");
        inst.circuit.num_qubits = static_cast<std::size_t>(n);
        have_qubits = true;
        continue;
      }
      if (!have_qubits)
        throw LineError("the first directive must be 'qubits N'");
      const std::size_t n = inst.circuit.num_qubits;

      if (op == "witness" || op == "ancilla" || op == "output") {
        auto* reg = op == "witness" ? &inst.witness
                    : op == "ancilla" ? &inst.ancilla
                                      : &inst.outputs;
        if (op == "witness") have_witness = true;
        if (op == "ancilla") have_ancilla = true;
        for (const auto& tok : args) parse_index_item(tok, n, reg);
        continue;
      }

      if (op == "rz") {
        if (args.size() != 2) throw LineError("usage: rz <angle> <qubit>");
        inst.circuit.append(Gate::rz(
            parse_angle(args[0]),
            static_cast<std::uint32_t>(parse_qubit(args[1], n))));
        continue;
      }

      static const std::pair<const char*, GateKind> kOne[] = {
          {"h", GateKind::H}, {"s", GateKind::S},     {"sdg", GateKind::Sdg},
          {"x", GateKind::X}, {"y", GateKind::Y},     {"z", GateKind::Z},
          {"t", GateKind::T}, {"tdg", GateKind::Tdg},
      };
      static const std::pair<const char*, GateKind> kTwo[] = {
          {"cx", GateKind::CX}, {"cz", GateKind::CZ}, {"swap", GateKind::Swap},
      };
      bool matched = false;
      for (const auto& [name, kind] : kOne) {
        if (op != name) continue;
        if (args.size() != 1)
          throw LineError(std::string("usage: ") + name + " <qubit>");
        inst.circuit.append(
            {kind, static_cast<std::uint32_t>(parse_qubit(args[0], n)), 0, 0});
        matched = true;
        break;
      }
      if (matched) continue;
      for (const auto& [name, kind] : kTwo) {
        if (op != name) continue;
        if (args.size() != 2)
          throw LineError(std::string("usage: ") + name + " <qubit> <qubit>");
        const std::size_t a = parse_qubit(args[0], n);
        const std::size_t b = parse_qubit(args[1], n);
        if (a == b) throw LineError("two-qubit gate needs distinct qubits");
        inst.circuit.append({kind, static_cast<std::uint32_t>(a),
                             static_cast<std::uint32_t>(b), 0});
        matched = true;
        break;
      }
      if (matched) continue;
      throw LineError("unknown directive '" + op + "'");
    } catch (const LineError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_qubits) throw ParseError("missing 'qubits N' line");

  inst.witness = sorted_unique(std::move(inst.witness));
  inst.ancilla = sorted_unique(std::move(inst.ancilla));
  inst.outputs = sorted_unique(std::move(inst.outputs));
  // One register given: the other is its complement.
  if (have_witness != have_ancilla) {
    const auto& given = have_witness ? inst.witness : inst.ancilla;
    std::vector<bool> in_given(inst.circuit.num_qubits, false);
    for (const std::size_t q : given) in_given[q] = true;
    std::vector<std::size_t> rest;
    for (std::size_t q = 0; q < inst.circuit.num_qubits; ++q)
      if (!in_given[q]) rest.push_back(q);
    (have_witness ? inst.ancilla : inst.witness) = std::move(rest);
  }
  return inst;
}

QcsatInstance parse_qcsat_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_qcsat(in);
}

std::string serialize_qcsat(const QcsatInstance& inst) {
  std::ostringstream out;
  out << "qubits " << inst.circuit.num_qubits << "\n";
  const auto emit_reg = [&out](const char* name,
                               const std::vector<std::size_t>& reg) {
    if (reg.empty()) return;
    out << name;
    for (const std::size_t q : sorted_unique(reg)) out << ' ' << q;
    out << "\n";
  };
  emit_reg("witness", inst.witness);
  emit_reg("ancilla", inst.ancilla);
  emit_reg("output", inst.outputs);
  char buf[64];
  for (const auto& g : inst.circuit.gates) {
    if (g.kind == GateKind::Rz) {
      std::snprintf(buf, sizeof buf, "%.17g", g.angle);
      out << "rz " << buf << ' ' << g.q0 << "\n";
    } else if (is_two_qubit(g.kind)) {
      out << gate_name(g.kind) << ' ' << g.q0 << ' ' << g.q1 << "\n";
    } else {
      out << gate_name(g.kind) << ' ' << g.q0 << "\n";
    }
  }
  return out.str();
}

GadgetizedCircuit gadgetize(const Circuit& c) {
  GadgetizedCircuit out;
  out.base_qubits = c.num_qubits;
  const std::size_t t = c.t_count();
  out.clifford = Circuit(c.num_qubits + t);
  for (const auto& g : c.gates) {
    if (is_clifford(g.kind)) {
      out.clifford.append(g);
      continue;
    }
    const auto fresh =
        static_cast<std::uint32_t>(out.base_qubits + out.angles.size());
    out.clifford.append(Gate::cx(g.q0, fresh));
    switch (g.kind) {
      case GateKind::T: out.angles.push_back(M_PI / 4); break;
      case GateKind::Tdg: out.angles.push_back(-M_PI / 4); break;
      default: out.angles.push_back(g.angle); break;
    }
  }
  return out;
}

}  // namespace qcsat
