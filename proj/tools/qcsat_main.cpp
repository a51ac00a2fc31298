// qcsat: one binary for the satisfiability solvers, the Heisenberg solver,
// the non-identity checks, the instance generators, and the dense oracle.
// Every subcommand prints a single JSON object; floating-point fields use 17
// significant digits so reruns are byte-identical (except wall_time_ms).
// Exit codes: 0 success, 1 internal error, 2 usage/input error, 3 size cap.
#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qcsat/circuit.hpp"
#include "qcsat/config.hpp"
#include "qcsat/dense.hpp"
#include "qcsat/generate.hpp"
#include "qcsat/nic.hpp"
#include "qcsat/pauli_sum.hpp"
#include "qcsat/solver.hpp"

namespace {

using namespace qcsat;

// ---------------------------------------------------------------------------
// Minimal ordered JSON emitter with fixed float formatting.

std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string json_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Json {
 public:
  void put_raw(const std::string& key, std::string value) {
    fields_.emplace_back(key, std::move(value));
  }
  void put(const std::string& key, double v) { put_raw(key, json_double(v)); }
  void put(const std::string& key, long long v) {
    put_raw(key, std::to_string(v));
  }
  void put(const std::string& key, std::size_t v) {
    put_raw(key, std::to_string(v));
  }
  void put(const std::string& key, bool v) {
    put_raw(key, v ? "true" : "false");
  }
  void put(const std::string& key, const std::string& v) {
    put_raw(key, json_escape(v));
  }
  void put(const std::string& key, const char* v) {
    put_raw(key, json_escape(v));
  }
  void put_null(const std::string& key) { put_raw(key, "null"); }
  void put(const std::string& key, const Json& obj) {
    put_raw(key, obj.dump_compact());
  }
  template <typename T, typename F>
  void put_array(const std::string& key, const std::vector<T>& items, F render) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) out += ",";
      out += render(items[i]);
    }
    put_raw(key, out + "]");
  }

  std::string dump_compact() const {
    std::string out = "{";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      if (i) out += ",";
      out += json_escape(fields_[i].first) + ":" + fields_[i].second;
    }
    return out + "}";
  }
  std::string dump_pretty() const {
    std::string out = "{\n";
    for (std::size_t i = 0; i < fields_.size(); ++i) {
      out += "  " + json_escape(fields_[i].first) + ": " + fields_[i].second;
      out += i + 1 < fields_.size() ? ",\n" : "\n";
    }
    return out + "}";
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

bool g_compact = false;

void emit(const Json& obj) {
  std::cout << (g_compact ? obj.dump_compact() : obj.dump_pretty()) << "\n";
}

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

// ---------------------------------------------------------------------------
// Shared renderers.

std::string gate_line(const Gate& g) {
  std::string out = gate_name(g.kind);
  if (g.kind == GateKind::Rz) out += " " + json_double(g.angle);
  out += " " + std::to_string(g.q0);
  if (is_two_qubit(g.kind)) out += " " + std::to_string(g.q1);
  return out;
}

std::string render_index(std::size_t v) { return std::to_string(v); }

void put_value(Json& j, const ValEstimate& est) {
  j.put("value", est.value.to_double());
  j.put("log2_scale", static_cast<long long>(est.value.exponent));
  j.put("mode", est.mode == ValMode::Exact ? "exact" : "randomized");
  j.put_array("sigma_star", est.sigma_star,
              [](std::uint8_t b) { return std::to_string(int(b)); });
}

Json witness_json(const WitnessRecipe& rec) {
  Json w;
  w.put_array("w_gates", rec.w_gates,
              [](const Gate& g) { return json_escape(gate_line(g)); });
  std::vector<double> re(rec.phi.size()), im(rec.phi.size());
  for (Eigen::Index i = 0; i < rec.phi.size(); ++i) {
    re[static_cast<std::size_t>(i)] = rec.phi[i].real();
    im[static_cast<std::size_t>(i)] = rec.phi[i].imag();
  }
  w.put_array("phi_real", re, json_double);
  w.put_array("phi_imag", im, json_double);
  w.put_array("zero_qubits", rec.zero_qubits, render_index);
  w.put_array("free_qubits", rec.free_qubits, render_index);
  return w;
}

ValMode pick_mode(const ReducedForm& rf, bool force_exact,
                  bool force_randomized) {
  if (force_exact) return ValMode::Exact;
  if (force_randomized) return ValMode::Randomized;
  return rf.t <= kExactValTCap ? ValMode::Exact : ValMode::Randomized;
}

CVec parse_amplitudes(const std::string& path, std::size_t expected) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open amplitudes file: " + path);
  std::vector<std::complex<double>> amps;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double re = 0.0, im = 0.0;
    if (!(ls >> re)) continue;
    if (!(ls >> im))
      throw ParseError("amplitudes: expected `re im` (line " +
                       std::to_string(lineno) + ")");
    std::string extra;
    if (ls >> extra)
      throw ParseError("amplitudes: trailing tokens (line " +
                       std::to_string(lineno) + ")");
    amps.emplace_back(re, im);
  }
  if (amps.size() != expected)
    throw ParseError("amplitudes: got " + std::to_string(amps.size()) +
                     " entries, witness register needs " +
                     std::to_string(expected));
  CVec v(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = amps[i];
  return v;
}

// ---------------------------------------------------------------------------
// Subcommand bodies.

void run_solve(const std::string& path, bool exact, bool randomized,
               double delta, std::uint64_t seed, bool witness_only) {
  const Timer timer;
  const QcsatInstance inst = parse_qcsat_file(path);
  const ReducedForm rf = reduce_instance(inst);
  const ValMode mode = pick_mode(rf, exact, randomized);
  const ValEstimate est = mode == ValMode::Exact
                              ? exact_val(inst)
                              : estimate_val(inst, delta, seed);
  if (witness_only) {
    // extract_witness rejects gamma = 0 (no witness exists: Val = 0).
    const WitnessRecipe rec = extract_witness(inst, mode, delta, seed);
    Json j = witness_json(rec);
    j.put("mode", mode == ValMode::Exact ? "exact" : "randomized");
    j.put("wall_time_ms", timer.ms());
    emit(j);
    return;
  }
  Json j;
  put_value(j, est);
  j.put("gamma", rf.gamma);
  j.put("r", rf.r);
  j.put("t", rf.t);
  j.put("l1", rf.l1.size());
  j.put("l2", rf.l2.size());
  if (rf.gamma)
    j.put("witness", witness_json(extract_witness(inst, mode, delta, seed)));
  else
    j.put_null("witness");
  j.put("wall_time_ms", timer.ms());
  emit(j);
}

void run_decide(const std::string& path, double alpha, double beta,
                std::uint64_t seed) {
  const Timer timer;
  const QcsatInstance inst = parse_qcsat_file(path);
  const QcsatDecision dec = decide_qcsat(inst, alpha, beta, seed);
  Json j;
  j.put("decision", dec.yes ? "yes" : "no");
  put_value(j, dec.estimate);
  j.put("alpha", alpha);
  j.put("beta", beta);
  j.put("wall_time_ms", timer.ms());
  emit(j);
}

void run_appendix_width(const std::string& path) {
  const Timer timer;
  const QcsatInstance inst = parse_qcsat_file(path);
  const std::size_t b = predict_width(inst);
  Json j;
  j.put("b", b);
  j.put("t", inst.circuit.t_count());
  if (b <= 1023)
    j.put("predicted_dim", std::ldexp(1.0, static_cast<int>(b)));
  else
    j.put_null("predicted_dim");
  j.put("wall_time_ms", timer.ms());
  emit(j);
}

void run_appendix_solve(const std::string& path, double delta) {
  const Timer timer;
  const QcsatInstance inst = parse_qcsat_file(path);
  const ValEstimate est = solve_appendix(inst, delta);
  Json j;
  put_value(j, est);
  j.put("delta", delta);
  j.put("wall_time_ms", timer.ms());
  emit(j);
}

void run_nic_clifford(const std::string& path, double alpha, double beta) {
  const Timer timer;
  NicInstance inst;
  inst.circuit = parse_qcsat_file(path).circuit;
  inst.alpha = alpha;
  inst.beta = beta;
  const NicCliffordResult res = decide_nic_clifford(inst);
  Json thresholds;
  thresholds.put("yes", res.yes_threshold.str());
  thresholds.put("no", res.no_threshold.str());
  Json j;
  j.put("decision", res.yes ? "yes" : "no");
  j.put("p", static_cast<std::size_t>(res.p));
  j.put("trace_value", res.trace.str());
  j.put("thresholds", thresholds);
  j.put("wall_time_ms", timer.ms());
  emit(j);
}

void run_nic_lightcone(const std::string& path,
                       std::optional<std::size_t> depth) {
  const Timer timer;
  NicInstance inst;
  inst.circuit = parse_qcsat_file(path).circuit;
  inst.depth_bound = depth;
  const NicLightconeResult res = decide_nic_lightcone(inst);
  Json j;
  j.put("decision", res.yes ? "yes" : "no");
  if (res.failing_qubit)
    j.put("failing_qubit", *res.failing_qubit);
  else
    j.put_null("failing_qubit");
  j.put("lightcone_size", res.lightcone_size);
  j.put("depth", res.depth);
  j.put("wall_time_ms", timer.ms());
  emit(j);
}

void write_instance(const QcsatInstance& inst, const std::string& out_path) {
  std::ofstream out(out_path);
  if (!out) throw ParseError("cannot open output file: " + out_path);
  out << serialize_qcsat(inst);
  if (!out) throw ParseError("failed writing output file: " + out_path);
}

void run_gen_random(std::size_t n, std::size_t m, std::size_t s, std::size_t t,
                    std::uint64_t seed, const std::string& out_path) {
  const Timer timer;
  const QcsatInstance inst = random_instance(n, m, s, t, seed);
  write_instance(inst, out_path);
  Json j;
  j.put("path", out_path);
  j.put("n", n);
  j.put("m", m);
  j.put("s", s);
  j.put("t", t);
  j.put("seed", static_cast<std::size_t>(seed));
  j.put("wall_time_ms", timer.ms());
  emit(j);
}

void run_gen_ising(const std::string& graph_path, const std::string& wprep_path,
                   const std::string& out_path) {
  const Timer timer;
  std::ifstream gin(graph_path);
  if (!gin) throw ParseError("cannot open graph file: " + graph_path);
  const IsingSpec spec = parse_ising(gin);
  const std::size_t m = 2 * (spec.edges.size() + spec.num_vertices);

  Circuit wprep;
  std::string source;
  if (!wprep_path.empty()) {
    wprep = parse_qcsat_file(wprep_path).circuit;
    source = wprep_path;
  } else if (m == 2) {
    wprep = w2_preparation();
    source = "builtin-w2";
  } else {
    wprep = w_state_preparation(m);
    source = "builtin-rotation-cascade";
  }
  const QcsatInstance inst = ising_to_qcsat(spec, wprep);
  write_instance(inst, out_path);

  Json j;
  j.put("path", out_path);
  j.put("vertices", spec.num_vertices);
  j.put("edges", spec.edges.size());
  j.put("m", m);
  j.put("preparation", source);
  try {
    j.put("expected_value", ising_value(spec));
  } catch (const CapExceeded&) {
    j.put_null("expected_value");  // brute force too large; instance still valid
  }
  j.put("wall_time_ms", timer.ms());
  emit(j);
}

void run_oracle_val(const std::string& path) {
  const Timer timer;
  const QcsatInstance inst = parse_qcsat_file(path);
  const DenseVal res = exact_val_dense(inst);
  std::vector<double> re(res.witness.size()), im(res.witness.size());
  for (Eigen::Index i = 0; i < res.witness.size(); ++i) {
    re[static_cast<std::size_t>(i)] = res.witness[i].real();
    im[static_cast<std::size_t>(i)] = res.witness[i].imag();
  }
  Json j;
  j.put("value", res.value);
  j.put_array("witness_real", re, json_double);
  j.put_array("witness_imag", im, json_double);
  j.put("wall_time_ms", timer.ms());
  emit(j);
}

void run_oracle_distance(const std::string& path) {
  const Timer timer;
  const QcsatInstance inst = parse_qcsat_file(path);
  Json j;
  j.put("distance", identity_distance(circuit_unitary(inst.circuit)));
  j.put("wall_time_ms", timer.ms());
  emit(j);
}

void run_oracle_accept(const std::string& path, const std::string& amps_path) {
  const Timer timer;
  const QcsatInstance inst = parse_qcsat_file(path);
  const CVec witness = parse_amplitudes(
      amps_path, std::size_t{1} << inst.witness.size());
  Json j;
  j.put("probability", acceptance_probability(inst, witness));
  j.put("wall_time_ms", timer.ms());
  emit(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Clifford+T circuit satisfiability: solvers, generators, oracle"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 1;
  int threads = 1;
  app.add_flag("--json", g_compact, "compact single-line JSON output");
  app.add_option("--seed", seed, "random seed for randomized modes");
  app.add_option("--threads", threads, "worker threads (results independent)")
      ->check(CLI::PositiveNumber);

  std::string file, witness_file, graph_file, wprep_file, out_file;
  double delta = 0.05, appendix_delta = 1e-3, alpha = 0.0, beta = 0.0;
  bool exact = false, randomized = false;
  std::size_t gen_n = 0, gen_m = 0, gen_s = 0, gen_t = 0;
  std::optional<std::size_t> depth;

  CLI::App* qc = app.add_subcommand("qcsat", "satisfiability solver");
  qc->require_subcommand(1);
  qc->fallthrough();
  CLI::App* qc_solve = qc->add_subcommand("solve", "value + optimal witness");
  qc_solve->add_option("file", file)->required();
  qc_solve->add_option("--delta", delta, "randomized relative error");
  qc_solve->add_flag("--exact", exact, "force the exact eigensolve");
  qc_solve->add_flag("--randomized", randomized, "force the power method");
  CLI::App* qc_wit = qc->add_subcommand("witness", "optimal witness recipe");
  qc_wit->add_option("file", file)->required();
  qc_wit->add_option("--delta", delta);
  qc_wit->add_flag("--exact", exact);
  qc_wit->add_flag("--randomized", randomized);
  CLI::App* qc_dec = qc->add_subcommand("decide", "promise-problem decision");
  qc_dec->add_option("file", file)->required();
  qc_dec->add_option("--alpha", alpha, "completeness threshold")->required();
  qc_dec->add_option("--beta", beta, "soundness threshold")->required();

  CLI::App* ap = app.add_subcommand("appendix", "Heisenberg-propagation solver");
  ap->require_subcommand(1);
  ap->fallthrough();
  CLI::App* ap_width = ap->add_subcommand("width", "predict the Pauli-sum width");
  ap_width->add_option("file", file)->required();
  CLI::App* ap_solve = ap->add_subcommand("solve", "value via compressed eigensolve");
  ap_solve->add_option("file", file)->required();
  ap_solve->add_option("--delta", appendix_delta, "recorded eigensolve tolerance");

  CLI::App* nic = app.add_subcommand("nic", "non-identity check");
  nic->require_subcommand(1);
  nic->fallthrough();
  CLI::App* nic_cl = nic->add_subcommand("clifford", "exact trace decider");
  nic_cl->add_option("file", file)->required();
  nic_cl->add_option("--alpha", alpha, "far-from-identity threshold")->required();
  nic_cl->add_option("--beta", beta, "close-to-identity threshold")->required();
  CLI::App* nic_lc = nic->add_subcommand("lightcone", "constant-depth decider");
  nic_lc->add_option("file", file)->required();
  nic_lc->add_option("--depth", depth, "declared depth bound");

  CLI::App* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  gen->fallthrough();
  CLI::App* gen_rand = gen->add_subcommand("random", "seeded random instance");
  gen_rand->add_option("--n", gen_n, "witness qubits")->required();
  gen_rand->add_option("--m", gen_m, "ancilla qubits")->required();
  gen_rand->add_option("--s", gen_s, "total gates")->required();
  gen_rand->add_option("--t", gen_t, "T gates")->required();
  gen_rand->add_option("--out", out_file, "output .qcirc path")->required();
  CLI::App* gen_ising = gen->add_subcommand("ising", "Ising-energy reduction");
  gen_ising->add_option("--graph", graph_file, "edge-list file")->required();
  gen_ising->add_option("--wprep", wprep_file,
                        "W-state preparation circuit (.qcirc)");
  gen_ising->add_option("--out", out_file, "output .qcirc path")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "dense brute-force oracle");
  oracle->require_subcommand(1);
  oracle->fallthrough();
  CLI::App* or_val = oracle->add_subcommand("val", "exact optimum by eigensolve");
  or_val->add_option("file", file)->required();
  CLI::App* or_dist = oracle->add_subcommand("distance", "identity distance");
  or_dist->add_option("file", file)->required();
  CLI::App* or_acc = oracle->add_subcommand("accept", "acceptance probability");
  or_acc->add_option("file", file)->required();
  or_acc->add_option("--witness", witness_file, "amplitudes file (`re im` lines)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (qc_solve->parsed()) {
      run_solve(file, exact, randomized, delta, seed, false);
    } else if (qc_wit->parsed()) {
      run_solve(file, exact, randomized, delta, seed, true);
    } else if (qc_dec->parsed()) {
      run_decide(file, alpha, beta, seed);
    } else if (ap_width->parsed()) {
      run_appendix_width(file);
    } else if (ap_solve->parsed()) {
      run_appendix_solve(file, appendix_delta);
    } else if (nic_cl->parsed()) {
      run_nic_clifford(file, alpha, beta);
    } else if (nic_lc->parsed()) {
      run_nic_lightcone(file, depth);
    } else if (gen_rand->parsed()) {
      run_gen_random(gen_n, gen_m, gen_s, gen_t, seed, out_file);
    } else if (gen_ising->parsed()) {
      run_gen_ising(graph_file, wprep_file, out_file);
    } else if (or_val->parsed()) {
      run_oracle_val(file);
    } else if (or_dist->parsed()) {
      run_oracle_distance(file);
    } else if (or_acc->parsed()) {
      run_oracle_accept(file, witness_file);
    }
  } catch (const CapExceeded& e) {
    Json j;
    j.put("error", e.what());
    emit(j);
    return 3;
  } catch (const ParseError& e) {
    Json j;
    j.put("error", e.what());
    emit(j);
    return 2;
  } catch (const std::invalid_argument& e) {
    Json j;
    j.put("error", e.what());
    emit(j);
    return 2;
  } catch (const std::exception& e) {
    Json j;
    j.put("error", e.what());
    emit(j);
    return 1;
  }
  return 0;
}
