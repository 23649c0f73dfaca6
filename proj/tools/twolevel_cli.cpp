// Copyright 2026 The twolevel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: random | gray | decompose | verify | circuit | simulate.
//
// Exit codes: 0 ok, 1 verification failed, 2 usage or parse error, 3 input not unitary,
// 4 bad determinant prescription.

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twolevel/decomposition.hpp"
#include "twolevel/errors.hpp"
#include "twolevel/gray.hpp"
#include "twolevel/linalg.hpp"
#include "twolevel/qgate.hpp"
#include "twolevel/serialization.hpp"

namespace {

using namespace twolevel;

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kNotUnitary = 3,
  kBadPrescription = 4,
};

struct CliConfig {
  std::string input_path;
  std::string output_path;
  std::string perm;
  std::optional<std::size_t> qubits;
  std::string mode = "auto";
  std::string mus_path;
  std::uint64_t seed = 0;
  std::optional<std::size_t> d;
  std::optional<double> tol;
  std::string state_path;
  std::string factors_path;
  std::string circuit_path;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string pass_fail(bool ok) { return ok ? "pass" : "FAIL"; }

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw UsageError("--perm: '" + item + "' is not an integer");
    }
    if (pos != item.size() || v < 1) throw UsageError("--perm: '" + item + "' is not a positive integer");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

UnitaryMatrix load_unitary(const CliConfig& cfg) {
  if (cfg.input_path.empty()) throw UsageError("--input is required");
  Matrix m = matrix_from_json(read_json_file(cfg.input_path));
  return UnitaryMatrix(std::move(m), cfg.tol);
}

PermutationOrder choose_permutation(const CliConfig& cfg, std::size_t d) {
  if (!cfg.perm.empty() && cfg.qubits) throw UsageError("--perm and --qubits are exclusive");
  if (cfg.qubits) {
    const std::size_t n = *cfg.qubits;
    if (n < 1 || n > kMaxGrayBits || (std::size_t{1} << n) != d) {
      throw UsageError("--qubits " + std::to_string(n) + " does not match dimension " + std::to_string(d));
    }
    return gray_to_permutation(gray_code(n));
  }
  if (!cfg.perm.empty()) {
    auto p = parse_index_list(cfg.perm);
    if (p.size() != d) {
      throw UsageError("--perm has " + std::to_string(p.size()) + " entries for dimension " + std::to_string(d));
    }
    try {
      return PermutationOrder(std::move(p));
    } catch (const DomainError& e) {
      throw UsageError(std::string("--perm: ") + e.what());
    }
  }
  return PermutationOrder::identity(d);
}

void print_report(std::ostream& os, const VerificationReport& r) {
  os << std::setprecision(3) << std::scientific;
  os << "residual            " << r.residual << " (tol " << r.residual_tol << ") "
     << pass_fail(r.residual_ok) << "\n";
  os << "factors             " << r.factor_count << " (non-identity " << r.nonidentity_count
     << ", bound " << r.count_bound << ") " << pass_fail(r.count_ok) << "\n";
  os << "block unitarity     " << r.max_unitarity_error << " " << pass_fail(r.blocks_ok) << "\n";
  os << "stored det error    " << r.max_det_error << " " << pass_fail(r.dets_ok) << "\n";
  os << "det product error   " << r.det_product_error << " " << pass_fail(r.det_product_ok) << "\n";
  os << "factor structure    " << pass_fail(r.structure_ok) << "\n";
}

void print_report(std::ostream& os, const CircuitReport& r) {
  os << std::setprecision(3) << std::scientific;
  os << "residual            " << r.residual << " (tol " << r.residual_tol << ") "
     << pass_fail(r.residual_ok) << "\n";
  os << "gates               " << r.gate_count << " (bound " << r.gate_bound << ")\n";
  os << "classes             " << r.class_count << " (bound " << r.class_bound << ") "
     << pass_fail(r.counts_ok) << "\n";
  os << "gate structure      " << r.max_unitarity_error << " " << pass_fail(r.gates_ok) << "\n";
}

int cmd_random(const CliConfig& cfg) {
  if (!cfg.d) throw UsageError("--d is required");
  const auto u = random_unitary(*cfg.d, cfg.seed);
  write_output(cfg.output_path, dump(to_json(u.matrix())));
  return kOk;
}

int cmd_gray(const CliConfig& cfg) {
  if (!cfg.qubits) throw UsageError("--qubits is required");
  const auto g = gray_code(*cfg.qubits);
  std::string text = render_sequence(g.seq) + "\n" + render_permutation(gray_to_permutation(g).values()) + "\n";
  write_output(cfg.output_path, text);
  return kOk;
}

int cmd_decompose(const CliConfig& cfg) {
  const auto u = load_unitary(cfg);
  const auto p = choose_permutation(cfg, u.dim());
  Decomposition dec;
  if (cfg.mode == "prescribed") {
    if (cfg.mus_path.empty()) throw UsageError("--mode prescribed requires --mus");
    PhasePrescription mus{complex_array_from_json(read_json_file(cfg.mus_path))};
    dec = decompose(u, p, mus);
  } else {
    dec = decompose(u, p);
  }
  write_output(cfg.output_path, dump(to_json(dec)));
  const auto report = verify(u.matrix(), dec);
  print_report(std::cerr, report);
  return report.passed() ? kOk : kVerifyFailed;
}

int cmd_verify(const CliConfig& cfg) {
  if (cfg.input_path.empty()) throw UsageError("--input is required");
  if (!cfg.factors_path.empty() && !cfg.circuit_path.empty()) {
    throw UsageError("--factors and --circuit are exclusive");
  }
  const Matrix m = matrix_from_json(read_json_file(cfg.input_path));
  const double unitarity = unitarity_error(m);
  const bool unitary_ok = unitarity <= default_unitarity_tol(m.rows());
  std::cout << std::setprecision(3) << std::scientific << "input unitarity     " << unitarity
            << " " << pass_fail(unitary_ok) << "\n";

  bool ok = unitary_ok;
  if (!cfg.factors_path.empty()) {
    const auto dec = decomposition_from_json(read_json_file(cfg.factors_path));
    if (dec.dim != m.rows()) {
      throw UsageError("decomposition is " + std::to_string(dec.dim) + "-dimensional, matrix is " +
                       std::to_string(m.rows()));
    }
    const auto report = verify(m, dec, cfg.tol);
    if (!report.dims_ok) throw UsageError("decomposition indices do not fit the matrix");
    print_report(std::cout, report);
    ok = ok && report.passed();
  } else if (!cfg.circuit_path.empty()) {
    const auto c = circuit_from_json(read_json_file(cfg.circuit_path));
    const auto report = verify_circuit(m, c, cfg.tol);
    if (!report.dims_ok) {
      throw UsageError(std::to_string(c.n) + "-qubit circuit against a " + std::to_string(m.rows()) +
                       "-dimensional matrix");
    }
    print_report(std::cout, report);
    ok = ok && report.passed();
  }
  std::cout << (ok ? "verified" : "verification FAILED") << "\n";
  return ok ? kOk : kVerifyFailed;
}

int cmd_circuit(const CliConfig& cfg) {
  if (cfg.input_path.empty()) throw UsageError("--input is required");
  const Matrix m = matrix_from_json(read_json_file(cfg.input_path));
  const std::size_t n = qubits_for_dimension(m.rows());
  if (cfg.qubits && *cfg.qubits != n) throw UsageError("--qubits does not match the matrix dimension");
  const UnitaryMatrix u(m, cfg.tol);
  const auto c = synthesize_circuit(u);
  write_output(cfg.output_path, dump(to_json(c)));
  const auto report = verify_circuit(m, c);
  print_report(std::cerr, report);
  if (c.gates.size() <= 32) {
    for (const auto& g : c.gates) std::cerr << "  " << render_gate(g) << "\n";
  }
  return report.passed() ? kOk : kVerifyFailed;
}

double norm(const std::vector<Complex>& psi) {
  double s = 0.0;
  for (const Complex& z : psi) s = std::hypot(s, std::abs(z));
  return s;
}

int cmd_simulate(const CliConfig& cfg) {
  if (cfg.circuit_path.empty() || cfg.state_path.empty()) throw UsageError("--circuit and --state are required");
  const auto c = circuit_from_json(read_json_file(cfg.circuit_path));
  for (const auto& g : c.gates) validate_gate(g);
  const auto psi = complex_array_from_json(read_json_file(cfg.state_path));
  if (psi.size() != (std::size_t{1} << c.n)) {
    throw UsageError("state has " + std::to_string(psi.size()) + " amplitudes, circuit needs " +
                     std::to_string(std::size_t{1} << c.n));
  }
  const double norm_in = norm(psi);
  if (std::abs(norm_in - 1.0) > 1e-10) {
    std::cerr << "warning: input state is not normalized (norm " << norm_in << ")\n";
  }
  const auto out = apply_circuit(c, psi);
  write_output(cfg.output_path, dump(complex_array_to_json(out)));
  const double norm_out = norm(out);
  std::cerr << std::setprecision(17) << "norm in  " << norm_in << "\nnorm out " << norm_out
            << "\nratio    " << (norm_in > 0.0 ? norm_out / norm_in : 1.0) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-level unitary factorization and controlled-gate synthesis"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto* random = app.add_subcommand("random", "Write a seeded random unitary as matrix JSON");
  random->add_option("--d", cfg.d, "Dimension")->required();
  random->add_option("--seed", cfg.seed, "64-bit seed");
  random->add_option("--output", cfg.output_path, "Output file (default stdout)");

  auto* gray = app.add_subcommand("gray", "Print the reflected Gray code and its permutation");
  gray->add_option("--qubits", cfg.qubits, "Number of bits")->required();
  gray->add_option("--output", cfg.output_path, "Output file (default stdout)");

  auto* decomp = app.add_subcommand("decompose", "Factor a unitary into two-level factors");
  decomp->add_option("--input", cfg.input_path, "Matrix JSON")->required();
  decomp->add_option("--output", cfg.output_path, "Decomposition JSON (default stdout)");
  decomp->add_option("--perm", cfg.perm, "1-based comma-separated elimination order");
  decomp->add_option("--qubits", cfg.qubits, "Use the Gray-code order for N qubits");
  decomp->add_option("--mode", cfg.mode, "Determinant mode")->check(CLI::IsMember({"auto", "prescribed"}));
  decomp->add_option("--mus", cfg.mus_path, "Prescribed determinants, JSON array of [re,im]");
  decomp->add_option("--tol", cfg.tol, "Unitarity tolerance (default 1e-10*d)");

  auto* ver = app.add_subcommand("verify", "Check a decomposition or circuit against a matrix");
  ver->add_option("--input", cfg.input_path, "Matrix JSON")->required();
  ver->add_option("--factors", cfg.factors_path, "Decomposition JSON");
  ver->add_option("--circuit", cfg.circuit_path, "Circuit JSON");
  ver->add_option("--tol", cfg.tol, "Residual tolerance (default 1e-10*d)");

  auto* circ = app.add_subcommand("circuit", "Synthesize fully controlled single-qubit gates");
  circ->add_option("--input", cfg.input_path, "2^n x 2^n matrix JSON")->required();
  circ->add_option("--output", cfg.output_path, "Circuit JSON (default stdout)");
  circ->add_option("--qubits", cfg.qubits, "Expected qubit count");
  circ->add_option("--tol", cfg.tol, "Unitarity tolerance (default 1e-10*d)");

  auto* sim = app.add_subcommand("simulate", "Apply a circuit to a state vector");
  sim->add_option("--circuit", cfg.circuit_path, "Circuit JSON")->required();
  sim->add_option("--state", cfg.state_path, "State JSON, array of [re,im]")->required();
  sim->add_option("--output", cfg.output_path, "Output state JSON (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*random) return cmd_random(cfg);
    if (*gray) return cmd_gray(cfg);
    if (*decomp) return cmd_decompose(cfg);
    if (*ver) return cmd_verify(cfg);
    if (*circ) return cmd_circuit(cfg);
    if (*sim) return cmd_simulate(cfg);
  } catch (const NotUnitaryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotUnitary;
  } catch (const PrescriptionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadPrescription;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
