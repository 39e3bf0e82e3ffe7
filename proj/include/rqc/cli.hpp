// Copyright 2026 The rqc Authors
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

#pragma once

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rqc/circuit.hpp"
#include "rqc/dense.hpp"
#include "rqc/synthesis.hpp"
#include "rqc/verify.hpp"

namespace rqc::cli {

/// Exit codes: 0 success / verification pass; 2 step exhaustion or a
/// failed check; 1 malformed input, bad flags or I/O trouble.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitBadInput = 1;
inline constexpr int kExitFailed = 2;

namespace detail {

inline DenseMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file " + path);
  return read_matrix(in);
}

inline Circuit load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open circuit file " + path);
  return read_circuit(in);
}

inline void save_circuit(const std::string& path, const Circuit& c) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write circuit file " + path);
  write_circuit(out, c);
}

inline void save_matrix(const std::string& path, const DenseMatrix& m) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write matrix file " + path);
  write_matrix(out, m);
}

inline Field parse_field_flag(const std::string& text) {
  if (text.size() == 1) return field_from_code(text[0]);
  throw std::invalid_argument("field must be C or R");
}

inline int run_synth(const std::string& target_path, const std::string& out_path,
                     const std::string& field_flag, double eps, int max_steps,
                     std::ostream& out) {
  const DenseMatrix target = load_matrix(target_path);
  if (!field_flag.empty() && parse_field_flag(field_flag) != target.field)
    throw std::invalid_argument(
        "--field disagrees with the matrix file header");
  const SynthesisReport report =
      target.field == Field::Complex
          ? trotter_compile(target, eps, max_steps)
          : orthogonal_compile(target, eps, max_steps);
  save_circuit(out_path, report.circuit);
  out << "target_file: " << target_path << '\n'
      << "field: " << field_code(target.field) << '\n'
      << "target_dim: " << report.target_dim << '\n'
      << "width: " << report.circuit.width << '\n'
      << "trotter_steps: " << report.trotter_steps << '\n'
      << "achieved_error: " << rqc::detail::format_double(report.achieved_error)
      << '\n'
      << "eps: " << rqc::detail::format_double(eps) << '\n'
      << "cnot_count: " << report.cnot_count << '\n'
      << "local_count: " << report.local_count << '\n'
      << "ancilla_used: " << (report.ancilla_used ? "true" : "false") << '\n';
  if (target.field == Field::Complex)
    out << "removed_phase: " << rqc::detail::format_double(report.removed_phase)
        << '\n';
  out << "circuit_file: " << out_path << '\n'
      << "status: " << (report.success ? "success" : "step-exhausted") << '\n';
  return report.success ? kExitSuccess : kExitFailed;
}

inline int run_verify(const std::string& circuit_path,
                      const std::string& target_path, double eps,
                      std::ostream& out) {
  const Circuit circuit = load_circuit(circuit_path);
  const DenseMatrix target = load_matrix(target_path);
  if (circuit.field != target.field)
    throw std::invalid_argument("circuit and target disagree on the field");
  const DenseMatrix evaluated = evaluate_circuit(circuit);
  if (evaluated.dim() != target.dim())
    throw std::invalid_argument("circuit width disagrees with target size");
  const double distance = phase_invariant_distance(evaluated, target);
  const std::complex<double> det = determinant(evaluated);
  out << "circuit_file: " << circuit_path << '\n'
      << "target_file: " << target_path << '\n'
      << "field: " << field_code(circuit.field) << '\n'
      << "width: " << circuit.width << '\n'
      << "distance: " << rqc::detail::format_double(distance) << '\n';
  if (circuit.field == Field::Complex)
    out << "determinant: " << rqc::detail::format_double(det.real()) << ' '
        << rqc::detail::format_double(det.imag()) << '\n';
  else
    out << "determinant: " << rqc::detail::format_double(det.real()) << '\n';
  const bool pass = distance <= eps;
  out << "eps: " << rqc::detail::format_double(eps) << '\n'
      << "status: " << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kExitSuccess : kExitFailed;
}

inline int run_algebra(int n, const std::string& field_flag,
                       std::ostream& out) {
  const Field field = parse_field_flag(field_flag);
  const int found = generated_algebra_dimension(n, field);
  const long expected = expected_algebra_dimension(n, field);
  const bool pass = found == expected;
  out << found << " of " << expected << ": " << (pass ? "PASS" : "FAIL")
      << '\n';
  return pass ? kExitSuccess : kExitFailed;
}

inline int run_examples(const std::string& out_dir, std::ostream& out) {
  namespace fs = std::filesystem;
  const fs::path dir(out_dir);
  if (fs::exists(dir) && !fs::is_directory(dir))
    throw std::invalid_argument("--out must name a directory");
  if (fs::exists(dir) && !fs::is_empty(dir))
    throw std::invalid_argument("output directory must be empty");
  fs::create_directories(dir);

  const auto emit = [&](const std::string& stem, const Circuit& c,
                        const DenseMatrix& target) {
    save_circuit((dir / (stem + ".circuit")).string(), c);
    save_matrix((dir / (stem + ".matrix")).string(), target);
    out << stem << ".circuit " << stem << ".matrix\n";
  };

  // The multipartite exponential exp(i t X(x)I(x)Z(x)Y) at t = 0.7.
  const SignedPauliString xizy(Field::Complex, Phase::plus_one(),
                               {SiteOp::X, SiteOp::I, SiteOp::Z, SiteOp::Y});
  emit("pauli_exp_xizy", pauli_exponential_circuit(xizy, 0.7),
       pauli_exp(xizy, 0.7));
  // Reversed C-NOT in both theories; the target is the exact permutation
  // with control on the right.
  emit("reversed_cnot_c", reversed_cnot_circuit(Field::Complex),
       cnot_matrix(Field::Complex, 2, 1, 0));
  emit("reversed_cnot_r", reversed_cnot_circuit(Field::Real),
       cnot_matrix(Field::Real, 2, 1, 0));
  // Exchange of two systems.
  emit("swap_c", swap_circuit(Field::Complex), swap_matrix(Field::Complex));
  emit("swap_r", swap_circuit(Field::Real), swap_matrix(Field::Real));
  return kExitSuccess;
}

}  // namespace detail

/// Runs the tool on the given arguments (program name excluded), writing
/// reports to `out` and diagnostics to `err`; returns the process exit
/// code.  See the exit-code constants above.
inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"compiler from reversible matrix targets to C-NOT + local-gate "
               "circuits, over complex and real theories"};
  app.name("rqc");
  app.require_subcommand(0, 1);

  // synth
  std::string synth_target, synth_out, synth_field;
  double synth_eps = 1e-2;
  int synth_max_steps = 4096;
  CLI::App* synth = app.add_subcommand(
      "synth", "compile a matrix target into a circuit file");
  synth->add_option("target", synth_target, "target matrix file")->required();
  synth->add_option("--out", synth_out, "circuit file to write")->required();
  synth->add_option("--field", synth_field,
                    "expected field (C or R); cross-checked with the file");
  synth->add_option("--eps", synth_eps,
                    "error budget (phase-invariant distance), default 1e-2");
  synth->add_option("--max-steps", synth_max_steps,
                    "step-count budget for the doubling loop, default 4096");

  // verify
  std::string verify_circuit, verify_target;
  double verify_eps = 1e-6;
  CLI::App* verify = app.add_subcommand(
      "verify", "evaluate a circuit file against a target matrix file");
  verify->add_option("circuit", verify_circuit, "circuit file")->required();
  verify->add_option("target", verify_target, "target matrix file")
      ->required();
  verify->add_option("--eps", verify_eps,
                     "pass threshold on the distance, default 1e-6 (exact "
                     "constructions)");

  // algebra
  int algebra_n = 0;
  std::string algebra_field;
  CLI::App* algebra = app.add_subcommand(
      "algebra",
      "dimension of the gate-generated Lie algebra vs. the full algebra");
  algebra->add_option("--n", algebra_n, "register size (1..6)")->required();
  algebra->add_option("--field", algebra_field, "C or R")->required();

  // examples
  std::string examples_out;
  CLI::App* examples = app.add_subcommand(
      "examples", "write the worked example circuits with their targets");
  examples->add_option("--out", examples_out, "empty output directory")
      ->required();

  // CLI11 wants the arguments reversed and without the program name.
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitBadInput;
  }

  try {
    if (app.got_subcommand(synth))
      return detail::run_synth(synth_target, synth_out, synth_field,
                               synth_eps, synth_max_steps, out);
    if (app.got_subcommand(verify))
      return detail::run_verify(verify_circuit, verify_target, verify_eps,
                                out);
    if (app.got_subcommand(algebra))
      return detail::run_algebra(algebra_n, algebra_field, out);
    if (app.got_subcommand(examples))
      return detail::run_examples(examples_out, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  out << app.help();
  return kExitSuccess;
}

}  // namespace rqc::cli
