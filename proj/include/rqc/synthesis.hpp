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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "rqc/circuit.hpp"
#include "rqc/dense.hpp"
#include "rqc/field.hpp"
#include "rqc/pauli.hpp"
#include "rqc/tableau.hpp"
#include "rqc/verify.hpp"

namespace rqc {

/// Conjugation action of a single Clifford-like gate on a string.
inline SignedPauliString conjugate_by_gate(const SignedPauliString& p,
                                           const Gate& g) {
  switch (g.kind) {
    case GateKind::Cnot:
      return conjugate_by_cnot(p, g.control, g.target);
    case GateKind::Named:
      return conjugate_by_local(p, g.site, g.name);
    default:
      throw std::invalid_argument(
          "only C-NOT and named locals act on strings symbolically");
  }
}

/// Conjugation action of a gate word, first gate innermost: the result is
/// g_k ... g_1 p g_1^dagger ... g_k^dagger for gates listed g_1 ... g_k.
inline SignedPauliString replay_word(const std::vector<Gate>& gates,
                                     const SignedPauliString& p) {
  SignedPauliString cur = p;
  for (const Gate& g : gates) cur = conjugate_by_gate(cur, g);
  return cur;
}

/// Time-ordered inverse of a Clifford-like gate word, expressed again in
/// named gates so the result stays symbolically replayable.  The only
/// non-self-inverse cases are the quarter-turn pairs and the two Real
/// rotations: HTilde is a rotation by -pi/4, so its inverse is the +pi/4
/// rotation HTilde * YTilde-in-front; YTilde (a quarter turn) inverts as
/// three quarter turns.
inline std::vector<Gate> invert_clifford_gates(const std::vector<Gate>& gates) {
  std::vector<Gate> out;
  out.reserve(gates.size() + 4);
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    const Gate& g = *it;
    if (g.kind == GateKind::Cnot) {
      out.push_back(g);
      continue;
    }
    if (g.kind != GateKind::Named)
      throw std::invalid_argument("cannot invert a non-Clifford gate word");
    switch (g.name) {
      case LocalGateName::H:
      case LocalGateName::PauliX:
      case LocalGateName::PauliZ:
        out.push_back(g);
        break;
      case LocalGateName::RxQPlus:
        out.push_back(Gate::named(g.site, LocalGateName::RxQMinus));
        break;
      case LocalGateName::RxQMinus:
        out.push_back(Gate::named(g.site, LocalGateName::RxQPlus));
        break;
      case LocalGateName::RyQPlus:
        out.push_back(Gate::named(g.site, LocalGateName::RyQMinus));
        break;
      case LocalGateName::RyQMinus:
        out.push_back(Gate::named(g.site, LocalGateName::RyQPlus));
        break;
      case LocalGateName::RzQPlus:
        out.push_back(Gate::named(g.site, LocalGateName::RzQMinus));
        break;
      case LocalGateName::RzQMinus:
        out.push_back(Gate::named(g.site, LocalGateName::RzQPlus));
        break;
      case LocalGateName::HTilde:
        // rot(-pi/4)^-1 = rot(pi/4) = rot(pi/2) rot(-pi/4).
        out.push_back(Gate::named(g.site, LocalGateName::HTilde));
        out.push_back(Gate::named(g.site, LocalGateName::YTilde));
        break;
      case LocalGateName::YTilde:
        out.push_back(Gate::named(g.site, LocalGateName::YTilde));
        out.push_back(Gate::named(g.site, LocalGateName::YTilde));
        out.push_back(Gate::named(g.site, LocalGateName::YTilde));
        break;
    }
  }
  return out;
}

/// A Clifford-like gate word carrying a basis string to (sign times) the
/// elementary single-site generator at the pivot and back: replaying the
/// word on the elementary pivot string (Z at the pivot over the Complex
/// field, the antisymmetric Y over the Real field) yields sign * target.
struct ConjugationWord {
  std::vector<Gate> gates;
  int pivot = -1;
  int sign = +1;
};

namespace detail {

/// Direction of the reduction: gates mapping the *target* string down to
/// sign * elementary-at-pivot under replay.  The public ConjugationWord is
/// the inverse word.
struct Reduction {
  std::vector<Gate> gates;
  int pivot = -1;
  int sign = +1;
  int pair_cnots = 0;  // Real field: C-NOTs spent merging Y pairs
};

inline Reduction reduce_impl(const SignedPauliString& p) {
  if (!(p.phase == Phase::plus_one()))
    throw std::invalid_argument("reduction expects a phase +1 string");
  if (p.weight() < 1)
    throw std::invalid_argument("cannot reduce the identity string");

  Reduction red;
  SignedPauliString cur = p;
  const int n = p.num_sites();
  const auto push = [&](const Gate& g) {
    red.gates.push_back(g);
    cur = conjugate_by_gate(cur, g);
  };

  if (p.field == Field::Complex) {
    // Pivot: highest-index non-identity site.
    for (int s = n - 1; s >= 0; --s)
      if (p.ops[s] != SiteOp::I) {
        red.pivot = s;
        break;
      }
    // Rotate every non-identity letter to Z with one local Clifford.
    for (int s = 0; s < n; ++s) {
      if (cur.ops[s] == SiteOp::X)
        push(Gate::named(s, LocalGateName::H));
      else if (cur.ops[s] == SiteOp::Y)
        push(Gate::named(s, LocalGateName::RxQPlus));
    }
    // Fold each non-pivot Z onto the pivot: conjugating Z (x) Z by the
    // C-NOT clears the control letter.
    for (int s = 0; s < n; ++s)
      if (s != red.pivot && cur.ops[s] == SiteOp::Z)
        push(Gate::cnot(s, red.pivot));
  } else {
    if (!is_real_generator(p))
      throw std::invalid_argument(
          "Real reduction requires an odd-Y (antisymmetric) string");
    // Pivot: highest-index Y site.
    for (int s = n - 1; s >= 0; --s)
      if (p.ops[s] == SiteOp::Y) {
        red.pivot = s;
        break;
      }
    // The remaining Y sites come in even number; merge them pairwise,
    // adjacent in index order: one C-NOT conjugation turns Y (x) Y into a
    // (signed) X, Z pair.
    std::vector<int> y_sites;
    for (int s = 0; s < n; ++s)
      if (s != red.pivot && cur.ops[s] == SiteOp::Y) y_sites.push_back(s);
    for (std::size_t k = 0; k + 1 < y_sites.size(); k += 2) {
      push(Gate::cnot(y_sites[k], y_sites[k + 1]));
      ++red.pair_cnots;
    }
    // Rotate X letters to Z.
    for (int s = 0; s < n; ++s)
      if (s != red.pivot && cur.ops[s] == SiteOp::X)
        push(Gate::named(s, LocalGateName::HTilde));
    // Fold each non-pivot Z onto the pivot (Z (x) Y -> I (x) Y).
    for (int s = 0; s < n; ++s)
      if (s != red.pivot && cur.ops[s] == SiteOp::Z)
        push(Gate::cnot(s, red.pivot));
  }

  // The word must now hold exactly the elementary generator at the pivot.
  const SiteOp elementary =
      p.field == Field::Complex ? SiteOp::Z : SiteOp::Y;
  for (int s = 0; s < n; ++s) {
    const SiteOp expect = s == red.pivot ? elementary : SiteOp::I;
    if (cur.ops[s] != expect)
      throw std::logic_error("pivot reduction failed to normalize a letter");
  }
  if (!cur.phase.is_real())
    throw std::logic_error("pivot reduction produced an imaginary sign");
  red.sign = cur.phase.real_sign();
  return red;
}

}  // namespace detail

/// Word mapping the elementary pivot generator to sign * p under replay.
/// Requires phase +1, weight >= 1, and (Real) an odd Y count.
inline ConjugationWord reduce_to_pivot(const SignedPauliString& p) {
  const detail::Reduction red = detail::reduce_impl(p);
  ConjugationWord word;
  word.pivot = red.pivot;
  word.sign = red.sign;
  word.gates = invert_clifford_gates(red.gates);
  return word;
}

/// Circuit realizing the exponential of a basis string: exp(i t P) over
/// the Complex field, exp(t G) over the Real field.  Weight-1 strings need
/// a single continuous local gate; otherwise the string is conjugated down
/// to its pivot, the continuous rotation applied there, and the
/// conjugation undone:  exp = W^-1 . rot(pivot, sign t) . W.  The C-NOT
/// cost is 2(w-1) for weight w, plus one extra C-NOT pair per merged Y
/// pair over the Real field.
inline Circuit pauli_exponential_circuit(const SignedPauliString& p,
                                         double t) {
  const int n = p.num_sites();
  Circuit c(p.field, n);
  if (p.weight() == 1) {
    if (!(p.phase == Phase::plus_one()))
      throw std::invalid_argument("reduction expects a phase +1 string");
    int site = 0;
    for (int s = 0; s < n; ++s)
      if (p.ops[s] != SiteOp::I) site = s;
    if (p.field == Field::Complex) {
      c.append(Gate::pauli_exp_gate(site, p.ops[site], t));
    } else {
      if (!is_real_generator(p))
        throw std::invalid_argument(
            "Real exponential requires an odd-Y (antisymmetric) string");
      c.append(Gate::rotation(site, t));
    }
    return c;
  }

  const detail::Reduction red = detail::reduce_impl(p);
  c.extend(red.gates);
  if (p.field == Field::Complex)
    c.append(Gate::pauli_exp_gate(red.pivot, SiteOp::Z,
                                  double(red.sign) * t));
  else
    c.append(Gate::rotation(red.pivot, double(red.sign) * t));
  c.extend(invert_clifford_gates(red.gates));

  const int budget = 2 * (p.weight() - 1) + 2 * red.pair_cnots;
  if (c.cnot_count() > budget)
    throw std::logic_error("C-NOT budget exceeded in exponential circuit");
  return c;
}

/// Two-site circuit evaluating exactly to the reversed C-NOT (control on
/// the right): local basis-change conjugation of the C-NOT itself.  Over
/// the Complex field the dressing is a Hadamard on each side of each wire;
/// over the Real field the planar rotations take over, with the quarter
/// turn landing on the control side of each dressing layer.
inline Circuit reversed_cnot_circuit(Field field) {
  Circuit c(field, 2);
  if (field == Field::Complex) {
    c.append(Gate::named(0, LocalGateName::H));
    c.append(Gate::named(1, LocalGateName::H));
    c.append(Gate::cnot(0, 1));
    c.append(Gate::named(0, LocalGateName::H));
    c.append(Gate::named(1, LocalGateName::H));
  } else {
    c.append(Gate::named(0, LocalGateName::HTilde));
    c.append(Gate::named(0, LocalGateName::YTilde));
    c.append(Gate::named(1, LocalGateName::HTilde));
    c.append(Gate::cnot(0, 1));
    c.append(Gate::named(0, LocalGateName::HTilde));
    c.append(Gate::named(1, LocalGateName::HTilde));
    c.append(Gate::named(1, LocalGateName::YTilde));
  }
  return c;
}

/// Exchange of the two systems as C-NOT . reversed-C-NOT . C-NOT.
inline Circuit swap_circuit(Field field) {
  Circuit c(field, 2);
  c.append(Gate::cnot(0, 1));
  for (const Gate& g : reversed_cnot_circuit(field).gates) c.append(g);
  c.append(Gate::cnot(0, 1));
  return c;
}

/// Outcome of a compilation run.
struct SynthesisReport {
  Circuit circuit;
  int target_dim = 0;
  bool success = false;
  double achieved_error = 0.0;
  int trotter_steps = 0;
  int cnot_count = 0;
  int local_count = 0;
  bool ancilla_used = false;
  /// Complex targets only: total phase angle divided out to reach the
  /// determinant-1 representative that was compiled.
  double removed_phase = 0.0;
  /// Measured error after each attempted step count (1, 2, 4, ...).
  std::vector<double> error_history;
};

struct TrotterOptions {
  /// Use the symmetric (second-order) splitting: each repetition walks the
  /// terms forward at half angle and then backward at half angle.
  bool symmetric = false;
};

/// Compiles a special unitary (Complex) or special orthogonal (Real)
/// matrix into C-NOTs and local gates via a first-order product formula:
/// the principal logarithm is expanded in the string basis, terms are
/// ordered lexicographically, and the per-term exponential circuits are
/// repeated n times at angle coefficient/n, doubling n from 1 until the
/// measured phase-invariant distance to the target drops to eps or the
/// step budget is exhausted (the best attempt is then returned, flagged
/// unsuccessful).  Complex inputs are first normalized to determinant 1
/// (the removed phase is reported); Real inputs with determinant -1 are
/// rejected: no circuit of these gates on the register alone can reach
/// that component (see orthogonal_compile for the ancilla route).
inline SynthesisReport trotter_compile(const DenseMatrix& u, double eps,
                                       int max_steps,
                                       const TrotterOptions& options = {}) {
  if (eps <= 0.0) throw std::invalid_argument("eps must be positive");
  if (max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
  if (!u.is_unitary(kUnitaryTol))
    throw std::invalid_argument(
        "target is not unitary/orthogonal within tolerance");
  const int n = u.num_sites();
  const int d = u.dim();

  SynthesisReport report;
  report.target_dim = d;

  DenseMatrix normalized = u;
  if (u.field == Field::Complex) {
    const std::complex<double> det = determinant(u);
    const double phi = std::arg(det) / double(d);
    normalized.mat *= std::exp(std::complex<double>(0.0, -phi));
    report.removed_phase = phi;
  } else {
    if (u.max_imag() > kUnitaryTol)
      throw std::invalid_argument("Real-field target has imaginary entries");
    const std::complex<double> det = determinant(u);
    if (std::abs(det + 1.0) <= 1e-8)
      throw disconnected_component_error(
          "determinant -1 target: unreachable by C-NOT + local circuits on "
          "this register; use orthogonal_compile for the ancilla extension");
    if (std::abs(det - 1.0) > 1e-8)
      throw std::invalid_argument("orthogonal target with non-unit determinant");
  }

  DenseMatrix generator =
      u.field == Field::Complex ? unitary_log(normalized).generator
                                : orthogonal_log(normalized).generator;
  if (u.field == Field::Complex) {
    // Make the generator exactly traceless; the discarded trace is one
    // more global phase on the reconstruction.
    const std::complex<double> tr = generator.mat.trace();
    generator.mat -=
        (tr / double(d)) * Eigen::MatrixXcd::Identity(d, d);
    report.removed_phase += tr.imag() / double(d);
  }

  const GeneratorDecomposition decomp = pauli_expand(generator);

  if (decomp.terms.empty()) {
    report.circuit = Circuit(u.field, n);
    report.trotter_steps = 0;
    report.achieved_error =
        phase_invariant_distance(evaluate_circuit(report.circuit), u);
    report.error_history.push_back(report.achieved_error);
    report.success = report.achieved_error <= eps;
    return report;
  }

  Circuit best_circuit(u.field, n);
  double best_error = -1.0;
  int best_steps = 0;

  for (int steps = 1;; steps *= 2) {
    Circuit candidate(u.field, n);
    for (int rep = 0; rep < steps; ++rep) {
      if (options.symmetric) {
        for (auto it = decomp.terms.begin(); it != decomp.terms.end(); ++it)
          for (const Gate& g : pauli_exponential_circuit(
                   SignedPauliString(u.field, Phase::plus_one(), it->first),
                   it->second / (2.0 * steps))
                   .gates)
            candidate.append(g);
        for (auto it = decomp.terms.rbegin(); it != decomp.terms.rend(); ++it)
          for (const Gate& g : pauli_exponential_circuit(
                   SignedPauliString(u.field, Phase::plus_one(), it->first),
                   it->second / (2.0 * steps))
                   .gates)
            candidate.append(g);
      } else {
        for (const auto& [ops, coeff] : decomp.terms)
          for (const Gate& g : pauli_exponential_circuit(
                   SignedPauliString(u.field, Phase::plus_one(), ops),
                   coeff / steps)
                   .gates)
            candidate.append(g);
      }
    }
    const double err =
        phase_invariant_distance(evaluate_circuit(candidate), u);
    report.error_history.push_back(err);
    if (best_error < 0.0 || err < best_error) {
      best_error = err;
      best_circuit = candidate;
      best_steps = steps;
    }
    if (err <= eps) {
      report.circuit = std::move(candidate);
      report.trotter_steps = steps;
      report.achieved_error = err;
      report.success = true;
      break;
    }
    if (steps * 2 > max_steps) {
      report.circuit = std::move(best_circuit);
      report.trotter_steps = best_steps;
      report.achieved_error = best_error;
      report.success = false;
      break;
    }
  }

  report.cnot_count = report.circuit.cnot_count();
  report.local_count = report.circuit.local_count();
  return report;
}

/// Compiles an arbitrary orthogonal target.  The determinant +1 component
/// compiles directly; a determinant -1 target O is unreachable on its own
/// register, so the compiler targets the doubled block matrix with O on
/// both diagonal blocks — an extra leftmost system whose state is returned
/// unchanged — which has determinant (+1) and compiles like any rotation.
inline SynthesisReport orthogonal_compile(const DenseMatrix& o, double eps,
                                          int max_steps,
                                          const TrotterOptions& options = {}) {
  if (o.field != Field::Real)
    throw std::invalid_argument("orthogonal_compile expects a Real target");
  if (o.max_imag() > kUnitaryTol)
    throw std::invalid_argument("Real-field target has imaginary entries");
  if (!o.is_unitary(kUnitaryTol))
    throw std::invalid_argument("target is not orthogonal within tolerance");
  const double det = determinant(o).real();
  if (std::abs(det - 1.0) <= 1e-8) return trotter_compile(o, eps, max_steps, options);
  if (std::abs(det + 1.0) > 1e-8)
    throw std::invalid_argument("orthogonal target with non-unit determinant");

  const int d = o.dim();
  Eigen::MatrixXcd doubled = Eigen::MatrixXcd::Zero(2 * d, 2 * d);
  doubled.topLeftCorner(d, d) = o.mat;
  doubled.bottomRightCorner(d, d) = o.mat;
  SynthesisReport report = trotter_compile(DenseMatrix(Field::Real, doubled),
                                           eps, max_steps, options);
  report.target_dim = d;
  report.ancilla_used = true;
  return report;
}

}  // namespace rqc
