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

#include <deque>
#include <set>
#include <stdexcept>
#include <vector>

#include "rqc/circuit.hpp"
#include "rqc/dense.hpp"
#include "rqc/pauli.hpp"
#include "rqc/tableau.hpp"

namespace rqc {

/// Dense realization of a circuit: the ordered product of gate embeddings,
/// the first gate of the list being the rightmost factor.  Local gates mix
/// row pairs; the C-NOT permutes rows.  Real-field circuits evaluate to
/// exactly real matrices.
inline DenseMatrix evaluate_circuit(const Circuit& c) {
  const int d = 1 << c.width;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(d, d);
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::Cnot) {
      const int cmask = 1 << (c.width - 1 - g.control);
      const int tmask = 1 << (c.width - 1 - g.target);
      for (int r = 0; r < d; ++r)
        if ((r & cmask) && !(r & tmask)) m.row(r).swap(m.row(r | tmask));
    } else {
      const Mat2 u = local_dense(c.field, g);
      const int mask = 1 << (c.width - 1 - g.site);
      for (int r0 = 0; r0 < d; ++r0) {
        if (r0 & mask) continue;
        const int r1 = r0 | mask;
        const Eigen::RowVectorXcd top = m.row(r0);
        m.row(r0) = u[0] * top + u[1] * m.row(r1);
        m.row(r1) = u[2] * top + u[3] * m.row(r1);
      }
    }
  }
  return DenseMatrix(c.field, std::move(m));
}

/// Determinant of a Real circuit evaluation, snapped to +1 or -1.
///
/// Registers of one site are rejected: there a reflection local reaches
/// determinant -1 trivially and no parity statement can hold.  Note that a
/// register of exactly two sites is *not* parity-protected either: the
/// C-NOT itself embeds as a single transposition of basis vectors there,
/// so its determinant is -1 and a width-2 circuit evaluates to
/// (-1)^(number of C-NOTs).  From three sites up, every C-NOT and local
/// embedding has an even permutation/reflection exponent and all circuit
/// determinants are +1.
inline int determinant_parity_check(const Circuit& c, double tol = 1e-8) {
  if (c.field != Field::Real)
    throw std::invalid_argument(
        "determinant parity applies to Real circuits only");
  if (c.width < 2)
    throw std::invalid_argument(
        "determinant parity requires a register of at least 2 sites");
  const std::complex<double> det = determinant(evaluate_circuit(c));
  if (std::abs(det.imag()) > tol)
    throw std::runtime_error("Real circuit evaluated to a complex determinant");
  if (std::abs(det.real() - 1.0) <= tol) return +1;
  if (std::abs(det.real() + 1.0) <= tol) return -1;
  throw std::runtime_error(
      "circuit determinant not within tolerance of +1 or -1");
}

/// Full algebra dimension: 4^N - 1 over the Complex field (traceless
/// anti-Hermitian span), 2^{N-1} (2^N - 1) over the Real field
/// (antisymmetric span).
inline long expected_algebra_dimension(int num_sites, Field field) {
  if (num_sites < 1) throw std::invalid_argument("num_sites must be >= 1");
  const long d = 1L << num_sites;
  return field == Field::Complex ? d * d - 1 : (d / 2) * (d - 1);
}

/// Dimension of the Lie algebra generated by the single-site generators
/// under the gate set: starting from X, Y, Z at each site (Complex) or the
/// antisymmetric Y at each site (Real), the set of basis strings is closed
/// under (a) conjugation by every ordered C-NOT pair and by the named local
/// Clifford gates, and (b) Lie brackets between collected strings.  Since
/// conjugation and brackets map basis strings to signed basis strings, the
/// collected set is a set of independent basis directions and the rank is
/// simply its size.  Conjugation closure runs breadth-first to a fixpoint
/// before each bracket sweep; sweeps repeat until nothing new appears.
inline int generated_algebra_dimension(int num_sites, Field field) {
  if (num_sites < 1 || num_sites > 6)
    throw std::invalid_argument(
        "algebra closure supported for 1 to 6 sites only");
  std::set<std::vector<SiteOp>> collected;
  std::deque<std::vector<SiteOp>> frontier;
  const auto admit = [&](const std::vector<SiteOp>& ops) {
    if (collected.insert(ops).second) frontier.push_back(ops);
  };

  for (int s = 0; s < num_sites; ++s) {
    std::vector<SiteOp> ops(num_sites, SiteOp::I);
    if (field == Field::Complex) {
      for (SiteOp letter : {SiteOp::X, SiteOp::Y, SiteOp::Z}) {
        ops[s] = letter;
        admit(ops);
      }
    } else {
      ops[s] = SiteOp::Y;
      admit(ops);
    }
  }

  while (true) {
    // (a) conjugation closure to a fixpoint.
    while (!frontier.empty()) {
      const std::vector<SiteOp> ops = frontier.front();
      frontier.pop_front();
      const SignedPauliString p(field, Phase::plus_one(), ops);
      for (int i = 0; i < num_sites; ++i) {
        for (int j = 0; j < num_sites; ++j) {
          if (i == j) continue;
          admit(conjugate_by_cnot(p, i, j).ops);
        }
      }
      for (int s = 0; s < num_sites; ++s)
        for (LocalGateName g : clifford_gates(field))
          admit(conjugate_by_local(p, s, g).ops);
    }
    // (b) one bracket sweep over the collected strings.  [A, B] = 2 A B
    // for anticommuting strings (zero otherwise), so the bracket direction
    // is the product string.
    const std::vector<std::vector<SiteOp>> snapshot(collected.begin(),
                                                    collected.end());
    bool grew = false;
    for (std::size_t a = 0; a < snapshot.size(); ++a) {
      const SignedPauliString pa(field, Phase::plus_one(), snapshot[a]);
      for (std::size_t b = a + 1; b < snapshot.size(); ++b) {
        const SignedPauliString pb(field, Phase::plus_one(), snapshot[b]);
        if (commutes(pa, pb)) continue;
        const std::vector<SiteOp> prod = string_multiply(pa, pb).ops;
        if (collected.insert(prod).second) {
          frontier.push_back(prod);
          grew = true;
        }
      }
    }
    if (!grew) break;
  }
  return static_cast<int>(collected.size());
}

}  // namespace rqc
