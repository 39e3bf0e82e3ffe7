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

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "rqc/field.hpp"
#include "rqc/pauli.hpp"

namespace rqc {

/// Named single-site gates.
///
/// The first seven are the Complex-field Clifford alphabet: Hadamard plus
/// the +-pi/4-angle exponentials exp(+- i pi/4 P) of the three Pauli
/// generators (i.e. +-90-degree Bloch rotations).  HTilde and YTilde are
/// the Real-field Clifford alphabet: the planar rotations by -pi/4 and
/// +pi/2 respectively.  PauliX and PauliZ are the two reflection locals
/// (determinant -1); they are valid circuit gates on registers of two or
/// more sites but are not part of either Clifford set.
enum class LocalGateName : std::uint8_t {
  H,
  RxQPlus,
  RxQMinus,
  RyQPlus,
  RyQMinus,
  RzQPlus,
  RzQMinus,
  HTilde,
  YTilde,
  PauliX,
  PauliZ,
};

inline const char* gate_token(LocalGateName g) {
  switch (g) {
    case LocalGateName::H:
      return "H";
    case LocalGateName::RxQPlus:
      return "RXQ+";
    case LocalGateName::RxQMinus:
      return "RXQ-";
    case LocalGateName::RyQPlus:
      return "RYQ+";
    case LocalGateName::RyQMinus:
      return "RYQ-";
    case LocalGateName::RzQPlus:
      return "RZQ+";
    case LocalGateName::RzQMinus:
      return "RZQ-";
    case LocalGateName::HTilde:
      return "HT";
    case LocalGateName::YTilde:
      return "YT";
    case LocalGateName::PauliX:
      return "X";
    case LocalGateName::PauliZ:
      return "Z";
  }
  throw std::logic_error("unreachable");
}

inline LocalGateName gate_from_token(const std::string& token) {
  static const std::array<LocalGateName, 11> all = {
      LocalGateName::H,        LocalGateName::RxQPlus, LocalGateName::RxQMinus,
      LocalGateName::RyQPlus,  LocalGateName::RyQMinus, LocalGateName::RzQPlus,
      LocalGateName::RzQMinus, LocalGateName::HTilde,  LocalGateName::YTilde,
      LocalGateName::PauliX,   LocalGateName::PauliZ};
  for (LocalGateName g : all)
    if (token == gate_token(g)) return g;
  throw std::invalid_argument("unknown local gate name '" + token + "'");
}

/// Reflection locals have determinant -1; everything else here is a
/// rotation (determinant +1 dense 2x2 realization).
inline bool is_reflection_local(LocalGateName g) {
  return g == LocalGateName::PauliX || g == LocalGateName::PauliZ;
}

/// Which field's circuits may contain the gate.  The reflection locals are
/// real matrices and are admitted in both fields.
inline bool gate_allowed_in_field(LocalGateName g, Field f) {
  switch (g) {
    case LocalGateName::H:
    case LocalGateName::RxQPlus:
    case LocalGateName::RxQMinus:
    case LocalGateName::RyQPlus:
    case LocalGateName::RyQMinus:
    case LocalGateName::RzQPlus:
    case LocalGateName::RzQMinus:
      return f == Field::Complex;
    case LocalGateName::HTilde:
    case LocalGateName::YTilde:
      return f == Field::Real;
    case LocalGateName::PauliX:
    case LocalGateName::PauliZ:
      return true;
  }
  throw std::logic_error("unreachable");
}

/// The named Clifford generators used for conjugation closure and pivot
/// reduction.  (The Real continuous rotations by other multiples of pi/2
/// are products of YTilde, so two names generate the whole set.)
inline const std::vector<LocalGateName>& clifford_gates(Field f) {
  static const std::vector<LocalGateName> complex_set = {
      LocalGateName::H,        LocalGateName::RxQPlus, LocalGateName::RxQMinus,
      LocalGateName::RyQPlus,  LocalGateName::RyQMinus, LocalGateName::RzQPlus,
      LocalGateName::RzQMinus};
  static const std::vector<LocalGateName> real_set = {LocalGateName::HTilde,
                                                      LocalGateName::YTilde};
  return f == Field::Complex ? complex_set : real_set;
}

/// Dense 2x2 realization.
inline Mat2 local_gate_matrix(LocalGateName g) {
  const double r = 1.0 / std::sqrt(2.0);
  const std::complex<double> j(0.0, 1.0);
  switch (g) {
    case LocalGateName::H:
      return {r, r, r, -r};
    // exp(+- i pi/4 P) = (I +- i P) / sqrt(2).
    case LocalGateName::RxQPlus:
      return {r, j * r, j * r, r};
    case LocalGateName::RxQMinus:
      return {r, -j * r, -j * r, r};
    case LocalGateName::RyQPlus:
      return {r, r, -r, r};
    case LocalGateName::RyQMinus:
      return {r, -r, r, r};
    case LocalGateName::RzQPlus:
      return {r + j * r, 0.0, 0.0, r - j * r};
    case LocalGateName::RzQMinus:
      return {r - j * r, 0.0, 0.0, r + j * r};
    // Planar rotations rot(theta) = cos(theta) I + sin(theta) Y~,
    // i.e. [[cos, sin], [-sin, cos]]; HTilde is rot(-pi/4), YTilde rot(pi/2).
    case LocalGateName::HTilde:
      return {r, -r, r, r};
    case LocalGateName::YTilde:
      return {0.0, 1.0, -1.0, 0.0};
    case LocalGateName::PauliX:
      return {0.0, 1.0, 1.0, 0.0};
    case LocalGateName::PauliZ:
      return {1.0, 0.0, 0.0, -1.0};
  }
  throw std::logic_error("unreachable");
}

/// Image of a single letter under conjugation: g m g^dagger = sign * m'.
struct SiteImage {
  SiteOp op = SiteOp::I;
  int sign = +1;
};

/// Image of a two-letter block under C-NOT conjugation,
/// V (m_c (x) m_t) V^dagger = sign * (m_c' (x) m_t').
struct PairImage {
  SiteOp control_op = SiteOp::I;
  SiteOp target_op = SiteOp::I;
  int sign = +1;
};

namespace detail {

using Mat4 = std::array<std::complex<double>, 16>;

inline Mat4 kron2(const Mat2& a, const Mat2& b) {
  Mat4 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out[4 * (2 * i + k) + (2 * j + l)] = a[2 * i + j] * b[2 * k + l];
  return out;
}

inline Mat2 mat2_dagger(const Mat2& a) {
  return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

/// The two-site controlled-NOT permutation |i>|j> -> |i>|i xor j> with the
/// control on the left tensor factor.  All entries 0/1; self-inverse and
/// symmetric, so it is its own dagger.
inline Mat4 cnot_mat4() {
  Mat4 v{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) v[4 * (2 * i + (i ^ j)) + (2 * i + j)] = 1.0;
  return v;
}

/// Matches a 4x4 matrix against sign * (letter (x) letter); used when
/// deriving the C-NOT tableau from the permutation semantics.  Conjugating
/// a Hermitian string by a unitary keeps it Hermitian, so only real signs
/// can occur.
inline PairImage match_pair_matrix(Field field, const Mat4& m) {
  for (SiteOp c : kAllSiteOps) {
    for (SiteOp t : kAllSiteOps) {
      const Mat4 cand = kron2(site_matrix(field, c), site_matrix(field, t));
      for (int sign : {+1, -1}) {
        double err = 0.0;
        for (int e = 0; e < 16; ++e)
          err += std::abs(m[e] - double(sign) * cand[e]);
        if (err < 1e-12) return {c, t, sign};
      }
    }
  }
  throw std::logic_error("4x4 conjugation image fell outside the alphabet");
}

}  // namespace detail

/// Conjugation action of a named gate on one letter, derived once per
/// (field, gate) from the dense 2x2 matrices and cached.  Works for every
/// named gate, reflections included; the derivation itself guarantees the
/// closure property (letters map to signed letters, never superpositions).
inline SiteImage local_conjugation_image(Field field, LocalGateName g,
                                         SiteOp s) {
  struct Table {
    SiteImage entry[11][4];
    bool built[11] = {};
  };
  static Table tables[2];
  Table& t = tables[static_cast<int>(field)];
  const int gi = static_cast<int>(g);
  if (!t.built[gi]) {
    if (!gate_allowed_in_field(g, field))
      throw std::invalid_argument(std::string("gate ") + gate_token(g) +
                                  " is not defined over this field");
    const Mat2 gm = local_gate_matrix(g);
    const Mat2 gd = detail::mat2_dagger(gm);
    for (SiteOp op : kAllSiteOps) {
      const Mat2 conj = detail::mat2_multiply(
          detail::mat2_multiply(gm, site_matrix(field, op)), gd);
      const detail::SiteProduct match = detail::match_site_matrix(field, conj);
      if (!match.phase.is_real())
        throw std::logic_error("conjugation produced an imaginary sign");
      t.entry[gi][static_cast<int>(op)] = {match.op, match.phase.real_sign()};
    }
    t.built[gi] = true;
  }
  return t.entry[gi][static_cast<int>(s)];
}

/// Conjugation action of the C-NOT on a letter pair (control letter first),
/// derived once per field from the dense 4x4 permutation and cached.
inline PairImage cnot_conjugation_image(Field field, SiteOp control_op,
                                        SiteOp target_op) {
  struct Table {
    PairImage entry[4][4];
  };
  static const std::array<Table, 2> tables = [] {
    std::array<Table, 2> all{};
    const detail::Mat4 v = detail::cnot_mat4();
    for (Field f : {Field::Complex, Field::Real}) {
      Table& t = all[static_cast<int>(f)];
      for (SiteOp c : kAllSiteOps) {
        for (SiteOp tt : kAllSiteOps) {
          const detail::Mat4 m =
              detail::kron2(site_matrix(f, c), site_matrix(f, tt));
          detail::Mat4 vmv{};
          // V * m * V with V its own inverse/dagger.
          detail::Mat4 vm{};
          for (int r = 0; r < 4; ++r)
            for (int col = 0; col < 4; ++col)
              for (int k = 0; k < 4; ++k)
                vm[4 * r + col] += v[4 * r + k] * m[4 * k + col];
          for (int r = 0; r < 4; ++r)
            for (int col = 0; col < 4; ++col)
              for (int k = 0; k < 4; ++k)
                vmv[4 * r + col] += vm[4 * r + k] * v[4 * k + col];
          t.entry[static_cast<int>(c)][static_cast<int>(tt)] =
              detail::match_pair_matrix(f, vmv);
        }
      }
    }
    return all;
  }();
  return tables[static_cast<int>(field)]
      .entry[static_cast<int>(control_op)][static_cast<int>(target_op)];
}

/// g p g^dagger with g acting on one site.
inline SignedPauliString conjugate_by_local(const SignedPauliString& p,
                                            int site, LocalGateName g) {
  if (site < 0 || site >= p.num_sites())
    throw std::invalid_argument("site index out of range");
  if (!gate_allowed_in_field(g, p.field))
    throw std::invalid_argument(std::string("gate ") + gate_token(g) +
                                " is not defined over this field");
  const SiteImage img = local_conjugation_image(p.field, g, p.ops[site]);
  SignedPauliString out = p;
  out.ops[site] = img.op;
  if (img.sign < 0) out.phase = out.phase * Phase::minus_one();
  return out;
}

/// V p V^dagger with the C-NOT acting on (control, target); all other
/// sites untouched.
inline SignedPauliString conjugate_by_cnot(const SignedPauliString& p,
                                           int control, int target) {
  if (control < 0 || control >= p.num_sites() || target < 0 ||
      target >= p.num_sites())
    throw std::invalid_argument("site index out of range");
  if (control == target)
    throw std::invalid_argument("control and target must differ");
  const PairImage img =
      cnot_conjugation_image(p.field, p.ops[control], p.ops[target]);
  SignedPauliString out = p;
  out.ops[control] = img.control_op;
  out.ops[target] = img.target_op;
  if (img.sign < 0) out.phase = out.phase * Phase::minus_one();
  return out;
}

}  // namespace rqc
