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
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rqc/field.hpp"

namespace rqc {

/// One letter of a string.  The same enum serves both fields; in the Real
/// field the letter Y denotes the antisymmetric real matrix
/// [[0, 1], [-1, 0]] rather than the complex Pauli Y, and its text token is
/// "Yt" instead of "Y".
enum class SiteOp : std::uint8_t {
  I = 0,
  X = 1,
  Y = 2,
  Z = 3,
};

inline constexpr std::array<SiteOp, 4> kAllSiteOps = {SiteOp::I, SiteOp::X,
                                                      SiteOp::Y, SiteOp::Z};

/// Row-major 2x2 complex matrix; small enough that plain arrays beat any
/// dense-matrix library for the site-level bookkeeping done here.
using Mat2 = std::array<std::complex<double>, 4>;

/// The 2x2 matrix a letter stands for in a given field.  Only Y differs
/// between the two fields; in the Real field every returned entry has zero
/// imaginary part.
inline Mat2 site_matrix(Field field, SiteOp op) {
  const std::complex<double> o(1.0, 0.0), j(0.0, 1.0);
  switch (op) {
    case SiteOp::I:
      return {o, 0.0, 0.0, o};
    case SiteOp::X:
      return {0.0, o, o, 0.0};
    case SiteOp::Y:
      if (field == Field::Complex) return {0.0, -j, j, 0.0};
      return {0.0, o, -o, 0.0};
    case SiteOp::Z:
      return {o, 0.0, 0.0, -o};
  }
  throw std::logic_error("unreachable");
}

/// Sign s in op * op = s * I.  +1 for every letter except the Real-field Y,
/// which squares to -I (it is a 90-degree planar rotation).
inline int site_square_sign(Field field, SiteOp op) {
  return (field == Field::Real && op == SiteOp::Y) ? -1 : +1;
}

namespace detail {

struct SiteProduct {
  SiteOp op = SiteOp::I;
  Phase phase;
};

inline Mat2 mat2_multiply(const Mat2& a, const Mat2& b) {
  Mat2 prod{};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int k = 0; k < 2; ++k) prod[2 * r + c] += a[2 * r + k] * b[2 * k + c];
  return prod;
}

/// Matches m against phase * letter over the given field's alphabet and
/// phase group.  Throws if nothing matches: the signed alphabet is closed
/// under multiplication and conjugation, so a miss means a bug upstream.
inline SiteProduct match_site_matrix(Field field, const Mat2& m) {
  for (SiteOp cand : kAllSiteOps) {
    const Mat2 mc = site_matrix(field, cand);
    for (int k = 0; k < 4; ++k) {
      const Phase ph = Phase::from_exponent(k);
      if (field == Field::Real && !ph.is_real()) continue;
      const std::complex<double> w = ph.value();
      double err = 0.0;
      for (int e = 0; e < 4; ++e) err += std::abs(m[e] - w * mc[e]);
      if (err < 1e-12) return {cand, ph};
    }
  }
  throw std::logic_error("2x2 matrix fell outside the signed alphabet");
}

/// Single-site multiplication table, derived once from the 2x2 matrices so
/// the sign conventions cannot drift from the matrix definitions above.
inline const SiteProduct& site_multiply(Field field, SiteOp a, SiteOp b) {
  struct Table {
    SiteProduct entry[4][4];
  };
  static const std::array<Table, 2> tables = [] {
    std::array<Table, 2> all{};
    for (Field f : {Field::Complex, Field::Real}) {
      Table& t = all[static_cast<int>(f)];
      for (SiteOp x : kAllSiteOps)
        for (SiteOp y : kAllSiteOps)
          t.entry[static_cast<int>(x)][static_cast<int>(y)] =
              match_site_matrix(
                  f, mat2_multiply(site_matrix(f, x), site_matrix(f, y)));
    }
    return all;
  }();
  return tables[static_cast<int>(field)]
      .entry[static_cast<int>(a)][static_cast<int>(b)];
}

/// True when the letters anticommute (read off the derived table rather
/// than assumed: x y = -y x exactly when the two product phases differ).
inline bool site_anticommutes(Field field, SiteOp a, SiteOp b) {
  const SiteProduct& ab = site_multiply(field, a, b);
  const SiteProduct& ba = site_multiply(field, b, a);
  return !(ab.phase == ba.phase);
}

}  // namespace detail

/// A scalar phase times a tensor product of single-site letters, e.g.
/// -i * X (x) I (x) Z over the Complex field.  Site 0 is the leftmost tensor
/// factor (the most significant bit of a basis-state index).
struct SignedPauliString {
  Field field = Field::Complex;
  Phase phase;
  std::vector<SiteOp> ops;

  SignedPauliString() = default;
  SignedPauliString(Field f, Phase ph, std::vector<SiteOp> o)
      : field(f), phase(ph), ops(std::move(o)) {
    if (field == Field::Real && !phase.is_real())
      throw std::invalid_argument("Real-field strings carry only +1/-1");
  }

  static SignedPauliString identity(Field f, int num_sites) {
    return SignedPauliString(f, Phase::plus_one(),
                             std::vector<SiteOp>(num_sites, SiteOp::I));
  }

  int num_sites() const { return static_cast<int>(ops.size()); }

  /// Number of non-identity letters.
  int weight() const {
    int w = 0;
    for (SiteOp op : ops)
      if (op != SiteOp::I) ++w;
    return w;
  }

  bool is_identity_string() const { return weight() == 0; }

  bool operator==(const SignedPauliString&) const = default;
};

/// Product of two strings site by site, with the phases of each single-site
/// product accumulated into the overall prefactor.  The result never leaves
/// the signed alphabet: {+1,+i,-1,-i} x {I,X,Y,Z}^N over the Complex field,
/// {+1,-1} x letters over the Real field.
inline SignedPauliString string_multiply(const SignedPauliString& a,
                                         const SignedPauliString& b) {
  if (a.field != b.field)
    throw std::invalid_argument("cannot multiply strings over different fields");
  if (a.ops.size() != b.ops.size())
    throw std::invalid_argument("cannot multiply strings of different lengths");
  SignedPauliString out;
  out.field = a.field;
  out.phase = a.phase * b.phase;
  out.ops.resize(a.ops.size());
  for (std::size_t k = 0; k < a.ops.size(); ++k) {
    const detail::SiteProduct& p =
        detail::site_multiply(a.field, a.ops[k], b.ops[k]);
    out.ops[k] = p.op;
    out.phase = out.phase * p.phase;
  }
  return out;
}

/// Strings commute exactly when an even number of sites hold anticommuting
/// letter pairs.  Phases play no role.
inline bool commutes(const SignedPauliString& a, const SignedPauliString& b) {
  if (a.field != b.field || a.ops.size() != b.ops.size())
    throw std::invalid_argument("commutation requires matching field and length");
  int clashes = 0;
  for (std::size_t k = 0; k < a.ops.size(); ++k)
    if (detail::site_anticommutes(a.field, a.ops[k], b.ops[k])) ++clashes;
  return clashes % 2 == 0;
}

/// Whether the string's bare tensor product (phase ignored) is an
/// antisymmetric real matrix, i.e. a generator of the orthogonal group.
/// Over the Real field each letter is real, X/Z symmetric and Y
/// antisymmetric, so the product is antisymmetric exactly when the Y count
/// is odd.  Complex strings are rejected: the question does not arise there.
inline bool is_real_generator(const SignedPauliString& p) {
  if (p.field != Field::Real)
    throw std::invalid_argument("is_real_generator applies to Real strings only");
  int y_count = 0;
  for (SiteOp op : p.ops)
    if (op == SiteOp::Y) ++y_count;
  return y_count % 2 == 1;
}

/// All strings of the field's generator basis at the given width, with +1
/// phase, in lexicographic order of their letters (I < X < Y < Z).
///
/// Complex: every non-identity string; together with the prefactor i these
/// span the traceless anti-Hermitian matrices, dimension 4^N - 1.
/// Real: every string with an odd number of Y letters; these span the
/// antisymmetric real matrices, dimension 2^{N-1} (2^N - 1).
inline std::vector<SignedPauliString> enumerate_basis(int num_sites,
                                                      Field field) {
  if (num_sites < 1) throw std::invalid_argument("num_sites must be >= 1");
  if (num_sites > 16)
    throw std::invalid_argument("basis enumeration capped at 16 sites");
  std::vector<SignedPauliString> out;
  std::vector<SiteOp> ops(num_sites, SiteOp::I);
  const std::uint64_t total = std::uint64_t(1) << (2 * num_sites);
  for (std::uint64_t code = 0; code < total; ++code) {
    int y_count = 0;
    bool all_identity = true;
    for (int s = 0; s < num_sites; ++s) {
      const auto letter =
          static_cast<SiteOp>((code >> (2 * (num_sites - 1 - s))) & 3);
      ops[s] = letter;
      if (letter != SiteOp::I) all_identity = false;
      if (letter == SiteOp::Y) ++y_count;
    }
    const bool keep = field == Field::Complex ? !all_identity
                                              : (y_count % 2 == 1);
    if (keep) out.emplace_back(field, Phase::plus_one(), ops);
  }
  return out;
}

/// Text form: phase token followed by one token per site, e.g. "+XIZY",
/// "-XYtZ" (Real-field Y prints as "Yt"), "+iIZ" (Complex only).
inline std::string to_text(const SignedPauliString& p) {
  std::string s = p.phase.str();
  for (SiteOp op : p.ops) {
    switch (op) {
      case SiteOp::I:
        s += 'I';
        break;
      case SiteOp::X:
        s += 'X';
        break;
      case SiteOp::Y:
        s += p.field == Field::Real ? "Yt" : "Y";
        break;
      case SiteOp::Z:
        s += 'Z';
        break;
    }
  }
  return s;
}

/// Inverse of to_text.  The leading phase token is optional and defaults to
/// "+".  Accepts "Yt" in the Real field and plain "Y" in the Complex field;
/// rejects everything else.
inline SignedPauliString parse_string(const std::string& text, Field field) {
  std::size_t pos = 0;
  Phase phase = Phase::plus_one();
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    const bool neg = text[pos] == '-';
    ++pos;
    if (pos < text.size() && text[pos] == 'i') {
      if (field == Field::Real)
        throw std::invalid_argument("imaginary phase in a Real-field string");
      phase = neg ? Phase::minus_i() : Phase::plus_i();
      ++pos;
    } else {
      phase = neg ? Phase::minus_one() : Phase::plus_one();
    }
  }
  std::vector<SiteOp> ops;
  while (pos < text.size()) {
    const char c = text[pos];
    switch (c) {
      case 'I':
        ops.push_back(SiteOp::I);
        ++pos;
        break;
      case 'X':
        ops.push_back(SiteOp::X);
        ++pos;
        break;
      case 'Z':
        ops.push_back(SiteOp::Z);
        ++pos;
        break;
      case 'Y':
        if (field == Field::Real) {
          if (pos + 1 >= text.size() || text[pos + 1] != 't')
            throw std::invalid_argument(
                "Real-field strings spell the antisymmetric letter as 'Yt'");
          pos += 2;
        } else {
          ++pos;
        }
        ops.push_back(SiteOp::Y);
        break;
      default:
        throw std::invalid_argument(std::string("unexpected character '") + c +
                                    "' in string text");
    }
  }
  if (ops.empty())
    throw std::invalid_argument("string text contains no site letters");
  return SignedPauliString(field, phase, std::move(ops));
}

}  // namespace rqc
