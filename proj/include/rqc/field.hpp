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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rqc {

/// Scalar field the theory is defined over.
///
/// `Complex` is ordinary qubit quantum mechanics: states live in C^{2^N},
/// reversible operations are unitaries, and the local gate alphabet contains
/// the Pauli matrices X, Y, Z.
///
/// `Real` restricts every matrix entry to the reals: states live in R^{2^N}
/// ("rebits"), reversible operations are orthogonal matrices, and the Y
/// matrix is replaced by its real antisymmetric cousin
/// [[0, 1], [-1, 0]].  Scalar prefactors are restricted to +1 / -1.
enum class Field : std::uint8_t {
  Complex,
  Real,
};

inline char field_code(Field f) { return f == Field::Complex ? 'C' : 'R'; }

inline Field field_from_code(char c) {
  switch (c) {
    case 'C':
      return Field::Complex;
    case 'R':
      return Field::Real;
    default:
      throw std::invalid_argument(std::string("unknown field code '") + c +
                                  "' (expected 'C' or 'R')");
  }
}

/// A scalar prefactor drawn from the phase group {+1, +i, -1, -i}, stored as
/// the exponent k in i^k.  Strings over the Real field only ever carry k in
/// {0, 2}, i.e. +1 or -1; the arithmetic below preserves that subgroup
/// because products of real matrices stay real.
class Phase {
 public:
  constexpr Phase() = default;

  static constexpr Phase plus_one() { return Phase(0); }
  static constexpr Phase plus_i() { return Phase(1); }
  static constexpr Phase minus_one() { return Phase(2); }
  static constexpr Phase minus_i() { return Phase(3); }

  /// Phase from the exponent of i, reduced mod 4.
  static constexpr Phase from_exponent(int k) {
    return Phase(static_cast<std::uint8_t>(((k % 4) + 4) % 4));
  }

  constexpr int exponent() const { return k_; }

  constexpr bool is_real() const { return (k_ & 1) == 0; }

  /// +1 or -1.  Only meaningful when is_real().
  constexpr int real_sign() const { return k_ == 0 ? +1 : -1; }

  std::complex<double> value() const {
    static constexpr double re[4] = {1.0, 0.0, -1.0, 0.0};
    static constexpr double im[4] = {0.0, 1.0, 0.0, -1.0};
    return {re[k_], im[k_]};
  }

  constexpr Phase operator*(Phase other) const {
    return Phase(static_cast<std::uint8_t>((k_ + other.k_) & 3));
  }

  constexpr Phase inverse() const {
    return Phase(static_cast<std::uint8_t>((4 - k_) & 3));
  }

  constexpr bool operator==(const Phase&) const = default;

  /// "+", "+i", "-", "-i".
  std::string str() const {
    static const char* names[4] = {"+", "+i", "-", "-i"};
    return names[k_];
  }

 private:
  explicit constexpr Phase(std::uint8_t k) : k_(k) {}
  std::uint8_t k_ = 0;
};

/// Phase carried by sign = +1 / -1, as used in the Real field.
inline Phase phase_from_sign(int sign) {
  if (sign == +1) return Phase::plus_one();
  if (sign == -1) return Phase::minus_one();
  throw std::invalid_argument("sign must be +1 or -1");
}

}  // namespace rqc
