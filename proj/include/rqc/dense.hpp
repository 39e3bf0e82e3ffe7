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

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rqc/field.hpp"
#include "rqc/pauli.hpp"

namespace rqc {

/// Frobenius tolerance below which a matrix is accepted as
/// unitary/orthogonal.
inline constexpr double kUnitaryTol = 1e-9;

/// Expansion coefficients with magnitude at or below this are dropped.
inline constexpr double kDropTol = 1e-12;

/// Largest dimension the dense kernel accepts (2^10).
inline constexpr int kMaxDim = 1024;

/// Thrown when a Real target lies in the determinant -1 component of the
/// orthogonal group, which no product of exponentials of antisymmetric
/// generators can reach; callers wanting such targets need the
/// ancilla-extension path.
class disconnected_component_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A field-tagged square matrix of dimension 2^N.  Real-field matrices are
/// stored in the same complex container with all imaginary parts exactly
/// zero; every operation below preserves that.
struct DenseMatrix {
  Field field = Field::Complex;
  Eigen::MatrixXcd mat;

  DenseMatrix() = default;
  DenseMatrix(Field f, Eigen::MatrixXcd m) : field(f), mat(std::move(m)) {
    check_shape();
  }

  static DenseMatrix identity(Field f, int dim) {
    return DenseMatrix(f, Eigen::MatrixXcd::Identity(dim, dim));
  }

  int dim() const { return static_cast<int>(mat.rows()); }

  int num_sites() const {
    int n = 0, d = dim();
    while (d > 1) {
      d >>= 1;
      ++n;
    }
    return n;
  }

  /// ||M^dagger M - I||_F <= tol; for the Real field this is orthogonality.
  bool is_unitary(double tol = kUnitaryTol) const {
    const Eigen::MatrixXcd g = mat.adjoint() * mat;
    return (g - Eigen::MatrixXcd::Identity(dim(), dim())).norm() <= tol;
  }

  /// Largest |imaginary part| over all entries; should be 0 for Real-field
  /// data produced by this library.
  double max_imag() const {
    double m = 0.0;
    for (int r = 0; r < mat.rows(); ++r)
      for (int c = 0; c < mat.cols(); ++c)
        m = std::max(m, std::abs(mat(r, c).imag()));
    return m;
  }

 private:
  void check_shape() const {
    if (mat.rows() != mat.cols())
      throw std::invalid_argument("matrix must be square");
    const int d = static_cast<int>(mat.rows());
    if (d < 2 || d > kMaxDim || (d & (d - 1)) != 0)
      throw std::invalid_argument(
          "dimension must be a power of two between 2 and 1024");
  }
};

inline void require_same_shape(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.field != b.field)
    throw std::invalid_argument("field mismatch between matrices");
  if (a.dim() != b.dim())
    throw std::invalid_argument("dimension mismatch between matrices");
}

/// Kronecker product of the accumulated matrix with one 2x2 site factor.
namespace detail {
inline Eigen::MatrixXcd kron_site(const Eigen::MatrixXcd& a, const Mat2& b) {
  const auto n = a.rows();
  Eigen::MatrixXcd out(2 * n, 2 * n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          out(2 * r + i, 2 * c + j) = a(r, c) * b[2 * i + j];
  return out;
}
}  // namespace detail

/// Dense realization: phase times the Kronecker product of the site
/// matrices, site 0 leftmost.  Real strings come out entrywise real.
inline DenseMatrix to_matrix(const SignedPauliString& p) {
  if (p.num_sites() < 1)
    throw std::invalid_argument("string must have at least one site");
  Eigen::MatrixXcd m(1, 1);
  m(0, 0) = p.phase.value();
  for (SiteOp op : p.ops) m = detail::kron_site(m, site_matrix(p.field, op));
  return DenseMatrix(p.field, std::move(m));
}

/// Closed-form exponential of a basis string.
///
/// Complex: exp(i t P) = cos(t) I + i sin(t) P, valid because P^2 = I.
/// Real:    exp(t G)   = cos(t) I + sin(t) G, valid because G^2 = -I for
///          any string with an odd number of Y letters (G is orthogonal
///          and antisymmetric, so G^2 = -G^T G = -I).
inline DenseMatrix pauli_exp(const SignedPauliString& p, double t) {
  if (!(p.phase == Phase::plus_one()))
    throw std::invalid_argument("pauli_exp expects a phase +1 basis string");
  if (p.field == Field::Real && !is_real_generator(p))
    throw std::invalid_argument(
        "Real exponential requires an odd-Y (antisymmetric) string");
  const DenseMatrix pm = to_matrix(p);
  const int d = pm.dim();
  const std::complex<double> scale =
      p.field == Field::Complex ? std::complex<double>(0.0, std::sin(t))
                                : std::complex<double>(std::sin(t), 0.0);
  Eigen::MatrixXcd m =
      std::cos(t) * Eigen::MatrixXcd::Identity(d, d) + scale * pm.mat;
  return DenseMatrix(p.field, std::move(m));
}

/// Result of a principal matrix logarithm.  branch_warning is set when an
/// eigenvalue sits within kBranchTol of -1 (rotation angle at the edge of
/// (-pi, pi]); the returned generator is still a valid, deterministic
/// choice, and downstream circuit verification is the arbiter.
struct MatrixLog {
  DenseMatrix generator;
  bool branch_warning = false;
};

inline constexpr double kBranchTol = 1e-6;

/// Principal logarithm of a unitary: anti-Hermitian A with eigenphases in
/// (-pi, pi] and exp(A) = U.  Computed from the Schur form, which is
/// diagonal for normal matrices.
inline MatrixLog unitary_log(const DenseMatrix& u, double tol = kUnitaryTol) {
  if (u.field != Field::Complex)
    throw std::invalid_argument("unitary_log expects a Complex-field matrix");
  if (!u.is_unitary(tol))
    throw std::invalid_argument("matrix is not unitary within tolerance");
  const Eigen::ComplexSchur<Eigen::MatrixXcd> schur(u.mat);
  if (schur.info() != Eigen::Success)
    throw std::runtime_error("Schur decomposition failed");
  const Eigen::MatrixXcd& q = schur.matrixU();
  const int d = u.dim();
  Eigen::VectorXcd logdiag(d);
  bool warn = false;
  for (int i = 0; i < d; ++i) {
    const std::complex<double> lambda = schur.matrixT()(i, i);
    if (std::abs(lambda + 1.0) < kBranchTol) warn = true;
    const double theta = std::atan2(lambda.imag(), lambda.real());
    logdiag(i) = std::complex<double>(0.0, theta);
  }
  Eigen::MatrixXcd a = q * logdiag.asDiagonal() * q.adjoint();
  // Symmetrize to exact anti-Hermiticity (q is unitary only to roundoff).
  a = 0.5 * (a - a.adjoint().eval());
  return {DenseMatrix(Field::Complex, std::move(a)), warn};
}

/// Principal logarithm of a special orthogonal matrix: real antisymmetric
/// A with exp(A) = O, via the real Schur form.  Rotation blocks give their
/// angle in (-pi, pi]; -1 eigenvalues come in pairs (det +1) and each pair
/// is closed into a deterministic pi-rotation plane, with the branch
/// warning raised.  Determinant -1 inputs are a different connected
/// component and raise disconnected_component_error.
inline MatrixLog orthogonal_log(const DenseMatrix& o,
                                double tol = kUnitaryTol) {
  if (o.field != Field::Real)
    throw std::invalid_argument("orthogonal_log expects a Real-field matrix");
  if (o.max_imag() > tol)
    throw std::invalid_argument("Real-field matrix has imaginary entries");
  if (!o.is_unitary(tol))
    throw std::invalid_argument("matrix is not orthogonal within tolerance");
  const int d = o.dim();
  const Eigen::MatrixXd om = o.mat.real();
  const double det = om.determinant();
  if (std::abs(det + 1.0) <= 1e-8)
    throw disconnected_component_error(
        "determinant -1: the target lies in the disconnected component of "
        "the orthogonal group and has no antisymmetric logarithm; extend "
        "with an ancilla (see orthogonal_compile)");
  if (std::abs(det - 1.0) > 1e-8)
    throw std::invalid_argument("orthogonal matrix with non-unit determinant");

  const Eigen::RealSchur<Eigen::MatrixXd> schur(om);
  if (schur.info() != Eigen::Success)
    throw std::runtime_error("Schur decomposition failed");
  const Eigen::MatrixXd& q = schur.matrixU();
  const Eigen::MatrixXd& t = schur.matrixT();
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(d, d);
  bool warn = false;
  std::vector<int> minus_ones;
  int i = 0;
  while (i < d) {
    const bool block2 = i + 1 < d && t(i + 1, i) != 0.0;
    if (block2) {
      // [[c, s], [-s, c]] rotation block; angle from the top row.
      const double theta = std::atan2(t(i, i + 1), t(i, i));
      if (std::abs(std::abs(theta) - M_PI) < kBranchTol) warn = true;
      b(i, i + 1) = theta;
      b(i + 1, i) = -theta;
      i += 2;
    } else {
      if (t(i, i) < 0.0) minus_ones.push_back(i);
      i += 1;
    }
  }
  if (minus_ones.size() % 2 != 0)
    throw std::runtime_error(
        "odd count of -1 eigenvalues despite determinant +1");
  // Pair leftover -1 eigenvalues in index order; each pair becomes a
  // rotation by pi in its plane.  The pairing is a branch choice.
  for (std::size_t k = 0; k + 1 < minus_ones.size(); k += 2) {
    const int a1 = minus_ones[k], a2 = minus_ones[k + 1];
    b(a1, a2) = M_PI;
    b(a2, a1) = -M_PI;
    warn = true;
  }
  Eigen::MatrixXd a = q * b * q.transpose();
  a = 0.5 * (a - a.transpose().eval());
  return {DenseMatrix(Field::Real, a.cast<std::complex<double>>()), warn};
}

/// Coefficients of a generator in the field's string basis: the value at
/// key [ops] multiplies i*P (Complex) or G (Real), both with phase +1.
struct GeneratorDecomposition {
  Field field = Field::Complex;
  int num_sites = 0;
  std::map<std::vector<SiteOp>, double> terms;

  DenseMatrix reconstruct() const {
    const int d = 1 << num_sites;
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(d, d);
    for (const auto& [ops, coeff] : terms) {
      const SignedPauliString p(field, Phase::plus_one(), ops);
      const std::complex<double> scale =
          field == Field::Complex ? std::complex<double>(0.0, coeff)
                                  : std::complex<double>(coeff, 0.0);
      a += scale * to_matrix(p).mat;
    }
    return DenseMatrix(field, std::move(a));
  }
};

namespace detail {

/// tr(P_hat A) for a phase +1 string, using the one-nonzero-per-column
/// structure: row k of P_hat has its nonzero at column k xor mask, where
/// mask collects the bit positions of X and Y letters.
inline std::complex<double> string_trace(const SignedPauliString& p,
                                         const Eigen::MatrixXcd& a) {
  const int n = p.num_sites();
  const int d = 1 << n;
  int mask = 0;
  for (int s = 0; s < n; ++s)
    if (p.ops[s] == SiteOp::X || p.ops[s] == SiteOp::Y)
      mask |= 1 << (n - 1 - s);
  std::complex<double> sum = 0.0;
  for (int k = 0; k < d; ++k) {
    std::complex<double> w = 1.0;
    for (int s = 0; s < n; ++s) {
      const int bit = (k >> (n - 1 - s)) & 1;
      const int colbit =
          (p.ops[s] == SiteOp::X || p.ops[s] == SiteOp::Y) ? 1 - bit : bit;
      w *= site_matrix(p.field, p.ops[s])[2 * bit + colbit];
    }
    sum += w * a(k ^ mask, k);
  }
  return sum;
}

}  // namespace detail

/// Coordinates of a generator in the string basis.
///
/// Complex: requires A anti-Hermitian and traceless; coefficients are
/// c_P = Re[tr((iP)^dagger A)] / 2^N.
/// Real: requires A real antisymmetric; coefficients are
/// c_G = tr(G^T A) / 2^N.
/// Coefficients with |c| <= drop_tol are omitted.  The reconstruction is
/// checked against A and must agree within 1e-10.
inline GeneratorDecomposition pauli_expand(const DenseMatrix& a,
                                           double drop_tol = kDropTol,
                                           double admit_tol = 1e-8) {
  const int d = a.dim();
  const int n = a.num_sites();
  if (a.field == Field::Complex) {
    if ((a.mat + a.mat.adjoint()).norm() > admit_tol)
      throw std::invalid_argument("generator is not anti-Hermitian");
    if (std::abs(a.mat.trace()) > admit_tol)
      throw std::invalid_argument("generator is not traceless");
  } else {
    if (a.max_imag() > admit_tol)
      throw std::invalid_argument("Real-field generator has imaginary entries");
    if ((a.mat + a.mat.transpose()).norm() > admit_tol)
      throw std::invalid_argument("generator is not antisymmetric");
  }
  GeneratorDecomposition out;
  out.field = a.field;
  out.num_sites = n;
  for (const SignedPauliString& p : enumerate_basis(n, a.field)) {
    const std::complex<double> tr = detail::string_trace(p, a.mat);
    // Complex: tr((iP)^dagger A) = -i tr(P A) and only its real part
    // survives for anti-Hermitian A.  Real: tr(G^T A) = -tr(G A).
    const double coeff = (a.field == Field::Complex
                              ? (tr * std::complex<double>(0.0, -1.0)).real()
                              : -tr.real()) /
                         double(d);
    if (std::abs(coeff) > drop_tol) out.terms[p.ops] = coeff;
  }
  const DenseMatrix back = out.reconstruct();
  if ((back.mat - a.mat).norm() > 1e-10)
    throw std::invalid_argument(
        "generator lies outside the basis span (reconstruction mismatch)");
  return out;
}

/// min over allowed scalar prefactors phi of ||U - phi W||_F; the phase
/// group is the unit circle (Complex) or {+1, -1} (Real), and both minima
/// equal sqrt(||U||^2 + ||W||^2 - 2 |tr(U^dagger W)|).
///
/// Evaluated as ||U - phi W|| at the minimizing phi = overlap / |overlap|
/// rather than via the closed-form square root: the two agree exactly in
/// real arithmetic, but the closed form cancels catastrophically near zero
/// (it cannot resolve distances below about sqrt(machine epsilon)), while
/// the explicit difference stays accurate down to machine precision.
inline double phase_invariant_distance(const DenseMatrix& u,
                                       const DenseMatrix& w) {
  require_same_shape(u, w);
  const std::complex<double> overlap = (u.mat.adjoint() * w.mat).trace();
  std::complex<double> phi(1.0, 0.0);
  if (u.field == Field::Complex) {
    if (std::abs(overlap) > 0.0) phi = std::conj(overlap) / std::abs(overlap);
  } else {
    phi = overlap.real() < 0.0 ? -1.0 : 1.0;
  }
  return (u.mat - phi * w.mat).norm();
}

inline double frobenius_distance(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b);
  return (a.mat - b.mat).norm();
}

/// Determinant via partial-pivot LU.
inline std::complex<double> determinant(const DenseMatrix& m) {
  return m.mat.determinant();
}

/// Exact controlled-NOT permutation on a register of `width` sites,
/// control/target given as 0-based site indices with site 0 the leftmost
/// (most significant) factor.
inline DenseMatrix cnot_matrix(Field field, int width, int control,
                               int target) {
  if (width < 2) throw std::invalid_argument("width must be at least 2");
  if (control < 0 || control >= width || target < 0 || target >= width ||
      control == target)
    throw std::invalid_argument("bad control/target indices");
  const int d = 1 << width;
  const int cmask = 1 << (width - 1 - control);
  const int tmask = 1 << (width - 1 - target);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    const int r = (j & cmask) ? (j ^ tmask) : j;
    m(r, j) = 1.0;
  }
  return DenseMatrix(field, std::move(m));
}

/// Exact two-site exchange permutation |a>|b> -> |b>|a>.
inline DenseMatrix swap_matrix(Field field) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  m(3, 3) = 1.0;
  return DenseMatrix(field, std::move(m));
}

namespace detail {

inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace detail

/// Text form: header "<field> <dim>" then dim rows; Real rows carry dim
/// entries, Complex rows carry dim real/imaginary token pairs.  Numbers
/// are printed with 17 significant digits, enough to round-trip doubles.
inline void write_matrix(std::ostream& os, const DenseMatrix& m) {
  if (m.field == Field::Real && m.max_imag() > 1e-12)
    throw std::invalid_argument("Real-field matrix has imaginary entries");
  os << field_code(m.field) << ' ' << m.dim() << '\n';
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) {
      if (c) os << ' ';
      if (m.field == Field::Complex)
        os << detail::format_double(m.mat(r, c).real()) << ' '
           << detail::format_double(m.mat(r, c).imag());
      else
        os << detail::format_double(m.mat(r, c).real());
    }
    os << '\n';
  }
}

inline DenseMatrix read_matrix(std::istream& is) {
  std::string code;
  int dim = 0;
  if (!(is >> code >> dim))
    throw std::invalid_argument("matrix file: missing 'field dim' header");
  if (code.size() != 1)
    throw std::invalid_argument("matrix file: bad field code '" + code + "'");
  const Field field = field_from_code(code[0]);
  if (dim < 2 || dim > kMaxDim || (dim & (dim - 1)) != 0)
    throw std::invalid_argument(
        "matrix file: dimension must be a power of two between 2 and 1024");
  Eigen::MatrixXcd m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      double re = 0.0, im = 0.0;
      if (!(is >> re))
        throw std::invalid_argument("matrix file: truncated entries");
      if (field == Field::Complex && !(is >> im))
        throw std::invalid_argument("matrix file: truncated complex entry");
      m(r, c) = std::complex<double>(re, im);
    }
  }
  std::string junk;
  if (is >> junk)
    throw std::invalid_argument("matrix file: trailing tokens after entries");
  return DenseMatrix(field, std::move(m));
}

}  // namespace rqc
