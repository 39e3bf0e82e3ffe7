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

#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "oracles.hpp"
#include "rqc/rqc.hpp"

using namespace rqc;

namespace {

// Dense product oracle: multiply full-width gate matrices in time order,
// first gate rightmost.
Eigen::MatrixXcd product_oracle(const Circuit& c) {
  const int d = 1 << c.width;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(d, d);
  for (const Gate& g : c.gates) {
    Eigen::MatrixXcd gm;
    if (g.kind == GateKind::Cnot) {
      gm = cnot_matrix(c.field, c.width, g.control, g.target).mat;
    } else {
      const Eigen::MatrixXcd block =
          oracles::mat2_to_eigen(local_dense(c.field, g));
      gm = Eigen::MatrixXcd::Identity(1, 1);
      for (int s = 0; s < c.width; ++s)
        gm = oracles::kron(
            gm, s == g.site ? block : Eigen::MatrixXcd::Identity(2, 2));
    }
    u = gm * u;
  }
  return u;
}

Circuit random_real_circuit(int width, int gate_count, std::mt19937_64& rng) {
  Circuit c(Field::Real, width);
  std::uniform_int_distribution<int> kind(0, 5);
  std::uniform_int_distribution<int> site(0, width - 1);
  std::uniform_int_distribution<int> quarter(1, 3);
  while (static_cast<int>(c.gates.size()) < gate_count) {
    switch (kind(rng)) {
      case 0: {
        const int ctl = site(rng);
        int tgt = site(rng);
        if (tgt == ctl) tgt = (tgt + 1) % width;
        c.append(Gate::cnot(ctl, tgt));
        break;
      }
      case 1:
        c.append(Gate::named(site(rng), LocalGateName::HTilde));
        break;
      case 2:
        c.append(Gate::named(site(rng), LocalGateName::YTilde));
        break;
      case 3:
        c.append(Gate::rotation(site(rng), quarter(rng) * M_PI / 2.0));
        break;
      case 4:
        c.append(Gate::named(site(rng), LocalGateName::PauliX));
        break;
      default:
        c.append(Gate::named(site(rng), LocalGateName::PauliZ));
        break;
    }
  }
  return c;
}

}  // namespace

TEST_CASE("circuit evaluation") {
  SECTION("empty circuit is the identity") {
    const Circuit c(Field::Complex, 2);
    REQUIRE((evaluate_circuit(c).mat - Eigen::MatrixXcd::Identity(4, 4))
                .norm() == 0.0);
  }
  SECTION("a lone controlled-not matches its permutation matrix") {
    for (int ctl : {0, 1, 2}) {
      for (int tgt : {0, 1, 2}) {
        if (ctl == tgt) continue;
        Circuit c(Field::Real, 3);
        c.append(Gate::cnot(ctl, tgt));
        REQUIRE((evaluate_circuit(c).mat -
                 cnot_matrix(Field::Real, 3, ctl, tgt).mat)
                    .norm() == 0.0);
      }
    }
  }
  SECTION("gates compose in time order, first gate rightmost") {
    Circuit c(Field::Complex, 2);
    c.append(Gate::named(0, LocalGateName::H));
    c.append(Gate::cnot(0, 1));
    // H then V as matrices is V * (H x I).
    const Eigen::MatrixXcd expect =
        cnot_matrix(Field::Complex, 2, 0, 1).mat *
        oracles::kron(
            oracles::mat2_to_eigen(local_gate_matrix(LocalGateName::H)),
            Eigen::MatrixXcd::Identity(2, 2));
    REQUIRE((evaluate_circuit(c).mat - expect).norm() < 1e-15);
  }
  SECTION("agrees with the dense product oracle on random circuits") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
      const Circuit c = random_real_circuit(3, 12, rng);
      REQUIRE((evaluate_circuit(c).mat - product_oracle(c)).norm() < 1e-13);
    }
  }
  SECTION("a complex mixed circuit also matches the oracle") {
    Circuit c(Field::Complex, 3);
    c.append(Gate::named(1, LocalGateName::RyQMinus));
    c.append(Gate::pauli_exp_gate(2, SiteOp::Y, 0.8));
    c.append(Gate::cnot(2, 0));
    c.append(Gate::named(0, LocalGateName::RzQPlus));
    c.append(Gate::cnot(1, 2));
    REQUIRE((evaluate_circuit(c).mat - product_oracle(c)).norm() < 1e-14);
  }
  SECTION("real circuits evaluate to real matrices") {
    std::mt19937_64 rng(43);
    const Circuit c = random_real_circuit(4, 20, rng);
    REQUIRE(evaluate_circuit(c).max_imag() == 0.0);
  }
  SECTION("evaluation is unitary") {
    std::mt19937_64 rng(44);
    const Circuit c = random_real_circuit(3, 15, rng);
    REQUIRE(evaluate_circuit(c).is_unitary(1e-12));
  }
}

TEST_CASE("determinant parity of Real circuits") {
  SECTION("empty circuit has determinant +1") {
    REQUIRE(determinant_parity_check(Circuit(Field::Real, 2)) == +1);
  }
  SECTION("a named reflection alone leaves determinant +1") {
    Circuit c(Field::Real, 2);
    c.append(Gate::named(0, LocalGateName::PauliZ));
    REQUIRE(determinant_parity_check(c) == +1);
    Circuit cx(Field::Real, 3);
    cx.append(Gate::named(2, LocalGateName::PauliX));
    REQUIRE(determinant_parity_check(cx) == +1);
  }
  SECTION("on two sites each controlled-not flips the parity") {
    // The two-site C-NOT is a transposition of basis states, an odd
    // permutation: its determinant is -1, and a width-2 circuit has
    // determinant (-1)^{number of C-NOTs}.
    Circuit c(Field::Real, 2);
    c.append(Gate::cnot(0, 1));
    REQUIRE(determinant_parity_check(c) == -1);
    c.append(Gate::cnot(1, 0));
    REQUIRE(determinant_parity_check(c) == +1);

    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
      const Circuit r = random_real_circuit(2, 16, rng);
      const int expect = r.cnot_count() % 2 == 0 ? +1 : -1;
      REQUIRE(determinant_parity_check(r) == expect);
    }
  }
  SECTION("on three or more sites every circuit has determinant +1") {
    for (int width : {3, 4, 5}) {
      Circuit lone(Field::Real, width);
      lone.append(Gate::cnot(0, width - 1));
      REQUIRE(determinant_parity_check(lone) == +1);
    }
    std::mt19937_64 rng(48);
    for (int width : {3, 4, 5}) {
      for (int trial = 0; trial < 20; ++trial) {
        const Circuit r = random_real_circuit(width, 18, rng);
        REQUIRE(determinant_parity_check(r) == +1);
      }
    }
  }
  SECTION("preconditions") {
    REQUIRE_THROWS_AS(determinant_parity_check(Circuit(Field::Complex, 2)),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(determinant_parity_check(Circuit(Field::Real, 1)),
                      std::invalid_argument);
  }
}

TEST_CASE("expected algebra dimensions") {
  REQUIRE(expected_algebra_dimension(1, Field::Complex) == 3);
  REQUIRE(expected_algebra_dimension(2, Field::Complex) == 15);
  REQUIRE(expected_algebra_dimension(3, Field::Complex) == 63);
  REQUIRE(expected_algebra_dimension(1, Field::Real) == 1);
  REQUIRE(expected_algebra_dimension(2, Field::Real) == 6);
  REQUIRE(expected_algebra_dimension(3, Field::Real) == 28);
  REQUIRE(expected_algebra_dimension(6, Field::Real) == 2016);
}

TEST_CASE("generated algebra reaches the full dimension") {
  SECTION("complex registers") {
    for (int n = 1; n <= 3; ++n)
      REQUIRE(generated_algebra_dimension(n, Field::Complex) ==
              expected_algebra_dimension(n, Field::Complex));
  }
  SECTION("real registers") {
    for (int n = 1; n <= 4; ++n)
      REQUIRE(generated_algebra_dimension(n, Field::Real) ==
              expected_algebra_dimension(n, Field::Real));
  }
  SECTION("the real two-site closure is exactly the antisymmetric basis") {
    // Cross-check through an independent path: the generated set counts 6
    // and the enumerated antisymmetric basis counts 6, and conjugating any
    // enumerated string by the generating gates stays inside the basis, so
    // the two sets coincide.
    REQUIRE(generated_algebra_dimension(2, Field::Real) == 6);
    const auto basis = enumerate_basis(2, Field::Real);
    REQUIRE(basis.size() == 6);
    std::set<std::vector<SiteOp>> names;
    for (const auto& p : basis) names.insert(p.ops);
    for (const auto& p : basis) {
      REQUIRE(names.count(conjugate_by_cnot(p, 0, 1).ops) == 1);
      REQUIRE(names.count(conjugate_by_cnot(p, 1, 0).ops) == 1);
      for (LocalGateName g : clifford_gates(Field::Real)) {
        REQUIRE(names.count(conjugate_by_local(p, 0, g).ops) == 1);
        REQUIRE(names.count(conjugate_by_local(p, 1, g).ops) == 1);
      }
    }
  }
  SECTION("width bounds") {
    REQUIRE_THROWS_AS(generated_algebra_dimension(0, Field::Complex),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(generated_algebra_dimension(7, Field::Complex),
                      std::invalid_argument);
  }
}
