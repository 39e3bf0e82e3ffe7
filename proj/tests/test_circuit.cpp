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
#include <sstream>

#include "oracles.hpp"
#include "rqc/rqc.hpp"

using namespace rqc;

namespace {

Circuit sample_complex() {
  Circuit c(Field::Complex, 3);
  c.append(Gate::named(0, LocalGateName::H));
  c.append(Gate::cnot(0, 2));
  c.append(Gate::pauli_exp_gate(2, SiteOp::Z, -0.7));
  c.append(Gate::cnot(0, 2));
  c.append(Gate::named(0, LocalGateName::H));
  return c;
}

Circuit sample_real() {
  Circuit c(Field::Real, 2);
  c.append(Gate::named(0, LocalGateName::HTilde));
  c.append(Gate::cnot(1, 0));
  c.append(Gate::rotation(1, 0.25));
  c.append(Gate::named(1, LocalGateName::PauliZ));
  return c;
}

}  // namespace

TEST_CASE("gate admission rules") {
  Circuit c(Field::Complex, 2);
  SECTION("controlled-not index checks") {
    REQUIRE_THROWS_AS(c.append(Gate::cnot(0, 2)), std::invalid_argument);
    REQUIRE_THROWS_AS(c.append(Gate::cnot(-1, 1)), std::invalid_argument);
    REQUIRE_THROWS_AS(c.append(Gate::cnot(1, 1)), std::invalid_argument);
    c.append(Gate::cnot(1, 0));
    REQUIRE(c.cnot_count() == 1);
  }
  SECTION("named gates respect the field") {
    REQUIRE_THROWS_AS(c.append(Gate::named(0, LocalGateName::HTilde)),
                      std::invalid_argument);
    Circuit r(Field::Real, 2);
    REQUIRE_THROWS_AS(r.append(Gate::named(0, LocalGateName::RzQPlus)),
                      std::invalid_argument);
    r.append(Gate::named(0, LocalGateName::YTilde));
    REQUIRE(r.local_count() == 1);
  }
  SECTION("reflection locals need a second site") {
    Circuit one(Field::Real, 1);
    REQUIRE_THROWS_AS(one.append(Gate::named(0, LocalGateName::PauliZ)),
                      std::invalid_argument);
    c.append(Gate::named(1, LocalGateName::PauliX));
    REQUIRE(c.local_count() == 1);
  }
  SECTION("axis exponentials are Complex-only and need a real axis") {
    REQUIRE_THROWS_AS(c.append(Gate::pauli_exp_gate(0, SiteOp::I, 0.1)),
                      std::invalid_argument);
    Circuit r(Field::Real, 2);
    REQUIRE_THROWS_AS(r.append(Gate::pauli_exp_gate(0, SiteOp::Z, 0.1)),
                      std::invalid_argument);
  }
  SECTION("planar rotations are Real-only") {
    REQUIRE_THROWS_AS(c.append(Gate::rotation(0, 0.3)),
                      std::invalid_argument);
  }
  SECTION("site bounds on locals") {
    REQUIRE_THROWS_AS(c.append(Gate::named(2, LocalGateName::H)),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(c.append(Gate::pauli_exp_gate(-1, SiteOp::X, 0.1)),
                      std::invalid_argument);
  }
  SECTION("width must be positive") {
    REQUIRE_THROWS_AS(Circuit(Field::Complex, 0), std::invalid_argument);
  }
}

TEST_CASE("gate counts") {
  const Circuit c = sample_complex();
  REQUIRE(c.gates.size() == 5);
  REQUIRE(c.cnot_count() == 2);
  REQUIRE(c.local_count() == 3);
  const Circuit r = sample_real();
  REQUIRE(r.cnot_count() == 1);
  REQUIRE(r.local_count() == 3);
}

TEST_CASE("dense blocks of local gates") {
  SECTION("planar rotation block") {
    const Mat2 m = local_dense(Field::Real, Gate::rotation(0, 0.3));
    REQUIRE(m[0] == std::complex<double>(std::cos(0.3), 0.0));
    REQUIRE(m[1] == std::complex<double>(std::sin(0.3), 0.0));
    REQUIRE(m[2] == std::complex<double>(-std::sin(0.3), 0.0));
    REQUIRE(m[3] == std::complex<double>(std::cos(0.3), 0.0));
  }
  SECTION("axis exponential block") {
    const Mat2 m =
        local_dense(Field::Complex, Gate::pauli_exp_gate(0, SiteOp::Z, 0.4));
    REQUIRE(std::abs(m[0] - std::exp(std::complex<double>(0.0, 0.4))) <
            1e-15);
    REQUIRE(std::abs(m[3] - std::exp(std::complex<double>(0.0, -0.4))) <
            1e-15);
    REQUIRE(m[1] == std::complex<double>(0.0, 0.0));
  }
  SECTION("named block matches the gate table") {
    const Mat2 m = local_dense(Field::Complex, Gate::named(0, LocalGateName::H));
    const Mat2 h = local_gate_matrix(LocalGateName::H);
    for (int k = 0; k < 4; ++k) REQUIRE(m[k] == h[k]);
  }
}

TEST_CASE("circuit text format") {
  SECTION("known serialization, one-based sites") {
    std::ostringstream os;
    write_circuit(os, sample_complex());
    REQUIRE(os.str() ==
            "C 3\n"
            "LOCAL 1 H\n"
            "CNOT 1 3\n"
            "LOCAL 3 EXP Z -0.69999999999999996\n"
            "CNOT 1 3\n"
            "LOCAL 1 H\n");
  }
  SECTION("real circuits serialize rotations by angle") {
    std::ostringstream os;
    write_circuit(os, sample_real());
    REQUIRE(os.str() ==
            "R 2\n"
            "LOCAL 1 HT\n"
            "CNOT 2 1\n"
            "LOCAL 2 ROT 0.25\n"
            "LOCAL 2 Z\n");
  }
  SECTION("write, read, write is byte-identical") {
    for (const Circuit& c : {sample_complex(), sample_real()}) {
      std::ostringstream first;
      write_circuit(first, c);
      std::istringstream in(first.str());
      const Circuit back = read_circuit(in);
      REQUIRE(back.field == c.field);
      REQUIRE(back.width == c.width);
      REQUIRE(back.gates.size() == c.gates.size());
      std::ostringstream second;
      write_circuit(second, back);
      REQUIRE(second.str() == first.str());
    }
  }
  SECTION("angles survive the round trip bit-exactly") {
    Circuit c(Field::Real, 1);
    c.append(Gate::rotation(0, 1.0 / 3.0));
    c.append(Gate::rotation(0, -2.2250738585072014e-308));
    c.append(Gate::rotation(0, M_PI));
    std::ostringstream os;
    write_circuit(os, c);
    std::istringstream in(os.str());
    const Circuit back = read_circuit(in);
    for (std::size_t k = 0; k < c.gates.size(); ++k)
      REQUIRE(back.gates[k].angle == c.gates[k].angle);
  }
  SECTION("blank lines are tolerated") {
    std::istringstream in("C 2\n\nLOCAL 1 H\n\nCNOT 1 2\n\n");
    const Circuit c = read_circuit(in);
    REQUIRE(c.gates.size() == 2);
  }
  SECTION("an empty gate list is a valid circuit") {
    std::istringstream in("R 4\n");
    const Circuit c = read_circuit(in);
    REQUIRE(c.width == 4);
    REQUIRE(c.gates.empty());
    std::ostringstream os;
    write_circuit(os, c);
    REQUIRE(os.str() == "R 4\n");
  }
}

TEST_CASE("circuit text rejects malformed input") {
  auto reject = [](const std::string& text) {
    std::istringstream is(text);
    REQUIRE_THROWS_AS(read_circuit(is), std::invalid_argument);
  };
  reject("");
  reject("Q 2\n");
  reject("C 0\n");
  reject("C 2 extra\n");
  reject("C 2\nNOOP 1\n");
  reject("C 2\nCNOT 1\n");
  reject("C 2\nCNOT 1 2 3\n");
  reject("C 2\nCNOT 0 1\n");      // sites are one-based
  reject("C 2\nCNOT 1 3\n");      // out of range
  reject("C 2\nCNOT 2 2\n");      // control equals target
  reject("C 2\nLOCAL 1 HT\n");    // wrong field for the gate
  reject("C 2\nLOCAL 1 EXP I 0.5\n");
  reject("C 2\nLOCAL 1 EXP Z\n");
  reject("C 2\nLOCAL 1 ROT 0.5\n");  // rotations are Real-only
  reject("R 2\nLOCAL 1 EXP Z 0.5\n");
  reject("R 2\nLOCAL 1 ROT zero\n");
  reject("R 1\nLOCAL 1 Z\n");  // reflection needs two sites
  SECTION("errors carry the line number") {
    std::istringstream is("C 2\nLOCAL 1 H\nCNOT 9 1\n");
    try {
      read_circuit(is);
      FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
      REQUIRE(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
}
