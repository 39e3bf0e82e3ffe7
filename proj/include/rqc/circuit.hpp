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

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rqc/dense.hpp"
#include "rqc/field.hpp"
#include "rqc/pauli.hpp"
#include "rqc/tableau.hpp"

namespace rqc {

enum class GateKind : std::uint8_t {
  Cnot,      // two-site controlled NOT
  Named,     // named single-site gate
  PauliExp,  // Complex continuous local exp(i t axis)
  Rotation,  // Real continuous local planar rotation by theta
};

/// One circuit element.  Sites are 0-based in memory; the text format is
/// 1-based.
struct Gate {
  GateKind kind = GateKind::Cnot;
  int control = -1;          // Cnot
  int target = -1;           // Cnot
  int site = -1;             // all local kinds
  LocalGateName name{};      // Named
  SiteOp axis = SiteOp::Z;   // PauliExp
  double angle = 0.0;        // PauliExp / Rotation

  static Gate cnot(int control, int target) {
    Gate g;
    g.kind = GateKind::Cnot;
    g.control = control;
    g.target = target;
    return g;
  }
  static Gate named(int site, LocalGateName name) {
    Gate g;
    g.kind = GateKind::Named;
    g.site = site;
    g.name = name;
    return g;
  }
  static Gate pauli_exp_gate(int site, SiteOp axis, double angle) {
    Gate g;
    g.kind = GateKind::PauliExp;
    g.site = site;
    g.axis = axis;
    g.angle = angle;
    return g;
  }
  static Gate rotation(int site, double theta) {
    Gate g;
    g.kind = GateKind::Rotation;
    g.site = site;
    g.angle = theta;
    return g;
  }
};

/// An ordered gate list over a fixed-width register.  append() validates
/// indices and field compatibility, so a constructed circuit is always
/// well-formed; its dense evaluation (see the verification header) is
/// unitary (Complex) or orthogonal (Real) because every admitted gate is.
struct Circuit {
  Field field = Field::Complex;
  int width = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  Circuit(Field f, int w) : field(f), width(w) {
    if (w < 1) throw std::invalid_argument("circuit width must be >= 1");
  }

  void append(const Gate& g) {
    validate(g);
    gates.push_back(g);
  }

  void extend(const std::vector<Gate>& more) {
    for (const Gate& g : more) append(g);
  }

  int cnot_count() const {
    int n = 0;
    for (const Gate& g : gates)
      if (g.kind == GateKind::Cnot) ++n;
    return n;
  }

  int local_count() const { return static_cast<int>(gates.size()) - cnot_count(); }

 private:
  void validate(const Gate& g) const {
    switch (g.kind) {
      case GateKind::Cnot:
        if (g.control < 0 || g.control >= width || g.target < 0 ||
            g.target >= width)
          throw std::invalid_argument("C-NOT site index out of range");
        if (g.control == g.target)
          throw std::invalid_argument("C-NOT control and target must differ");
        return;
      case GateKind::Named:
        if (g.site < 0 || g.site >= width)
          throw std::invalid_argument("local gate site out of range");
        if (!gate_allowed_in_field(g.name, field))
          throw std::invalid_argument(std::string("gate ") +
                                      gate_token(g.name) +
                                      " is not defined over this field");
        // Reflections flip the determinant of their own 2x2 block; they are
        // admitted only on registers of >= 2 sites, where the embedding
        // exponent 2^{width-1} is even and the overall determinant is
        // unaffected.
        if (is_reflection_local(g.name) && width < 2)
          throw std::invalid_argument(
              "reflection locals require a register of at least 2 sites");
        return;
      case GateKind::PauliExp:
        if (field != Field::Complex)
          throw std::invalid_argument(
              "axis-exponential locals exist only over the Complex field");
        if (g.site < 0 || g.site >= width)
          throw std::invalid_argument("local gate site out of range");
        if (g.axis == SiteOp::I)
          throw std::invalid_argument("exponential axis must be X, Y or Z");
        return;
      case GateKind::Rotation:
        if (field != Field::Real)
          throw std::invalid_argument(
              "planar rotation locals exist only over the Real field");
        if (g.site < 0 || g.site >= width)
          throw std::invalid_argument("local gate site out of range");
        return;
    }
    throw std::logic_error("unreachable");
  }
};

/// Dense 2x2 realization of any local gate kind.
inline Mat2 local_dense(Field field, const Gate& g) {
  switch (g.kind) {
    case GateKind::Named:
      return local_gate_matrix(g.name);
    case GateKind::PauliExp: {
      // cos(t) I + i sin(t) P for a single-site Pauli axis.
      const Mat2 p = site_matrix(field, g.axis);
      const std::complex<double> c(std::cos(g.angle), 0.0);
      const std::complex<double> s(0.0, std::sin(g.angle));
      return {c + s * p[0], s * p[1], s * p[2], c + s * p[3]};
    }
    case GateKind::Rotation: {
      const double c = std::cos(g.angle), s = std::sin(g.angle);
      return {std::complex<double>(c, 0.0), std::complex<double>(s, 0.0),
              std::complex<double>(-s, 0.0), std::complex<double>(c, 0.0)};
    }
    case GateKind::Cnot:
      break;
  }
  throw std::invalid_argument("gate has no single-site dense form");
}

/// Text form, one gate per line after a "<field> <width>" header:
///   CNOT c t
///   LOCAL s NAME
///   LOCAL s EXP axis t    (Complex continuous local)
///   LOCAL s ROT theta     (Real continuous local)
/// Site indices are 1-based in the text; angles carry 17 significant
/// digits so the printer/parser round-trip is exact on the decimal text.
inline void write_circuit(std::ostream& os, const Circuit& c) {
  os << field_code(c.field) << ' ' << c.width << '\n';
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::Cnot:
        os << "CNOT " << g.control + 1 << ' ' << g.target + 1 << '\n';
        break;
      case GateKind::Named:
        os << "LOCAL " << g.site + 1 << ' ' << gate_token(g.name) << '\n';
        break;
      case GateKind::PauliExp: {
        const char* axis = g.axis == SiteOp::X   ? "X"
                           : g.axis == SiteOp::Y ? "Y"
                                                 : "Z";
        os << "LOCAL " << g.site + 1 << " EXP " << axis << ' '
           << detail::format_double(g.angle) << '\n';
        break;
      }
      case GateKind::Rotation:
        os << "LOCAL " << g.site + 1 << " ROT "
           << detail::format_double(g.angle) << '\n';
        break;
    }
  }
}

inline Circuit read_circuit(std::istream& is) {
  std::string header;
  if (!std::getline(is, header))
    throw std::invalid_argument("circuit file: missing header line");
  std::istringstream hs(header);
  std::string code;
  int width = 0;
  std::string extra_header;
  if (!(hs >> code >> width) || code.size() != 1 || (hs >> extra_header))
    throw std::invalid_argument("circuit file: bad '<field> <width>' header");
  Circuit c(field_from_code(code[0]), width);

  std::string line;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;  // blank line
    const auto fail = [&](const std::string& why) -> std::invalid_argument {
      return std::invalid_argument("circuit file line " +
                                   std::to_string(lineno) + ": " + why);
    };
    try {
      if (word == "CNOT") {
        int ctl = 0, tgt = 0;
        if (!(ls >> ctl >> tgt)) throw fail("CNOT needs two site indices");
        c.append(Gate::cnot(ctl - 1, tgt - 1));
      } else if (word == "LOCAL") {
        int site = 0;
        std::string what;
        if (!(ls >> site >> what)) throw fail("LOCAL needs a site and a gate");
        if (what == "EXP") {
          std::string axis;
          double t = 0.0;
          if (!(ls >> axis >> t)) throw fail("EXP needs an axis and an angle");
          SiteOp op;
          if (axis == "X")
            op = SiteOp::X;
          else if (axis == "Y")
            op = SiteOp::Y;
          else if (axis == "Z")
            op = SiteOp::Z;
          else
            throw fail("EXP axis must be X, Y or Z");
          c.append(Gate::pauli_exp_gate(site - 1, op, t));
        } else if (what == "ROT") {
          double theta = 0.0;
          if (!(ls >> theta)) throw fail("ROT needs an angle");
          c.append(Gate::rotation(site - 1, theta));
        } else {
          c.append(Gate::named(site - 1, gate_from_token(what)));
        }
      } else {
        throw fail("unknown gate keyword '" + word + "'");
      }
    } catch (const std::invalid_argument& e) {
      // Re-wrap validation errors with the line number.
      std::string msg = e.what();
      if (msg.rfind("circuit file line", 0) == 0) throw;
      throw fail(msg);
    }
    std::string extra;
    if (ls >> extra) throw fail("trailing tokens after gate");
  }
  return c;
}

}  // namespace rqc
