// Copyright 2026 The blockpec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "blockpec/gate.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "blockpec/errors.hpp"

namespace blockpec {

namespace {

using cd = std::complex<double>;

struct KindInfo {
  GateKind kind;
  std::string_view name;
  int arity;
  bool parameterized;
};

constexpr KindInfo kKinds[] = {
    {GateKind::X, "X", 1, false},       {GateKind::Z, "Z", 1, false},
    {GateKind::S, "S", 1, false},       {GateKind::T, "T", 1, false},
    {GateKind::H, "H", 1, false},       {GateKind::RZ, "RZ", 1, true},
    {GateKind::RZZ, "RZZ", 2, true},    {GateKind::CZ, "CZ", 2, false},
    {GateKind::CNOT, "CNOT", 2, false}, {GateKind::SWAP, "SWAP", 2, false},
    {GateKind::XCZ, "XCZ", 2, true},    {GateKind::RBS, "RBS", 2, true},
    {GateKind::RY, "RY", 1, true},      {GateKind::CRY, "CRY", 2, true},
    {GateKind::Toffoli, "TOFFOLI", 3, false},
};

const KindInfo& info(GateKind kind) {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k;
  throw UnsupportedGate("unknown gate kind");
}

}  // namespace

int arity(GateKind kind) { return info(kind).arity; }
bool is_parameterized(GateKind kind) { return info(kind).parameterized; }
bool is_composite(GateKind kind) {
  return kind == GateKind::RY || kind == GateKind::CRY;
}
std::string_view kind_name(GateKind kind) { return info(kind).name; }

GateKind kind_from_name(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "CX") upper = "CNOT";
  if (upper == "CCX") upper = "TOFFOLI";
  for (const auto& k : kKinds)
    if (k.name == upper) return k.kind;
  throw ParseError("unknown gate kind '" + std::string(name) + "'", 0);
}

GateOp GateOp::make(GateKind kind, std::vector<int> qubits, double angle) {
  if (static_cast<int>(qubits.size()) != arity(kind))
    throw InvalidArgument(std::string(kind_name(kind)) + " expects " +
                          std::to_string(arity(kind)) + " qubit(s)");
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] < 0) throw InvalidArgument("negative qubit index");
    for (std::size_t j = i + 1; j < qubits.size(); ++j)
      if (qubits[i] == qubits[j])
        throw InvalidArgument("repeated qubit in " + std::string(kind_name(kind)));
  }
  return GateOp{kind, std::move(qubits), is_parameterized(kind) ? angle : 0.0};
}

std::string GateOp::str() const {
  std::ostringstream out;
  out.precision(17);
  out << kind_name(kind) << ' ';
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (i) out << ',';
    out << qubits[i];
  }
  if (is_parameterized(kind)) out << ";theta=" << angle;
  return out.str();
}

Eigen::MatrixXcd unitary_of(const GateOp& g) {
  const cd i{0.0, 1.0};
  const double t = g.angle;
  Eigen::MatrixXcd u;
  switch (g.kind) {
    case GateKind::X:
      u.resize(2, 2);
      u << 0, 1, 1, 0;
      break;
    case GateKind::Z:
      u.resize(2, 2);
      u << 1, 0, 0, -1;
      break;
    case GateKind::S:
      u.resize(2, 2);
      u << 1, 0, 0, i;
      break;
    case GateKind::T:
      u.resize(2, 2);
      u << 1, 0, 0, std::exp(i * (std::numbers::pi / 4));
      break;
    case GateKind::H: {
      const double r = std::numbers::sqrt2 / 2;
      u.resize(2, 2);
      u << r, r, r, -r;
      break;
    }
    case GateKind::RZ:
      u = Eigen::MatrixXcd::Zero(2, 2);
      u(0, 0) = std::exp(-i * (t / 2));
      u(1, 1) = std::exp(i * (t / 2));
      break;
    case GateKind::RZZ:
      u = Eigen::MatrixXcd::Zero(4, 4);
      u(0, 0) = u(3, 3) = std::exp(-i * (t / 2));
      u(1, 1) = u(2, 2) = std::exp(i * (t / 2));
      break;
    case GateKind::CZ:
      u = Eigen::MatrixXcd::Identity(4, 4);
      u(3, 3) = -1;
      break;
    case GateKind::CNOT:
      u = Eigen::MatrixXcd::Zero(4, 4);
      u(0, 0) = u(1, 1) = 1;
      u(2, 3) = u(3, 2) = 1;
      break;
    case GateKind::SWAP:
      u = Eigen::MatrixXcd::Zero(4, 4);
      u(0, 0) = u(3, 3) = 1;
      u(1, 2) = u(2, 1) = 1;
      break;
    case GateKind::XCZ: {
      const cd e = std::exp(i * (t / 2));
      const cd ec = std::conj(e);
      u = Eigen::MatrixXcd::Zero(4, 4);
      u(0, 0) = u(2, 2) = (1.0 + e) / 2.0;
      u(0, 2) = u(2, 0) = (1.0 - e) / 2.0;
      u(1, 1) = u(3, 3) = (1.0 + ec) / 2.0;
      u(1, 3) = u(3, 1) = (1.0 - ec) / 2.0;
      break;
    }
    case GateKind::RBS: {
      const double c = std::cos(t), s = std::sin(t);
      u = Eigen::MatrixXcd::Identity(4, 4);
      u(1, 1) = c;
      u(2, 1) = -s;
      u(1, 2) = s;
      u(2, 2) = c;
      break;
    }
    case GateKind::RY: {
      const double c = std::cos(t / 2), s = std::sin(t / 2);
      u.resize(2, 2);
      u << c, -s, s, c;
      break;
    }
    case GateKind::CRY: {
      const double c = std::cos(t / 2), s = std::sin(t / 2);
      u = Eigen::MatrixXcd::Identity(4, 4);
      u(2, 2) = c;
      u(2, 3) = -s;
      u(3, 2) = s;
      u(3, 3) = c;
      break;
    }
    case GateKind::Toffoli:
      u = Eigen::MatrixXcd::Identity(8, 8);
      u(6, 6) = u(7, 7) = 0;
      u(6, 7) = u(7, 6) = 1;
      break;
    default:
      throw UnsupportedGate("no unitary for gate kind");
  }
  return u;
}

}  // namespace blockpec
