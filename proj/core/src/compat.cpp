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

#include "blockpec/compat.hpp"

#include <array>
#include <cmath>
#include <complex>

#include "blockpec/errors.hpp"

namespace blockpec {

namespace {

using cd = std::complex<double>;

// Local basis index bit for g.qubits[j] (big-endian).
int index_bit(int arity, int j) { return arity - 1 - j; }

double z_sign(std::uint64_t local_mask, int arity, Eigen::Index basis) {
  int parity = 0;
  for (int j = 0; j < arity; ++j)
    if ((local_mask >> j) & 1U) parity ^= static_cast<int>((basis >> index_bit(arity, j)) & 1);
  return parity ? -1.0 : 1.0;
}

Eigen::MatrixXcd z_matrix(std::uint64_t local_mask, int arity) {
  const Eigen::Index dim = Eigen::Index{1} << arity;
  Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) z(i, i) = z_sign(local_mask, arity, i);
  return z;
}

// Image of one local string, or NotZClosed.
std::uint64_t conjugate_local(const GateOp& g, const Eigen::MatrixXcd& u, std::uint64_t s) {
  const int arity = static_cast<int>(g.qubits.size());
  const Eigen::MatrixXcd m = u * z_matrix(s, arity) * u.adjoint();
  const cd phase = m(0, 0);
  bool ok = std::abs(std::abs(phase) - 1.0) <= kMatchTol;
  std::uint64_t image = 0;
  if (ok) {
    for (int j = 0; j < arity; ++j) {
      const Eigen::Index single = Eigen::Index{1} << index_bit(arity, j);
      if (std::abs(m(single, single) + phase) <= kMatchTol) image |= std::uint64_t{1} << j;
    }
    ok = (m - phase * z_matrix(image, arity)).cwiseAbs().maxCoeff() <= kMatchTol;
  }
  if (!ok) {
    std::string input(static_cast<std::size_t>(arity), 'I');
    for (int j = 0; j < arity; ++j)
      if ((s >> j) & 1U) input[static_cast<std::size_t>(j)] = 'Z';
    throw NotZClosed(g.str(), input);
  }
  return image;
}

void check_propagatable(const GateOp& g) {
  if (is_composite(g.kind))
    throw UnsupportedGate(std::string(kind_name(g.kind)) +
                          " is composite; expand it before propagation");
}

}  // namespace

std::vector<std::uint64_t> conjugation_table(const GateOp& g, const PropagationOptions& opts) {
  check_propagatable(g);
  const std::uint64_t count = std::uint64_t{1} << g.qubits.size();
  std::vector<std::uint64_t> table(count);
  if (opts.xcz_commutes && g.kind == GateKind::XCZ) {
    for (std::uint64_t s = 0; s < count; ++s) table[s] = s;
    return table;
  }
  const Eigen::MatrixXcd u = unitary_of(g);
  for (std::uint64_t s = 0; s < count; ++s) table[s] = conjugate_local(g, u, s);
  return table;
}

PauliZString conjugate_z_string(const GateOp& g, const PauliZString& s,
                                const PropagationOptions& opts) {
  check_propagatable(g);
  std::uint64_t local = 0;
  std::uint64_t rest = s.mask;
  for (std::size_t j = 0; j < g.qubits.size(); ++j) {
    const std::uint64_t bit = std::uint64_t{1} << g.qubits[j];
    if (s.mask & bit) local |= std::uint64_t{1} << j;
    rest &= ~bit;
  }
  const std::uint64_t image = opts.xcz_commutes && g.kind == GateKind::XCZ
                                   ? local
                                   : conjugate_local(g, unitary_of(g), local);
  for (std::size_t j = 0; j < g.qubits.size(); ++j)
    if ((image >> j) & 1U) rest |= std::uint64_t{1} << g.qubits[j];
  return {rest, s.n};
}

bool is_pauli_z_compatible(const GateOp& g, const PropagationOptions& opts) {
  if (is_composite(g.kind)) return false;
  try {
    conjugation_table(g, opts);
    return true;
  } catch (const NotZClosed&) {
    return false;
  }
}

bool is_bias_preserving(const GateOp& g) {
  const Eigen::MatrixXcd u = unitary_of(g);
  for (Eigen::Index c = 0; c < u.cols(); ++c) {
    int big = 0;
    for (Eigen::Index r = 0; r < u.rows(); ++r) {
      const double a = std::abs(u(r, c));
      if (a >= 1.0 - kMatchTol)
        ++big;
      else if (a > kMatchTol)
        return false;
    }
    if (big != 1) return false;
  }
  return true;
}

bool is_s1_bias_preserving(const GateOp& g) {
  if (g.qubits.size() != 2)
    throw UnsupportedGate("S1 bias preservation is defined for two-qubit gates only");
  const Eigen::MatrixXcd u = unitary_of(g);
  // |01> = 1, |10> = 2 in big-endian order.
  for (Eigen::Index c : {1, 2})
    for (Eigen::Index r : {0, 3})
      if (std::abs(u(r, c)) > kMatchTol) return false;
  Eigen::Matrix2cd block;
  block << u(1, 1), u(1, 2), u(2, 1), u(2, 2);
  if (std::abs(block.determinant()) < kMatchTol) return false;
  const Eigen::Matrix2cd inv = block.inverse();
  // Z1, Z2, Z1Z2 restricted to the subspace.
  const std::array<Eigen::Vector2d, 3> gens = {Eigen::Vector2d(1, -1), Eigen::Vector2d(-1, 1),
                                               Eigen::Vector2d(-1, -1)};
  for (const auto& d : gens) {
    const Eigen::Matrix2cd image = block * d.cast<cd>().asDiagonal() * inv;
    if (std::abs(image(0, 1)) > kMatchTol || std::abs(image(1, 0)) > kMatchTol) return false;
    if (std::abs(std::abs(image(0, 0)) - 1.0) > kMatchTol ||
        std::abs(std::abs(image(1, 1)) - 1.0) > kMatchTol)
      return false;
  }
  return true;
}

bool CompatReport::fully_compatible() const {
  for (const auto& f : flags)
    if (!f.pauli_z_compatible) return false;
  return true;
}

CompatReport classify_circuit(const Circuit& c, const PropagationOptions& opts) {
  CompatReport report;
  report.flags.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const GateOp& g = c.op(i);
    GateFlags f;
    f.bias_preserving = is_bias_preserving(g);
    f.s1_bias_preserving = g.qubits.size() == 2 && is_s1_bias_preserving(g);
    f.pauli_z_compatible = is_pauli_z_compatible(g, opts);
    report.flags.push_back(f);
    if (!f.pauli_z_compatible) continue;
    if (!report.segments.empty() && report.segments.back().end == i)
      report.segments.back().end = i + 1;
    else
      report.segments.push_back({i, i + 1});
  }
  return report;
}

}  // namespace blockpec
