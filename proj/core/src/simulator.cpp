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

#include "blockpec/simulator.hpp"

#include "blockpec/errors.hpp"

namespace blockpec {

std::uint64_t basis_mask(const PauliZString& s) {
  std::uint64_t out = 0;
  for (int q = 0; q < s.n; ++q)
    if (s.has(q)) out |= basis_bit(q, s.n);
  return out;
}

namespace {

// Applies a 2^k x 2^k matrix to the bits listed in `bits` of a flat vector.
// bits[0] is the most significant local index bit.
void apply_on_bits(std::vector<Amplitude>& v, const Eigen::MatrixXcd& u,
                   const std::vector<std::uint64_t>& bits) {
  const std::size_t k = bits.size();
  const std::size_t local = std::size_t{1} << k;
  std::vector<std::uint64_t> offset(local, 0);
  std::uint64_t all = 0;
  for (std::size_t a = 0; a < local; ++a)
    for (std::size_t j = 0; j < k; ++j)
      if ((a >> (k - 1 - j)) & 1U) offset[a] |= bits[j];
  for (auto b : bits) all |= b;

  std::vector<Amplitude> in(local), out(local);
  for (std::uint64_t base = 0; base < v.size(); ++base) {
    if (base & all) continue;
    for (std::size_t a = 0; a < local; ++a) in[a] = v[base | offset[a]];
    for (std::size_t r = 0; r < local; ++r) {
      Amplitude acc = 0.0;
      for (std::size_t c = 0; c < local; ++c) acc += u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * in[c];
      out[r] = acc;
    }
    for (std::size_t a = 0; a < local; ++a) v[base | offset[a]] = out[a];
  }
}

void check_qubits(const std::vector<int>& qubits, int n) {
  for (int q : qubits)
    if (q < 0 || q >= n) throw InvalidArgument("qubit index out of range");
}

Eigen::Matrix2cd pauli_matrix(char which) {
  using cd = std::complex<double>;
  Eigen::Matrix2cd m;
  switch (which) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, cd(0, -1), cd(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

}  // namespace

StateVector::StateVector(int n) : n_(n) {
  if (n < 1) throw InvalidArgument("state needs at least one qubit");
  if (n > kMaxStatevectorQubits)
    throw GuardExceeded("statevector simulation is limited to " +
                        std::to_string(kMaxStatevectorQubits) + " qubits");
  amp_.assign(std::size_t{1} << n, 0.0);
  amp_[0] = 1.0;
}

void StateVector::apply(const GateOp& g) { apply(unitary_of(g), g.qubits); }

void StateVector::apply(const Eigen::MatrixXcd& u, const std::vector<int>& qubits) {
  check_qubits(qubits, n_);
  std::vector<std::uint64_t> bits;
  for (int q : qubits) bits.push_back(basis_bit(q, n_));
  apply_on_bits(amp_, u, bits);
}

void StateVector::apply_z(const PauliZString& s) {
  const std::uint64_t m = basis_mask(s);
  for (std::uint64_t i = 0; i < amp_.size(); ++i)
    if (std::popcount(i & m) & 1) amp_[i] = -amp_[i];
}

DensityMatrix::DensityMatrix(int n) : n_(n) {
  if (n < 1) throw InvalidArgument("state needs at least one qubit");
  if (n > kMaxDensityQubits)
    throw GuardExceeded("density-matrix simulation is limited to " +
                        std::to_string(kMaxDensityQubits) + " qubits");
  rho_.assign(std::size_t{1} << (2 * n), 0.0);
  rho_[0] = 1.0;
}

Eigen::MatrixXcd DensityMatrix::matrix() const {
  const auto d = static_cast<Eigen::Index>(dim());
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) m(r, c) = rho_[static_cast<std::size_t>(r * d + c)];
  return m;
}

double DensityMatrix::trace() const {
  double t = 0.0;
  for (std::uint64_t i = 0; i < dim(); ++i) t += rho_[i * dim() + i].real();
  return t;
}

void DensityMatrix::apply(const GateOp& g) { apply(unitary_of(g), g.qubits); }

void DensityMatrix::apply(const Eigen::MatrixXcd& u, const std::vector<int>& qubits) {
  check_qubits(qubits, n_);
  std::vector<std::uint64_t> row_bits, col_bits;
  for (int q : qubits) {
    row_bits.push_back(basis_bit(q, n_) << n_);
    col_bits.push_back(basis_bit(q, n_));
  }
  apply_on_bits(rho_, u, row_bits);
  apply_on_bits(rho_, u.conjugate(), col_bits);
}

void DensityMatrix::scale_by_pattern(const std::vector<double>& factor) {
  const std::uint64_t d = dim();
  for (std::uint64_t r = 0; r < d; ++r)
    for (std::uint64_t c = 0; c < d; ++c) rho_[r * d + c] *= factor[r ^ c];
}

void DensityMatrix::apply_channel(const ZMixture& m) {
  check_qubits(m.support(), n_);
  const std::vector<double> eig = m.eigenvalues();
  std::vector<double> factor(dim());
  for (std::uint64_t x = 0; x < dim(); ++x) {
    std::uint64_t t = 0;
    for (std::size_t j = 0; j < m.support().size(); ++j)
      if (x & basis_bit(m.support()[j], n_)) t |= std::uint64_t{1} << j;
    factor[x] = eig[t];
  }
  scale_by_pattern(factor);
}

void DensityMatrix::apply_z(const PauliZString& s) {
  const std::uint64_t m = basis_mask(s);
  std::vector<double> factor(dim());
  for (std::uint64_t x = 0; x < dim(); ++x) factor[x] = (std::popcount(x & m) & 1) ? -1.0 : 1.0;
  scale_by_pattern(factor);
}

void DensityMatrix::apply_pauli(const PauliMixture1& m, int qubit) {
  const std::vector<Amplitude> original = rho_;
  std::vector<Amplitude> acc(rho_.size());
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = m.i * original[i];
  const std::pair<char, double> terms[] = {{'X', m.x}, {'Y', m.y}, {'Z', m.z}};
  for (const auto& [which, weight] : terms) {
    if (weight == 0.0) continue;
    rho_ = original;
    apply(pauli_matrix(which), {qubit});
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += weight * rho_[i];
  }
  rho_ = std::move(acc);
}

void DensityMatrix::apply_noise(const NoiseSpec& spec, const std::vector<int>& qubits) {
  if (spec.is_noiseless()) return;
  if (spec.kind == NoiseKind::impure) {
    for (int q : qubits) apply_pauli(make_impure(spec.p, spec.q, q).forward, q);
    return;
  }
  apply_channel(make_dephasing(spec, qubits));
}

}  // namespace blockpec
