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

#include "blockpec/noise.hpp"

#include <cmath>

#include "blockpec/errors.hpp"

namespace blockpec {

namespace {

constexpr double kSingularTol = 1e-12;

std::size_t dim_of(std::size_t m) {
  if (m > 20) throw GuardExceeded("Z-mixture support larger than 20 qubits");
  return std::size_t{1} << m;
}

}  // namespace

void NoiseSpec::validate() const {
  if (kind == NoiseKind::none) return;
  if (!(p >= 0.0 && p <= 1.0))
    throw InvalidArgument("noise probability must lie in [0, 1]");
  if (kind == NoiseKind::impure && !(q >= 0.0))
    throw InvalidArgument("impure noise requires q >= 0");
}

std::string to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::none:
      return "none";
    case NoiseKind::uncorrelated:
      return "uncorrelated";
    case NoiseKind::correlated:
      return "correlated";
    case NoiseKind::impure:
      return "impure";
  }
  return "none";
}

NoiseKind noise_kind_from_string(const std::string& name) {
  if (name == "none") return NoiseKind::none;
  if (name == "uncorrelated") return NoiseKind::uncorrelated;
  if (name == "correlated") return NoiseKind::correlated;
  if (name == "impure") return NoiseKind::impure;
  throw ParseError("unknown noise kind '" + name + "'", 0);
}

void walsh_hadamard(std::span<double> values) {
  const std::size_t n = values.size();
  for (std::size_t half = 1; half < n; half <<= 1) {
    for (std::size_t block = 0; block < n; block += 2 * half) {
      for (std::size_t k = block; k < block + half; ++k) {
        const double a = values[k], b = values[k + half];
        values[k] = a + b;
        values[k + half] = a - b;
      }
    }
  }
}

ZMixture::ZMixture(std::vector<int> support, std::vector<double> coeffs)
    : support_(std::move(support)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != dim_of(support_.size()))
    throw InvalidArgument("Z-mixture needs 2^m coefficients");
}

ZMixture ZMixture::identity(std::vector<int> support) {
  std::vector<double> c(dim_of(support.size()), 0.0);
  c[0] = 1.0;
  return {std::move(support), std::move(c)};
}

ZMixture ZMixture::from_eigenvalues(std::vector<int> support, std::vector<double> eigenvalues) {
  walsh_hadamard(eigenvalues);
  const double scale = 1.0 / static_cast<double>(eigenvalues.size());
  for (double& v : eigenvalues) v *= scale;
  return {std::move(support), std::move(eigenvalues)};
}

double ZMixture::sum() const {
  double s = 0.0;
  for (double c : coeffs_) s += c;
  return s;
}

double ZMixture::gamma() const {
  double s = 0.0;
  for (double c : coeffs_) s += std::abs(c);
  return s;
}

bool ZMixture::is_convex(double tol) const {
  for (double c : coeffs_)
    if (c < -tol) return false;
  return std::abs(sum() - 1.0) <= tol;
}

std::vector<double> ZMixture::eigenvalues() const {
  std::vector<double> out = coeffs_;
  walsh_hadamard(out);
  return out;
}

std::uint64_t ZMixture::to_global(std::uint64_t local_mask) const {
  std::uint64_t g = 0;
  for (std::size_t j = 0; j < support_.size(); ++j)
    if ((local_mask >> j) & 1U) g |= std::uint64_t{1} << support_[j];
  return g;
}

ZMixture ZMixture::compose(const ZMixture& other) const {
  if (support_ != other.support_)
    throw InvalidArgument("composing Z-mixtures on different supports");
  std::vector<double> out(coeffs_.size(), 0.0);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a] == 0.0) continue;
    for (std::size_t b = 0; b < coeffs_.size(); ++b) out[a ^ b] += coeffs_[a] * other.coeffs_[b];
  }
  return {support_, std::move(out)};
}

ZMixture make_dephasing(const NoiseSpec& spec, std::vector<int> support) {
  spec.validate();
  if (support.empty()) throw InvalidArgument("dephasing needs a non-empty support");
  const std::size_t m = support.size();
  const double p = spec.p;
  std::vector<double> c(dim_of(m), 0.0);
  switch (spec.kind) {
    case NoiseKind::none:
      c[0] = 1.0;
      break;
    case NoiseKind::uncorrelated:
      for (std::size_t b = 0; b < c.size(); ++b) {
        const int w = std::popcount(b);
        c[b] = std::pow(1.0 - p, static_cast<double>(m) - w) * std::pow(p, w);
      }
      break;
    case NoiseKind::correlated:
      c[0] = 1.0 - p;
      for (std::size_t b = 1; b < c.size(); ++b) c[b] = p / static_cast<double>(c.size() - 1);
      break;
    case NoiseKind::impure:
      throw UnsupportedKind("impure noise is not a Z-mixture; use make_impure");
  }
  return {std::move(support), std::move(c)};
}

ZMixture invert_z_mixture(const ZMixture& channel) {
  std::vector<double> eig = channel.eigenvalues();
  for (double& v : eig) {
    if (std::abs(v) < kSingularTol) throw SingularChannel("Z-mixture has a vanishing eigenvalue");
    v = 1.0 / v;
  }
  return ZMixture::from_eigenvalues(channel.support(), std::move(eig));
}

ZMixture taylor_inverse(const ZMixture& channel) {
  const auto c = channel.coeffs();
  std::vector<double> out(c.size());
  const double p = 1.0 - c[0];
  out[0] = 1.0 + p;
  for (std::size_t b = 1; b < c.size(); ++b) out[b] = -c[b];
  return {channel.support(), std::move(out)};
}

double gamma_of(const ZMixture& distribution) { return distribution.gamma(); }

double PauliMixture1::gamma() const {
  return std::abs(i) + std::abs(x) + std::abs(y) + std::abs(z);
}

std::array<double, 3> PauliMixture1::eigenvalues() const {
  return {i + x - y - z, i - x + y - z, i - x - y + z};
}

PauliMixture1 PauliMixture1::compose(const PauliMixture1& o) const {
  // Pauli channels compose like the Klein four-group.
  PauliMixture1 r{0, 0, 0, 0};
  r.i = i * o.i + x * o.x + y * o.y + z * o.z;
  r.x = i * o.x + x * o.i + y * o.z + z * o.y;
  r.y = i * o.y + y * o.i + x * o.z + z * o.x;
  r.z = i * o.z + z * o.i + x * o.y + y * o.x;
  return r;
}

ImpureChannel make_impure(double p, double q, int qubit) {
  NoiseSpec::impure(p, q).validate();
  ImpureChannel ch;
  ch.qubit = qubit;
  const double a = p / (3.0 * (q + 1.0));
  const double b = p * (3.0 * q + 1.0) / (3.0 * (q + 1.0));
  ch.forward = {1.0 - p, a, a, b};

  if (std::abs(1.0 - 2.0 * p) < kSingularTol) throw SingularChannel("impure channel at p = 1/2");
  const double g1 = 1.0 / (1.0 - 2.0 * p);
  ch.closed_form_inverse = {g1 * (1.0 - p), -g1 * a, -g1 * a, -g1 * b};

  auto eig = ch.forward.eigenvalues();
  for (double& v : eig) {
    if (std::abs(v) < kSingularTol) throw SingularChannel("impure channel is not invertible");
    v = 1.0 / v;
  }
  // Invert the transform I + X + Y + Z sign pattern.
  const double ex = eig[0], ey = eig[1], ez = eig[2];
  ch.exact_inverse = {(1 + ex + ey + ez) / 4, (1 + ex - ey - ez) / 4, (1 - ex + ey - ez) / 4,
                      (1 - ex - ey + ez) / 4};
  return ch;
}

}  // namespace blockpec
