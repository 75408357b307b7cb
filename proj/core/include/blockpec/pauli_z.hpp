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

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace blockpec {

/// Tensor product of I/Z factors on n qubits. Bit i of `mask` set means a
/// Z factor on qubit i. Phases are dropped: two strings compose by XOR,
/// which is exact at the channel level.
struct PauliZString {
  std::uint64_t mask = 0;
  int n = 1;

  static PauliZString identity(int n) { return {0, n}; }
  static PauliZString on(int n, const std::vector<int>& qubits) {
    PauliZString s{0, n};
    for (int q : qubits) s.mask ^= std::uint64_t{1} << q;
    return s;
  }

  bool is_identity() const { return mask == 0; }
  bool has(int qubit) const { return (mask >> qubit) & 1U; }
  int weight() const { return std::popcount(mask); }

  PauliZString operator*(const PauliZString& other) const {
    return {mask ^ other.mask, n};
  }
  bool operator==(const PauliZString&) const = default;

  /// e.g. "IZZI" with qubit 0 leftmost.
  std::string str() const {
    std::string out(static_cast<std::size_t>(n), 'I');
    for (int q = 0; q < n; ++q)
      if (has(q)) out[static_cast<std::size_t>(q)] = 'Z';
    return out;
  }
};

/// Parity of the overlap between two masks.
inline int overlap_parity(std::uint64_t a, std::uint64_t b) {
  return std::popcount(a & b) & 1;
}

}  // namespace blockpec
