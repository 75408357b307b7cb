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

#include "blockpec/circuit.hpp"

#include <charconv>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>

#include "blockpec/errors.hpp"

namespace blockpec {

Circuit::Circuit(int num_qubits, NoiseSpec default_noise)
    : n_(num_qubits), default_noise_(default_noise) {
  if (num_qubits < 1) throw InvalidArgument("circuit needs at least one qubit");
  if (num_qubits > 62) throw GuardExceeded("circuits are limited to 62 qubits");
  default_noise_.validate();
}

Circuit& Circuit::add(GateOp op) { return add(std::move(op), default_noise_); }

Circuit& Circuit::add(GateOp op, NoiseSpec noise) {
  op = GateOp::make(op.kind, std::move(op.qubits), op.angle);
  for (int q : op.qubits)
    if (q >= n_)
      throw InvalidArgument("qubit " + std::to_string(q) + " out of range for " +
                            std::to_string(n_) + "-qubit circuit");
  noise.validate();
  ops_.push_back(std::move(op));
  noise_.push_back(noise);
  return *this;
}

Circuit& Circuit::add(GateKind kind, std::vector<int> qubits, double angle) {
  return add(GateOp::make(kind, std::move(qubits), angle));
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_ != n_) throw InvalidArgument("appending circuits of different width");
  for (std::size_t i = 0; i < other.size(); ++i) add(other.ops_[i], other.noise_[i]);
  return *this;
}

void Circuit::set_noise(const NoiseSpec& spec) {
  spec.validate();
  default_noise_ = spec;
  for (auto& s : noise_) s = spec;
}

std::vector<OpRange> Circuit::layers() const {
  std::vector<OpRange> out;
  out.reserve(ops_.size());
  for (std::size_t i = 0; i < ops_.size(); ++i) out.push_back({i, i + 1});
  return out;
}

Circuit Circuit::slice(OpRange range) const {
  if (range.begin > range.end || range.end > ops_.size())
    throw InvalidArgument("op range out of bounds");
  Circuit out(n_, default_noise_);
  for (std::size_t i = range.begin; i < range.end; ++i) out.add(ops_[i], noise_[i]);
  return out;
}

namespace {

void add_ry(Circuit& out, int q, double angle, const NoiseSpec& noise) {
  out.add(GateOp::make(GateKind::RZ, {q}, -std::numbers::pi / 2), noise);
  out.add(GateOp::make(GateKind::H, {q}), noise);
  out.add(GateOp::make(GateKind::RZ, {q}, angle), noise);
  out.add(GateOp::make(GateKind::H, {q}), noise);
  out.add(GateOp::make(GateKind::S, {q}), noise);
}

}  // namespace

Circuit expand_composites(const Circuit& c) {
  Circuit out(c.num_qubits(), c.default_noise());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const GateOp& g = c.op(i);
    const NoiseSpec& noise = c.noise(i);
    if (g.kind == GateKind::RY) {
      add_ry(out, g.qubits[0], g.angle, noise);
    } else if (g.kind == GateKind::CRY) {
      const int j = g.qubits[0], k = g.qubits[1];
      out.add(GateOp::make(GateKind::CNOT, {j, k}), noise);
      add_ry(out, k, -g.angle / 2, noise);
      out.add(GateOp::make(GateKind::CNOT, {j, k}), noise);
      add_ry(out, k, g.angle / 2, noise);
    } else {
      out.add(g, noise);
    }
  }
  return out;
}

Circuit decompose_swaps(const Circuit& c) {
  Circuit out(c.num_qubits(), c.default_noise());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const GateOp& g = c.op(i);
    if (g.kind != GateKind::SWAP) {
      out.add(g, c.noise(i));
      continue;
    }
    const int a = g.qubits[0], b = g.qubits[1];
    out.add(GateOp::make(GateKind::CNOT, {a, b}), c.noise(i));
    out.add(GateOp::make(GateKind::CNOT, {b, a}), c.noise(i));
    out.add(GateOp::make(GateKind::CNOT, {a, b}), c.noise(i));
  }
  return out;
}

Circuit expand_rbs(const Circuit& c) {
  Circuit out(c.num_qubits(), c.default_noise());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const GateOp& g = c.op(i);
    if (g.kind != GateKind::RBS) {
      out.add(g, c.noise(i));
      continue;
    }
    out.add(GateOp::make(GateKind::CNOT, g.qubits), c.noise(i));
    out.add(GateOp::make(GateKind::XCZ, g.qubits, g.angle), c.noise(i));
    out.add(GateOp::make(GateKind::CNOT, g.qubits), c.noise(i));
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view s, int line) {
  s = trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("expected an integer, got '" + std::string(s) + "'", line);
  return value;
}

double parse_double(std::string_view s, int line) {
  s = trim(s);
  std::string buf(s);
  char* end = nullptr;
  const double value = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size())
    throw ParseError("expected a number, got '" + buf + "'", line);
  return value;
}

}  // namespace

Circuit parse_circuit(std::string_view text, const NoiseSpec& noise) {
  std::optional<Circuit> circuit;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("qubits")) {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos || trim(line.substr(0, eq)) != "qubits")
        throw ParseError("malformed header, expected qubits=<n>", line_no);
      if (circuit) throw ParseError("duplicate qubits= header", line_no);
      const int n = parse_int(line.substr(eq + 1), line_no);
      if (n < 1) throw ParseError("qubit count must be positive", line_no);
      circuit.emplace(n, noise);
      continue;
    }
    if (!circuit) throw ParseError("gate before the qubits=<n> header", line_no);

    std::string_view body = line;
    std::optional<double> theta;
    if (const auto semi = line.find(';'); semi != std::string_view::npos) {
      body = trim(line.substr(0, semi));
      const std::string_view param = trim(line.substr(semi + 1));
      const auto eq = param.find('=');
      if (eq == std::string_view::npos || trim(param.substr(0, eq)) != "theta")
        throw ParseError("expected ;theta=<radians>", line_no);
      theta = parse_double(param.substr(eq + 1), line_no);
    }
    const auto space = body.find_first_of(" \t");
    if (space == std::string_view::npos) throw ParseError("gate without qubits", line_no);

    GateKind kind;
    try {
      kind = kind_from_name(trim(body.substr(0, space)));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    std::vector<int> qubits;
    std::string_view rest = trim(body.substr(space));
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      qubits.push_back(parse_int(rest.substr(0, comma), line_no));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (is_parameterized(kind) && !theta)
      throw ParseError(std::string(kind_name(kind)) + " requires ;theta=", line_no);
    if (!is_parameterized(kind) && theta)
      throw ParseError(std::string(kind_name(kind)) + " takes no angle", line_no);
    try {
      circuit->add(GateOp::make(kind, std::move(qubits), theta.value_or(0.0)));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (!circuit) throw ParseError("missing qubits=<n> header", 0);
  return *std::move(circuit);
}

std::string to_text(const Circuit& c) {
  std::ostringstream out;
  out << "qubits=" << c.num_qubits() << '\n';
  for (const auto& g : c.ops()) out << g.str() << '\n';
  return out.str();
}

}  // namespace blockpec
