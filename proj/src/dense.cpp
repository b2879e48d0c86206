// Copyright 2026 The graphcert Authors
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

#include "graphcert/dense.hpp"

#include <cmath>

#include "graphcert/error.hpp"

namespace graphcert {

namespace {

using cplx = std::complex<double>;

void check_cap(int n) {
  if (n > kDenseCap)
    throw TooLarge("dense oracle capped at " + std::to_string(kDenseCap) +
                   " qubits, got " + std::to_string(n));
}

// psi' = P|psi> for a signed Hermitian Pauli P.
std::vector<cplx> pauli_apply(const PauliString& p,
                              const std::vector<cplx>& v) {
  std::size_t dim = v.size();
  std::size_t flip = 0;
  for (int q = 0; q < p.n; ++q)
    if (p.x_bits[q]) flip |= std::size_t{1} << q;
  std::vector<cplx> out(dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    cplx factor = p.sign < 0 ? cplx(-1, 0) : cplx(1, 0);
    std::size_t src = idx ^ flip;  // out[idx] gets amplitude from src
    for (int q = 0; q < p.n; ++q) {
      bool src_bit = (src >> q) & 1;
      if (p.x_bits[q] && p.z_bits[q]) {
        // Y|b> = i(-1)^b |b^1>
        factor *= src_bit ? cplx(0, -1) : cplx(0, 1);
      } else if (p.z_bits[q]) {
        if (src_bit) factor = -factor;
      }
    }
    out[idx] = factor * v[src];
  }
  return out;
}

}  // namespace

DenseState DenseState::zero_state(int n) {
  check_cap(n);
  DenseState s;
  s.n = n;
  s.amplitudes.assign(std::size_t{1} << n, cplx(0, 0));
  s.amplitudes[0] = cplx(1, 0);
  return s;
}

DenseState DenseState::plus_state(int n) {
  check_cap(n);
  DenseState s;
  s.n = n;
  double a = 1.0 / std::sqrt(static_cast<double>(std::size_t{1} << n));
  s.amplitudes.assign(std::size_t{1} << n, cplx(a, 0));
  return s;
}

DenseState DenseState::graph_state(int n, const std::vector<Edge>& edges) {
  DenseState s = plus_state(n);
  for (auto [a, b] : edges) s.apply_cz(a - 1, b - 1);
  return s;
}

DenseState DenseState::graph_state(const ColoredGraph& g) {
  return graph_state(g.n, g.edges);
}

void DenseState::apply_cz(int a, int b) {
  std::size_t ma = std::size_t{1} << a, mb = std::size_t{1} << b;
  for (std::size_t idx = 0; idx < amplitudes.size(); ++idx)
    if ((idx & ma) && (idx & mb)) amplitudes[idx] = -amplitudes[idx];
}

void DenseState::apply_pauli(const PauliString& p) {
  if (p.n != n) throw InvalidParams("pauli size mismatch");
  amplitudes = pauli_apply(p, amplitudes);
}

void DenseState::project(const PauliString& p, int eigenvalue) {
  auto pv = pauli_apply(p, amplitudes);
  double s = eigenvalue < 0 ? -0.5 : 0.5;
  for (std::size_t i = 0; i < amplitudes.size(); ++i)
    amplitudes[i] = 0.5 * amplitudes[i] + s * pv[i];
}

std::complex<double> DenseState::inner(const DenseState& other) const {
  cplx acc(0, 0);
  for (std::size_t i = 0; i < amplitudes.size(); ++i)
    acc += std::conj(amplitudes[i]) * other.amplitudes[i];
  return acc;
}

double DenseState::norm() const {
  double acc = 0;
  for (const auto& a : amplitudes) acc += std::norm(a);
  return std::sqrt(acc);
}

void DenseState::normalize() {
  double nm = norm();
  if (nm == 0) throw InvalidParams("cannot normalize zero vector");
  for (auto& a : amplitudes) a /= nm;
}

int DenseState::measure(int q, Basis basis, Rng& rng) {
  PauliString op = PauliString::single(n, q, basis == Basis::X ? 'X' : 'Z');
  DenseState plus = *this;
  plus.project(op, +1);
  double p_plus = plus.norm();
  p_plus *= p_plus;
  int outcome;
  if (p_plus > 1.0 - 1e-12) {
    outcome = +1;
  } else if (p_plus < 1e-12) {
    outcome = -1;
  } else {
    outcome = rng.next_double() < p_plus ? +1 : -1;
  }
  if (outcome == +1) {
    amplitudes = std::move(plus.amplitudes);
  } else {
    project(op, -1);
  }
  normalize();
  return outcome;
}

DenseState to_dense(const StabilizerTableau& t) {
  int n = t.num_qubits();
  check_cap(n);
  std::vector<PauliString> gens;
  gens.reserve(n);
  for (int i = 0; i < n; ++i) gens.push_back(t.stabilizer(i));

  // P = prod (I + g_i)/2 has rank one; P|b> is either zero or the state.
  std::size_t dim = std::size_t{1} << n;
  for (std::size_t b = 0; b < dim; ++b) {
    DenseState s;
    s.n = n;
    s.amplitudes.assign(dim, cplx(0, 0));
    s.amplitudes[b] = cplx(1, 0);
    for (const auto& g : gens) s.project(g, +1);
    if (s.norm() > 1e-9) {
      s.normalize();
      // fix global phase: first nonzero amplitude real positive
      for (auto& a : s.amplitudes) {
        if (std::abs(a) > 1e-12) {
          cplx phase = a / std::abs(a);
          for (auto& b2 : s.amplitudes) b2 /= phase;
          break;
        }
      }
      return s;
    }
  }
  throw Error("stabilizer projector annihilated every basis state");
}

double fidelity_oracle(const DenseState& psi, const ColoredGraph& g) {
  check_cap(psi.n);
  DenseState target = DenseState::graph_state(g);
  if (target.n != psi.n) throw InvalidParams("qubit count mismatch");
  return std::norm(target.inner(psi));
}

double fidelity_oracle(const StabilizerTableau& t, const ColoredGraph& g) {
  return fidelity_oracle(to_dense(t), g);
}

double fidelity_oracle(const DenseEnsemble& rho, const ColoredGraph& g) {
  double acc = 0;
  for (const auto& [p, psi] : rho) acc += p * fidelity_oracle(psi, g);
  return acc;
}

}  // namespace graphcert
