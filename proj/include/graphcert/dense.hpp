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

#ifndef GRAPHCERT_DENSE_HPP
#define GRAPHCERT_DENSE_HPP

#include <complex>
#include <utility>
#include <vector>

#include "graphcert/graph.hpp"
#include "graphcert/pauli.hpp"
#include "graphcert/rng.hpp"
#include "graphcert/tableau.hpp"

namespace graphcert {

/// Hard cap on oracle size: 2^12 = 4096 amplitudes.
inline constexpr int kDenseCap = 12;

/// Dense statevector oracle for small n. Basis index bit q (LSB = qubit 0)
/// holds the computational value of qubit q.
struct DenseState {
  int n = 0;
  std::vector<std::complex<double>> amplitudes;

  static DenseState zero_state(int n);
  static DenseState plus_state(int n);
  static DenseState graph_state(const ColoredGraph& g);
  static DenseState graph_state(int n, const std::vector<Edge>& edges);

  void apply_cz(int a, int b);
  void apply_pauli(const PauliString& p);

  /// Projects onto the +1 (or -1) eigenspace of p without normalizing;
  /// the resulting squared norm is the outcome probability.
  void project(const PauliString& p, int eigenvalue);

  std::complex<double> inner(const DenseState& other) const;
  double norm() const;
  void normalize();

  /// Born-rule measurement with collapse.
  int measure(int q, Basis basis, Rng& rng);
};

/// Mixed state as an explicit ensemble of pure dense states.
using DenseEnsemble = std::vector<std::pair<double, DenseState>>;

/// Converts a tableau to the unique joint +1 eigenstate of its stabilizer
/// group, global phase fixed so the first nonzero amplitude is real positive.
/// Throws TooLarge for n > kDenseCap.
DenseState to_dense(const StabilizerTableau& t);

/// Exact <G|rho|G> for pure states or explicit ensembles.
double fidelity_oracle(const DenseState& psi, const ColoredGraph& g);
double fidelity_oracle(const StabilizerTableau& t, const ColoredGraph& g);
double fidelity_oracle(const DenseEnsemble& rho, const ColoredGraph& g);

}  // namespace graphcert

#endif  // GRAPHCERT_DENSE_HPP
