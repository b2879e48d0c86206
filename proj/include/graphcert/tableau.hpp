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

#ifndef GRAPHCERT_TABLEAU_HPP
#define GRAPHCERT_TABLEAU_HPP

#include <string>
#include <vector>

#include "graphcert/graph.hpp"
#include "graphcert/pauli.hpp"
#include "graphcert/rng.hpp"

namespace graphcert {

enum class Basis { X, Z };

/// n-qubit stabilizer state with full symplectic bookkeeping: n destabilizer
/// rows followed by n stabilizer rows, phases tracked mod 4 internally but
/// always real (0 or 2) for the states representable here. Single-qubit
/// measurement is worst-case O(n^2).
///
/// Qubits are 0-indexed; graph vertices map to qubits as vertex - 1.
class StabilizerTableau {
 public:
  /// |0...0>.
  explicit StabilizerTableau(int n);

  /// Graph state |G> = (∏ CZ_ij) |+>^n. Stabilizer generators come out as
  /// exactly X_i ∏_{k∈N(i)} Z_k with +1 phases.
  static StabilizerTableau graph_state(const ColoredGraph& g);
  static StabilizerTableau graph_state(int n, const std::vector<Edge>& edges);

  int num_qubits() const { return n_; }

  void apply_h(int q);
  void apply_cx(int control, int target);
  void apply_cz(int a, int b);

  /// Conjugates every row by the (sign-stripped) Pauli: rows anticommuting
  /// with p flip phase. Involution.
  void apply_pauli(const PauliString& p);

  /// Measures qubit q in the given basis, collapsing the state.
  /// Returns +1 or -1. Deterministic outcomes never consume randomness.
  int measure(int q, Basis basis, Rng& rng);

  /// True iff the outcome of measuring q in `basis` is predetermined.
  bool is_deterministic(int q, Basis basis) const;

  /// i-th stabilizer group generator (0-indexed), sign included.
  PauliString stabilizer(int i) const;

  /// True iff p (with its sign) lies in the stabilizer group.
  bool stabilizes(const PauliString& p) const;

  /// Debug dump: one generator per line as ±{I,X,Y,Z} symbols.
  std::string dump() const;

 private:
  int row_phase_after_multiply(int dst, int src) const;
  void rowsum(int dst, int src);

  int n_;
  // rows 0..n-1 destabilizers, n..2n-1 stabilizers
  std::vector<std::vector<std::uint8_t>> x_, z_;
  std::vector<std::uint8_t> r_;  // phase exponent mod 4 (i^r); always 0 or 2
};

}  // namespace graphcert

#endif  // GRAPHCERT_TABLEAU_HPP
