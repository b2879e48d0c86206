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

#ifndef GRAPHCERT_WITNESS_HPP
#define GRAPHCERT_WITNESS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "graphcert/dense.hpp"
#include "graphcert/graph.hpp"
#include "graphcert/rng.hpp"
#include "graphcert/tableau.hpp"

namespace graphcert {

/// Per-qubit basis assignment realizing the observable ∏_{i∈S_j} g_i with n
/// local measurements: X on the qubits of S_j, Z on the complement.
struct MeasurementSetting {
  int color = 1;                  // j ∈ {1, 2}
  std::vector<Basis> basis_map;   // index v-1 → basis for vertex v
};

/// Outcomes of one setting: ±1 per vertex, X results for S_j and Z results
/// for the complement.
struct SettingOutcome {
  int color = 1;
  std::map<int, int> x;  // vertex → ±1, domain S_j
  std::map<int, int> z;  // vertex → ±1, domain complement of S_j
};

/// Algorithm-1 output.
struct VerificationVerdict {
  int K1 = 0;
  int K2 = 0;
  double C = 0;
  bool accepted = false;
  // register indices (into the input batch) forming each group,
  // in selection order — recorded for auditability
  std::vector<std::size_t> group1;
  std::vector<std::size_t> group2;
};

/// Basis map for color class j. j must be 1 or 2.
MeasurementSetting setting_for_color(const ColoredGraph& g, int j);

/// Measures every qubit in ascending vertex order, consuming the register.
SettingOutcome measure_setting(StabilizerTableau& state,
                               const MeasurementSetting& setting, Rng& rng);
SettingOutcome measure_setting(DenseState& state,
                               const MeasurementSetting& setting, Rng& rng);

/// M_j = ∏_{i∈S_j} (x_i ∏_{k∈N(i)} z_k + 1)/2 ∈ {0, 1}.
/// Throws DomainMismatch if the outcome domains do not match g's partition.
int compute_Mj(const ColoredGraph& g, const SettingOutcome& outcome);

/// Exact Tr(W⁽²⁾ρ) with W⁽²⁾ = 3I − 2[∏_{S₁}(g_i+I)/2 + ∏_{S₂}(g_i+I)/2],
/// via the dense oracle. Throws TooLarge above the oracle cap.
double witness_expectation(const DenseState& psi, const ColoredGraph& g);
double witness_expectation(const DenseEnsemble& rho, const ColoredGraph& g);

/// Fidelity lower bound F ≥ 1/2 − Tr(W⁽²⁾ρ)/2.
double fidelity_from_witness(double trW);

/// Verification Algorithm: splits 2K registers into two random groups of K,
/// measures setting j on group j, counts K_j = #{M_j = 0}, accepts iff
/// K₁+K₂ ≤ C. All registers are consumed. Register k is measured with the
/// RNG substream rng.child(k), so per-register work is order-independent.
/// Throws OddBatch / ThresholdOutOfRange.
VerificationVerdict run_verification(std::vector<StabilizerTableau>& registers,
                                     const ColoredGraph& g, double C,
                                     Rng& rng);

}  // namespace graphcert

#endif  // GRAPHCERT_WITNESS_HPP
