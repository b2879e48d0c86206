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

#include "graphcert/witness.hpp"

#include <algorithm>

#include "graphcert/error.hpp"

namespace graphcert {

MeasurementSetting setting_for_color(const ColoredGraph& g, int j) {
  if (j != 1 && j != 2) throw InvalidParams("color index must be 1 or 2");
  MeasurementSetting s;
  s.color = j;
  s.basis_map.assign(g.n, Basis::Z);
  for (int v : g.color_class(j)) s.basis_map[v - 1] = Basis::X;
  return s;
}

SettingOutcome measure_setting(StabilizerTableau& state,
                               const MeasurementSetting& setting, Rng& rng) {
  if (static_cast<int>(setting.basis_map.size()) != state.num_qubits())
    throw DomainMismatch("setting size does not match register");
  SettingOutcome out;
  out.color = setting.color;
  for (int v = 1; v <= state.num_qubits(); ++v) {
    Basis b = setting.basis_map[v - 1];
    (b == Basis::X ? out.x : out.z)[v] = state.measure(v - 1, b, rng);
  }
  return out;
}

SettingOutcome measure_setting(DenseState& state,
                               const MeasurementSetting& setting, Rng& rng) {
  if (static_cast<int>(setting.basis_map.size()) != state.n)
    throw DomainMismatch("setting size does not match register");
  SettingOutcome out;
  out.color = setting.color;
  for (int v = 1; v <= state.n; ++v) {
    Basis b = setting.basis_map[v - 1];
    (b == Basis::X ? out.x : out.z)[v] = state.measure(v - 1, b, rng);
  }
  return out;
}

int compute_Mj(const ColoredGraph& g, const SettingOutcome& outcome) {
  const std::set<int>& sj = g.color_class(outcome.color);
  if (outcome.x.size() != sj.size() ||
      outcome.x.size() + outcome.z.size() != static_cast<std::size_t>(g.n))
    throw DomainMismatch("outcome domains do not match the partition");
  for (const auto& [v, _] : outcome.x)
    if (!sj.count(v)) throw DomainMismatch("x outcome outside S_j");
  for (int i : sj) {
    int factor = outcome.x.at(i);
    for (int k : neighbors(g, i)) {
      auto it = outcome.z.find(k);
      if (it == outcome.z.end())
        throw DomainMismatch("missing z outcome for vertex " +
                             std::to_string(k));
      factor *= it->second;
    }
    if (factor != +1) return 0;
  }
  return 1;
}

namespace {

// Tr(∏_{i∈S_j}(g_i+I)/2 |psi><psi|) = || P_j |psi> ||^2.
double projector_expectation(const DenseState& psi, const ColoredGraph& g,
                             int j) {
  DenseState work = psi;
  StabilizerTableau target = StabilizerTableau::graph_state(g);
  for (int i : g.color_class(j)) work.project(target.stabilizer(i - 1), +1);
  double nm = work.norm();
  return nm * nm;
}

}  // namespace

double witness_expectation(const DenseState& psi, const ColoredGraph& g) {
  if (psi.n > kDenseCap) throw TooLarge("state above oracle cap");
  return 3.0 - 2.0 * (projector_expectation(psi, g, 1) +
                      projector_expectation(psi, g, 2));
}

double witness_expectation(const DenseEnsemble& rho, const ColoredGraph& g) {
  double acc = 0;
  for (const auto& [p, psi] : rho) acc += p * witness_expectation(psi, g);
  return acc;
}

double fidelity_from_witness(double trW) { return 0.5 - 0.5 * trW; }

VerificationVerdict run_verification(std::vector<StabilizerTableau>& registers,
                                     const ColoredGraph& g, double C,
                                     Rng& rng) {
  std::size_t total = registers.size();
  if (total < 2 || total % 2 != 0)
    throw OddBatch("verification needs an even batch of >= 2 registers");
  std::size_t K = total / 2;
  if (C < 0 || C > static_cast<double>(total))
    throw ThresholdOutOfRange("C must lie in [0, 2K]");

  VerificationVerdict verdict;
  verdict.C = C;
  verdict.group1 = rng.sample_without_replacement(total, K);
  std::vector<bool> in_group1(total, false);
  for (std::size_t idx : verdict.group1) in_group1[idx] = true;
  for (std::size_t idx = 0; idx < total; ++idx)
    if (!in_group1[idx]) verdict.group2.push_back(idx);

  MeasurementSetting settings[2] = {setting_for_color(g, 1),
                                    setting_for_color(g, 2)};
  for (int j = 1; j <= 2; ++j) {
    int failures = 0;
    for (std::size_t idx : (j == 1 ? verdict.group1 : verdict.group2)) {
      Rng sub = rng.child(idx);
      SettingOutcome out = measure_setting(registers[idx], settings[j - 1], sub);
      failures += 1 - compute_Mj(g, out);
    }
    (j == 1 ? verdict.K1 : verdict.K2) = failures;
  }
  verdict.accepted = verdict.K1 + verdict.K2 <= C;
  return verdict;
}

}  // namespace graphcert
