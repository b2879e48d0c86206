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

#include "graphcert/noisedetect.hpp"

#include <algorithm>
#include <cmath>

#include "graphcert/error.hpp"

namespace graphcert {

void validate_trap_config(const TrapConfig& cfg) {
  if (cfg.k < 1) throw InvalidConfig("trap count k must be >= 1");
  if (!(cfg.p_th > 0 && cfg.p_th < 1))
    throw InvalidConfig("p_th must lie in (0, 1)");
  if (!(cfg.confidence > 0 && cfg.confidence < 1))
    throw InvalidConfig("confidence must lie in (0, 1)");
}

AugmentedRegister insert_traps(StabilizerTableau reg, const TrapConfig& cfg,
                               Rng& rng) {
  validate_trap_config(cfg);
  int total = reg.num_qubits() + cfg.k;
  auto slots = rng.sample_without_replacement(static_cast<std::size_t>(total),
                                              static_cast<std::size_t>(cfg.k));
  AugmentedRegister aug{std::move(reg), {}, {}, cfg.state};
  aug.positions.reserve(cfg.k);
  for (std::size_t s : slots) aug.positions.push_back(static_cast<int>(s));
  std::sort(aug.positions.begin(), aug.positions.end());
  aug.flipped.assign(cfg.k, 0);
  return aug;
}

double trap_threshold(const TrapConfig& cfg) {
  validate_trap_config(cfg);
  double k = static_cast<double>(cfg.k);
  double r_th =
      k * cfg.p_th - std::sqrt(k * std::log(1.0 / (1.0 - cfg.confidence)) / 2.0);
  if (r_th < 0)
    throw Infeasible("k too small for the requested confidence at this p_th");
  return r_th;
}

namespace {

bool disturbs_trap(ChannelKind kind, TrapState state) {
  // X moves |0> off its Z-check; Z moves |+> off its X-check.
  return (kind == ChannelKind::bit_flip && state == TrapState::zero) ||
         (kind == ChannelKind::phase_flip && state == TrapState::plus);
}

}  // namespace

void apply_channel(StabilizerTableau& reg, ChannelKind kind, double p,
                   Rng& rng) {
  char letter = kind == ChannelKind::bit_flip ? 'X' : 'Z';
  for (int q = 0; q < reg.num_qubits(); ++q)
    if (rng.bernoulli(p))
      reg.apply_pauli(PauliString::single(reg.num_qubits(), q, letter));
}

void apply_channel(AugmentedRegister& aug, ChannelKind kind, double p,
                   Rng& rng) {
  char letter = kind == ChannelKind::bit_flip ? 'X' : 'Z';
  int n_total = aug.total_qubits();
  std::size_t trap_cursor = 0;
  int graph_qubit = 0;
  for (int slot = 0; slot < n_total; ++slot) {
    bool is_trap = trap_cursor < aug.positions.size() &&
                   aug.positions[trap_cursor] == slot;
    bool error = rng.bernoulli(p);
    if (is_trap) {
      if (error && disturbs_trap(kind, aug.state))
        aug.flipped[trap_cursor] ^= 1;
      ++trap_cursor;
    } else {
      if (error)
        aug.reg.apply_pauli(
            PauliString::single(aug.reg.num_qubits(), graph_qubit, letter));
      ++graph_qubit;
    }
  }
}

TrapCheck check_traps(AugmentedRegister& aug, const TrapConfig& cfg,
                      const std::vector<int>& positions) {
  validate_trap_config(cfg);
  if (positions != aug.positions ||
      static_cast<int>(positions.size()) != cfg.k)
    throw PositionMismatch("trap position map disagrees with the sender's");
  TrapCheck check;
  for (std::uint8_t f : aug.flipped) check.flipped += f;
  check.accept = static_cast<double>(check.flipped) <= trap_threshold(cfg);
  aug.positions.clear();
  aug.flipped.clear();
  return check;
}

}  // namespace graphcert
