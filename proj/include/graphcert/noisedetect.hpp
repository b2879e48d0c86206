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

#ifndef GRAPHCERT_NOISEDETECT_HPP
#define GRAPHCERT_NOISEDETECT_HPP

#include <cstdint>
#include <vector>

#include "graphcert/rng.hpp"
#include "graphcert/tableau.hpp"

namespace graphcert {

enum class TrapState : std::uint8_t {
  zero,  // |0>, detects bit flips (Z-basis check)
  plus,  // |+>, detects phase flips (X-basis check)
};

enum class ChannelKind : std::uint8_t { bit_flip, phase_flip };

struct TrapConfig {
  int k = 0;                  // traps per register, >= 1
  TrapState state = TrapState::zero;
  double p_th = 0;            // noise threshold, in (0, 1)
  double confidence = 0.99;
};

/// An n-qubit register interleaved with k agreed trap qubits. Traps are
/// unentangled with the register by construction, so they are carried as
/// classical flip flags; `positions` lists which of the n + k transmission
/// slots hold traps, in ascending order. The position map is shared with the
/// receiver out of band.
struct AugmentedRegister {
  StabilizerTableau reg;
  std::vector<int> positions;        // trap slots among [0, n + k)
  std::vector<std::uint8_t> flipped; // per trap, disturbed vs agreed state
  TrapState state = TrapState::zero;

  int total_qubits() const {
    return reg.num_qubits() + static_cast<int>(positions.size());
  }
};

struct TrapCheck {
  int flipped = 0;  // r
  bool accept = false;
};

/// Validates cfg: k >= 1, p_th in (0, 1), confidence in (0, 1).
void validate_trap_config(const TrapConfig& cfg);

/// Inserts cfg.k traps at RNG-chosen slots (uniform without replacement
/// among n + k). Throws InvalidConfig.
AugmentedRegister insert_traps(StabilizerTableau reg, const TrapConfig& cfg,
                               Rng& rng);

/// Largest r compatible with Pr(p ≤ p_th) ≥ confidence:
/// r_th = k·p_th − √(k·ln(1/(1−confidence))/2).
/// Throws Infeasible when negative (k too small for the confidence asked).
double trap_threshold(const TrapConfig& cfg);

/// I.i.d. per-qubit channel over all n + k slots in position order. Graph
/// qubits get the corresponding Pauli; traps flip when the channel error
/// disturbs their agreed state (X for |0> traps, Z for |+> traps).
void apply_channel(AugmentedRegister& aug, ChannelKind kind, double p,
                   Rng& rng);
void apply_channel(StabilizerTableau& reg, ChannelKind kind, double p,
                   Rng& rng);

/// Measures every trap in its check basis, counts disturbed traps, accepts
/// iff r ≤ trap_threshold(cfg). Trap data is cleared afterwards; the graph
/// register remains in `aug.reg`. `positions` must match the sender's map.
TrapCheck check_traps(AugmentedRegister& aug, const TrapConfig& cfg,
                      const std::vector<int>& positions);

}  // namespace graphcert

#endif  // GRAPHCERT_NOISEDETECT_HPP
