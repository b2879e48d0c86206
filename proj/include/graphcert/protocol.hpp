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

#ifndef GRAPHCERT_PROTOCOL_HPP
#define GRAPHCERT_PROTOCOL_HPP

#include <optional>
#include <string>
#include <vector>

#include "graphcert/bounds.hpp"
#include "graphcert/graph.hpp"
#include "graphcert/noisedetect.hpp"
#include "graphcert/rng.hpp"
#include "graphcert/tableau.hpp"
#include "graphcert/witness.hpp"

namespace graphcert {

enum class StrategyKind {
  honest,
  iid_pauli,
  wrong_graph,
  product_plus,
  product_zero,
  mixed_batch,
};

enum class PauliErrorType { X, Z, depolarizing };

/// Models of a dishonest (or noisy) server.
struct AdversaryStrategy {
  StrategyKind kind = StrategyKind::honest;
  // iid_pauli
  double q = 0;                                   // per-qubit error prob
  PauliErrorType error_type = PauliErrorType::Z;
  int vertex = 0;  // 0 = every qubit; else the single 1-indexed vertex hit
  // wrong_graph: >0 adds that many lexicographically-first non-edges,
  // <0 removes that many edges from the back of the edge list
  int edge_delta = 1;
  // mixed_batch
  double fraction_bad = 0;
  StrategyKind bad_kind = StrategyKind::product_zero;
  std::uint64_t seed_offset = 0;
};

enum class DisputePolicy { auto_if_reject, never, always };

struct ProtocolConfig {
  ColoredGraph graph;                   // n >= 6
  AdversaryStrategy strategy;
  double noise_p = 0;                   // per-qubit bit-flip prob per hop
  int client_pool_size = 2;             // l >= 2
  std::uint64_t master_seed = 0;
  DisputePolicy dispute_policy = DisputePolicy::auto_if_reject;
  std::optional<TrapConfig> traps;
  // certificate knobs; 0 = auto (1.0 clamped into the valid lambda range)
  double lambda_client = 0;
  double lambda_arbiter = 0;
  CertificateVariant variant = CertificateVariant::appendix;
  double c_override = -1;               // < 0: use the plan's thresholds
  double arbiter_refusal_prob = 0;      // redraw of t on refusal
};

enum class Blame { none, bob, alice1 };

struct TrapStats {
  long long transmissions = 0;
  long long accepted = 0;
  long long flipped_total = 0;
};

struct Counters {
  long long copies_prepared = 0;
  long long qubits_transmitted = 0;      // graph qubits + trap qubits
  long long trap_qubits_transmitted = 0;
  long long measurements_client_verification = 0;
  long long measurements_client_computation = 0;
  long long measurements_arbiter = 0;
};

struct StepEvent {
  std::string step;
  std::string detail;
};

struct ProtocolTranscript {
  ProtocolConfig config;
  ProtocolPlan plan;
  std::vector<StepEvent> steps;
  Counters counters;
  std::optional<VerificationVerdict> client_verdict;
  std::optional<VerificationVerdict> arbiter_verdict;
  std::optional<std::size_t> computation_register;  // index into Alice's 3K
  std::vector<int> computation_outcomes;            // X-basis stub results
  int arbiter_id = 0;                               // t in {2..l}, 0 if none
  Blame blame = Blame::none;
  std::optional<FidelityCertificate> client_certificate;
  std::optional<FidelityCertificate> arbiter_certificate;
  TrapStats trap_stats[3];  // hop 1 (Bob→Charlie), 2 (→Alice₁), 3 (→Aliceₜ)
};

/// Step 2: Bob prepares `count` n-qubit registers per his strategy.
std::vector<StabilizerTableau> bob_prepare(const AdversaryStrategy& strategy,
                                           const ColoredGraph& g,
                                           long long count, Rng& rng);

/// Step 3: Charlie keeps a uniform 2K-subset and forwards the other 3K in
/// original relative order. Throws WrongBatchSize unless batch size is 5K.
struct CharlieSplit {
  std::vector<StabilizerTableau> kept;       // 2K
  std::vector<StabilizerTableau> forwarded;  // 3K
};
CharlieSplit charlie_split_and_sample(std::vector<StabilizerTableau> batch,
                                      long long K, Rng& rng);

/// Steps 4-6: Alice₁ verifies 2K of the 3K with C = K/(2n) and, on accept,
/// consumes one of the remaining K for the computation stub (X-basis
/// measurement of every qubit). Throws WrongBatchSize.
struct ClientResult {
  VerificationVerdict verdict;
  std::optional<std::size_t> computation_register;
  std::vector<int> computation_outcomes;
};
ClientResult alice_verify_and_compute(std::vector<StabilizerTableau> forwarded,
                                      const ColoredGraph& g,
                                      const ProtocolPlan& plan, Rng& rng,
                                      double c_override = -1);

/// Steps 7-8: verification of Charlie's kept 2K with C = 3K/(4n);
/// accept → blame Alice₁, reject → blame Bob.
struct ArbiterResult {
  VerificationVerdict verdict;
  Blame blame = Blame::none;
};
ArbiterResult arbitrate(std::vector<StabilizerTableau> kept,
                        const ColoredGraph& g, const ProtocolPlan& plan,
                        Rng& rng, double c_override = -1,
                        bool dispute_raised = true);

/// Executes Steps 1-8. Deterministic given config (including master seed).
ProtocolTranscript run_protocol(const ProtocolConfig& config);

/// Exact ensemble fidelity <G|rho|G> of the per-copy state a strategy
/// produces (before channel noise), enumerated over error patterns.
/// Only defined for i.i.d.-per-copy strategies at oracle scale.
double strategy_fidelity(const AdversaryStrategy& strategy,
                         const ColoredGraph& g);

}  // namespace graphcert

#endif  // GRAPHCERT_PROTOCOL_HPP
