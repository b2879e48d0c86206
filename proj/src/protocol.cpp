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

#include "graphcert/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "graphcert/dense.hpp"
#include "graphcert/error.hpp"

namespace graphcert {

namespace {

// Named RNG substreams of a protocol run.
enum Stream : std::uint64_t {
  kBob = 1,
  kHop1 = 2,
  kCharlie = 3,
  kHop2 = 4,
  kAlice = 5,
  kPickArbiter = 6,
  kHop3 = 7,
  kArbiter = 8,
};

std::vector<Edge> perturb_edges(const ColoredGraph& g, int delta) {
  std::vector<Edge> edges = g.edges;
  if (delta >= 0) {
    std::set<Edge> have(edges.begin(), edges.end());
    int to_add = delta;
    for (int a = 1; a <= g.n && to_add > 0; ++a)
      for (int b = a + 1; b <= g.n && to_add > 0; ++b)
        if (!have.count({a, b})) {
          edges.emplace_back(a, b);
          --to_add;
        }
    if (to_add > 0)
      throw InvalidParams("wrong_graph delta exceeds available non-edges");
  } else {
    if (static_cast<int>(edges.size()) < -delta)
      throw InvalidParams("wrong_graph delta removes more edges than exist");
    edges.resize(edges.size() + delta);
  }
  return edges;
}

void apply_iid_pauli(StabilizerTableau& reg, const AdversaryStrategy& s,
                     Rng& rng) {
  int n = reg.num_qubits();
  for (int q = 0; q < n; ++q) {
    if (s.vertex != 0 && q != s.vertex - 1) continue;
    if (!rng.bernoulli(s.q)) continue;
    char letter = 'Z';
    switch (s.error_type) {
      case PauliErrorType::X: letter = 'X'; break;
      case PauliErrorType::Z: letter = 'Z'; break;
      case PauliErrorType::depolarizing: {
        static const char kPaulis[3] = {'X', 'Y', 'Z'};
        letter = kPaulis[rng.below(3)];
        break;
      }
    }
    reg.apply_pauli(PauliString::single(n, q, letter));
  }
}

StabilizerTableau prepare_one(StrategyKind kind, const AdversaryStrategy& s,
                              const ColoredGraph& g, Rng& rng) {
  switch (kind) {
    case StrategyKind::honest:
      return StabilizerTableau::graph_state(g);
    case StrategyKind::iid_pauli: {
      StabilizerTableau reg = StabilizerTableau::graph_state(g);
      apply_iid_pauli(reg, s, rng);
      return reg;
    }
    case StrategyKind::wrong_graph:
      return StabilizerTableau::graph_state(g.n, perturb_edges(g, s.edge_delta));
    case StrategyKind::product_plus:
      return StabilizerTableau::graph_state(g.n, {});
    case StrategyKind::product_zero:
      return StabilizerTableau(g.n);
    case StrategyKind::mixed_batch:
      throw InvalidParams("mixed_batch cannot nest");
  }
  throw InvalidParams("unknown strategy kind");
}

}  // namespace

std::vector<StabilizerTableau> bob_prepare(const AdversaryStrategy& strategy,
                                           const ColoredGraph& g,
                                           long long count, Rng& rng) {
  std::vector<StabilizerTableau> batch;
  batch.reserve(static_cast<std::size_t>(count));
  std::vector<bool> bad(static_cast<std::size_t>(count), false);
  if (strategy.kind == StrategyKind::mixed_batch) {
    auto n_bad = static_cast<std::size_t>(
        std::floor(strategy.fraction_bad * static_cast<double>(count)));
    for (std::size_t idx : rng.sample_without_replacement(
             static_cast<std::size_t>(count), n_bad))
      bad[idx] = true;
  }
  for (long long i = 0; i < count; ++i) {
    Rng copy_rng = rng.child(static_cast<std::uint64_t>(i) +
                             strategy.seed_offset);
    StrategyKind kind = strategy.kind == StrategyKind::mixed_batch
                            ? (bad[static_cast<std::size_t>(i)]
                                   ? strategy.bad_kind
                                   : StrategyKind::honest)
                            : strategy.kind;
    batch.push_back(prepare_one(kind, strategy, g, copy_rng));
  }
  return batch;
}

CharlieSplit charlie_split_and_sample(std::vector<StabilizerTableau> batch,
                                      long long K, Rng& rng) {
  if (static_cast<long long>(batch.size()) != 5 * K)
    throw WrongBatchSize("Charlie expects 5K registers");
  auto kept_idx = rng.sample_without_replacement(batch.size(),
                                                 static_cast<std::size_t>(2 * K));
  std::vector<bool> keep(batch.size(), false);
  for (std::size_t idx : kept_idx) keep[idx] = true;
  CharlieSplit split;
  split.kept.reserve(static_cast<std::size_t>(2 * K));
  split.forwarded.reserve(static_cast<std::size_t>(3 * K));
  for (std::size_t i = 0; i < batch.size(); ++i)
    (keep[i] ? split.kept : split.forwarded).push_back(std::move(batch[i]));
  return split;
}

ClientResult alice_verify_and_compute(std::vector<StabilizerTableau> forwarded,
                                      const ColoredGraph& g,
                                      const ProtocolPlan& plan, Rng& rng,
                                      double c_override) {
  if (static_cast<long long>(forwarded.size()) != 3 * plan.K)
    throw WrongBatchSize("Alice expects 3K registers");
  Rng select_rng = rng.child(0);
  Rng verify_rng = rng.child(1);
  Rng compute_rng = rng.child(2);

  auto verify_idx = select_rng.sample_without_replacement(
      forwarded.size(), static_cast<std::size_t>(2 * plan.K));
  std::vector<bool> in_verify(forwarded.size(), false);
  for (std::size_t idx : verify_idx) in_verify[idx] = true;

  std::vector<StabilizerTableau> verify_batch;
  verify_batch.reserve(verify_idx.size());
  std::vector<std::size_t> remaining;
  for (std::size_t i = 0; i < forwarded.size(); ++i) {
    if (in_verify[i])
      verify_batch.push_back(std::move(forwarded[i]));
    else
      remaining.push_back(i);
  }
  // moved-from registers in `forwarded` are only touched again via `remaining`
  double C = c_override >= 0 ? c_override : plan.C_client;
  ClientResult result;
  result.verdict = run_verification(verify_batch, g, C, verify_rng);
  if (result.verdict.accepted) {
    std::size_t pick = remaining[compute_rng.below(remaining.size())];
    result.computation_register = pick;
    StabilizerTableau& reg = forwarded[pick];
    for (int q = 0; q < reg.num_qubits(); ++q)
      result.computation_outcomes.push_back(
          reg.measure(q, Basis::X, compute_rng));
    // the other K - 1 registers are discarded
  }
  return result;
}

ArbiterResult arbitrate(std::vector<StabilizerTableau> kept,
                        const ColoredGraph& g, const ProtocolPlan& plan,
                        Rng& rng, double c_override, bool dispute_raised) {
  if (!dispute_raised) throw NoDispute("no dispute was raised");
  if (static_cast<long long>(kept.size()) != 2 * plan.K)
    throw WrongBatchSize("arbiter expects Charlie's 2K registers");
  double C = c_override >= 0 ? c_override : plan.C_arbiter;
  ArbiterResult result;
  result.verdict = run_verification(kept, g, C, rng);
  result.blame = result.verdict.accepted ? Blame::alice1 : Blame::bob;
  return result;
}

double strategy_fidelity(const AdversaryStrategy& strategy,
                         const ColoredGraph& g) {
  switch (strategy.kind) {
    case StrategyKind::honest:
      return 1.0;
    case StrategyKind::product_zero: {
      DenseState zero = DenseState::zero_state(g.n);
      return fidelity_oracle(zero, g);
    }
    case StrategyKind::product_plus: {
      DenseState plus = DenseState::plus_state(g.n);
      return fidelity_oracle(plus, g);
    }
    case StrategyKind::wrong_graph: {
      DenseState wrong =
          DenseState::graph_state(g.n, perturb_edges(g, strategy.edge_delta));
      return fidelity_oracle(wrong, g);
    }
    case StrategyKind::mixed_batch: {
      if (strategy.bad_kind == StrategyKind::mixed_batch)
        throw InvalidParams("mixed_batch cannot nest");
      AdversaryStrategy bad = strategy;
      bad.kind = strategy.bad_kind;
      return (1.0 - strategy.fraction_bad) +
             strategy.fraction_bad * strategy_fidelity(bad, g);
    }
    case StrategyKind::iid_pauli: {
      // F = sum over error patterns P of Pr(P) · |<G|P|G>|^2, and
      // |<G|P|G>| is 1 iff ±P stabilizes |G>, else 0.
      StabilizerTableau target = StabilizerTableau::graph_state(g);
      int n_sites = strategy.vertex != 0 ? 1 : g.n;
      if (n_sites > 12) throw TooLarge("pattern enumeration capped");
      std::vector<char> letters;
      if (strategy.error_type == PauliErrorType::X) letters = {'X'};
      else if (strategy.error_type == PauliErrorType::Z) letters = {'Z'};
      else letters = {'X', 'Y', 'Z'};
      double per_letter = strategy.q / static_cast<double>(letters.size());

      double total = 0;
      // iterate site assignments: 0 = no error, 1..letters.size() = letter
      std::vector<int> assign(static_cast<std::size_t>(n_sites), 0);
      for (;;) {
        PauliString p = PauliString::identity(g.n);
        double prob = 1.0;
        for (int s = 0; s < n_sites; ++s) {
          int qubit = strategy.vertex != 0 ? strategy.vertex - 1 : s;
          if (assign[static_cast<std::size_t>(s)] == 0) {
            prob *= 1.0 - strategy.q;
          } else {
            prob *= per_letter;
            char letter = letters[static_cast<std::size_t>(
                assign[static_cast<std::size_t>(s)] - 1)];
            PauliString site = PauliString::single(g.n, qubit, letter);
            // disjoint supports, no phase bookkeeping needed
            for (int q = 0; q < g.n; ++q) {
              p.x_bits[q] ^= site.x_bits[q];
              p.z_bits[q] ^= site.z_bits[q];
            }
          }
        }
        PauliString minus_p = p;
        minus_p.sign = -1;
        if (target.stabilizes(p) || target.stabilizes(minus_p)) total += prob;
        // next assignment
        int s = 0;
        while (s < n_sites) {
          if (++assign[static_cast<std::size_t>(s)] <=
              static_cast<int>(letters.size()))
            break;
          assign[static_cast<std::size_t>(s)] = 0;
          ++s;
        }
        if (s == n_sites) break;
      }
      return total;
    }
  }
  throw InvalidParams("unknown strategy kind");
}

namespace {

// Transmits a batch over one hop: optional trap insertion by the sender,
// i.i.d. bit-flip noise on every slot, trap check by the receiver.
void transmit(std::vector<StabilizerTableau>& batch,
              const ProtocolConfig& config, Rng hop_rng, TrapStats& stats,
              Counters& counters) {
  for (std::size_t i = 0; i < batch.size(); ++i) {
    Rng reg_rng = hop_rng.child(i);
    if (config.traps) {
      Rng insert_rng = reg_rng.child(0);
      Rng noise_rng = reg_rng.child(1);
      AugmentedRegister aug =
          insert_traps(std::move(batch[i]), *config.traps, insert_rng);
      std::vector<int> positions = aug.positions;  // shared out of band
      apply_channel(aug, ChannelKind::bit_flip, config.noise_p, noise_rng);
      TrapCheck check = check_traps(aug, *config.traps, positions);
      stats.transmissions += 1;
      stats.accepted += check.accept ? 1 : 0;
      stats.flipped_total += check.flipped;
      counters.qubits_transmitted += aug.reg.num_qubits() + config.traps->k;
      counters.trap_qubits_transmitted += config.traps->k;
      batch[i] = std::move(aug.reg);
    } else {
      apply_channel(batch[i], ChannelKind::bit_flip, config.noise_p, reg_rng);
      counters.qubits_transmitted += batch[i].num_qubits();
    }
  }
}

double auto_lambda(int n, Role role, double requested) {
  if (requested != 0) return requested;
  auto [lo, hi] = lambda_range(n, role);
  return std::clamp(1.0, lo, hi);
}

}  // namespace

ProtocolTranscript run_protocol(const ProtocolConfig& config) {
  if (config.graph.n < 6) throw TooSmallN("protocol requires n >= 6");
  if (config.client_pool_size < 2)
    throw InvalidConfig("client pool must have l >= 2");
  if (config.traps) validate_trap_config(*config.traps);

  ProtocolTranscript tr;
  tr.config = config;
  tr.plan = plan_parameters(config.graph.n);
  Rng master(config.master_seed);
  const ColoredGraph& g = config.graph;
  long long K = tr.plan.K;

  tr.steps.push_back({"request", "Alice1 requests an n=" +
                                     std::to_string(g.n) + " graph state"});

  // Step 2: preparation and hop 1 (Bob -> Charlie).
  Rng bob_rng = master.child(kBob);
  auto batch = bob_prepare(config.strategy, g, tr.plan.copies, bob_rng);
  tr.counters.copies_prepared = tr.plan.copies;
  tr.steps.push_back({"prepare", std::to_string(tr.plan.copies) + " copies"});
  transmit(batch, config, master.child(kHop1), tr.trap_stats[0], tr.counters);
  tr.steps.push_back({"transfer", "Bob -> Charlie"});

  // Step 3: Charlie keeps 2K, forwards 3K over hop 2.
  Rng charlie_rng = master.child(kCharlie);
  CharlieSplit split =
      charlie_split_and_sample(std::move(batch), K, charlie_rng);
  transmit(split.forwarded, config, master.child(kHop2), tr.trap_stats[1],
           tr.counters);
  tr.steps.push_back({"transfer", "Charlie -> Alice1"});

  // Steps 4-6: client verification and computation stub.
  Rng alice_rng = master.child(kAlice);
  ClientResult client = alice_verify_and_compute(
      std::move(split.forwarded), g, tr.plan, alice_rng, config.c_override);
  tr.client_verdict = client.verdict;
  tr.counters.measurements_client_verification = 2 * K * g.n;
  tr.steps.push_back({"verification",
                      "client: K1=" + std::to_string(client.verdict.K1) +
                          " K2=" + std::to_string(client.verdict.K2) +
                          (client.verdict.accepted ? " accept" : " reject")});
  if (client.verdict.accepted) {
    tr.computation_register = client.computation_register;
    tr.computation_outcomes = client.computation_outcomes;
    tr.counters.measurements_client_computation = g.n;
    tr.steps.push_back({"computation", "stub X-basis pass"});
    double lam = auto_lambda(g.n, Role::client, config.lambda_client);
    tr.client_certificate = client_certificate(
        g.n, K, client.verdict.K1 + client.verdict.K2, lam);
  } else {
    tr.blame = Blame::bob;  // provisional, pending arbitration
  }

  // Steps 7-8: dispute and arbitration.
  bool dispute = config.dispute_policy == DisputePolicy::always ||
                 (config.dispute_policy == DisputePolicy::auto_if_reject &&
                  !client.verdict.accepted);
  if (dispute) {
    Rng pick_rng = master.child(kPickArbiter);
    int t = 2 + static_cast<int>(pick_rng.below(
                    static_cast<std::uint64_t>(config.client_pool_size - 1)));
    while (config.arbiter_refusal_prob > 0 &&
           pick_rng.bernoulli(config.arbiter_refusal_prob))
      t = 2 + static_cast<int>(pick_rng.below(
                  static_cast<std::uint64_t>(config.client_pool_size - 1)));
    tr.arbiter_id = t;
    tr.steps.push_back({"dispute", "arbiter Alice" + std::to_string(t)});

    transmit(split.kept, config, master.child(kHop3), tr.trap_stats[2],
             tr.counters);
    tr.steps.push_back({"transfer", "Charlie -> Alice_t"});
    Rng arbiter_rng = master.child(kArbiter);
    ArbiterResult arb = arbitrate(std::move(split.kept), g, tr.plan,
                                  arbiter_rng, config.c_override);
    tr.arbiter_verdict = arb.verdict;
    tr.counters.measurements_arbiter = 2 * K * g.n;
    tr.blame = arb.blame;
    tr.steps.push_back(
        {"arbitration", "K1=" + std::to_string(arb.verdict.K1) +
                            " K2=" + std::to_string(arb.verdict.K2) +
                            (arb.verdict.accepted ? " accept" : " reject")});
    if (arb.verdict.accepted) {
      double lam = auto_lambda(g.n, Role::arbiter, config.lambda_arbiter);
      tr.arbiter_certificate =
          arbiter_certificate(g.n, K, arb.verdict.K1 + arb.verdict.K2, lam,
                              config.variant);
    }
  } else if (config.dispute_policy == DisputePolicy::never &&
             !client.verdict.accepted) {
    tr.blame = Blame::none;  // nobody arbitrated, nobody is blamed
    tr.steps.push_back({"dispute", "suppressed by policy"});
  }
  return tr;
}

}  // namespace graphcert
