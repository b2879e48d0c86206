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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "graphcert/dense.hpp"
#include "graphcert/error.hpp"
#include "graphcert/protocol.hpp"
#include "graphcert/serialize.hpp"

using namespace graphcert;

namespace {

ColoredGraph cycle6() { return standard_graph(GraphKind::even_cycle, 6); }

ProtocolConfig base_config(std::uint64_t seed = 1) {
  ProtocolConfig cfg;
  cfg.graph = cycle6();
  cfg.master_seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("bob honest preparation is exact") {
  Rng rng(3);
  auto batch = bob_prepare({}, cycle6(), 10, rng);
  REQUIRE(batch.size() == 10);
  auto ideal = StabilizerTableau::graph_state(cycle6());
  for (auto& t : batch)
    for (int i = 0; i < 6; ++i) CHECK(t.stabilizes(ideal.stabilizer(i)));
  CHECK(fidelity_oracle(batch[0], cycle6()) == doctest::Approx(1.0));
}

TEST_CASE("bob product strategies") {
  Rng rng(4);
  AdversaryStrategy zero;
  zero.kind = StrategyKind::product_zero;
  auto z = bob_prepare(zero, cycle6(), 1, rng)[0];
  // |0...0> is stabilized by every Z_i
  for (int i = 0; i < 6; ++i)
    CHECK(z.stabilizes(PauliString::single(6, i, 'Z')));

  AdversaryStrategy plus;
  plus.kind = StrategyKind::product_plus;
  auto p = bob_prepare(plus, cycle6(), 1, rng)[0];
  for (int i = 0; i < 6; ++i)
    CHECK(p.stabilizes(PauliString::single(6, i, 'X')));
}

TEST_CASE("bob iid pauli at q=1 applies the pauli deterministically") {
  Rng rng(5);
  AdversaryStrategy s;
  s.kind = StrategyKind::iid_pauli;
  s.q = 1.0;
  s.error_type = PauliErrorType::Z;
  s.vertex = 1;
  auto t = bob_prepare(s, cycle6(), 1, rng)[0];
  auto ideal = StabilizerTableau::graph_state(cycle6());
  // Z_1|G> flips the sign of g_1, leaves the other generators alone.
  auto g1 = ideal.stabilizer(0);
  g1.sign = -g1.sign;
  CHECK(t.stabilizes(g1));
  for (int i = 1; i < 6; ++i) CHECK(t.stabilizes(ideal.stabilizer(i)));
}

TEST_CASE("bob wrong graph differs from the requested state") {
  Rng rng(6);
  AdversaryStrategy s;
  s.kind = StrategyKind::wrong_graph;
  s.edge_delta = 1;
  auto t = bob_prepare(s, cycle6(), 1, rng)[0];
  double f = fidelity_oracle(t, cycle6());
  CHECK(f < 0.999);
}

TEST_CASE("bob mixed batch count") {
  Rng rng(7);
  AdversaryStrategy s;
  s.kind = StrategyKind::mixed_batch;
  s.fraction_bad = 0.3;
  s.bad_kind = StrategyKind::product_zero;
  auto batch = bob_prepare(s, cycle6(), 20, rng);
  auto ideal = StabilizerTableau::graph_state(cycle6());
  int bad = 0;
  for (auto& t : batch) {
    bool good = true;
    for (int i = 0; i < 6; ++i) good = good && t.stabilizes(ideal.stabilizer(i));
    if (!good) ++bad;
  }
  CHECK(bad == 6);  // floor(0.3 * 20)
}

TEST_CASE("charlie keeps 2K and forwards 3K in order") {
  auto plan = plan_parameters(6);
  Rng prep(8);
  auto batch = bob_prepare({}, cycle6(), plan.copies, prep);
  Rng rng(9);
  auto split = charlie_split_and_sample(std::move(batch), plan.K, rng);
  CHECK(split.kept.size() == std::size_t(2 * plan.K));
  CHECK(split.forwarded.size() == std::size_t(3 * plan.K));

  std::vector<StabilizerTableau> empty;
  Rng r2(10);
  CHECK_THROWS_AS(charlie_split_and_sample(std::move(empty), plan.K, r2),
                  WrongBatchSize);
}

TEST_CASE("charlie sampling is uniform and replayable") {
  // mark one index per trial with a Z_1 tag and watch where it lands
  const long long K = 2;  // batch of 10
  const int trials = 10000;
  std::vector<int> kept_count(10, 0);
  auto ideal = StabilizerTableau::graph_state(cycle6());
  for (int trial = 0; trial < trials; ++trial) {
    auto make_batch = [&] {
      std::vector<StabilizerTableau> batch;
      for (int i = 0; i < 10; ++i) {
        auto t = ideal;
        if (i == trial % 10) t.apply_pauli(PauliString::single(6, 0, 'Z'));
        batch.push_back(std::move(t));
      }
      return batch;
    };
    Rng rng(100000 + trial);
    auto split = charlie_split_and_sample(make_batch(), K, rng);
    bool in_kept = false;
    for (auto& t : split.kept)
      if (!t.stabilizes(ideal.stabilizer(0))) in_kept = true;
    if (in_kept) kept_count[trial % 10]++;

    // replay with the same seed gives the identical partition
    Rng rng2(100000 + trial);
    auto split2 = charlie_split_and_sample(make_batch(), K, rng2);
    bool in_kept2 = false;
    for (auto& t : split2.kept)
      if (!t.stabilizes(ideal.stabilizer(0))) in_kept2 = true;
    CHECK(in_kept == in_kept2);
  }
  // each index is kept with probability 2K/5K = 0.4
  double se = std::sqrt(0.4 * 0.6 / (trials / 10.0));
  for (int i = 0; i < 10; ++i)
    CHECK(std::abs(kept_count[i] / (trials / 10.0) - 0.4) < 4 * se);
}

TEST_CASE("alice accepts honest forwarded registers") {
  auto plan = plan_parameters(6);
  Rng prep(12);
  auto fwd = bob_prepare({}, cycle6(), 3 * plan.K, prep);
  Rng rng(13);
  auto res = alice_verify_and_compute(std::move(fwd), cycle6(), plan, rng);
  CHECK(res.verdict.accepted);
  CHECK(res.verdict.K1 == 0);
  CHECK(res.verdict.K2 == 0);
  CHECK(res.computation_register.has_value());
  CHECK(res.computation_outcomes.size() == 6);
  for (int o : res.computation_outcomes) CHECK((o == 1 || o == -1));
}

TEST_CASE("alice rejects orthogonal product registers and skips computing") {
  auto plan = plan_parameters(6);
  AdversaryStrategy s;
  s.kind = StrategyKind::product_zero;
  Rng prep(14);
  auto fwd = bob_prepare(s, cycle6(), 3 * plan.K, prep);
  Rng rng(15);
  auto res = alice_verify_and_compute(std::move(fwd), cycle6(), plan, rng);
  CHECK_FALSE(res.verdict.accepted);
  CHECK_FALSE(res.computation_register.has_value());
  CHECK(res.computation_outcomes.empty());
  CHECK(res.verdict.K1 + res.verdict.K2 > plan.C_client);
}

TEST_CASE("arbitrate blames per the verdict") {
  auto plan = plan_parameters(6);
  Rng prep(16);
  auto honest = bob_prepare({}, cycle6(), 2 * plan.K, prep);
  Rng rng(17);
  auto res = arbitrate(std::move(honest), cycle6(), plan, rng);
  CHECK(res.verdict.accepted);
  CHECK(res.blame == Blame::alice1);

  AdversaryStrategy s;
  s.kind = StrategyKind::product_zero;
  Rng prep2(18);
  auto bad = bob_prepare(s, cycle6(), 2 * plan.K, prep2);
  Rng rng2(19);
  auto res2 = arbitrate(std::move(bad), cycle6(), plan, rng2);
  CHECK_FALSE(res2.verdict.accepted);
  CHECK(res2.blame == Blame::bob);

  Rng prep3(20);
  auto more = bob_prepare({}, cycle6(), 2 * plan.K, prep3);
  Rng rng3(21);
  CHECK_THROWS_AS(arbitrate(std::move(more), cycle6(), plan, rng3, -1, false),
                  NoDispute);
}

TEST_CASE("honest end-to-end run") {
  auto cfg = base_config(2026);
  auto tr = run_protocol(cfg);
  REQUIRE(tr.client_verdict.has_value());
  CHECK(tr.client_verdict->accepted);
  CHECK(tr.blame == Blame::none);
  CHECK_FALSE(tr.arbiter_verdict.has_value());
  CHECK(tr.computation_register.has_value());
  CHECK(tr.computation_outcomes.size() == 6);
  REQUIRE(tr.client_certificate.has_value());
  CHECK(tr.client_certificate->observed_failures == 0);

  CHECK(tr.counters.copies_prepared == 325);
  CHECK(tr.counters.qubits_transmitted == 325 * 6 + 195 * 6);
  CHECK(tr.counters.measurements_client_verification == 780);
  CHECK(tr.counters.measurements_client_computation == 6);
  CHECK(tr.counters.measurements_arbiter == 0);
  CHECK(tr.arbiter_id == 0);
}

TEST_CASE("dishonest run triggers the dispute and blames bob") {
  auto cfg = base_config(7);
  cfg.strategy.kind = StrategyKind::product_zero;
  auto tr = run_protocol(cfg);
  REQUIRE(tr.client_verdict.has_value());
  CHECK_FALSE(tr.client_verdict->accepted);
  REQUIRE(tr.arbiter_verdict.has_value());
  CHECK_FALSE(tr.arbiter_verdict->accepted);
  CHECK(tr.blame == Blame::bob);
  CHECK(tr.arbiter_id >= 2);
  CHECK(tr.counters.measurements_arbiter == 780);
  CHECK_FALSE(tr.client_certificate.has_value());
  CHECK_FALSE(tr.arbiter_certificate.has_value());
}

TEST_CASE("dispute policy never suppresses arbitration") {
  auto cfg = base_config(7);
  cfg.strategy.kind = StrategyKind::product_zero;
  cfg.dispute_policy = DisputePolicy::never;
  auto tr = run_protocol(cfg);
  CHECK_FALSE(tr.client_verdict->accepted);
  CHECK_FALSE(tr.arbiter_verdict.has_value());
  CHECK(tr.blame == Blame::none);
}

TEST_CASE("dispute policy always arbitrates honest runs") {
  auto cfg = base_config(3);
  cfg.dispute_policy = DisputePolicy::always;
  auto tr = run_protocol(cfg);
  CHECK(tr.client_verdict->accepted);
  REQUIRE(tr.arbiter_verdict.has_value());
  CHECK(tr.arbiter_verdict->accepted);
  CHECK(tr.blame == Blame::alice1);
  CHECK(tr.arbiter_certificate.has_value());
}

TEST_CASE("traps are threaded through every hop") {
  auto cfg = base_config(99);
  cfg.traps = TrapConfig{300, TrapState::zero, 0.1, 0.99};
  auto tr = run_protocol(cfg);
  CHECK(tr.client_verdict->accepted);
  CHECK(tr.counters.trap_qubits_transmitted > 0);
  CHECK(tr.trap_stats[0].transmissions == 325);
  CHECK(tr.trap_stats[0].accepted == 325);
  CHECK(tr.trap_stats[0].flipped_total == 0);
  CHECK(tr.trap_stats[1].transmissions == 195);
  CHECK(tr.counters.qubits_transmitted ==
        325 * (6 + 300) + 195 * (6 + 300));
}

TEST_CASE("transcripts replay byte-identically") {
  auto cfg = base_config(424242);
  cfg.strategy.kind = StrategyKind::iid_pauli;
  cfg.strategy.q = 0.05;
  cfg.noise_p = 0.001;
  auto a = run_protocol(cfg);
  auto b = run_protocol(cfg);
  CHECK(to_json(a).dump() == to_json(b).dump());

  // round-trip the config through JSON and replay again
  auto cfg2 = protocol_config_from_json(to_json(cfg));
  auto c = run_protocol(cfg2);
  CHECK(to_json(a).dump() == to_json(c).dump());

  // a different seed changes the transcript
  cfg.master_seed++;
  auto d = run_protocol(cfg);
  CHECK(to_json(a).dump() != to_json(d).dump());
}

TEST_CASE("strategy fidelity oracle") {
  CHECK(strategy_fidelity({}, cycle6()) == doctest::Approx(1.0));

  AdversaryStrategy z1;
  z1.kind = StrategyKind::iid_pauli;
  z1.q = 1.0;
  z1.error_type = PauliErrorType::Z;
  z1.vertex = 1;
  CHECK(strategy_fidelity(z1, cycle6()) == doctest::Approx(0.0));

  // q on a single vertex: F = 1 - q
  z1.q = 0.25;
  CHECK(strategy_fidelity(z1, cycle6()) == doctest::Approx(0.75));

  // iid over all vertices: F = (1-q)^n
  AdversaryStrategy all;
  all.kind = StrategyKind::iid_pauli;
  all.q = 0.1;
  all.error_type = PauliErrorType::Z;
  all.vertex = 0;
  CHECK(strategy_fidelity(all, cycle6()) ==
        doctest::Approx(std::pow(0.9, 6)));

  // depolarizing on one vertex: survives with prob 1 - q (X, Y, Z all flip
  // at least one generator of a connected graph state)
  AdversaryStrategy dep;
  dep.kind = StrategyKind::iid_pauli;
  dep.q = 0.3;
  dep.error_type = PauliErrorType::depolarizing;
  dep.vertex = 2;
  CHECK(strategy_fidelity(dep, cycle6()) == doctest::Approx(0.7));

  AdversaryStrategy mixed;
  mixed.kind = StrategyKind::mixed_batch;
  mixed.fraction_bad = 0.5;
  mixed.bad_kind = StrategyKind::mixed_batch;
  CHECK_THROWS_AS(strategy_fidelity(mixed, cycle6()), InvalidParams);
}

TEST_CASE("config validation at run time") {
  auto cfg = base_config(1);
  cfg.client_pool_size = 1;
  CHECK_THROWS_AS(run_protocol(cfg), InvalidConfig);

  auto small = base_config(1);
  small.graph = standard_graph(GraphKind::path, 3);
  CHECK_THROWS_AS(run_protocol(small), TooSmallN);
}

TEST_CASE("channel noise degrades acceptance monotonically") {
  int accept_low = 0, accept_high = 0;
  for (int i = 0; i < 10; ++i) {
    auto quiet = base_config(1000 + i);
    quiet.noise_p = 0.0005;
    if (run_protocol(quiet).client_verdict->accepted) accept_low++;
    auto loud = base_config(1000 + i);
    loud.noise_p = 0.25;
    if (!run_protocol(loud).client_verdict->accepted) accept_high++;
  }
  CHECK(accept_low >= 9);
  CHECK(accept_high == 10);
}
