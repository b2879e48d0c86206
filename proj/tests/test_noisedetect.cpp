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
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "graphcert/error.hpp"
#include "graphcert/graph.hpp"
#include "graphcert/noisedetect.hpp"

using namespace graphcert;

namespace {

StabilizerTableau p3_state() {
  auto g = standard_graph(GraphKind::path, 3);
  return StabilizerTableau::graph_state(g);
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_THROWS_AS(validate_trap_config({0, TrapState::zero, 0.1, 0.99}),
                  InvalidConfig);
  CHECK_THROWS_AS(validate_trap_config({5, TrapState::zero, 0.0, 0.99}),
                  InvalidConfig);
  CHECK_THROWS_AS(validate_trap_config({5, TrapState::zero, 1.0, 0.99}),
                  InvalidConfig);
  CHECK_THROWS_AS(validate_trap_config({5, TrapState::zero, 0.1, 1.0}),
                  InvalidConfig);
  CHECK_NOTHROW(validate_trap_config({5, TrapState::zero, 0.1, 0.99}));
}

TEST_CASE("trap insertion placement") {
  TrapConfig cfg{4, TrapState::zero, 0.1, 0.99};
  Rng rng(7);
  auto aug = insert_traps(p3_state(), cfg, rng);
  CHECK(aug.total_qubits() == 7);
  CHECK(aug.positions.size() == 4);
  CHECK(std::is_sorted(aug.positions.begin(), aug.positions.end()));
  CHECK(aug.positions.front() >= 0);
  CHECK(aug.positions.back() < 7);
  // distinct positions
  CHECK(std::adjacent_find(aug.positions.begin(), aug.positions.end()) ==
        aug.positions.end());
  for (auto f : aug.flipped) CHECK(f == 0);
}

TEST_CASE("trap positions are uniform over slots") {
  TrapConfig cfg{2, TrapState::zero, 0.1, 0.99};
  const int slots = 5;  // n = 3, k = 2
  std::vector<int> counts(slots, 0);
  const int trials = 20000;
  Rng rng(99);
  for (int i = 0; i < trials; ++i) {
    Rng tr = rng.child(i);
    auto aug = insert_traps(p3_state(), cfg, tr);
    for (int p : aug.positions) counts[p]++;
  }
  // each slot holds a trap with probability k/(n+k) = 0.4
  double se = std::sqrt(0.4 * 0.6 / trials);
  for (int s = 0; s < slots; ++s)
    CHECK(std::abs(counts[s] / double(trials) - 0.4) < 4 * se);
}

TEST_CASE("trap threshold closed form") {
  CHECK(trap_threshold({2000, TrapState::zero, 0.05, 0.99}) ==
        doctest::Approx(32.13859575584888).epsilon(1e-12));
  CHECK_THROWS_AS(trap_threshold({100, TrapState::zero, 0.01, 0.99}),
                  Infeasible);
}

TEST_CASE("noiseless transmission leaves register and traps intact") {
  TrapConfig cfg{200, TrapState::plus, 0.1, 0.95};
  Rng rng(42);
  auto baseline = p3_state();
  auto aug = insert_traps(p3_state(), cfg, rng);
  auto positions = aug.positions;
  Rng noise = rng.child(1);
  apply_channel(aug, ChannelKind::phase_flip, 0.0, noise);
  auto check = check_traps(aug, cfg, positions);
  CHECK(check.flipped == 0);
  CHECK(check.accept);
  // graph register untouched: all generators still stabilize it
  auto g = standard_graph(GraphKind::path, 3);
  auto ideal = StabilizerTableau::graph_state(g);
  for (int i = 0; i < 3; ++i) CHECK(aug.reg.stabilizes(ideal.stabilizer(i)));
}

TEST_CASE("trap flip counts follow the channel rate") {
  TrapConfig cfg{5, TrapState::zero, 0.1, 0.9};
  const double p = 0.01;
  const int trials = 20000;
  Rng rng(314159);
  long long total_flips = 0;
  for (int i = 0; i < trials; ++i) {
    Rng tr = rng.child(i);
    auto aug = insert_traps(p3_state(), cfg, tr);
    apply_channel(aug, ChannelKind::bit_flip, p, tr);
    for (auto f : aug.flipped) total_flips += f;
  }
  // E[r] = k·p = 0.05, Var = k·p(1−p)
  double mean = total_flips / double(trials);
  double se = std::sqrt(5 * p * (1 - p) / trials);
  CHECK(std::abs(mean - 0.05) < 4 * se);
}

TEST_CASE("traps only react to the disturbing channel") {
  TrapConfig zero_cfg{8, TrapState::zero, 0.2, 0.9};
  TrapConfig plus_cfg{8, TrapState::plus, 0.2, 0.9};
  Rng rng(5);

  // |0> traps are Z-eigenstates: phase flips never disturb them.
  auto a = insert_traps(p3_state(), zero_cfg, rng);
  Rng n1 = rng.child(1);
  apply_channel(a, ChannelKind::phase_flip, 1.0, n1);
  for (auto f : a.flipped) CHECK(f == 0);

  // |+> traps are X-eigenstates: bit flips never disturb them.
  auto b = insert_traps(p3_state(), plus_cfg, rng);
  Rng n2 = rng.child(2);
  apply_channel(b, ChannelKind::bit_flip, 1.0, n2);
  for (auto f : b.flipped) CHECK(f == 0);

  // And the matched channel at p = 1 disturbs every trap.
  auto c = insert_traps(p3_state(), zero_cfg, rng);
  Rng n3 = rng.child(3);
  apply_channel(c, ChannelKind::bit_flip, 1.0, n3);
  for (auto f : c.flipped) CHECK(f == 1);
}

TEST_CASE("position mismatch is rejected") {
  TrapConfig cfg{150, TrapState::zero, 0.1, 0.9};
  Rng rng(11);
  auto aug = insert_traps(p3_state(), cfg, rng);
  auto wrong = aug.positions;
  wrong[0] = (wrong[0] + 1) % aug.total_qubits();
  if (std::find(wrong.begin() + 1, wrong.end(), wrong[0]) != wrong.end())
    wrong[0] = (wrong[0] + 1) % aug.total_qubits();
  std::sort(wrong.begin(), wrong.end());
  if (wrong != aug.positions)
    CHECK_THROWS_AS(check_traps(aug, cfg, wrong), PositionMismatch);
}

TEST_CASE("acceptance tracks the noise level") {
  // k = 400, p_th = 0.1, conf 0.99 -> r_th = 40 - sqrt(400·ln(100)/2) ≈ 9.65+
  TrapConfig cfg{400, TrapState::zero, 0.1, 0.99};
  double r_th = trap_threshold(cfg);
  CHECK(r_th == doctest::Approx(400 * 0.1 -
                                std::sqrt(400 * std::log(100.0) / 2.0)));
  const int trials = 300;
  Rng rng(2718);
  int accept_low = 0, accept_high = 0;
  for (int i = 0; i < trials; ++i) {
    Rng t1 = rng.child(2 * i);
    auto a = insert_traps(p3_state(), cfg, t1);
    auto pos = a.positions;
    apply_channel(a, ChannelKind::bit_flip, 0.002, t1);
    accept_low += check_traps(a, cfg, pos).accept ? 1 : 0;

    Rng t2 = rng.child(2 * i + 1);
    auto b = insert_traps(p3_state(), cfg, t2);
    auto pos2 = b.positions;
    apply_channel(b, ChannelKind::bit_flip, 0.3, t2);
    accept_high += check_traps(b, cfg, pos2).accept ? 1 : 0;
  }
  // quiet channel: E[r] = 0.8 « 9.65; loud channel: E[r] = 120 » 9.65
  CHECK(accept_low == trials);
  CHECK(accept_high == 0);
}

TEST_CASE("check clears trap bookkeeping") {
  TrapConfig cfg{40, TrapState::zero, 0.2, 0.9};
  Rng rng(1);
  auto aug = insert_traps(p3_state(), cfg, rng);
  auto pos = aug.positions;
  check_traps(aug, cfg, pos);
  CHECK(aug.positions.empty());
  CHECK(aug.flipped.empty());
  CHECK(aug.reg.num_qubits() == 3);
}
