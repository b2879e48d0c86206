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
#include "graphcert/bounds.hpp"
#include "graphcert/error.hpp"
#include "graphcert/rng.hpp"

using namespace graphcert;

TEST_CASE("serfling closed form") {
  // frozen from high-precision evaluation of 1 - exp(-2v²NK²/((N+K)(K+1)))
  CHECK(serfling_bound({4 * 65, 65, 0.1}) ==
        doctest::Approx(0.6409316161035297).epsilon(1e-12));
  CHECK(serfling_bound({3 * 65, 65, 0.1}) ==
        doctest::Approx(0.6171941252473234).epsilon(1e-12));
  CHECK(serfling_bound({100, 50, 1e-9}) == doctest::Approx(0.0).epsilon(1e-6));
  CHECK_THROWS_AS(serfling_bound({0, 65, 0.1}), InvalidParams);
  CHECK_THROWS_AS(serfling_bound({65, 65, 1.0}), InvalidParams);
}

TEST_CASE("azuma-hoeffding closed form") {
  AzumaParams p;
  p.ranges.assign(5, {0.0, 1.0});
  p.t = 0.5;
  CHECK(azuma_hoeffding_bound(p) ==
        doctest::Approx(1.0 - std::exp(-2.5)).epsilon(1e-12));

  p.t = 1e-12;
  CHECK(azuma_hoeffding_bound(p) == doctest::Approx(0.0).epsilon(1e-6));

  p.t = 0.5;
  p.ranges[0] = {1.0, 0.5};
  CHECK_THROWS_AS(azuma_hoeffding_bound(p), InvalidParams);
}

TEST_CASE("azuma matches the 6Kt^2 exponent for binary variables") {
  // For 3K variables in [0,1], 2m²t²/Σ(b-a)² = 2·(3K)·t² = 6Kt².
  const long long K = 65;
  AzumaParams p;
  p.ranges.assign(3 * K, {0.0, 1.0});
  p.t = 0.07;
  CHECK(azuma_hoeffding_bound(p) ==
        doctest::Approx(1.0 - std::exp(-6.0 * K * p.t * p.t)).epsilon(1e-12));
}

TEST_CASE("plan parameters") {
  auto plan = plan_parameters(6);
  CHECK(plan.K == 65);
  CHECK(plan.copies == 325);
  CHECK(plan.C_client == doctest::Approx(65.0 / 12.0));
  CHECK(plan.C_arbiter == doctest::Approx(195.0 / 24.0));

  CHECK(plan_parameters(10).K == 231);
  CHECK_THROWS_AS(plan_parameters(5), TooSmallN);

  for (int n = 6; n <= 20; ++n) {
    auto p = plan_parameters(n);
    CHECK(p.C_arbiter > p.C_client);
  }
}

TEST_CASE("lambda ranges") {
  auto [alo, ahi] = lambda_range(10, Role::arbiter);
  CHECK(alo == doctest::Approx(0.6020599913279623));
  CHECK(ahi == doctest::Approx(8.1));

  auto [clo, chi] = lambda_range(6, Role::client);
  CHECK(clo == doctest::Approx(1.5474112289381663));
  CHECK(chi == doctest::Approx(1.5625));

  auto [c16lo, c16hi] = lambda_range(16, Role::client);
  CHECK(c16lo == doctest::Approx(1.0));
  CHECK(c16hi == doctest::Approx(225.0 / 16.0));

  CHECK_THROWS_AS(lambda_range(5, Role::client), TooSmallN);
}

TEST_CASE("arbiter certificate") {
  auto appendix = arbiter_certificate(10, 231, 10, 1.0);
  CHECK(appendix.fidelity_bound ==
        doctest::Approx(0.5850170085738939).epsilon(1e-12));
  CHECK(appendix.confidence_bound == doctest::Approx(0.6));

  auto theorem =
      arbiter_certificate(10, 231, 10, 1.0, CertificateVariant::theorem);
  CHECK(theorem.fidelity_bound == doctest::Approx(0.6));
  CHECK(theorem.confidence_bound == doctest::Approx(0.6));

  // failures above 3K/(4n) = 17.325
  CHECK_THROWS_AS(arbiter_certificate(10, 231, 18, 1.0), ThresholdExceeded);
  CHECK_THROWS_AS(arbiter_certificate(10, 231, 10, 100.0), LambdaOutOfRange);
}

TEST_CASE("client certificate") {
  auto c1 = client_certificate(16, 640, 10, 1.0);
  CHECK(c1.fidelity_bound == doctest::Approx(0.6875));
  CHECK(c1.confidence_bound == doctest::Approx(0.0));  // degenerate at λ=1
  CHECK(c1.vacuous());

  auto c4 = client_certificate(16, 640, 10, 4.0);
  CHECK(c4.fidelity_bound == doctest::Approx(0.4375));
  // P = 1 - 4·16^{-2}
  CHECK(c4.confidence_bound == doctest::Approx(0.984375));

  // failures above K/(2n) = 20
  CHECK_THROWS_AS(client_certificate(16, 640, 21, 4.0), ThresholdExceeded);
  CHECK_THROWS_AS(client_certificate(16, 640, 10, 0.5), LambdaOutOfRange);
}

TEST_CASE("fidelity estimate from counts") {
  double v = std::sqrt(1.0) / 6.0, t = std::sqrt(1.0) / (std::sqrt(6.0) * 6.0);
  CHECK(fidelity_estimate_from_counts(v, t, 65, 8) ==
        doctest::Approx(0.31092578352059275).epsilon(1e-12));

  CHECK(fidelity_estimate_from_counts(1e-15, 1e-15, 65, 0) ==
        doctest::Approx(1.0));

  // at the acceptance boundary it reproduces the appendix-variant bound
  double boundary = 3.0 * 65 / (4.0 * 6);
  auto cert = arbiter_certificate(6, 65, 0, 1.0);
  CHECK(fidelity_estimate_from_counts(v, t, 65, boundary) ==
        doctest::Approx(cert.fidelity_bound).epsilon(1e-12));

  CHECK_THROWS_AS(fidelity_estimate_from_counts(0.0, t, 65, 0), InvalidParams);
}

TEST_CASE("fidelity estimate is monotone decreasing") {
  double base = fidelity_estimate_from_counts(0.1, 0.1, 65, 3);
  CHECK(fidelity_estimate_from_counts(0.2, 0.1, 65, 3) < base);
  CHECK(fidelity_estimate_from_counts(0.1, 0.2, 65, 3) < base);
  CHECK(fidelity_estimate_from_counts(0.1, 0.1, 65, 4) < base);
}

TEST_CASE("cost comparison") {
  auto r = cost_comparison(6);
  CHECK(r.our_copies == 325);
  CHECK(r.our_local_measurements == 780);
  // 2k + m + 1 with k = 143, m = ceil(2 ln2 · 143^6 · 6^5)
  CHECK(r.sato_copies == "92178138487477624");
  CHECK(r.ours_cheaper);

  for (int n = 6; n <= 20; ++n) CHECK(cost_comparison(n).ours_cheaper);

  CHECK_THROWS_AS(cost_comparison(6, "10", ""), InvalidParams);  // k too small
  CHECK_THROWS_AS(cost_comparison(5), TooSmallN);
}

TEST_CASE("serfling bound is honored empirically") {
  // Monte Carlo oracle: random binary population, uniform K-subset, check
  // the frequency of the bounded event against the closed form.
  Rng rng(20260826);
  const int trials = 10000;
  struct Point { int N, K; double v; double fill; };
  for (auto [N, K, v, fill] : {Point{40, 10, 0.15, 0.5},
                               Point{260, 65, 0.05, 0.3},
                               Point{195, 65, 0.1, 0.7},
                               Point{30, 30, 0.2, 0.5},
                               Point{100, 20, 0.1, 0.9}}) {
    double bound = serfling_bound({N, K, v});
    int hit = 0;
    for (int trial = 0; trial < trials; ++trial) {
      Rng tr = rng.child(static_cast<std::uint64_t>(trial) + 1000000u * N);
      int T = N + K;
      std::vector<int> y(T);
      for (int i = 0; i < T; ++i) y[i] = tr.bernoulli(fill) ? 1 : 0;
      auto sample = tr.sample_without_replacement(T, K);
      std::vector<bool> in_sample(T, false);
      for (auto idx : sample) in_sample[idx] = true;
      double sum_in = 0, sum_out = 0;
      for (int i = 0; i < T; ++i) (in_sample[i] ? sum_in : sum_out) += y[i];
      if (sum_out <= double(N) / K * sum_in + N * v) ++hit;
    }
    double freq = hit / double(trials);
    double sigma = std::sqrt(0.25 / trials);
    CHECK(freq >= bound - 3 * sigma);
  }
}

TEST_CASE("azuma-hoeffding bound is honored empirically") {
  Rng rng(8675309);
  const int trials = 10000;
  struct Point { int m; double t; double p; };
  for (auto [m, t, p] : {Point{20, 0.2, 0.5}, Point{50, 0.1, 0.3},
                         Point{100, 0.05, 0.7}, Point{200, 0.05, 0.5},
                         Point{195, 0.07, 0.9}}) {
    AzumaParams params;
    params.ranges.assign(m, {0.0, 1.0});
    params.t = t;
    double bound = azuma_hoeffding_bound(params);
    int hit = 0;
    for (int trial = 0; trial < trials; ++trial) {
      Rng tr = rng.child(static_cast<std::uint64_t>(trial) + 1000000u * m);
      double sum = 0;
      for (int i = 0; i < m; ++i) sum += tr.bernoulli(p) ? 1.0 : 0.0;
      if (sum / m - p <= t) ++hit;
    }
    double freq = hit / double(trials);
    double sigma = std::sqrt(0.25 / trials);
    CHECK(freq >= bound - 3 * sigma);
  }
}
