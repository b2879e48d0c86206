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

#include "graphcert/bounds.hpp"

#include <gmpxx.h>

#include <cmath>

#include "graphcert/error.hpp"

namespace graphcert {

double serfling_bound(const SerflingParams& p) {
  if (p.N < 1 || p.K < 1) throw InvalidParams("N and K must be >= 1");
  if (!(p.v > 0 && p.v < 1)) throw InvalidParams("v must lie in (0, 1)");
  double N = static_cast<double>(p.N), K = static_cast<double>(p.K);
  double exponent = 2.0 * p.v * p.v * N * K * K / ((N + K) * (K + 1.0));
  return 1.0 - std::exp(-exponent);
}

double azuma_hoeffding_bound(const AzumaParams& p) {
  if (p.ranges.empty()) throw InvalidParams("need at least one variable");
  if (!(p.t > 0)) throw InvalidParams("t must be > 0");
  double denom = 0;
  for (auto [a, b] : p.ranges) {
    if (b < a) throw InvalidParams("range with b < a");
    denom += (b - a) * (b - a);
  }
  if (denom == 0) return 1.0;  // all variables constant
  double m = static_cast<double>(p.ranges.size());
  return 1.0 - std::exp(-2.0 * m * m * p.t * p.t / denom);
}

ProtocolPlan plan_parameters(int n) {
  if (n < 6) throw TooSmallN("protocol requires n >= 6");
  ProtocolPlan plan;
  plan.n = n;
  plan.K = static_cast<long long>(
      std::ceil(static_cast<double>(n) * n * std::log(n)));
  plan.copies = 5 * plan.K;
  plan.C_client = static_cast<double>(plan.K) / (2.0 * n);
  plan.C_arbiter = 3.0 * static_cast<double>(plan.K) / (4.0 * n);
  return plan;
}

std::pair<double, double> lambda_range(int n, Role role) {
  if (n < 6) throw TooSmallN("lambda range requires n >= 6");
  double nn = static_cast<double>(n);
  if (role == Role::client)
    return {std::log(16.0) / std::log(nn), (nn - 1) * (nn - 1) / 16.0};
  return {std::log(4.0) / std::log(nn), (nn - 1) * (nn - 1) / 10.0};
}

namespace {

void check_lambda(int n, Role role, double lambda) {
  auto [lo, hi] = lambda_range(n, role);
  if (lambda < lo || lambda > hi)
    throw LambdaOutOfRange("lambda " + std::to_string(lambda) +
                           " outside [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
}

}  // namespace

FidelityCertificate client_certificate(int n, long long K, long long failures,
                                       double lambda1) {
  if (n < 6) throw TooSmallN("certificate requires n >= 6");
  check_lambda(n, Role::client, lambda1);
  if (static_cast<double>(failures) > static_cast<double>(K) / (2.0 * n))
    throw ThresholdExceeded("failures exceed K/(2n); certificate undefined");
  FidelityCertificate cert;
  cert.role = Role::client;
  cert.n = n;
  cert.K = K;
  cert.observed_failures = failures;
  cert.lambda = lambda1;
  cert.fidelity_bound = 1.0 - (4.0 * std::sqrt(lambda1) + 1.0) / n;
  cert.confidence_bound = 1.0 - 4.0 * std::pow(n, -lambda1 / 2.0);
  cert.variant = CertificateVariant::theorem;
  return cert;
}

FidelityCertificate arbiter_certificate(int n, long long K,
                                        long long failures, double lambda2,
                                        CertificateVariant variant) {
  if (n < 6) throw TooSmallN("certificate requires n >= 6");
  check_lambda(n, Role::arbiter, lambda2);
  if (static_cast<double>(failures) > 3.0 * static_cast<double>(K) / (4.0 * n))
    throw ThresholdExceeded("failures exceed 3K/(4n); certificate undefined");
  double c = variant == CertificateVariant::theorem
                 ? 3.0
                 : 7.0 / 3.0 + 2.0 / std::sqrt(6.0);
  FidelityCertificate cert;
  cert.role = Role::arbiter;
  cert.n = n;
  cert.K = K;
  cert.observed_failures = failures;
  cert.lambda = lambda2;
  cert.fidelity_bound = 1.0 - (c * std::sqrt(lambda2) + 1.0) / n;
  cert.confidence_bound = 1.0 - 4.0 * std::pow(n, -lambda2);
  cert.variant = variant;
  return cert;
}

double fidelity_estimate_from_counts(double v, double t, long long K,
                                     double failures) {
  if (!(v > 0 && v < 1)) throw InvalidParams("v must lie in (0, 1)");
  if (!(t > 0)) throw InvalidParams("t must be > 0");
  if (K < 1) throw InvalidParams("K must be >= 1");
  return 1.0 - (7.0 / 3.0) * v - 2.0 * t -
         (4.0 / (3.0 * static_cast<double>(K))) * failures;
}

CostReport cost_comparison(int n, const std::string& sato_k,
                           const std::string& sato_m) {
  if (n < 6) throw TooSmallN("cost comparison requires n >= 6");
  mpz_class min_k = 4 * mpz_class(n) * n - 1;
  mpz_class k = sato_k.empty() ? min_k : mpz_class(sato_k);
  if (k < min_k) throw InvalidParams("sato k below 4n^2 - 1");

  // minimal m = ceil(2 ln2 · k^n · n^5)
  mpz_class kn;
  mpz_pow_ui(kn.get_mpz_t(), k.get_mpz_t(), static_cast<unsigned>(n));
  mpz_class n5;
  mpz_pow_ui(n5.get_mpz_t(), mpz_class(n).get_mpz_t(), 5);
  // ln 2 to ~80 digits; a double-precision constant shifts the ceiling for
  // products this large
  static const mpf_class kLn2(
      "0.69314718055994530941723212145817656807550013436025525412068000949339"
      "362196969472",
      256);
  mpf_class scale = 2 * kLn2;
  mpf_class mf = scale * mpf_class(kn * n5, 256);
  mpz_class min_m;
  mpz_set_f(min_m.get_mpz_t(), mf.get_mpf_t());
  if (mpf_class(min_m, 256) < mf) min_m += 1;  // ceiling
  mpz_class m = sato_m.empty() ? min_m : mpz_class(sato_m);
  if (m < min_m) throw InvalidParams("sato m below (2 ln2) k^n n^5");

  ProtocolPlan plan = plan_parameters(n);
  CostReport report;
  report.n = n;
  report.our_copies = plan.copies;
  report.our_local_measurements = 2 * plan.K * n;

  mpz_class sato_copies = 2 * k + m + 1;
  mpz_class pow2n;
  mpz_pow_ui(pow2n.get_mpz_t(), mpz_class(2).get_mpz_t(),
             static_cast<unsigned>(n));
  mpz_class sato_meas = k * n * pow2n;
  report.sato_copies = sato_copies.get_str();
  report.sato_local_measurements = sato_meas.get_str();
  report.ours_cheaper =
      mpz_class(static_cast<long>(report.our_copies)) < sato_copies;
  return report;
}

}  // namespace graphcert
