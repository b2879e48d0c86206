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

#ifndef GRAPHCERT_BOUNDS_HPP
#define GRAPHCERT_BOUNDS_HPP

#include <string>
#include <vector>

namespace graphcert {

/// Sampling-without-replacement concentration parameters: population
/// T = N + K, sample size K, remainder N, deviation v ∈ (0,1).
struct SerflingParams {
  long long N = 0;
  long long K = 0;
  double v = 0;
};

/// Confidence that Σ_{k∈Π̄} Y_k ≤ (N/K)·Σ_{k∈Π} Y_k + Nv:
/// 1 − exp(−2v²NK² / ((N+K)(K+1))).
double serfling_bound(const SerflingParams& p);

/// Independent bounded variables ξ_i ∈ [a_i, b_i], deviation t > 0.
struct AzumaParams {
  std::vector<std::pair<double, double>> ranges;  // (a_i, b_i)
  double t = 0;
};

/// Confidence that mean − expectation ≤ t: 1 − exp(−2m²t² / Σ(b_i−a_i)²),
/// with the squared-range denominator of the standard Hoeffding form.
double azuma_hoeffding_bound(const AzumaParams& p);

/// Protocol sizing for an n-qubit request: K = ⌈n² ln n⌉ (natural log),
/// 5K copies, client threshold K/(2n), arbiter threshold 3K/(4n).
struct ProtocolPlan {
  int n = 0;
  long long K = 0;
  long long copies = 0;
  double C_client = 0;
  double C_arbiter = 0;
};

/// Throws TooSmallN for n < 6.
ProtocolPlan plan_parameters(int n);

enum class Role { client, arbiter };
enum class CertificateVariant { theorem, appendix };

/// Valid λ interval: client [log_n 16, (n−1)²/16],
/// arbiter [log_n 4, (n−1)²/10] (the derived condition).
std::pair<double, double> lambda_range(int n, Role role);

/// Fidelity/confidence certificate emitted on acceptance.
struct FidelityCertificate {
  Role role = Role::client;
  int n = 0;
  long long K = 0;
  long long observed_failures = 0;
  double lambda = 0;
  double fidelity_bound = 0;     // F_low
  double confidence_bound = 0;   // P_low; "vacuous" when <= 0
  CertificateVariant variant = CertificateVariant::appendix;

  bool vacuous() const { return confidence_bound <= 0; }
};

/// Client certificate: F ≥ 1 − (4√λ₁+1)/n with P ≥ 1 − 4n^{−λ₁/2}.
/// Requires failures ≤ K/(2n); throws ThresholdExceeded / LambdaOutOfRange.
FidelityCertificate client_certificate(int n, long long K, long long failures,
                                       double lambda1);

/// Arbiter certificate: F ≥ 1 − (c√λ₂+1)/n with c = 3 (theorem) or
/// c = 7/3 + 2/√6 ≈ 3.1498 (appendix, default); P ≥ 1 − 4n^{−λ₂}.
/// Requires failures ≤ 3K/(4n).
FidelityCertificate arbiter_certificate(
    int n, long long K, long long failures, double lambda2,
    CertificateVariant variant = CertificateVariant::appendix);

/// Raw fidelity estimate 1 − (7/3)v − 2t − (4/(3K))·failures. `failures` is
/// real-valued so the threshold boundary 3K/(4n) can be evaluated exactly.
double fidelity_estimate_from_counts(double v, double t, long long K,
                                     double failures);

/// Resource comparison against the prior arbiter-based protocol.
/// Copy counts can be astronomically large, hence decimal strings backed by
/// arbitrary-precision integers.
struct CostReport {
  int n = 0;
  long long our_copies = 0;              // 5K
  long long our_local_measurements = 0;  // 2K·n (verification stage)
  std::string sato_copies;               // 2k + m + 1
  std::string sato_local_measurements;   // k·n·2^n worst case
  bool ours_cheaper = false;
};

/// sato_k/sato_m as decimal strings; empty string selects the minimal
/// admissible value (k = 4n²−1, m = ⌈2·ln2·kⁿ·n⁵⌉).
CostReport cost_comparison(int n, const std::string& sato_k = "",
                           const std::string& sato_m = "");

}  // namespace graphcert

#endif  // GRAPHCERT_BOUNDS_HPP
