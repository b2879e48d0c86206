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

#include "graphcert/tableau.hpp"

#include "graphcert/error.hpp"

namespace graphcert {

namespace {

// Exponent of i picked up when multiplying single-qubit Paulis
// (x1,z1)·(x2,z2), Aaronson-Gottesman bookkeeping.
int phase_exp(int x1, int z1, int x2, int z2) {
  if (!x1 && !z1) return 0;
  if (x1 && z1) return z2 - x2;            // Y
  if (x1) return z2 * (2 * x2 - 1);        // X
  return x2 * (1 - 2 * z2);                // Z
}

}  // namespace

StabilizerTableau::StabilizerTableau(int n)
    : n_(n),
      x_(2 * n, std::vector<std::uint8_t>(n, 0)),
      z_(2 * n, std::vector<std::uint8_t>(n, 0)),
      r_(2 * n, 0) {
  if (n < 1) throw InvalidParams("qubit count must be >= 1");
  for (int i = 0; i < n; ++i) {
    x_[i][i] = 1;       // destabilizer X_i
    z_[n + i][i] = 1;   // stabilizer Z_i
  }
}

StabilizerTableau StabilizerTableau::graph_state(int n,
                                                 const std::vector<Edge>& edges) {
  StabilizerTableau t(n);
  for (int q = 0; q < n; ++q) t.apply_h(q);
  for (auto [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n || a == b)
      throw InvalidEdge("bad edge in graph state preparation");
    t.apply_cz(a - 1, b - 1);
  }
  return t;
}

StabilizerTableau StabilizerTableau::graph_state(const ColoredGraph& g) {
  return graph_state(g.n, g.edges);
}

void StabilizerTableau::apply_h(int q) {
  for (int i = 0; i < 2 * n_; ++i) {
    r_[i] = static_cast<std::uint8_t>((r_[i] + 2 * (x_[i][q] & z_[i][q])) & 3);
    std::swap(x_[i][q], z_[i][q]);
  }
}

void StabilizerTableau::apply_cx(int control, int target) {
  for (int i = 0; i < 2 * n_; ++i) {
    r_[i] = static_cast<std::uint8_t>(
        (r_[i] + 2 * (x_[i][control] & z_[i][target] &
                      (x_[i][target] ^ z_[i][control] ^ 1))) &
        3);
    x_[i][target] ^= x_[i][control];
    z_[i][control] ^= z_[i][target];
  }
}

void StabilizerTableau::apply_cz(int a, int b) {
  apply_h(b);
  apply_cx(a, b);
  apply_h(b);
}

void StabilizerTableau::apply_pauli(const PauliString& p) {
  if (p.n != n_) throw InvalidParams("pauli size mismatch");
  for (int i = 0; i < 2 * n_; ++i) {
    int sym = 0;
    for (int q = 0; q < n_; ++q)
      sym ^= (x_[i][q] & p.z_bits[q]) ^ (z_[i][q] & p.x_bits[q]);
    if (sym) r_[i] = static_cast<std::uint8_t>((r_[i] + 2) & 3);
  }
}

void StabilizerTableau::rowsum(int dst, int src) {
  int phase = r_[dst] + r_[src];
  for (int q = 0; q < n_; ++q) {
    phase += phase_exp(x_[src][q], z_[src][q], x_[dst][q], z_[dst][q]);
    x_[dst][q] ^= x_[src][q];
    z_[dst][q] ^= z_[src][q];
  }
  r_[dst] = static_cast<std::uint8_t>(((phase % 4) + 4) & 3);
}

bool StabilizerTableau::is_deterministic(int q, Basis basis) const {
  for (int i = n_; i < 2 * n_; ++i)
    if ((basis == Basis::Z ? x_[i][q] : z_[i][q]) != 0) return false;
  return true;
}

int StabilizerTableau::measure(int q, Basis basis, Rng& rng) {
  if (q < 0 || q >= n_) throw InvalidVertex("measured qubit out of range");
  if (basis == Basis::X) {
    apply_h(q);
    int m = measure(q, Basis::Z, rng);
    apply_h(q);
    return m;
  }
  int p = -1;
  for (int i = n_; i < 2 * n_; ++i)
    if (x_[i][q]) { p = i; break; }

  if (p >= 0) {
    // Random outcome: Z_q anticommutes with stabilizer row p.
    for (int i = 0; i < 2 * n_; ++i)
      if (i != p && x_[i][q]) rowsum(i, p);
    x_[p - n_] = x_[p];
    z_[p - n_] = z_[p];
    r_[p - n_] = r_[p];
    std::fill(x_[p].begin(), x_[p].end(), 0);
    std::fill(z_[p].begin(), z_[p].end(), 0);
    z_[p][q] = 1;
    bool minus = rng.coin();
    r_[p] = minus ? 2 : 0;
    return minus ? -1 : +1;
  }

  // Deterministic outcome: accumulate the stabilizer combination whose
  // destabilizer partners contain X_q.
  std::vector<std::uint8_t> sx(n_, 0), sz(n_, 0);
  int phase = 0;
  for (int i = 0; i < n_; ++i) {
    if (!x_[i][q]) continue;
    int src = i + n_;
    phase += r_[src];
    for (int k = 0; k < n_; ++k) {
      phase += phase_exp(x_[src][k], z_[src][k], sx[k], sz[k]);
      sx[k] ^= x_[src][k];
      sz[k] ^= z_[src][k];
    }
  }
  phase = ((phase % 4) + 4) & 3;
  return phase == 0 ? +1 : -1;
}

PauliString StabilizerTableau::stabilizer(int i) const {
  if (i < 0 || i >= n_) throw InvalidParams("generator index out of range");
  PauliString p = PauliString::identity(n_);
  p.x_bits = x_[n_ + i];
  p.z_bits = z_[n_ + i];
  p.sign = r_[n_ + i] == 0 ? +1 : -1;
  return p;
}

bool StabilizerTableau::stabilizes(const PauliString& p) const {
  if (p.n != n_) throw InvalidParams("pauli size mismatch");
  // Decompose over generators: generator i participates iff p anticommutes
  // with destabilizer row i.
  std::vector<std::uint8_t> sx(n_, 0), sz(n_, 0);
  int phase = 0;
  for (int i = 0; i < n_; ++i) {
    int sym = 0;
    for (int q = 0; q < n_; ++q)
      sym ^= (x_[i][q] & p.z_bits[q]) ^ (z_[i][q] & p.x_bits[q]);
    if (!sym) continue;
    int src = i + n_;
    phase += r_[src];
    for (int k = 0; k < n_; ++k) {
      phase += phase_exp(x_[src][k], z_[src][k], sx[k], sz[k]);
      sx[k] ^= x_[src][k];
      sz[k] ^= z_[src][k];
    }
  }
  if (sx != p.x_bits || sz != p.z_bits) return false;
  phase = ((phase % 4) + 4) & 3;
  return (phase == 0 && p.sign == +1) || (phase == 2 && p.sign == -1);
}

std::string StabilizerTableau::dump() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    out += stabilizer(i).str();
    out += '\n';
  }
  return out;
}

}  // namespace graphcert
