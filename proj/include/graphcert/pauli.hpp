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

#ifndef GRAPHCERT_PAULI_HPP
#define GRAPHCERT_PAULI_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace graphcert {

/// Signed n-qubit Pauli operator ±P_1⊗...⊗P_n in binary symplectic form.
/// Y is encoded as x_bit = z_bit = 1 (the Hermitian Y, not the XZ product).
/// Imaginary overall phases never arise here.
struct PauliString {
  int n = 0;
  std::vector<std::uint8_t> x_bits;
  std::vector<std::uint8_t> z_bits;
  int sign = +1;  // +1 or -1

  static PauliString identity(int n) {
    return PauliString{n, std::vector<std::uint8_t>(n, 0),
                       std::vector<std::uint8_t>(n, 0), +1};
  }

  static PauliString single(int n, int qubit, char which, int sign = +1);

  bool commutes_with(const PauliString& other) const;

  /// "XIZ", "-ZYX" style; qubit 0 leftmost.
  std::string str() const;

  bool operator==(const PauliString&) const = default;
};

}  // namespace graphcert

#endif  // GRAPHCERT_PAULI_HPP
