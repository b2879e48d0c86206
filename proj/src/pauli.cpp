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

#include "graphcert/pauli.hpp"

#include "graphcert/error.hpp"

namespace graphcert {

PauliString PauliString::single(int n, int qubit, char which, int sign) {
  if (qubit < 0 || qubit >= n)
    throw InvalidVertex("pauli qubit out of range: " + std::to_string(qubit));
  PauliString p = identity(n);
  p.sign = sign;
  switch (which) {
    case 'X': p.x_bits[qubit] = 1; break;
    case 'Y': p.x_bits[qubit] = 1; p.z_bits[qubit] = 1; break;
    case 'Z': p.z_bits[qubit] = 1; break;
    case 'I': break;
    default: throw InvalidParams(std::string("unknown pauli letter: ") + which);
  }
  return p;
}

bool PauliString::commutes_with(const PauliString& other) const {
  int sym = 0;
  for (int q = 0; q < n; ++q)
    sym ^= (x_bits[q] & other.z_bits[q]) ^ (z_bits[q] & other.x_bits[q]);
  return sym == 0;
}

std::string PauliString::str() const {
  std::string s = sign < 0 ? "-" : "+";
  for (int q = 0; q < n; ++q) {
    static const char symbols[4] = {'I', 'X', 'Z', 'Y'};
    s += symbols[x_bits[q] | (z_bits[q] << 1)];
  }
  return s;
}

}  // namespace graphcert
