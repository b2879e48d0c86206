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

#ifndef GRAPHCERT_ERROR_HPP
#define GRAPHCERT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace graphcert {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define GRAPHCERT_DEFINE_ERROR(Name)                              \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(what) {}       \
  }

// graph
GRAPHCERT_DEFINE_ERROR(NotTwoColorable);
GRAPHCERT_DEFINE_ERROR(InvalidEdge);
GRAPHCERT_DEFINE_ERROR(InvalidVertex);
GRAPHCERT_DEFINE_ERROR(InvalidParams);

// stabsim
GRAPHCERT_DEFINE_ERROR(TooLarge);

// witness
GRAPHCERT_DEFINE_ERROR(DomainMismatch);
GRAPHCERT_DEFINE_ERROR(OddBatch);
GRAPHCERT_DEFINE_ERROR(ThresholdOutOfRange);

// bounds
GRAPHCERT_DEFINE_ERROR(TooSmallN);
GRAPHCERT_DEFINE_ERROR(ThresholdExceeded);
GRAPHCERT_DEFINE_ERROR(LambdaOutOfRange);

// protocol
GRAPHCERT_DEFINE_ERROR(WrongBatchSize);
GRAPHCERT_DEFINE_ERROR(NoDispute);

// noisedetect
GRAPHCERT_DEFINE_ERROR(InvalidConfig);
GRAPHCERT_DEFINE_ERROR(PositionMismatch);
GRAPHCERT_DEFINE_ERROR(Infeasible);

#undef GRAPHCERT_DEFINE_ERROR

}  // namespace graphcert

#endif  // GRAPHCERT_ERROR_HPP
