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

#ifndef GRAPHCERT_SERIALIZE_HPP
#define GRAPHCERT_SERIALIZE_HPP

#include "graphcert/bounds.hpp"
#include "graphcert/protocol.hpp"
#include "graphcert/witness.hpp"
#include "json.hpp"

namespace graphcert {

// Graphs serialize as {n, edges} with 1-indexed vertices; the coloring is
// recomputed on load, never trusted from input.
nlohmann::json to_json(const ColoredGraph& g);
ColoredGraph graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationVerdict& v);
nlohmann::json to_json(const FidelityCertificate& c);
nlohmann::json to_json(const ProtocolPlan& p);
nlohmann::json to_json(const CostReport& r);
nlohmann::json to_json(const AdversaryStrategy& s);
AdversaryStrategy strategy_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TrapConfig& c);
TrapConfig trap_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ProtocolConfig& c);
ProtocolConfig protocol_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ProtocolTranscript& t);

std::string strategy_kind_name(StrategyKind k);
StrategyKind strategy_kind_from_name(const std::string& name);

}  // namespace graphcert

#endif  // GRAPHCERT_SERIALIZE_HPP
