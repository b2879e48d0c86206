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

#include "graphcert/serialize.hpp"

#include "graphcert/error.hpp"

namespace graphcert {

using nlohmann::json;

json to_json(const ColoredGraph& g) {
  json edges = json::array();
  for (auto [a, b] : g.edges) edges.push_back({a, b});
  return {{"n", g.n}, {"edges", edges}};
}

ColoredGraph graph_from_json(const json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return build_colored_graph(j.at("n").get<int>(), edges);
}

json to_json(const VerificationVerdict& v) {
  return {{"K1", v.K1},
          {"K2", v.K2},
          {"C", v.C},
          {"accepted", v.accepted},
          {"group1", v.group1},
          {"group2", v.group2}};
}

json to_json(const FidelityCertificate& c) {
  return {{"role", c.role == Role::client ? "client" : "arbiter"},
          {"n", c.n},
          {"K", c.K},
          {"observed_failures", c.observed_failures},
          {"lambda", c.lambda},
          {"fidelity_bound", c.fidelity_bound},
          {"confidence_bound", c.confidence_bound},
          {"vacuous", c.vacuous()},
          {"variant",
           c.variant == CertificateVariant::theorem ? "theorem" : "appendix"}};
}

json to_json(const ProtocolPlan& p) {
  return {{"n", p.n},
          {"K", p.K},
          {"copies", p.copies},
          {"C_client", p.C_client},
          {"C_arbiter", p.C_arbiter}};
}

json to_json(const CostReport& r) {
  return {{"n", r.n},
          {"our_copies", r.our_copies},
          {"our_local_measurements", r.our_local_measurements},
          {"sato_copies", r.sato_copies},
          {"sato_local_measurements", r.sato_local_measurements},
          {"ours_cheaper", r.ours_cheaper}};
}

std::string strategy_kind_name(StrategyKind k) {
  switch (k) {
    case StrategyKind::honest: return "honest";
    case StrategyKind::iid_pauli: return "iid_pauli";
    case StrategyKind::wrong_graph: return "wrong_graph";
    case StrategyKind::product_plus: return "product_plus";
    case StrategyKind::product_zero: return "product_zero";
    case StrategyKind::mixed_batch: return "mixed_batch";
  }
  throw InvalidParams("unknown strategy kind");
}

StrategyKind strategy_kind_from_name(const std::string& name) {
  if (name == "honest") return StrategyKind::honest;
  if (name == "iid_pauli") return StrategyKind::iid_pauli;
  if (name == "wrong_graph") return StrategyKind::wrong_graph;
  if (name == "product_plus") return StrategyKind::product_plus;
  if (name == "product_zero") return StrategyKind::product_zero;
  if (name == "mixed_batch") return StrategyKind::mixed_batch;
  throw InvalidParams("unknown strategy: " + name);
}

namespace {

std::string error_type_name(PauliErrorType t) {
  switch (t) {
    case PauliErrorType::X: return "X";
    case PauliErrorType::Z: return "Z";
    case PauliErrorType::depolarizing: return "depolarizing";
  }
  throw InvalidParams("unknown error type");
}

PauliErrorType error_type_from_name(const std::string& name) {
  if (name == "X") return PauliErrorType::X;
  if (name == "Z") return PauliErrorType::Z;
  if (name == "depolarizing") return PauliErrorType::depolarizing;
  throw InvalidParams("unknown error type: " + name);
}

std::string blame_name(Blame b) {
  switch (b) {
    case Blame::none: return "none";
    case Blame::bob: return "bob";
    case Blame::alice1: return "alice1";
  }
  throw InvalidParams("unknown blame");
}

std::string dispute_policy_name(DisputePolicy p) {
  switch (p) {
    case DisputePolicy::auto_if_reject: return "auto_if_reject";
    case DisputePolicy::never: return "never";
    case DisputePolicy::always: return "always";
  }
  throw InvalidParams("unknown dispute policy");
}

DisputePolicy dispute_policy_from_name(const std::string& name) {
  if (name == "auto_if_reject") return DisputePolicy::auto_if_reject;
  if (name == "never") return DisputePolicy::never;
  if (name == "always") return DisputePolicy::always;
  throw InvalidParams("unknown dispute policy: " + name);
}

json trap_stats_json(const TrapStats& s) {
  return {{"transmissions", s.transmissions},
          {"accepted", s.accepted},
          {"flipped_total", s.flipped_total}};
}

}  // namespace

json to_json(const AdversaryStrategy& s) {
  return {{"kind", strategy_kind_name(s.kind)},
          {"q", s.q},
          {"error_type", error_type_name(s.error_type)},
          {"vertex", s.vertex},
          {"edge_delta", s.edge_delta},
          {"fraction_bad", s.fraction_bad},
          {"bad_kind", strategy_kind_name(s.bad_kind)},
          {"seed_offset", s.seed_offset}};
}

AdversaryStrategy strategy_from_json(const json& j) {
  AdversaryStrategy s;
  s.kind = strategy_kind_from_name(j.at("kind").get<std::string>());
  s.q = j.value("q", 0.0);
  s.error_type = error_type_from_name(j.value("error_type", std::string("Z")));
  s.vertex = j.value("vertex", 0);
  s.edge_delta = j.value("edge_delta", 1);
  s.fraction_bad = j.value("fraction_bad", 0.0);
  s.bad_kind = strategy_kind_from_name(
      j.value("bad_kind", std::string("product_zero")));
  s.seed_offset = j.value("seed_offset", std::uint64_t{0});
  return s;
}

json to_json(const TrapConfig& c) {
  return {{"k", c.k},
          {"state", c.state == TrapState::zero ? "zero" : "plus"},
          {"p_th", c.p_th},
          {"confidence", c.confidence}};
}

TrapConfig trap_config_from_json(const json& j) {
  TrapConfig c;
  c.k = j.at("k").get<int>();
  c.state = j.value("state", std::string("zero")) == "plus" ? TrapState::plus
                                                            : TrapState::zero;
  c.p_th = j.at("p_th").get<double>();
  c.confidence = j.value("confidence", 0.99);
  return c;
}

json to_json(const ProtocolConfig& c) {
  json j = {{"graph", to_json(c.graph)},
            {"strategy", to_json(c.strategy)},
            {"noise_p", c.noise_p},
            {"client_pool_size", c.client_pool_size},
            {"master_seed", c.master_seed},
            {"dispute_policy", dispute_policy_name(c.dispute_policy)},
            {"lambda_client", c.lambda_client},
            {"lambda_arbiter", c.lambda_arbiter},
            {"variant", c.variant == CertificateVariant::theorem ? "theorem"
                                                                 : "appendix"},
            {"c_override", c.c_override},
            {"arbiter_refusal_prob", c.arbiter_refusal_prob}};
  if (c.traps) j["traps"] = to_json(*c.traps);
  return j;
}

ProtocolConfig protocol_config_from_json(const json& j) {
  ProtocolConfig c;
  c.graph = graph_from_json(j.at("graph"));
  c.strategy = strategy_from_json(j.at("strategy"));
  c.noise_p = j.value("noise_p", 0.0);
  c.client_pool_size = j.value("client_pool_size", 2);
  c.master_seed = j.at("master_seed").get<std::uint64_t>();
  c.dispute_policy = dispute_policy_from_name(
      j.value("dispute_policy", std::string("auto_if_reject")));
  if (j.contains("traps")) c.traps = trap_config_from_json(j.at("traps"));
  c.lambda_client = j.value("lambda_client", 0.0);
  c.lambda_arbiter = j.value("lambda_arbiter", 0.0);
  c.variant = j.value("variant", std::string("appendix")) == "theorem"
                  ? CertificateVariant::theorem
                  : CertificateVariant::appendix;
  c.c_override = j.value("c_override", -1.0);
  c.arbiter_refusal_prob = j.value("arbiter_refusal_prob", 0.0);
  return c;
}

json to_json(const ProtocolTranscript& t) {
  json steps = json::array();
  for (const auto& s : t.steps) steps.push_back({{"step", s.step},
                                                 {"detail", s.detail}});
  json j = {{"config", to_json(t.config)},
            {"plan", to_json(t.plan)},
            {"steps", steps},
            {"counters",
             {{"copies_prepared", t.counters.copies_prepared},
              {"qubits_transmitted", t.counters.qubits_transmitted},
              {"trap_qubits_transmitted", t.counters.trap_qubits_transmitted},
              {"measurements_client_verification",
               t.counters.measurements_client_verification},
              {"measurements_client_computation",
               t.counters.measurements_client_computation},
              {"measurements_arbiter", t.counters.measurements_arbiter}}},
            {"arbiter_id", t.arbiter_id},
            {"blame", blame_name(t.blame)}};
  if (t.client_verdict) j["client_verdict"] = to_json(*t.client_verdict);
  if (t.arbiter_verdict) j["arbiter_verdict"] = to_json(*t.arbiter_verdict);
  if (t.computation_register)
    j["computation_register"] = *t.computation_register;
  if (!t.computation_outcomes.empty())
    j["computation_outcomes"] = t.computation_outcomes;
  if (t.client_certificate)
    j["client_certificate"] = to_json(*t.client_certificate);
  if (t.arbiter_certificate)
    j["arbiter_certificate"] = to_json(*t.arbiter_certificate);
  if (t.config.traps)
    j["trap_stats"] = {trap_stats_json(t.trap_stats[0]),
                       trap_stats_json(t.trap_stats[1]),
                       trap_stats_json(t.trap_stats[2])};
  return j;
}

}  // namespace graphcert
