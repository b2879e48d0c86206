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

// Experiment harness: verification runs, protocol simulations, Monte Carlo
// sweeps, bound calculators, cost reports. JSON-lines is the canonical
// output; CSV is a projection with alphabetically ordered flattened columns.
//
// Exit codes: 0 success, 2 config error, 3 infeasible parameters,
// 4 internal invariant violation.

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "graphcert/bounds.hpp"
#include "graphcert/error.hpp"
#include "graphcert/protocol.hpp"
#include "graphcert/serialize.hpp"
#include "graphcert/witness.hpp"

namespace gc = graphcert;
using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Output plumbing.

void flatten(const json& j, const std::string& prefix,
             std::map<std::string, std::string>& out) {
  if (j.is_object()) {
    for (auto& [k, v] : j.items())
      flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_string()) {
    out[prefix] = j.get<std::string>();
  } else {
    out[prefix] = j.dump();
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    q += c;
    if (c == '"') q += '"';
  }
  return q + "\"";
}

void emit(const std::vector<json>& rows, const std::string& format) {
  if (format == "json-lines") {
    for (const auto& row : rows) std::cout << row.dump() << "\n";
    return;
  }
  // CSV projection: columns are the union of flattened keys, sorted.
  std::vector<std::map<std::string, std::string>> flat;
  std::map<std::string, bool> columns;
  for (const auto& row : rows) {
    std::map<std::string, std::string> f;
    flatten(row, "", f);
    for (auto& [k, v] : f) columns[k] = true;
    flat.push_back(std::move(f));
  }
  bool first = true;
  for (auto& [k, _] : columns) {
    std::cout << (first ? "" : ",") << csv_escape(k);
    first = false;
  }
  std::cout << "\n";
  for (auto& f : flat) {
    first = true;
    for (auto& [k, _] : columns) {
      auto it = f.find(k);
      std::cout << (first ? "" : ",")
                << (it == f.end() ? "" : csv_escape(it->second));
      first = false;
    }
    std::cout << "\n";
  }
}

// ---------------------------------------------------------------------------
// Shared experiment configuration assembled from flags.

struct CliOptions {
  std::string graph_spec;
  int n = 0;
  std::string strategy = "honest";
  double q = 0;
  std::string error_type = "z";
  int vertex = 0;
  int edge_delta = 1;
  double fraction_bad = 0;
  std::string bad_kind = "product_zero";
  double noise_p = 0;
  int traps_k = 0;
  double p_th = 0.1;
  std::string trap_state = "zero";
  double trap_confidence = 0.99;
  long long trials = 1;
  std::uint64_t seed = 0;
  std::string format = "json-lines";
  double lambda = 0;
  std::string variant = "appendix";
  double c_override = -1;
  int workers = 1;
  std::string dispute = "auto_if_reject";
  int pool_size = 2;
};

gc::ColoredGraph resolve_graph(const CliOptions& opt) {
  if (!opt.graph_spec.empty()) return gc::parse_graph_spec(opt.graph_spec);
  if (opt.n <= 0) throw gc::InvalidConfig("provide --graph or --n");
  if (opt.n % 2 == 0)
    return gc::standard_graph(gc::GraphKind::even_cycle, opt.n);
  return gc::standard_graph(gc::GraphKind::path, opt.n);
}

gc::AdversaryStrategy resolve_strategy(const CliOptions& opt) {
  gc::AdversaryStrategy s;
  s.kind = gc::strategy_kind_from_name(opt.strategy);
  s.q = opt.q;
  if (opt.error_type == "x") s.error_type = gc::PauliErrorType::X;
  else if (opt.error_type == "z") s.error_type = gc::PauliErrorType::Z;
  else if (opt.error_type == "depolarizing")
    s.error_type = gc::PauliErrorType::depolarizing;
  else throw gc::InvalidConfig("error type must be x, z, or depolarizing");
  s.vertex = opt.vertex;
  s.edge_delta = opt.edge_delta;
  s.fraction_bad = opt.fraction_bad;
  s.bad_kind = gc::strategy_kind_from_name(opt.bad_kind);
  return s;
}

gc::ProtocolConfig resolve_protocol_config(const CliOptions& opt) {
  gc::ProtocolConfig cfg;
  cfg.graph = resolve_graph(opt);
  cfg.strategy = resolve_strategy(opt);
  cfg.noise_p = opt.noise_p;
  cfg.client_pool_size = opt.pool_size;
  if (opt.dispute == "auto_if_reject")
    cfg.dispute_policy = gc::DisputePolicy::auto_if_reject;
  else if (opt.dispute == "never")
    cfg.dispute_policy = gc::DisputePolicy::never;
  else if (opt.dispute == "always")
    cfg.dispute_policy = gc::DisputePolicy::always;
  else throw gc::InvalidConfig("dispute must be auto_if_reject|never|always");
  if (opt.traps_k > 0) {
    gc::TrapConfig t;
    t.k = opt.traps_k;
    t.p_th = opt.p_th;
    t.confidence = opt.trap_confidence;
    t.state = opt.trap_state == "plus" ? gc::TrapState::plus
                                       : gc::TrapState::zero;
    cfg.traps = t;
  }
  cfg.lambda_client = opt.lambda;
  cfg.lambda_arbiter = opt.lambda;
  cfg.variant = opt.variant == "theorem" ? gc::CertificateVariant::theorem
                                         : gc::CertificateVariant::appendix;
  cfg.c_override = opt.c_override;
  return cfg;
}

// Each trial gets its own seed derived from (master seed, trial index) only.
std::uint64_t trial_seed(std::uint64_t master, long long trial) {
  return gc::Rng(master).child(static_cast<std::uint64_t>(trial)).next_u64();
}

template <class F>
std::vector<json> run_trials(long long trials, int workers, F&& fn) {
  std::vector<json> rows(static_cast<std::size_t>(trials));
  std::atomic<long long> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    for (;;) {
      long long i = next.fetch_add(1);
      if (i >= trials) break;
      try {
        rows[static_cast<std::size_t>(i)] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        break;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;  // ordered by trial index regardless of completion order
}

// ---------------------------------------------------------------------------
// Subcommands.

int cmd_verify(const CliOptions& opt) {
  auto g = resolve_graph(opt);
  auto strategy = resolve_strategy(opt);
  auto plan = gc::plan_parameters(g.n);
  double C = opt.c_override >= 0 ? opt.c_override : plan.C_client;

  auto rows = run_trials(opt.trials, opt.workers, [&](long long trial) {
    std::uint64_t tseed = trial_seed(opt.seed, trial);
    gc::Rng rng(tseed);
    gc::Rng prep_rng = rng.child(1);
    gc::Rng verify_rng = rng.child(2);
    auto batch = gc::bob_prepare(strategy, g, 2 * plan.K, prep_rng);
    auto verdict = gc::run_verification(batch, g, C, verify_rng);
    json row;
    row["trial"] = trial;
    row["master_seed"] = opt.seed;
    row["trial_seed"] = tseed;
    row["verdict"] = gc::to_json(verdict);
    if (verdict.accepted) {
      double lam = opt.lambda;
      if (lam == 0) {
        auto [lo, hi] = gc::lambda_range(g.n, gc::Role::client);
        lam = std::clamp(1.0, lo, hi);
      }
      row["certificate"] = gc::to_json(gc::client_certificate(
          g.n, plan.K, verdict.K1 + verdict.K2, lam));
    }
    return row;
  });

  long long accepted = 0;
  for (auto& row : rows)
    if (row["verdict"]["accepted"].get<bool>()) ++accepted;
  json summary;
  summary["trial"] = -1;
  summary["master_seed"] = opt.seed;
  summary["summary.trials"] = opt.trials;
  summary["summary.acceptance_rate"] =
      static_cast<double>(accepted) / static_cast<double>(opt.trials);
  rows.push_back(summary);
  emit(rows, opt.format);
  return 0;
}

int cmd_protocol(const CliOptions& opt) {
  auto cfg = resolve_protocol_config(opt);
  auto rows = run_trials(opt.trials, opt.workers, [&](long long trial) {
    gc::ProtocolConfig trial_cfg = cfg;
    trial_cfg.master_seed = trial_seed(opt.seed, trial);
    auto tr = gc::run_protocol(trial_cfg);
    json row = gc::to_json(tr);
    row["trial"] = trial;
    row["master_seed"] = opt.seed;
    row["trial_seed"] = trial_cfg.master_seed;
    return row;
  });

  long long accepted = 0, blame_bob = 0, blame_alice1 = 0;
  double mean_qubits = 0, mean_failures = 0;
  for (auto& row : rows) {
    if (row["client_verdict"]["accepted"].get<bool>()) ++accepted;
    std::string blame = row["blame"].get<std::string>();
    blame_bob += blame == "bob";
    blame_alice1 += blame == "alice1";
    mean_qubits += row["counters"]["qubits_transmitted"].get<double>();
    mean_failures += row["client_verdict"]["K1"].get<double>() +
                     row["client_verdict"]["K2"].get<double>();
  }
  json summary;
  summary["trial"] = -1;
  summary["master_seed"] = opt.seed;
  summary["summary.trials"] = opt.trials;
  summary["summary.acceptance_rate"] =
      static_cast<double>(accepted) / static_cast<double>(opt.trials);
  summary["summary.blame_bob"] = blame_bob;
  summary["summary.blame_alice1"] = blame_alice1;
  summary["summary.mean_qubits_transmitted"] =
      mean_qubits / static_cast<double>(opt.trials);
  summary["summary.mean_client_failures"] =
      mean_failures / static_cast<double>(opt.trials);
  rows.push_back(summary);
  emit(rows, opt.format);
  return 0;
}

int cmd_sweep(const CliOptions& opt, const std::string& axis,
              const std::vector<double>& values) {
  if (values.empty()) throw gc::InvalidConfig("sweep needs --values");
  std::vector<json> rows;
  for (double value : values) {
    CliOptions point = opt;
    if (axis == "q") point.q = value;
    else if (axis == "p") point.noise_p = value;
    else if (axis == "n") {
      point.n = static_cast<int>(value);
      point.graph_spec.clear();
    } else if (axis == "C") point.c_override = value;
    else throw gc::InvalidConfig("axis must be q, p, n, or C");

    auto cfg = resolve_protocol_config(point);
    auto t0 = std::chrono::steady_clock::now();
    long long accepted = 0;
    double sum_failures = 0;
    auto trial_rows =
        run_trials(point.trials, point.workers, [&](long long trial) {
          gc::ProtocolConfig trial_cfg = cfg;
          trial_cfg.master_seed = trial_seed(point.seed, trial);
          auto tr = gc::run_protocol(trial_cfg);
          json row;
          row["accepted"] = tr.client_verdict->accepted;
          row["failures"] = tr.client_verdict->K1 + tr.client_verdict->K2;
          return row;
        });
    for (auto& r : trial_rows) {
      accepted += r["accepted"].get<bool>() ? 1 : 0;
      sum_failures += r["failures"].get<double>();
    }
    auto t1 = std::chrono::steady_clock::now();

    json row;
    row["axis"] = axis;
    row["value"] = value;
    row["master_seed"] = point.seed;
    row["trials"] = point.trials;
    row["acceptance_rate"] =
        static_cast<double>(accepted) / static_cast<double>(point.trials);
    row["mean_failures"] = sum_failures / static_cast<double>(point.trials);
    auto plan = gc::plan_parameters(cfg.graph.n);
    long long typical =
        static_cast<long long>(std::ceil(sum_failures / point.trials));
    try {
      double lam = point.lambda;
      if (lam == 0) {
        auto [lo, hi] = gc::lambda_range(cfg.graph.n, gc::Role::client);
        lam = std::clamp(1.0, lo, hi);
      }
      auto cert = gc::client_certificate(cfg.graph.n, plan.K, typical, lam);
      row["F_low"] = cert.fidelity_bound;
      row["P_low"] = cert.confidence_bound;
    } catch (const gc::Error&) {
      row["F_low"] = nullptr;  // mean failures exceed the threshold
      row["P_low"] = nullptr;
    }
    row["wall_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    rows.push_back(std::move(row));
  }
  emit(rows, opt.format);
  return 0;
}

int cmd_bounds(const CliOptions& opt, const std::string& what, long long N,
               long long K, double v, long long m, double t, double failures,
               const std::string& role, const std::string& sato_k,
               const std::string& sato_m) {
  json row;
  row["what"] = what;
  if (what == "plan") {
    row["plan"] = gc::to_json(gc::plan_parameters(opt.n));
  } else if (what == "serfling") {
    row["bound"] = gc::serfling_bound({N, K, v});
  } else if (what == "azuma") {
    gc::AzumaParams p;
    p.ranges.assign(static_cast<std::size_t>(m), {0.0, 1.0});
    p.t = t;
    row["bound"] = gc::azuma_hoeffding_bound(p);
  } else if (what == "certificate") {
    auto plan = gc::plan_parameters(opt.n);
    long long kk = K > 0 ? K : plan.K;
    double lam = opt.lambda;
    gc::Role r = role == "arbiter" ? gc::Role::arbiter : gc::Role::client;
    if (lam == 0) {
      auto [lo, hi] = gc::lambda_range(opt.n, r);
      lam = std::clamp(1.0, lo, hi);
    }
    auto fail = static_cast<long long>(failures);
    row["certificate"] = gc::to_json(
        r == gc::Role::arbiter
            ? gc::arbiter_certificate(opt.n, kk, fail, lam,
                                      opt.variant == "theorem"
                                          ? gc::CertificateVariant::theorem
                                          : gc::CertificateVariant::appendix)
            : gc::client_certificate(opt.n, kk, fail, lam));
  } else if (what == "cost") {
    row["cost"] = gc::to_json(gc::cost_comparison(opt.n, sato_k, sato_m));
  } else {
    throw gc::InvalidConfig(
        "bounds expects plan|serfling|azuma|certificate|cost");
  }
  emit({row}, opt.format);
  return 0;
}

int cmd_replay(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw gc::InvalidConfig("cannot open " + path);
  json doc = json::parse(in, nullptr, true);
  bool had_transcript = doc.contains("config");
  gc::ProtocolConfig cfg =
      gc::protocol_config_from_json(had_transcript ? doc["config"] : doc);
  auto tr = gc::run_protocol(cfg);
  json out = gc::to_json(tr);
  emit({out}, format);
  if (had_transcript) {
    // every field the original run recorded must reproduce exactly
    json original = doc;
    original.erase("trial");
    original.erase("master_seed");
    original.erase("trial_seed");
    if (original != out) {
      std::cerr << "replay mismatch: transcript does not reproduce\n";
      return 4;
    }
  }
  return 0;
}

void add_common_flags(CLI::App* cmd, CliOptions& opt, bool needs_seed = true) {
  cmd->add_option("--graph", opt.graph_spec,
                  "graph spec: path:N, cycle:N, grid:RxC, or @file.json");
  cmd->add_option("--n", opt.n, "vertex count (cycle if even, else path)");
  cmd->add_option("--strategy", opt.strategy,
                  "honest|iid_pauli|wrong_graph|product_plus|product_zero|"
                  "mixed_batch");
  cmd->add_option("--q", opt.q, "iid_pauli per-qubit error probability");
  cmd->add_option("--error-type", opt.error_type, "x|z|depolarizing");
  cmd->add_option("--vertex", opt.vertex,
                  "1-indexed vertex hit by iid_pauli (0 = all)");
  cmd->add_option("--edge-delta", opt.edge_delta, "wrong_graph edge delta");
  cmd->add_option("--fraction-bad", opt.fraction_bad,
                  "mixed_batch bad fraction");
  cmd->add_option("--bad-kind", opt.bad_kind, "mixed_batch bad strategy");
  cmd->add_option("--noise-p", opt.noise_p, "per-qubit bit-flip prob per hop");
  cmd->add_option("--traps-k", opt.traps_k, "trap qubits per register");
  cmd->add_option("--p-th", opt.p_th, "trap noise threshold");
  cmd->add_option("--trap-state", opt.trap_state, "zero|plus");
  cmd->add_option("--trap-confidence", opt.trap_confidence,
                  "trap check confidence");
  cmd->add_option("--trials", opt.trials, "Monte Carlo trials")
      ->check(CLI::PositiveNumber);
  auto* seed = cmd->add_option("--seed", opt.seed,
                               "master seed (mandatory, no clock default)");
  if (needs_seed) seed->required();
  cmd->add_option("--format", opt.format, "json-lines|csv")
      ->check(CLI::IsMember({"json-lines", "csv"}));
  cmd->add_option("--lambda", opt.lambda, "certificate lambda (0 = auto)");
  cmd->add_option("--variant", opt.variant, "theorem|appendix")
      ->check(CLI::IsMember({"theorem", "appendix"}));
  cmd->add_option("--c-override", opt.c_override,
                  "verification threshold override (< 0: plan default)");
  cmd->add_option("--workers", opt.workers, "worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--dispute", opt.dispute, "auto_if_reject|never|always");
  cmd->add_option("--pool-size", opt.pool_size, "client pool size l >= 2");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph-state verification and protocol simulator"};
  app.require_subcommand(1);

  CliOptions opt;

  auto* verify = app.add_subcommand("verify", "run the verification algorithm");
  add_common_flags(verify, opt);

  auto* protocol = app.add_subcommand("protocol", "run the full protocol");
  add_common_flags(protocol, opt);

  std::string axis = "q";
  std::vector<double> values;
  auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over one axis");
  add_common_flags(sweep, opt);
  sweep->add_option("--axis", axis, "q|p|n|C");
  sweep->add_option("--values", values, "axis values")->delimiter(',');

  std::string what;
  long long bN = 0, bK = 0, bm = 0;
  double bv = 0, bt = 0, bfailures = 0;
  std::string role = "client", sato_k, sato_m;
  auto* bounds = app.add_subcommand("bounds", "bound and certificate calculator");
  add_common_flags(bounds, opt, /*needs_seed=*/false);
  bounds->add_option("what", what, "plan|serfling|azuma|certificate|cost")
      ->required();
  bounds->add_option("--N", bN, "serfling remainder size");
  bounds->add_option("--K", bK, "sample size / register count");
  bounds->add_option("--v", bv, "serfling deviation");
  bounds->add_option("--m", bm, "azuma variable count (unit ranges)");
  bounds->add_option("--t", bt, "azuma deviation");
  bounds->add_option("--failures", bfailures, "observed failure count");
  bounds->add_option("--role", role, "client|arbiter");
  bounds->add_option("--sato-k", sato_k, "comparison protocol k");
  bounds->add_option("--sato-m", sato_m, "comparison protocol m");

  std::string replay_path;
  auto* replay = app.add_subcommand("replay", "re-run a serialized transcript");
  replay->add_option("--in", replay_path, "transcript or config JSON file")
      ->required();
  std::string replay_format = "json-lines";
  replay->add_option("--format", replay_format, "json-lines|csv");

  try {
    app.parse(argc, argv);
    if (verify->parsed()) return cmd_verify(opt);
    if (protocol->parsed()) return cmd_protocol(opt);
    if (sweep->parsed()) return cmd_sweep(opt, axis, values);
    if (bounds->parsed())
      return cmd_bounds(opt, what, bN, bK, bv, bm, bt, bfailures, role,
                        sato_k, sato_m);
    if (replay->parsed()) return cmd_replay(replay_path, replay_format);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const gc::TooSmallN& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const gc::Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const gc::LambdaOutOfRange& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const gc::ThresholdExceeded& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const gc::TooLarge& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const gc::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
