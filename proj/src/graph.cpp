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

#include "graphcert/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>

#include "graphcert/error.hpp"
#include "json.hpp"

namespace graphcert {

namespace {

std::vector<Edge> normalize_edges(int n, const std::vector<Edge>& edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw InvalidEdge("edge endpoint out of range: (" + std::to_string(a) +
                        ", " + std::to_string(b) + ")");
    if (a == b) throw InvalidEdge("self-loop at vertex " + std::to_string(a));
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

ColoredGraph build_colored_graph(int n, const std::vector<Edge>& edges) {
  if (n < 1) throw InvalidParams("vertex count must be >= 1");
  ColoredGraph g;
  g.n = n;
  g.edges = normalize_edges(n, edges);

  std::vector<std::vector<int>> adj(n + 1);
  for (auto [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  std::vector<int> color(n + 1, -1);  // 0 / 1 within a component
  for (int start = 1; start <= n; ++start) {
    if (color[start] != -1) continue;
    // BFS 2-coloring of the component rooted at its lowest-index vertex.
    std::vector<int> cls[2];
    color[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      cls[color[v]].push_back(v);
      for (int w : adj[v]) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          throw NotTwoColorable("odd cycle through vertices " +
                                std::to_string(v) + " and " +
                                std::to_string(w));
        }
      }
    }
    // Larger class to s1; ties keep the root's class (class 0) in s1.
    int to_s1 = cls[1].size() > cls[0].size() ? 1 : 0;
    for (int v : cls[to_s1]) g.s1.insert(v);
    for (int v : cls[1 - to_s1]) g.s2.insert(v);
  }
  return g;
}

std::set<int> neighbors(const ColoredGraph& g, int i) {
  if (i < 1 || i > g.n)
    throw InvalidVertex("vertex out of range: " + std::to_string(i));
  std::set<int> out;
  for (auto [a, b] : g.edges) {
    if (a == i) out.insert(b);
    if (b == i) out.insert(a);
  }
  return out;
}

ColoredGraph standard_graph(GraphKind kind, int a, int b) {
  std::vector<Edge> edges;
  switch (kind) {
    case GraphKind::path: {
      if (a < 1) throw InvalidParams("path length must be >= 1");
      for (int i = 1; i < a; ++i) edges.emplace_back(i, i + 1);
      return build_colored_graph(a, edges);
    }
    case GraphKind::even_cycle: {
      if (a < 4 || a % 2 != 0)
        throw InvalidParams("cycle length must be even and >= 4");
      for (int i = 1; i < a; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(a, 1);
      return build_colored_graph(a, edges);
    }
    case GraphKind::grid: {
      if (a < 1 || b < 1) throw InvalidParams("grid sides must be >= 1");
      auto id = [b](int r, int c) { return r * b + c + 1; };  // row-major
      for (int r = 0; r < a; ++r)
        for (int c = 0; c < b; ++c) {
          if (c + 1 < b) edges.emplace_back(id(r, c), id(r, c + 1));
          if (r + 1 < a) edges.emplace_back(id(r, c), id(r + 1, c));
        }
      return build_colored_graph(a * b, edges);
    }
  }
  throw InvalidParams("unknown graph kind");
}

ColoredGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParams("cannot open graph file: " + path);
  nlohmann::json j;
  in >> j;
  int n = j.at("n").get<int>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return build_colored_graph(n, edges);
}

ColoredGraph parse_graph_spec(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') return load_graph_file(spec.substr(1));
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw InvalidParams("graph spec must be kind:params or @file: " + spec);
  std::string kind = spec.substr(0, colon);
  std::string params = spec.substr(colon + 1);
  try {
    if (kind == "path") return standard_graph(GraphKind::path, std::stoi(params));
    if (kind == "cycle")
      return standard_graph(GraphKind::even_cycle, std::stoi(params));
    if (kind == "grid") {
      auto x = params.find('x');
      if (x == std::string::npos)
        throw InvalidParams("grid spec must be grid:RxC");
      return standard_graph(GraphKind::grid, std::stoi(params.substr(0, x)),
                            std::stoi(params.substr(x + 1)));
    }
  } catch (const std::invalid_argument&) {
    throw InvalidParams("bad graph spec parameters: " + spec);
  }
  throw InvalidParams("unknown graph kind: " + kind);
}

}  // namespace graphcert
