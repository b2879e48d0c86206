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

#ifndef GRAPHCERT_GRAPH_HPP
#define GRAPHCERT_GRAPH_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace graphcert {

/// Unordered vertex pair; vertices are 1-indexed everywhere.
using Edge = std::pair<int, int>;

/// A simple bipartite graph together with its two color classes.
///
/// Immutable after construction; the bipartition (s1, s2) is always computed
/// by the library, never taken on trust from input.
struct ColoredGraph {
  int n = 0;
  std::vector<Edge> edges;   // normalized: i < j, sorted, no duplicates
  std::set<int> s1, s2;      // disjoint, s1 ∪ s2 = {1..n}, no intra-set edge

  bool in_s1(int v) const { return s1.count(v) != 0; }

  const std::set<int>& color_class(int j) const { return j == 1 ? s1 : s2; }
};

/// Builds a ColoredGraph from an edge list, computing the bipartition by
/// breadth-first 2-coloring. Per connected component the larger color class
/// goes to s1; on a tie the class containing the component's lowest-index
/// vertex goes to s1. Deterministic.
///
/// Throws InvalidEdge for out-of-range endpoints or self-loops,
/// NotTwoColorable if the graph contains an odd cycle.
ColoredGraph build_colored_graph(int n, const std::vector<Edge>& edges);

/// Neighbor set N(i). Throws InvalidVertex for out-of-range i.
std::set<int> neighbors(const ColoredGraph& g, int i);

enum class GraphKind { path, even_cycle, grid };

/// Canonical test fixtures: path P_n, even cycle C_n, rows x cols grid.
/// Throws InvalidParams for non-bipartite requests (odd cycles) or
/// degenerate sizes.
ColoredGraph standard_graph(GraphKind kind, int a, int b = 0);

/// Parses "path:N", "cycle:N", "grid:RxC", or "@file.json" where the file
/// holds {"n": ..., "edges": [[i,j], ...]} (1-indexed). Coloring is always
/// recomputed.
ColoredGraph parse_graph_spec(const std::string& spec);

ColoredGraph load_graph_file(const std::string& path);

}  // namespace graphcert

#endif  // GRAPHCERT_GRAPH_HPP
