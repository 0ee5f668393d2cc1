// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "pca/syngraph.hpp"

namespace pca {

struct WEdge {
  Id from = 0;
  Id to = 0;
  Int w = 0;
};

struct WeightedDigraph {
  Id n = 0;
  std::vector<WEdge> edges;
};

/// Longest paths from a source.  When g has a positive cycle anywhere,
/// reachable or not, `feasible` is false, `cycle` holds its edge indices in
/// walk order and `dist` is meaningless.
struct LongestPaths {
  bool feasible = true;
  std::vector<Int> dist;
  std::vector<char> reached;
  std::vector<Id> cycle;
  Int cycle_weight = 0;
};

LongestPaths bellman_ford_longest(const WeightedDigraph& g, Id source);

/// Weighted constraint digraph of a synthetic graph; edge i of the result
/// is edge i of g.
WeightedDigraph sep_graph(const SynGraph& g, Int c, Int ell);

struct InfeasibleCycle {
  std::vector<Id> cycle;  // closed vertex list
  Int weight = 0;
  std::vector<std::string> constraints;
};

/// Renders a positive cycle of g (edge indices) as its inequalities.
InfeasibleCycle certificate_from_cycle(const SynGraph& g, const std::vector<Id>& edge_ids, Int c, Int ell);

struct SolveResult {
  bool feasible = false;
  Model model;                // (c, ell+1)-CA model when feasible
  std::vector<Int> dist;
  InfeasibleCycle cert;       // when infeasible
  bool parity_warning = false;  // odd c or ell: infeasibility proves less
};

SolveResult solve_fixed(const Model& m, Id k, Int c, Int ell);

}  // namespace pca
