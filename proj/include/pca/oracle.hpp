// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "pca/construct.hpp"
#include "pca/solver.hpp"

namespace pca {

/// Every attract and repel constraint of orders 0..k, literally.
WeightedDigraph full_constraint_graph(const Model& m, Id k, Int c, Int ell);

/// The full system with parallel edges of equal shape merged: per ordered
/// pair, the attract of least order and the repel of greatest order.  Its
/// longest paths equal those of the full graph for every (c, ell).
struct FullShape {
  struct Item {
    Id from;
    Id to;
    bool attract;
    Id order;
    Int cflag;  // coefficient of c
  };
  Id n = 0;
  std::vector<Item> items;
};

FullShape full_shape(const Model& m, Id k);
WeightedDigraph instantiate(const FullShape& s, Int c, Int ell);

constexpr Id kUnreachable = -1;

std::vector<Id> digraph_distances(const Digraph& d, Id src);
Digraph digraph_power(const Digraph& d, Id i);

struct VerifyReport {
  bool ok = false;
  Id failed_i = -1;
  std::string detail;
};

/// Checks u against m and, for 1 <= i <= k, i x u against the i-th power.
/// m is compared with its initial arc rotated to 0.
VerifyReport verify_k_multiplicative(const Model& u, const Model& m, Id k);

struct CycleInfo {
  std::vector<Id> edges;     // edge indices of the graph
  std::vector<Id> vertices;  // closed vertex list
  Int bal = 0;
  Int ext = 0;
};

/// All simple cycles (as edge sequences).  Refuses graphs above `max_n`.
std::vector<CycleInfo> enumerate_cycles(const SynGraph& g, Id max_n = 14);

/// True iff every pair of cycles with Ext of opposite signs meets.
bool crossing_cycles_check(const SynGraph& g);

/// Longest Lex distances by Bellman-Ford; empty result on a non-negative
/// Lex cycle.
std::vector<LexValue> lex_bellman_ford(const SynGraph& g, const Rational& ratio);

}  // namespace pca
