// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "pca/model.hpp"

namespace pca {

enum class EdgeKind { Hollow, Nose };

struct SynEdge {
  Id from = 0;
  Id to = 0;
  EdgeKind kind = EdgeKind::Nose;
  Id order = 0;  // 1 for hollows
  Id bal = 0;
  Id ext = 0;
  bool operator==(const SynEdge&) const = default;
};

/// Synthetic graph.  `edges` is sorted by source, hollows first, then by
/// order.  For S^k each vertex has at most one hollow and one nose, and
/// `hollow_out` / `nose_out` index into `edges`; the star form leaves them
/// empty.
struct SynGraph {
  Id k = 0;
  Id n = 0;
  std::vector<SynEdge> edges;
  std::vector<Id> hollow_out;
  std::vector<Id> nose_out;

  const SynEdge* hollow(Id a) const { return hollow_out[a] == kNone ? nullptr : &edges[hollow_out[a]]; }
  const SynEdge* nose(Id a) const { return nose_out[a] == kNone ? nullptr : &edges[nose_out[a]]; }
  /// First edge a -> b, or null.
  const SynEdge* find(Id a, Id b) const;
};

SynEdge make_hollow(Id from, Id to);
SynEdge make_nose(Id from, Id to, Id order);

/// S^k by the mu/H rule over the H_r functional graph.
SynGraph build_syn(const Model& m, Id k);
SynGraph build_syn(const Model& m, const Nav& nav, Id k);
/// S^k by k rounds of nose advancing and pruning starting from S^0.
SynGraph build_syn_incremental(const Model& m, Id k);
SynGraph build_syn_incremental(const Model& m, const Nav& nav, Id k);
/// Hollows plus every i-nose for i <= k.
SynGraph build_syn_star(const Model& m, Id k);
SynGraph build_syn_star(const Model& m, const Nav& nav, Id k);

/// l*Bal + c*Ext + 2*[nose].
Int sep_weight(const SynEdge& e, Int c, Int ell);

bool is_internal(const SynEdge& e);

struct Geometry {
  std::vector<Id> row;
  std::vector<Id> col0;
  Id rows = 0;
  Id cols = 0;

  bool rightmost(Id a) const;
  bool backward(const SynEdge& e) const;
  bool forward(const SynEdge& e) const;
  /// Rows crossed by an internal edge.
  Id jump(const SynEdge& e) const { return row[e.to] - row[e.from]; }
};

/// Rows and columns of a connected model.  Columns come from the longest
/// forward path in the star graph of order omega - 1.
Geometry rows_cols(const Model& m);
Geometry rows_cols(const Model& m, const Nav& nav, Id omega);
/// Row assignment only.
std::vector<Id> rows_of(const Model& m, const Nav& nav);

struct WalkWeights {
  Int bal = 0;
  Int ext = 0;
  Int mu = 0;
  Int eta = 0;
  Int mu_ext = 0;
  Int eta_ext = 0;
  Int backward = 0;
  std::optional<Int> jump;
};

/// Sums edge weights along a vertex walk.  With a geometry, also the jump
/// when every edge is internal.
WalkWeights walk_weights(const SynGraph& g, const std::vector<Id>& walk, const Geometry* geo = nullptr);
/// Same over explicit edge indices of g (needed for star graphs with
/// parallel noses).
WalkWeights edge_walk_weights(const SynGraph& g, const std::vector<Id>& edge_ids, const Geometry* geo = nullptr);

struct Segment {
  Int x1, y1, x2, y2;
  EdgeKind kind;
  bool backward;
};

struct Drawing {
  std::vector<Segment> segments;
  std::vector<std::pair<std::size_t, std::size_t>> crossings;
};

/// Arrows of the internal edges of S^k over p copies, plus every pair that
/// meets somewhere other than a shared endpoint.
Drawing drawing_arrows(const Model& m, Id k, Id copies);
Drawing drawing_arrows(const SynGraph& g, const Geometry& geo, Id copies);

bool segments_cross(const Segment& a, const Segment& b);

}  // namespace pca
