// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <vector>

#include "pca/base.hpp"

namespace pca {

/// Open arc (s, t) read clockwise.  External when t < s.
struct Arc {
  Int s = 0;
  Int t = 0;
  bool operator==(const Arc&) const = default;
};

/// A validated proper circular-arc model.  Arcs are sorted by beginning
/// point and the position in `arcs` is the arc id.  `line` marks a model
/// read from a `circle pig` file; the circle then has length one past the
/// largest extreme.
struct Model {
  Int c = 0;
  bool line = false;
  std::vector<Arc> arcs;

  Id n() const { return static_cast<Id>(arcs.size()); }
  bool external(Id a) const { return arcs[a].t < arcs[a].s; }
  /// Clockwise length of arc a.
  Int length(Id a) const { return mod(arcs[a].t - arcs[a].s, c); }
  /// True iff point x lies strictly inside arc a.
  bool contains_point(Id a, Int x) const;
  bool intersects(Id a, Id b) const;
  bool operator==(const Model&) const = default;
};

/// Sorts and checks a raw arc list.  For line models every arc must be
/// internal.
Model validate(Int c, bool line, std::vector<Arc> raw);

/// Whether arc a lies strictly inside arc b on a circle of length c.
bool arc_inside(const Arc& a, const Arc& b, Int c);

struct Nav {
  std::vector<Id> L, R, Fl, Fr, Hl, Hr;
};

Nav navigation(const Model& m);

/// Point plus a symbolic epsilon rank; an integer point has eps 0.
struct EpsPoint {
  Int base = 0;
  Int eps = 0;
  auto operator<=>(const EpsPoint&) const = default;
};

struct PowerArc {
  Int s = 0;
  EpsPoint t;
};

struct PowerModel {
  Int c = 0;
  std::vector<PowerArc> arcs;
  Id n() const { return static_cast<Id>(arcs.size()); }
  bool contains_point(Id a, Int x) const;
};

/// Wraparound value.  Equals n for models without external arcs.
Id omega(const Model& m);
Id omega(const Model& m, const Nav& nav);

PowerModel power(const Model& m, Id k);
PowerModel power(const Model& m, const Nav& nav, Id k);

/// Views an integer model as a power model with the same extremes.
PowerModel as_power(const Model& m);

/// i-multiple of a uniform model: every arc becomes (s, s + i*ell + 1).
Model multiply(const Model& u, Int i);
/// Common arc length (ell + 1) of a uniform model; throws NotUniform.
Int uniform_length(const Model& u);

Model to_even(const Model& m);

/// Rotates the circle so the initial arc begins at 0.
Model normalize(const Model& m);

bool equivalent(const PowerModel& a, const PowerModel& b);
bool equivalent(const Model& a, const Model& b);
bool equivalent(const Model& a, const PowerModel& b);

struct Unrolled {
  Model model;
  /// For each arc of the unrolled model: (original id, copy index).
  std::vector<std::pair<Id, Id>> copy_of;
};

Unrolled unroll(const Model& m, Id lambda);

struct Digraph {
  Id n = 0;
  std::vector<std::vector<Id>> out;
  bool has_edge(Id a, Id b) const;
  bool operator==(const Digraph&) const = default;
};

Digraph digraph(const Model& m);
Digraph digraph(const PowerModel& m);

struct Classification {
  bool pig = false;
  bool spca = false;
  bool connected = false;
  bool saturated = false;
};

Classification classify(const Model& m);
Classification classify(const Model& m, const Nav& nav);

/// Number of arcs A other than the initial one with L(A) and A disjoint.
Id gap_count(const Model& m);
bool is_pig(const Model& m);

}  // namespace pca
