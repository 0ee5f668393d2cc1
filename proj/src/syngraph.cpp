// SPDX-License-Identifier: Apache-2.0
#include "pca/syngraph.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace pca {

namespace {

void check_pre(const Model& m, const Nav& nav, Id k) {
  if (k < 0) throw Error(Errc::InvalidParams, "k must be non-negative");
  if (!classify(m, nav).connected) throw Error(Errc::Disconnected, "synthetic graph needs a connected model");
  if (k >= omega(m, nav)) throw Error(Errc::KTooLarge, "k must be below omega");
}

void finish(SynGraph& g, bool index) {
  std::sort(g.edges.begin(), g.edges.end(), [](const SynEdge& a, const SynEdge& b) {
    return std::tie(a.from, a.kind, a.order, a.to) < std::tie(b.from, b.kind, b.order, b.to);
  });
  if (!index) return;
  g.hollow_out.assign(g.n, kNone);
  g.nose_out.assign(g.n, kNone);
  for (Id i = 0; i < static_cast<Id>(g.edges.size()); ++i) {
    const SynEdge& e = g.edges[i];
    auto& slot = e.kind == EdgeKind::Hollow ? g.hollow_out[e.from] : g.nose_out[e.from];
    if (slot != kNone) throw Error(Errc::InternalVerificationFailed, "two edges of one kind leave a vertex");
    slot = i;
  }
}

void add_hollows(const Nav& nav, SynGraph& g) {
  for (Id a = 0; a < g.n; ++a) {
    Id b = nav.Fl[a];
    if (b != a && nav.Fr[b] == a) g.edges.push_back(make_hollow(a, b));
  }
}

}  // namespace

const SynEdge* SynGraph::find(Id a, Id b) const {
  for (const SynEdge& e : edges)
    if (e.from == a && e.to == b) return &e;
  return nullptr;
}

SynEdge make_hollow(Id from, Id to) {
  return SynEdge{from, to, EdgeKind::Hollow, 1, -1, to >= from ? 1 : 0};
}

SynEdge make_nose(Id from, Id to, Id order) {
  // A nose onto its own source wraps the whole circle.
  return SynEdge{from, to, EdgeKind::Nose, order, order, from >= to ? -1 : 0};
}

SynGraph build_syn(const Model& m, Id k) { return build_syn(m, navigation(m), k); }

SynGraph build_syn(const Model& m, const Nav& nav, Id k) {
  check_pre(m, nav, k);
  const Id n = m.n();
  SynGraph g;
  g.k = k;
  g.n = n;
  add_hollows(nav, g);

  // H_r is injective, so its functional graph splits into paths and cycles.
  std::vector<Id> pred(n, kNone);
  for (Id a = 0; a < n; ++a)
    if (nav.Hr[a] != kNone) pred[nav.Hr[a]] = a;
  std::vector<Id> mu(n, 0), H(n, kNone);
  std::vector<char> seen(n, 0);
  std::vector<Id> comp;
  auto assign = [&](bool cycle) {
    const Id len = static_cast<Id>(comp.size());
    for (Id i = 0; i < len; ++i) {
      Id a = comp[i];
      if (cycle) {
        mu[a] = k;
        H[a] = comp[(i + k % len) % len];
      } else {
        mu[a] = std::min<Id>(k, len - 1 - i);
        H[a] = comp[i + mu[a]];
      }
    }
  };
  for (Id a = 0; a < n; ++a) {
    if (pred[a] != kNone || seen[a]) continue;
    comp.clear();
    for (Id v = a; v != kNone; v = nav.Hr[v]) {
      seen[v] = 1;
      comp.push_back(v);
    }
    assign(false);
  }
  for (Id a = 0; a < n; ++a) {
    if (seen[a]) continue;
    comp.clear();
    for (Id v = a; !seen[v]; v = nav.Hr[v]) {
      seen[v] = 1;
      comp.push_back(v);
    }
    assign(true);
  }

  for (Id a = 0; a < n; ++a) {
    Id src = nav.L[a];
    if (mu[a] == k || nav.Hl[src] == kNone) g.edges.push_back(make_nose(src, H[a], mu[a]));
  }
  finish(g, true);
  return g;
}

SynGraph build_syn_incremental(const Model& m, Id k) { return build_syn_incremental(m, navigation(m), k); }

SynGraph build_syn_incremental(const Model& m, const Nav& nav, Id k) {
  check_pre(m, nav, k);
  const Id n = m.n();
  SynGraph g;
  g.k = k;
  g.n = n;
  add_hollows(nav, g);
  std::vector<SynEdge> noses;
  for (Id a = 0; a < n; ++a) noses.push_back(make_nose(a, nav.R[a], 0));
  for (Id j = 0; j < k; ++j) {
    std::vector<SynEdge> next;
    for (const SynEdge& e : noses) {
      if (e.order != j) {
        next.push_back(e);
      } else if (nav.Hr[e.to] != kNone) {
        next.push_back(make_nose(e.from, nav.Hr[e.to], j + 1));
      } else if (nav.Hl[e.from] == kNone) {
        next.push_back(e);
      }
    }
    noses.swap(next);
  }
  g.edges.insert(g.edges.end(), noses.begin(), noses.end());
  finish(g, true);
  return g;
}

SynGraph build_syn_star(const Model& m, Id k) { return build_syn_star(m, navigation(m), k); }

SynGraph build_syn_star(const Model& m, const Nav& nav, Id k) {
  check_pre(m, nav, k);
  const Id n = m.n();
  SynGraph g;
  g.k = k;
  g.n = n;
  add_hollows(nav, g);
  for (Id a = 0; a < n; ++a) {
    Id b = nav.R[a];
    for (Id i = 0; i <= k && b != kNone; ++i) {
      g.edges.push_back(make_nose(a, b, i));
      b = nav.Hr[b];
    }
  }
  finish(g, false);
  return g;
}

Int sep_weight(const SynEdge& e, Int c, Int ell) {
  Int w = checked_add(checked_mul(ell, e.bal), checked_mul(c, e.ext));
  return e.kind == EdgeKind::Nose ? checked_add(w, 2) : w;
}

bool is_internal(const SynEdge& e) { return e.kind == EdgeKind::Nose ? e.from < e.to : e.to < e.from; }

bool Geometry::rightmost(Id a) const {
  return a + 1 == static_cast<Id>(row.size()) || row[a + 1] != row[a];
}

bool Geometry::backward(const SynEdge& e) const {
  return e.kind == EdgeKind::Nose && is_internal(e) && rightmost(e.from);
}

bool Geometry::forward(const SynEdge& e) const { return is_internal(e) && !backward(e); }

std::vector<Id> rows_of(const Model& m, const Nav& nav) {
  const Id n = m.n();
  std::vector<Id> row(n, 0);
  for (Id a = 1; a < n; ++a) {
    Id b = nav.Fl[a];
    row[a] = (b < a && nav.Hr[b] == a) ? row[b] + 1 : row[a - 1];
  }
  return row;
}

Geometry rows_cols(const Model& m) {
  Nav nav = navigation(m);
  return rows_cols(m, nav, omega(m, nav));
}

Geometry rows_cols(const Model& m, const Nav& nav, Id om) {
  const Id n = m.n();
  Geometry geo;
  geo.row = rows_of(m, nav);
  geo.rows = 1 + *std::max_element(geo.row.begin(), geo.row.end());

  SynGraph star = build_syn_star(m, nav, om - 1);
  std::vector<std::vector<Id>> out(n);
  std::vector<Id> indeg(n, 0);
  for (const SynEdge& e : star.edges) {
    if (!geo.forward(e)) continue;
    // A hollow inside one row only arises from a self-answering H_r on
    // unsaturated models; it is not a real descent.
    if (e.kind == EdgeKind::Hollow && geo.row[e.from] == geo.row[e.to]) continue;
    out[e.from].push_back(e.to);
    ++indeg[e.to];
  }
  geo.col0.assign(n, 0);
  std::queue<Id> ready;
  for (Id a = 0; a < n; ++a)
    if (indeg[a] == 0) ready.push(a);
  Id done = 0;
  while (!ready.empty()) {
    Id a = ready.front();
    ready.pop();
    ++done;
    for (Id b : out[a]) {
      geo.col0[b] = std::max(geo.col0[b], geo.col0[a] + 1);
      if (--indeg[b] == 0) ready.push(b);
    }
  }
  if (done != n) throw Error(Errc::PreconditionViolated, "forward edges contain a cycle");
  geo.cols = 1 + *std::max_element(geo.col0.begin(), geo.col0.end());
  return geo;
}

namespace {

void accumulate(WalkWeights& w, const SynEdge& e, const Geometry* geo, bool& internal) {
  w.bal += e.bal;
  w.ext += e.ext;
  bool ext = !is_internal(e);
  if (e.kind == EdgeKind::Nose) {
    ++w.mu;
    if (ext) ++w.mu_ext;
  } else {
    ++w.eta;
    if (ext) ++w.eta_ext;
  }
  if (ext) internal = false;
  if (geo != nullptr && !ext) {
    if (geo->backward(e)) ++w.backward;
    w.jump = w.jump.value_or(0) + geo->jump(e);
  }
}

}  // namespace

WalkWeights walk_weights(const SynGraph& g, const std::vector<Id>& walk, const Geometry* geo) {
  WalkWeights w;
  bool internal = true;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    const SynEdge* e = g.find(walk[i], walk[i + 1]);
    if (e == nullptr)
      throw Error(Errc::NotAWalk, "no edge " + std::to_string(walk[i]) + "->" + std::to_string(walk[i + 1]));
    accumulate(w, *e, geo, internal);
  }
  if (geo != nullptr && internal) w.jump = w.jump.value_or(0);
  if (!internal) w.jump.reset();
  return w;
}

WalkWeights edge_walk_weights(const SynGraph& g, const std::vector<Id>& edge_ids, const Geometry* geo) {
  WalkWeights w;
  bool internal = true;
  for (std::size_t i = 0; i < edge_ids.size(); ++i) {
    const SynEdge& e = g.edges.at(edge_ids[i]);
    if (i > 0 && g.edges[edge_ids[i - 1]].to != e.from) throw Error(Errc::NotAWalk, "edges do not chain");
    accumulate(w, e, geo, internal);
  }
  if (geo != nullptr && internal) w.jump = w.jump.value_or(0);
  if (!internal) w.jump.reset();
  return w;
}

namespace {

struct Pt {
  Int x, y;
  bool operator==(const Pt&) const = default;
};

int orient(Pt p, Pt q, Pt r) {
  Int v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

bool on_segment(Pt p, Pt q, Pt r) {
  return orient(p, q, r) == 0 && std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
         std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
}

}  // namespace

bool segments_cross(const Segment& a, const Segment& b) {
  Pt a1{a.x1, a.y1}, a2{a.x2, a.y2}, b1{b.x1, b.y1}, b2{b.x2, b.y2};
  int o1 = orient(a1, a2, b1), o2 = orient(a1, a2, b2);
  int o3 = orient(b1, b2, a1), o4 = orient(b1, b2, a2);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && o2 == 0) {
    // Collinear: overlapping in more than one point is a crossing.
    Int dx = a2.x - a1.x, dy = a2.y - a1.y;
    Int len = dx * dx + dy * dy;
    Int t1 = (b1.x - a1.x) * dx + (b1.y - a1.y) * dy;
    Int t2 = (b2.x - a1.x) * dx + (b2.y - a1.y) * dy;
    Int lo = std::max<Int>(0, std::min(t1, t2)), hi = std::min(len, std::max(t1, t2));
    return hi > lo;
  }
  auto shared = [&](Pt p) { return p == b1 || p == b2; };
  if (on_segment(a1, a2, b1) && !(b1 == a1 || b1 == a2)) return true;
  if (on_segment(a1, a2, b2) && !(b2 == a1 || b2 == a2)) return true;
  if (on_segment(b1, b2, a1) && !shared(a1)) return true;
  if (on_segment(b1, b2, a2) && !shared(a2)) return true;
  return false;
}

Drawing drawing_arrows(const Model& m, Id k, Id copies) {
  Nav nav = navigation(m);
  Id om = omega(m, nav);
  return drawing_arrows(build_syn(m, nav, k), rows_cols(m, nav, om), copies);
}

Drawing drawing_arrows(const SynGraph& g, const Geometry& geo, Id copies) {
  if (copies < 1) throw Error(Errc::InvalidParams, "copies must be positive");
  Drawing d;
  for (Id i = 0; i < copies; ++i)
    for (const SynEdge& e : g.edges) {
      if (!is_internal(e)) continue;
      bool back = geo.backward(e);
      Int x1 = Int{i} * geo.cols + geo.col0[e.from];
      Int x2 = Int{i + (back ? 1 : 0)} * geo.cols + geo.col0[e.to];
      d.segments.push_back(Segment{x1, geo.row[e.from], x2, geo.row[e.to], e.kind, back});
    }
  for (std::size_t i = 0; i < d.segments.size(); ++i)
    for (std::size_t j = i + 1; j < d.segments.size(); ++j)
      if (segments_cross(d.segments[i], d.segments[j])) d.crossings.emplace_back(i, j);
  return d;
}

}  // namespace pca
