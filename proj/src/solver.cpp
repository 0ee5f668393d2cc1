// SPDX-License-Identifier: Apache-2.0
#include "pca/solver.hpp"

#include "pca/decide.hpp"

#include <algorithm>

namespace pca {

namespace {

// source == kNone starts every vertex at 0, which finds positive cycles
// anywhere in g.
LongestPaths bellman_ford_from(const WeightedDigraph& g, Id source) {
  const Id n = g.n;
  LongestPaths r;
  r.dist.assign(n, 0);
  r.reached.assign(n, source == kNone ? 1 : 0);
  std::vector<Id> pred(n, kNone);
  if (source != kNone) r.reached[source] = 1;
  Id last = kNone;
  for (Id round = 0; round < n; ++round) {
    last = kNone;
    for (Id i = 0; i < static_cast<Id>(g.edges.size()); ++i) {
      const WEdge& e = g.edges[i];
      if (!r.reached[e.from]) continue;
      Int cand = r.dist[e.from] + e.w;
      if (!r.reached[e.to] || cand > r.dist[e.to]) {
        r.dist[e.to] = cand;
        r.reached[e.to] = 1;
        pred[e.to] = i;
        last = e.to;
      }
    }
    if (last == kNone) return r;
  }
  // Still relaxing after n rounds: walk back onto the cycle.
  r.feasible = false;
  Id v = last;
  for (Id i = 0; i < n; ++i) {
    if (pred[v] == kNone) throw Error(Errc::InternalVerificationFailed, "broken predecessor chain");
    v = g.edges[pred[v]].from;
  }
  Id u = v;
  do {
    r.cycle.push_back(pred[u]);
    r.cycle_weight += g.edges[pred[u]].w;
    u = g.edges[pred[u]].from;
  } while (u != v);
  std::reverse(r.cycle.begin(), r.cycle.end());
  return r;
}

}  // namespace

LongestPaths bellman_ford_longest(const WeightedDigraph& g, Id source) {
  LongestPaths any = bellman_ford_from(g, kNone);
  if (!any.feasible) return any;
  return bellman_ford_from(g, source);
}

WeightedDigraph sep_graph(const SynGraph& g, Int c, Int ell) {
  WeightedDigraph w;
  w.n = g.n;
  w.edges.reserve(g.edges.size());
  for (const SynEdge& e : g.edges) w.edges.push_back(WEdge{e.from, e.to, sep_weight(e, c, ell)});
  return w;
}

namespace {

std::string term(Int coef, const char* sym) {
  if (coef == 0) return "";
  std::string s = coef > 0 ? " + " : " - ";
  Int a = coef < 0 ? -coef : coef;
  if (a != 1) s += to_string(a) + "*";
  return s + sym;
}

}  // namespace

InfeasibleCycle certificate_from_cycle(const SynGraph& g, const std::vector<Id>& edge_ids, Int c, Int ell) {
  InfeasibleCycle cert;
  if (edge_ids.empty()) throw Error(Errc::NotPositive, "empty cycle");
  cert.cycle.push_back(g.edges[edge_ids.front()].from);
  for (std::size_t i = 0; i < edge_ids.size(); ++i) {
    const SynEdge& e = g.edges.at(edge_ids[i]);
    if (e.from != cert.cycle.back()) throw Error(Errc::NotAWalk, "edges do not chain");
    cert.cycle.push_back(e.to);
    cert.weight += sep_weight(e, c, ell);
    std::string rhs = "s(A" + std::to_string(e.from) + ")" + term(e.bal, "l") + term(e.ext, "c");
    if (e.kind == EdgeKind::Nose) rhs += " + 2";
    std::string tag = e.kind == EdgeKind::Hollow ? "1-attract" : std::to_string(e.order) + "-repel";
    cert.constraints.push_back("s(A" + std::to_string(e.to) + ") >= " + rhs + "   [" + tag + ", weight " +
                               to_string(sep_weight(e, c, ell)) + "]");
  }
  if (cert.cycle.back() != cert.cycle.front()) throw Error(Errc::NotAWalk, "edges do not close a cycle");
  if (cert.weight <= 0) throw Error(Errc::NotPositive, "cycle weight " + to_string(cert.weight));
  return cert;
}

SolveResult solve_fixed(const Model& m, Id k, Int c, Int ell) {
  if (k < 1) throw Error(Errc::InvalidParams, "k must be positive");
  if (c < 2 || ell < 2) throw Error(Errc::InvalidParams, "c and ell must be at least 2");
  SynGraph g = build_syn(m, k);
  SolveResult res;
  res.parity_warning = (c % 2 != 0) || (ell % 2 != 0);
  LongestPaths lp = bellman_ford_longest(sep_graph(g, c, ell), 0);
  if (!lp.feasible) {
    // Report the heaviest of the Bellman-Ford cycle and the greedy cycles.
    res.cert = certificate_from_cycle(g, lp.cycle, c, ell);
    for (EdgeKind prefer : {EdgeKind::Nose, EdgeKind::Hollow}) {
      for (const GreedyCycle& gc : all_greedy_cycles(g, prefer)) {
        std::vector<Id> ids;
        for (std::size_t i = 0; i + 1 < gc.vertices.size(); ++i) {
          Id v = gc.vertices[i];
          Id first = prefer == EdgeKind::Nose ? g.nose_out[v] : g.hollow_out[v];
          Id other = prefer == EdgeKind::Nose ? g.hollow_out[v] : g.nose_out[v];
          ids.push_back(first != kNone && g.edges[first].to == gc.vertices[i + 1] ? first : other);
        }
        Int w = 0;
        for (Id e : ids) w += sep_weight(g.edges[e], c, ell);
        if (w > res.cert.weight) res.cert = certificate_from_cycle(g, ids, c, ell);
      }
    }
    return res;
  }
  for (Id a = 0; a < g.n; ++a)
    if (!lp.reached[a]) throw Error(Errc::InternalVerificationFailed, "arc unreachable from the initial arc");
  res.feasible = true;
  res.dist = lp.dist;
  std::vector<Arc> arcs;
  for (Id a = 0; a < g.n; ++a) {
    Int s = lp.dist[a];
    if (s < 0 || s >= c) throw Error(Errc::InternalVerificationFailed, "solution leaves the circle");
    arcs.push_back(Arc{s, mod(s + ell + 1, c)});
  }
  res.model = validate(c, false, std::move(arcs));
  return res;
}

}  // namespace pca
