// SPDX-License-Identifier: Apache-2.0
#include "pca/construct.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "pca/oracle.hpp"

namespace pca {

LexValue lex_weight(const SynEdge& e, const Rational& ratio) {
  return LexValue{Rational(e.bal) + ratio * Rational(e.ext), e.ext};
}

Connectified connectify(const Model& m, Id chain) {
  Connectified out;
  const Id n = m.n();
  std::vector<Id> gaps;
  for (Id a = 1; a < n; ++a)
    if (!m.intersects(a - 1, a)) gaps.push_back(a);
  if (gaps.empty()) {
    out.model = m;
    out.original.resize(n);
    for (Id a = 0; a < n; ++a) out.original[a] = a;
    return out;
  }
  const Id q = std::max<Id>(1, chain);
  const Int f = 4 * Int{q} + 4;
  std::vector<Arc> arcs;
  for (const Arc& a : m.arcs) arcs.push_back(Arc{f * a.s, f * a.t});
  std::vector<Int> bridge_starts;
  for (Id a : gaps) {
    // The left neighbour ends strictly before a begins.
    Int T = f * m.arcs[a - 1].t, S = f * m.arcs[a].s;
    Int u = (S - T) / (2 * Int{q});
    for (Id j = 1; j <= q; ++j) {
      Int b = T - 1 + 2 * Int{j - 1} * u;
      Int e = j < q ? b + 2 * u + 1 : S + 1;
      arcs.push_back(Arc{b, e});
      bridge_starts.push_back(b);
    }
  }
  out.scale = f;
  out.model = validate(checked_mul(f, m.c), m.line, std::move(arcs));
  std::map<Int, Id> by_start;
  for (Id a = 0; a < out.model.n(); ++a) by_start[out.model.arcs[a].s] = a;
  for (const Arc& a : m.arcs) out.original.push_back(by_start.at(f * a.s));
  for (Int b : bridge_starts) out.inserted.push_back(by_start.at(b));
  std::sort(out.inserted.begin(), out.inserted.end());
  return out;
}

Ratios ratios(const SynGraph& g) {
  GreedyPair p = greedy_cycles(g);
  if (!p.nose) throw Error(Errc::InternalVerificationFailed, "no greedy nose cycle with negative Ext");
  return Ratios{p.nose->ratio(), p.hollow ? p.hollow->ratio() : Rational::inf()};
}

std::vector<LexValue> lex_distances(const SynGraph& g, const Rational& ratio) {
  const Id n = g.n;
  const Id far = n + 1;

  // Greedy nose path from the initial arc.
  std::vector<Id> succ = greedy_successors(g, EdgeKind::Nose);
  std::vector<Id> phi(n, far);
  std::vector<std::optional<LexValue>> alpha(n);
  {
    Id v = 0, pos = 0;
    LexValue acc{Rational(0), 0};
    Id prev = kNone;
    while (v != kNone && phi[v] == far) {
      if (prev != kNone) {
        const SynEdge* e = g.nose(prev) ? g.nose(prev) : g.hollow(prev);
        acc = acc + lex_weight(*e, ratio);
      }
      phi[v] = pos++;
      alpha[v] = acc;
      prev = v;
      v = succ[v];
    }
  }

  // Anti-hollow predecessor: the hollow into A if any, else the nose of
  // smallest source.
  std::vector<Id> via(n, kNone);
  for (Id i = 0; i < static_cast<Id>(g.edges.size()); ++i) {
    const SynEdge& e = g.edges[i];
    Id cur = via[e.to];
    if (cur == kNone) {
      via[e.to] = i;
      continue;
    }
    const SynEdge& c = g.edges[cur];
    bool better = e.kind == EdgeKind::Hollow ? c.kind != EdgeKind::Hollow
                                             : (c.kind == EdgeKind::Nose && e.from < c.from);
    if (better) via[e.to] = i;
  }
  std::vector<Id> parent(n, kNone);
  for (Id a = 0; a < n; ++a)
    if (via[a] != kNone) parent[a] = g.edges[via[a]].from;

  // Break each cycle of the parent digraph at its vertex of least phi.
  std::vector<char> state(n, 0);
  std::vector<Id> path;
  for (Id s = 0; s < n; ++s) {
    if (state[s]) continue;
    path.clear();
    Id v = s;
    while (v != kNone && state[v] == 0) {
      state[v] = 1;
      path.push_back(v);
      v = parent[v];
    }
    if (v != kNone && state[v] == 1) {
      Id best = v;
      for (Id u = parent[v]; u != v; u = parent[u])
        if (std::pair(phi[u], u) < std::pair(phi[best], best)) best = u;
      parent[best] = kNone;
    }
    for (Id u : path) state[u] = 2;
  }

  // Evaluate from the roots down.
  std::vector<std::vector<Id>> kids(n);
  std::vector<Id> order;
  for (Id a = 0; a < n; ++a)
    if (parent[a] == kNone) order.push_back(a);
    else kids[parent[a]].push_back(a);
  std::vector<std::optional<LexValue>> psi(n);
  for (std::size_t i = 0; i < order.size(); ++i) {
    Id a = order[i];
    psi[a] = alpha[a];
    if (parent[a] != kNone && psi[parent[a]]) {
      LexValue via_parent = *psi[parent[a]] + lex_weight(g.edges[via[a]], ratio);
      if (!psi[a] || via_parent > *psi[a]) psi[a] = via_parent;
    }
    for (Id b : kids[a]) order.push_back(b);
  }
  std::vector<LexValue> out(n);
  for (Id a = 0; a < n; ++a) {
    if (!psi[a]) throw Error(Errc::PreconditionViolated, "arc " + std::to_string(a) + " gets no Lex distance");
    out[a] = *psi[a];
  }
  return out;
}

std::vector<Id> reduced_graph(const SynGraph& g, const std::vector<LexValue>& dist, const Rational& ratio) {
  std::vector<Id> kept;
  std::vector<Id> indeg(g.n, 0);
  std::vector<std::vector<Id>> out(g.n);
  for (Id i = 0; i < static_cast<Id>(g.edges.size()); ++i) {
    const SynEdge& e = g.edges[i];
    if (dist[e.to] > dist[e.from] + lex_weight(e, ratio)) continue;
    kept.push_back(i);
    out[e.from].push_back(e.to);
    ++indeg[e.to];
  }
  std::queue<Id> ready;
  for (Id a = 0; a < g.n; ++a)
    if (indeg[a] == 0) ready.push(a);
  Id seen = 0;
  while (!ready.empty()) {
    Id a = ready.front();
    ready.pop();
    ++seen;
    for (Id b : out[a])
      if (--indeg[b] == 0) ready.push(b);
  }
  if (seen != g.n) throw Error(Errc::CycleInReduced, "tight edges contain a cycle");
  return kept;
}

namespace {

std::vector<Int> dag_longest(const SynGraph& g, const std::vector<Id>& kept, Int c, Int ell) {
  const Id n = g.n;
  std::vector<std::vector<Id>> out(n);
  std::vector<Id> indeg(n, 0);
  for (Id i : kept) {
    out[g.edges[i].from].push_back(i);
    ++indeg[g.edges[i].to];
  }
  std::vector<Int> dist(n, 0);
  std::vector<char> reached(n, 0);
  reached[0] = 1;
  std::queue<Id> ready;
  for (Id a = 0; a < n; ++a)
    if (indeg[a] == 0) ready.push(a);
  while (!ready.empty()) {
    Id a = ready.front();
    ready.pop();
    for (Id i : out[a]) {
      const SynEdge& e = g.edges[i];
      if (reached[a]) {
        Int cand = checked_add(dist[a], sep_weight(e, c, ell));
        if (!reached[e.to] || cand > dist[e.to]) dist[e.to] = cand;
        reached[e.to] = 1;
      }
      if (--indeg[e.to] == 0) ready.push(e.to);
    }
  }
  for (Id a = 0; a < n; ++a)
    if (!reached[a]) throw Error(Errc::InternalVerificationFailed, "arc unreachable in the reduced graph");
  return dist;
}

}  // namespace

Construction construct(const Model& m, Id k) {
  if (k < 1) throw Error(Errc::InvalidParams, "k must be positive");
  if (k >= omega(m)) throw Error(Errc::KTooLarge, "k must be below omega");
  Construction r;
  r.aug = connectify(m, k);
  const Model& am = r.aug.model;
  const Id n1 = am.n();
  r.syn = build_syn(am, k);
  Ratios rs = ratios(r.syn);
  r.ratio = rs.ratio;
  r.RATIO = rs.RATIO;
  if (r.ratio >= r.RATIO)
    throw Error(Errc::NotMultiplicative, "Ratio " + r.ratio.str() + " is not below RATIO " + r.RATIO.str());

  r.d = r.ratio.den();
  if (n1 == 1) {
    // A lone arc has no constraint besides fitting on the circle.
    r.ell = 2;
    r.c = 2 * Int{k} + 4;
    r.lex = {LexValue{Rational(0), 0}};
    r.start = {0};
  } else {
    r.lex = lex_distances(r.syn, r.ratio);
    r.reduced = reduced_graph(r.syn, r.lex, r.ratio);
    // Both scaled by the denominator of Ratio so that c is an integer.
    Int e = 4 * Int{n1};
    Int e3 = checked_mul(checked_mul(e, e), e);
    r.ell = checked_mul(r.d, e3);
    r.c = checked_add(checked_mul(e3, r.ratio.num()), checked_mul(e, r.d));
    if (r.c <= r.ell + 1) throw Error(Errc::InternalVerificationFailed, "circle too short for the arcs");
    r.start = dag_longest(r.syn, r.reduced, r.c, r.ell);
  }

  std::vector<Arc> arcs;
  for (Id a : r.aug.original) {
    Int s = r.start[a];
    if (s < 0 || s >= r.c) throw Error(Errc::InternalVerificationFailed, "beginning point off the circle");
    arcs.push_back(Arc{s, mod(s + r.ell + 1, r.c)});
  }
  try {
    r.model = validate(r.c, false, std::move(arcs));
  } catch (const Error& e) {
    throw Error(Errc::InternalVerificationFailed, std::string("output model invalid: ") + e.what());
  }
  if (!equivalent(r.model, normalize(m))) throw Error(Errc::InternalVerificationFailed, "output not equivalent to input");
  if (static_cast<long long>(m.n()) * k <= kFullVerifyBudget) {
    VerifyReport v = verify_k_multiplicative(r.model, m, k);
    if (!v.ok) throw Error(Errc::InternalVerificationFailed, v.detail);
    r.fully_verified = true;
  }
  return r;
}

}  // namespace pca
