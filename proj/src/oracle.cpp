// SPDX-License-Identifier: Apache-2.0
#include "pca/oracle.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <queue>

namespace pca {

namespace {

// Calls fn(from, to, attract, order, cflag) for each constraint of F^k.
template <class Fn>
void for_each_constraint(const Model& m, Id k, Fn fn) {
  Nav nav = navigation(m);
  const Id n = m.n();
  for (Id i = 0; i <= k; ++i) {
    PowerModel p = power(m, nav, i);
    for (Id a = 0; a < n; ++a)
      for (Id b = 0; b < n; ++b) {
        Int ge = a >= b ? 1 : 0;
        if (a != b && p.contains_point(a, m.arcs[b].s))
          fn(b, a, true, i, ge);
        else
          fn(a, b, false, i, -ge);
      }
  }
}

Int item_weight(bool attract, Id order, Int cflag, Int c, Int ell) {
  Int il = checked_mul(Int{order}, ell);
  Int w = checked_add(attract ? -il : il + 2, checked_mul(cflag, c));
  return w;
}

}  // namespace

WeightedDigraph full_constraint_graph(const Model& m, Id k, Int c, Int ell) {
  WeightedDigraph g;
  g.n = m.n();
  for_each_constraint(m, k, [&](Id from, Id to, bool attract, Id i, Int cflag) {
    g.edges.push_back(WEdge{from, to, item_weight(attract, i, cflag, c, ell)});
  });
  return g;
}

FullShape full_shape(const Model& m, Id k) {
  FullShape s;
  s.n = m.n();
  std::map<std::pair<Id, Id>, FullShape::Item> att, rep;
  for_each_constraint(m, k, [&](Id from, Id to, bool attract, Id i, Int cflag) {
    auto& table = attract ? att : rep;
    auto [it, fresh] = table.try_emplace({from, to}, FullShape::Item{from, to, attract, i, cflag});
    if (!fresh && (attract ? i < it->second.order : i > it->second.order)) it->second.order = i;
  });
  for (auto& [key, item] : att) s.items.push_back(item);
  for (auto& [key, item] : rep) s.items.push_back(item);
  return s;
}

WeightedDigraph instantiate(const FullShape& s, Int c, Int ell) {
  WeightedDigraph g;
  g.n = s.n;
  g.edges.reserve(s.items.size());
  for (const auto& it : s.items) g.edges.push_back(WEdge{it.from, it.to, item_weight(it.attract, it.order, it.cflag, c, ell)});
  return g;
}

std::vector<Id> digraph_distances(const Digraph& d, Id src) {
  std::vector<Id> dist(d.n, kUnreachable);
  std::queue<Id> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    Id v = q.front();
    q.pop();
    for (Id w : d.out[v])
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

Digraph digraph_power(const Digraph& d, Id i) {
  Digraph p;
  p.n = d.n;
  p.out.resize(d.n);
  for (Id v = 0; v < d.n; ++v) {
    std::vector<Id> dist = digraph_distances(d, v);
    for (Id off = 1; off < d.n; ++off) {
      Id w = (v + off) % d.n;
      if (dist[w] != kUnreachable && dist[w] <= i) p.out[v].push_back(w);
    }
  }
  return p;
}

VerifyReport verify_k_multiplicative(const Model& u, const Model& m, Id k) {
  VerifyReport rep;
  Model mn = normalize(m);
  if (!equivalent(u, mn)) {
    rep.failed_i = 1;
    rep.detail = "model is not equivalent to the input";
    return rep;
  }
  Nav nav = navigation(mn);
  if (k >= omega(mn, nav)) throw Error(Errc::KTooLarge, "k must be below omega");
  for (Id i = 1; i <= k; ++i) {
    Model mult;
    try {
      mult = multiply(u, i);
    } catch (const Error& e) {
      rep.failed_i = i;
      rep.detail = "multiple " + std::to_string(i) + " is not a model: " + e.what();
      return rep;
    }
    if (!equivalent(mult, power(mn, nav, i))) {
      rep.failed_i = i;
      rep.detail = "multiple " + std::to_string(i) + " differs from the power";
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

std::vector<CycleInfo> enumerate_cycles(const SynGraph& g, Id max_n) {
  if (g.n > max_n) throw Error(Errc::InvalidParams, "cycle enumeration limited to small graphs");
  std::vector<std::vector<Id>> out(g.n);
  for (Id i = 0; i < static_cast<Id>(g.edges.size()); ++i) out[g.edges[i].from].push_back(i);
  std::vector<CycleInfo> cycles;
  std::vector<char> on(g.n, 0);
  std::vector<Id> stack;
  std::function<void(Id, Id)> dfs = [&](Id start, Id v) {
    for (Id ei : out[v]) {
      Id w = g.edges[ei].to;
      if (w < start) continue;
      if (w == start) {
        CycleInfo ci;
        ci.edges = stack;
        ci.edges.push_back(ei);
        ci.vertices.push_back(start);
        for (Id x : ci.edges) {
          ci.vertices.push_back(g.edges[x].to);
          ci.bal += g.edges[x].bal;
          ci.ext += g.edges[x].ext;
        }
        cycles.push_back(std::move(ci));
      } else if (!on[w]) {
        on[w] = 1;
        stack.push_back(ei);
        dfs(start, w);
        stack.pop_back();
        on[w] = 0;
      }
    }
  };
  for (Id s = 0; s < g.n; ++s) {
    on[s] = 1;
    dfs(s, s);
    on[s] = 0;
  }
  return cycles;
}

bool crossing_cycles_check(const SynGraph& g) {
  std::vector<CycleInfo> cyc = enumerate_cycles(g);
  std::vector<std::uint32_t> pos, neg;
  for (const auto& c : cyc) {
    std::uint32_t mask = 0;
    for (Id v : c.vertices) mask |= std::uint32_t{1} << v;
    if (c.ext > 0) pos.push_back(mask);
    if (c.ext < 0) neg.push_back(mask);
  }
  for (auto a : pos)
    for (auto b : neg)
      if ((a & b) == 0) return false;
  return true;
}

std::vector<LexValue> lex_bellman_ford(const SynGraph& g, const Rational& ratio) {
  const Id n = g.n;
  std::vector<std::optional<LexValue>> dist(n);
  dist[0] = LexValue{Rational(0), 0};
  for (Id round = 0; round <= n; ++round) {
    bool changed = false;
    for (const SynEdge& e : g.edges) {
      if (!dist[e.from]) continue;
      LexValue cand = *dist[e.from] + lex_weight(e, ratio);
      if (!dist[e.to] || cand > *dist[e.to]) {
        dist[e.to] = cand;
        changed = true;
      }
    }
    if (!changed) {
      std::vector<LexValue> out(n);
      for (Id a = 0; a < n; ++a) {
        if (!dist[a]) return {};
        out[a] = *dist[a];
      }
      return out;
    }
  }
  return {};
}

}  // namespace pca
