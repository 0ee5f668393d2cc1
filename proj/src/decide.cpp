// SPDX-License-Identifier: Apache-2.0
#include "pca/decide.hpp"

#include <algorithm>

#include "pca/construct.hpp"

namespace pca {

namespace {

const SynEdge* preferred(const SynGraph& g, Id v, EdgeKind prefer) {
  const SynEdge* first = prefer == EdgeKind::Nose ? g.nose(v) : g.hollow(v);
  return first != nullptr ? first : (prefer == EdgeKind::Nose ? g.hollow(v) : g.nose(v));
}

}  // namespace

std::vector<Id> greedy_successors(const SynGraph& g, EdgeKind prefer) {
  std::vector<Id> succ(g.n, kNone);
  for (Id v = 0; v < g.n; ++v)
    if (const SynEdge* e = preferred(g, v, prefer)) succ[v] = e->to;
  return succ;
}

std::vector<GreedyCycle> all_greedy_cycles(const SynGraph& g, EdgeKind prefer) {
  std::vector<Id> succ = greedy_successors(g, prefer);
  std::vector<char> state(g.n, 0);
  std::vector<GreedyCycle> out;
  std::vector<Id> path;
  for (Id s = 0; s < g.n; ++s) {
    if (state[s]) continue;
    path.clear();
    Id v = s;
    while (v != kNone && state[v] == 0) {
      state[v] = 1;
      path.push_back(v);
      v = succ[v];
    }
    if (v != kNone && state[v] == 1) {
      auto it = std::find(path.begin(), path.end(), v);
      std::vector<Id> cyc(it, path.end());
      std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
      GreedyCycle gc;
      gc.flavor = prefer;
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        const SynEdge* e = preferred(g, cyc[i], prefer);
        gc.bal += e->bal;
        gc.ext += e->ext;
      }
      gc.vertices = cyc;
      gc.vertices.push_back(cyc.front());
      out.push_back(std::move(gc));
    }
    for (Id u : path) state[u] = 2;
  }
  std::sort(out.begin(), out.end(),
            [](const GreedyCycle& a, const GreedyCycle& b) { return a.vertices.front() < b.vertices.front(); });
  return out;
}

GreedyPair greedy_cycles(const SynGraph& g) {
  GreedyPair p;
  for (auto& c : all_greedy_cycles(g, EdgeKind::Nose))
    if (c.ext < 0) {
      p.nose = std::move(c);
      break;
    }
  for (auto& c : all_greedy_cycles(g, EdgeKind::Hollow))
    if (c.ext > 0) {
      p.hollow = std::move(c);
      break;
    }
  return p;
}

Model decision_model(const Model& m, Id k, Id* inserted) {
  if (classify(m).connected) {
    if (inserted) *inserted = 0;
    return m;
  }
  Connectified cm = connectify(m, k);
  if (inserted) *inserted = static_cast<Id>(cm.inserted.size());
  return cm.model;
}

namespace {

bool share_vertex(const GreedyCycle& a, const GreedyCycle& b, Id n) {
  std::vector<char> mark(n, 0);
  for (Id v : a.vertices) mark[v] = 1;
  for (Id v : b.vertices)
    if (mark[v]) return true;
  return false;
}

}  // namespace

Decision decide(const Model& m, Id k) {
  if (k < 1) throw Error(Errc::InvalidParams, "k must be positive");
  Nav nav = navigation(m);
  if (k >= omega(m, nav)) throw Error(Errc::KTooLarge, "k must be below omega");
  Decision d;
  if (is_pig(m)) {
    d.pig = true;
    d.yes = true;
    return d;
  }
  Model mm = decision_model(m, k, &d.inserted);
  SynGraph g = build_syn(mm, k);
  d.cycles = greedy_cycles(g);
  if (!d.cycles.nose) throw Error(Errc::InternalVerificationFailed, "no greedy nose cycle with negative Ext");
  if (!d.cycles.hollow || share_vertex(*d.cycles.nose, *d.cycles.hollow, g.n)) {
    d.yes = true;
    return d;
  }
  d.cert = NegCert{*d.cycles.hollow, *d.cycles.nose, k};
  return d;
}

AuthResult authenticate_negative(const Model& m, const NegCert& cert) {
  auto fail = [](std::string why) { return AuthResult{false, std::move(why)}; };
  try {
    Model mm = decision_model(m, cert.k);
    SynGraph g = build_syn(mm, cert.k);
    auto walk = [&](const GreedyCycle& c, EdgeKind prefer, Int& ext) -> std::string {
      const auto& v = c.vertices;
      if (v.size() < 2 || v.front() != v.back()) return "not a closed walk";
      for (Id x : v)
        if (x < 0 || x >= g.n) return "vertex out of range";
      ext = 0;
      for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        const SynEdge* e = preferred(g, v[i], prefer);
        if (!e || e->to != v[i + 1]) return "not greedy at " + std::to_string(v[i]) + "->" + std::to_string(v[i + 1]);
        ext += e->ext;
      }
      std::vector<Id> inner(v.begin(), v.end() - 1);
      std::sort(inner.begin(), inner.end());
      if (std::adjacent_find(inner.begin(), inner.end()) != inner.end()) return "cycle repeats a vertex";
      return "";
    };
    Int eh = 0, en = 0;
    if (auto why = walk(cert.g_hollow, EdgeKind::Hollow, eh); !why.empty()) return fail("hollow cycle: " + why);
    if (auto why = walk(cert.g_nose, EdgeKind::Nose, en); !why.empty()) return fail("nose cycle: " + why);
    if (eh <= 0) return fail("hollow cycle has Ext " + to_string(eh));
    if (en >= 0) return fail("nose cycle has Ext " + to_string(en));
    if (share_vertex(cert.g_hollow, cert.g_nose, g.n)) return fail("cycles share a vertex");
    return AuthResult{true, ""};
  } catch (const Error& e) {
    return fail(e.what());
  }
}

}  // namespace pca
