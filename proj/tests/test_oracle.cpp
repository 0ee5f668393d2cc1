// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "oracles.hpp"
#include "pca/decide.hpp"
#include "pca/oracle.hpp"
#include "pca/solver.hpp"

using namespace pca;
using fixtures::cnk;
using fixtures::e5;

namespace {

std::vector<Model> mixed(int count, Id max_n, std::uint64_t seed) {
  fixtures::CorpusSpec s;
  s.count = count;
  s.max_n = max_n;
  s.mix_pig = true;
  s.seed = seed;
  return fixtures::corpus(s);
}

}  // namespace

TEST_CASE("digraph distances") {
  Digraph d = digraph(e5());
  CHECK(digraph_distances(d, 0) == std::vector<Id>{0, 1, 2, 3, 4});
  CHECK(digraph_power(d, 1) == d);
  Digraph sq = digraph_power(d, 2);
  CHECK(sq.has_edge(0, 2));
  CHECK(!sq.has_edge(0, 3));
  Model apart = validate(20, false, {{0, 3}, {10, 13}});
  CHECK(digraph_distances(digraph(apart), 0)[1] == kUnreachable);
}

TEST_CASE("distances match breadth-first search from the definitions") {
  for (const Model& m : mixed(100, 12, 61)) {
    Digraph d = digraph(m);
    for (Id a = 0; a < m.n(); ++a) CHECK(digraph_distances(d, a) == oracle::bfs_distances(m, a));
  }
}

TEST_CASE("known multiplicative model verifies up to four") {
  Model u = cnk(9, 2);
  CHECK(verify_k_multiplicative(u, u, 4).ok);
  CHECK(verify_k_multiplicative(e5(), e5(), 0).ok);
  // Shifting one doubled arc by 2 puts the start 24 inside it.
  Model ev = to_even(u);
  std::vector<Arc> arcs = ev.arcs;
  arcs[3] = {arcs[3].s + 2, arcs[3].t + 2};
  Model moved = validate(ev.c, false, arcs);
  VerifyReport r = verify_k_multiplicative(moved, u, 2);
  CHECK(!r.ok);
  CHECK(!r.detail.empty());
}

TEST_CASE("full system has one constraint per ordered pair and order") {
  for (const Model& m : mixed(80, 9, 62)) {
    const Id n = m.n();
    for (Id k = 1; k < omega(m) && k <= 3; ++k) {
      WeightedDigraph g = full_constraint_graph(m, k, 100, 10);
      REQUIRE(g.edges.size() == std::size_t((k + 1) * n * n));
      for (Id i = 0; i <= k; ++i) {
        auto adj = oracle::power_digraph(m, i);
        for (Id a = 0; a < n; ++a)
          for (Id b = 0; b < n; ++b) {
            const WEdge& e = g.edges[(i * n + a) * n + b];
            bool attract = i > 0 && adj[a][b];
            CHECK(e.from == (attract ? b : a));
            CHECK(e.to == (attract ? a : b));
          }
      }
    }
  }
}

TEST_CASE("merged full system has the same longest paths") {
  for (const Model& m : mixed(60, 8, 63)) {
    for (Id k = 1; k < omega(m) && k <= 3; ++k) {
      FullShape shape = full_shape(m, k);
      for (Int c = 8; c <= 40; c += 8)
        for (Int ell = 2; ell < c; ell += 4) {
          LongestPaths a = bellman_ford_longest(full_constraint_graph(m, k, c, ell), 0);
          LongestPaths b = bellman_ford_longest(instantiate(shape, c, ell), 0);
          REQUIRE(a.feasible == b.feasible);
          if (a.feasible) CHECK(a.dist == b.dist);
        }
    }
  }
}

TEST_CASE("cycle enumeration matches depth-first search") {
  for (const Model& m : mixed(100, 8, 64)) {
    for (Id k = 0; k < omega(m) && k <= 3; ++k) {
      SynGraph g = build_syn(m, k);
      auto got = enumerate_cycles(g);
      auto want = oracle::cycles(g);
      REQUIRE(got.size() == want.size());
      std::vector<std::pair<Int, Int>> gw, ww;
      for (auto& c : got) gw.push_back({c.bal, c.ext});
      for (auto& c : want) ww.push_back({c.bal, c.ext});
      std::sort(gw.begin(), gw.end());
      std::sort(ww.begin(), ww.end());
      CHECK(gw == ww);
    }
  }
  CHECK_ERRC(enumerate_cycles(build_syn(cnk(20, 1), 1), 14), Errc::InvalidParams);
}

TEST_CASE("crossing cycles") {
  CHECK(crossing_cycles_check(build_syn(e5(), 1)));
  auto cyc = enumerate_cycles(build_syn(e5(), 1));
  for (auto& c : cyc)
    if (c.ext < 0) CHECK(Rational(c.bal, -c.ext) <= Rational(5, 2));
}

TEST_CASE("Lex Bellman-Ford on the five-arc cycle") {
  auto d = lex_bellman_ford(build_syn(e5(), 1), Rational(5, 2));
  REQUIRE(d.size() == 5);
  CHECK(d[2] == LexValue{Rational(1), 0});
  CHECK(d[4] == LexValue{Rational(2), 0});
  CHECK(lex_bellman_ford(build_syn(e5(), 1), Rational(2)).empty());
}
