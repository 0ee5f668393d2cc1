// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "pca/oracle.hpp"
#include "pca/solver.hpp"

using namespace pca;
using fixtures::e5;

namespace {

constexpr Int kNeg = std::numeric_limits<long long>::min();

// Max-plus Floyd-Warshall; flags a positive cycle through any vertex.
struct Floyd {
  std::vector<std::vector<Int>> d;
  bool positive = false;
};

Floyd floyd(const WeightedDigraph& g) {
  Floyd f;
  f.d.assign(g.n, std::vector<Int>(g.n, kNeg));
  for (Id v = 0; v < g.n; ++v) f.d[v][v] = 0;
  for (const WEdge& e : g.edges) f.d[e.from][e.to] = std::max(f.d[e.from][e.to], e.w);
  for (Id k = 0; k < g.n; ++k)
    for (Id i = 0; i < g.n; ++i)
      for (Id j = 0; j < g.n; ++j)
        if (f.d[i][k] != kNeg && f.d[k][j] != kNeg) f.d[i][j] = std::max(f.d[i][j], f.d[i][k] + f.d[k][j]);
  for (Id v = 0; v < g.n; ++v) f.positive = f.positive || f.d[v][v] > 0;
  return f;
}

}  // namespace

TEST_CASE("longest paths against max-plus closure") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 2000; ++round) {
    WeightedDigraph g;
    g.n = 1 + static_cast<Id>(rng() % 7);
    int m = static_cast<int>(rng() % 16);
    for (int i = 0; i < m; ++i)
      g.edges.push_back({static_cast<Id>(rng() % g.n), static_cast<Id>(rng() % g.n), Int(rng() % 14) - 10});
    LongestPaths lp = bellman_ford_longest(g, 0);
    Floyd f = floyd(g);
    REQUIRE(lp.feasible == !f.positive);
    if (lp.feasible) {
      for (Id v = 0; v < g.n; ++v) {
        CHECK(bool(lp.reached[v]) == (f.d[0][v] != kNeg));
        if (lp.reached[v]) CHECK(lp.dist[v] == f.d[0][v]);
      }
    } else {
      Int w = 0;
      for (std::size_t i = 0; i < lp.cycle.size(); ++i) {
        const WEdge& e = g.edges[lp.cycle[i]];
        CHECK(e.to == g.edges[lp.cycle[(i + 1) % lp.cycle.size()]].from);
        w += e.w;
      }
      CHECK(w == lp.cycle_weight);
      CHECK(w > 0);
    }
  }
}

TEST_CASE("positive cycle away from the source is found") {
  WeightedDigraph g;
  g.n = 3;
  g.edges = {{1, 2, 1}, {2, 1, 0}};
  LongestPaths lp = bellman_ford_longest(g, 0);
  CHECK(!lp.feasible);
  CHECK(lp.cycle_weight == 1);
}

TEST_CASE("five-arc cycle is infeasible at c 12, ell 4") {
  SolveResult r = solve_fixed(e5(), 1, 12, 4);
  REQUIRE(!r.feasible);
  CHECK(r.cert.cycle == std::vector<Id>{0, 2, 4, 1, 3, 0});
  CHECK(r.cert.constraints.size() == 5);
  SynGraph g = build_syn(e5(), 1);
  Int w = 0;
  for (std::size_t i = 0; i + 1 < r.cert.cycle.size(); ++i) w += sep_weight(*g.find(r.cert.cycle[i], r.cert.cycle[i + 1]), 12, 4);
  CHECK(r.cert.weight == w);
  CHECK(w == 6);
  CHECK(!r.parity_warning);
}

TEST_CASE("five-arc cycle is feasible at c 16, ell 4") {
  SolveResult r = solve_fixed(e5(), 1, 16, 4);
  REQUIRE(r.feasible);
  CHECK(r.model.c == 16);
  CHECK(uniform_length(r.model) == 5);
  CHECK(verify_k_multiplicative(r.model, e5(), 1).ok);
}

TEST_CASE("solver parameter checks") {
  CHECK_ERRC(solve_fixed(e5(), 0, 16, 4), Errc::InvalidParams);
  CHECK_ERRC(solve_fixed(e5(), 1, 1, 4), Errc::InvalidParams);
  CHECK(solve_fixed(e5(), 1, 15, 4).parity_warning);
  SynGraph g = build_syn(e5(), 1);
  CHECK_ERRC(certificate_from_cycle(g, {}, 16, 4), Errc::NotPositive);
  std::vector<Id> hollows;
  for (Id a : {0, 4, 3, 2, 1}) hollows.push_back(g.hollow_out[a]);
  CHECK_ERRC(certificate_from_cycle(g, hollows, 16, 4), Errc::NotPositive);
}

TEST_CASE("feasible solutions verify and certificates add up") {
  fixtures::CorpusSpec s;
  s.count = 60;
  s.max_n = 8;
  s.mix_pig = true;
  s.seed = 31;
  for (const Model& m : fixtures::corpus(s)) {
    Id w = omega(m);
    for (Id k = 1; k < w && k <= 3; ++k) {
      SynGraph g = build_syn(m, k);
      for (Int c = 4; c <= 40; c += 4)
        for (Int ell = 2; ell < c; ell += 6) {
          SolveResult r = solve_fixed(m, k, c, ell);
          if (r.feasible) {
            CHECK(verify_k_multiplicative(r.model, m, k).ok);
            continue;
          }
          Int sum = 0;
          for (std::size_t i = 0; i + 1 < r.cert.cycle.size(); ++i) {
            Int best = kNeg;
            for (const SynEdge& e : g.edges)
              if (e.from == r.cert.cycle[i] && e.to == r.cert.cycle[i + 1]) best = std::max(best, sep_weight(e, c, ell));
            REQUIRE(best != kNeg);
            sum += best;
          }
          CHECK(sum >= r.cert.weight);
          CHECK(r.cert.weight > 0);
        }
    }
  }
}
