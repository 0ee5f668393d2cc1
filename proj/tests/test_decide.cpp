// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "pca/construct.hpp"
#include "pca/decide.hpp"
#include "pca/oracle.hpp"
#include "pca/solver.hpp"

using namespace pca;
using fixtures::e5;
using fixtures::p3;

namespace {

struct Instance {
  Model m;
  Id k;
};

std::vector<Instance> instances(int count, Id max_n, std::uint64_t seed) {
  fixtures::CorpusSpec s;
  s.count = count;
  s.max_n = max_n;
  s.seed = seed;
  std::vector<Instance> out;
  for (const Model& m : fixtures::corpus(s)) {
    Id w = omega(m);
    for (Id k = 1; k < w; ++k) out.push_back({m, k});
  }
  return out;
}

std::vector<Instance> no_instances(int want) {
  std::vector<Instance> out;
  for (const Instance& in : instances(400, 8, 41))
    if (static_cast<int>(out.size()) < want && !decide(in.m, in.k).yes) out.push_back(in);
  return out;
}

}  // namespace

TEST_CASE("five-arc cycle is a yes-instance") {
  Decision d = decide(e5(), 1);
  CHECK(d.yes);
  CHECK(!d.pig);
  REQUIRE(d.cycles.nose);
  CHECK(d.cycles.nose->bal == 5);
  CHECK(d.cycles.nose->ext == -2);
  CHECK(d.cycles.nose->ratio() == Rational(5, 2));
  REQUIRE(d.cycles.hollow);
  CHECK(d.cycles.hollow->ext == 1);
  CHECK(d.cycles.hollow->ratio() == Rational(5));
}

TEST_CASE("interval models are yes-instances") {
  Decision d = decide(p3(), 2);
  CHECK(d.yes);
  CHECK(d.pig);
}

TEST_CASE("decide parameter checks") {
  CHECK_ERRC(decide(e5(), 0), Errc::InvalidParams);
  CHECK_ERRC(decide(e5(), 5), Errc::KTooLarge);
}

TEST_CASE("disconnected inputs are bridged") {
  Model apart = validate(40, false, {{0, 3}, {2, 5}, {20, 23}, {22, 25}, {38, 1}});
  REQUIRE(!classify(apart).connected);
  Decision d = decide(apart, 1);
  CHECK(d.inserted > 0);
  CHECK(d.yes);
}

TEST_CASE("greedy nose cycles with negative Ext share one ratio") {
  for (const Instance& in : instances(150, 10, 42)) {
    SynGraph g = build_syn(decision_model(in.m, in.k), in.k);
    std::optional<Rational> r;
    for (const GreedyCycle& c : all_greedy_cycles(g, EdgeKind::Nose)) {
      if (c.ext >= 0) continue;
      if (r) CHECK(c.ratio() == *r);
      r = c.ratio();
    }
  }
}

TEST_CASE("decision agrees with the crossing-cycles test") {
  int no = 0;
  for (const Instance& in : instances(200, 7, 43)) {
    Decision d = decide(in.m, in.k);
    CHECK(d.yes == crossing_cycles_check(build_syn(decision_model(in.m, in.k), in.k)));
    no += !d.yes;
  }
  CHECK(no > 0);
}

TEST_CASE("no-instances are infeasible on a parameter grid") {
  auto nos = no_instances(12);
  REQUIRE(nos.size() == 12);
  for (const Instance& in : nos)
    for (Int c = 4; c <= 120; c += 2)
      for (Int ell = 2; ell < c; ell += 2) REQUIRE(!solve_fixed(in.m, in.k, c, ell).feasible);
}

TEST_CASE("no-instances carry authentic certificates") {
  for (const Instance& in : no_instances(20)) {
    Decision d = decide(in.m, in.k);
    REQUIRE(d.cert);
    CHECK(authenticate_negative(in.m, *d.cert).ok);
    CHECK(d.cert->g_nose.ratio() >= d.cert->g_hollow.ratio());
    Ratios r = ratios(build_syn(decision_model(in.m, in.k), in.k));
    CHECK(r.ratio >= r.RATIO);
  }
}

TEST_CASE("tampered certificates are rejected") {
  for (const Instance& in : no_instances(10)) {
    NegCert cert = *decide(in.m, in.k).cert;

    NegCert moved = cert;
    auto& v = moved.g_nose.vertices;
    v[v.size() / 2] = (v[v.size() / 2] + 1) % in.m.n();
    CHECK(!authenticate_negative(in.m, moved).ok);

    NegCert swapped = cert;
    std::swap(swapped.g_nose, swapped.g_hollow);
    CHECK(!authenticate_negative(in.m, swapped).ok);

    NegCert open = cert;
    open.g_nose.vertices.pop_back();
    CHECK(!authenticate_negative(in.m, open).ok);
  }
}

TEST_CASE("decision is invariant under doubling and rotation") {
  for (const Instance& in : instances(150, 10, 44)) {
    bool yes = decide(in.m, in.k).yes;
    CHECK(decide(to_even(in.m), in.k).yes == yes);
    std::vector<Arc> shifted;
    for (const Arc& a : in.m.arcs) shifted.push_back({mod(a.s + 3, in.m.c), mod(a.t + 3, in.m.c)});
    Model rot = validate(in.m.c, false, shifted);
    CHECK(decide(rot, in.k).yes == yes);
  }
}
