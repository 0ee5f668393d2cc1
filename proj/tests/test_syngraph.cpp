// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "oracles.hpp"
#include "pca/syngraph.hpp"

using namespace pca;
using fixtures::e5;
using fixtures::p3;

namespace {

std::vector<SynEdge> sorted(std::vector<SynEdge> v) {
  std::sort(v.begin(), v.end(), [](const SynEdge& x, const SynEdge& y) {
    return std::tie(x.from, x.kind, x.order, x.to) < std::tie(y.from, y.kind, y.order, y.to);
  });
  return v;
}

std::vector<Model> mixed(int count, Id max_n, std::uint64_t seed) {
  fixtures::CorpusSpec s;
  s.count = count;
  s.max_n = max_n;
  s.mix_pig = true;
  s.seed = seed;
  return fixtures::corpus(s);
}

}  // namespace

TEST_CASE("edge weights") {
  Int c = 100, ell = 10;
  CHECK(sep_weight(make_nose(0, 1, 0), c, ell) == 2);
  CHECK(sep_weight(make_hollow(1, 0), c, ell) == -ell);
  SynEdge ext_nose = make_nose(3, 0, 0);
  CHECK(ext_nose.ext == -1);
  CHECK(sep_weight(ext_nose, c, ell) == 2 - c);
  SynEdge ext_hollow = make_hollow(0, 4);
  CHECK(ext_hollow.ext == 1);
  CHECK(sep_weight(ext_hollow, c, ell) == c - ell);
  CHECK(sep_weight(make_nose(1, 3, 2), c, ell) == 2 * ell + 2);
  CHECK(is_internal(make_nose(1, 3, 2)));
  CHECK(!is_internal(ext_nose));
}

TEST_CASE("first synthetic graph of the five-arc cycle") {
  SynGraph g = build_syn(e5(), 1);
  CHECK(g.edges.size() == 10);
  for (Id a = 0; a < 5; ++a) {
    REQUIRE(g.hollow(a));
    CHECK(g.hollow(a)->to == (a + 4) % 5);
    REQUIRE(g.nose(a));
    CHECK(g.nose(a)->to == (a + 2) % 5);
    CHECK(g.nose(a)->order == 1);
  }
  CHECK(g.nose(3)->ext == -1);
  CHECK(g.nose(4)->ext == -1);
  CHECK(g.hollow(0)->ext == 1);
}

TEST_CASE("synthetic graphs match the definitions") {
  for (const Model& m : mixed(300, 11, 21)) {
    Id w = omega(m);
    for (Id k = 0; k < w; ++k) {
      auto expect = oracle::syn(m, k);
      REQUIRE(sorted(build_syn(m, k).edges) == expect);
      REQUIRE(sorted(build_syn_incremental(m, k).edges) == expect);
    }
  }
}

TEST_CASE("star graph holds every nose up to order k") {
  for (const Model& m : mixed(100, 10, 22)) {
    Id w = omega(m);
    for (Id k = 0; k < w; ++k) {
      SynGraph star = build_syn_star(m, k);
      CHECK(star.edges.size() <= std::size_t(m.n()) * std::size_t(k + 2));
      for (Id j = 0; j <= k; ++j)
        for (const SynEdge& e : build_syn(m, j).edges)
          CHECK(std::find(star.edges.begin(), star.edges.end(), e) != star.edges.end());
    }
  }
}

TEST_CASE("synthetic graph preconditions") {
  CHECK_ERRC(build_syn(e5(), -1), Errc::InvalidParams);
  CHECK_ERRC(build_syn(e5(), 5), Errc::KTooLarge);
  CHECK_ERRC(build_syn(validate(20, false, {{0, 3}, {10, 13}}), 1), Errc::Disconnected);
}

TEST_CASE("rows and columns of the three-interval path") {
  Geometry g = rows_cols(p3());
  CHECK(g.rows == 2);
  CHECK(g.cols == 3);
  CHECK(g.row == std::vector<Id>{0, 0, 1});
  CHECK(g.col0 == std::vector<Id>{0, 2, 1});
}

TEST_CASE("walk weights of the greedy cycles") {
  SynGraph g = build_syn(e5(), 1);
  WalkWeights nose = walk_weights(g, {0, 2, 4, 1, 3, 0});
  CHECK(nose.bal == 5);
  CHECK(nose.ext == -2);
  WalkWeights hollow = walk_weights(g, {0, 4, 3, 2, 1, 0});
  CHECK(hollow.bal == -5);
  CHECK(hollow.ext == 1);
  WalkWeights empty = walk_weights(g, {2});
  CHECK(empty.bal == 0);
  CHECK(empty.ext == 0);
  CHECK_ERRC(walk_weights(g, {0, 1}), Errc::NotAWalk);
}

TEST_CASE("walk weights add edge by edge") {
  for (const Model& m : mixed(100, 10, 23)) {
    SynGraph g = build_syn(m, 1 < omega(m) ? 1 : 0);
    std::vector<Id> ids;
    Id at = 0;
    Int bal = 0, ext = 0;
    for (int step = 0; step < 3 * m.n(); ++step) {
      Id e = (step % 3 == 0 && g.hollow_out[at] != kNone) ? g.hollow_out[at] : g.nose_out[at];
      if (e == kNone) e = g.hollow_out[at];
      if (e == kNone) break;
      bal += g.edges[e].bal;
      ext += g.edges[e].ext;
      ids.push_back(e);
      at = g.edges[e].to;
    }
    WalkWeights w = edge_walk_weights(g, ids);
    CHECK(w.bal == bal);
    CHECK(w.ext == ext);
  }
}

TEST_CASE("drawing of the five-arc cycle") {
  SynGraph g = build_syn(e5(), 1);
  std::size_t internal = std::count_if(g.edges.begin(), g.edges.end(), is_internal);
  Drawing d = drawing_arrows(e5(), 1, 2);
  CHECK(d.segments.size() == 2 * internal);
  CHECK(d.crossings.empty());
  CHECK_ERRC(drawing_arrows(e5(), 1, 0), Errc::InvalidParams);
}

TEST_CASE("segment crossing cases") {
  auto seg = [](Int a, Int b, Int c, Int d) { return Segment{a, b, c, d, EdgeKind::Nose, false}; };
  CHECK(segments_cross(seg(0, 0, 2, 2), seg(0, 2, 2, 0)));
  CHECK(!segments_cross(seg(0, 0, 2, 2), seg(2, 2, 4, 0)));
  CHECK(segments_cross(seg(0, 0, 4, 0), seg(2, 0, 2, 3)));
  CHECK(segments_cross(seg(0, 0, 4, 0), seg(2, 0, 6, 0)));
  CHECK(!segments_cross(seg(0, 0, 4, 0), seg(0, 1, 4, 1)));
}

TEST_CASE("zeroth synthetic graph draws without crossings") {
  fixtures::CorpusSpec s;
  s.count = 100;
  s.saturated = true;
  s.seed = 24;
  for (const Model& m : fixtures::corpus(s)) CHECK(drawing_arrows(m, 0, 3).crossings.empty());
}
