// SPDX-License-Identifier: Apache-2.0
// Fixtures and seeded random corpora shared by the unit tests and the
// acceptance binary.
#pragma once

#include <vector>

#include "pca/io.hpp"
#include "pca/model.hpp"

namespace fixtures {

using pca::Arc;
using pca::Id;
using pca::Int;
using pca::Model;

// Five arcs of length 3 on a circle of 10, each beginning inside its
// predecessor.
inline Model e5() { return pca::validate(10, false, {{0, 3}, {2, 5}, {4, 7}, {6, 9}, {8, 1}}); }

// Three-interval path with no external arc.
inline Model p3() { return pca::validate(100, false, {{0, 3}, {2, 5}, {4, 7}}); }

// Arcs (2i, 2(i+k)+1 mod 2n), i < n.
inline Model cnk(Id n, Id k) {
  std::vector<Arc> arcs;
  for (Id i = 0; i < n; ++i) arcs.push_back({2 * Int(i), (2 * Int(i + k) + 1) % (2 * Int(n))});
  return pca::validate(2 * Int(n), false, arcs);
}

struct CorpusSpec {
  int count = 100;
  Id max_n = 10;
  Id min_n = 2;
  bool spca = true;
  bool mix_pig = false;
  bool saturated = false;
  std::uint64_t seed = 1;
};

// Connected random models; sizes cycle through [min_n, max_n].
inline std::vector<Model> corpus(const CorpusSpec& s) {
  std::vector<Model> out;
  for (int i = 0; i < s.count; ++i) {
    pca::GenOptions g;
    g.n = s.min_n + static_cast<Id>(i % (s.max_n - s.min_n + 1));
    g.spca = s.mix_pig ? (i % 4 != 3) : s.spca;
    g.saturated = s.saturated;
    g.connected = true;
    g.seed = s.seed * 1000003ULL + static_cast<std::uint64_t>(i);
    out.push_back(pca::gen_random(g));
  }
  return out;
}

}  // namespace fixtures
