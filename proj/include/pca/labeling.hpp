// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "pca/model.hpp"

namespace pca {

struct LabelSet {
  Int c = 0;
  Int ell = 0;
  Id k = 0;
  std::vector<Int> labels;  // beginning point per arc id
};

LabelSet make_labels(const Model& u, Id k);

inline constexpr Id kZero = 0;
inline constexpr Id kMoreThanK = -1;

/// Directed distance from a to b when at most k, kZero when a == b, else
/// kMoreThanK.
Id query_distance(const LabelSet& ls, Id a, Id b);

}  // namespace pca
