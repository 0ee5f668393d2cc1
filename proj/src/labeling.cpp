// SPDX-License-Identifier: Apache-2.0
#include "pca/labeling.hpp"

namespace pca {

LabelSet make_labels(const Model& u, Id k) {
  LabelSet ls;
  ls.c = u.c;
  ls.ell = uniform_length(u) - 1;
  ls.k = k;
  if (ls.ell < 1) throw Error(Errc::InvalidParams, "arc length must exceed 1");
  for (const Arc& a : u.arcs) ls.labels.push_back(a.s);
  return ls;
}

Id query_distance(const LabelSet& ls, Id a, Id b) {
  if (a == b) return kZero;
  // s(b) lies in the i-multiple of a iff gap < i*ell + 1.
  Int gap = mod(ls.labels[b] - ls.labels[a], ls.c);
  Int i = (gap + ls.ell - 1) / ls.ell;
  return i <= ls.k ? static_cast<Id>(i) : kMoreThanK;
}

}  // namespace pca
