// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "pca/decide.hpp"
#include "pca/syngraph.hpp"

namespace pca {

/// (Length, Ext) pair ordered lexicographically.
struct LexValue {
  Rational len;
  Int ext = 0;
  friend LexValue operator+(const LexValue& a, const LexValue& b) { return {a.len + b.len, a.ext + b.ext}; }
  friend bool operator==(const LexValue& a, const LexValue& b) { return a.len == b.len && a.ext == b.ext; }
  friend std::strong_ordering operator<=>(const LexValue& a, const LexValue& b) {
    if (auto c = a.len <=> b.len; c != 0) return c;
    return a.ext <=> b.ext;
  }
};

LexValue lex_weight(const SynEdge& e, const Rational& ratio);

struct Connectified {
  Model model;
  std::vector<Id> inserted;  // ids in `model` of the bridging arcs
  std::vector<Id> original;  // id in `model` of each input arc
  Int scale = 1;             // coordinate factor applied to the input
};

/// Bridges every gap before a non-initial arc with a chain of max(1, chain)
/// arcs, so that crossing a gap takes more than `chain` steps.
Connectified connectify(const Model& m, Id chain = 1);

struct Ratios {
  Rational ratio;  // from the greedy nose cycle
  Rational RATIO;  // from the greedy hollow cycle, or infinity
};

Ratios ratios(const SynGraph& g);

/// Longest Lex distances from arc 0 by the greedy-path / anti-hollow forest
/// recursion.  Throws PreconditionViolated when some arc gets no value.
std::vector<LexValue> lex_distances(const SynGraph& g, const Rational& ratio);

/// Edge indices of g that are tight for `dist`; throws CycleInReduced if
/// they contain a cycle.
std::vector<Id> reduced_graph(const SynGraph& g, const std::vector<LexValue>& dist, const Rational& ratio);

struct Construction {
  Model model;        // the k-multiplicative (c, ell+1)-CA model
  Connectified aug;   // the connected model actually solved
  SynGraph syn;
  std::vector<LexValue> lex;
  std::vector<Id> reduced;  // edge indices of syn
  std::vector<Int> start;   // beginning point of every arc of aug.model
  Rational ratio;
  Rational RATIO;
  Int c = 0;
  Int ell = 0;
  Int d = 1;  // denominator of ratio
  bool fully_verified = false;
};

/// Full verification of every multiple runs while n*k stays below this.
inline constexpr long long kFullVerifyBudget = 4'000'000;

Construction construct(const Model& m, Id k);

}  // namespace pca
