// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pca/syngraph.hpp"

namespace pca {

struct GreedyCycle {
  std::vector<Id> vertices;  // closed: front() == back()
  EdgeKind flavor = EdgeKind::Nose;
  Int ext = 0;
  Int bal = 0;
  Rational ratio() const { return Rational(-bal, ext); }
};

struct NegCert {
  GreedyCycle g_hollow;
  GreedyCycle g_nose;
  Id k = 0;
};

/// Successor of each vertex when noses (or hollows) are preferred; kNone
/// when the vertex has no out-edge.
std::vector<Id> greedy_successors(const SynGraph& g, EdgeKind prefer);
/// Every cycle of the greedy functional graph, each starting at its
/// smallest vertex, listed by that vertex.
std::vector<GreedyCycle> all_greedy_cycles(const SynGraph& g, EdgeKind prefer);

struct GreedyPair {
  std::optional<GreedyCycle> nose;    // first greedy nose cycle with Ext < 0
  std::optional<GreedyCycle> hollow;  // first greedy hollow cycle with Ext > 0
};

GreedyPair greedy_cycles(const SynGraph& g);

struct Decision {
  bool yes = false;
  bool pig = false;
  Id inserted = 0;  // bridging arcs added to connect the model
  GreedyPair cycles;
  std::optional<NegCert> cert;
};

Decision decide(const Model& m, Id k);

struct AuthResult {
  bool ok = false;
  std::string reason;
};

AuthResult authenticate_negative(const Model& m, const NegCert& cert);

/// Model that decide and authenticate actually work on: m itself when
/// connected, otherwise m with bridging chains.
Model decision_model(const Model& m, Id k, Id* inserted = nullptr);

}  // namespace pca
