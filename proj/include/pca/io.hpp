// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <istream>
#include <string>

#include "pca/model.hpp"

namespace pca {

/// Reads the `pca v1` text format.  Syntax errors carry the line number.
Model parse_model(std::istream& in);
Model parse_model_string(const std::string& text);
Model load_model(const std::string& path);  // "-" reads stdin

std::string write_model(const Model& m);

struct GenOptions {
  Id n = 8;
  bool spca = true;
  bool connected = true;
  bool saturated = false;  // every beginning point covered by another arc
  std::uint64_t seed = 1;
};

/// Random proper model with even coordinates, deterministic in the seed.
Model gen_random(const GenOptions& opt);

/// Random uniform-length model with arc 0 at point 0, for timing.
Model gen_uca(Id n, std::uint64_t seed);

}  // namespace pca
