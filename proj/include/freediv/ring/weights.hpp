#pragma once

#include <optional>
#include <vector>

#include "freediv/ring/polynomial.hpp"

namespace freediv {

struct WeightedDegree {
  long degree = 0;
  bool homogeneous = false;
  /// Set for the zero polynomial, which has no degree.
  bool degenerate = false;
};

/// Weighted degree of `f`; `weights` has one strictly positive entry per ambient variable.
WeightedDegree weighted_degree(const Polynomial& f, const std::vector<long>& weights);

/// Strictly positive weights, as coprime integers, making `f` weighted homogeneous, or nullopt.
/// When several weight vectors exist an arbitrary strictly positive one is returned.
std::optional<std::vector<long>> find_weights(const Polynomial& f);

}  // namespace freediv
