#pragma once

#include "hibi/numeric.hpp"

#include <optional>
#include <span>
#include <vector>

namespace hibi {

/// Exact feasibility of { lambda >= 0 : sum_i lambda_i * generators[i] = target }
/// over Q: phase-one simplex with Bland's rule, so it always terminates.
/// Returns the certificate lambda when feasible.
std::optional<std::vector<Rational>> cone_combination(
    std::span<const std::vector<int>> generators, const std::vector<int>& target);

inline bool in_rational_cone(std::span<const std::vector<int>> generators,
                             const std::vector<int>& target) {
  return cone_combination(generators, target).has_value();
}

}  // namespace hibi
