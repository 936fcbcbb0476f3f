// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace maglap {

inline constexpr double kDefaultCostCap = 1e11;

/// Cap on grid-points × n³ for sweeps; MAGLAP_COST_CAP overrides the default.
double cost_cap();

/// Throws CostGuardExceeded when `cost` exceeds cost_cap().
void check_cost(double cost, const std::string& what);

}  // namespace maglap
