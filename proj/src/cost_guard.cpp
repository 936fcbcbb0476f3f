// SPDX-License-Identifier: Apache-2.0
#include "maglap/cost_guard.hpp"

#include <cmath>
#include <cstdlib>

#include "maglap/error.hpp"

namespace maglap {

double cost_cap() {
    if (const char* env = std::getenv("MAGLAP_COST_CAP")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && std::isfinite(v) && v > 0.0) return v;
    }
    return kDefaultCostCap;
}

void check_cost(double cost, const std::string& what) {
    const double cap = cost_cap();
    if (!(cost <= cap))
        throw CostGuardExceeded(what + ": estimated cost " + std::to_string(cost) + " exceeds cap " + std::to_string(cap));
}

}  // namespace maglap
