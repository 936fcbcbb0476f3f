// SPDX-License-Identifier: Apache-2.0
#include "maglap/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace maglap {

IntervalList merge_intervals(IntervalList intervals, double tol) {
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
    IntervalList merged;
    for (const Interval& iv : intervals) {
        if (!merged.empty() && iv.lo <= merged.back().hi + tol) {
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        } else {
            merged.push_back(iv);
        }
    }
    return merged;
}

IntervalList intersect(const IntervalList& a, const IntervalList& b, double tol) {
    IntervalList out;
    for (const Interval& x : a) {
        for (const Interval& y : b) {
            const double lo = std::max(x.lo, y.lo);
            const double hi = std::min(x.hi, y.hi);
            if (hi >= lo) {
                out.push_back({lo, hi});
            } else if (lo - hi <= tol) {
                const double mid = 0.5 * (lo + hi);
                out.push_back({mid, mid});
            }
        }
    }
    return merge_intervals(std::move(out), 0.0);
}

IntervalList reflect(const IntervalList& a, double center) {
    IntervalList out;
    out.reserve(a.size());
    for (auto it = a.rbegin(); it != a.rend(); ++it) out.push_back({center - it->hi, center - it->lo});
    return out;
}

IntervalList complement(const IntervalList& covered, double lo, double hi, double min_length) {
    IntervalList gaps;
    double cursor = lo;
    for (const Interval& iv : covered) {
        if (iv.lo - cursor > min_length) gaps.push_back({cursor, std::min(iv.lo, hi)});
        cursor = std::max(cursor, iv.hi);
        if (cursor >= hi) break;
    }
    if (hi - cursor > min_length) gaps.push_back({cursor, hi});
    return gaps;
}

IntervalList isolated_points(const IntervalList& a, double tol) {
    IntervalList points;
    for (const Interval& iv : a)
        if (iv.length() <= tol) points.push_back(iv);
    return points;
}

double distance_to(const IntervalList& a, double x) {
    double best = std::numeric_limits<double>::infinity();
    for (const Interval& iv : a) {
        const double d = x < iv.lo ? iv.lo - x : x > iv.hi ? x - iv.hi : 0.0;
        best = std::min(best, d);
    }
    return best;
}

bool covers(const IntervalList& a, double x, double tol) { return distance_to(a, x) <= tol; }

bool is_subset(const IntervalList& inner, const IntervalList& outer, double tol) {
    return std::all_of(inner.begin(), inner.end(), [&](const Interval& iv) {
        return std::any_of(outer.begin(), outer.end(), [&](const Interval& o) {
            return iv.lo >= o.lo - tol && iv.hi <= o.hi + tol;
        });
    });
}

}  // namespace maglap
