// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace maglap {

/// Closed interval [lo, hi]; lo == hi is a point. Gap lists reuse the type for open intervals.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    bool operator==(const Interval&) const = default;
};

using IntervalList = std::vector<Interval>;

/// Bands or gaps closer than this are treated as touching.
inline constexpr double kMergeTolerance = 1e-9;

/// Sorted, pairwise disjoint union of closed intervals; neighbours within `tol` are merged.
IntervalList merge_intervals(IntervalList intervals, double tol = kMergeTolerance);

/// Intersection of two merged lists. Intervals whose ends miss each other by at most `tol`
/// meet in a single point.
IntervalList intersect(const IntervalList& a, const IntervalList& b, double tol = kMergeTolerance);

/// Image of a merged list under λ ↦ center − λ.
IntervalList reflect(const IntervalList& a, double center);

/// Maximal open subintervals of [lo, hi] not covered by the merged list `covered`; gaps not
/// longer than `min_length` are dropped.
IntervalList complement(const IntervalList& covered, double lo, double hi, double min_length = kMergeTolerance);

/// Members of `a` that are points (length ≤ tol).
IntervalList isolated_points(const IntervalList& a, double tol = kMergeTolerance);

/// Distance from x to the union (0 inside).
double distance_to(const IntervalList& a, double x);

bool covers(const IntervalList& a, double x, double tol = 0.0);

/// True iff every interval of `inner` lies inside some interval of `outer` up to tol.
bool is_subset(const IntervalList& inner, const IntervalList& outer, double tol = 0.0);

}  // namespace maglap
