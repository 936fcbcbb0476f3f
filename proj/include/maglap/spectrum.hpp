// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "maglap/dml.hpp"
#include "maglap/intervals.hpp"

namespace maglap {

/// Sorted eigenvalues λ_1 ≤ … ≤ λ_n with the ambient interval [0, ambient_max].
struct Spectrum {
    Eigen::VectorXd values;
    double ambient_max = 0.0;

    Eigen::Index size() const { return values.size(); }
    double operator[](Eigen::Index k) const { return values[k]; }
};

/// Eigenvalues through the doubled real embedding. Throws NumericalFailure if a value falls
/// outside [−1e−9, ambient_max + 1e−9].
Spectrum eigenvalues(const HermitianMatrix& h);

Spectrum spectrum_of(const MwGraph& g);

/// a ≼ b: len(a) ≥ len(b) and λ_k(a) ≤ λ_k(b) + tol for every k, b padded with ambient_max.
/// Throws InvalidInput when len(a) < len(b).
bool spectrally_leq(const Spectrum& a, const Spectrum& b, double ambient_max, double tol = 1e-12);

/// b's values padded with `pad` up to length n.
Eigen::VectorXd padded(const Spectrum& b, Eigen::Index n, double pad);

/// Maximal open subintervals of [0, ambient_max] free of eigenvalues, shorter than 1e−9 dropped.
IntervalList gap_set(const Spectrum& s);

}  // namespace maglap
