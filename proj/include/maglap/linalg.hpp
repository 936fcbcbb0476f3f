// SPDX-License-Identifier: Apache-2.0
//
// Dense symmetric / Hermitian eigenvalue routines.
//
// Complex Hermitian matrices are handled through the real symmetric embedding
//     H = A + iB  ↦  [[A, −B], [B, A]],
// whose spectrum is the spectrum of H with every eigenvalue doubled. The real problem is
// reduced to tridiagonal form by Householder reflections and diagonalized by the implicit
// QL method with Wilkinson-type shifts.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "maglap/error.hpp"

namespace maglap::linalg {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
struct Tridiagonal {
    Vector<Scalar> diagonal;
    Vector<Scalar> off_diagonal;  ///< off_diagonal[i] couples i and i+1; last entry is 0
};

/// Householder reduction of a real symmetric matrix (lower triangle is read) to
/// tridiagonal form with the same eigenvalues.
template <typename Scalar>
Tridiagonal<Scalar> tridiagonalize(Matrix<Scalar> a) {
    using std::abs;
    const Eigen::Index n = a.rows();
    Tridiagonal<Scalar> t{Vector<Scalar>::Zero(n), Vector<Scalar>::Zero(n)};
    for (Eigen::Index k = 0; k + 2 < n; ++k) {
        const Eigen::Index m = n - k - 1;
        Vector<Scalar> v = a.col(k).tail(m);
        const Scalar norm = v.norm();
        t.diagonal[k] = a(k, k);
        if (norm == Scalar(0) || v.tail(m - 1).squaredNorm() == Scalar(0)) {
            t.off_diagonal[k] = a(k + 1, k);
            continue;
        }
        const Scalar beta = v[0] >= Scalar(0) ? -norm : norm;
        t.off_diagonal[k] = beta;
        v[0] -= beta;
        v.normalize();
        // A22 ← (I − 2vvᵀ) A22 (I − 2vvᵀ) as a symmetric rank-2 update.
        auto block = a.bottomRightCorner(m, m);
        const Vector<Scalar> p = block.template selfadjointView<Eigen::Lower>() * v;
        const Vector<Scalar> q = p - v.dot(p) * v;
        block.template selfadjointView<Eigen::Lower>().rankUpdate(v, q, Scalar(-2));
    }
    if (n >= 2) {
        t.diagonal[n - 2] = a(n - 2, n - 2);
        t.off_diagonal[n - 2] = a(n - 1, n - 2);
    }
    if (n >= 1) t.diagonal[n - 1] = a(n - 1, n - 1);
    return t;
}

/// Eigenvalues of a symmetric tridiagonal matrix by implicit QL, sorted ascending.
template <typename Scalar>
Vector<Scalar> tridiagonal_eigenvalues(Tridiagonal<Scalar> t, int max_sweeps = 60) {
    using std::abs;
    using std::hypot;
    Vector<Scalar>& d = t.diagonal;
    Vector<Scalar>& e = t.off_diagonal;
    const Eigen::Index n = d.size();
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    for (Eigen::Index l = 0; l < n; ++l) {
        int sweeps = 0;
        Eigen::Index m = l;
        do {
            for (m = l; m + 1 < n; ++m) {
                const Scalar dd = abs(d[m]) + abs(d[m + 1]);
                if (abs(e[m]) <= eps * dd) break;
            }
            if (m == l) break;
            if (sweeps++ == max_sweeps) throw NumericalFailure("implicit QL did not converge");

            Scalar g = (d[l + 1] - d[l]) / (Scalar(2) * e[l]);
            Scalar r = hypot(g, Scalar(1));
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            Scalar s = 1, c = 1, p = 0;
            bool deflated = false;
            for (Eigen::Index i = m - 1; i >= l; --i) {
                const Scalar f = s * e[i];
                const Scalar b = c * e[i];
                r = hypot(f, g);
                e[i + 1] = r;
                if (r == Scalar(0)) {
                    d[i + 1] -= p;
                    e[m] = 0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + Scalar(2) * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (deflated) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0;
        } while (m != l);
    }
    std::sort(d.begin(), d.end());
    return d;
}

/// All eigenvalues of a real symmetric matrix, ascending.
template <typename Scalar>
Vector<Scalar> symmetric_eigenvalues(const Matrix<Scalar>& a) {
    if (a.rows() != a.cols()) throw InvalidInput("eigenvalues of a non-square matrix");
    if (a.rows() == 0) return {};
    return tridiagonal_eigenvalues(tridiagonalize<Scalar>(a));
}

/// Real symmetric embedding [[Re H, −Im H], [Im H, Re H]] of a complex matrix.
template <typename Scalar>
Matrix<Scalar> real_embedding(const Matrix<std::complex<Scalar>>& h) {
    const Eigen::Index n = h.rows();
    Matrix<Scalar> m(2 * n, 2 * n);
    m.topLeftCorner(n, n) = h.real();
    m.bottomRightCorner(n, n) = h.real();
    m.topRightCorner(n, n) = -h.imag();
    m.bottomLeftCorner(n, n) = h.imag();
    return m;
}

template <typename Scalar>
Scalar hermitian_defect(const Matrix<std::complex<Scalar>>& h) {
    if (h.size() == 0) return Scalar(0);
    return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

/// Result of the doubled solve before deduplication.
template <typename Scalar>
struct PairedSpectrum {
    Vector<Scalar> values;  ///< n eigenvalues of H (mean of each pair)
    Scalar pairing_gap;     ///< max |λ_{2i+1} − λ_{2i}| over the doubled spectrum
};

/// Eigenvalues of the real embedding, paired up. Does not validate the pairing.
template <typename Scalar>
PairedSpectrum<Scalar> paired_hermitian_eigenvalues(const Matrix<std::complex<Scalar>>& h) {
    using std::abs;
    const Eigen::Index n = h.rows();
    const Vector<Scalar> doubled = symmetric_eigenvalues<Scalar>(real_embedding<Scalar>(h));
    PairedSpectrum<Scalar> out{Vector<Scalar>(n), Scalar(0)};
    for (Eigen::Index i = 0; i < n; ++i) {
        const Scalar a = doubled[2 * i];
        const Scalar b = doubled[2 * i + 1];
        out.pairing_gap = std::max(out.pairing_gap, abs(b - a));
        out.values[i] = (a + b) / Scalar(2);
    }
    return out;
}

/// Eigenvalues of a complex Hermitian matrix, ascending.
///
/// Throws InvalidInput when ‖H − H*‖_max exceeds `hermitian_tol`, and NumericalFailure when
/// the doubled eigenvalues fail to pair within `pairing_tol`·max(1, ‖H‖_max).
template <typename Scalar>
Vector<Scalar> hermitian_eigenvalues(const Matrix<std::complex<Scalar>>& h, Scalar hermitian_tol = Scalar(1e-10),
                                     Scalar pairing_tol = Scalar(1e-10)) {
    if (h.rows() != h.cols()) throw InvalidInput("eigenvalues of a non-square matrix");
    if (h.rows() == 0) return {};
    if (hermitian_defect(h) > hermitian_tol) throw InvalidInput("non_hermitian", "matrix is not Hermitian");
    const Matrix<std::complex<Scalar>> sym = (h + h.adjoint()) / Scalar(2);
    PairedSpectrum<Scalar> paired = paired_hermitian_eigenvalues<Scalar>(sym);
    const Scalar scale = std::max(Scalar(1), sym.cwiseAbs().maxCoeff());
    if (paired.pairing_gap > pairing_tol * scale)
        throw NumericalFailure("doubled eigenvalues failed to pair (gap " + std::to_string(double(paired.pairing_gap)) +
                               ")");
    return paired.values;
}

/// Largest relative residual ‖Hx − λx‖/‖H‖ over the given eigenvalues, with x obtained by
/// two steps of shifted inverse iteration. Used as an on-demand accuracy check.
template <typename Scalar>
Scalar max_relative_residual(const Matrix<std::complex<Scalar>>& h, const Vector<Scalar>& values) {
    using Complex = std::complex<Scalar>;
    const Eigen::Index n = h.rows();
    if (n == 0) return Scalar(0);
    const Scalar norm = std::max(Scalar(1e-300), h.operatorNorm());
    Scalar worst = 0;
    for (Eigen::Index k = 0; k < values.size(); ++k) {
        const Scalar shift = values[k] + Scalar(1e-10) * norm;
        const Matrix<Complex> shifted = h - Matrix<Complex>::Identity(n, n) * Complex(shift);
        const Eigen::PartialPivLU<Matrix<Complex>> lu(shifted);
        Vector<Complex> x = Vector<Complex>::Ones(n);
        for (Eigen::Index i = 0; i < n; ++i) x[i] += Complex(Scalar(0.1) * Scalar(i % 7), Scalar(0.05) * Scalar(i % 3));
        for (int step = 0; step < 3; ++step) {
            x = lu.solve(x);
            x.normalize();
        }
        const Scalar residual = (h * x - Complex(values[k]) * x).norm() / norm;
        worst = std::max(worst, residual);
    }
    return worst;
}

}  // namespace maglap::linalg
