// rng.hpp — Deterministic random matrices/states for tests and randomised checks

#pragma once

#include "gadgetforge/core/types.hpp"

#include <Eigen/QR>

#include <random>

namespace gadgetforge::util {

using Rng = std::mt19937_64;

inline Matrix random_gaussian(Index rows, Index cols, Rng& rng) {
    std::normal_distribution<double> g;
    return Matrix::NullaryExpr(rows, cols, [&](Index, Index) { return cxd(g(rng), g(rng)); });
}

inline Matrix random_hermitian(Index dim, Rng& rng, double scale = 1.0) {
    Matrix A = random_gaussian(dim, dim, rng);
    Matrix H = (A + A.adjoint()) / 2.0;
    const double n = H.norm();
    if (n > 0) H *= scale * std::sqrt(static_cast<double>(dim)) / n;
    return H;
}

// Haar-ish unitary via QR of a complex Gaussian with phase fix.
inline Matrix random_unitary(Index dim, Rng& rng) {
    Matrix A = random_gaussian(dim, dim, rng);
    Eigen::HouseholderQR<Matrix> qr(A);
    Matrix Q = qr.householderQ() * Matrix::Identity(dim, dim);
    Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index i = 0; i < dim; ++i) {
        const cxd r = R(i, i);
        Q.col(i) *= (r == cxd(0)) ? cxd(1) : r / std::abs(r);
    }
    return Q;
}

inline Vector random_state(Index dim, Rng& rng) {
    std::normal_distribution<double> g;
    Vector v = Vector::NullaryExpr(dim, [&](Index) { return cxd(g(rng), g(rng)); });
    return v / v.norm();
}

}  // namespace gadgetforge::util
