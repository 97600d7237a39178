// types.hpp — Shared scalar/matrix aliases and default tolerances

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gadgetforge {

using cxd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

namespace tol {
// Hermiticity acceptance: relative to the largest matrix entry.
inline constexpr double hermiticity = 1e-12;
// Degeneracy clustering: relative to the spectral diameter.
inline constexpr double cluster_rel = 1e-8;
// Rank decisions: relative to the top singular value.
inline constexpr double rank_rel = 1e-8;
// Closed-form identity checks.
inline constexpr double closed_form = 1e-9;
}  // namespace tol

// Dense storage is used up to this Hilbert-space dimension; beyond it,
// constructors fall back to coordinate-sparse storage.
inline constexpr Index kDefaultDenseLimit = 4096;

inline Index pow_index(Index base, int exp) {
    Index r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > (Index(1) << 56) / base) throw std::overflow_error("pow_index: dimension overflow");
        r *= base;
    }
    return r;
}

inline double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const Matrix& m, double tolerance = tol::hermiticity) {
    if (m.rows() != m.cols()) return false;
    const double scale = std::max(1.0, max_abs(m));
    return max_abs(m - m.adjoint()) <= tolerance * scale;
}

}  // namespace gadgetforge
