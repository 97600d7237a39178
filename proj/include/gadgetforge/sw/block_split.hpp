// block_split.hpp — Ground/excited decomposition of a heavy Hamiltonian H0:
// projectors, the restricted inverse on the excited space, and the split basis
// used by the perturbative machinery.

#pragma once

#include "gadgetforge/core/many_body.hpp"
#include "gadgetforge/core/spectral.hpp"

#include <utility>

namespace gadgetforge::sw {

// Split data for H0 with ground energy 0. e_minus spans the ground space,
// e_plus the excited space with eigenvalues plus_eigs (ascending). The
// restricted inverse acts as Σ e_plus diag(1/λ) e_plus† and vanishes on the
// ground space; eigenvalues below gap/2 are treated as ground.
struct BlockSplit {
    Index dim = 0;
    int ground_dim = 0;
    double gap = 0.0;
    bool gap_warning = false;  // λ_min((H0)_++) < 1: simulation-lemma premise unmet
    Matrix e_minus;            // dim × m
    Matrix e_plus;             // dim × (dim − m)
    RVector plus_eigs;

    Matrix pi_minus() const { return e_minus * e_minus.adjoint(); }
    Matrix pi_plus() const { return e_plus * e_plus.adjoint(); }

    Matrix pinv() const {
        Matrix inv = e_plus * plus_eigs.cwiseInverse().asDiagonal().toDenseMatrix().cast<cxd>() *
                     e_plus.adjoint();
        return inv;
    }

    // Coordinates of a full-space operator in the [e_minus | e_plus] basis.
    Matrix to_split(const Matrix& A) const {
        Matrix B(dim, dim);
        B.leftCols(ground_dim) = A * e_minus;
        B.rightCols(dim - ground_dim) = A * e_plus;
        Matrix out(dim, dim);
        out.topRows(ground_dim) = e_minus.adjoint() * B;
        out.bottomRows(dim - ground_dim) = e_plus.adjoint() * B;
        return out;
    }

    Matrix from_split_ground(const Matrix& block) const { return e_minus * block * e_minus.adjoint(); }
};

// Decompose a PSD H0 whose ground energy is 0 within tol. Throws if the ground
// energy is displaced (callers shift explicitly — silently re-zeroing would
// hide construction bugs). gap < 1 is recorded as a warning, not an error.
inline BlockSplit block_split(const ManyBodyOperator& H0, double tolerance = 1e-9) {
    if (!H0.hermitian()) throw std::invalid_argument("block_split: H0 must be Hermitian");
    const SpectralDecomposition dec = spectral(H0);
    const double ground = dec.eigenvalues(0);
    if (std::abs(ground) > tolerance)
        throw std::invalid_argument("block_split: ground energy is " + std::to_string(ground) +
                                    ", not 0 (shift H0 before splitting)");
    if (dec.eigenvalues(dec.eigenvalues.size() - 1) < -tolerance)
        throw std::invalid_argument("block_split: H0 must be positive semidefinite");

    BlockSplit out;
    out.dim = dec.eigenvalues.size();
    out.ground_dim = static_cast<int>(dec.cluster_dim(0));
    if (out.ground_dim == out.dim) throw std::invalid_argument("block_split: H0 has no excited space");
    out.gap = dec.eigenvalues(out.ground_dim);
    out.gap_warning = out.gap < 1.0 - tolerance;
    out.e_minus = dec.cluster_basis(0);
    out.e_plus = dec.eigenvectors.rightCols(out.dim - out.ground_dim);
    out.plus_eigs = dec.eigenvalues.tail(out.dim - out.ground_dim);

    // eigenvalues below gap/2 were clustered into the ground space already;
    // sanity: the restricted inverse never sees a near-zero eigenvalue
    if (out.plus_eigs(0) < out.gap / 2)
        throw std::runtime_error("block_split: inconsistent degeneracy clustering");
    return out;
}

}  // namespace gadgetforge::sw
