// effective.hpp — Effective low-energy Hamiltonians: the order-1..4 expansion
// of e^S H_sim e^{-S} restricted to the ground block, and the exact
// Schrieffer-Wolff (direct-rotation) evaluation it is compared against.
//
// All block algebra happens in the split basis [e_minus | e_plus] where
// H0 = diag(0, λ_+). The exact evaluation has two routes: a dense eigensolve,
// and an invariant-subspace (Riccati) iteration that stays well-scaled at
// very large Δ where forming ΔH0 + A densely would lose the low block to
// roundoff.

#pragma once

#include "gadgetforge/sw/block_split.hpp"

#include <Eigen/SVD>

#include <string>
#include <vector>

namespace gadgetforge::sw {

namespace detail {

struct Blocks {
    Matrix mm, mp, pm, pp;
};

inline Blocks blocks(const Matrix& a_split, int m) {
    const Index k = a_split.rows() - m;
    return {a_split.topLeftCorner(m, m), a_split.topRightCorner(m, k), a_split.bottomLeftCorner(k, m),
            a_split.bottomRightCorner(k, k)};
}

// R^p · X and Π_- · X in split coordinates (R = diag(0, 1/λ_+)).
inline Matrix apply_rinv(const BlockSplit& s, const Matrix& X, int power = 1) {
    Matrix Y = X;
    Y.topRows(s.ground_dim).setZero();
    RVector scale = s.plus_eigs.cwiseInverse();
    for (int p = 1; p < power; ++p) scale = scale.cwiseProduct(s.plus_eigs.cwiseInverse());
    Y.bottomRows(s.dim - s.ground_dim) =
        scale.asDiagonal().toDenseMatrix().cast<cxd>() * Y.bottomRows(s.dim - s.ground_dim);
    return Y;
}

inline Matrix apply_pi_minus(const BlockSplit& s, const Matrix& X) {
    Matrix Y = X;
    Y.bottomRows(s.dim - s.ground_dim).setZero();
    return Y;
}

}  // namespace detail

struct EffectiveSeries {
    int order = 0;
    std::vector<Matrix> terms;  // m×m on the ground block, terms[i] = H_eff,i+1

    Matrix sum() const {
        Matrix s = terms.front();
        for (std::size_t i = 1; i < terms.size(); ++i) s += terms[i];
        return s;
    }
};

// Scale the perturbations into A as each simulation order prescribes.
// Order 3 interprets the h3 slot as the Δ^{1/3} block-diagonal correction term.
inline Matrix scaled_perturbation(const Matrix& h1, const Matrix& h2, const Matrix& h3, const Matrix& h4,
                                  double delta, int order) {
    switch (order) {
        case 1:
            return h1;
        case 2:
            return std::sqrt(delta) * h2 + h1;
        case 3:
            return std::pow(delta, 2.0 / 3.0) * h2 + std::cbrt(delta) * h3 + h1;
        case 4:
            return std::pow(delta, 0.75) * h4 + std::sqrt(delta) * h2 + std::pow(delta, 0.25) * h3 + h1;
        default:
            throw std::invalid_argument("scaled_perturbation: order must be 1..4");
    }
}

// Series terms of the rotated Hamiltonian on the ground block. Inputs are
// full-space operators; all four slots are accepted for every order (unused
// ones zero).
inline EffectiveSeries effective_series(const BlockSplit& split, const Matrix& h1, const Matrix& h2,
                                        const Matrix& h3, const Matrix& h4, double delta, int order) {
    if (order < 1 || order > 4) throw std::invalid_argument("effective_series: order must be 1..4");
    const int m = split.ground_dim;
    const Matrix A = split.to_split(scaled_perturbation(h1, h2, h3, h4, delta, order));
    const auto B = detail::blocks(A, m);
    const RVector rinv = split.plus_eigs.cwiseInverse();
    const Matrix Rpp = rinv.asDiagonal().toDenseMatrix().cast<cxd>();

    EffectiveSeries out;
    out.order = order;
    out.terms.push_back(B.mm);
    if (order >= 2) out.terms.push_back(-(B.mp * Rpp * B.pm) / delta);
    if (order >= 3) {
        Matrix t3 = (B.mp * Rpp * B.pp * Rpp * B.pm) / (delta * delta);
        const Matrix c = (B.mp * Rpp * Rpp * B.pm) * B.mm;
        t3 -= (c + c.adjoint()) / (2 * delta * delta);
        out.terms.push_back(std::move(t3));
    }
    if (order >= 4) {
        // five displayed terms + h.c., assembled right-to-left with R = diag(0, 1/λ)
        auto R = [&](const Matrix& X, int p = 1) { return detail::apply_rinv(split, X, p); };
        auto Pm = [&](const Matrix& X) { return detail::apply_pi_minus(split, X); };
        const Matrix t_a = A * R(A * Pm(A * R(A)), 2);              // A R² A Π_- A R A
        const Matrix t_b = A * R(A * R(A * R(A)));                  // A R A R A R A
        const Matrix t_c = A * R(A * R(A * Pm(A), 1), 2);           // A R² A R A Π_- A
        const Matrix t_d = A * R(A * R(A * Pm(A), 2), 1);           // A R A R² A Π_- A
        const Matrix t_e = A * R(A * Pm(A * Pm(A)), 3);             // A R³ A Π_- A Π_- A
        const Matrix combo = t_a - t_b + t_c + t_d - t_e;
        const Matrix block = combo.topLeftCorner(m, m);
        out.terms.push_back(Matrix((block + block.adjoint()) / (2 * delta * delta * delta)));
    }
    return out;
}

// --------------------------- exact Schrieffer-Wolff ---------------------------

struct ExactSWResult {
    bool rank_match = false;
    Matrix h_eff;         // m×m on the ground block (e_minus basis)
    double eta = 0.0;     // || Vtilde − V || for V the ground-space embedding
    double residual = 0;  // invariant-subspace residual (Riccati route), 0 for dense
    std::string note;     // route taken or failure reason
};

namespace detail {

// Direct rotation from an orthonormal low-space basis W (split coordinates,
// dim×m): H_eff = Z† (W†HW) Z with Z the unitary polar factor of W†E_-.
inline ExactSWResult rotate_from_basis(const Matrix& W, const RVector& low_eigs) {
    const int m = static_cast<int>(W.cols());
    const Matrix overlap = W.topRows(m).adjoint();  // W† E_-, m×m
    Eigen::JacobiSVD<Matrix> svd(overlap, Eigen::ComputeFullU | Eigen::ComputeFullV);
    ExactSWResult out;
    if (svd.singularValues()(m - 1) < 1e-8) {
        out.rank_match = false;
        out.note = "polar factor singular: low space nearly orthogonal to the ground space";
        return out;
    }
    const Matrix Z = svd.matrixU() * svd.matrixV().adjoint();
    out.rank_match = true;
    out.h_eff = Z.adjoint() * low_eigs.asDiagonal().toDenseMatrix().cast<cxd>() * Z;
    Matrix diff = W * Z;
    diff.topRows(m) -= Matrix::Identity(m, m);
    out.eta = diff.jacobiSvd().singularValues()(0);
    out.note = "dense";
    return out;
}

}  // namespace detail

// Dense route: eigensolve H_sim (split coordinates) and rotate the block below
// `cutoff` onto the ground space. Fails rank_match if the count below the
// cutoff differs from ground_dim.
inline ExactSWResult exact_sw_dense_split(const BlockSplit& split, const Matrix& h_sim_split, double cutoff) {
    const int m = split.ground_dim;
    Eigen::SelfAdjointEigenSolver<Matrix> es(h_sim_split);
    if (es.info() != Eigen::Success) throw std::runtime_error("exact_sw: eigensolver failed");
    const Index below = (es.eigenvalues().array() <= cutoff).count();
    if (below != m) {
        ExactSWResult out;
        out.rank_match = false;
        out.note = "rank mismatch: " + std::to_string(below) + " eigenvalues below cutoff, expected " +
                   std::to_string(m);
        return out;
    }
    return detail::rotate_from_basis(es.eigenvectors().leftCols(m), es.eigenvalues().head(m));
}

// Riccati route: solve for the invariant subspace [I; X] of ΔH0 + A without
// ever forming O(Δ)-sized sums, so the effective block keeps full relative
// precision at large Δ. Requires Δ λ_min(H0_++) to dominate ||A||.
inline ExactSWResult exact_sw_riccati(const BlockSplit& split, const Matrix& a_split, double delta) {
    const int m = split.ground_dim;
    const Index k = split.dim - m;
    const auto B = detail::blocks(a_split, m);
    const RVector dinv = (delta * split.plus_eigs).cwiseInverse();

    Matrix X = Matrix::Zero(k, m);
    ExactSWResult out;
    double step = 0;
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
        const Matrix rhs = X * (B.mm + B.mp * X) - B.pm - B.pp * X;
        Matrix Xn = dinv.asDiagonal().toDenseMatrix().cast<cxd>() * rhs;
        step = (Xn - X).norm();
        X = std::move(Xn);
        if (X.norm() > 0.7) {
            out.note = "riccati diverged";
            return out;
        }
        if (step <= 1e-16 * std::max(1.0, X.norm())) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        out.note = "riccati did not converge";
        return out;
    }
    const Matrix h_blk = B.mm + B.mp * X;
    const Matrix G = Matrix::Identity(m, m) + X.adjoint() * X;
    Eigen::SelfAdjointEigenSolver<Matrix> eg(G);
    const Matrix g_half = eg.operatorSqrt();
    const Matrix g_half_inv = eg.operatorInverseSqrt();
    Matrix h_eff = g_half * h_blk * g_half_inv;
    out.h_eff = (h_eff + h_eff.adjoint()) / 2.0;
    out.rank_match = true;
    // residual of the invariant-subspace equation, relative to the heavy scale
    const Matrix res = delta * split.plus_eigs.asDiagonal().toDenseMatrix().cast<cxd>() * X + B.pm +
                       B.pp * X - X * h_blk;
    out.residual = res.norm() / (delta * split.plus_eigs(0));
    Matrix diff(split.dim, m);
    diff.topRows(m) = g_half_inv - Matrix::Identity(m, m);
    diff.bottomRows(k) = X * g_half_inv;
    out.eta = diff.jacobiSvd().singularValues()(0);
    out.note = "riccati";
    return out;
}

// Exact effective Hamiltonian for H_sim = ΔH0 + (scaled perturbation A).
// Picks the Riccati route when Δ comfortably dominates ||A||, else the dense
// eigensolve with low-space cutoff Δ/2.
inline ExactSWResult exact_sw_scaled(const BlockSplit& split, const Matrix& a_full, double delta) {
    const Matrix a_split = split.to_split(a_full);
    const double a_scale = a_split.norm();
    if (delta * split.plus_eigs(0) >= 8.0 * a_scale) {
        ExactSWResult r = exact_sw_riccati(split, a_split, delta);
        if (r.rank_match) return r;
    }
    Matrix h_sim = a_split;
    h_sim.bottomRightCorner(split.dim - split.ground_dim, split.dim - split.ground_dim) +=
        delta * split.plus_eigs.asDiagonal().toDenseMatrix().cast<cxd>();
    return exact_sw_dense_split(split, h_sim, delta / 2.0);
}

// Spec-level entry point: rotate the low-energy block (below `cutoff`) of an
// assembled simulator onto the ground space of the split.
inline ExactSWResult exact_schrieffer_wolff(const ManyBodyOperator& h_sim, double cutoff,
                                            const BlockSplit& split) {
    return exact_sw_dense_split(split, split.to_split(h_sim.to_dense_matrix()), cutoff);
}

}  // namespace gadgetforge::sw
