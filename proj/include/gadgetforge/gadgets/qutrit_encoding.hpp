// qutrit_encoding.hpp — Encode a logical qutrit in the spin-1 block of a qudit
// pair selected by the (C − 2I)² penalty; pairwise exchange between two such
// pairs acts as the logical spin-1 interaction.

#pragma once

#include "gadgetforge/catalog/interactions.hpp"
#include "gadgetforge/core/spectral.hpp"
#include "gadgetforge/gadgets/report.hpp"

namespace gadgetforge::gadgets {

// Orthonormal basis of the spin-1 block of two d-dimensional qudits, ordered
// m = +1, 0, −1 with ladder-fixed phases, so the block carries the standard
// spin-1 matrices.
inline Matrix spin1_block_basis(int d) {
    const auto S = spin_operators(d);
    const Index d2 = static_cast<Index>(d) * d;
    const double lam = (d * d - 1) / 4.0;
    const Matrix h = catalog::heisenberg_su2(d).op.matrix();
    const Matrix C = 2.0 * h + 2.0 * lam * Matrix::Identity(d2, d2);
    const Matrix pen = (C - 2.0 * Matrix::Identity(d2, d2)) * (C - 2.0 * Matrix::Identity(d2, d2));
    const SpectralDecomposition dec = spectral(pen);
    if (dec.cluster_dim(0) != 3 || std::abs(dec.eigenvalues(0)) > 1e-9)
        throw std::runtime_error("spin1_block_basis: penalty kernel is not 3-dimensional");
    const Matrix K = dec.cluster_basis(0);

    auto total = [&](const Matrix& s) -> Matrix {
        return Eigen::kroneckerProduct(s, Matrix::Identity(d, d)).eval() +
               Eigen::kroneckerProduct(Matrix::Identity(d, d), s).eval();
    };
    const Matrix Sz = total(S[2]);
    const Matrix Sm = total(S[0]) - cxd(0, 1) * total(S[1]);

    Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(K.adjoint() * Sz * K));
    const Matrix Kz = K * es.eigenvectors();  // ascending: m = −1, 0, +1
    Vector top = Kz.col(2);
    Index imax;
    top.cwiseAbs().maxCoeff(&imax);
    top *= std::abs(top(imax)) / top(imax);  // fix the overall phase
    Vector mid = Sm * top;
    mid /= mid.norm();
    Vector bot = Sm * mid;
    bot /= bot.norm();
    Matrix B(d2, 3);
    B.col(0) = top;
    B.col(1) = mid;
    B.col(2) = bot;
    return B;
}

inline GadgetReport qutrit_encoding_check(int d, double tol = 1e-10) {
    const int n = 4;  // pairs (0,1) and (2,3)
    const double lam = (d * d - 1) / 4.0;
    const Index d2 = static_cast<Index>(d) * d;
    const Matrix h = catalog::heisenberg_su2(d).op.matrix();

    GadgetReport rep;
    rep.gadget = "qutrit-encoding";
    rep.d = d;
    rep.tolerance = tol;

    const Matrix C = 2.0 * h + 2.0 * lam * Matrix::Identity(d2, d2);
    const Matrix pen = (C - 2.0 * Matrix::Identity(d2, d2)) * (C - 2.0 * Matrix::Identity(d2, d2));
    const Matrix expand =
        4.0 * ((h * h).eval() + 2.0 * (lam - 1) * h + (lam - 1) * (lam - 1) * Matrix::Identity(d2, d2));
    rep.checks.add("(C-2I)^2 = 4(h^2 + 2(lambda-1) h + (lambda-1)^2 I)", max_abs(pen - expand), 1e-12);

    const SpectralDecomposition dec = spectral(pen);
    rep.checks.add("penalty is PSD", std::max(0.0, -dec.eigenvalues(0)), 1e-10);
    const Index kernel = (dec.eigenvalues.array() < 1e-9).count();
    rep.checks.add("kernel dimension = 3", std::abs(static_cast<double>(kernel) - 3.0), 0.5);

    const Matrix B = spin1_block_basis(d);
    Matrix L(pow_index(d, n), 9);
    int c = 0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            L.col(c++) = product_state({{B.col(a), {0, 1}}, {B.col(b), {2, 3}}}, n, d);

    const ManyBodyOperator Hint = embed(catalog::heisenberg_su2(d).op, {0, 2}, n) +
                                  embed(catalog::heisenberg_su2(d).op, {0, 3}, n) +
                                  embed(catalog::heisenberg_su2(d).op, {1, 2}, n) +
                                  embed(catalog::heisenberg_su2(d).op, {1, 3}, n);
    const Matrix projected = L.adjoint() * Hint.to_dense_matrix() * L;
    const Matrix h_spin1 = catalog::heisenberg_su2(3).op.matrix();
    rep.checks.add("projected pair coupling = logical spin-1 exchange", max_abs(projected - h_spin1), tol);

    rep.effective = projected;
    rep.expected = h_spin1;
    return rep;
}

}  // namespace gadgetforge::gadgets
