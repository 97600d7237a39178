// two_local.hpp — The 2-local part of a two-qudit interaction, its coefficient
// matrix in the traceless generator basis, and the rank that drives the
// classification.

#pragma once

#include "gadgetforge/core/basis.hpp"
#include "gadgetforge/core/local_operator.hpp"

#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

namespace gadgetforge::classify {

struct TwoLocalDecomposition {
    LocalOperator h_prime;
    RMatrix coefficient_matrix;  // M with H' = Σ M_ab T^a ⊗ T^b
    RVector singular_values;     // descending
    int rank_at_tol = 0;
    double rank_tol = 0;
    bool borderline = false;  // a singular value within 10× of the cut
};

// H' = H − I/d ⊗ tr_1(H) − tr_2(H) ⊗ I/d + tr(H) I⊗I/d².
inline Matrix two_local_part_matrix(const Matrix& H, int d) {
    const Index D = static_cast<Index>(d) * d;
    if (H.rows() != D || H.cols() != D) throw std::invalid_argument("two_local_part: arity must be 2");
    Matrix tr1 = Matrix::Zero(d, d);  // trace over the first factor
    Matrix tr2 = Matrix::Zero(d, d);  // trace over the second factor
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int q = 0; q < d; ++q) {
                tr1(i, j) += H(static_cast<Index>(q) * d + i, static_cast<Index>(q) * d + j);
                tr2(i, j) += H(static_cast<Index>(i) * d + q, static_cast<Index>(j) * d + q);
            }
    const Matrix id = Matrix::Identity(d, d);
    return H - Eigen::kroneckerProduct(id, tr1).eval() / d - Eigen::kroneckerProduct(tr2, id).eval() / d +
           (H.trace() / cxd(static_cast<double>(d) * d, 0)) * Matrix::Identity(D, D);
}

inline TwoLocalDecomposition two_local_part(const LocalOperator& H, double rank_tol = tol::rank_rel) {
    if (H.arity() != 2) throw std::invalid_argument("two_local_part: arity must be 2");
    const int d = H.local_dim();
    const Matrix hp = two_local_part_matrix(H.matrix(), d);
    const HermitianBasis basis = gell_mann_basis(d);
    const int m = basis.size();
    RMatrix M(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const cxd v =
                4.0 * (hp * Eigen::kroneckerProduct(basis.elements[a], basis.elements[b]).eval()).trace();
            M(a, b) = v.real();
        }
    TwoLocalDecomposition out{LocalOperator(d, 2, hp), M, {}, 0, rank_tol, false};
    Eigen::JacobiSVD<RMatrix> svd(M);
    out.singular_values = svd.singularValues();
    const double top = out.singular_values(0);
    const double cut = rank_tol * std::max(top, 1e-300);
    for (Index i = 0; i < out.singular_values.size(); ++i) {
        if (out.singular_values(i) > cut) ++out.rank_at_tol;
        if (out.singular_values(i) > cut / 10 && out.singular_values(i) < cut * 10 && top > 0)
            out.borderline = true;
    }
    if (top < 1e-14) out.rank_at_tol = 0;  // H' = 0
    return out;
}

inline int two_local_rank(const LocalOperator& H, double rank_tol = tol::rank_rel) {
    return two_local_part(H, rank_tol).rank_at_tol;
}

}  // namespace gadgetforge::classify
