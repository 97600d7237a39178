// subinteractions.hpp — Decomposition of a k-qudit interaction into components
// supported on each site subset (traceless on every supported site), and the
// single-site projection span used to justify sub-interaction extraction.

#pragma once

#include "gadgetforge/core/basis.hpp"
#include "gadgetforge/core/local_operator.hpp"
#include "gadgetforge/core/many_body.hpp"
#include "gadgetforge/util/rng.hpp"

#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>
#include <map>
#include <vector>

namespace gadgetforge::classify {

// Components H_S over all site subsets S, in the product basis {I/√d, √2 T^a}.
// Each H_S is traceless on every site of S, and Σ_S embed(H_S) reconstructs H.
inline std::map<std::vector<int>, LocalOperator> extract_subinteractions(const LocalOperator& H) {
    const int d = H.local_dim();
    const int k = H.arity();
    const HermitianBasis basis = gell_mann_basis(d);
    const int m = basis.size();  // d² − 1 traceless elements per site

    // orthonormal per-site basis: index 0 = I/√d, indices 1..m = √2 T^a
    std::vector<Matrix> site_basis;
    site_basis.push_back(Matrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));
    for (const Matrix& T : basis.elements) site_basis.push_back(std::sqrt(2.0) * T);

    const int per_site = m + 1;
    std::vector<int> digits(k, 0);
    std::map<std::vector<int>, Matrix> acc;
    const Index dim = H.dim();

    // iterate over all product-basis labels
    const long total = static_cast<long>(std::pow(per_site, k));
    for (long idx = 0; idx < total; ++idx) {
        long q = idx;
        for (int i = k - 1; i >= 0; --i) {
            digits[i] = static_cast<int>(q % per_site);
            q /= per_site;
        }
        Matrix prod = Matrix::Identity(1, 1);
        for (int i = 0; i < k; ++i) prod = Eigen::kroneckerProduct(prod, site_basis[digits[i]]).eval();
        const cxd coef = (prod.adjoint() * H.matrix()).trace();
        if (std::abs(coef) < 1e-14) continue;
        std::vector<int> support;
        for (int i = 0; i < k; ++i)
            if (digits[i] != 0) support.push_back(i);
        // component matrix on the support sites only
        Matrix comp = Matrix::Identity(1, 1);
        for (int i = 0; i < k; ++i)
            if (digits[i] != 0) comp = Eigen::kroneckerProduct(comp, site_basis[digits[i]]).eval();
        const double scale = std::pow(d, (k - support.size()) / 2.0);  // identity factors are I/√d
        auto [it, inserted] = acc.try_emplace(
            support, Matrix::Zero(comp.rows(), comp.cols()));
        it->second += coef / scale * comp;
        (void)dim;
    }

    std::map<std::vector<int>, LocalOperator> out;
    for (auto& [support, mat] : acc) {
        const int arity = std::max<int>(1, static_cast<int>(support.size()));
        if (support.empty()) {
            out.emplace(support, LocalOperator(d, 1, Matrix(mat(0, 0) * Matrix::Identity(d, d)), false));
        } else {
            out.emplace(support, LocalOperator(d, arity, std::move(mat)));
        }
    }
    return out;
}

// Rank of the moment span {x^(ψ)_i = ⟨ψ|B_i|ψ⟩} over sampled states, where
// H = Σ_i A_i ⊗ B_i is the operator Schmidt decomposition across the last
// site. Full rank justifies extracting any interaction in span{A_i}.
inline int projection_moment_rank(const LocalOperator& H, int n_samples, util::Rng& rng,
                                  double rel_tol = 1e-10) {
    const int d = H.local_dim();
    const int k = H.arity();
    const Index rest = pow_index(d, k - 1);
    // operator Schmidt decomposition: reshape H into (rest², d²)
    Matrix reshaped(rest * rest, static_cast<Index>(d) * d);
    const Matrix& Hm = H.matrix();
    for (Index r1 = 0; r1 < rest; ++r1)
        for (Index q1 = 0; q1 < d; ++q1)
            for (Index r2 = 0; r2 < rest; ++r2)
                for (Index q2 = 0; q2 < d; ++q2)
                    reshaped(r1 * rest + r2, q1 * d + q2) = Hm(r1 * d + q1, r2 * d + q2);
    Eigen::JacobiSVD<Matrix> svd(reshaped, Eigen::ComputeThinV);
    const RVector& sv = svd.singularValues();
    int schmidt_rank = 0;
    for (Index i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-12 * sv(0)) ++schmidt_rank;

    // B_i from the right singular vectors (as d×d operators)
    std::vector<Matrix> Bs;
    for (int i = 0; i < schmidt_rank; ++i) {
        Matrix B(d, d);
        for (Index q1 = 0; q1 < d; ++q1)
            for (Index q2 = 0; q2 < d; ++q2) B(q1, q2) = svd.matrixV()(q1 * d + q2, i);
        Bs.push_back(std::move(B));
    }
    Matrix moments(n_samples, schmidt_rank);
    for (int s = 0; s < n_samples; ++s) {
        const Vector psi = util::random_state(d, rng);
        for (int i = 0; i < schmidt_rank; ++i) moments(s, i) = (psi.adjoint() * Bs[i] * psi)(0);
    }
    Eigen::JacobiSVD<Matrix> msvd(moments);
    int rank = 0;
    for (Index i = 0; i < msvd.singularValues().size(); ++i)
        if (msvd.singularValues()(i) > rel_tol * msvd.singularValues()(0)) ++rank;
    return rank;
}

}  // namespace gadgetforge::classify
