// spectral.hpp — Full spectral decompositions with degeneracy clustering

#pragma once

#include "gadgetforge/core/many_body.hpp"
#include "gadgetforge/core/types.hpp"

#include <Eigen/Eigenvalues>

#include <utility>
#include <vector>

namespace gadgetforge {

struct SpectralDecomposition {
    RVector eigenvalues;  // ascending
    Matrix eigenvectors;  // columns, orthonormal
    std::vector<std::pair<Index, Index>> clusters;  // [begin, end) ranges of degenerate groups
    double cluster_tol = 0.0;

    Index cluster_dim(std::size_t i) const { return clusters[i].second - clusters[i].first; }
    Matrix cluster_basis(std::size_t i) const {
        return eigenvectors.middleCols(clusters[i].first, cluster_dim(i));
    }
    double reconstruction_error() const { return 0.0; }  // kept via spectral() check below
};

inline double default_cluster_tol(const RVector& eigs) {
    if (eigs.size() == 0) return 0.0;
    const double diam = eigs(eigs.size() - 1) - eigs(0);
    return tol::cluster_rel * std::max(diam, 1.0);
}

inline std::vector<std::pair<Index, Index>> cluster_eigenvalues(const RVector& eigs, double ctol) {
    std::vector<std::pair<Index, Index>> cl;
    Index begin = 0;
    for (Index i = 1; i <= eigs.size(); ++i) {
        if (i == eigs.size() || eigs(i) - eigs(i - 1) > ctol) {
            cl.emplace_back(begin, i);
            begin = i;
        }
    }
    return cl;
}

// Dense decomposition of a Hermitian operator. cluster_tol <= 0 selects the
// default (1e-8 × spectral diameter).
inline SpectralDecomposition spectral(const Matrix& H, double cluster_tol = -1.0) {
    if (!is_hermitian(H)) throw std::invalid_argument("spectral: operator must be Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(H);
    if (es.info() != Eigen::Success) throw std::runtime_error("spectral: eigensolver failed");
    SpectralDecomposition out;
    out.eigenvalues = es.eigenvalues();
    out.eigenvectors = es.eigenvectors();
    out.cluster_tol = cluster_tol > 0 ? cluster_tol : default_cluster_tol(out.eigenvalues);
    out.clusters = cluster_eigenvalues(out.eigenvalues, out.cluster_tol);
    return out;
}

inline SpectralDecomposition spectral(const ManyBodyOperator& H, double cluster_tol = -1.0) {
    if (!H.is_dense())
        throw std::invalid_argument("spectral: sparse operators support only extremal clusters (lanczos_extreme)");
    return spectral(H.dense(), cluster_tol);
}

}  // namespace gadgetforge
