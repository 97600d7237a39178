// simulation.hpp — Numerical certification of low-energy simulations: given a
// simulator H', a target H with an encoding isometry V and an energy cut Δ,
// measure the achieved isometry distance η and operator-norm error ε.

#pragma once

#include "gadgetforge/core/json_io.hpp"
#include "gadgetforge/core/spectral.hpp"
#include "gadgetforge/sw/sweep.hpp"

#include <Eigen/SVD>

namespace gadgetforge::cert {

struct LowEnergyProjector {
    Matrix basis;       // dim × r orthonormal columns
    double cut = 0;
    bool cluster_flag = false;  // the cut fell inside a degenerate cluster (cluster included)
};

inline LowEnergyProjector low_energy_projector(const ManyBodyOperator& H, double delta,
                                               double cluster_tol = -1) {
    const SpectralDecomposition dec = spectral(H, cluster_tol);
    LowEnergyProjector out;
    out.cut = delta;
    Index r = 0;
    for (std::size_t c = 0; c < dec.clusters.size(); ++c) {
        const auto [begin, end] = dec.clusters[c];
        const double lo = dec.eigenvalues(begin);
        const double hi = dec.eigenvalues(end - 1);
        if (hi <= delta - dec.cluster_tol) {  // fully below the cut
            r = end;
            continue;
        }
        if (lo > delta + dec.cluster_tol) break;  // fully above
        // the cut grazes or splits this cluster: include it whole and flag
        r = end;
        out.cluster_flag = true;
    }
    out.basis = dec.eigenvectors.leftCols(r);
    return out;
}

struct SimulationReport {
    double delta = 0;
    int low_space_dim = 0;
    double eta = 0;
    double eps = 0;
    bool rank_match = false;
    double identity_offset = 0;  // populated in mod-identity mode

    nlohmann::json to_json() const {
        return nlohmann::json{{"delta", delta},
                              {"low_space_dim", low_space_dim},
                              {"eta", eta},
                              {"eps", eps},
                              {"rank_match", rank_match},
                              {"identity_offset", identity_offset}};
    }
};

// Conditions measured: there is an isometry Vt with range(Vt) = range(P_{≤Δ})
// closest to V (polar choice, so the reported η upper-bounds the optimum), and
// ε = ‖H' P_{≤Δ} − Vt H Vt†‖. mod_identity compares traceless parts and
// reports the trace mismatch separately.
inline SimulationReport certify_simulation(const ManyBodyOperator& h_prime, const ManyBodyOperator& h_target,
                                           const Matrix& isometry, double delta, bool mod_identity = false) {
    if (isometry.rows() != h_prime.dim())
        throw std::invalid_argument("certify_simulation: isometry row dimension mismatch");
    if (isometry.cols() != h_target.dim())
        throw std::invalid_argument("certify_simulation: isometry columns must match the target dimension");
    SimulationReport rep;
    rep.delta = delta;

    const LowEnergyProjector low = low_energy_projector(h_prime, delta);
    rep.low_space_dim = static_cast<int>(low.basis.cols());
    if (low.basis.cols() != isometry.cols()) {
        rep.rank_match = false;
        return rep;
    }
    rep.rank_match = true;

    // closest isometry with the prescribed range: polar factor of P V
    const Matrix overlap = low.basis.adjoint() * isometry;  // r × r
    Eigen::JacobiSVD<Matrix> svd(overlap, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Matrix vt = low.basis * (svd.matrixU() * svd.matrixV().adjoint());
    rep.eta = sw::spectral_norm(vt - isometry);

    const Matrix h_low = h_prime.to_dense_matrix() * (low.basis * low.basis.adjoint());
    Matrix encoded = vt * h_target.to_dense_matrix() * vt.adjoint();
    if (mod_identity) {
        // compare on the low space modulo identity: project both to the block
        const Matrix block_sim = low.basis.adjoint() * h_low * low.basis;
        const Matrix block_tgt = low.basis.adjoint() * encoded * low.basis;
        rep.identity_offset =
            std::real((block_sim - block_tgt).trace()) / static_cast<double>(low.basis.cols());
        rep.eps = sw::spectral_norm(sw::traceless_part(block_sim) - sw::traceless_part(block_tgt));
    } else {
        rep.eps = sw::spectral_norm(h_low - encoded);
    }
    return rep;
}

}  // namespace gadgetforge::cert
