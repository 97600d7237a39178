// interference.hpp — Cross-gadget interference of simultaneously applied
// fourth-order gadgets: the general three-term expression and its commutator
// simplification when the heavy terms act as projectors on the excited image.

#pragma once

#include "gadgetforge/sw/block_split.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace gadgetforge::sw {

using LinOp = std::function<Vector(const Vector&)>;

struct InterferenceGadget {
    LinOp h4;       // the Δ^{3/4} perturbation
    LinOp h0;       // heavy term (ground energy 0)
    LinOp h0_pinv;  // restricted inverse of the heavy term
};

struct InterferenceResult {
    Matrix general;     // on the joint ground basis
    Matrix simplified;  // −(1/2) Σ_{i<j} Π [h4_i, h4_j]² Π
    double general_vs_simplified = 0;
    std::vector<double> eigenop_residuals;  // ‖h0_i h4_i Π − h4_i Π‖ / ‖h4_i Π‖ per gadget
};

namespace detail {

inline Matrix apply_cols(const LinOp& op, const Matrix& cols) {
    Matrix out(cols.rows(), cols.cols());
    for (Index c = 0; c < cols.cols(); ++c) out.col(c) = op(cols.col(c));
    return out;
}

}  // namespace detail

// pair_pinv(i, j) must return the restricted inverse of h0_i + h0_j.
inline InterferenceResult cross_gadget_interference(const std::vector<InterferenceGadget>& gadgets,
                                                    const std::function<LinOp(int, int)>& pair_pinv,
                                                    const Matrix& ground_basis) {
    using detail::apply_cols;
    const int n = static_cast<int>(gadgets.size());
    const Index m = ground_basis.cols();
    InterferenceResult out;
    out.general = Matrix::Zero(m, m);
    out.simplified = Matrix::Zero(m, m);

    for (int i = 0; i < n; ++i) {
        const Matrix h4pi = apply_cols(gadgets[i].h4, ground_basis);
        const double scale = std::max(1.0, h4pi.norm());
        out.eigenop_residuals.push_back((apply_cols(gadgets[i].h0, h4pi) - h4pi).norm() / scale);
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto& gi = gadgets[i];
            const auto& gj = gadgets[j];
            const LinOp rij = pair_pinv(i, j);
            // h4_i R_i h4_j R_j h4_j R_i h4_i
            Matrix c = apply_cols(gi.h0_pinv, apply_cols(gi.h4, ground_basis));
            const Matrix stem = c;  // R_i h4_i Π
            Matrix t1 = apply_cols(gi.h4, apply_cols(gi.h0_pinv,
                          apply_cols(gj.h4, apply_cols(gj.h0_pinv, apply_cols(gj.h4, stem)))));
            // h4_i R_i h4_j R_ij h4_j R_i h4_i
            Matrix t2 = apply_cols(gi.h4, apply_cols(gi.h0_pinv,
                          apply_cols(gj.h4, apply_cols(rij, apply_cols(gj.h4, stem)))));
            // h4_i R_i h4_j R_ij h4_i R_j h4_j
            Matrix t3 = apply_cols(gi.h4, apply_cols(gi.h0_pinv,
                          apply_cols(gj.h4, apply_cols(rij, apply_cols(gi.h4,
                          apply_cols(gj.h0_pinv, apply_cols(gj.h4, ground_basis)))))));
            out.general += ground_basis.adjoint() * (t1 - t2 - t3);
        }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto comm = [&](const Matrix& cols) -> Matrix {
                return apply_cols(gadgets[i].h4, apply_cols(gadgets[j].h4, cols)) -
                       apply_cols(gadgets[j].h4, apply_cols(gadgets[i].h4, cols));
            };
            out.simplified += -0.5 * (ground_basis.adjoint() * comm(comm(ground_basis)));
        }

    out.general_vs_simplified = (out.general - out.simplified).norm();
    return out;
}

// Dense convenience: operators given as matrices; restricted inverses computed
// spectrally with a relative cutoff.
inline Matrix restricted_inverse(const Matrix& H, double rel_cutoff = 1e-8) {
    const SpectralDecomposition dec = spectral(H);
    const double scale = std::max(std::abs(dec.eigenvalues(0)), std::abs(dec.eigenvalues(dec.eigenvalues.size() - 1)));
    Matrix out = Matrix::Zero(H.rows(), H.cols());
    for (Index i = 0; i < dec.eigenvalues.size(); ++i) {
        if (std::abs(dec.eigenvalues(i)) <= rel_cutoff * std::max(scale, 1.0)) continue;
        out += (1.0 / dec.eigenvalues(i)) * (dec.eigenvectors.col(i) * dec.eigenvectors.col(i).adjoint());
    }
    return out;
}

inline InterferenceResult cross_gadget_interference_dense(const std::vector<Matrix>& h4s,
                                                          const std::vector<Matrix>& h0s,
                                                          const Matrix& ground_basis) {
    if (h4s.size() != h0s.size()) throw std::invalid_argument("cross_gadget_interference: size mismatch");
    std::vector<InterferenceGadget> gadgets;
    auto pinvs = std::make_shared<std::vector<Matrix>>();
    for (std::size_t i = 0; i < h4s.size(); ++i) pinvs->push_back(restricted_inverse(h0s[i]));
    for (std::size_t i = 0; i < h4s.size(); ++i) {
        gadgets.push_back({[&h4s, i](const Vector& v) { return Vector(h4s[i] * v); },
                           [&h0s, i](const Vector& v) { return Vector(h0s[i] * v); },
                           [pinvs, i](const Vector& v) { return Vector((*pinvs)[i] * v); }});
    }
    auto pair_pinv = [&](int i, int j) -> LinOp {
        Matrix inv = restricted_inverse(h0s[i] + h0s[j]);
        return [inv](const Vector& v) { return Vector(inv * v); };
    };
    return cross_gadget_interference(gadgets, pair_pinv, ground_basis);
}

}  // namespace gadgetforge::sw
