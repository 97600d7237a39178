// stoquastic.hpp — Per-qudit unitaries turning the 1-local terms of a
// witness-form Hamiltonian stoquastic (all off-diagonal entries real ≤ 0),
// and the literal entry check on rotated assembled Hamiltonians.

#pragma once

#include "gadgetforge/core/many_body.hpp"

#include <Eigen/Eigenvalues>
#include <vector>

namespace gadgetforge::classify {

// Unitary mapping |psi⟩ → |0⟩ (Householder reflection plus a phase fix).
inline Matrix align_to_zero(const Vector& psi) {
    const Index d = psi.size();
    Vector v = psi / psi.norm();
    const cxd a0 = v(0);
    const cxd phase = std::abs(a0) > 1e-14 ? a0 / std::abs(a0) : cxd(1, 0);
    Vector w = v;
    w(0) += phase;  // never vanishes: v = −phase|0⟩ would force phase = −phase
    w.normalize();
    const Matrix refl = Matrix::Identity(d, d) - 2.0 * (w * w.adjoint());  // v → −phase|0⟩
    Matrix fix = Matrix::Identity(d, d);
    fix(0, 0) = -std::conj(phase);
    return fix * refl;
}

// Per-qudit stoquastifying rotation for a 1-local term M, assuming the
// interaction part is already aligned so the witness is |0⟩: first diagonalise
// M on span{|1⟩..|d−1⟩} (fixing |0⟩), then rotate the |0⟩⟨j| phases onto the
// negative real axis.
inline Matrix stoquastify_site(const Matrix& M) {
    const Index d = M.rows();
    Matrix U1 = Matrix::Identity(d, d);
    Eigen::SelfAdjointEigenSolver<Matrix> es(Matrix(M.bottomRightCorner(d - 1, d - 1)));
    U1.bottomRightCorner(d - 1, d - 1) = es.eigenvectors().adjoint();
    const Matrix M1 = U1 * M * U1.adjoint();
    Matrix U2 = Matrix::Identity(d, d);
    for (Index j = 1; j < d; ++j) {
        const cxd a = M1(0, j);
        U2(j, j) = std::abs(a) > 1e-14 ? -a / std::abs(a) : cxd(-1, 0);
    }
    return U2 * U1;
}

struct StoquasticCheck {
    bool ok = false;
    double max_offdiag_real = 0;    // most positive real part over off-diagonals
    double max_offdiag_imag = 0;    // largest |imaginary part|
    Index worst_row = 0, worst_col = 0;
};

inline StoquasticCheck verify_stoquastic(const Matrix& H, double tolerance = 1e-10) {
    StoquasticCheck out;
    out.max_offdiag_real = -std::numeric_limits<double>::infinity();
    for (Index r = 0; r < H.rows(); ++r)
        for (Index c = 0; c < H.cols(); ++c) {
            if (r == c) continue;
            if (H(r, c).real() > out.max_offdiag_real) {
                out.max_offdiag_real = H(r, c).real();
                out.worst_row = r;
                out.worst_col = c;
            }
            out.max_offdiag_imag = std::max(out.max_offdiag_imag, std::abs(H(r, c).imag()));
        }
    if (H.rows() <= 1) out.max_offdiag_real = 0;
    out.ok = out.max_offdiag_real <= tolerance && out.max_offdiag_imag <= tolerance;
    return out;
}

// Witness unitaries for the given per-qudit 1-local terms: U_i = U2 U1 U0 with
// U0 aligning the witness state to |0⟩.
inline std::vector<Matrix> stoquastic_witness(const std::vector<Matrix>& one_local_terms, const Vector& psi) {
    const Matrix U0 = align_to_zero(psi);
    std::vector<Matrix> out;
    out.reserve(one_local_terms.size());
    for (const Matrix& M : one_local_terms) {
        if (M.rows() != psi.size()) throw std::invalid_argument("stoquastic_witness: dimension mismatch");
        const Matrix M0 = U0 * M * U0.adjoint();
        out.push_back(stoquastify_site(M0) * U0);
    }
    return out;
}

}  // namespace gadgetforge::classify
