// interactions.hpp — Constructors for the interaction families used throughout:
// SU(d) and SU(2) Heisenberg, the conjugated SU(d) variant, bilinear-biquadratic,
// state projectors and the symmetric-subspace projector.

#pragma once

#include "gadgetforge/core/basis.hpp"
#include "gadgetforge/core/local_operator.hpp"
#include "gadgetforge/core/states.hpp"
#include "gadgetforge/core/types.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <string>
#include <vector>

namespace gadgetforge::catalog {

struct Interaction {
    std::string name;
    int local_dim = 0;
    int arity = 0;
    LocalOperator op;
    std::vector<double> params;
    bool swap_symmetric = false;
};

inline Matrix swap_matrix(int d) {
    const Index D = static_cast<Index>(d) * d;
    Matrix S = Matrix::Zero(D, D);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) S(static_cast<Index>(i) * d + j, static_cast<Index>(j) * d + i) = 1.0;
    return S;
}

// h = Σ_a T^a ⊗ T^a over the Gell-Mann basis; equals (SWAP − I/d)/2.
inline Interaction heisenberg_sud(int d) {
    const HermitianBasis basis = gell_mann_basis(d);
    const Index D = static_cast<Index>(d) * d;
    Matrix h = Matrix::Zero(D, D);
    for (const Matrix& T : basis.elements) h += Eigen::kroneckerProduct(T, T).eval();
    return {"heisenberg_sud", d, 2, LocalOperator(d, 2, std::move(h)), {}, true};
}

// h̃ = Σ_a T^a ⊗ (−T^a)^*; closed form (1/2d) I − (d/2) |φ⟩⟨φ|.
inline Interaction alt_heisenberg_sud(int d) {
    const HermitianBasis basis = gell_mann_basis(d);
    const Index D = static_cast<Index>(d) * d;
    Matrix h = Matrix::Zero(D, D);
    for (const Matrix& T : basis.elements) h += Eigen::kroneckerProduct(T, Matrix(-T.conjugate())).eval();
    return {"alt_heisenberg_sud", d, 2, LocalOperator(d, 2, std::move(h)), {}, false};
}

// Spin-s exchange h = Σ_a S^a ⊗ S^a, s = (d−1)/2.
inline Interaction heisenberg_su2(int d) {
    const auto S = spin_operators(d);
    const Index D = static_cast<Index>(d) * d;
    Matrix h = Matrix::Zero(D, D);
    for (const Matrix& Sa : S) h += Eigen::kroneckerProduct(Sa, Sa).eval();
    return {"heisenberg_su2", d, 2, LocalOperator(d, 2, std::move(h)), {}, true};
}

// h^(θ) = cos θ · h + sin θ · h² on two qutrits (spin 1).
inline Interaction bilinear_biquadratic(double theta) {
    theta = std::fmod(theta, 2 * M_PI);
    if (theta < 0) theta += 2 * M_PI;
    const Matrix h = heisenberg_su2(3).op.matrix();
    Matrix ht = std::cos(theta) * h + std::sin(theta) * (h * h).eval();
    return {"bilinear_biquadratic", 3, 2, LocalOperator(3, 2, std::move(ht)), {theta}, true};
}

// Rank-1 projector |ψ⟩⟨ψ| on (C^d)^{⊗k}.
inline Interaction state_projector(const Vector& psi, int d, int arity = 2) {
    if (psi.size() != pow_index(d, arity)) throw std::invalid_argument("state_projector: dimension mismatch");
    if (std::abs(psi.norm() - 1.0) > 1e-9) throw std::invalid_argument("state_projector: state must be normalised");
    Matrix P = psi * psi.adjoint();
    const Matrix S = arity == 2 ? swap_matrix(d) : Matrix();
    const bool sym = arity == 2 && max_abs(S * P * S - P) < 1e-12;
    return {"state_projector", d, arity, LocalOperator(d, arity, std::move(P)), {}, sym};
}

// Projector onto the symmetric two-qudit subspace, (SWAP + I)/2; rank d(d+1)/2.
inline Interaction sym_projector(int d) {
    if (d < 2) throw std::invalid_argument("sym_projector: d must be >= 2");
    const Index D = static_cast<Index>(d) * d;
    Matrix P = (swap_matrix(d) + Matrix::Identity(D, D)) / 2.0;
    return {"sym_projector", d, 2, LocalOperator(d, 2, std::move(P)), {}, true};
}

inline Interaction aklt_interaction() {
    const Matrix h = heisenberg_su2(3).op.matrix();
    Matrix ha = 3.0 * h + (h * h).eval();
    return {"aklt", 3, 2, LocalOperator(3, 2, std::move(ha)), {}, true};
}

}  // namespace gadgetforge::catalog
