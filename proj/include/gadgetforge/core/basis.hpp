// basis.hpp — Traceless Hermitian generator bases (generalised Gell-Mann),
// structure constants, spin representations and the Levi-Civita symbol.

#pragma once

#include "gadgetforge/core/types.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace gadgetforge {

// Basis {T^a} of traceless Hermitian d×d matrices with tr(T^a T^b) = δ_ab/2,
// plus the fully antisymmetric structure constants of [T^a,T^b] = Σ_c i f_abc T^c.
struct HermitianBasis {
    int local_dim = 0;
    std::vector<Matrix> elements;
    std::vector<double> structure_constants;  // flat m×m×m, m = d²−1

    int size() const { return static_cast<int>(elements.size()); }
    double f(int a, int b, int c) const {
        const int m = size();
        return structure_constants[(static_cast<std::size_t>(a) * m + b) * m + c];
    }
};

// Ordering: symmetric pairs (j<k, lexicographic), then antisymmetric pairs
// (same order), then the d−1 diagonal generators. Fixed so that structure
// constant tables are reproducible.
inline HermitianBasis gell_mann_basis(int d) {
    if (d < 2) throw std::invalid_argument("gell_mann_basis: d must be >= 2");
    HermitianBasis basis;
    basis.local_dim = d;
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            Matrix M = Matrix::Zero(d, d);
            M(j, k) = 0.5;
            M(k, j) = 0.5;
            basis.elements.push_back(std::move(M));
        }
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            Matrix M = Matrix::Zero(d, d);
            M(j, k) = cxd(0, -0.5);
            M(k, j) = cxd(0, 0.5);
            basis.elements.push_back(std::move(M));
        }
    for (int l = 1; l < d; ++l) {
        Matrix M = Matrix::Zero(d, d);
        for (int m = 0; m < l; ++m) M(m, m) = 1.0;
        M(l, l) = -static_cast<double>(l);
        M *= std::sqrt(2.0 / (l * (l + 1.0))) / 2.0;
        basis.elements.push_back(std::move(M));
    }

    const int m = basis.size();
    basis.structure_constants.assign(static_cast<std::size_t>(m) * m * m, 0.0);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            const Matrix comm = basis.elements[a] * basis.elements[b] - basis.elements[b] * basis.elements[a];
            for (int c = 0; c < m; ++c) {
                // [T^a,T^b] = Σ_c i f_abc T^c  and  tr(T^c T^e) = δ_ce/2
                const cxd val = cxd(0, -2.0) * (comm * basis.elements[c]).trace();
                if (std::abs(val.imag()) > 1e-12)
                    throw std::runtime_error("gell_mann_basis: structure constant not real");
                const double fab = val.real();
                const auto idx = [m](int x, int y, int z) {
                    return (static_cast<std::size_t>(x) * m + y) * m + z;
                };
                basis.structure_constants[idx(a, b, c)] = fab;
                basis.structure_constants[idx(b, a, c)] = -fab;
            }
        }
    return basis;
}

inline Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}
inline Matrix pauli_y() {
    Matrix m(2, 2);
    m << cxd(0, 0), cxd(0, -1), cxd(0, 1), cxd(0, 0);
    return m;
}
inline Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

inline int levi_civita(int a, int b, int c) {
    if (a == b || b == c || a == c) return 0;
    if ((a == 0 && b == 1 && c == 2) || (a == 1 && b == 2 && c == 0) || (a == 2 && b == 0 && c == 1)) return 1;
    return -1;
}

// Spin-s matrices for s = (d−1)/2 in the basis |0⟩ = |m=s⟩, …, |d−1⟩ = |m=−s⟩,
// obeying [S^a,S^b] = Σ_c i ε_abc S^c and Σ_a (S^a)² = ((d²−1)/4) I.
inline std::array<Matrix, 3> spin_operators(int d) {
    if (d < 2) throw std::invalid_argument("spin_operators: d must be >= 2");
    const double s = (d - 1) / 2.0;
    Matrix Sz = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) Sz(i, i) = s - i;
    Matrix Sp = Matrix::Zero(d, d);
    for (int i = 1; i < d; ++i) {
        const double mval = s - i;  // S+ |m⟩ = sqrt(s(s+1) − m(m+1)) |m+1⟩
        Sp(i - 1, i) = std::sqrt(s * (s + 1) - mval * (mval + 1));
    }
    const Matrix Sm = Sp.adjoint();
    Matrix Sx = (Sp + Sm) / 2.0;
    Matrix Sy = (Sp - Sm) / cxd(0, 2.0);
    return {std::move(Sx), std::move(Sy), std::move(Sz)};
}

// Adjoint representation built from structure constants: (R^a)_{cb} = i f_abc.
inline std::vector<Matrix> adjoint_representation(const HermitianBasis& basis) {
    const int m = basis.size();
    std::vector<Matrix> reps(m, Matrix::Zero(m, m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c) reps[a](c, b) = cxd(0, basis.f(a, b, c));
    return reps;
}

}  // namespace gadgetforge
