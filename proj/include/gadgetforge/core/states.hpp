// states.hpp — State-vector utilities: basis kets, product placement on named
// sites, antisymmetric and singlet states.

#pragma once

#include "gadgetforge/core/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace gadgetforge {

inline Vector basis_ket(Index dim, Index i) {
    if (i < 0 || i >= dim) throw std::out_of_range("basis_ket: index out of range");
    Vector v = Vector::Zero(dim);
    v(i) = 1.0;
    return v;
}

// Tensor a list of (state, site list) factors covering all n sites, then
// reorder the slots into natural site order (site 0 most significant).
inline Vector product_state(const std::vector<std::pair<Vector, std::vector<int>>>& factors, int n, int d) {
    std::vector<int> order;
    Vector vec = Vector::Ones(1);
    for (const auto& [state, sites] : factors) {
        if (state.size() != pow_index(d, static_cast<int>(sites.size())))
            throw std::invalid_argument("product_state: factor dimension mismatch");
        Vector next(vec.size() * state.size());
        for (Index i = 0; i < vec.size(); ++i)
            next.segment(i * state.size(), state.size()) = vec(i) * state;
        vec = std::move(next);
        order.insert(order.end(), sites.begin(), sites.end());
    }
    if (static_cast<int>(order.size()) != n) throw std::invalid_argument("product_state: sites must cover 0..n-1");
    std::vector<int> check = order;
    std::sort(check.begin(), check.end());
    for (int s = 0; s < n; ++s)
        if (check[s] != s) throw std::invalid_argument("product_state: sites must cover 0..n-1 exactly once");

    const Index dim = pow_index(d, n);
    Vector out = Vector::Zero(dim);
    std::vector<Index> stride(n);
    for (int s = 0; s < n; ++s) stride[s] = pow_index(d, n - 1 - s);
    for (Index idx = 0; idx < dim; ++idx) {
        Index q = idx, nat = 0;
        for (int slot = n - 1; slot >= 0; --slot) {
            nat += (q % d) * stride[order[slot]];
            q /= d;
        }
        out(nat) = vec(idx);
    }
    return out;
}

// Completely antisymmetric (normalised) state on d qudits of dimension d.
inline Vector antisymmetric_state(int d) {
    if (d < 2) throw std::invalid_argument("antisymmetric_state: d must be >= 2");
    const Index dim = pow_index(d, d);  // throws on overflow
    Vector v = Vector::Zero(dim);
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    // iterate permutations with parity tracking
    std::vector<int> p = perm;
    auto index_of = [&](const std::vector<int>& q) {
        Index idx = 0;
        for (int i = 0; i < d; ++i) idx = idx * d + q[i];
        return idx;
    };
    // Heap's algorithm with explicit parity
    std::vector<int> c(d, 0);
    int sign = 1;
    v(index_of(p)) = sign;
    int i = 0;
    while (i < d) {
        if (c[i] < i) {
            if (i % 2 == 0)
                std::swap(p[0], p[i]);
            else
                std::swap(p[c[i]], p[i]);
            sign = -sign;
            v(index_of(p)) = sign;
            ++c[i];
            i = 0;
        } else {
            c[i] = 0;
            ++i;
        }
    }
    return v / v.norm();
}

// SU(2) singlet on two qudits of dimension d: annihilated by S^a ⊗ I + I ⊗ S^a.
inline Vector singlet_state_su2(int d) {
    if (d < 2) throw std::invalid_argument("singlet_state_su2: d must be >= 2");
    Vector v = Vector::Zero(static_cast<Index>(d) * d);
    for (int i = 0; i < d; ++i) v(static_cast<Index>(i) * d + (d - 1 - i)) = (i % 2 == 0) ? 1.0 : -1.0;
    return v / std::sqrt(static_cast<double>(d));
}

// Maximally entangled pair state (1/√d) Σ_i |ii⟩.
inline Vector max_entangled_state(int d) {
    Vector v = Vector::Zero(static_cast<Index>(d) * d);
    for (int i = 0; i < d; ++i) v(static_cast<Index>(i) * d + i) = 1.0;
    return v / std::sqrt(static_cast<double>(d));
}

}  // namespace gadgetforge
