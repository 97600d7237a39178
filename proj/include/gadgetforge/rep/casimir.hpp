// casimir.hpp — Casimir operators on site sets and the su(2) tensor-square
// decomposition used by the spin gadgets.

#pragma once

#include "gadgetforge/core/basis.hpp"
#include "gadgetforge/core/many_body.hpp"
#include "gadgetforge/core/states.hpp"

#include <vector>

namespace gadgetforge::rep {

// T^a_S = Σ_{i∈S} T^a_i as a full-space operator.
inline ManyBodyOperator set_generator(const Matrix& T, const std::vector<int>& sites, int n, int d,
                                      Index dense_limit = kDefaultDenseLimit) {
    ManyBodyOperator out = ManyBodyOperator::zero(n, d, dense_limit);
    LocalOperator local(d, 1, T, false);
    for (int s : sites) out = out + embed(local, {s}, n, dense_limit);
    return out;
}

// C(S) = Σ_a T^a_S T^a_S; equals Σ_{i≠j∈S} h_ij + |S|(d²−1)/(2d) · I.
inline ManyBodyOperator casimir_operator(const std::vector<int>& sites, int n, int d, const HermitianBasis& basis,
                                         Index dense_limit = kDefaultDenseLimit) {
    if (sites.empty()) throw std::invalid_argument("casimir_operator: site set must be non-empty");
    for (int s : sites)
        if (s < 0 || s >= n) throw std::invalid_argument("casimir_operator: site out of range");
    ManyBodyOperator out = ManyBodyOperator::zero(n, d, dense_limit);
    for (const Matrix& T : basis.elements) {
        const ManyBodyOperator TS = set_generator(T, sites, n, d, dense_limit);
        out = out + TS * TS;
    }
    return out;
}

// Dimensions [1, 3, ..., 2d−1] of the irreps in the two-site tensor square of
// the d-dimensional su(2) representation.
inline std::vector<int> su2_tensor_decomposition(int d) {
    if (d < 2) throw std::invalid_argument("su2_tensor_decomposition: d must be >= 2");
    std::vector<int> dims;
    for (int k = 1; k <= 2 * d - 1; k += 2) dims.push_back(k);
    return dims;
}

}  // namespace gadgetforge::rep
