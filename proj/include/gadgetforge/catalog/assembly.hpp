// assembly.hpp — Weighted interaction graphs → many-body Hamiltonians, plus the
// Quantum Max-d-Cut builder and its classical brute-force counterpart.

#pragma once

#include "gadgetforge/catalog/interactions.hpp"
#include "gadgetforge/core/many_body.hpp"

#include <limits>
#include <tuple>
#include <vector>

namespace gadgetforge::catalog {

struct WeightedTerm {
    Interaction interaction;
    std::vector<int> sites;
    double weight = 1.0;
};

struct WeightedTermList {
    int n_sites = 0;
    int local_dim = 0;
    std::vector<WeightedTerm> terms;
};

inline ManyBodyOperator assemble(const WeightedTermList& list, Index dense_limit = kDefaultDenseLimit) {
    ManyBodyOperator H = ManyBodyOperator::zero(list.n_sites, list.local_dim, dense_limit);
    for (const WeightedTerm& t : list.terms) {
        if (!std::isfinite(t.weight)) throw std::invalid_argument("assemble: weight must be finite");
        if (t.interaction.local_dim != list.local_dim)
            throw std::invalid_argument("assemble: interaction dimension mismatch");
        H = H + embed(t.interaction.op, t.sites, list.n_sites, dense_limit) * cxd(t.weight);
    }
    return H;
}

// --------------------------- Quantum Max-d-Cut -------------------------------

struct Graph {
    int n_vertices = 0;
    std::vector<std::tuple<int, int, double>> edges;  // (i, j, weight >= 0)
};

inline ManyBodyOperator max_d_cut_hamiltonian(const Graph& g, int d, Index dense_limit = kDefaultDenseLimit) {
    const Interaction p = sym_projector(d);
    WeightedTermList list{g.n_vertices, d, {}};
    for (const auto& [i, j, w] : g.edges) {
        if (w < 0) throw std::invalid_argument("max_d_cut_hamiltonian: negative edge weight");
        list.terms.push_back({p, {i, j}, w});
    }
    return assemble(list, dense_limit);
}

// Minimum total weight of uncut edges over all d-colourings (exhaustive).
inline double classical_min_uncut(const Graph& g, int d) {
    const Index total = pow_index(d, g.n_vertices);
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> colour(g.n_vertices);
    for (Index c = 0; c < total; ++c) {
        Index q = c;
        for (int v = g.n_vertices - 1; v >= 0; --v) {
            colour[v] = static_cast<int>(q % d);
            q /= d;
        }
        double uncut = 0;
        for (const auto& [i, j, w] : g.edges)
            if (colour[i] == colour[j]) uncut += w;
        best = std::min(best, uncut);
    }
    return best;
}

}  // namespace gadgetforge::catalog
