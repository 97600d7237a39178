// sud_logical.hpp — Logical qubit encoded in the two-dimensional ground space
// of the Casimir Hamiltonian on 2d qudits, with the ground-block action table
// of T^a_i T^a_j verified row by row.

#pragma once

#include "gadgetforge/gadgets/report.hpp"
#include "gadgetforge/rep/casimir.hpp"
#include "gadgetforge/sw/sweep.hpp"

#include <map>
#include <string>
#include <vector>

namespace gadgetforge::gadgets {

struct SudLogicalGadget {
    int d = 0;
    int n = 0;
    HermitianBasis basis;
    ManyBodyOperator h0;
    sw::BlockSplit split;
    Vector phi1, phi2;
    Matrix logical;  // dim × 2, columns |0_L⟩, |1_L⟩
    std::map<std::string, std::vector<int>> labels;  // "1","2","A","B" → site sets
    GadgetReport report;

    // Σ_{k∈S} T^a_k as a full-space operator.
    ManyBodyOperator set_op(int a, const std::string& label) const {
        return rep::set_generator(basis.elements[a], labels.at(label), n, d);
    }
};

// Ground-block action of T^a_i T^a_j for a single a: coefficients (x, z, c) in
// x X_L + z Z_L + c I_L, identical for every a.
inline std::map<std::pair<std::string, std::string>, std::array<double, 3>> sud_logical_table(int d) {
    const double q = d * d - 1.0;
    const double sq = std::sqrt(q);
    std::map<std::pair<std::string, std::string>, std::array<double, 3>> t;
    const std::array<double, 3> diag = {0.0, 0.0, 1.0 / (2 * d)};
    for (const char* l : {"1", "2", "A", "B"}) t[{l, l}] = diag;
    const std::array<double, 3> minus = {-1.0 / (4 * sq), -1.0 / (4 * q), -(d * d - 2.0) / (4 * d * q)};
    const std::array<double, 3> plus = {+1.0 / (4 * sq), -1.0 / (4 * q), -(d * d - 2.0) / (4 * d * q)};
    t[{"1", "A"}] = minus;
    t[{"2", "B"}] = minus;
    t[{"1", "B"}] = plus;
    t[{"2", "A"}] = plus;
    const std::array<double, 3> zrow = {0.0, 1.0 / (2 * q), -1.0 / (2 * d * q)};
    t[{"1", "2"}] = zrow;
    t[{"A", "B"}] = zrow;
    return t;
}

inline SudLogicalGadget sud_logical_qubit_gadget(int d, double tol = tol::closed_form,
                                                 Index max_dim = kDefaultDenseLimit) {
    if (d < 2) throw std::invalid_argument("sud_logical_qubit_gadget: d must be >= 2");
    const int n = 2 * d;
    if (pow_index(d, n) > max_dim)
        throw std::invalid_argument("sud_logical_qubit_gadget: dimension overflow (d^2d exceeds the dense limit)");

    SudLogicalGadget g{d,
                       n,
                       gell_mann_basis(d),
                       ManyBodyOperator::zero(n, d),
                       {},
                       {},
                       {},
                       {},
                       {},
                       {}};
    std::vector<int> E(n), A(d - 1), B(d - 1);
    for (int i = 0; i < n; ++i) E[i] = i;
    for (int i = 0; i < d - 1; ++i) {
        A[i] = 2 + i;
        B[i] = d + 1 + i;
    }
    g.labels = {{"1", {0}}, {"2", {1}}, {"A", A}, {"B", B}};

    // heavy term: C(E) + C(A) + C(B) − (d²−1)/d, built from the pairwise form
    const LocalOperator h = catalog::heisenberg_sud(d).op;
    auto casimir_pairwise = [&](const std::vector<int>& S) {
        ManyBodyOperator C = ManyBodyOperator::identity(n, d) * cxd(S.size() * (d * d - 1) / (2.0 * d));
        for (std::size_t i = 0; i < S.size(); ++i)
            for (std::size_t j = i + 1; j < S.size(); ++j) C = C + embed(h, {S[i], S[j]}, n) * cxd(2.0);
        return C;
    };
    g.h0 = casimir_pairwise(E) + casimir_pairwise(A) + casimir_pairwise(B) -
           ManyBodyOperator::identity(n, d) * cxd((d * d - 1) / static_cast<double>(d));
    g.split = sw::block_split(g.h0, 1e-8);

    const Vector Psi = antisymmetric_state(d);
    std::vector<int> s1A = {0}, s2B = {1}, s1B = {0}, s2A = {1};
    s1A.insert(s1A.end(), A.begin(), A.end());
    s2B.insert(s2B.end(), B.begin(), B.end());
    s1B.insert(s1B.end(), B.begin(), B.end());
    s2A.insert(s2A.end(), A.begin(), A.end());
    g.phi1 = product_state({{Psi, s1A}, {Psi, s2B}}, n, d);
    g.phi2 = product_state({{Psi, s1B}, {Psi, s2A}}, n, d);

    g.logical.resize(g.h0.dim(), 2);
    g.logical.col(0) = std::sqrt(d / (2.0 * (d + 1))) * (g.phi1 + g.phi2);
    g.logical.col(1) = std::sqrt(d / (2.0 * (d - 1))) * (g.phi1 - g.phi2);

    GadgetReport& rep = g.report;
    rep.gadget = "sud-logical";
    rep.d = d;
    rep.tolerance = tol;
    rep.checks.add("ground space dimension = 2", std::abs(g.split.ground_dim - 2), 0.5);
    rep.checks.add("phi1, phi2 annihilated by the heavy term",
                   std::max(g.h0.apply(g.phi1).norm(), g.h0.apply(g.phi2).norm()), 1e-8);
    rep.checks.add("<phi1|phi2> = 1/d", std::abs(g.phi1.dot(g.phi2) - 1.0 / d), 1e-10);
    rep.checks.add("logical basis orthonormal",
                   (g.logical.adjoint() * g.logical - Matrix::Identity(2, 2)).norm(), 1e-10);

    // every table row, for every generator index a, plus the a-summed variant;
    // blocks are Gram matrices of generator-applied logical columns, never
    // full operator products
    const auto table = sud_logical_table(d);
    const Matrix X = pauli_x(), Z = pauli_z(), I2 = Matrix::Identity(2, 2);
    std::map<std::string, std::vector<Matrix>> applied;  // label → per-a T^a_label · logical
    for (const auto& [label, sites] : g.labels) {
        std::vector<Matrix> cols;
        for (int a = 0; a < g.basis.size(); ++a) {
            Matrix c = Matrix::Zero(g.logical.rows(), 2);
            for (int s : sites)
                for (int col = 0; col < 2; ++col)
                    c.col(col) += apply_embedded(g.basis.elements[a], {s}, n, d, g.logical.col(col));
            cols.push_back(std::move(c));
        }
        applied.emplace(label, std::move(cols));
    }
    for (const auto& [pair, coef] : table) {
        const Matrix expect = coef[0] * X + coef[1] * Z + coef[2] * I2;
        double worst = 0;
        Matrix summed = Matrix::Zero(2, 2);
        for (int a = 0; a < g.basis.size(); ++a) {
            const Matrix block = applied.at(pair.first)[a].adjoint() * applied.at(pair.second)[a];
            worst = std::max(worst, max_abs(block - expect));
            summed += block;
        }
        rep.checks.add("table row (" + pair.first + "," + pair.second + ") per generator", worst, tol);
        rep.checks.add("table row (" + pair.first + "," + pair.second + ") summed over a",
                       max_abs(summed - (d * d - 1.0) * expect), tol * g.basis.size());
    }
    return g;
}

// First-order instance: H1 = α h_{1A} + β h_{12} simulates the matching
// combination of logical X and Z read off the table.
inline sw::GadgetInstance sud_logical_first_order_instance(const SudLogicalGadget& g, double alpha,
                                                           double beta) {
    ManyBodyOperator h1 = ManyBodyOperator::zero(g.n, g.d);
    for (int a = 0; a < g.basis.size(); ++a) {
        h1 = h1 + g.set_op(a, "1") * g.set_op(a, "A") * cxd(alpha);
        h1 = h1 + g.set_op(a, "1") * g.set_op(a, "2") * cxd(beta);
    }
    const ManyBodyOperator zero = ManyBodyOperator::zero(g.n, g.d);
    sw::GadgetInstance inst(1, g.h0, h1, zero, zero, zero, sw::block_split(g.h0, 1e-8));
    inst.encoding = g.logical;
    const auto table = sud_logical_table(g.d);
    const auto& ta = table.at({"1", "A"});
    const auto& tz = table.at({"1", "2"});
    const double q = g.d * g.d - 1.0;
    const Matrix target =
        q * (alpha * (ta[0] * pauli_x() + ta[1] * pauli_z() + ta[2] * Matrix::Identity(2, 2)) +
             beta * (tz[0] * pauli_x() + tz[1] * pauli_z() + tz[2] * Matrix::Identity(2, 2)));
    inst.target_ground = sw::target_on_ground(inst.split, g.logical, target);
    inst.lambda_bound = operator_norm(h1);
    return inst;
}

}  // namespace gadgetforge::gadgets
