// alt_sud.hpp — Reduction from the conjugated (bipartite) invariant interaction
// to the plain one: a mediator pair pinned to the maximally entangled state
// turns h̃ couplings into an arbitrarily weighted Σ_a T^a ⊗ T^a.

#pragma once

#include "gadgetforge/catalog/interactions.hpp"
#include "gadgetforge/gadgets/report.hpp"

namespace gadgetforge::gadgets {

inline GadgetReport alt_sud_reduction_gadget(int d, double mu, double tol = tol::closed_form) {
    const int n = 4;  // system 0,1 (A side); mediators 2 (A side), 3 (B side)
    const Index dim = pow_index(d, n);
    const LocalOperator ht = catalog::alt_heisenberg_sud(d).op;

    GadgetReport rep;
    rep.gadget = "alt-sud";
    rep.d = d;
    rep.params = {{"mu", mu}};
    rep.tolerance = tol;

    // heavy term (2/d)(h̃_34 + (d²−1)/(2d) I) equals I − Π for Π = |φ⟩⟨φ|_34
    const ManyBodyOperator H0 =
        (embed(ht, {2, 3}, n) + ManyBodyOperator::identity(n, d) * cxd((d * d - 1) / (2.0 * d))) *
        cxd(2.0 / d);
    const Vector phi = max_entangled_state(d);
    Matrix enc(dim, dim / (d * d));
    for (Index i = 0; i < dim / (d * d); ++i)
        enc.col(i) = product_state({{basis_ket(dim / (d * d), i), {0, 1}}, {phi, {2, 3}}}, n, d);
    rep.checks.add("heavy term equals I - Pi on the mediator pair",
                   (H0.apply_columns(enc)).norm(), 1e-12);

    const ManyBodyOperator H2 = embed(ht, {0, 3}, n) + embed(ht, {1, 3}, n) * cxd(mu);
    const Matrix h2enc = H2.apply_columns(enc);
    rep.checks.add("Pi H2 Pi = 0", (enc.adjoint() * h2enc).norm(), 1e-10);

    // restricted inverse of I − Π is I − Π itself
    const Matrix pi_full = enc * enc.adjoint();
    const Matrix second = -(h2enc.adjoint() * (h2enc - pi_full * h2enc));

    const HermitianBasis basis = gell_mann_basis(d);
    Matrix tt = Matrix::Zero(d * d, d * d);
    for (const Matrix& T : basis.elements) tt += Eigen::kroneckerProduct(T, T).eval();
    const Matrix expect = -(1 + mu * mu) * (d * d - 1) / (4.0 * d * d) * Matrix::Identity(d * d, d * d) -
                          (mu / d) * tt;
    rep.checks.add("second-order operator matches the closed form", sw::spectral_norm(second - expect), tol);

    rep.effective = second;
    rep.expected = expect;
    rep.identity_offset = -(1 + mu * mu) * (d * d - 1) / (4.0 * d * d);
    return rep;
}

}  // namespace gadgetforge::gadgets
