// aklt.hpp — Second-order mediator gadget: three AKLT-coupled mediator qutrits
// pin an antisymmetric state and induce the SU(3)-invariant h + h² coupling on
// the two system qutrits.

#pragma once

#include "gadgetforge/catalog/interactions.hpp"
#include "gadgetforge/gadgets/report.hpp"
#include "gadgetforge/sw/sweep.hpp"

namespace gadgetforge::gadgets {

struct AkltGadget {
    sw::GadgetInstance instance;
    GadgetReport report;
};

// λ1 = 22, λ2 = √27 reproduce 20(h + h²) − (272/3) I on the system pair.
// Smaller couplings scale the target by s² with (λ1, λ2) = (22 s², √27 s).
inline AkltGadget aklt_su3_gadget(double tol = tol::closed_form, double coupling_scale = 1.0) {
    const int n = 5, d = 3;  // system 0,1; mediators 2,3,4
    const double s2 = coupling_scale * coupling_scale;
    const double lam1 = 22.0 * s2;
    const double lam2 = std::sqrt(27.0) * coupling_scale;

    const LocalOperator hA = catalog::aklt_interaction().op;
    const Matrix h_pair = catalog::heisenberg_su2(3).op.matrix();
    const ManyBodyOperator id = ManyBodyOperator::identity(n, d);

    ManyBodyOperator H0 = embed(hA, {2, 3}, n) + embed(hA, {3, 4}, n) + embed(hA, {2, 4}, n) + id * cxd(6.0);
    ManyBodyOperator H1 = embed(hA, {0, 1}, n) * cxd(lam1);
    ManyBodyOperator H2 =
        (embed(hA, {0, 2}, n) + embed(hA, {1, 2}, n) - id * cxd(8.0 / 3.0)) * cxd(lam2);

    sw::BlockSplit split = sw::block_split(H0, 1e-9);
    const ManyBodyOperator zero = ManyBodyOperator::zero(n, d);
    sw::GadgetInstance g(2, H0, H1, H2, zero, zero, std::move(split));
    g.site_map = {0, 1};

    // encoding: system basis ⊗ antisymmetric mediator state
    const Vector psi = antisymmetric_state(3);
    Matrix enc(g.h0.dim(), 9);
    for (int i = 0; i < 9; ++i)
        enc.col(i) = product_state({{basis_ket(9, i), {0, 1}}, {psi, {2, 3, 4}}}, n, d);
    g.encoding = enc;

    GadgetReport rep;
    rep.gadget = "aklt-su3";
    rep.d = d;
    rep.params = {{"lambda1", lam1}, {"lambda2", lam2}};
    rep.tolerance = tol;

    rep.checks.add("ground space dimension = 9", std::abs(g.split.ground_dim - 9), 0.5);
    rep.checks.add("mediator ground state = antisymmetric state",
                   (g.h0.apply_columns(enc) - Matrix::Zero(g.h0.dim(), 9)).norm(), 1e-9);

    const Matrix H2g = H2.to_dense_matrix() * enc;  // H2 on the ground basis
    rep.checks.add("Pi H2 Pi = 0", (enc.adjoint() * H2g).norm(), 1e-10);

    const Matrix R = g.split.pinv();
    const Matrix second = -(H2g.adjoint() * R * H2g);  // −Π H2 R H2 Π on the logical basis
    const Matrix h_log = h_pair;                       // logical pair operator in the encoding basis
    const Matrix h2_log = h_pair * h_pair;
    const Matrix second_expect =
        -(2.0 * lam2 * lam2 / 27.0) * (23.0 * h_log + h2_log + (136.0 / 3.0) * Matrix::Identity(9, 9));
    rep.checks.add("second-order closed form", sw::spectral_norm(second - second_expect), tol);

    const Matrix first = enc.adjoint() * H1.to_dense_matrix() * enc;
    const Matrix simulated = first + second;
    const Matrix target = s2 * (20.0 * (h_log + h2_log) - (272.0 / 3.0) * Matrix::Identity(9, 9));
    rep.checks.add("simulated operator = 20(h+h^2) - 272/3 I (scaled)",
                   sw::spectral_norm(simulated - target), tol);

    const ConditionReport cond = check_gadget_conditions(g, 1e-8);
    for (const ConditionItem& item : cond.items) rep.checks.add("condition: " + item.name, item.residual, item.tolerance);

    rep.effective = simulated;
    rep.expected = target;
    g.target_ground = target_on_ground(g.split, enc, target);
    g.lambda_bound = std::max(operator_norm(H1), operator_norm(H2));
    return {std::move(g), std::move(rep)};
}

}  // namespace gadgetforge::gadgets
