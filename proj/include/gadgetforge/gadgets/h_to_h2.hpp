// h_to_h2.hpp — Fourth-order mediator-pair gadget producing α h + β h² from
// exchange couplings alone, plus the cross-gadget interference constant for
// two such gadgets sharing a system qudit.
//
// The Δ^{1/4} term carries +(μ₂³ λ/3)(h₁₂ + λI): the ground block of (H₄)³ is
// −(μ₂³ λ/3)(h₁₂ + λI) Π by the ε-contraction identity, and the validity
// condition fixes H₃'s ground block to the negative of that.

#pragma once

#include "gadgetforge/catalog/interactions.hpp"
#include "gadgetforge/gadgets/report.hpp"
#include "gadgetforge/sw/interference.hpp"
#include "gadgetforge/sw/sweep.hpp"

namespace gadgetforge::gadgets {

struct HToH2Gadget {
    sw::GadgetInstance instance;
    GadgetReport report;
};

struct HToH2Couplings {
    double mu1 = 0;
    double mu2 = 0;
    double identity_coefficient = 0;  // μ₂⁴ λ² (44λ² + 18λ − 27)/135
};

inline HToH2Couplings h_to_h2_couplings(int d, double alpha, double beta) {
    if (beta < 0) throw std::invalid_argument("h_to_h2_gadget: beta must be >= 0");
    const double lam = (d * d - 1) / 4.0;
    HToH2Couplings c;
    c.mu2 = std::pow(135.0 * beta / (4.0 * (11 * lam * lam + 3 * lam)), 0.25);
    const double mu2_4 = c.mu2 * c.mu2 * c.mu2 * c.mu2;
    c.mu1 = alpha - mu2_4 * (lam / 135.0) * (88 * lam * lam + 30 * lam - 27);
    c.identity_coefficient = mu2_4 * lam * lam * (44 * lam * lam + 18 * lam - 27) / 135.0;
    return c;
}

inline HToH2Gadget h_to_h2_gadget(int d, double alpha, double beta, double tol = tol::closed_form) {
    const int n = 4;  // system 0,1; mediators 2 (E), 3 (F)
    const double lam = (d * d - 1) / 4.0;
    const HToH2Couplings c = h_to_h2_couplings(d, alpha, beta);
    const double mu2_4 = c.mu2 * c.mu2 * c.mu2 * c.mu2;

    const LocalOperator h = catalog::heisenberg_su2(d).op;
    const ManyBodyOperator id = ManyBodyOperator::identity(n, d);
    const ManyBodyOperator h12 = embed(h, {0, 1}, n);
    const ManyBodyOperator H0 = embed(h, {2, 3}, n) + id * cxd(lam);
    const ManyBodyOperator H4 = (embed(h, {0, 2}, n) + embed(h, {1, 2}, n)) * cxd(c.mu2);
    const ManyBodyOperator H2 = (h12 + id * cxd(lam)) * cxd(2.0 * c.mu2 * c.mu2 * lam / 3.0);
    const ManyBodyOperator H3 = (h12 + id * cxd(lam)) * cxd(c.mu2 * c.mu2 * c.mu2 * lam / 3.0);
    const ManyBodyOperator H1 = h12 * cxd(c.mu1);

    sw::BlockSplit split = sw::block_split(H0, 1e-9);
    sw::GadgetInstance g(4, H0, H1, H2, H3, H4, std::move(split));
    g.site_map = {0, 1};

    const Vector psi = singlet_state_su2(d);
    const Index d2 = static_cast<Index>(d) * d;
    Matrix enc(g.h0.dim(), d2);
    for (Index i = 0; i < d2; ++i)
        enc.col(i) = product_state({{basis_ket(d2, i), {0, 1}}, {psi, {2, 3}}}, n, d);
    g.encoding = enc;

    GadgetReport rep;
    rep.gadget = "h-to-h2";
    rep.d = d;
    rep.params = {{"alpha", alpha}, {"beta", beta}};
    rep.extra = {{"mu1", c.mu1}, {"mu2", c.mu2}};
    rep.tolerance = tol;

    const sw::ConditionReport cond = check_gadget_conditions(g, 1e-10);
    for (const sw::ConditionItem& item : cond.items)
        rep.checks.add("condition: " + item.name, item.residual, item.tolerance);

    // A − B against the displayed λ-polynomial (identity coefficient included)
    const Matrix R = g.split.pinv();
    const Matrix h4m = H4.to_dense_matrix();
    const Matrix pi = enc * enc.adjoint();
    const Matrix A_ = enc.adjoint() * (h4m * R * H2.to_dense_matrix() * R * h4m) * enc;
    const Matrix B_ = enc.adjoint() * (h4m * R * h4m * R * h4m * R * h4m) * enc;
    const Matrix hm = h.matrix();
    const Matrix poly = mu2_4 * lam / 135.0 *
                        (4 * (11 * lam + 3) * (hm * hm).eval() + (88 * lam * lam + 30 * lam - 27) * hm +
                         (44 * lam * lam + 18 * lam - 27) * lam * Matrix::Identity(d2, d2));
    rep.checks.add("A - B matches the lambda polynomial", sw::spectral_norm((A_ - B_) - poly), tol);

    // simulated operator = α h + β h² + c I on the ground block
    const Matrix simulated = enc.adjoint() * H1.to_dense_matrix() * enc + A_ - B_;
    const Matrix expect = alpha * hm + beta * (hm * hm).eval();
    rep.checks.add("first-plus-fourth-order block = alpha h + beta h^2 (mod identity)",
                   sw::spectral_norm(sw::traceless_part(simulated) - sw::traceless_part(expect)), tol);
    rep.identity_offset = std::real((simulated - expect).trace()) / d2;
    rep.extra["identity_coefficient_predicted"] = c.identity_coefficient;

    rep.effective = simulated;
    rep.expected = expect;
    g.target_ground = sw::target_on_ground(g.split, enc, expect);
    g.lambda_bound = std::max({operator_norm(H1), operator_norm(H2), operator_norm(H3), operator_norm(H4)});
    (void)pi;
    return {std::move(g), std::move(rep)};
}

// Cross-gadget interference for two unit-coupling gadgets sharing system qudit
// 0: gadget one couples (0,1) through mediators (3,4), gadget two couples
// (0,2) through mediators (5,6). Normalised by (μ₂ μ₂')², the interference is
// (λ³/9) I on the joint ground space.
inline GadgetReport h_to_h2_interference(int d, double tol = tol::closed_form) {
    const int n = 7;
    const double lam = (d * d - 1) / 4.0;
    const Matrix hm = catalog::heisenberg_su2(d).op.matrix();
    const Index d2 = static_cast<Index>(d) * d;

    const Matrix pair_h0 = hm + lam * Matrix::Identity(d2, d2);
    const Matrix pair_pinv_m = sw::restricted_inverse(pair_h0);
    const Matrix quad_h0 = Eigen::kroneckerProduct(pair_h0, Matrix::Identity(d2, d2)).eval() +
                           Eigen::kroneckerProduct(Matrix::Identity(d2, d2), pair_h0).eval();
    const Matrix quad_pinv_m = sw::restricted_inverse(quad_h0);

    auto h4_op = [&](int sys_a, int sys_b, int med) {
        return [=, &hm](const Vector& v) {
            return Vector(apply_embedded(hm, {sys_a, med}, n, d, v) + apply_embedded(hm, {sys_b, med}, n, d, v));
        };
    };
    auto h0_op = [=, &pair_h0](int med_a, int med_b) {
        return [=, &pair_h0](const Vector& v) { return apply_embedded(pair_h0, {med_a, med_b}, n, d, v); };
    };
    auto pinv_op = [=, &pair_pinv_m](int med_a, int med_b) {
        return [=, &pair_pinv_m](const Vector& v) { return apply_embedded(pair_pinv_m, {med_a, med_b}, n, d, v); };
    };
    std::vector<sw::InterferenceGadget> gadgets = {
        {h4_op(0, 1, 3), h0_op(3, 4), pinv_op(3, 4)},
        {h4_op(0, 2, 5), h0_op(5, 6), pinv_op(5, 6)},
    };
    auto pair_pinv = [&](int, int) -> sw::LinOp {
        return [&](const Vector& v) { return apply_embedded(quad_pinv_m, {3, 4, 5, 6}, n, d, v); };
    };

    const Vector psi = singlet_state_su2(d);
    const Index sys_dim = pow_index(d, 3);
    Matrix ground(pow_index(d, n), sys_dim);
    for (Index i = 0; i < sys_dim; ++i)
        ground.col(i) = product_state({{basis_ket(sys_dim, i), {0, 1, 2}}, {psi, {3, 4}}, {psi, {5, 6}}}, n, d);

    const sw::InterferenceResult res = sw::cross_gadget_interference(gadgets, pair_pinv, ground);

    GadgetReport rep;
    rep.gadget = "h-to-h2-interference";
    rep.d = d;
    rep.tolerance = tol;
    const double expect = lam * lam * lam / 9.0;
    rep.checks.add("normalised interference = (lambda^3/9) I",
                   max_abs(res.simplified - expect * Matrix::Identity(sys_dim, sys_dim)), tol);
    rep.checks.add("general expression agrees with the commutator form", res.general_vs_simplified, 1e-10);
    for (std::size_t i = 0; i < res.eigenop_residuals.size(); ++i)
        rep.checks.add("heavy term acts as identity on h4 Pi (gadget " + std::to_string(i) + ")",
                       res.eigenop_residuals[i], 1e-10);
    rep.extra["lambda_cubed_over_9"] = expect;
    rep.effective = res.simplified;
    rep.expected = expect * Matrix::Identity(sys_dim, sys_dim);
    return rep;
}

}  // namespace gadgetforge::gadgets
