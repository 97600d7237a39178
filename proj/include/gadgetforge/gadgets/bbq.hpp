// bbq.hpp — Bilinear-biquadratic gadgets on qutrits: the mediator-pair gadget
// (unique extremal mediator state) and the logical-qutrit gadget (3-dim ground
// space per pair), each verified against its closed-form second-order operator.

#pragma once

#include "gadgetforge/catalog/interactions.hpp"
#include "gadgetforge/core/spectral.hpp"
#include "gadgetforge/gadgets/report.hpp"
#include "gadgetforge/sw/block_split.hpp"

namespace gadgetforge::gadgets {

inline double reduce_theta(double theta) {
    theta = std::fmod(theta, 2 * M_PI);
    if (theta < 0) theta += 2 * M_PI;
    return theta;
}

// |02⟩ − |11⟩ + |20⟩, the state whose projector is h² up to identity and scale.
inline Vector bbq_extremal_state() {
    Vector v = Vector::Zero(9);
    v(2) = 1;
    v(4) = -1;
    v(6) = 1;
    return v / v.norm();
}

// Logical qutrit basis inside the 3-dim ground space of h^(θ) for
// arctan(1/3) < θ < arctan 5, ordered m = +1, 0, −1 so the block carries the
// standard spin-1 matrices: {|01⟩−|10⟩, |02⟩−|20⟩, |12⟩−|21⟩}/√2.
inline Matrix bbq_logical_basis() {
    Matrix B = Matrix::Zero(9, 3);
    const double s = 1.0 / std::sqrt(2.0);
    B(1, 0) = s;
    B(3, 0) = -s;
    B(2, 1) = s;
    B(6, 1) = -s;
    B(5, 2) = s;
    B(7, 2) = -s;
    return B;
}

inline GadgetReport bbq_mediator_gadget(double theta, double lam1, double lam2,
                                        double tol = tol::closed_form) {
    theta = reduce_theta(theta);
    const double a = std::cos(theta), b = std::sin(theta);
    const double t13 = std::atan(1.0 / 3.0), t2 = std::atan(2.0);
    const bool in_range =
        (theta > 0 && theta < t13) || (theta > M_PI / 4 && theta < M_PI && std::abs(theta - t2) > 1e-9);
    if (!in_range)
        throw std::domain_error(
            "bbq_mediator_gadget: theta must lie in (0, arctan 1/3) or (pi/4, pi) with theta != arctan 2, "
            "where the mediator state is the unique extremal eigenstate");

    const int n = 4, d = 3;  // system 0,1; mediators 2,3
    const Index dim = 81;
    const Matrix h = catalog::heisenberg_su2(3).op.matrix();
    const Matrix h2m = (h * h).eval();
    const Matrix ht = a * h + b * h2m;
    const LocalOperator htop(3, 2, ht);

    GadgetReport rep;
    rep.gadget = "bbq-mediator";
    rep.d = d;
    rep.params = {{"theta", theta}, {"lambda1", lam1}, {"lambda2", lam2}};
    rep.tolerance = tol;

    const double sign = a > 3 * b ? 1.0 : -1.0;  // both excited eigenvalues positive after this sign
    const ManyBodyOperator H0 =
        (embed(htop, {2, 3}, n) + ManyBodyOperator::identity(n, d) * cxd(2 * a - 4 * b)) * cxd(sign);
    const sw::BlockSplit split = sw::block_split(H0, 1e-9);
    rep.checks.add("mediator ground space dimension = 9", std::abs(split.ground_dim - 9), 0.5);

    const Vector psi = bbq_extremal_state();
    Matrix enc(dim, 9);
    for (int i = 0; i < 9; ++i)
        enc.col(i) = product_state({{basis_ket(9, i), {0, 1}}, {psi, {2, 3}}}, n, d);
    rep.checks.add("mediator state annihilated by the heavy term", H0.apply_columns(enc).norm(), 1e-10);

    const LocalOperator hop(3, 2, h);
    const LocalOperator h2op(3, 2, h2m);
    const Matrix A_ = (embed(hop, {0, 2}, n) + embed(hop, {1, 2}, n)).dense();
    const Matrix B_ = (embed(h2op, {0, 2}, n) + embed(hop, {0, 2}, n) * cxd(0.5) + embed(h2op, {1, 2}, n) +
                       embed(hop, {1, 2}, n) * cxd(0.5) - ManyBodyOperator::identity(n, d) * cxd(8.0 / 3.0))
                          .dense();
    const Matrix h34 = embed(hop, {2, 3}, n).dense();
    rep.checks.add("A Pi supported on the h_34 = -1 sector", (h34 * (A_ * enc) + (A_ * enc)).norm(), tol);
    rep.checks.add("B Pi supported on the h_34 = +1 sector", (h34 * (B_ * enc) - (B_ * enc)).norm(), tol);

    const ManyBodyOperator H2 =
        (embed(htop, {0, 2}, n) + embed(htop, {1, 2}, n) - ManyBodyOperator::identity(n, d) * cxd(8 * b / 3.0)) *
        cxd(lam2);
    rep.checks.add("Pi H2 Pi = 0", (enc.adjoint() * H2.to_dense_matrix() * enc).norm(), 1e-10);

    const Matrix h12_log = h;  // system pair operators in the encoding basis
    const Matrix h12sq_log = h2m;
    const Matrix PA2P = enc.adjoint() * A_ * A_ * enc;
    rep.checks.add("Pi A^2 Pi = (4/3)(2I + h)",
                   sw::spectral_norm(PA2P - (4.0 / 3.0) * (2 * Matrix::Identity(9, 9) + h12_log)), tol);
    const Matrix PB2P = enc.adjoint() * B_ * B_ * enc;
    rep.checks.add("Pi B^2 Pi = (2/3)h^2 + (1/3)h + (2/9)I",
                   sw::spectral_norm(PB2P - ((2.0 / 3.0) * h12sq_log + (1.0 / 3.0) * h12_log +
                                             (2.0 / 9.0) * Matrix::Identity(9, 9))),
                   tol);

    // second-order operator against the closed-form h~(θ); its sign flips with
    // the branch of the heavy term
    const Matrix second = -(enc.adjoint() * H2.to_dense_matrix() * split.pinv() * H2.to_dense_matrix() * enc);
    const double co_h2 = 2 * b * b / (9 * (a - b));
    const double co_h = 2 * (6 * a * a * a - 12 * a * a * b + 8 * a * b * b - 3 * b * b * b) /
                        (9 * (a - b) * (a - 3 * b));
    const double co_i = 4 * (18 * a * a * a - 36 * a * a * b + 23 * a * b * b - 6 * b * b * b) /
                        (27 * (a - b) * (a - 3 * b));
    const double s = a < b ? 1.0 : -1.0;
    const Matrix tilde =
        co_h2 * h12sq_log + co_h * h12_log + co_i * Matrix::Identity(9, 9);
    rep.checks.add("second-order operator = s lambda2^2 h~(theta)",
                   sw::spectral_norm(second - s * lam2 * lam2 * tilde), tol);

    const Matrix ht_log = a * h12_log + b * h12sq_log;
    const Matrix simulated = lam1 * ht_log + second;
    rep.checks.add("simulated operator = lambda1 h^(theta) + s lambda2^2 h~(theta)",
                   sw::spectral_norm(simulated - (lam1 * ht_log + s * lam2 * lam2 * tilde)), tol);

    // recorded, not asserted: 2-local independence of h~ from h^(θ); its zero
    // at theta = arctan 2 is what breaks the reachability argument there
    rep.extra["h_h2_independence"] =
        6 * std::pow(a, 3) - 13 * a * a * b + 11 * a * b * b - 3 * std::pow(b, 3);
    rep.extra["branch_sign"] = s;
    rep.effective = simulated;
    rep.expected = lam1 * ht_log + s * lam2 * lam2 * tilde;
    return rep;
}

inline GadgetReport bbq_logical_gadget(double theta, double tol = tol::closed_form) {
    theta = reduce_theta(theta);
    const double a = std::cos(theta), b = std::sin(theta);
    const double t13 = std::atan(1.0 / 3.0), t5 = std::atan(5.0);
    if (!(theta > t13 && theta < t5))
        throw std::domain_error(
            "bbq_logical_gadget: theta must lie in (arctan 1/3, arctan 5), where h^(theta) has a "
            "3-dimensional ground space");

    const int n = 4, d = 3;  // logical pairs (0,1) and (2,3)
    const Matrix h = catalog::heisenberg_su2(3).op.matrix();
    const Matrix ht = a * h + b * (h * h).eval();
    const LocalOperator htop(3, 2, ht);

    GadgetReport rep;
    rep.gadget = "bbq-logical";
    rep.d = d;
    rep.params = {{"theta", theta}};
    rep.tolerance = tol;

    const ManyBodyOperator H0 =
        embed(htop, {0, 1}, n) + embed(htop, {2, 3}, n) + ManyBodyOperator::identity(n, d) * cxd(2 * (a - b));
    const sw::BlockSplit split = sw::block_split(H0, 1e-9);
    rep.checks.add("ground space dimension = 9", std::abs(split.ground_dim - 9), 0.5);

    const Matrix B = bbq_logical_basis();
    Matrix L(81, 9);
    int c = 0;
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) L.col(c++) = product_state({{B.col(p), {0, 1}}, {B.col(q), {2, 3}}}, n, d);
    rep.checks.add("logical basis annihilated by the heavy term", H0.apply_columns(L).norm(), 1e-10);

    // quarter-projection identity for every cross pair
    double worst = 0;
    for (int i : {0, 1})
        for (int j : {2, 3}) {
            const Matrix block = L.adjoint() * embed(htop, {i, j}, n).dense() * L;
            worst = std::max(worst, sw::spectral_norm(block - (0.25 * ht + b * Matrix::Identity(9, 9))));
        }
    rep.checks.add("Pi h^(theta)_ij Pi = (1/4 h_L^(theta) + beta I) Pi", worst, tol);

    const double lam2 = 2 * std::sqrt(a), lam1 = a - b;
    const ManyBodyOperator H2 = (embed(htop, {0, 2}, n) - embed(htop, {1, 3}, n)) * cxd(lam2);
    rep.checks.add("Pi H2 Pi = 0", (L.adjoint() * H2.to_dense_matrix() * L).norm(), 1e-10);

    const Matrix second = -(L.adjoint() * H2.to_dense_matrix() * split.pinv() * H2.to_dense_matrix() * L);
    const double pref = lam2 * lam2 / (2 * a * (a - 3 * b));
    const double ch = pref * (-3 * std::pow(a, 3) + 6 * a * a * b - 8 * a * b * b + std::pow(b, 3));
    const double ch2 = pref * (-0.5) * (5 * std::pow(a, 3) - 7 * a * a * b + 9 * a * b * b + std::pow(b, 3));
    const Matrix second_model = ch * h + ch2 * (h * h).eval();
    rep.checks.add("second-order closed-form h and h^2 coefficients",
                   sw::spectral_norm(sw::traceless_part(second) - sw::traceless_part(second_model)), tol);
    rep.extra["second_order_identity"] = std::real((second - second_model).trace()) / 9.0;

    const ManyBodyOperator H1 = embed(htop, {0, 2}, n) * cxd(4 * lam1);
    const Matrix simulated = L.adjoint() * H1.to_dense_matrix() * L + second;
    const double coef = (5 * std::pow(a, 3) - 8 * a * a * b + 13 * a * b * b - 2 * std::pow(b, 3)) / (3 * b - a);
    const Matrix target = coef * (h + (h * h).eval());
    rep.checks.add("simulated operator = coef (h_L + h_L^2) (mod identity)",
                   sw::spectral_norm(sw::traceless_part(simulated) - sw::traceless_part(target)), tol);
    rep.checks.add("final coefficient positive", coef > 0 ? 0.0 : 1.0, 0.5);
    rep.identity_offset = std::real((simulated - target).trace()) / 9.0;
    rep.extra["final_coefficient"] = coef;
    rep.effective = simulated;
    rep.expected = target;
    return rep;
}

}  // namespace gadgetforge::gadgets
