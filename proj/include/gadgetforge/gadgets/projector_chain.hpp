// projector_chain.hpp — Gadget chain for rank-1 projector interactions onto a
// two-qudit state: extraction of the Schmidt-weight operator R, the
// (αR + β²R²) second-order step, and the projected two-qubit (or conjugated
// invariant) interaction the chain terminates in.

#pragma once

#include "gadgetforge/catalog/interactions.hpp"
#include "gadgetforge/gadgets/report.hpp"
#include "gadgetforge/util/rng.hpp"

#include <Eigen/SVD>

namespace gadgetforge::gadgets {

enum class ProjectorCase { Classical, DegenerateInvariant, TwoQubit };

struct ProjectorChainReport {
    ProjectorCase chain_case = ProjectorCase::Classical;
    RVector schmidt;  // non-increasing
    GadgetReport report;
};

inline ProjectorChainReport projector_gadget_chain(const Vector& psi, int d, double tol = tol::closed_form,
                                                   std::uint64_t seed = 0) {
    if (psi.size() != static_cast<Index>(d) * d)
        throw std::invalid_argument("projector_gadget_chain: psi must live on two qudits");
    if (std::abs(psi.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("projector_gadget_chain: psi must be normalised");

    ProjectorChainReport out;
    GadgetReport& rep = out.report;
    rep.gadget = "projector-chain";
    rep.d = d;
    rep.tolerance = tol;

    // Schmidt coefficients via the d×d amplitude matrix
    Matrix amp(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) amp(i, j) = psi(static_cast<Index>(i) * d + j);
    Eigen::JacobiSVD<Matrix> svd(amp);
    out.schmidt = svd.singularValues();
    const RVector& lam = out.schmidt;
    for (int i = 0; i < d; ++i) rep.extra["schmidt_" + std::to_string(i)] = lam(i);

    const double sep_tol = 1e-8;
    if (lam(1) < sep_tol) {
        out.chain_case = ProjectorCase::Classical;
        rep.checks.add("product state: classical family, no gadget built", 0.0, 1.0);
        return out;
    }

    // canonical state Σ λ_i |ii⟩ on three qudits: 0,1 on one side, 2 on the other
    const int n = 3;
    const Index dim = pow_index(d, n);
    Vector canon = Vector::Zero(static_cast<Index>(d) * d);
    for (int i = 0; i < d; ++i) canon(static_cast<Index>(i) * d + i) = lam(i);
    const LocalOperator P = catalog::state_projector(canon, d).op;
    const Matrix P32 = embed(P, {2, 1}, n).dense();
    const Matrix P12 = embed(P, {0, 1}, n).dense();
    Matrix R = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) R(i, i) = std::pow(lam(i), 4);
    const Matrix R1 = embed(LocalOperator(d, 1, R), {0}, n).dense();

    rep.checks.add("first-order extraction: P32 P12 P32 = R1 P32", max_abs(P32 * P12 * P32 - R1 * P32), tol);

    // second-order step, random (α, β) trials
    util::Rng rng(seed + 17);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    const Matrix H0inv = Matrix::Identity(dim, dim) - P32;  // restricted inverse of I − P32
    double worst = 0, worst_h2 = 0;
    for (int t = 0; t < 20; ++t) {
        const double al = u(rng), be = u(rng);
        const Matrix H1 = (al + be * be) * P12;
        const Matrix H2 = be * (P12 - R1);
        worst_h2 = std::max(worst_h2, max_abs(P32 * H2 * P32));
        const Matrix lhs = P32 * (H1 - H2 * H0inv * H2) * P32;
        const Matrix rhs = (al * R1 + be * be * R1 * R1) * P32;
        worst = std::max(worst, max_abs(lhs - rhs));
    }
    rep.checks.add("Pi H2 Pi = 0", worst_h2, 1e-10);
    rep.checks.add("second-order extraction: (alpha R + beta^2 R^2) P32", worst, tol);

    // degenerate positive Schmidt values → conjugated-invariant case
    int j_end = 1;
    double mu = 0;
    for (int i = 0; i + 1 < d; ++i)
        if (lam(i + 1) > sep_tol && lam(i) - lam(i + 1) < sep_tol) {
            int jb = i;
            while (jb > 0 && lam(jb - 1) - lam(i) < sep_tol) --jb;
            int je = i + 1;
            while (je + 1 < d && lam(i) - lam(je + 1) < sep_tol) ++je;
            mu = lam(i);
            j_end = je - jb + 1;
            out.chain_case = ProjectorCase::DegenerateInvariant;
            // projected interaction on the J-block of P: entries λ_a λ_b on |aa⟩⟨bb|
            const int dp = j_end;
            const Matrix Ppair = canon * canon.adjoint();
            Matrix proj = Matrix::Zero(dp * dp, dp * dp);
            for (int a = 0; a < dp; ++a)
                for (int b = 0; b < dp; ++b)
                    for (int c = 0; c < dp; ++c)
                        for (int e = 0; e < dp; ++e)
                            proj(a * dp + b, c * dp + e) =
                                Ppair(static_cast<Index>(jb + a) * d + (jb + b),
                                      static_cast<Index>(jb + c) * d + (jb + e));
            Matrix expect = Matrix::Zero(dp * dp, dp * dp);
            for (int a = 0; a < dp; ++a)
                for (int b = 0; b < dp; ++b) expect(a * dp + a, b * dp + b) = mu * mu;
            rep.checks.add("degenerate case: projected interaction = mu^2 sum |ii><jj|",
                           max_abs(proj - expect), tol);
            rep.extra["invariant_block_dim"] = dp;
            rep.extra["mu"] = mu;
            break;
        }

    if (out.chain_case != ProjectorCase::DegenerateInvariant) {
        out.chain_case = ProjectorCase::TwoQubit;
        // heavy 1-local term with kernel on the top-two Schmidt directions
        const Matrix H0p = R * R - (std::pow(lam(0), 4) + std::pow(lam(1), 4)) * R +
                           std::pow(lam(0), 4) * std::pow(lam(1), 4) * Matrix::Identity(d, d);
        Eigen::SelfAdjointEigenSolver<Matrix> es(H0p);
        const Index kernel = (es.eigenvalues().array().abs() < 1e-10).count();
        rep.checks.add("two-qubit case: 1-local heavy term has a 2-dimensional kernel",
                       std::abs(static_cast<double>(kernel) - 2.0), 0.5);

        // projected two-qudit interaction on the {0,1} Schmidt block
        const Matrix Ppair = canon * canon.adjoint();
        Matrix proj = Matrix::Zero(4, 4);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c)
                    for (int e = 0; e < 2; ++e)
                        proj(a * 2 + b, c * 2 + e) = Ppair(static_cast<Index>(a) * d + b, static_cast<Index>(c) * d + e);
        const Matrix X = pauli_x(), Z = pauli_z();
        Matrix Y(2, 2);
        Y << cxd(0, 0), cxd(0, -1), cxd(0, 1), cxd(0, 0);
        const double l1 = lam(0), l2 = lam(1);
        const Matrix closed =
            l1 * l2 / 2.0 * (Eigen::kroneckerProduct(X, X).eval() - Eigen::kroneckerProduct(Y, Y).eval()) +
            (l1 * l1 + l2 * l2) / 4.0 *
                (Eigen::kroneckerProduct(Z, Z).eval() + Matrix::Identity(4, 4)) +
            (l1 * l1 - l2 * l2) / 4.0 *
                (Eigen::kroneckerProduct(Z, Matrix::Identity(2, 2)).eval() +
                 Eigen::kroneckerProduct(Matrix::Identity(2, 2), Z).eval());
        rep.checks.add("two-qubit case: projected interaction matches the closed form",
                       max_abs(proj - closed), tol);
        rep.effective = proj;
        rep.expected = closed;
    }
    return out;
}

}  // namespace gadgetforge::gadgets
