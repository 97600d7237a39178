#include "gadgetforge/catalog/assembly.hpp"
#include "gadgetforge/catalog/interactions.hpp"
#include "gadgetforge/rep/casimir.hpp"
#include "gadgetforge/sw/effective.hpp"
#include "gadgetforge/sw/gadget.hpp"
#include "gadgetforge/sw/interference.hpp"
#include "gadgetforge/sw/sweep.hpp"
#include "gadgetforge/util/rng.hpp"

#include "catch2/catch_amalgamated.hpp"

using namespace gadgetforge;
using namespace gadgetforge::sw;

namespace {

// H0 = I − P for a random rank-m projector; ground space = range(P).
ManyBodyOperator random_projector_h0(int n, int d, int m, util::Rng& rng, Matrix* basis = nullptr) {
    const Index dim = pow_index(d, n);
    const Matrix Q = util::random_unitary(dim, rng).leftCols(m);
    if (basis) *basis = Q;
    return ManyBodyOperator(n, d, Matrix(Matrix::Identity(dim, dim) - Q * Q.adjoint()));
}

Matrix block_diag_random(const BlockSplit& s, util::Rng& rng) {
    const Matrix M = util::random_hermitian(s.dim, rng);
    const Matrix Pm = s.pi_minus(), Pp = s.pi_plus();
    return Pm * M * Pm + Pp * M * Pp;
}

Matrix zero_mm_random(const BlockSplit& s, util::Rng& rng) {
    const Matrix M = util::random_hermitian(s.dim, rng);
    const Matrix Pm = s.pi_minus();
    return M - Pm * M * Pm;
}

// Random instance satisfying the order's validity conditions, with Λ ~ 1.
GadgetInstance random_instance(int order, int n, int d, int m, util::Rng& rng) {
    ManyBodyOperator h0 = random_projector_h0(n, d, m, rng);
    BlockSplit split = block_split(h0);
    const Index dim = h0.dim();
    Matrix h1 = Matrix::Zero(dim, dim), h2 = h1, h3 = h1, h4 = h1;
    const Matrix Pm = split.pi_minus();
    const Matrix Pp = split.pi_plus();
    const Matrix R = split.pinv();
    switch (order) {
        case 1:
            h1 = util::random_hermitian(dim, rng);
            break;
        case 2:
            h1 = block_diag_random(split, rng);
            h2 = zero_mm_random(split, rng);
            break;
        case 3: {
            h1 = block_diag_random(split, rng);
            h2 = zero_mm_random(split, rng);
            h3 = Pm * h2 * R * h2 * Pm + Pp * util::random_hermitian(dim, rng) * Pp;
            break;
        }
        case 4: {
            h1 = block_diag_random(split, rng);
            h4 = zero_mm_random(split, rng);
            h2 = Pm * h4 * R * h4 * Pm + Pp * util::random_hermitian(dim, rng) * Pp;
            h3 = -(Pm * h4 * R * h4 * R * h4 * Pm) + Pp * util::random_hermitian(dim, rng) * Pp;
            break;
        }
        default:
            throw std::logic_error("bad order");
    }
    auto mk = [&](const Matrix& M) { return ManyBodyOperator(n, d, Matrix((M + M.adjoint()) / 2)); };
    return GadgetInstance(order, std::move(h0), mk(h1), mk(h2), mk(h3), mk(h4), std::move(split));
}

}  // namespace

TEST_CASE("block_split: projector heavy term", "[split]") {
    util::Rng rng(21);
    Matrix basis;
    const ManyBodyOperator h0 = random_projector_h0(2, 2, 1, rng, &basis);
    const BlockSplit s = block_split(h0);
    REQUIRE(s.ground_dim == 1);
    REQUIRE(s.gap == Catch::Approx(1.0).margin(1e-12));
    REQUIRE_FALSE(s.gap_warning);
    REQUIRE(max_abs(s.pi_minus() - basis * basis.adjoint()) < 1e-12);
    REQUIRE(max_abs(s.pinv() - s.pi_plus()) < 1e-12);
}

TEST_CASE("block_split: three-qutrit AKLT triangle has a unique ground state", "[split]") {
    const catalog::Interaction a = catalog::aklt_interaction();
    catalog::WeightedTermList list{3, 3, {{a, {0, 1}, 1.0}, {a, {1, 2}, 1.0}, {a, {0, 2}, 1.0}}};
    const ManyBodyOperator H0 = catalog::assemble(list) + ManyBodyOperator::identity(3, 3) * cxd(6.0);
    const BlockSplit s = block_split(H0, 1e-9);
    REQUIRE(s.ground_dim == 1);
}

TEST_CASE("block_split: SU(d) logical heavy term has a 2-dimensional ground space (d=2)", "[split]") {
    const HermitianBasis basis = gell_mann_basis(2);
    const int n = 4, d = 2;
    ManyBodyOperator H0 = rep::casimir_operator({0, 1, 2, 3}, n, d, basis) +
                          rep::casimir_operator({2}, n, d, basis) + rep::casimir_operator({3}, n, d, basis) -
                          ManyBodyOperator::identity(n, d) * cxd((d * d - 1) / static_cast<double>(d));
    const BlockSplit s = block_split(H0, 1e-9);
    REQUIRE(s.ground_dim == 2);
}

TEST_CASE("block_split: idempotence and error paths", "[split]") {
    util::Rng rng(33);
    const ManyBodyOperator h0 = random_projector_h0(2, 3, 2, rng);
    const BlockSplit s1 = block_split(h0);
    const BlockSplit s2 = block_split(h0);
    REQUIRE(max_abs(s1.pi_minus() - s2.pi_minus()) < 1e-14);

    const ManyBodyOperator shifted = h0 + ManyBodyOperator::identity(2, 3) * cxd(0.5);
    REQUIRE_THROWS_AS(block_split(shifted), std::invalid_argument);

    const ManyBodyOperator weak = h0 * cxd(0.25);
    REQUIRE(block_split(weak).gap_warning);
}

TEST_CASE("effective_series: zero perturbations beyond h1", "[series]") {
    util::Rng rng(55);
    const ManyBodyOperator h0 = random_projector_h0(2, 2, 2, rng);
    const BlockSplit s = block_split(h0);
    const Matrix h1 = util::random_hermitian(4, rng);
    const Matrix z = Matrix::Zero(4, 4);
    const EffectiveSeries series = effective_series(s, h1, z, z, z, 1e6, 1);
    REQUIRE(series.terms.size() == 1);
    const Matrix expect = s.e_minus.adjoint() * h1 * s.e_minus;
    REQUIRE(max_abs(series.terms[0] - expect) < 1e-12);
}

TEST_CASE("effective_series: second-order leading term matches the closed form", "[series]") {
    util::Rng rng(56);
    GadgetInstance g = random_instance(2, 2, 2, 1, rng);
    const double delta = 1e10;
    const EffectiveSeries series =
        effective_series(g.split, g.h1.dense(), g.h2.dense(), Matrix::Zero(4, 4), Matrix::Zero(4, 4), delta, 2);
    const Matrix lead = series.terms[0] + series.terms[1];
    const Matrix expect = g.split.e_minus.adjoint() *
                          (g.h1.dense() - g.h2.dense() * g.split.pinv() * g.h2.dense()) * g.split.e_minus;
    REQUIRE(max_abs(lead - expect) < 1e-4);  // leading order as delta -> infinity
}

TEST_CASE("series terms are Hermitian on the ground block", "[series][property]") {
    util::Rng rng(57);
    for (int order = 1; order <= 4; ++order) {
        GadgetInstance g = random_instance(order, 2, 2, 1, rng);
        const EffectiveSeries series =
            effective_series(g.split, g.h1.dense(), g.h2.dense(), g.h3.dense(), g.h4.dense(), 1e4, order);
        for (const Matrix& t : series.terms) REQUIRE(max_abs(t - t.adjoint()) < 1e-11);
    }
}

TEST_CASE("exact SW of the bare heavy term is zero on the ground block", "[exact-sw]") {
    util::Rng rng(58);
    const ManyBodyOperator h0 = random_projector_h0(2, 2, 2, rng);
    const BlockSplit s = block_split(h0);
    const double delta = 1e4;
    const ExactSWResult r = exact_schrieffer_wolff(h0 * cxd(delta), delta / 2, s);
    REQUIRE(r.rank_match);
    REQUIRE(max_abs(r.h_eff) < 1e-10);
    REQUIRE(r.eta < 1e-12);
}

TEST_CASE("exact SW matches the literal direct-rotation construction", "[exact-sw]") {
    util::Rng rng(59);
    const ManyBodyOperator h0 = random_projector_h0(2, 2, 2, rng);
    const BlockSplit s = block_split(h0);
    const Matrix h1 = util::random_hermitian(4, rng);
    const double delta = 50.0;
    const ManyBodyOperator h_sim = h0 * cxd(delta) + ManyBodyOperator(2, 2, h1);
    const ExactSWResult r = exact_schrieffer_wolff(h_sim, delta / 2, s);
    REQUIRE(r.rank_match);

    const SpectralDecomposition dec = spectral(h_sim);
    const Index low = (dec.eigenvalues.array() <= delta / 2).count();
    REQUIRE(low == s.ground_dim);
    const Matrix P = dec.eigenvectors.leftCols(low) * dec.eigenvectors.leftCols(low).adjoint();
    const Matrix Pm = s.pi_minus();
    const Matrix I = Matrix::Identity(4, 4);
    const Matrix M = Pm * P + (I - Pm) * (I - P);
    Eigen::JacobiSVD<Matrix> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Matrix U = svd.matrixU() * svd.matrixV().adjoint();
    const Matrix heff_lit = s.e_minus.adjoint() * U * h_sim.dense() * U.adjoint() * s.e_minus;
    REQUIRE(max_abs(heff_lit - r.h_eff) < 1e-9);
}

TEST_CASE("exact SW: first-order instance converges at rate 1/delta", "[exact-sw]") {
    util::Rng rng(60);
    GadgetInstance g = random_instance(1, 2, 2, 2, rng);
    const Matrix target = g.split.e_minus.adjoint() * g.h1.dense() * g.split.e_minus;
    const double n1 = operator_norm(g.h1);
    for (double delta : {1e6, 1e8}) {
        const ExactSWResult r = exact_sw_scaled(g.split, g.h1.dense(), delta);
        REQUIRE(r.rank_match);
        REQUIRE(spectral_norm(r.h_eff - target) <= 4.0 * n1 * n1 / delta);
    }
}

TEST_CASE("riccati and dense routes agree on a mid-range delta", "[exact-sw]") {
    util::Rng rng(61);
    for (int order : {1, 2, 4}) {
        GadgetInstance g = random_instance(order, 2, 2, 1, rng);
        const double delta = 4e3;
        const Matrix a =
            scaled_perturbation(g.h1.dense(), g.h2.dense(), g.h3.dense(), g.h4.dense(), delta, order);
        const Matrix a_split = g.split.to_split(a);
        const ExactSWResult rr = exact_sw_riccati(g.split, a_split, delta);
        Matrix h_sim = a_split;
        h_sim.bottomRightCorner(g.split.dim - 1, g.split.dim - 1) +=
            delta * g.split.plus_eigs.asDiagonal().toDenseMatrix().cast<cxd>();
        const ExactSWResult rd = exact_sw_dense_split(g.split, h_sim, delta / 2);
        REQUIRE(rr.rank_match);
        REQUIRE(rd.rank_match);
        REQUIRE(max_abs(rr.h_eff - rd.h_eff) < 1e-9);
        REQUIRE(std::abs(rr.eta - rd.eta) < 1e-9);
    }
}

TEST_CASE("series sum converges to exact SW at the supported rate", "[series][exact-sw][property]") {
    util::Rng rng(62);
    for (int order = 1; order <= 4; ++order) {
        GadgetInstance g = random_instance(order, 2, 2, 1, rng);
        const double step = order == 4 ? 256.0 : 16.0;
        double prev = -1;
        for (double delta = 1e6; delta <= 1e6 * step * step + 1; delta *= step) {
            const Matrix a =
                scaled_perturbation(g.h1.dense(), g.h2.dense(), g.h3.dense(), g.h4.dense(), delta, order);
            const ExactSWResult ex = exact_sw_scaled(g.split, a, delta);
            REQUIRE(ex.rank_match);
            const EffectiveSeries series =
                effective_series(g.split, g.h1.dense(), g.h2.dense(), g.h3.dense(), g.h4.dense(), delta, order);
            const double err = spectral_norm(ex.h_eff - series.sum());
            if (prev >= 0) REQUIRE(err <= prev / 2.0);
            prev = err;
        }
    }
}

TEST_CASE("assemble_simulator produces the documented scalings", "[gadget]") {
    util::Rng rng(63);
    for (int order = 1; order <= 3; ++order) {
        GadgetInstance g = random_instance(order, 2, 2, 1, rng);
        const double delta = 16.0;
        const ManyBodyOperator sim = assemble_simulator(g, delta, 1e-7);
        ManyBodyOperator expect = g.h0 * cxd(delta) + g.h1;
        if (order == 2) expect = expect + g.h2 * cxd(std::sqrt(delta));
        if (order == 3)
            expect = expect + g.h2 * cxd(std::pow(delta, 2.0 / 3.0)) + g.h3 * cxd(std::cbrt(delta));
        REQUIRE(max_abs(sim.dense() - expect.dense()) < 1e-12);
    }
}

TEST_CASE("check_gadget_conditions: all-zero perturbations pass; corrupted h3 fails by name", "[gadget]") {
    util::Rng rng(64);
    const ManyBodyOperator h0 = random_projector_h0(2, 2, 1, rng);
    BlockSplit s = block_split(h0);
    const ManyBodyOperator z = ManyBodyOperator::zero(2, 2);
    GadgetInstance trivial(4, h0, z, z, z, z, std::move(s));
    const ConditionReport rep = check_gadget_conditions(trivial);
    REQUIRE(rep.pass);
    for (const auto& item : rep.items) REQUIRE(item.residual == Catch::Approx(0.0).margin(1e-15));

    GadgetInstance g = random_instance(4, 2, 2, 1, rng);
    REQUIRE(check_gadget_conditions(g).pass);
    GadgetInstance bad(4, g.h0, g.h1, g.h2, g.h3 * cxd(-1.0), g.h4, block_split(g.h0));
    const ConditionReport rep2 = check_gadget_conditions(bad);
    REQUIRE_FALSE(rep2.pass);
    bool found = false;
    for (const auto& item : rep2.items)
        if (!item.pass) {
            REQUIRE(item.name.find("(h3)_--") != std::string::npos);
            found = true;
        }
    REQUIRE(found);
    REQUIRE_THROWS_AS(assemble_simulator(bad, 100.0), gadget_condition_error);
}

TEST_CASE("cross_gadget_interference: gadgets on disjoint system sites do not interfere", "[interference]") {
    util::Rng rng(65);
    const int n = 4, d = 2;  // system 0,1; mediators 2,3
    Vector g1 = util::random_state(2, rng), g2 = util::random_state(2, rng);
    const Matrix P1 = g1 * g1.adjoint(), P2 = g2 * g2.adjoint();
    const Matrix h0a = embed(LocalOperator(2, 1, Matrix(Matrix::Identity(2, 2) - P1)), {2}, n).dense();
    const Matrix h0b = embed(LocalOperator(2, 1, Matrix(Matrix::Identity(2, 2) - P2)), {3}, n).dense();
    Matrix o1 = util::random_hermitian(2, rng);
    o1 -= (g1.adjoint() * o1 * g1)(0) * Matrix::Identity(2, 2);
    Matrix o2 = util::random_hermitian(2, rng);
    o2 -= (g2.adjoint() * o2 * g2)(0) * Matrix::Identity(2, 2);
    Matrix X(2, 2);
    X << 0, 1, 1, 0;
    const Matrix h4a =
        (embed(LocalOperator(2, 1, X), {0}, n) * embed(LocalOperator(2, 1, o1, false), {2}, n)).to_dense_matrix();
    const Matrix h4b =
        (embed(LocalOperator(2, 1, X), {1}, n) * embed(LocalOperator(2, 1, o2, false), {3}, n)).to_dense_matrix();

    Matrix ground(16, 4);
    int c = 0;
    for (int q0 = 0; q0 < 2; ++q0)
        for (int q1 = 0; q1 < 2; ++q1)
            ground.col(c++) =
                product_state({{basis_ket(2, q0), {0}}, {basis_ket(2, q1), {1}}, {g1, {2}}, {g2, {3}}}, n, d);
    const InterferenceResult res = cross_gadget_interference_dense({h4a, h4b}, {h0a, h0b}, ground);
    REQUIRE(max_abs(res.simplified) < 1e-12);
    REQUIRE(max_abs(res.general) < 1e-12);
}

TEST_CASE("cross_gadget_interference: general form reduces to the commutator form for projector heavies",
          "[interference][property]") {
    util::Rng rng(66);
    for (int trial = 0; trial < 3; ++trial) {
        const int n = 4, d = 2;  // system 0,1; mediators 2,3
        const Index dim = 16;
        Vector g1 = util::random_state(2, rng), g2 = util::random_state(2, rng);
        const Matrix h0a =
            embed(LocalOperator(2, 1, Matrix(Matrix::Identity(2, 2) - g1 * g1.adjoint())), {2}, n).dense();
        const Matrix h0b =
            embed(LocalOperator(2, 1, Matrix(Matrix::Identity(2, 2) - g2 * g2.adjoint())), {3}, n).dense();
        const BlockSplit sa = block_split(ManyBodyOperator(n, d, h0a));
        const BlockSplit sb = block_split(ManyBodyOperator(n, d, h0b));
        // perturbations act on (system, own mediator) only, with zero own-ground block
        const Matrix m1 = embed(LocalOperator(2, 3, util::random_hermitian(8, rng)), {0, 1, 2}, n).dense();
        const Matrix m2 = embed(LocalOperator(2, 3, util::random_hermitian(8, rng)), {0, 1, 3}, n).dense();
        const Matrix h4a = m1 - sa.pi_minus() * m1 * sa.pi_minus();
        const Matrix h4b = m2 - sb.pi_minus() * m2 * sb.pi_minus();

        Matrix ground(dim, 4);
        int c = 0;
        for (int q0 = 0; q0 < 2; ++q0)
            for (int q1 = 0; q1 < 2; ++q1)
                ground.col(c++) = product_state(
                    {{basis_ket(2, q0), {0}}, {basis_ket(2, q1), {1}}, {g1, {2}}, {g2, {3}}}, n, d);
        const InterferenceResult res = cross_gadget_interference_dense({h4a, h4b}, {h0a, h0b}, ground);
        for (double r : res.eigenop_residuals) REQUIRE(r < 1e-10);
        REQUIRE(res.general_vs_simplified < 1e-10);
    }
}

TEST_CASE("convergence_sweep: first-order gadget, slope and self-comparison", "[sweep]") {
    util::Rng rng(67);
    GadgetInstance g = random_instance(1, 2, 2, 2, rng);
    g.target_ground = g.split.e_minus.adjoint() * g.h1.dense() * g.split.e_minus;
    const std::vector<double> deltas = log_spaced(1e2, 1e10, 9);
    const SweepResult sweep = convergence_sweep(g, deltas);
    REQUIRE(sweep.monotone);
    REQUIRE(sweep.fitted_slope <= -1.0);
    for (const SweepRow& row : sweep.rows) REQUIRE(row.rank_match);

    const Matrix a =
        scaled_perturbation(g.h1.dense(), g.h2.dense(), g.h3.dense(), g.h4.dense(), deltas.back(), 1);
    GadgetInstance g2 = g;
    g2.target_ground = exact_sw_scaled(g.split, a, deltas.back()).h_eff;
    const SweepResult sweep2 = convergence_sweep(g2, {deltas.back()});
    REQUIRE(sweep2.rows[0].eps < 1e-13);
    REQUIRE(std::abs(sweep2.rows[0].identity_offset) < 1e-13);
}

TEST_CASE("convergence_sweep: rank mismatch flagged per row, not fatal", "[sweep]") {
    util::Rng rng(68);
    GadgetInstance g = random_instance(1, 2, 2, 1, rng);
    g.h1 = g.h1 * cxd(40.0);  // overwhelm the gap at small delta
    g.target_ground = g.split.e_minus.adjoint() * g.h1.dense() * g.split.e_minus;
    const SweepResult sweep = convergence_sweep(g, {1e1, 1e8});
    REQUIRE_FALSE(sweep.rows[0].rank_match);
    REQUIRE(sweep.rows[1].rank_match);
}

TEST_CASE("sweep output formats", "[sweep]") {
    util::Rng rng(69);
    GadgetInstance g = random_instance(1, 2, 2, 1, rng);
    g.target_ground = g.split.e_minus.adjoint() * g.h1.dense() * g.split.e_minus;
    const SweepResult sweep = convergence_sweep(g, {1e4, 1e6});
    const auto j = sweep_to_json(sweep);
    REQUIRE(j["rows"].size() == 2);
    REQUIRE(j["rows"][0].contains("delta"));
    REQUIRE(j["rows"][0].contains("eps"));
    REQUIRE(j["rows"][0].contains("eta"));
    REQUIRE(sweep_table(sweep).find("delta") != std::string::npos);
}
