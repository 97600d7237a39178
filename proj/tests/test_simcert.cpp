#include "gadgetforge/cert/simulation.hpp"
#include "gadgetforge/gadgets/aklt.hpp"
#include "gadgetforge/util/rng.hpp"

#include "catch2/catch_amalgamated.hpp"

using namespace gadgetforge;
using namespace gadgetforge::cert;

TEST_CASE("low_energy_projector: projector and ladder examples", "[lowproj]") {
    util::Rng rng(5);
    const Vector psi = util::random_state(4, rng);
    const Matrix H = Matrix::Identity(4, 4) - psi * psi.adjoint();
    const LowEnergyProjector low = low_energy_projector(ManyBodyOperator(2, 2, H), 0.5);
    REQUIRE(low.basis.cols() == 1);
    REQUIRE(std::abs(std::abs((low.basis.col(0).adjoint() * psi)(0)) - 1.0) < 1e-12);

    Matrix D = Matrix::Zero(4, 4);
    D.diagonal() << 0, 1, 2, 3;
    const LowEnergyProjector ladder = low_energy_projector(ManyBodyOperator(2, 2, D), 1.5);
    REQUIRE(ladder.basis.cols() == 2);
    REQUIRE_FALSE(ladder.cluster_flag);

    // a cut through a degenerate cluster includes the whole cluster and flags it
    Matrix D2 = Matrix::Zero(4, 4);
    D2.diagonal() << 0, 1, 1 + 1e-12, 3;
    const LowEnergyProjector split = low_energy_projector(ManyBodyOperator(2, 2, D2), 1.0);
    REQUIRE(split.basis.cols() == 3);
    REQUIRE(split.cluster_flag);
}

TEST_CASE("certify_simulation: self-simulation is exact", "[simcert]") {
    util::Rng rng(11);
    const Matrix H = util::random_hermitian(8, rng);
    const ManyBodyOperator op(3, 2, H);
    const SimulationReport rep =
        certify_simulation(op, op, Matrix::Identity(8, 8), 10 + operator_norm(op));
    REQUIRE(rep.rank_match);
    REQUIRE(rep.eta < 1e-12);
    REQUIRE(rep.eps < 1e-10);
}

TEST_CASE("certify_simulation: eta vanishes when V already spans the low space", "[simcert]") {
    util::Rng rng(12);
    const Matrix Q = util::random_unitary(8, rng).leftCols(2);
    const Matrix H = 5.0 * (Matrix::Identity(8, 8) - Q * Q.adjoint());
    const Matrix target = util::random_hermitian(2, rng);
    const ManyBodyOperator hp(3, 2, Matrix(H + Q * target * Q.adjoint()));
    const SimulationReport rep = certify_simulation(hp, ManyBodyOperator(1, 2, target), Q, 2.5);
    REQUIRE(rep.rank_match);
    REQUIRE(rep.eta < 1e-12);
    REQUIRE(rep.eps < 1e-10);
}

TEST_CASE("certify_simulation: eps invariant under joint unitary rotation of target and isometry",
          "[simcert][property]") {
    util::Rng rng(13);
    const Matrix Q = util::random_unitary(8, rng).leftCols(2);
    const Matrix H0 = 7.0 * (Matrix::Identity(8, 8) - Q * Q.adjoint());
    const Matrix pert = util::random_hermitian(8, rng);
    const ManyBodyOperator hp(3, 2, Matrix(H0 + 0.1 * pert));
    const Matrix target = util::random_hermitian(2, rng);
    const SimulationReport r1 = certify_simulation(hp, ManyBodyOperator(1, 2, target), Q, 3.5);
    const Matrix U = util::random_unitary(2, rng);
    const SimulationReport r2 = certify_simulation(
        hp, ManyBodyOperator(1, 2, Matrix(U * target * U.adjoint())), Matrix(Q * U.adjoint()), 3.5);
    REQUIRE(r1.rank_match);
    REQUIRE(r2.rank_match);
    REQUIRE(r1.eps == Catch::Approx(r2.eps).margin(1e-10));
}

TEST_CASE("certify_simulation: first-order gadget scaling", "[simcert]") {
    util::Rng rng(14);
    const Matrix Q = util::random_unitary(8, rng).leftCols(2);
    const ManyBodyOperator h0(3, 2, Matrix(Matrix::Identity(8, 8) - Q * Q.adjoint()));
    const Matrix h1 = util::random_hermitian(8, rng);
    const double delta = 1e8;
    const ManyBodyOperator hsim = h0 * cxd(delta) + ManyBodyOperator(3, 2, h1);
    const Matrix target = Q.adjoint() * h1 * Q;  // ground-block action
    const SimulationReport rep =
        certify_simulation(hsim, ManyBodyOperator(1, 2, Matrix((target + target.adjoint()) / 2)), Q, delta / 2);
    REQUIRE(rep.rank_match);
    const double n1 = sw::spectral_norm(h1);
    REQUIRE(rep.eps <= 4 * n1 * n1 / delta + 1e-9);
    REQUIRE(rep.eta <= 4 * n1 / delta);
}

TEST_CASE("certify_simulation: rank mismatch reported", "[simcert]") {
    util::Rng rng(15);
    const Matrix Q = util::random_unitary(8, rng).leftCols(2);
    const Matrix H = 5.0 * (Matrix::Identity(8, 8) - Q * Q.adjoint());
    const ManyBodyOperator hp(3, 2, H);
    const Matrix V = util::random_unitary(8, rng).leftCols(4);
    const SimulationReport rep = certify_simulation(hp, ManyBodyOperator(2, 2, util::random_hermitian(4, rng)), V, 2.5);
    REQUIRE_FALSE(rep.rank_match);
}

TEST_CASE("certify_simulation: AKLT gadget simulator certifies against its target", "[simcert][aklt]") {
    using namespace gadgetforge::gadgets;
    const AkltGadget g = aklt_su3_gadget(1e-9, std::sqrt(1.0 / 66.0));
    const double delta = 1e7;
    const ManyBodyOperator hsim = assemble_simulator(g.instance, delta, 1e-7);
    // logical target on the encoding isometry, compared modulo identity
    const Matrix target = g.report.expected;
    const SimulationReport rep = certify_simulation(
        hsim, ManyBodyOperator(2, 3, target), g.instance.encoding, delta / 2, /*mod_identity=*/true);
    REQUIRE(rep.rank_match);
    REQUIRE(rep.low_space_dim == 9);
    REQUIRE(rep.eps < 1e-2);
    REQUIRE(rep.eta < 1e-2);
}
