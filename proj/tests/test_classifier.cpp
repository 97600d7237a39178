#include "gadgetforge/catalog/assembly.hpp"
#include "gadgetforge/catalog/interactions.hpp"
#include "gadgetforge/classify/classify.hpp"
#include "gadgetforge/util/rng.hpp"

#include "catch2/catch_amalgamated.hpp"

using namespace gadgetforge;
using namespace gadgetforge::classify;

namespace {

LocalOperator kron2(const Matrix& A, const Matrix& B, int d) {
    return LocalOperator(d, 2, Matrix(Eigen::kroneckerProduct(A, B)), false);
}

Matrix diag3(double a, double b, double c) {
    Matrix m = Matrix::Zero(3, 3);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
}

}  // namespace

TEST_CASE("two_local_part: X⊗X + Y⊗I has 2-local part X⊗X and rank 1", "[two-local]") {
    const Matrix H = Eigen::kroneckerProduct(pauli_x(), pauli_x()).eval() +
                     Eigen::kroneckerProduct(pauli_y(), Matrix::Identity(2, 2)).eval();
    const TwoLocalDecomposition dec = two_local_part(LocalOperator(2, 2, H));
    REQUIRE(max_abs(dec.h_prime.matrix() - Eigen::kroneckerProduct(pauli_x(), pauli_x()).eval()) < 1e-12);
    REQUIRE(dec.rank_at_tol == 1);
}

TEST_CASE("two_local_part: invariant interaction is its own 2-local part with full rank", "[two-local]") {
    for (int d : {2, 3}) {
        const LocalOperator h = catalog::heisenberg_sud(d).op;
        const TwoLocalDecomposition dec = two_local_part(h);
        REQUIRE(max_abs(dec.h_prime.matrix() - h.matrix()) < 1e-12);
        REQUIRE(dec.rank_at_tol == d * d - 1);
        const double first = dec.singular_values(0);
        REQUIRE(dec.singular_values(d * d - 2) == Catch::Approx(first).margin(1e-10));
    }
}

TEST_CASE("two_local_part: purely 1-local input has rank 0", "[two-local]") {
    util::Rng rng(7);
    const Matrix A = util::random_hermitian(3, rng), B = util::random_hermitian(3, rng);
    const Matrix H = Eigen::kroneckerProduct(A, Matrix::Identity(3, 3)).eval() +
                     Eigen::kroneckerProduct(Matrix::Identity(3, 3), B).eval();
    const TwoLocalDecomposition dec = two_local_part(LocalOperator(3, 2, H));
    REQUIRE(max_abs(dec.h_prime.matrix()) < 1e-12);
    REQUIRE(dec.rank_at_tol == 0);
}

TEST_CASE("two_local_rank: product examples", "[two-local]") {
    REQUIRE(two_local_rank(kron2(pauli_z(), pauli_z(), 2)) == 1);
    const Matrix heis = Eigen::kroneckerProduct(pauli_x(), pauli_x()).eval() +
                        Eigen::kroneckerProduct(pauli_y(), pauli_y()).eval() +
                        Eigen::kroneckerProduct(pauli_z(), pauli_z()).eval();
    REQUIRE(two_local_rank(LocalOperator(2, 2, heis)) == 3);
    REQUIRE(two_local_rank(kron2(diag3(1, -1, 0), diag3(1, -1, 0), 3)) == 1);
}

TEST_CASE("two_local_rank is invariant under local unitaries and 1-local additions",
          "[two-local][property]") {
    util::Rng rng(99);
    for (int d : {2, 3}) {
        for (int trial = 0; trial < 20; ++trial) {
            const Matrix H = util::random_hermitian(d * d, rng);
            const LocalOperator op(d, 2, H);
            const int rank = two_local_rank(op);
            const Matrix U = util::random_unitary(d, rng), V = util::random_unitary(d, rng);
            const Matrix UV = Eigen::kroneckerProduct(U, V);
            REQUIRE(two_local_rank(LocalOperator(d, 2, Matrix(UV * H * UV.adjoint()))) == rank);
            const Matrix A = util::random_hermitian(d, rng), B = util::random_hermitian(d, rng);
            const Matrix H2 = H + Eigen::kroneckerProduct(A, Matrix::Identity(d, d)).eval() +
                              Eigen::kroneckerProduct(Matrix::Identity(d, d), B).eval();
            REQUIRE(two_local_rank(LocalOperator(d, 2, H2)) == rank);
        }
    }
}

TEST_CASE("classify_two_qudit: the diagonal qutrit pair examples", "[classify]") {
    const ClassificationVerdict v1 = classify_two_qudit(kron2(diag3(1, -1, -1), diag3(1, -1, -1), 3));
    REQUIRE(v1.cls == UniversalityClass::LA_STOQUASTIC_UNIVERSAL);
    REQUIRE(v1.witness.has_value());
    REQUIRE(std::abs(std::abs(v1.witness->psi(0)) - 1.0) < 1e-9);

    const ClassificationVerdict v2 = classify_two_qudit(kron2(diag3(1, -1, 0), diag3(1, -1, 0), 3));
    REQUIRE(v2.cls == UniversalityClass::LA_UNIVERSAL);
}

TEST_CASE("classify_two_qudit: qubit Ising form is stoquastic-universal", "[classify]") {
    const ClassificationVerdict v = classify_two_qudit(kron2(pauli_z(), pauli_z(), 2));
    REQUIRE(v.cls == UniversalityClass::LA_STOQUASTIC_UNIVERSAL);
    REQUIRE(v.witness.has_value());
}

TEST_CASE("classify_two_qudit: invariant qutrit interaction is universal", "[classify]") {
    const ClassificationVerdict v = classify_two_qudit(catalog::heisenberg_sud(3).op);
    REQUIRE(v.cls == UniversalityClass::LA_UNIVERSAL);
    REQUIRE(v.rule == "2-local rank >= 2");
}

TEST_CASE("classify_two_qudit: linearly independent factors with symmetrised rank 2", "[classify]") {
    const ClassificationVerdict v = classify_two_qudit(kron2(pauli_z(), pauli_x(), 2));
    REQUIRE(v.cls == UniversalityClass::LA_UNIVERSAL);
    REQUIRE(v.rule.find("symmetris") != std::string::npos);
}

TEST_CASE("classify_two_qudit: class label invariant under U⊗U and 1-local additions",
          "[classify][property]") {
    util::Rng rng(123);
    const std::vector<LocalOperator> seeds = {kron2(diag3(1, -1, -1), diag3(1, -1, -1), 3),
                                              kron2(diag3(1, -1, 0), diag3(1, -1, 0), 3),
                                              catalog::heisenberg_sud(3).op};
    for (const LocalOperator& seed : seeds) {
        const UniversalityClass expect = classify_two_qudit(seed).cls;
        for (int trial = 0; trial < 5; ++trial) {
            const Matrix U = util::random_unitary(3, rng);
            const Matrix UU = Eigen::kroneckerProduct(U, U);
            Matrix H = UU * seed.matrix() * UU.adjoint();
            const Matrix A = util::random_hermitian(3, rng), B = util::random_hermitian(3, rng);
            H += Eigen::kroneckerProduct(A, Matrix::Identity(3, 3)).eval() +
                 Eigen::kroneckerProduct(Matrix::Identity(3, 3), B).eval();
            REQUIRE(classify_two_qudit(LocalOperator(3, 2, H)).cls == expect);
        }
    }
}

TEST_CASE("extract_subinteractions: traceless product has one component", "[subint]") {
    const HermitianBasis basis = gell_mann_basis(3);
    const LocalOperator H = kron2(basis.elements[0], basis.elements[4], 3);
    const auto comps = extract_subinteractions(H);
    REQUIRE(comps.size() == 1);
    REQUIRE(comps.count({0, 1}) == 1);
    REQUIRE(max_abs(comps.at({0, 1}).matrix() - H.matrix()) < 1e-12);
}

TEST_CASE("extract_subinteractions: |000><000| on qubits", "[subint]") {
    Matrix P = Matrix::Zero(8, 8);
    P(0, 0) = 1;
    const auto comps = extract_subinteractions(LocalOperator(2, 3, P));
    REQUIRE(comps.size() == 8);
    const Matrix zzz =
        Eigen::kroneckerProduct(pauli_z(), Eigen::kroneckerProduct(pauli_z(), pauli_z()).eval()).eval();
    REQUIRE(max_abs(comps.at({0, 1, 2}).matrix() - zzz / 8.0) < 1e-12);

    ManyBodyOperator rec = ManyBodyOperator::zero(3, 2);
    for (const auto& [support, comp] : comps) {
        if (support.empty()) {
            rec = rec + ManyBodyOperator(3, 2, Matrix(comp.matrix()(0, 0) * Matrix::Identity(8, 8)));
        } else {
            rec = rec + embed(comp, support, 3);
        }
    }
    REQUIRE(max_abs(rec.dense() - P) < 1e-12);
}

TEST_CASE("projection_moment_rank spans the full component count", "[subint][property]") {
    util::Rng rng(55);
    const Matrix A1 = util::random_hermitian(4, rng), A2 = util::random_hermitian(4, rng);
    const Matrix H = Eigen::kroneckerProduct(A1, pauli_z()).eval() +
                     Eigen::kroneckerProduct(A2, pauli_x()).eval();
    const int rank = projection_moment_rank(LocalOperator(2, 3, H, false), 24, rng);
    REQUIRE(rank == 2);
}

TEST_CASE("classify_interaction_set: projector tensor cube on qutrits", "[classify-set]") {
    Matrix P = Matrix::Zero(27, 27);
    P(0, 0) = 1;
    const ClassificationVerdict v = classify_interaction_set({LocalOperator(3, 3, P)});
    REQUIRE(v.cls == UniversalityClass::LA_STOQUASTIC_UNIVERSAL);
    REQUIRE(v.witness.has_value());
    REQUIRE(std::abs(std::abs(v.witness->psi(0)) - 1.0) < 1e-8);
}

TEST_CASE("classify_interaction_set: two different witness states are universal", "[classify-set]") {
    const Matrix W0 = 2.0 * basis_ket(2, 0) * basis_ket(2, 0).adjoint() - Matrix::Identity(2, 2);
    Vector plus(2);
    plus << 1, 1;
    plus /= plus.norm();
    const Matrix W1 = 2.0 * plus * plus.adjoint() - Matrix::Identity(2, 2);
    const LocalOperator H0 = kron2(W0, W0, 2);
    const LocalOperator H1 = kron2(W1, W1, 2);
    REQUIRE(classify_interaction_set({H0, H1}).cls == UniversalityClass::LA_UNIVERSAL);
    REQUIRE(classify_interaction_set({H0, H0}).cls == UniversalityClass::LA_STOQUASTIC_UNIVERSAL);
}

TEST_CASE("classify_interaction_set: invariant interaction and mixed dimensions", "[classify-set]") {
    REQUIRE(classify_interaction_set({catalog::heisenberg_sud(3).op}).cls ==
            UniversalityClass::LA_UNIVERSAL);
    REQUIRE_THROWS_AS(
        classify_interaction_set({catalog::heisenberg_sud(3).op, catalog::heisenberg_sud(2).op}),
        std::invalid_argument);
}

TEST_CASE("stoquastic_witness: qubit flip term rotates to -|a|", "[stoquastic]") {
    const Matrix M = pauli_x();
    const auto us = stoquastic_witness({M}, basis_ket(2, 0));
    const Matrix rotated = us[0] * M * us[0].adjoint();
    REQUIRE(rotated(0, 1).real() == Catch::Approx(-1.0).margin(1e-12));
    REQUIRE(std::abs(rotated(0, 1).imag()) < 1e-12);
}

TEST_CASE("stoquastic_witness: already-stoquastic input stays stoquastic", "[stoquastic]") {
    Matrix M(2, 2);
    M << 1.0, -0.5, -0.5, 2.0;
    const auto us = stoquastic_witness({M}, basis_ket(2, 0));
    const Matrix rotated = us[0] * M * us[0].adjoint();
    REQUIRE(verify_stoquastic(rotated, 1e-10).ok);
}

TEST_CASE("stoquastic_witness: random 1-local terms rotate stoquastic (d = 3)", "[stoquastic][property]") {
    util::Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix M = util::random_hermitian(3, rng);
        const auto us = stoquastic_witness({M}, basis_ket(3, 0));
        const Matrix rotated = us[0] * M * us[0].adjoint();
        const StoquasticCheck chk = verify_stoquastic(rotated, 1e-12);
        REQUIRE(chk.ok);
    }
}

TEST_CASE("witness unitaries leave an assembled Hamiltonian with no positive off-diagonals",
          "[stoquastic][property]") {
    util::Rng rng(77);
    const int d = 3, n = 3;
    const Vector psi = util::random_state(d, rng);
    const Matrix W = static_cast<double>(d) * psi * psi.adjoint() - Matrix::Identity(d, d);
    const LocalOperator pair(d, 2, Matrix(Eigen::kroneckerProduct(W, W)));
    std::uniform_real_distribution<double> u(-2, 2);
    ManyBodyOperator H = embed(pair, {0, 1}, n) * cxd(u(rng)) + embed(pair, {1, 2}, n) * cxd(u(rng)) +
                         embed(pair, {0, 2}, n) * cxd(u(rng));
    std::vector<Matrix> locals;
    for (int s = 0; s < n; ++s) {
        const Matrix M = util::random_hermitian(d, rng);
        locals.push_back(M);
        H = H + embed(LocalOperator(d, 1, M), {s}, n);
    }
    const auto us = stoquastic_witness(locals, psi);
    Matrix rot = Matrix::Identity(1, 1);
    for (int s = 0; s < n; ++s) rot = Eigen::kroneckerProduct(rot, us[s]).eval();
    const Matrix rotated = rot * H.dense() * rot.adjoint();
    const StoquasticCheck chk = verify_stoquastic(rotated, 1e-10);
    INFO("worst off-diagonal " << chk.max_offdiag_real << " imag " << chk.max_offdiag_imag);
    REQUIRE(chk.ok);
}
