#include "gadgetforge/core/basis.hpp"
#include "gadgetforge/core/many_body.hpp"
#include "gadgetforge/core/spectral.hpp"
#include "gadgetforge/core/states.hpp"
#include "gadgetforge/util/rng.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include "catch2/catch_amalgamated.hpp"

using namespace gadgetforge;

TEST_CASE("gell_mann_basis: qubit case reduces to Pauli halves", "[basis]") {
    const HermitianBasis b = gell_mann_basis(2);
    REQUIRE(b.size() == 3);
    REQUIRE(max_abs(b.elements[0] - pauli_x() / 2.0) < 1e-15);
    REQUIRE(max_abs(b.elements[1] - pauli_y() / 2.0) < 1e-15);
    REQUIRE(max_abs(b.elements[2] - pauli_z() / 2.0) < 1e-15);
}

TEST_CASE("gell_mann_basis: trace normalisation and Casimir sum", "[basis]") {
    for (int d = 2; d <= 6; ++d) {
        const HermitianBasis b = gell_mann_basis(d);
        REQUIRE(b.size() == d * d - 1);
        Matrix sum = Matrix::Zero(d, d);
        for (const Matrix& T : b.elements) {
            REQUIRE(std::abs(T.trace()) < 1e-14);
            sum += T * T;
        }
        const double expect = (d * d - 1) / (2.0 * d);
        REQUIRE(max_abs(sum - expect * Matrix::Identity(d, d)) < 1e-13);
    }
}

TEST_CASE("gell_mann_basis: d=3 pair traces", "[basis]") {
    const HermitianBasis b = gell_mann_basis(3);
    for (int a = 0; a < 8; ++a)
        for (int c = 0; c < 8; ++c) {
            const cxd t = (b.elements[a] * b.elements[c]).trace();
            const double expect = (a == c) ? 0.5 : 0.0;
            REQUIRE(std::abs(t - expect) < 1e-14);
        }
}

TEST_CASE("gell_mann_basis: structure constants reconstruct commutators", "[basis]") {
    for (int d : {2, 3, 4}) {
        const HermitianBasis b = gell_mann_basis(d);
        const int m = b.size();
        double worst = 0;
        for (int a = 0; a < m; ++a)
            for (int c = 0; c < m; ++c) {
                Matrix comm = b.elements[a] * b.elements[c] - b.elements[c] * b.elements[a];
                for (int e = 0; e < m; ++e) comm -= cxd(0, b.f(a, c, e)) * b.elements[e];
                worst = std::max(worst, max_abs(comm));
            }
        REQUIRE(worst <= 1e-12);
        // full antisymmetry
        for (int a = 0; a < m; ++a)
            for (int c = 0; c < m; ++c)
                for (int e = 0; e < m; ++e) {
                    REQUIRE(b.f(a, c, e) == Catch::Approx(-b.f(c, a, e)).margin(1e-12));
                    REQUIRE(b.f(a, c, e) == Catch::Approx(-b.f(a, e, c)).margin(1e-12));
                }
        if (m > 6) break;  // antisymmetry loop is O(m^3); full check for d=2 only
    }
}

TEST_CASE("gell_mann_basis rejects d < 2", "[basis]") {
    REQUIRE_THROWS_AS(gell_mann_basis(1), std::invalid_argument);
}

TEST_CASE("levi_civita contraction identity (exact integers)", "[basis]") {
    for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
            for (int e = 0; e < 3; ++e)
                for (int f = 0; f < 3; ++f) {
                    int lhs = 0;
                    for (int a = 0; a < 3; ++a) lhs += levi_civita(a, b, c) * levi_civita(a, e, f);
                    const int rhs = (b == e ? 1 : 0) * (c == f ? 1 : 0) - (b == f ? 1 : 0) * (c == e ? 1 : 0);
                    REQUIRE(lhs == rhs);
                }
}

TEST_CASE("spin_operators: d=3 explicit matrices", "[basis]") {
    const auto S = spin_operators(3);
    Matrix X3(3, 3), Z3(3, 3);
    X3 << 0, 1, 0, 1, 0, 1, 0, 1, 0;
    X3 /= std::sqrt(2.0);
    Matrix Y3(3, 3);
    Y3 << cxd(0, 0), cxd(0, -1), cxd(0, 0), cxd(0, 1), cxd(0, 0), cxd(0, -1), cxd(0, 0), cxd(0, 1), cxd(0, 0);
    Y3 /= std::sqrt(2.0);
    Z3 << 1, 0, 0, 0, 0, 0, 0, 0, -1;
    REQUIRE(max_abs(S[0] - X3) < 1e-15);
    REQUIRE(max_abs(S[1] - Y3) < 1e-15);
    REQUIRE(max_abs(S[2] - Z3) < 1e-15);
}

TEST_CASE("spin_operators: qubit case and Casimir value", "[basis]") {
    const auto S2 = spin_operators(2);
    REQUIRE(max_abs(S2[0] - pauli_x() / 2.0) < 1e-15);
    REQUIRE(max_abs(S2[1] - pauli_y() / 2.0) < 1e-15);
    REQUIRE(max_abs(S2[2] - pauli_z() / 2.0) < 1e-15);

    const auto S5 = spin_operators(5);
    Matrix cas = Matrix::Zero(5, 5);
    for (const Matrix& s : S5) cas += s * s;
    REQUIRE(max_abs(cas - 6.0 * Matrix::Identity(5, 5)) < 1e-13);

    REQUIRE_THROWS_AS(spin_operators(1), std::invalid_argument);
}

TEST_CASE("spin_operators satisfy su(2) commutation relations", "[basis]") {
    for (int d = 2; d <= 6; ++d) {
        const auto S = spin_operators(d);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                Matrix comm = S[a] * S[b] - S[b] * S[a];
                for (int c = 0; c < 3; ++c) comm -= cxd(0, levi_civita(a, b, c)) * S[c];
                REQUIRE(max_abs(comm) < 1e-13);
            }
    }
}

TEST_CASE("embed: single-site placement", "[embed]") {
    const LocalOperator Z(2, 1, pauli_z());
    const ManyBodyOperator op = embed(Z, {0}, 2);
    const Matrix expect = Eigen::kroneckerProduct(pauli_z(), Matrix::Identity(2, 2));
    REQUIRE(max_abs(op.dense() - expect) < 1e-15);
}

TEST_CASE("embed: site order respected (Kronecker bookkeeping oracle)", "[embed]") {
    util::Rng rng(2024);
    const Matrix A = util::random_hermitian(2, rng);
    const Matrix B = util::random_hermitian(2, rng);
    const LocalOperator AB(2, 2, Matrix(Eigen::kroneckerProduct(A, B)));
    // A⊗B placed on (2,0) of three qubits equals B⊗I⊗A entrywise
    const ManyBodyOperator op = embed(AB, {2, 0}, 3);
    const Matrix expect =
        Eigen::kroneckerProduct(B, Eigen::kroneckerProduct(Matrix::Identity(2, 2), A).eval()).eval();
    REQUIRE(max_abs(op.dense() - expect) < 1e-14);
}

TEST_CASE("embed: swap-symmetric operators are order-insensitive", "[embed]") {
    util::Rng rng(7);
    const Matrix A = util::random_hermitian(3, rng);
    const Matrix sym = Eigen::kroneckerProduct(A, A);
    const LocalOperator h(3, 2, sym);
    const ManyBodyOperator a = embed(h, {0, 1}, 2);
    const ManyBodyOperator b = embed(h, {1, 0}, 2);
    REQUIRE(max_abs(a.dense() - b.dense()) < 1e-14);
}

TEST_CASE("embed: error cases", "[embed]") {
    const LocalOperator Z(2, 1, pauli_z());
    REQUIRE_THROWS_AS(embed(Z, {0, 1}, 2), std::invalid_argument);  // arity mismatch
    REQUIRE_THROWS_AS(embed(Z, {3}, 2), std::invalid_argument);     // out of range
    const LocalOperator ZZ(2, 2, Matrix(Eigen::kroneckerProduct(pauli_z(), pauli_z())));
    REQUIRE_THROWS_AS(embed(ZZ, {1, 1}, 3), std::invalid_argument);  // site collision
}

TEST_CASE("embed is a homomorphism on fixed site lists", "[embed][property]") {
    util::Rng rng(11);
    for (int d : {2, 3}) {
        for (int trial = 0; trial < 4; ++trial) {
            const Index D = static_cast<Index>(d) * d;
            const Matrix A = util::random_gaussian(D, D, rng);
            const Matrix B = util::random_gaussian(D, D, rng);
            const LocalOperator a(d, 2, A, false), b(d, 2, B, false), ab(d, 2, Matrix(A * B), false);
            const std::vector<int> sites = {2, 0};
            const ManyBodyOperator lhs = embed(ab, sites, 3);
            const ManyBodyOperator rhs = embed(a, sites, 3) * embed(b, sites, 3);
            REQUIRE(max_abs(lhs.dense() - rhs.dense()) < 1e-12 * std::max(1.0, rhs.max_abs_entry()));
        }
    }
}

TEST_CASE("embed falls back to sparse storage above the dense limit", "[embed][sparse]") {
    const LocalOperator Z(2, 1, pauli_z());
    const ManyBodyOperator op = embed(Z, {4}, 13);  // dim 8192 > 4096
    REQUIRE_FALSE(op.is_dense());
    REQUIRE(op.dim() == 8192);
    // agreement with the dense construction on a smaller example
    const ManyBodyOperator small_sparse = embed(Z, {1}, 3, /*dense_limit=*/1);
    const ManyBodyOperator small_dense = embed(Z, {1}, 3);
    REQUIRE_FALSE(small_sparse.is_dense());
    REQUIRE(max_abs(small_sparse.to_dense_matrix() - small_dense.dense()) < 1e-15);
}

TEST_CASE("apply_embedded matches embed on random states", "[embed][sparse]") {
    util::Rng rng(5);
    const Matrix A = util::random_hermitian(9, rng);
    const LocalOperator op(3, 2, A);
    const ManyBodyOperator full = embed(op, {3, 1}, 4);
    const Vector x = util::random_state(full.dim(), rng);
    const Vector y1 = full.apply(x);
    const Vector y2 = apply_embedded(A, {3, 1}, 4, 3, x);
    REQUIRE((y1 - y2).norm() < 1e-12);
}

TEST_CASE("spectral: spin-1 Heisenberg spectrum {-2,-1,1} with dims {1,3,5}", "[spectral]") {
    const auto S = spin_operators(3);
    Matrix h = Matrix::Zero(9, 9);
    for (const Matrix& s : S) h += Eigen::kroneckerProduct(s, s);
    const SpectralDecomposition dec = spectral(h);
    REQUIRE(dec.clusters.size() == 3);
    REQUIRE(dec.cluster_dim(0) == 1);
    REQUIRE(dec.cluster_dim(1) == 3);
    REQUIRE(dec.cluster_dim(2) == 5);
    REQUIRE(dec.eigenvalues(0) == Catch::Approx(-2.0).margin(1e-12));
    REQUIRE(dec.eigenvalues(1) == Catch::Approx(-1.0).margin(1e-12));
    REQUIRE(dec.eigenvalues(8) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("spectral: identity has a single cluster", "[spectral]") {
    const SpectralDecomposition dec = spectral(Matrix::Identity(7, 7));
    REQUIRE(dec.clusters.size() == 1);
    REQUIRE(dec.eigenvalues(0) == Catch::Approx(1.0));
}

TEST_CASE("spectral: SU(2) two-site Casimir clusters match 1,3,5,7 at d=4", "[spectral]") {
    const int d = 4;
    const auto S = spin_operators(d);
    Matrix cas = Matrix::Zero(16, 16);
    for (const Matrix& s : S) {
        const Matrix tot = Eigen::kroneckerProduct(s, Matrix::Identity(d, d)).eval() +
                           Eigen::kroneckerProduct(Matrix::Identity(d, d), s).eval();
        cas += tot * tot;
    }
    const SpectralDecomposition dec = spectral(cas);
    REQUIRE(dec.clusters.size() == 4);
    std::vector<Index> dims;
    for (std::size_t i = 0; i < dec.clusters.size(); ++i) dims.push_back(dec.cluster_dim(i));
    REQUIRE(dims == std::vector<Index>{1, 3, 5, 7});
}

TEST_CASE("spectral reconstruction on random Hermitian inputs", "[spectral][property]") {
    util::Rng rng(42);
    for (Index dim : {16, 81, 729}) {
        const Matrix H = util::random_hermitian(dim, rng, 3.0);
        const SpectralDecomposition dec = spectral(H);
        const Matrix rec =
            dec.eigenvectors * dec.eigenvalues.asDiagonal().toDenseMatrix().cast<cxd>() * dec.eigenvectors.adjoint();
        const double hnorm = std::max(std::abs(dec.eigenvalues(0)), std::abs(dec.eigenvalues(dim - 1)));
        REQUIRE(max_abs(rec - H) <= 1e-10 * std::max(1.0, hnorm));
    }
}

TEST_CASE("spectral rejects non-Hermitian input", "[spectral]") {
    Matrix bad(2, 2);
    bad << 0, 1, 0, 0;
    REQUIRE_THROWS_AS(spectral(bad), std::invalid_argument);
}

TEST_CASE("partial_trace: product operators and tracelessness", "[ptrace]") {
    util::Rng rng(3);
    const Matrix A = util::random_hermitian(3, rng);
    const Matrix B = util::random_hermitian(3, rng);
    const LocalOperator AB(3, 2, Matrix(Eigen::kroneckerProduct(A, B)));
    const ManyBodyOperator op = embed(AB, {0, 1}, 2);

    const ManyBodyOperator trB = partial_trace(op, 1);
    REQUIRE(max_abs(trB.dense() - B.trace() * A) < 1e-12);
    const ManyBodyOperator trA = partial_trace(op, 0);
    REQUIRE(max_abs(trA.dense() - A.trace() * B) < 1e-12);
    REQUIRE(std::abs(op.trace() - trA.trace()) < 1e-10);

    // T^a ⊗ T^b traces to zero over either site
    const HermitianBasis basis = gell_mann_basis(3);
    const LocalOperator TT(3, 2, Matrix(Eigen::kroneckerProduct(basis.elements[1], basis.elements[5])));
    const ManyBodyOperator t2 = embed(TT, {0, 1}, 2);
    REQUIRE(partial_trace(t2, 0).max_abs_entry() < 1e-14);
    REQUIRE(partial_trace(t2, 1).max_abs_entry() < 1e-14);

    REQUIRE_THROWS_AS(partial_trace(op, 5), std::invalid_argument);
}

TEST_CASE("partial_trace: spin-1 Heisenberg traces to zero", "[ptrace]") {
    const auto S = spin_operators(3);
    Matrix h = Matrix::Zero(9, 9);
    for (const Matrix& s : S) h += Eigen::kroneckerProduct(s, s);
    const ManyBodyOperator op(2, 3, h);
    REQUIRE(partial_trace(op, 0).max_abs_entry() < 1e-14);
}

TEST_CASE("operator_norm: dense examples", "[norm]") {
    REQUIRE(operator_norm(ManyBodyOperator::identity(2, 2)) == Catch::Approx(1.0));
    const auto S = spin_operators(3);
    Matrix h = Matrix::Zero(9, 9);
    for (const Matrix& s : S) h += Eigen::kroneckerProduct(s, s);
    REQUIRE(operator_norm(ManyBodyOperator(2, 3, h)) == Catch::Approx(2.0).margin(1e-12));
}

TEST_CASE("operator_norm: sparse path agrees with the embedded local norm", "[norm][sparse]") {
    util::Rng rng(9);
    const Matrix A = util::random_hermitian(4, rng);
    const LocalOperator op(2, 2, A);
    const ManyBodyOperator big = embed(op, {3, 7}, 13);  // 8192-dim, sparse
    REQUIRE_FALSE(big.is_dense());
    Eigen::SelfAdjointEigenSolver<Matrix> es(A, Eigen::EigenvaluesOnly);
    const double expect = std::max(std::abs(es.eigenvalues().minCoeff()), std::abs(es.eigenvalues().maxCoeff()));
    REQUIRE(operator_norm(big) == Catch::Approx(expect).epsilon(1e-8));
}

TEST_CASE("sparse and dense storages agree entrywise", "[storage][property]") {
    util::Rng rng(13);
    const Matrix A = util::random_hermitian(9, rng);
    const LocalOperator op(3, 2, A);
    const ManyBodyOperator dense = embed(op, {1, 2}, 3);
    const ManyBodyOperator sparse = embed(op, {1, 2}, 3, /*dense_limit=*/1);
    REQUIRE(max_abs(dense.dense() - sparse.to_dense_matrix()) < 1e-15);
}

TEST_CASE("LocalOperator rejects non-Hermitian input when flagged", "[local]") {
    Matrix bad(2, 2);
    bad << 0, 1, 0.5, 0;
    REQUIRE_THROWS_AS(LocalOperator(2, 1, bad), std::invalid_argument);
    REQUIRE_NOTHROW(LocalOperator(2, 1, bad, false));
    REQUIRE_THROWS_AS(LocalOperator(2, 2, Matrix::Identity(2, 2)), std::invalid_argument);
}

TEST_CASE("product_state places factors on named sites", "[states]") {
    // |01⟩ on sites (1,0) equals |10⟩ in natural order
    Vector v01 = Vector::Zero(4);
    v01(1) = 1.0;
    const Vector placed = product_state({{v01, {1, 0}}}, 2, 2);
    REQUIRE(std::abs(placed(2) - 1.0) < 1e-15);
}

TEST_CASE("antisymmetric_state: qubit singlet and qutrit six-term state", "[states]") {
    const Vector s2 = antisymmetric_state(2);
    REQUIRE(std::abs(s2(1) - 1.0 / std::sqrt(2.0)) < 1e-14);
    REQUIRE(std::abs(s2(2) + 1.0 / std::sqrt(2.0)) < 1e-14);

    const Vector s3 = antisymmetric_state(3);
    const double c = 1.0 / std::sqrt(6.0);
    auto idx = [](int a, int b, int cc) { return a * 9 + b * 3 + cc; };
    REQUIRE(std::abs(s3(idx(0, 1, 2)) - c) < 1e-14);
    REQUIRE(std::abs(s3(idx(1, 2, 0)) - c) < 1e-14);
    REQUIRE(std::abs(s3(idx(2, 0, 1)) - c) < 1e-14);
    REQUIRE(std::abs(s3(idx(0, 2, 1)) + c) < 1e-14);
    REQUIRE(std::abs(s3(idx(2, 1, 0)) + c) < 1e-14);
    REQUIRE(std::abs(s3(idx(1, 0, 2)) + c) < 1e-14);
}

TEST_CASE("antisymmetric_state flips sign under any transposition", "[states][property]") {
    for (int d : {2, 3, 4}) {
        const Vector psi = antisymmetric_state(d);
        for (int s = 0; s + 1 < d; ++s) {
            std::vector<int> order(d);
            for (int i = 0; i < d; ++i) order[i] = i;
            std::swap(order[s], order[s + 1]);
            const Vector swapped = product_state({{psi, order}}, d, d);
            REQUIRE((swapped + psi).norm() < 1e-12);
        }
    }
}
