#include "gadgetforge/catalog/interactions.hpp"
#include "gadgetforge/core/json_io.hpp"
#include "gadgetforge/util/rng.hpp"

#include "catch2/catch_amalgamated.hpp"

using namespace gadgetforge;
using namespace gadgetforge::io;

TEST_CASE("operator JSON: sparse entries sorted by (row, col)", "[io]") {
    const LocalOperator Z(2, 1, pauli_z());
    const ManyBodyOperator op = embed(Z, {0}, 2, /*dense_limit=*/1);
    const json j = operator_to_json(op);
    REQUIRE(j["d"] == 2);
    REQUIRE(j["n"] == 2);
    const auto& entries = j["entries"];
    for (std::size_t i = 1; i < entries.size(); ++i) {
        const auto r0 = entries[i - 1][0].get<Index>(), c0 = entries[i - 1][1].get<Index>();
        const auto r1 = entries[i][0].get<Index>(), c1 = entries[i][1].get<Index>();
        REQUIRE((r0 < r1 || (r0 == r1 && c0 < c1)));
    }
}

TEST_CASE("operator JSON: bit-exact round trip for exact rational entries", "[io][property]") {
    // entries like ±1, ±1/2, 1/3 times 1 must survive serialisation exactly
    util::Rng rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        Matrix M = Matrix::Zero(9, 9);
        std::uniform_int_distribution<int> num(-6, 6), den(1, 6);
        for (int k = 0; k < 20; ++k) {
            const Index r = std::uniform_int_distribution<Index>(0, 8)(rng);
            const Index c = std::uniform_int_distribution<Index>(0, 8)(rng);
            const double re = static_cast<double>(num(rng)) / den(rng);
            const double im = static_cast<double>(num(rng)) / den(rng);
            M(r, c) = cxd(re, im);
            M(c, r) = std::conj(M(r, c));
        }
        const ManyBodyOperator op(2, 3, M);
        const std::string text = operator_to_json(op).dump();
        const ManyBodyOperator back = operator_from_json(json::parse(text));
        REQUIRE(back.is_dense());
        // bit-exact: compare raw doubles
        for (Index r = 0; r < 9; ++r)
            for (Index c = 0; c < 9; ++c) {
                REQUIRE(back.dense()(r, c).real() == M(r, c).real());
                REQUIRE(back.dense()(r, c).imag() == M(r, c).imag());
            }
    }
}

TEST_CASE("operator JSON: dense matrix form round trips", "[io]") {
    const Matrix h = catalog::heisenberg_sud(3).op.matrix();
    const ManyBodyOperator op(2, 3, h);
    const json j = operator_to_json(op, /*force_entries=*/false);
    REQUIRE(j.contains("matrix"));
    const ManyBodyOperator back = operator_from_json(j);
    REQUIRE(max_abs(back.dense() - h) == 0.0);
}

TEST_CASE("operator JSON: irrational entries round trip bit-exact too", "[io]") {
    const Matrix h = catalog::heisenberg_su2(3).op.matrix();  // 1/sqrt(2) entries
    const ManyBodyOperator op(2, 3, h);
    const std::string text = operator_to_json(op).dump();
    const ManyBodyOperator back = operator_from_json(json::parse(text));
    for (Index r = 0; r < 9; ++r)
        for (Index c = 0; c < 9; ++c) REQUIRE(back.dense()(r, c) == h(r, c));
}

TEST_CASE("rectangular matrix and vector JSON round trips", "[io]") {
    util::Rng rng(9);
    const Matrix V = util::random_unitary(8, rng).leftCols(3);
    const Matrix back = matrix_from_json(matrix_to_json(V));
    REQUIRE(max_abs(back - V) == 0.0);
    const Vector psi = util::random_state(5, rng);
    const Vector vback = vector_from_json(vector_to_json(psi));
    REQUIRE((vback - psi).norm() == 0.0);
}

TEST_CASE("operator JSON: malformed input is rejected", "[io]") {
    json j;
    j["d"] = 2;
    j["n"] = 2;
    j["matrix"] = json::array({{1.0, 0.0}});  // wrong length
    REQUIRE_THROWS_AS(operator_from_json(j), std::invalid_argument);
    json j2;
    j2["d"] = 2;
    REQUIRE_THROWS(operator_from_json(j2));
}
