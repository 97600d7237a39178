// json_io.hpp — JSON (de)serialisation of operators, matrices and vectors.
//
// Operator schema: {"d": int, "n": int, "entries": [[row, col, re, im], ...]}
// with entries sorted by (row, col); dense alternative {"matrix": [[re, im], ...]}
// in row-major order. Rectangular matrices use {"rows", "cols", "entries"|"matrix"}.

#pragma once

#include "gadgetforge/core/many_body.hpp"
#include "gadgetforge/core/types.hpp"

#include <json.hpp>

#include <algorithm>
#include <vector>

namespace gadgetforge::io {

using nlohmann::json;

inline json operator_to_json(const ManyBodyOperator& op, bool force_entries = true) {
    json j;
    j["d"] = op.local_dim();
    j["n"] = op.n_sites();
    if (!force_entries && op.is_dense()) {
        json m = json::array();
        const Matrix& M = op.dense();
        for (Index r = 0; r < M.rows(); ++r)
            for (Index c = 0; c < M.cols(); ++c) m.push_back({M(r, c).real(), M(r, c).imag()});
        j["matrix"] = std::move(m);
        return j;
    }
    struct Entry {
        Index r, c;
        cxd v;
    };
    std::vector<Entry> entries;
    if (op.is_dense()) {
        const Matrix& M = op.dense();
        for (Index r = 0; r < M.rows(); ++r)
            for (Index c = 0; c < M.cols(); ++c)
                if (M(r, c) != cxd(0)) entries.push_back({r, c, M(r, c)});
    } else {
        const SparseMatrix& S = op.sparse();
        for (int k = 0; k < S.outerSize(); ++k)
            for (SparseMatrix::InnerIterator it(S, k); it; ++it)
                if (it.value() != cxd(0)) entries.push_back({it.row(), it.col(), it.value()});
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.r != b.r ? a.r < b.r : a.c < b.c; });
    json e = json::array();
    for (const Entry& en : entries) e.push_back({en.r, en.c, en.v.real(), en.v.imag()});
    j["entries"] = std::move(e);
    return j;
}

inline ManyBodyOperator operator_from_json(const json& j, Index dense_limit = kDefaultDenseLimit) {
    const int d = j.at("d").get<int>();
    const int n = j.at("n").get<int>();
    const Index dim = pow_index(d, n);
    if (j.contains("matrix")) {
        const auto& m = j.at("matrix");
        if (static_cast<Index>(m.size()) != dim * dim)
            throw std::invalid_argument("operator_from_json: matrix length must be dim^2");
        Matrix M(dim, dim);
        Index k = 0;
        for (Index r = 0; r < dim; ++r)
            for (Index c = 0; c < dim; ++c, ++k) M(r, c) = cxd(m[k][0].get<double>(), m[k][1].get<double>());
        return ManyBodyOperator(n, d, std::move(M));
    }
    const auto& entries = j.at("entries");
    if (dim <= dense_limit) {
        Matrix M = Matrix::Zero(dim, dim);
        for (const auto& e : entries)
            M(e[0].get<Index>(), e[1].get<Index>()) += cxd(e[2].get<double>(), e[3].get<double>());
        return ManyBodyOperator(n, d, std::move(M));
    }
    std::vector<Triplet> ts;
    ts.reserve(entries.size());
    for (const auto& e : entries)
        ts.emplace_back(e[0].get<Index>(), e[1].get<Index>(), cxd(e[2].get<double>(), e[3].get<double>()));
    return ManyBodyOperator::from_triplets(n, d, ts);
}

inline json matrix_to_json(const Matrix& M) {
    json j;
    j["rows"] = M.rows();
    j["cols"] = M.cols();
    json e = json::array();
    for (Index r = 0; r < M.rows(); ++r)
        for (Index c = 0; c < M.cols(); ++c)
            if (M(r, c) != cxd(0)) e.push_back({r, c, M(r, c).real(), M(r, c).imag()});
    j["entries"] = std::move(e);
    return j;
}

inline Matrix matrix_from_json(const json& j) {
    const Index rows = j.at("rows").get<Index>();
    const Index cols = j.at("cols").get<Index>();
    Matrix M = Matrix::Zero(rows, cols);
    if (j.contains("matrix")) {
        const auto& m = j.at("matrix");
        Index k = 0;
        for (Index r = 0; r < rows; ++r)
            for (Index c = 0; c < cols; ++c, ++k) M(r, c) = cxd(m[k][0].get<double>(), m[k][1].get<double>());
        return M;
    }
    for (const auto& e : j.at("entries"))
        M(e[0].get<Index>(), e[1].get<Index>()) = cxd(e[2].get<double>(), e[3].get<double>());
    return M;
}

inline json vector_to_json(const Vector& v) {
    json a = json::array();
    for (Index i = 0; i < v.size(); ++i) a.push_back({v(i).real(), v(i).imag()});
    return a;
}

inline Vector vector_from_json(const json& j) {
    Vector v(static_cast<Index>(j.size()));
    for (Index i = 0; i < v.size(); ++i) v(i) = cxd(j[i][0].get<double>(), j[i][1].get<double>());
    return v;
}

}  // namespace gadgetforge::io
