// young.hpp — Young diagrams and quadratic Casimir eigenvalues of su(N) irreps

#pragma once

#include "gadgetforge/core/types.hpp"

#include <vector>

namespace gadgetforge::rep {

// Irrep of su(N) labelled by a partition (row lengths, non-increasing, at most
// N rows). Column lengths are derived, never supplied.
struct YoungDiagram {
    std::vector<int> rows;
    int N = 0;

    int boxes() const {
        int l = 0;
        for (int r : rows) l += r;
        return l;
    }

    std::vector<int> columns() const {
        std::vector<int> cols;
        if (rows.empty()) return cols;
        cols.resize(rows.front(), 0);
        for (int r : rows)
            for (int c = 0; c < r; ++c) ++cols[c];
        return cols;
    }

    void validate() const {
        if (N < 2) throw std::invalid_argument("YoungDiagram: N must be >= 2");
        if (static_cast<int>(rows.size()) > N) throw std::invalid_argument("YoungDiagram: more than N rows");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i] <= 0) throw std::invalid_argument("YoungDiagram: row lengths must be positive");
            if (i > 0 && rows[i] > rows[i - 1])
                throw std::invalid_argument("YoungDiagram: row lengths must be non-increasing");
        }
    }
};

// c_R = (1/2)[ l (N − l/N) + Σ_i b_i² − Σ_i a_i² ] with b row lengths, a column lengths.
inline double casimir_eigenvalue(const YoungDiagram& y) {
    y.validate();
    const double l = y.boxes();
    double rows_sq = 0, cols_sq = 0;
    for (int b : y.rows) rows_sq += static_cast<double>(b) * b;
    for (int a : y.columns()) cols_sq += static_cast<double>(a) * a;
    return 0.5 * (l * (y.N - l / y.N) + rows_sq - cols_sq);
}

inline YoungDiagram fundamental_diagram(int N) { return {{1}, N}; }

inline YoungDiagram trivial_diagram(int N) { return {std::vector<int>(N, 1), N}; }

inline YoungDiagram adjoint_diagram(int N) {
    std::vector<int> rows(N - 1, 1);
    rows.front() = 2;
    return {rows, N};
}

// su(2) irrep of dimension k: single row of k−1 boxes; the trivial irrep
// (k = 1) carries a full column of two boxes.
inline YoungDiagram su2_diagram(int k) {
    if (k < 1) throw std::invalid_argument("su2_diagram: dimension must be >= 1");
    if (k == 1) return trivial_diagram(2);
    return {{k - 1}, 2};
}

}  // namespace gadgetforge::rep
