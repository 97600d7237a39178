// many_body.hpp — Operators on n qudits: dense/sparse storage, tensor placement,
// partial traces, vector application and spectral norms.

#pragma once

#include "gadgetforge/core/local_operator.hpp"
#include "gadgetforge/core/types.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

namespace gadgetforge {

using SparseMatrix = Eigen::SparseMatrix<cxd>;
using Triplet = Eigen::Triplet<cxd>;

// Hermitian (by use, not by type) operator on (C^d)^{⊗n}. Storage is dense up
// to a configurable dimension and coordinate-sparse beyond it. Values are
// immutable after construction; all operations return new objects.
class ManyBodyOperator {
public:
    ManyBodyOperator(int n_sites, int local_dim, Matrix dense)
        : n_(n_sites), d_(local_dim), dim_(pow_index(local_dim, n_sites)), dense_(std::move(dense)) {
        if (dense_->rows() != dim_ || dense_->cols() != dim_)
            throw std::invalid_argument("ManyBodyOperator: dense matrix dimension mismatch");
    }

    ManyBodyOperator(int n_sites, int local_dim, SparseMatrix sparse)
        : n_(n_sites), d_(local_dim), dim_(pow_index(local_dim, n_sites)), sparse_(std::move(sparse)) {
        if (sparse_->rows() != dim_ || sparse_->cols() != dim_)
            throw std::invalid_argument("ManyBodyOperator: sparse matrix dimension mismatch");
    }

    static ManyBodyOperator zero(int n, int d, Index dense_limit = kDefaultDenseLimit) {
        const Index dim = pow_index(d, n);
        if (dim <= dense_limit) return ManyBodyOperator(n, d, Matrix::Zero(dim, dim));
        return ManyBodyOperator(n, d, SparseMatrix(dim, dim));
    }

    static ManyBodyOperator identity(int n, int d, Index dense_limit = kDefaultDenseLimit) {
        const Index dim = pow_index(d, n);
        if (dim <= dense_limit) return ManyBodyOperator(n, d, Matrix::Identity(dim, dim));
        SparseMatrix s(dim, dim);
        s.setIdentity();
        return ManyBodyOperator(n, d, std::move(s));
    }

    static ManyBodyOperator from_triplets(int n, int d, const std::vector<Triplet>& ts) {
        const Index dim = pow_index(d, n);
        SparseMatrix s(dim, dim);
        s.setFromTriplets(ts.begin(), ts.end());
        return ManyBodyOperator(n, d, std::move(s));
    }

    int n_sites() const { return n_; }
    int local_dim() const { return d_; }
    Index dim() const { return dim_; }
    bool is_dense() const { return dense_.has_value(); }

    const Matrix& dense() const {
        if (!dense_) throw std::runtime_error("ManyBodyOperator: operator is stored sparse");
        return *dense_;
    }
    const SparseMatrix& sparse() const {
        if (!sparse_) throw std::runtime_error("ManyBodyOperator: operator is stored dense");
        return *sparse_;
    }

    Matrix to_dense_matrix() const {
        if (dense_) return *dense_;
        return Matrix(*sparse_);
    }

    ManyBodyOperator to_sparse() const {
        if (sparse_) return *this;
        return ManyBodyOperator(n_, d_, SparseMatrix(dense_->sparseView(1.0, 0.0)));
    }

    Vector apply(const Vector& v) const {
        if (v.size() != dim_) throw std::invalid_argument("apply: vector dimension mismatch");
        if (dense_) return (*dense_) * v;
        return (*sparse_) * v;
    }

    Matrix apply_columns(const Matrix& cols) const {
        if (cols.rows() != dim_) throw std::invalid_argument("apply_columns: dimension mismatch");
        if (dense_) return (*dense_) * cols;
        return (*sparse_) * cols;
    }

    cxd trace() const {
        if (dense_) return dense_->trace();
        cxd t = 0;
        for (int k = 0; k < sparse_->outerSize(); ++k)
            for (SparseMatrix::InnerIterator it(*sparse_, k); it; ++it)
                if (it.row() == it.col()) t += it.value();
        return t;
    }

    double max_abs_entry() const {
        if (dense_) return max_abs(*dense_);
        double m = 0;
        for (int k = 0; k < sparse_->outerSize(); ++k)
            for (SparseMatrix::InnerIterator it(*sparse_, k); it; ++it)
                m = std::max(m, std::abs(it.value()));
        return m;
    }

    bool hermitian(double tolerance = tol::hermiticity) const {
        if (dense_) return is_hermitian(*dense_, tolerance);
        SparseMatrix diff = *sparse_ - SparseMatrix(sparse_->adjoint());
        double m = 0;
        for (int k = 0; k < diff.outerSize(); ++k)
            for (SparseMatrix::InnerIterator it(diff, k); it; ++it)
                m = std::max(m, std::abs(it.value()));
        return m <= tolerance * std::max(1.0, max_abs_entry());
    }

    ManyBodyOperator operator+(const ManyBodyOperator& o) const {
        require_same_shape(o);
        if (dense_ && o.dense_) return ManyBodyOperator(n_, d_, *dense_ + *o.dense_);
        if (!dense_ && !o.dense_) return ManyBodyOperator(n_, d_, SparseMatrix(*sparse_ + *o.sparse_));
        // mixed: keep sparse only if both were sparse
        return ManyBodyOperator(n_, d_, to_dense_matrix() + o.to_dense_matrix());
    }
    ManyBodyOperator operator-(const ManyBodyOperator& o) const { return *this + (o * cxd(-1.0)); }
    ManyBodyOperator operator*(cxd a) const {
        if (dense_) return ManyBodyOperator(n_, d_, Matrix(a * (*dense_)));
        return ManyBodyOperator(n_, d_, SparseMatrix(a * (*sparse_)));
    }
    friend ManyBodyOperator operator*(cxd a, const ManyBodyOperator& o) { return o * a; }

    // Operator product (dense path only; sparse callers use apply()).
    ManyBodyOperator operator*(const ManyBodyOperator& o) const {
        require_same_shape(o);
        if (!dense_ || !o.dense_) return ManyBodyOperator(n_, d_, SparseMatrix(to_sparse().sparse() * o.to_sparse().sparse()));
        return ManyBodyOperator(n_, d_, Matrix((*dense_) * (*o.dense_)));
    }

    ManyBodyOperator adjoint() const {
        if (dense_) return ManyBodyOperator(n_, d_, Matrix(dense_->adjoint()));
        return ManyBodyOperator(n_, d_, SparseMatrix(sparse_->adjoint()));
    }

private:
    void require_same_shape(const ManyBodyOperator& o) const {
        if (n_ != o.n_ || d_ != o.d_) throw std::invalid_argument("ManyBodyOperator: shape mismatch");
    }

    int n_;
    int d_;
    Index dim_;
    std::optional<Matrix> dense_;
    std::optional<SparseMatrix> sparse_;
};

// ------------------------------- tensor placement ---------------------------

namespace detail {

// Offsets contributed by the sites not being acted on: one entry per pattern
// of "rest" digits, in a fixed scan order.
inline std::vector<Index> rest_offsets(const std::vector<int>& sites, int n, int d) {
    std::vector<Index> stride(n);
    for (int s = 0; s < n; ++s) stride[s] = pow_index(d, n - 1 - s);
    std::vector<int> rest;
    for (int s = 0; s < n; ++s)
        if (std::find(sites.begin(), sites.end(), s) == sites.end()) rest.push_back(s);
    const Index m = pow_index(d, static_cast<int>(rest.size()));
    std::vector<Index> off(m, 0);
    for (Index p = 0; p < m; ++p) {
        Index q = p;
        for (int i = static_cast<int>(rest.size()) - 1; i >= 0; --i) {
            off[p] += (q % d) * stride[rest[i]];
            q /= d;
        }
    }
    return off;
}

inline void check_embed_args(const LocalOperator& op, const std::vector<int>& sites, int n) {
    if (static_cast<int>(sites.size()) != op.arity())
        throw std::invalid_argument("embed: site count must equal operator arity");
    std::vector<int> sorted = sites;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("embed: sites must be distinct");
    if (sorted.front() < 0 || sorted.back() >= n)
        throw std::invalid_argument("embed: site index out of range");
}

}  // namespace detail

// Place a k-site operator on the named sites (order-sensitive), identity on
// the rest. Output is sparse when d^n exceeds dense_limit.
inline ManyBodyOperator embed(const LocalOperator& op, const std::vector<int>& sites, int n,
                              Index dense_limit = kDefaultDenseLimit) {
    detail::check_embed_args(op, sites, n);
    const int d = op.local_dim();
    const int k = op.arity();
    const Index dim = pow_index(d, n);
    const Index dk = op.dim();

    std::vector<Index> stride(n);
    for (int s = 0; s < n; ++s) stride[s] = pow_index(d, n - 1 - s);
    // base index of a k-digit pattern placed on the chosen sites
    auto base = [&](Index pattern) {
        Index b = 0, q = pattern;
        for (int i = k - 1; i >= 0; --i) {
            b += (q % d) * stride[sites[i]];
            q /= d;
        }
        return b;
    };
    std::vector<Index> row_base(dk), col_base(dk);
    for (Index p = 0; p < dk; ++p) row_base[p] = col_base[p] = base(p);
    const std::vector<Index> rest = detail::rest_offsets(sites, n, d);

    const Matrix& m = op.matrix();
    if (dim <= dense_limit) {
        Matrix out = Matrix::Zero(dim, dim);
        for (Index r = 0; r < dk; ++r)
            for (Index c = 0; c < dk; ++c) {
                const cxd v = m(r, c);
                if (v == cxd(0)) continue;
                for (Index off : rest) out(row_base[r] + off, col_base[c] + off) += v;
            }
        return ManyBodyOperator(n, d, std::move(out));
    }
    std::vector<Triplet> ts;
    ts.reserve(static_cast<std::size_t>(dk) * dk);
    for (Index r = 0; r < dk; ++r)
        for (Index c = 0; c < dk; ++c) {
            const cxd v = m(r, c);
            if (v == cxd(0)) continue;
            for (Index off : rest) ts.emplace_back(row_base[r] + off, col_base[c] + off, v);
        }
    return ManyBodyOperator::from_triplets(n, d, ts);
}

// Apply embed(op, sites) to a state vector without materialising the operator.
inline Vector apply_embedded(const Matrix& op, const std::vector<int>& sites, int n, int d, const Vector& x) {
    const int k = static_cast<int>(sites.size());
    const Index dk = op.rows();
    if (op.cols() != dk || dk != pow_index(d, k)) throw std::invalid_argument("apply_embedded: bad operator shape");
    if (x.size() != pow_index(d, n)) throw std::invalid_argument("apply_embedded: vector dimension mismatch");
    std::vector<Index> stride(n);
    for (int s = 0; s < n; ++s) stride[s] = pow_index(d, n - 1 - s);
    std::vector<Index> base(dk);
    for (Index p = 0; p < dk; ++p) {
        Index b = 0, q = p;
        for (int i = k - 1; i >= 0; --i) {
            b += (q % d) * stride[sites[i]];
            q /= d;
        }
        base[p] = b;
    }
    const std::vector<Index> rest = detail::rest_offsets(sites, n, d);
    Vector y = Vector::Zero(x.size());
    for (Index off : rest)
        for (Index r = 0; r < dk; ++r) {
            cxd acc = 0;
            for (Index c = 0; c < dk; ++c) {
                const cxd v = op(r, c);
                if (v != cxd(0)) acc += v * x[base[c] + off];
            }
            if (acc != cxd(0)) y[base[r] + off] += acc;
        }
    return y;
}

// ------------------------------- partial trace -------------------------------

inline ManyBodyOperator partial_trace(const ManyBodyOperator& H, int site) {
    const int n = H.n_sites();
    const int d = H.local_dim();
    if (site < 0 || site >= n) throw std::invalid_argument("partial_trace: invalid site index");
    if (n < 2) throw std::invalid_argument("partial_trace: need at least two sites");
    const Index left = pow_index(d, site);
    const Index right = pow_index(d, n - 1 - site);
    const Index dout = left * right;
    const Matrix Hm = H.to_dense_matrix();
    Matrix out = Matrix::Zero(dout, dout);
    for (Index a = 0; a < left; ++a)
        for (Index b = 0; b < right; ++b)
            for (Index a2 = 0; a2 < left; ++a2)
                for (Index b2 = 0; b2 < right; ++b2) {
                    cxd acc = 0;
                    for (Index q = 0; q < d; ++q)
                        acc += Hm((a * d + q) * right + b, (a2 * d + q) * right + b2);
                    out(a * right + b, a2 * right + b2) = acc;
                }
    return ManyBodyOperator(n - 1, d, std::move(out));
}

// ------------------------------- extremal eigenvalues ------------------------

struct LanczosOptions {
    int max_iterations = 300;
    double tolerance = 1e-12;
    std::uint64_t seed = 12345;
};

struct LanczosResult {
    double value = 0.0;
    Vector vector;
    double residual = 0.0;
    bool converged = false;
    int iterations = 0;
};

// Largest-algebraic eigenpair of a Hermitian operator given by its action.
// Full reorthogonalisation; intended for the moderate dimensions used here.
template <typename ApplyFn>
LanczosResult lanczos_extreme(ApplyFn&& apply, Index dim, bool largest, const LanczosOptions& opts = {}) {
    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> g;
    Vector v = Vector::NullaryExpr(dim, [&](Index) { return cxd(g(rng), g(rng)); });
    v.normalize();
    std::vector<Vector> basis;
    std::vector<double> alpha, beta;
    LanczosResult res;
    Vector w;
    for (int it = 0; it < std::min<Index>(opts.max_iterations, dim); ++it) {
        basis.push_back(v);
        w = apply(v);
        double a = std::real(v.dot(w));
        alpha.push_back(a);
        w -= a * v;
        if (it > 0) w -= beta.back() * basis[it - 1];
        for (const Vector& b : basis) w -= b.dot(w) * b;  // full reorthogonalisation
        const double bnorm = w.norm();

        // Rayleigh-Ritz on the current Krylov space
        const int m = static_cast<int>(alpha.size());
        Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            T(i, i) = alpha[i];
            if (i + 1 < m) T(i, i + 1) = T(i + 1, i) = beta[i];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
        const int pick = largest ? m - 1 : 0;
        const double theta = es.eigenvalues()(pick);
        const double rwitz = bnorm * std::abs(es.eigenvectors()(m - 1, pick));
        res.value = theta;
        res.residual = rwitz;
        res.iterations = it + 1;
        if (rwitz <= opts.tolerance * std::max(1.0, std::abs(theta)) || bnorm < 1e-14 || it + 1 >= dim) {
            Vector ritz = Vector::Zero(dim);
            for (int i = 0; i < m; ++i) ritz += es.eigenvectors()(i, pick) * basis[i];
            ritz.normalize();
            res.vector = ritz;
            res.converged = rwitz <= 1e-8 * std::max(1.0, std::abs(theta)) || bnorm < 1e-14;
            return res;
        }
        beta.push_back(bnorm);
        v = w / bnorm;
    }
    res.converged = false;
    return res;
}

// Spectral norm (largest |eigenvalue|) of a Hermitian operator.
inline double operator_norm(const ManyBodyOperator& H, const LanczosOptions& opts = {}) {
    if (!H.hermitian()) throw std::invalid_argument("operator_norm: operator must be Hermitian");
    if (H.is_dense()) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(H.dense(), Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success) throw std::runtime_error("operator_norm: eigensolver failed");
        return std::max(std::abs(es.eigenvalues().minCoeff()), std::abs(es.eigenvalues().maxCoeff()));
    }
    auto apply = [&](const Vector& v) { return H.apply(v); };
    LanczosResult hi = lanczos_extreme(apply, H.dim(), true, opts);
    LanczosResult lo = lanczos_extreme(apply, H.dim(), false, opts);
    if (!hi.converged || !lo.converged)
        throw std::runtime_error("operator_norm: Lanczos did not converge (residual " +
                                 std::to_string(std::max(hi.residual, lo.residual)) + ")");
    return std::max(std::abs(hi.value), std::abs(lo.value));
}

}  // namespace gadgetforge
