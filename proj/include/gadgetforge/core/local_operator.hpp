// local_operator.hpp — Operators on a fixed number of qudits (the few-site building blocks)

#pragma once

#include "gadgetforge/core/types.hpp"

#include <utility>

namespace gadgetforge {

// A (possibly non-Hermitian) operator on (C^d)^{⊗arity}. Hermitian inputs are
// validated rather than symmetrised, so construction bugs surface immediately.
class LocalOperator {
public:
    LocalOperator(int local_dim, int arity, Matrix m, bool require_hermitian = true)
        : local_dim_(local_dim), arity_(arity), matrix_(std::move(m)), hermitian_flag_(require_hermitian) {
        if (local_dim_ < 2) throw std::invalid_argument("LocalOperator: local_dim must be >= 2");
        if (arity_ < 1) throw std::invalid_argument("LocalOperator: arity must be >= 1");
        const Index d = pow_index(local_dim_, arity_);
        if (matrix_.rows() != d || matrix_.cols() != d)
            throw std::invalid_argument("LocalOperator: matrix dimension must equal d^arity");
        if (hermitian_flag_ && !is_hermitian(matrix_))
            throw std::invalid_argument("LocalOperator: matrix is not Hermitian within tolerance");
    }

    int local_dim() const { return local_dim_; }
    int arity() const { return arity_; }
    Index dim() const { return matrix_.rows(); }
    const Matrix& matrix() const { return matrix_; }
    bool hermitian() const { return hermitian_flag_; }

    LocalOperator scaled(double a) const { return LocalOperator(local_dim_, arity_, a * matrix_, hermitian_flag_); }

private:
    int local_dim_;
    int arity_;
    Matrix matrix_;
    bool hermitian_flag_;
};

inline LocalOperator local_identity(int d, int arity = 1) {
    return LocalOperator(d, arity, Matrix::Identity(pow_index(d, arity), pow_index(d, arity)));
}

}  // namespace gadgetforge
