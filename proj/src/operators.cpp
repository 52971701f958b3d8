#include "qbat/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "qbat/linalg.hpp"

namespace qbat {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
    if (m.rows() != m.cols()) throw std::invalid_argument(std::string(what) + ": matrix must be square");
}

}  // namespace

HermitianOperator::HermitianOperator(ComplexMatrix m) : m_(std::move(m)) {
    require_square(m_, "HermitianOperator");
    if (max_abs_diff(m_, adjoint(m_)) > tol::hermitian)
        throw std::invalid_argument("HermitianOperator: matrix is not Hermitian within 1e-10");
}

UnitaryOperator::UnitaryOperator(ComplexMatrix m) : m_(std::move(m)) {
    require_square(m_, "UnitaryOperator");
    if (max_abs_diff(m_ * adjoint(m_), ComplexMatrix::identity(m_.rows())) > tol::unitary)
        throw std::invalid_argument("UnitaryOperator: U U^dag differs from identity beyond 1e-10");
}

DensityOperator::DensityOperator(std::size_t dim_a, std::size_t dim_b, ComplexMatrix m)
    : dim_a_(dim_a), dim_b_(dim_b), m_(std::move(m)) {
    if (dim_a_ == 0 || dim_b_ == 0) throw std::invalid_argument("DensityOperator: dimensions must be positive");
    require_square(m_, "DensityOperator");
    if (m_.rows() != dim_a_ * dim_b_)
        throw std::invalid_argument("DensityOperator: matrix size does not match dim_a*dim_b");
    if (max_abs_diff(m_, adjoint(m_)) > tol::hermitian)
        throw std::invalid_argument("DensityOperator: matrix is not Hermitian within 1e-10");
    const cplx t = trace(m_);
    if (std::abs(t - cplx(1.0, 0.0)) > tol::trace)
        throw std::invalid_argument("DensityOperator: trace differs from 1 beyond 1e-10");
    const Spectrum s = eig_hermitian(m_, SpectralOrder::ascending);
    if (s.values.front() < -tol::psd)
        throw std::invalid_argument("DensityOperator: smallest eigenvalue below -1e-9, not positive semidefinite");
}

DensityOperator DensityOperator::trusted(std::size_t dim_a, std::size_t dim_b, ComplexMatrix m) {
    DensityOperator rho;
    rho.dim_a_ = dim_a;
    rho.dim_b_ = dim_b;
    rho.m_ = std::move(m);
    return rho;
}

}  // namespace qbat
