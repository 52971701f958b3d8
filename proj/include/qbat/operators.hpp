#pragma once

#include "qbat/matrix.hpp"

namespace qbat {

/// Validation tolerances. Dimensions stay tiny, so double precision leaves
/// plenty of headroom over all of these.
namespace tol {
inline constexpr double hermitian = 1e-10;
inline constexpr double unitary = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double psd = 1e-9;
/// Eigenvalues closer than this are treated as degenerate.
inline constexpr double degeneracy = 1e-12;
}  // namespace tol

enum class SpectralOrder { ascending, descending };
enum class Subsystem { a, b };

/// Self-adjoint operator; hermiticity is checked at construction.
class HermitianOperator {
public:
    explicit HermitianOperator(ComplexMatrix m);

    std::size_t dim() const { return m_.rows(); }
    const ComplexMatrix& matrix() const { return m_; }

private:
    ComplexMatrix m_;
};

/// Unitary operator; U U^dag = I is checked at construction.
class UnitaryOperator {
public:
    explicit UnitaryOperator(ComplexMatrix m);

    std::size_t dim() const { return m_.rows(); }
    const ComplexMatrix& matrix() const { return m_; }

private:
    ComplexMatrix m_;
};

/// State of a bipartite system: Hermitian, unit trace, positive semidefinite
/// on H_A (x) H_B with composite index i*dim_b + j for |e_i f_j>.
class DensityOperator {
public:
    DensityOperator(std::size_t dim_a, std::size_t dim_b, ComplexMatrix m);

    /// Skips validation; for internal paths where the matrix is a valid
    /// state by construction (projectors, T T^dag / tr, unitary images).
    static DensityOperator trusted(std::size_t dim_a, std::size_t dim_b, ComplexMatrix m);

    std::size_t dim_a() const { return dim_a_; }
    std::size_t dim_b() const { return dim_b_; }
    std::size_t dim() const { return dim_a_ * dim_b_; }
    const ComplexMatrix& matrix() const { return m_; }

private:
    DensityOperator() = default;

    std::size_t dim_a_ = 0;
    std::size_t dim_b_ = 0;
    ComplexMatrix m_;
};

/// Eigendecomposition result. Columns of `vectors` are orthonormal
/// eigenvectors matching `values`, sorted per `order` with the
/// deterministic tie-break described at eig_hermitian().
struct Spectrum {
    std::vector<double> values;
    ComplexMatrix vectors;
    SpectralOrder order = SpectralOrder::ascending;
};

}  // namespace qbat
