#pragma once

#include "qbat/operators.hpp"

namespace qbat {

/// Reduced operator on the kept subsystem; preserves the trace.
ComplexMatrix partial_trace(const DensityOperator& rho, Subsystem keep);

/// Transpose of the B indices: entry (ij,kl) -> (il,kj). The result is
/// Hermitian but in general not positive.
ComplexMatrix partial_transpose(const DensityOperator& rho);

/// Cyclic Jacobi eigendecomposition for Hermitian matrices.
///
/// Eigenvalues are sorted per `order`. Each eigenvector has its first
/// nonzero component phase-fixed to be real positive, and eigenvalues equal
/// within tol::degeneracy are ordered by descending magnitude of the first
/// component where the vectors differ. This makes every construction built
/// on top of the spectrum deterministic.
Spectrum eig_hermitian(const HermitianOperator& h, SpectralOrder order);

/// Convenience overload; validates hermiticity of `m` first.
Spectrum eig_hermitian(const ComplexMatrix& m, SpectralOrder order);

}  // namespace qbat
