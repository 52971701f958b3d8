#include "qbat/random.hpp"

#include <cmath>
#include <stdexcept>

namespace qbat {

namespace {

cplx gaussian(Rng& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    const double re = n(rng);
    const double im = n(rng);
    return {re, im};
}

void require_dims(std::size_t dim_a, std::size_t dim_b) {
    if (dim_a < 2 || dim_b < 2) throw std::invalid_argument("random state: subsystem dimensions must be >= 2");
}

}  // namespace

DensityOperator random_pure_state(std::size_t dim_a, std::size_t dim_b, Rng& rng) {
    require_dims(dim_a, dim_b);
    const std::size_t d = dim_a * dim_b;
    std::vector<cplx> psi(d);
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (auto& v : psi) {
            v = gaussian(rng);
            norm2 += std::norm(v);
        }
    } while (norm2 < 1e-12);
    const double inv = 1.0 / std::sqrt(norm2);
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = psi[i] * std::conj(psi[j]) * (inv * inv);
    return DensityOperator::trusted(dim_a, dim_b, std::move(m));
}

DensityOperator random_density(std::size_t dim_a, std::size_t dim_b, Rng& rng) {
    require_dims(dim_a, dim_b);
    const std::size_t d = dim_a * dim_b;
    ComplexMatrix g(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) g(i, j) = gaussian(rng);
    ComplexMatrix m = g * adjoint(g);
    m *= 1.0 / trace(m).real();
    return DensityOperator::trusted(dim_a, dim_b, std::move(m));
}

UnitaryOperator random_unitary(std::size_t dim, Rng& rng) {
    if (dim < 2) throw std::invalid_argument("random_unitary: dimension must be >= 2");
    ComplexMatrix g(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) g(i, j) = gaussian(rng);
    // Modified Gram-Schmidt on columns.
    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            cplx overlap = 0.0;
            for (std::size_t r = 0; r < dim; ++r) overlap += std::conj(g(r, prev)) * g(r, c);
            for (std::size_t r = 0; r < dim; ++r) g(r, c) -= overlap * g(r, prev);
        }
        double norm2 = 0.0;
        for (std::size_t r = 0; r < dim; ++r) norm2 += std::norm(g(r, c));
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t r = 0; r < dim; ++r) g(r, c) *= inv;
    }
    return UnitaryOperator(std::move(g));
}

}  // namespace qbat
