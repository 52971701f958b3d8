#include "qbat/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qbat {

ComplexMatrix partial_trace(const DensityOperator& rho, Subsystem keep) {
    const std::size_t da = rho.dim_a();
    const std::size_t db = rho.dim_b();
    const ComplexMatrix& m = rho.matrix();
    if (keep == Subsystem::a) {
        ComplexMatrix out(da, da);
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t k = 0; k < da; ++k)
                for (std::size_t j = 0; j < db; ++j) out(i, k) += m(i * db + j, k * db + j);
        return out;
    }
    ComplexMatrix out(db, db);
    for (std::size_t j = 0; j < db; ++j)
        for (std::size_t l = 0; l < db; ++l)
            for (std::size_t i = 0; i < da; ++i) out(j, l) += m(i * db + j, i * db + l);
    return out;
}

ComplexMatrix partial_transpose(const DensityOperator& rho) {
    const std::size_t da = rho.dim_a();
    const std::size_t db = rho.dim_b();
    const ComplexMatrix& m = rho.matrix();
    ComplexMatrix out(da * db, da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < da; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    out(i * db + l, k * db + j) = m(i * db + j, k * db + l);
    return out;
}

namespace {

double offdiag_max(const ComplexMatrix& a) {
    double v = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) v = std::max(v, std::abs(a(i, j)));
    return v;
}

/// One complex Jacobi rotation zeroing a(p,q); updates a and the
/// accumulated eigenvector matrix v in place.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const cplx apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const cplx phase = apq / mag;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double zeta = (app - aqq) / (2.0 * mag);  // cot(2 theta)
    const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    // J is identity except J(p,p)=c, J(p,q)=-s*phase, J(q,p)=s*conj(phase), J(q,q)=c.
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {  // A <- A J
        const cplx akp = a(k, p);
        const cplx akq = a(k, q);
        a(k, p) = c * akp + s * std::conj(phase) * akq;
        a(k, q) = -s * phase * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {  // A <- J^dag A
        const cplx apk = a(p, k);
        const cplx aqk = a(q, k);
        a(p, k) = c * apk + s * phase * aqk;
        a(q, k) = -s * std::conj(phase) * apk + c * aqk;
    }
    for (std::size_t k = 0; k < n; ++k) {  // V <- V J
        const cplx vkp = v(k, p);
        const cplx vkq = v(k, q);
        v(k, p) = c * vkp + s * std::conj(phase) * vkq;
        v(k, q) = -s * phase * vkp + c * vkq;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
}

void phase_fix_column(ComplexMatrix& v, std::size_t col) {
    for (std::size_t i = 0; i < v.rows(); ++i) {
        const double mag = std::abs(v(i, col));
        if (mag > 1e-12) {
            const cplx ph = std::conj(v(i, col)) / mag;
            for (std::size_t k = 0; k < v.rows(); ++k) v(k, col) *= ph;
            return;
        }
    }
}

/// Tie-break for degenerate eigenvalues: descending magnitude at the first
/// component where the two (phase-fixed) vectors differ.
bool vector_before(const ComplexMatrix& v, std::size_t c1, std::size_t c2) {
    for (std::size_t i = 0; i < v.rows(); ++i) {
        const double m1 = std::abs(v(i, c1));
        const double m2 = std::abs(v(i, c2));
        if (std::abs(m1 - m2) > 1e-12) return m1 > m2;
    }
    return false;
}

}  // namespace

Spectrum eig_hermitian(const HermitianOperator& h, SpectralOrder order) {
    const std::size_t n = h.dim();
    ComplexMatrix a = h.matrix();
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = std::max(1.0, max_abs(a));

    for (int sweep = 0; sweep < 100 && offdiag_max(a) > 1e-15 * scale; ++sweep)
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (std::abs(a(p, q)) > 1e-18 * scale) jacobi_rotate(a, v, p, q);

    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i).real();
    for (std::size_t c = 0; c < n; ++c) phase_fix_column(v, c);

    // Selection sort; a tolerance-based comparator is not a strict weak
    // ordering, so std::sort is not safe here.
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    const double tie = tol::degeneracy * scale;
    const bool asc = order == SpectralOrder::ascending;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::size_t best = i;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dv = values[idx[j]] - values[idx[best]];
            const bool value_before = asc ? dv < -tie : dv > tie;
            const bool tied = std::abs(dv) <= tie;
            if (value_before || (tied && vector_before(v, idx[j], idx[best]))) best = j;
        }
        std::swap(idx[i], idx[best]);
    }

    Spectrum s;
    s.order = order;
    s.values.resize(n);
    s.vectors = ComplexMatrix(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        s.values[c] = values[idx[c]];
        for (std::size_t r = 0; r < n; ++r) s.vectors(r, c) = v(r, idx[c]);
    }
    return s;
}

Spectrum eig_hermitian(const ComplexMatrix& m, SpectralOrder order) {
    return eig_hermitian(HermitianOperator(m), order);
}

}  // namespace qbat
