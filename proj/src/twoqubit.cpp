#include "qbat/twoqubit.hpp"

#include <cmath>
#include <stdexcept>

#include "qbat/linalg.hpp"

namespace qbat {

namespace {

constexpr double kConditionTol = 1e-10;

void require_unit_interval(double e) {
    if (!(e >= 0.0 && e <= 1.0)) throw std::invalid_argument("entanglement must lie in [0, 1]");
}

/// Floating-point guard at the interval endpoints.
double clamp_radicand(double v) {
    if (v < 0.0 && v > -1e-14) return 0.0;
    return v;
}

/// 2^{e+1} - 2^{2e}; vanishes at e = 1 and equals 1 at e = 0.
double work_radical(double e) {
    return std::sqrt(clamp_radicand(std::exp2(e + 1.0) - std::exp2(2.0 * e)));
}

/// 1 - (2^e - 1)^2, the same radicand written through the population split.
double split_radical(double e) {
    const double x = std::exp2(e) - 1.0;
    return std::sqrt(clamp_radicand(1.0 - x * x));
}

PureCoefficients corner_coeffs(double c0_sq) {
    return PureCoefficients({cplx(std::sqrt(c0_sq), 0.0), 0.0, 0.0, cplx(std::sqrt(1.0 - c0_sq), 0.0)});
}

}  // namespace

PureCoefficients::PureCoefficients(std::array<cplx, 4> amplitudes) : c(amplitudes) {
    double norm2 = 0.0;
    for (const cplx& v : c) norm2 += std::norm(v);
    if (std::abs(norm2 - 1.0) > 1e-12)
        throw std::invalid_argument("PureCoefficients: amplitudes are not normalized within 1e-12");
}

DensityOperator density_from_coeffs(const PureCoefficients& c) {
    ComplexMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = c.c[i] * std::conj(c.c[j]);
    return DensityOperator::trusted(2, 2, std::move(m));
}

double logneg_pure(const PureCoefficients& c) {
    return std::log2(2.0 * std::abs(c.c[1] * c.c[2] - c.c[0] * c.c[3]) + 1.0);
}

double logneg_general(const DensityOperator& rho) {
    if (rho.dim_a() != 2 || rho.dim_b() != 2)
        throw std::invalid_argument("logneg_general: two-qubit states only");
    const Spectrum s = eig_hermitian(partial_transpose(rho), SpectralOrder::ascending);
    double negative = 0.0;
    for (double v : s.values)
        if (v < 0.0) negative -= v;
    if (negative < 1e-14) return 0.0;
    return std::log2(1.0 + 2.0 * negative);
}

LPClass check_lp_conditions(const PureCoefficients& cs) {
    const cplx c0 = cs.c[0], c1 = cs.c[1], c2 = cs.c[2], c3 = cs.c[3];
    if (std::abs(c0 * std::conj(c2) + c1 * std::conj(c3)) > kConditionTol) return LPClass::not_lp;
    if (std::abs(c0 * std::conj(c1) + c2 * std::conj(c3)) > kConditionTol) return LPClass::not_lp;
    const double n0 = std::norm(c0), n1 = std::norm(c1), n2 = std::norm(c2), n3 = std::norm(c3);
    if (n0 + n1 > n2 + n3 + kConditionTol) return LPClass::not_lp;
    if (n0 + n2 > n1 + n3 + kConditionTol) return LPClass::not_lp;

    const bool z2 = std::abs(c2) <= kConditionTol;
    const bool z3 = std::abs(c3) <= kConditionTol;
    if (z2 && z3) return LPClass::not_lp;  // unreachable: excluded above
    if (z3) return LPClass::case_a;
    if (z2) {
        const bool balanced = std::abs(std::abs(c0) - std::abs(c3)) <= kConditionTol &&
                              std::abs(std::abs(c1) - std::abs(c2)) <= kConditionTol;
        return balanced ? LPClass::case_c : LPClass::case_b;
    }
    return LPClass::case_c;
}

double lp_pure_work(const PureCoefficients& c, const TwoQubitZZ& h) {
    if (check_lp_conditions(c) == LPClass::not_lp)
        throw std::invalid_argument("lp_pure_work: coefficients are not locally passive");
    const double n0 = std::norm(c.c[0]), n1 = std::norm(c.c[1]);
    const double n2 = std::norm(c.c[2]), n3 = std::norm(c.c[3]);
    return (h.eps_a + h.eps_b) * (n0 - n3 + 1.0) + (h.eps_a - h.eps_b) * (n1 - n2);
}

double max_work_lp_pure(double e, const TwoQubitZZ& h) {
    require_unit_interval(e);
    return (h.eps_a + h.eps_b) * (1.0 - work_radical(e));
}

PureCoefficients lp_maximizer_coeffs(double e) {
    require_unit_interval(e);
    return corner_coeffs(0.5 * (1.0 - split_radical(e)));
}

double max_work_pure(double e, const TwoQubitZZ& h) {
    require_unit_interval(e);
    return (h.eps_a + h.eps_b) * (1.0 + work_radical(e));
}

PureCoefficients work_maximizer_coeffs(double e) {
    require_unit_interval(e);
    return corner_coeffs(0.5 * (1.0 + split_radical(e)));
}

double local_work_of_maximizer(double e, const TwoQubitZZ& h) {
    require_unit_interval(e);
    return 2.0 * (h.eps_a + h.eps_b) * work_radical(e);
}

double work_deficit(double e, const TwoQubitZZ& h) {
    return max_work_pure(e, h) - local_work_of_maximizer(e, h);
}

}  // namespace qbat
