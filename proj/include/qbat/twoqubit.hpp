#pragma once

#include <array>

#include "qbat/battery.hpp"

namespace qbat {

/// Amplitudes of a two-qubit pure state in the product basis
/// |00>, |01>, |10>, |11>. Must be normalized.
struct PureCoefficients {
    explicit PureCoefficients(std::array<cplx, 4> amplitudes);

    std::array<cplx, 4> c;
};

/// Classification of a pure state against the local-passivity conditions.
/// The three passing classes are distinguished by which of the two
/// low-energy amplitudes vanish: case_a has c3 = 0 (and then necessarily
/// c0 = 0), case_b has c1 = c2 = 0, case_c has none of c2, c3 zero (and
/// then |c0| = |c3|, |c1| = |c2|). The Bell-like boundary point with
/// c1 = c2 = 0 and |c0| = |c3| is classified case_c.
enum class LPClass { case_a, case_b, case_c, not_lp };

DensityOperator density_from_coeffs(const PureCoefficients& c);

/// Logarithmic negativity of the pure state: log2(2|c1 c2 - c0 c3| + 1).
double logneg_pure(const PureCoefficients& c);

/// Logarithmic negativity of an arbitrary two-qubit state via the trace
/// norm of the partial transpose; clamped to zero when the partial
/// transpose is positive.
double logneg_general(const DensityOperator& rho);

LPClass check_lp_conditions(const PureCoefficients& c);

/// Globally extractable work from a pure locally passive state. Throws if
/// the coefficients fail the local-passivity conditions.
double lp_pure_work(const PureCoefficients& c, const TwoQubitZZ& h);

/// Maximum globally extractable work over pure locally passive states with
/// entanglement e.
double max_work_lp_pure(double e, const TwoQubitZZ& h);

/// Coefficients of the pure locally passive state achieving max_work_lp_pure.
PureCoefficients lp_maximizer_coeffs(double e);

/// Maximum globally extractable work over all pure states with entanglement e.
double max_work_pure(double e, const TwoQubitZZ& h);

/// Coefficients of the pure state achieving max_work_pure.
PureCoefficients work_maximizer_coeffs(double e);

/// Locally extractable work from the state achieving max_work_pure.
double local_work_of_maximizer(double e, const TwoQubitZZ& h);

/// max_work_pure(e) - local_work_of_maximizer(e).
double work_deficit(double e, const TwoQubitZZ& h);

}  // namespace qbat
