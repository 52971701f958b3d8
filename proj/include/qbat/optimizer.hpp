#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qbat/passivity.hpp"
#include "qbat/twoqubit.hpp"

namespace qbat {

enum class StateKind { pure, mixed };
enum class WorkKind { global_work, local_work };
enum class ConstraintKind { none, locally_passive };

/// Multistart Nelder-Mead configuration. penalty_weight = 0 selects the
/// default 1e3 * (eps_a + eps_b); it is the weight of the first penalty
/// stage, later stages scale it up by factors of 100 to squeeze the
/// constraint residual well below entanglement_tol.
struct OptimizerConfig {
    int restarts = 64;
    int max_iters = 2000;
    double simplex_tol = 1e-9;
    double penalty_weight = 0.0;
    double entanglement_tol = 1e-4;
    std::uint64_t seed = 0;

    void validate() const;
};

struct OptimumPoint {
    double work = 0.0;
    std::optional<DensityOperator> state;  // present iff feasible
    double ent_residual = 0.0;
    double lp_residual = 0.0;
    int best_restart = -1;
    long iterations = 0;
    bool feasible = false;
};

/// Maximizes extractable work over two-qubit states with entanglement
/// pinned to `e` by a quadratic penalty (plus, optionally, a local
/// passivity penalty). Returns the raw work of the best feasible restart;
/// `feasible` is false when no restart meets entanglement_tol.
OptimumPoint maximize_work(double e, const TwoQubitZZ& h, StateKind kind, WorkKind work,
                           ConstraintKind constraint, const OptimizerConfig& cfg);

enum class CurveId { gp, g, lbar, deficit, gp_mixed, g_mixed, l_pure };

CurveId curve_from_string(const std::string& name);
std::string curve_to_string(CurveId id);
bool curve_is_numeric(CurveId id);

struct WorkCurvePoint {
    double entanglement = 0.0;
    double value = 0.0;  // in units of the reference energy
    CurveId curve_id = CurveId::gp;
};

struct PointDiagnostics {
    double ent_residual = 0.0;
    double lp_residual = 0.0;
    int best_restart = -1;
    long iterations = 0;
    bool feasible = true;
};

struct SweepResult {
    std::vector<WorkCurvePoint> points;
    std::vector<PointDiagnostics> diagnostics;

    bool all_feasible() const;
};

/// Evaluates one curve on a grid: closed forms for gp / g / lbar / deficit,
/// one maximize_work call per point for gp_mixed / g_mixed / l_pure. Each
/// point derives its own RNG stream from cfg.seed and the point index, so
/// results do not depend on evaluation order.
SweepResult sweep(CurveId id, std::span<const double> e_grid, const TwoQubitZZ& h,
                  const OptimizerConfig& cfg);

/// One row of the maximizer-coincidence report: the pure state maximizing
/// locally extractable work at fixed entanglement is checked to coincide
/// (in value and in globally extractable work) with the global-work
/// maximizer of the same entanglement.
struct CoincidenceRow {
    double entanglement = 0.0;
    double local_work = 0.0;
    double local_work_expected = 0.0;
    double global_work_of_maximizer = 0.0;
    double global_work_expected = 0.0;
    bool pass = false;
};

struct CoincidenceReport {
    std::vector<CoincidenceRow> rows;
    bool all_pass = false;
};

/// Runs the (pure, local, unconstrained) optimization on each grid point
/// and compares against the closed forms, at tolerance 2e-3.
CoincidenceReport verify_maximizer_coincidence(std::span<const double> e_grid, const TwoQubitZZ& h,
                                               const OptimizerConfig& cfg);

}  // namespace qbat
