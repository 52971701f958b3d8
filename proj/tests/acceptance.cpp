// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria 4-6 run the numeric optimizer and take minutes.

#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "qbat/linalg.hpp"
#include "qbat/optimizer.hpp"
#include "qbat/verify.hpp"

using namespace qbat;

namespace {

int failures = 0;

void report(int number, const char* description, bool pass, const std::string& detail) {
    std::printf("[%s] %d. %s%s%s\n", pass ? "PASS" : "FAIL", number, description,
                detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string dev(double worst) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "worst deviation %.3e", worst);
    return buf;
}

const TwoQubitZZ kZZ(2.0, 1.0);

std::vector<double> closed_grid(int points) {  // [0, 1] inclusive
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i) grid[i] = static_cast<double>(i) / (points - 1);
    return grid;
}

void criterion_endpoints() {
    const double checks[] = {
        std::abs(max_work_lp_pure(0.0, kZZ) - 0.0), std::abs(max_work_lp_pure(1.0, kZZ) - 3.0),
        std::abs(max_work_pure(0.0, kZZ) - 6.0),    std::abs(max_work_pure(1.0, kZZ) - 3.0),
        std::abs(local_work_of_maximizer(1.0, kZZ) - 0.0)};
    double worst = 0.0;
    for (double c : checks) worst = std::max(worst, c);
    report(1, "curve endpoints exact", worst <= 1e-12, dev(worst));
}

void criterion_deficit_identity() {
    double worst = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double e = static_cast<double>(i) / 1000.0;
        worst = std::max(worst, std::abs(work_deficit(e, kZZ) - max_work_lp_pure(e, kZZ)));
    }
    report(2, "work deficit equals the locally passive pure curve", worst < 1e-12, dev(worst));
}

void criterion_analytic_vs_engine() {
    const HermitianOperator hf = full_hamiltonian(kZZ.local());
    double worst = 0.0;
    for (double e : closed_grid(101)) {
        const DensityOperator rho = density_from_coeffs(work_maximizer_coeffs(e));
        worst = std::max(worst, std::abs(ergotropy(rho, hf).work - max_work_pure(e, kZZ)));
        worst = std::max(worst,
                         std::abs(local_ergotropy(rho, kZZ.local()).work -
                                  local_work_of_maximizer(e, kZZ)));
    }
    report(3, "maximizer states reproduce both curves through the engine", worst <= 1e-9,
           dev(worst));
}

void criterion_4() {
    OptimizerConfig cfg;
    cfg.seed = 41;
    const std::vector<double> grid = closed_grid(11);
    double worst = 0.0;
    bool feasible = true;

    for (std::size_t i = 0; i < grid.size(); ++i) {
        OptimizerConfig point_cfg = cfg;
        point_cfg.seed = cfg.seed + 1000 + i;
        const OptimumPoint opt = maximize_work(grid[i], kZZ, StateKind::pure,
                                               WorkKind::global_work, ConstraintKind::none,
                                               point_cfg);
        feasible = feasible && opt.feasible;
        if (opt.feasible)
            worst = std::max(worst, std::abs(opt.work - max_work_pure(grid[i], kZZ)));
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        OptimizerConfig point_cfg = cfg;
        point_cfg.seed = cfg.seed + 2000 + i;
        const OptimumPoint opt = maximize_work(grid[i], kZZ, StateKind::pure,
                                               WorkKind::global_work,
                                               ConstraintKind::locally_passive, point_cfg);
        feasible = feasible && opt.feasible;
        if (opt.feasible)
            worst = std::max(worst, std::abs(opt.work - max_work_lp_pure(grid[i], kZZ)));
    }
    report(4, "pure optimizer reproduces both closed forms within 1e-3",
           feasible && worst <= 1e-3, feasible ? dev(worst) : "infeasible point");
}

void criterion_5() {
    OptimizerConfig cfg;
    cfg.seed = 5;
    std::vector<double> grid;
    for (int k = 1; k <= 11; ++k) grid.push_back(static_cast<double>(k) / 12.0);
    const CoincidenceReport report5 = verify_maximizer_coincidence(grid, kZZ, cfg);
    double worst = 0.0;
    for (const CoincidenceRow& row : report5.rows)
        worst = std::max({worst, std::abs(row.local_work - row.local_work_expected),
                          std::abs(row.global_work_of_maximizer - row.global_work_expected)});
    report(5, "local-work maximizer coincides with the global-work maximizer (2e-3)",
           report5.all_pass, dev(worst));
}

void criterion_6() {
    const std::vector<double> grid = closed_grid(11);
    const double bound = 2.0 * (kZZ.eps_a + kZZ.eps_b) + 1e-6;

    OptimizerConfig cfg;
    cfg.seed = 6;
    OptimizerConfig doubled = cfg;
    doubled.restarts = cfg.restarts * 2;

    const SweepResult lp64 = sweep(CurveId::gp_mixed, grid, kZZ, cfg);
    const SweepResult lp128 = sweep(CurveId::gp_mixed, grid, kZZ, doubled);
    const SweepResult g64 = sweep(CurveId::g_mixed, grid, kZZ, cfg);
    const SweepResult g128 = sweep(CurveId::g_mixed, grid, kZZ, doubled);

    bool pass = lp64.all_feasible() && lp128.all_feasible() && g64.all_feasible() &&
                g128.all_feasible();
    std::string why = pass ? "" : "infeasible point";
    double worst_move_lp = 0.0, worst_move_g = 0.0;
    for (std::size_t i = 0; pass && i < grid.size(); ++i) {
        const double e = grid[i];
        const double lp = lp64.points[i].value;
        const double g = g64.points[i].value;
        if (lp < max_work_lp_pure(e, kZZ) - 1e-3 || g < max_work_pure(e, kZZ) - 1e-3) {
            pass = false;
            why = "mixed curve fails to dominate its pure counterpart";
            break;
        }
        if (e <= 0.3 && lp - max_work_lp_pure(e, kZZ) <= 0.05) {
            pass = false;
            why = "mixed locally passive curve not strictly higher at low entanglement";
            break;
        }
        if (lp > bound || g > bound) {
            pass = false;
            why = "curve exceeds the spectral bound";
            break;
        }
        worst_move_lp = std::max(worst_move_lp, std::abs(lp - lp128.points[i].value));
        worst_move_g = std::max(worst_move_g, std::abs(g - g128.points[i].value));
    }
    if (pass && worst_move_lp > 1e-3) {
        pass = false;
        why = "locally passive mixed curve unstable under restart doubling";
    }
    if (pass && worst_move_g > 0.1) {
        pass = false;
        why = "mixed curve unstable under restart doubling";
    }
    if (pass) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "restart-doubling moves: lp %.2e, general %.2e",
                      worst_move_lp, worst_move_g);
        why = buf;
    }
    report(6, "mixed-state curves dominate, stay bounded, and are restart-stable", pass, why);
}

void criterion_7() {
    const std::vector<verify::SuiteResult> results = verify::run("all", 0, 7);
    bool pass = true;
    std::string detail;
    for (const auto& r : results) {
        pass = pass && r.pass;
        if (!r.pass) detail += (detail.empty() ? "" : "; ") + r.name + ": " + r.detail;
    }
    report(7, "property suites (verify --suite all)", pass, pass ? "" : detail);
}

void criterion_8() {
    Rng rng(8);
    std::normal_distribution<double> n(0.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        std::array<cplx, 4> amp{};
        double norm2 = 0.0;
        for (auto& v : amp) {
            v = cplx(n(rng), n(rng));
            norm2 += std::norm(v);
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto& v : amp) v *= inv;
        const PureCoefficients c(amp);
        worst = std::max(worst,
                         std::abs(logneg_general(density_from_coeffs(c)) - logneg_pure(c)));
    }
    report(8, "negativity routes agree on random pure states", worst < 1e-10, dev(worst));
}

}  // namespace

int main() {
    criterion_endpoints();
    criterion_deficit_identity();
    criterion_analytic_vs_engine();
    criterion_8();
    criterion_4();
    criterion_5();
    criterion_7();
    criterion_6();
    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria failed\n", failures);
    return 1;
}
