#include "qbat/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "qbat/linalg.hpp"

namespace qbat {

void OptimizerConfig::validate() const {
    if (restarts < 1) throw std::invalid_argument("OptimizerConfig: restarts must be >= 1");
    if (max_iters < 1) throw std::invalid_argument("OptimizerConfig: max_iters must be >= 1");
    if (!(simplex_tol > 0.0)) throw std::invalid_argument("OptimizerConfig: simplex_tol must be positive");
    if (penalty_weight < 0.0) throw std::invalid_argument("OptimizerConfig: penalty_weight must be nonnegative");
    if (!(entanglement_tol > 0.0))
        throw std::invalid_argument("OptimizerConfig: entanglement_tol must be positive");
}

namespace {

// Quadratic-penalty continuation: two exploratory stages below the
// configured weight, then ramp by factors of 100 so the converged point
// sits on the constraint to ~1e-9, far inside entanglement_tol.
constexpr int kPenaltyStages = 8;
constexpr double kPenaltyGrowth = 100.0;
constexpr int kExploreStages = 2;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Minimal Nelder-Mead; returns best vertex after convergence or budget.
struct NelderMead {
    double reflect = 1.0, expand = 2.0, contract = 0.5, shrink = 0.5;

    std::vector<double> x;
    double f = 0.0;
    long evaluations = 0;

    void minimize(const std::function<double(const std::vector<double>&)>& fn,
                  const std::vector<double>& x0, double step, int max_iters, double ftol) {
        const std::size_t n = x0.size();
        std::vector<std::vector<double>> verts(n + 1, x0);
        std::vector<double> fv(n + 1);
        for (std::size_t i = 0; i < n; ++i) verts[i + 1][i] += step;
        for (std::size_t i = 0; i <= n; ++i) fv[i] = fn(verts[i]);
        evaluations = static_cast<long>(n) + 1;

        std::vector<std::size_t> order(n + 1);
        for (int iter = 0; iter < max_iters; ++iter) {
            for (std::size_t i = 0; i <= n; ++i) order[i] = i;
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
            const std::size_t best = order[0], worst = order[n], second = order[n - 1];
            if (std::abs(fv[worst] - fv[best]) <= ftol * (1.0 + std::abs(fv[best]))) break;

            std::vector<double> centroid(n, 0.0);
            for (std::size_t i = 0; i <= n; ++i)
                if (i != worst)
                    for (std::size_t d = 0; d < n; ++d) centroid[d] += verts[i][d];
            for (double& c : centroid) c /= static_cast<double>(n);

            auto along = [&](double t) {
                std::vector<double> p(n);
                for (std::size_t d = 0; d < n; ++d) p[d] = centroid[d] + t * (verts[worst][d] - centroid[d]);
                return p;
            };

            std::vector<double> xr = along(-reflect);
            const double fr = fn(xr);
            ++evaluations;
            if (fr < fv[order[0]]) {
                std::vector<double> xe = along(-expand);
                const double fe = fn(xe);
                ++evaluations;
                if (fe < fr) {
                    verts[worst] = std::move(xe);
                    fv[worst] = fe;
                } else {
                    verts[worst] = std::move(xr);
                    fv[worst] = fr;
                }
                continue;
            }
            if (fr < fv[second]) {
                verts[worst] = std::move(xr);
                fv[worst] = fr;
                continue;
            }
            const bool outside = fr < fv[worst];
            std::vector<double> xc = along(outside ? -contract : contract);
            const double fc = fn(xc);
            ++evaluations;
            if (fc < std::min(fr, fv[worst])) {
                verts[worst] = std::move(xc);
                fv[worst] = fc;
                continue;
            }
            for (std::size_t i = 0; i <= n; ++i) {  // shrink toward best
                if (i == best) continue;
                for (std::size_t d = 0; d < n; ++d)
                    verts[i][d] = verts[best][d] + shrink * (verts[i][d] - verts[best][d]);
                fv[i] = fn(verts[i]);
                ++evaluations;
            }
        }

        std::size_t best = 0;
        for (std::size_t i = 1; i <= n; ++i)
            if (fv[i] < fv[best]) best = i;
        x = verts[best];
        f = fv[best];
    }
};

DensityOperator decode_pure(const std::vector<double>& x) {
    std::array<cplx, 4> c{};
    double norm2 = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        c[i] = cplx(x[2 * i], x[2 * i + 1]);
        norm2 += std::norm(c[i]);
    }
    if (norm2 < 1e-14) {
        c = {cplx(1.0, 0.0), 0.0, 0.0, 0.0};
        norm2 = 1.0;
    }
    const double inv = 1.0 / norm2;
    ComplexMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = c[i] * std::conj(c[j]) * inv;
    return DensityOperator::trusted(2, 2, std::move(m));
}

DensityOperator decode_mixed(const std::vector<double>& x) {
    // Lower-triangular factor: 4 real diagonal entries + 6 complex ones.
    ComplexMatrix t(4, 4);
    t(0, 0) = x[0];
    t(1, 1) = x[1];
    t(2, 2) = x[2];
    t(3, 3) = x[3];
    const std::size_t pos[6][2] = {{1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}, {3, 2}};
    for (std::size_t k = 0; k < 6; ++k) t(pos[k][0], pos[k][1]) = cplx(x[4 + 2 * k], x[5 + 2 * k]);
    ComplexMatrix m = t * adjoint(t);
    const double tr = trace(m).real();
    if (tr < 1e-14) {
        ComplexMatrix id = ComplexMatrix::identity(4);
        id *= 0.25;
        return DensityOperator::trusted(2, 2, std::move(id));
    }
    m *= 1.0 / tr;
    return DensityOperator::trusted(2, 2, std::move(m));
}

struct Objective {
    double target_e = 0.0;
    StateKind kind = StateKind::pure;
    WorkKind work = WorkKind::global_work;
    ConstraintKind constraint = ConstraintKind::none;
    double weight = 0.0;
    const HermitianOperator* hfull = nullptr;
    const LocalHamiltonian* hlocal = nullptr;
    double hnorm = 1.0;

    DensityOperator decode(const std::vector<double>& x) const {
        return kind == StateKind::pure ? decode_pure(x) : decode_mixed(x);
    }

    double raw_work(const DensityOperator& rho) const {
        if (work == WorkKind::global_work) return ergotropy_value(rho, *hfull);
        return local_ergotropy_value(rho, *hlocal);
    }

    double lp_residual(const DensityOperator& rho) const {
        return local_ergotropy_value(rho, *hlocal) / hnorm;
    }

    /// Negated penalized work, for minimization.
    double operator()(const std::vector<double>& x) const {
        const DensityOperator rho = decode(x);
        const double de = logneg_general(rho) - target_e;
        double value = raw_work(rho) - weight * de * de;
        if (constraint == ConstraintKind::locally_passive) {
            const double r = lp_residual(rho);
            value -= weight * r * r;
        }
        return -value;
    }
};

}  // namespace

OptimumPoint maximize_work(double e, const TwoQubitZZ& h, StateKind kind, WorkKind work,
                           ConstraintKind constraint, const OptimizerConfig& cfg) {
    if (!(e >= 0.0 && e <= 1.0)) throw std::invalid_argument("maximize_work: entanglement must lie in [0, 1]");
    cfg.validate();

    const LocalHamiltonian hl = h.local();
    const HermitianOperator hf = full_hamiltonian(hl);
    const double hnorm = h.eps_a + h.eps_b;
    const double w0 = cfg.penalty_weight > 0.0 ? cfg.penalty_weight : 1e3 * hnorm;

    Objective obj;
    obj.target_e = e;
    obj.kind = kind;
    obj.work = work;
    obj.constraint = constraint;
    obj.hfull = &hf;
    obj.hlocal = &hl;
    obj.hnorm = hnorm;

    const std::size_t dim = kind == StateKind::pure ? 8 : 16;
    Rng rng(cfg.seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);

    OptimumPoint best;
    long total_iters = 0;

    for (int r = 0; r < cfg.restarts; ++r) {
        std::vector<double> x(dim);
        for (double& v : x) v = uni(rng);

        NelderMead nm;
        double step = 0.6;
        const int dim_scale = static_cast<int>(dim) / 8;  // 16-dim searches get twice the budget
        for (int stage = 0; stage < kPenaltyStages; ++stage) {
            obj.weight = w0 * std::pow(kPenaltyGrowth, stage - kExploreStages);
            const int iters =
                dim_scale * (stage == 0 ? cfg.max_iters : std::max(400, cfg.max_iters / 4));
            // A second pass with a finer fresh simplex breaks the stagnation
            // a collapsed simplex leaves behind in the penalty valley.
            for (double scale : {1.0, 0.05}) {
                nm.minimize(std::cref(obj), x, step * scale, iters, cfg.simplex_tol);
                x = nm.x;
                total_iters += nm.evaluations;
            }
            // Both parametrizations are scale invariant; renormalizing
            // keeps the fresh simplex from degenerating along the ray.
            double norm = 0.0;
            for (double v : x) norm += v * v;
            norm = std::sqrt(norm);
            if (norm > 1e-12)
                for (double& v : x) v /= norm;
            step = std::max(step * 0.08, 1e-7);
        }

        const DensityOperator rho = obj.decode(x);
        const double ent_residual = std::abs(logneg_general(rho) - e);
        const double lp_res = constraint == ConstraintKind::locally_passive ? obj.lp_residual(rho) : 0.0;
        const bool feasible = ent_residual <= cfg.entanglement_tol && lp_res <= cfg.entanglement_tol;
        if (!feasible) continue;
        const double raw = obj.raw_work(rho);
        if (!best.feasible || raw > best.work) {
            best.work = raw;
            best.state = rho;
            best.ent_residual = ent_residual;
            best.lp_residual = lp_res;
            best.best_restart = r;
            best.feasible = true;
        }
    }
    best.iterations = total_iters;
    return best;
}

CurveId curve_from_string(const std::string& name) {
    if (name == "gp") return CurveId::gp;
    if (name == "g") return CurveId::g;
    if (name == "lbar") return CurveId::lbar;
    if (name == "deficit") return CurveId::deficit;
    if (name == "gp_mixed") return CurveId::gp_mixed;
    if (name == "g_mixed") return CurveId::g_mixed;
    if (name == "l_pure") return CurveId::l_pure;
    throw std::invalid_argument("unknown curve '" + name + "'");
}

std::string curve_to_string(CurveId id) {
    switch (id) {
        case CurveId::gp: return "gp";
        case CurveId::g: return "g";
        case CurveId::lbar: return "lbar";
        case CurveId::deficit: return "deficit";
        case CurveId::gp_mixed: return "gp_mixed";
        case CurveId::g_mixed: return "g_mixed";
        case CurveId::l_pure: return "l_pure";
    }
    throw std::logic_error("unreachable");
}

bool curve_is_numeric(CurveId id) {
    return id == CurveId::gp_mixed || id == CurveId::g_mixed || id == CurveId::l_pure;
}

bool SweepResult::all_feasible() const {
    return std::all_of(diagnostics.begin(), diagnostics.end(),
                       [](const PointDiagnostics& d) { return d.feasible; });
}

namespace {

std::pair<WorkCurvePoint, PointDiagnostics> sweep_point(CurveId id, double e, std::size_t index,
                                                        const TwoQubitZZ& h, const OptimizerConfig& cfg) {
    WorkCurvePoint pt;
    pt.entanglement = e;
    pt.curve_id = id;
    PointDiagnostics diag;
    if (!curve_is_numeric(id)) {
        switch (id) {
            case CurveId::gp: pt.value = max_work_lp_pure(e, h); break;
            case CurveId::g: pt.value = max_work_pure(e, h); break;
            case CurveId::lbar: pt.value = local_work_of_maximizer(e, h); break;
            case CurveId::deficit: pt.value = work_deficit(e, h); break;
            default: throw std::logic_error("unreachable");
        }
        return {pt, diag};
    }

    OptimizerConfig point_cfg = cfg;
    point_cfg.seed = splitmix64(cfg.seed ^ (0x51ed2701ULL + index));
    OptimumPoint opt;
    switch (id) {
        case CurveId::gp_mixed:
            opt = maximize_work(e, h, StateKind::mixed, WorkKind::global_work,
                                ConstraintKind::locally_passive, point_cfg);
            break;
        case CurveId::g_mixed:
            opt = maximize_work(e, h, StateKind::mixed, WorkKind::global_work, ConstraintKind::none,
                                point_cfg);
            break;
        case CurveId::l_pure:
            opt = maximize_work(e, h, StateKind::pure, WorkKind::local_work, ConstraintKind::none,
                                point_cfg);
            break;
        default: throw std::logic_error("unreachable");
    }
    pt.value = opt.feasible ? opt.work : std::nan("");
    diag.ent_residual = opt.ent_residual;
    diag.lp_residual = opt.lp_residual;
    diag.best_restart = opt.best_restart;
    diag.iterations = opt.iterations;
    diag.feasible = opt.feasible;
    return {pt, diag};
}

}  // namespace

SweepResult sweep(CurveId id, std::span<const double> e_grid, const TwoQubitZZ& h,
                  const OptimizerConfig& cfg) {
    cfg.validate();
    for (double e : e_grid)
        if (!(e >= 0.0 && e <= 1.0)) throw std::invalid_argument("sweep: grid values must lie in [0, 1]");

    SweepResult result;
    result.points.resize(e_grid.size());
    result.diagnostics.resize(e_grid.size());

    auto run_range = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < e_grid.size(); i += stride) {
            auto [pt, diag] = sweep_point(id, e_grid[i], i, h, cfg);
            result.points[i] = pt;
            result.diagnostics[i] = diag;
        }
    };

    // Points are independent and each derives its own RNG stream from
    // cfg.seed and its index, so the parallel and serial schedules produce
    // identical output.
    const unsigned workers = curve_is_numeric(id)
                                 ? std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                                                      static_cast<unsigned>(e_grid.size()))
                                 : 1u;
    if (workers <= 1) {
        run_range(0, 1);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run_range, w, workers);
        for (auto& t : threads) t.join();
    }
    return result;
}

CoincidenceReport verify_maximizer_coincidence(std::span<const double> e_grid, const TwoQubitZZ& h,
                                               const OptimizerConfig& cfg) {
    for (double e : e_grid)
        if (!(e > 0.0 && e < 1.0))
            throw std::invalid_argument("verify_maximizer_coincidence: grid must lie strictly inside (0, 1)");
    const HermitianOperator hf = full_hamiltonian(h.local());
    constexpr double kTol = 2e-3;

    CoincidenceReport report;
    report.all_pass = true;
    for (std::size_t i = 0; i < e_grid.size(); ++i) {
        OptimizerConfig point_cfg = cfg;
        point_cfg.seed = splitmix64(cfg.seed ^ (0xc01dbeefULL + i));
        const OptimumPoint opt = maximize_work(e_grid[i], h, StateKind::pure, WorkKind::local_work,
                                               ConstraintKind::none, point_cfg);
        CoincidenceRow row;
        row.entanglement = e_grid[i];
        row.local_work = opt.feasible ? opt.work : std::nan("");
        row.local_work_expected = local_work_of_maximizer(e_grid[i], h);
        row.global_work_of_maximizer = opt.feasible ? ergotropy(*opt.state, hf).work : std::nan("");
        row.global_work_expected = max_work_pure(e_grid[i], h);
        row.pass = opt.feasible && std::abs(row.local_work - row.local_work_expected) <= kTol &&
                   std::abs(row.global_work_of_maximizer - row.global_work_expected) <= kTol;
        report.all_pass = report.all_pass && row.pass;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace qbat
