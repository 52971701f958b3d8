#include "qbat/passivity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qbat/linalg.hpp"

namespace qbat {

namespace {

double predicate_tol(const HermitianOperator& h) {
    return 1e-9 * std::max(1.0, max_abs(h.matrix()));
}

/// Groups sorted eigenvalues into clusters of degenerate levels.
std::vector<std::pair<std::size_t, std::size_t>> degeneracy_clusters(const std::vector<double>& values,
                                                                     double scale) {
    std::vector<std::pair<std::size_t, std::size_t>> clusters;
    const double tie = tol::degeneracy * std::max(1.0, scale);
    std::size_t begin = 0;
    for (std::size_t i = 1; i <= values.size(); ++i) {
        if (i == values.size() || std::abs(values[i] - values[i - 1]) > tie) {
            clusters.emplace_back(begin, i);
            begin = i;
        }
    }
    return clusters;
}

/// Populations of rho against the (possibly degenerate) levels of h:
/// transforms rho into the energy eigenbasis and diagonalizes it inside
/// each degenerate block. Returns {energy, population} pairs.
std::vector<std::pair<double, double>> level_populations(const ComplexMatrix& rho,
                                                         const Spectrum& energy_spec) {
    const ComplexMatrix in_basis = adjoint(energy_spec.vectors) * rho * energy_spec.vectors;
    std::vector<std::pair<double, double>> pops;
    const double scale = energy_spec.values.empty()
                             ? 1.0
                             : std::max(std::abs(energy_spec.values.front()), std::abs(energy_spec.values.back()));
    for (const auto& [b, e] : degeneracy_clusters(energy_spec.values, scale)) {
        const std::size_t k = e - b;
        if (k == 1) {
            pops.emplace_back(energy_spec.values[b], in_basis(b, b).real());
            continue;
        }
        ComplexMatrix block(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) block(i, j) = in_basis(b + i, b + j);
        block += adjoint(block);
        block *= 0.5;  // symmetrize roundoff before validation
        const Spectrum bs = eig_hermitian(block, SpectralOrder::descending);
        for (double p : bs.values) pops.emplace_back(energy_spec.values[b], p);
    }
    return pops;
}

bool anti_ordered(const std::vector<std::pair<double, double>>& pops, double tolerance) {
    for (std::size_t j = 0; j < pops.size(); ++j)
        for (std::size_t k = 0; k < pops.size(); ++k)
            if ((pops[j].second - pops[k].second) * (pops[j].first - pops[k].first) > tolerance) return false;
    return true;
}

bool commutes(const ComplexMatrix& x, const ComplexMatrix& y, double tolerance) {
    return max_abs(x * y - y * x) <= tolerance;
}

HermitianOperator as_hermitian(const ComplexMatrix& m) {
    ComplexMatrix s = m + adjoint(m);
    s *= 0.5;
    return HermitianOperator(std::move(s));
}

/// sum_k p_k |E_k><E_k| with p descending against ascending energies.
ComplexMatrix passive_matrix(const Spectrum& pops_desc, const Spectrum& energies_asc) {
    const std::size_t n = pops_desc.values.size();
    ComplexMatrix out(n, n);
    const ComplexMatrix& ve = energies_asc.vectors;
    for (std::size_t k = 0; k < n; ++k) {
        const double p = pops_desc.values[k];
        if (p == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out(i, j) += p * ve(i, k) * std::conj(ve(j, k));
    }
    return out;
}

struct SubsystemPlan {
    UnitaryOperator u;  // maps descending eigenbasis of rho_w onto ascending energy basis
    Spectrum energies;
    double work;  // subsystem ergotropy
};

SubsystemPlan subsystem_plan(const ComplexMatrix& reduced, const HermitianOperator& h) {
    const Spectrum energies = eig_hermitian(h, SpectralOrder::ascending);
    const Spectrum pops = eig_hermitian(as_hermitian(reduced), SpectralOrder::descending);
    ComplexMatrix u = energies.vectors * adjoint(pops.vectors);
    double passive_energy = 0.0;
    for (std::size_t k = 0; k < energies.values.size(); ++k)
        passive_energy += pops.values[k] * energies.values[k];
    const double work = subsystem_energy(reduced, h) - passive_energy;
    return {UnitaryOperator(std::move(u)), energies, work};
}

/// Fixes the residual local-phase gauge of a locally passive state.
///
/// sigma is only determined up to conjugation by phases diagonal in the
/// local energy bases. Expressed in the product energy basis an entry at
/// (jk,lm) picks up exp(i(a_j + b_k - a_l - b_m)); this routine chooses the
/// phases that make a maximal independent set of entries (scanned in fixed
/// row-major order) real positive, so that states on the same local-unitary
/// orbit canonicalize to the same matrix.
void fix_local_phase_gauge(ComplexMatrix& sigma_in_energy_basis, std::size_t da, std::size_t db) {
    const std::size_t nvars = da + db - 2;  // a_0 = b_0 = 0
    if (nvars == 0) return;
    const double floor = 1e-10 * std::max(1.0, max_abs(sigma_in_energy_basis));

    std::vector<std::vector<double>> rows;  // reduced constraint rows
    std::vector<double> rhs;
    std::vector<std::size_t> pivots;

    auto coeff_index_a = [&](std::size_t j) { return j - 1; };            // j >= 1
    auto coeff_index_b = [&](std::size_t k) { return da - 1 + k - 1; };   // k >= 1

    const std::size_t d = da * db;
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = r + 1; c < d; ++c) {
            const cplx entry = sigma_in_energy_basis(r, c);
            if (std::abs(entry) <= floor) continue;
            std::vector<double> row(nvars, 0.0);
            const std::size_t j = r / db, k = r % db, l = c / db, m = c % db;
            if (j > 0) row[coeff_index_a(j)] += 1.0;
            if (l > 0) row[coeff_index_a(l)] -= 1.0;
            if (k > 0) row[coeff_index_b(k)] += 1.0;
            if (m > 0) row[coeff_index_b(m)] -= 1.0;
            double target = -std::arg(entry);
            // reduce against stored rows
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const double f = row[pivots[i]] / rows[i][pivots[i]];
                if (f == 0.0) continue;
                for (std::size_t t = 0; t < nvars; ++t) row[t] -= f * rows[i][t];
                target -= f * rhs[i];
            }
            std::size_t piv = nvars;
            for (std::size_t t = 0; t < nvars; ++t)
                if (std::abs(row[t]) > 1e-9) {
                    piv = t;
                    break;
                }
            if (piv == nvars) continue;  // dependent: phase already determined
            rows.push_back(std::move(row));
            rhs.push_back(target);
            pivots.push_back(piv);
        }
    }

    std::vector<double> phase(nvars, 0.0);
    for (std::size_t i = rows.size(); i-- > 0;) {
        double v = rhs[i];
        for (std::size_t t = 0; t < nvars; ++t)
            if (t != pivots[i]) v -= rows[i][t] * phase[t];
        phase[pivots[i]] = v / rows[i][pivots[i]];
    }

    auto phase_of = [&](std::size_t j, std::size_t k) {
        double p = 0.0;
        if (j > 0) p += phase[coeff_index_a(j)];
        if (k > 0) p += phase[coeff_index_b(k)];
        return p;
    };
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            const double delta = phase_of(r / db, r % db) - phase_of(c / db, c % db);
            sigma_in_energy_basis(r, c) *= cplx(std::cos(delta), std::sin(delta));
        }
}

}  // namespace

DensityOperator passive_state(const DensityOperator& rho, const HermitianOperator& h) {
    if (rho.dim() != h.dim()) throw std::invalid_argument("passive_state: dimension mismatch");
    const Spectrum energies = eig_hermitian(h, SpectralOrder::ascending);
    const Spectrum pops = eig_hermitian(as_hermitian(rho.matrix()), SpectralOrder::descending);
    return DensityOperator::trusted(rho.dim_a(), rho.dim_b(), passive_matrix(pops, energies));
}

ErgotropyResult ergotropy(const DensityOperator& rho, const HermitianOperator& h) {
    if (rho.dim() != h.dim()) throw std::invalid_argument("ergotropy: dimension mismatch");
    const Spectrum energies = eig_hermitian(h, SpectralOrder::ascending);
    const Spectrum pops = eig_hermitian(as_hermitian(rho.matrix()), SpectralOrder::descending);
    DensityOperator sigma = DensityOperator::trusted(rho.dim_a(), rho.dim_b(), passive_matrix(pops, energies));
    const double work = energy(rho, h) - energy(sigma, h);
    UnitaryOperator u(energies.vectors * adjoint(pops.vectors));
    return {work, std::move(sigma), GlobalWitness{std::move(u)}};
}

double ergotropy_value(const DensityOperator& rho, const HermitianOperator& h) {
    if (rho.dim() != h.dim()) throw std::invalid_argument("ergotropy_value: dimension mismatch");
    const Spectrum energies = eig_hermitian(h, SpectralOrder::ascending);
    const Spectrum pops = eig_hermitian(as_hermitian(rho.matrix()), SpectralOrder::descending);
    double passive_energy = 0.0;
    for (std::size_t k = 0; k < pops.values.size(); ++k)
        passive_energy += pops.values[k] * energies.values[k];
    return energy(rho, h) - passive_energy;
}

bool is_passive(const DensityOperator& rho, const HermitianOperator& h) {
    if (rho.dim() != h.dim()) throw std::invalid_argument("is_passive: dimension mismatch");
    const double t = predicate_tol(h);
    if (!commutes(rho.matrix(), h.matrix(), t)) return false;
    const Spectrum energies = eig_hermitian(h, SpectralOrder::ascending);
    return anti_ordered(level_populations(rho.matrix(), energies), t);
}

ErgotropyResult locally_passive_state(const DensityOperator& rho, const LocalHamiltonian& h) {
    if (rho.dim_a() != h.dim_a() || rho.dim_b() != h.dim_b())
        throw std::invalid_argument("locally_passive_state: dimension mismatch");
    const SubsystemPlan plan_a = subsystem_plan(partial_trace(rho, Subsystem::a), h.h_a);
    const SubsystemPlan plan_b = subsystem_plan(partial_trace(rho, Subsystem::b), h.h_b);

    const ComplexMatrix u = tensor_product(plan_a.u.matrix(), plan_b.u.matrix());
    ComplexMatrix sigma = u * rho.matrix() * adjoint(u);

    // Canonicalize the local phase gauge in the product energy basis.
    const ComplexMatrix ve = tensor_product(plan_a.energies.vectors, plan_b.energies.vectors);
    ComplexMatrix in_basis = adjoint(ve) * sigma * ve;
    fix_local_phase_gauge(in_basis, rho.dim_a(), rho.dim_b());
    sigma = ve * in_basis * adjoint(ve);

    DensityOperator out = DensityOperator::trusted(rho.dim_a(), rho.dim_b(), std::move(sigma));
    const double work = energy(rho, h) - energy(out, h);
    return {work, std::move(out), LocalWitness{plan_a.u, plan_b.u}};
}

ErgotropyResult local_ergotropy(const DensityOperator& rho, const LocalHamiltonian& h) {
    if (rho.dim_a() != h.dim_a() || rho.dim_b() != h.dim_b())
        throw std::invalid_argument("local_ergotropy: dimension mismatch");
    const double work_a = subsystem_plan(partial_trace(rho, Subsystem::a), h.h_a).work;
    const double work_b = subsystem_plan(partial_trace(rho, Subsystem::b), h.h_b).work;
    ErgotropyResult result = locally_passive_state(rho, h);
    result.work = work_a + work_b;
    return result;
}

namespace {

double subsystem_work(const ComplexMatrix& reduced, const HermitianOperator& hw) {
    const Spectrum energies = eig_hermitian(hw, SpectralOrder::ascending);
    const Spectrum pops = eig_hermitian(as_hermitian(reduced), SpectralOrder::descending);
    double passive_energy = 0.0;
    for (std::size_t k = 0; k < energies.values.size(); ++k)
        passive_energy += pops.values[k] * energies.values[k];
    return subsystem_energy(reduced, hw) - passive_energy;
}

}  // namespace

double local_ergotropy_value(const DensityOperator& rho, const LocalHamiltonian& h) {
    if (rho.dim_a() != h.dim_a() || rho.dim_b() != h.dim_b())
        throw std::invalid_argument("local_ergotropy_value: dimension mismatch");
    return subsystem_work(partial_trace(rho, Subsystem::a), h.h_a) +
           subsystem_work(partial_trace(rho, Subsystem::b), h.h_b);
}

bool is_locally_passive(const DensityOperator& rho, const LocalHamiltonian& h) {
    if (rho.dim_a() != h.dim_a() || rho.dim_b() != h.dim_b())
        throw std::invalid_argument("is_locally_passive: dimension mismatch");
    const auto check = [](const ComplexMatrix& reduced, const HermitianOperator& hw) {
        const double t = predicate_tol(hw);
        if (!commutes(reduced, hw.matrix(), t)) return false;
        const Spectrum energies = eig_hermitian(hw, SpectralOrder::ascending);
        return anti_ordered(level_populations(reduced, energies), t);
    };
    return check(partial_trace(rho, Subsystem::a), h.h_a) &&
           check(partial_trace(rho, Subsystem::b), h.h_b);
}

namespace {

/// Packs a Hermitian 4x4 into 16 reals so that tr(X Y) is the plain dot
/// product of pack(X, 1) and pack(Y, 2): the factor 2 on off-diagonal
/// terms is folded into the second operand.
using Packed = std::array<double, 16>;

Packed pack(const ComplexMatrix& m, double off_weight) {
    Packed out{};
    std::size_t n = 0;
    for (std::size_t i = 0; i < 4; ++i) out[n++] = m(i, i).real();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            out[n++] = off_weight * m(i, j).real();
            out[n++] = off_weight * m(i, j).imag();
        }
    return out;
}

std::vector<ComplexMatrix> su2_grid(std::size_t grid_density) {
    std::vector<ComplexMatrix> us;
    us.push_back(ComplexMatrix::identity(2));
    const double pi = std::numbers::pi;
    for (std::size_t it = 0; it < grid_density; ++it) {
        const double theta = pi * (static_cast<double>(it) + 0.5) / static_cast<double>(grid_density);
        const double ct = std::cos(theta / 2.0), st = std::sin(theta / 2.0);
        for (std::size_t ip = 0; ip < grid_density; ++ip) {
            const double phi = 2.0 * pi * static_cast<double>(ip) / static_cast<double>(grid_density);
            for (std::size_t il = 0; il < grid_density; ++il) {
                const double lam = 2.0 * pi * static_cast<double>(il) / static_cast<double>(grid_density);
                ComplexMatrix u(2, 2);
                u(0, 0) = ct;
                u(0, 1) = -cplx(std::cos(lam), std::sin(lam)) * st;
                u(1, 0) = cplx(std::cos(phi), std::sin(phi)) * st;
                u(1, 1) = cplx(std::cos(phi + lam), std::sin(phi + lam)) * ct;
                us.push_back(std::move(u));
            }
        }
    }
    return us;
}

}  // namespace

double local_ergotropy_oracle(const DensityOperator& rho, const LocalHamiltonian& h,
                              std::size_t grid_density, Rng& rng, std::size_t samples) {
    if (rho.dim_a() != 2 || rho.dim_b() != 2 || h.dim_a() != 2 || h.dim_b() != 2)
        throw std::invalid_argument("local_ergotropy_oracle: two-qubit states only");
    if (grid_density == 0) throw std::invalid_argument("local_ergotropy_oracle: grid_density must be positive");

    std::vector<ComplexMatrix> us_a = su2_grid(grid_density);
    std::vector<ComplexMatrix> us_b = us_a;
    for (std::size_t s = 0; s < samples; ++s) us_a.push_back(random_unitary(2, rng).matrix());
    for (std::size_t s = 0; s < samples; ++s) us_b.push_back(random_unitary(2, rng).matrix());

    const ComplexMatrix hfull = full_hamiltonian(h).matrix();
    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    const double base = trace(rho.matrix() * hfull).real();

    // tr[(U_A x U_B) rho (.)^dag H] = tr[T_A F_B] with
    //   T_A = (U_A x I) rho (U_A x I)^dag and F_B = (I x U_B)^dag H (I x U_B).
    // Because H carries no interaction term this splits into one-sided
    // energies, tr[T_A F_B] = e_A + e_B - tr(rho H); the split is certified
    // below on random pairs, in full-space arithmetic, before it is used.
    std::vector<Packed> ts, fs;
    std::vector<double> e_a, e_b;
    ts.reserve(us_a.size());
    fs.reserve(us_b.size());
    const Packed h2 = pack(hfull, 2.0);
    const Packed r1 = pack(rho.matrix(), 1.0);
    for (const auto& ua : us_a) {
        const ComplexMatrix big = tensor_product(ua, id2);
        ts.push_back(pack(big * rho.matrix() * adjoint(big), 1.0));
        double e = 0.0;
        for (std::size_t i = 0; i < 16; ++i) e += ts.back()[i] * h2[i];
        e_a.push_back(e);
    }
    for (const auto& ub : us_b) {
        const ComplexMatrix big = tensor_product(id2, ub);
        fs.push_back(pack(adjoint(big) * hfull * big, 2.0));
        double e = 0.0;
        for (std::size_t i = 0; i < 16; ++i) e += r1[i] * fs.back()[i];
        e_b.push_back(e);
    }

    const double scale = std::max(1.0, max_abs(hfull));
    std::uniform_int_distribution<std::size_t> pick_a(0, us_a.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_b(0, us_b.size() - 1);
    for (int k = 0; k < 2000; ++k) {
        const std::size_t i = pick_a(rng);
        const std::size_t j = pick_b(rng);
        double pair_energy = 0.0;
        for (std::size_t d = 0; d < 16; ++d) pair_energy += ts[i][d] * fs[j][d];
        if (std::abs(pair_energy - (e_a[i] + e_b[j] - base)) > 1e-9 * scale)
            throw std::logic_error("local_ergotropy_oracle: one-sided energy split failed validation");
    }

    const double min_a = *std::min_element(e_a.begin(), e_a.end());
    const double min_b = *std::min_element(e_b.begin(), e_b.end());
    return base - (min_a + min_b - base);
}

}  // namespace qbat
