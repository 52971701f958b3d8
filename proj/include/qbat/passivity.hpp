#pragma once

#include <variant>

#include "qbat/battery.hpp"
#include "qbat/random.hpp"

namespace qbat {

/// Witness of a global work-extraction unitary (maps the state's descending
/// eigenbasis onto the ascending energy eigenbasis).
struct GlobalWitness {
    UnitaryOperator u;
};

/// Witness of a product work-extraction unitary U_A (x) U_B.
struct LocalWitness {
    UnitaryOperator u_a;
    UnitaryOperator u_b;
};

using ErgotropyWitness = std::variant<GlobalWitness, LocalWitness>;

struct ErgotropyResult {
    double work = 0.0;
    DensityOperator final_state;
    ErgotropyWitness witness;
};

/// State with the same spectrum as rho from which no unitary can extract
/// work: populations sorted descending against ascending energy levels.
DensityOperator passive_state(const DensityOperator& rho, const HermitianOperator& h);

/// Maximum unitarily extractable work, with the passive state it leaves
/// behind and the unitary achieving it.
ErgotropyResult ergotropy(const DensityOperator& rho, const HermitianOperator& h);

/// Work value alone, skipping the passive-state assembly; for hot loops.
double ergotropy_value(const DensityOperator& rho, const HermitianOperator& h);

/// True iff rho commutes with h and its populations are anti-ordered
/// against the energies (pairs of degenerate energy levels are
/// unconstrained). Tolerances are relative to max(1, |h|_max).
bool is_passive(const DensityOperator& rho, const HermitianOperator& h);

/// State reachable from rho by a product unitary from which no further
/// product unitary can extract work. Both reduced states end up diagonal in
/// their local energy bases with anti-ordered populations; residual local
/// phase freedom is fixed to a canonical gauge so the construction depends
/// only on the local-unitary orbit of rho.
ErgotropyResult locally_passive_state(const DensityOperator& rho, const LocalHamiltonian& h);

/// Maximum work extractable by product unitaries; computed as the sum of
/// the two subsystem ergotropies.
ErgotropyResult local_ergotropy(const DensityOperator& rho, const LocalHamiltonian& h);

/// Work value alone, skipping the sigma^l assembly; for hot loops.
double local_ergotropy_value(const DensityOperator& rho, const LocalHamiltonian& h);

/// True iff both reduced states commute with their local Hamiltonians and
/// are anti-ordered against the local energies; equivalent to the local
/// ergotropy vanishing.
bool is_locally_passive(const DensityOperator& rho, const LocalHamiltonian& h);

/// Brute-force lower bound on the local ergotropy of a two-qubit state:
/// maximizes energy(rho) - energy(U rho U^dag) over product unitaries drawn
/// from a uniform grid over the three-angle SU(2) parametrization
/// (grid_density points per angle, identity included) plus `samples` Haar
/// draws per side. Energies are evaluated in the full composite space, so
/// this path shares no code with the analytic construction; the one-sided
/// split it uses to scan the product grid is itself validated on random
/// pairs before use.
double local_ergotropy_oracle(const DensityOperator& rho, const LocalHamiltonian& h,
                              std::size_t grid_density, Rng& rng, std::size_t samples);

}  // namespace qbat
