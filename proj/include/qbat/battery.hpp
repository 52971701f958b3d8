#pragma once

#include "qbat/operators.hpp"

namespace qbat {

/// Local Hamiltonian H_A (x) I + I (x) H_B of a bipartite battery.
/// Energies are in multiples of a reference unit.
struct LocalHamiltonian {
    HermitianOperator h_a;
    HermitianOperator h_b;

    std::size_t dim_a() const { return h_a.dim(); }
    std::size_t dim_b() const { return h_b.dim(); }
};

/// Two-qubit battery with H = eps_a sz (x) I + eps_b I (x) sz.
/// Requires eps_a > eps_b >= 0; equal splittings are rejected so that the
/// composite spectrum stays nondegenerate.
struct TwoQubitZZ {
    TwoQubitZZ(double eps_a, double eps_b);

    double eps_a;
    double eps_b;

    LocalHamiltonian local() const;
};

/// The composite operator H_A (x) I_B + I_A (x) H_B.
HermitianOperator full_hamiltonian(const LocalHamiltonian& h);

/// tr(rho H); the tiny imaginary residue of the trace is discarded.
double energy(const DensityOperator& rho, const HermitianOperator& h);
double energy(const DensityOperator& rho, const LocalHamiltonian& h);

/// Energy of a reduced (subsystem) operator against a subsystem Hamiltonian.
double subsystem_energy(const ComplexMatrix& reduced, const HermitianOperator& h);

}  // namespace qbat
