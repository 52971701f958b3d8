#include "qbat/battery.hpp"

#include <stdexcept>

namespace qbat {

TwoQubitZZ::TwoQubitZZ(double ea, double eb) : eps_a(ea), eps_b(eb) {
    if (!(eps_b >= 0.0) || !(eps_a > eps_b))
        throw std::invalid_argument("TwoQubitZZ: requires eps_a > eps_b >= 0");
}

LocalHamiltonian TwoQubitZZ::local() const {
    ComplexMatrix za(2, 2), zb(2, 2);
    za(0, 0) = eps_a;
    za(1, 1) = -eps_a;
    zb(0, 0) = eps_b;
    zb(1, 1) = -eps_b;
    return {HermitianOperator(std::move(za)), HermitianOperator(std::move(zb))};
}

HermitianOperator full_hamiltonian(const LocalHamiltonian& h) {
    const ComplexMatrix full =
        tensor_product(h.h_a.matrix(), ComplexMatrix::identity(h.dim_b())) +
        tensor_product(ComplexMatrix::identity(h.dim_a()), h.h_b.matrix());
    return HermitianOperator(full);
}

double energy(const DensityOperator& rho, const HermitianOperator& h) {
    if (rho.dim() != h.dim()) throw std::invalid_argument("energy: dimension mismatch");
    return trace(rho.matrix() * h.matrix()).real();
}

double energy(const DensityOperator& rho, const LocalHamiltonian& h) {
    if (rho.dim_a() != h.dim_a() || rho.dim_b() != h.dim_b())
        throw std::invalid_argument("energy: dimension mismatch");
    return energy(rho, full_hamiltonian(h));
}

double subsystem_energy(const ComplexMatrix& reduced, const HermitianOperator& h) {
    if (reduced.rows() != h.dim() || reduced.cols() != h.dim())
        throw std::invalid_argument("subsystem_energy: dimension mismatch");
    return trace(reduced * h.matrix()).real();
}

}  // namespace qbat
