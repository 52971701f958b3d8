#pragma once

#include <filesystem>
#include <optional>

#include "qbat/battery.hpp"

namespace qbat {

/// Parse/validation failure of a state or Hamiltonian file; the message
/// names the violated invariant.
struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Loads a state file. Either
///   {"dim_a": 2, "dim_b": 2, "matrix": [[[re, im], ...], ...]}
/// with a row-major matrix of [re, im] pairs, or
///   {"pure": [[re, im], [re, im], [re, im], [re, im]]}
/// with normalized two-qubit amplitudes. The result is fully validated.
DensityOperator load_state(const std::filesystem::path& path);

void save_state(const std::filesystem::path& path, const DensityOperator& rho);

struct HamiltonianFile {
    LocalHamiltonian hamiltonian;
    std::optional<TwoQubitZZ> zz;  // set when the file used "two_qubit_zz"
};

/// Loads a Hamiltonian file. Either
///   {"type": "two_qubit_zz", "eps_a": 2.0, "eps_b": 1.0}
/// or
///   {"type": "local", "h_a": [[[re, im], ...], ...], "h_b": ...}.
HamiltonianFile load_hamiltonian(const std::filesystem::path& path);

}  // namespace qbat
