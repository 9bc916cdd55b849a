#pragma once

#include <optional>

#include "iqeb/pauli.hpp"
#include "iqeb/statevector.hpp"

namespace iqeb {

struct GroundState {
  double energy;
  StateVector state;
};

enum class EigenMethod { Auto, Dense, Lanczos };

/// Lowest eigenpair of a Hermitian Pauli sum, optionally restricted to the
/// fixed-particle-number sector (bitmask popcount).  Dense eigensolve up to
/// 8 qubits, Lanczos with full re-orthogonalization beyond; throws on
/// non-convergence or a non-Hermitian input.
GroundState exact_ground_energy(const PauliSum& h, int n_qubits,
                                std::optional<int> particle_sector = {},
                                EigenMethod method = EigenMethod::Auto);

}  // namespace iqeb
