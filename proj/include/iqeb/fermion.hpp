#pragma once

#include <cstdint>
#include <vector>

#include "iqeb/fcidump.hpp"
#include "iqeb/pauli.hpp"

namespace iqeb {

struct LadderOp {
  int orbital;
  bool creation;

  bool operator==(const LadderOp&) const = default;
};

struct FermionTerm {
  complex coefficient;
  std::vector<LadderOp> ops;  // stored exactly as given, no normal ordering
};

/// Weighted sum of ladder-operator products over spin orbitals.
class FermionOperator {
 public:
  FermionOperator() = default;

  void add_term(complex coefficient, std::vector<LadderOp> ops) {
    terms_.push_back({coefficient, std::move(ops)});
  }

  const std::vector<FermionTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

 private:
  std::vector<FermionTerm> terms_;
};

/// Second-quantized molecular Hamiltonian over spin orbitals, with the core
/// energy carried as an explicit identity term (empty ladder sequence).
///
/// Spin orbitals interleave: spatial p maps to 2p (alpha) and 2p+1 (beta).
/// One-body coefficients are h_pq with a spin delta; two-body coefficients
/// are (1/2)<ij|lk> on a+_i a+_j a_k a_l, with <ij|kl> = (il|jk) in the
/// chemists' convention of the integral tables.
FermionOperator molecular_hamiltonian(const MolecularIntegrals& ints);

/// Jordan-Wigner ladder image: (X_i -/+ iY_i)/2 * Z_{i-1} ... Z_0.
PauliSum jw_ladder(int orbital, bool creation, int n_qubits);

PauliSum jw_transform(const FermionOperator& op, int n_qubits);

/// Occupation bitmask with the lowest n_electrons spin orbitals filled.
std::uint64_t hartree_fock_reference(int n_electrons, int n_qubits);

/// Spin-orbital one-body coefficient h_ik (zero across spins).
double spin_orbital_one_body(const MolecularIntegrals& ints, int i, int k);

/// Physicists' spin-orbital integral <ij|kl>.
double spin_orbital_eri(const MolecularIntegrals& ints, int i, int j, int k,
                        int l);

}  // namespace iqeb
