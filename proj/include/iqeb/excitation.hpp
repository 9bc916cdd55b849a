#pragma once

#include <string>
#include <vector>

#include "iqeb/pauli.hpp"

namespace iqeb {

enum class ExcitationKind {
  QubitSingle,
  QubitDouble,
  FermionicSingle,
  FermionicDouble,
  PauliExponential,
};

bool is_skew_kind(ExcitationKind kind);
std::string kind_name(ExcitationKind kind);

/// One ansatz element: a skew-Hermitian generator T (the element is
/// exp(theta T)) or a Hermitian Pauli string P (the element is
/// exp(i theta P)), plus the CNOT cost of its circuit.
///
/// Indices are stored canonically: singles ascending, doubles with each
/// pair ascending and the lexicographically smaller pair first; any
/// orientation sign is absorbed into the generator.
struct Excitation {
  ExcitationKind kind;
  std::vector<int> indices;
  PauliSum generator;
  int cnot_cost = 0;

  bool operator==(const Excitation& other) const = default;
  std::string label() const;
};

Excitation qubit_single(int i, int k);
Excitation qubit_double(int i, int j, int k, int l);
Excitation fermionic_single(int i, int k, int n_qubits);
Excitation fermionic_double(int i, int j, int k, int l, int n_qubits);

/// exp(i theta P) for an XY string on 2 or 4 distinct qubits with an odd
/// number of Ys; implemented by a CNOT staircase of cost 2(len - 1).
Excitation pauli_exponential(
    const std::vector<std::pair<int, PauliOp>>& letters);

/// Same excitation on the opposite-spin orbitals: every index i maps to its
/// partner (i^1 under the interleaved spin convention).  Rejects the
/// PauliExponential kind.
Excitation spin_complement(const Excitation& g, int n_qubits);

bool is_self_complement(const Excitation& g, int n_qubits);

enum class PoolKind {
  Qubit,
  Fermionic,
  FermionicSpinComplementPairs,
  PauliExponential,
};

std::string pool_kind_name(PoolKind kind);

/// Candidate ansatz elements screened each iteration.  For the
/// spin-complement-pairs kind, `pairing` groups element indices that share
/// one variational parameter; other kinds leave it empty and every element
/// is its own candidate.
struct ExcitationPool {
  PoolKind kind;
  std::vector<Excitation> elements;
  std::vector<std::vector<int>> pairing;

  std::size_t candidate_count() const {
    return pairing.empty() ? elements.size() : pairing.size();
  }
};

ExcitationPool build_pool(PoolKind kind, int n_qubits);

struct AnsatzResources {
  long cnot_total = 0;
  int parameter_count = 0;
};

/// Totals over an element list; slots[p] is the parameter slot of element p
/// (shared slots counted once).
AnsatzResources ansatz_resources(const std::vector<Excitation>& elements,
                                 const std::vector<int>& slots);
AnsatzResources ansatz_resources(const std::vector<Excitation>& elements);

}  // namespace iqeb
