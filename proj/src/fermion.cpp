#include "iqeb/fermion.hpp"

#include <stdexcept>

namespace iqeb {

double spin_orbital_one_body(const MolecularIntegrals& ints, int i, int k) {
  if (i % 2 != k % 2) return 0.0;
  return ints.one_body(i / 2, k / 2);
}

double spin_orbital_eri(const MolecularIntegrals& ints, int i, int j, int k,
                        int l) {
  // <ij|kl> = (ik|jl) in chemists' notation, spin-diagonal in (i,k) and (j,l).
  if (i % 2 != k % 2 || j % 2 != l % 2) return 0.0;
  return ints.two_body(i / 2, k / 2, j / 2, l / 2);
}

FermionOperator molecular_hamiltonian(const MolecularIntegrals& ints) {
  const int n = ints.n_spin_orbitals();
  FermionOperator h;
  h.add_term(ints.core_energy(), {});

  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double v = spin_orbital_one_body(ints, i, k);
      if (v != 0.0) h.add_term(v, {{i, true}, {k, false}});
    }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;  // a+_i a+_i = 0
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (k == l) continue;
          const double v = 0.5 * spin_orbital_eri(ints, i, j, l, k);
          if (v != 0.0)
            h.add_term(v, {{i, true}, {j, true}, {k, false}, {l, false}});
        }
    }
  return h;
}

PauliSum jw_ladder(int orbital, bool creation, int n_qubits) {
  if (orbital < 0 || orbital >= n_qubits)
    throw std::out_of_range("spin-orbital index outside qubit register");
  std::uint64_t z_chain = (std::uint64_t{1} << orbital) - 1;
  const PauliString x_part = PauliString::from_masks(
      std::uint64_t{1} << orbital, z_chain);
  const PauliString y_part = PauliString::from_masks(
      std::uint64_t{1} << orbital, z_chain | (std::uint64_t{1} << orbital));
  const complex iy = creation ? complex{0.0, -0.5} : complex{0.0, 0.5};
  return PauliSum(0.5, x_part) + PauliSum(iy, y_part);
}

PauliSum jw_transform(const FermionOperator& op, int n_qubits) {
  PauliAccumulator acc;
  for (const auto& term : op.terms()) {
    PauliSum image = PauliSum::identity(term.coefficient);
    for (const auto& ladder : term.ops)
      image = image * jw_ladder(ladder.orbital, ladder.creation, n_qubits);
    acc.add(image);
  }
  return acc.take();
}

std::uint64_t hartree_fock_reference(int n_electrons, int n_qubits) {
  if (n_electrons <= 0 || n_electrons > n_qubits)
    throw std::invalid_argument("electron count outside (0, n_qubits]");
  return n_electrons == 64 ? ~std::uint64_t{0}
                           : (std::uint64_t{1} << n_electrons) - 1;
}

}  // namespace iqeb
