#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "iqeb/pauli.hpp"

namespace iqeb {

/// 2^n complex amplitudes, little-endian: qubit i is bit i of the basis
/// index, |1> marks an occupied spin orbital.
using StateVector = Eigen::VectorXcd;

inline int n_qubits_of(const StateVector& psi) {
  int n = 0;
  while ((Eigen::Index{1} << n) < psi.size()) ++n;
  return n;
}

StateVector basis_state(std::uint64_t occupation, int n_qubits);

/// out += coeff * (string |in>).
void add_pauli_string(const PauliString& s, complex coeff,
                      const StateVector& in, StateVector& out);

/// Unnormalized result of acting with the sum; O(terms * 2^n).
StateVector apply_pauli_sum(const PauliSum& p, const StateVector& psi);

/// Re <psi| h |psi> for Hermitian h; throws if h has complex coefficients
/// or the imaginary residue exceeds 1e-10.
double expectation(const PauliSum& h, const StateVector& psi);

complex inner_product(const StateVector& a, const StateVector& b);

struct Excitation;  // excitation.hpp

/// exp(theta T)|psi> for skew generators, evaluated through the closed form
/// psi + sin(theta) T psi + (1 - cos(theta)) T^2 psi (exact since T^3 = -T);
/// exp(i theta P)|psi> = cos(theta) psi + i sin(theta) P psi for Pauli-string
/// exponentials.
StateVector apply_excitation(const Excitation& g, double theta,
                             const StateVector& psi);

/// T|psi> for skew kinds, iP|psi> for exponential kinds: the derivative of
/// the element unitary at theta = 0 acting on psi.
StateVector apply_generator(const Excitation& g, const StateVector& psi);

}  // namespace iqeb
