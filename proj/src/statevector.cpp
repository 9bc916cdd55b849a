#include "iqeb/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "iqeb/excitation.hpp"

namespace iqeb {

StateVector basis_state(std::uint64_t occupation, int n_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (occupation >= static_cast<std::uint64_t>(dim))
    throw std::out_of_range("occupation bitmask outside register");
  StateVector psi = StateVector::Zero(dim);
  psi[static_cast<Eigen::Index>(occupation)] = 1.0;
  return psi;
}

void add_pauli_string(const PauliString& s, complex coeff,
                      const StateVector& in, StateVector& out) {
  const std::uint64_t x = s.x_mask();
  const std::uint64_t z = s.z_mask();
  // Per-basis-state action: |idx> -> i^{|Y|} (-1)^{popcount(idx & z)} |idx^x>.
  static const complex kIPowers[4] = {
      {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  const complex c = coeff * kIPowers[std::popcount(s.y_mask()) % 4];
  const auto dim = static_cast<std::uint64_t>(in.size());
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    const complex v = std::popcount(idx & z) & 1 ? -c : c;
    out[static_cast<Eigen::Index>(idx ^ x)] += v * in[idx];
  }
}

StateVector apply_pauli_sum(const PauliSum& p, const StateVector& psi) {
  const int n = n_qubits_of(psi);
  if (p.max_qubit() >= n)
    throw std::out_of_range("Pauli sum acts outside the register");
  StateVector out = StateVector::Zero(psi.size());
  for (const auto& term : p.terms())
    add_pauli_string(term.string, term.coefficient, psi, out);
  return out;
}

double expectation(const PauliSum& h, const StateVector& psi) {
  if (!h.is_hermitian())
    throw std::invalid_argument("expectation requires a Hermitian Pauli sum");
  const complex value = inner_product(psi, apply_pauli_sum(h, psi));
  if (std::abs(value.imag()) > 1e-10)
    throw std::runtime_error("expectation has a non-real residue");
  return value.real();
}

complex inner_product(const StateVector& a, const StateVector& b) {
  return a.dot(b);  // Eigen conjugates the left argument
}

StateVector apply_excitation(const Excitation& g, double theta,
                             const StateVector& psi) {
  if (g.generator.max_qubit() >= n_qubits_of(psi))
    throw std::out_of_range("excitation acts outside the register");
  if (is_skew_kind(g.kind)) {
    const StateVector t1 = apply_pauli_sum(g.generator, psi);
    const StateVector t2 = apply_pauli_sum(g.generator, t1);
    return psi + std::sin(theta) * t1 + (1.0 - std::cos(theta)) * t2;
  }
  const StateVector p1 = apply_pauli_sum(g.generator, psi);
  return std::cos(theta) * psi + complex{0.0, std::sin(theta)} * p1;
}

StateVector apply_generator(const Excitation& g, const StateVector& psi) {
  StateVector out = apply_pauli_sum(g.generator, psi);
  if (!is_skew_kind(g.kind)) out *= complex{0.0, 1.0};
  return out;
}

}  // namespace iqeb
