#include "iqeb/ansatz.hpp"

#include <stdexcept>

#include "iqeb/threading.hpp"

namespace iqeb {

int Ansatz::parameter_count() const {
  int max_slot = -1;
  for (const int s : slots) max_slot = std::max(max_slot, s);
  return max_slot + 1;
}

int Ansatz::append(const Excitation& e) {
  const int slot = parameter_count();
  elements.push_back(e);
  slots.push_back(slot);
  return slot;
}

void Ansatz::append_shared(const Excitation& e, int slot) {
  if (slot < 0 || slot >= parameter_count())
    throw std::invalid_argument("shared slot does not exist");
  elements.push_back(e);
  slots.push_back(slot);
}

StateVector prepare_state(const Ansatz& a, const Eigen::VectorXd& theta) {
  if (theta.size() != a.parameter_count())
    throw std::invalid_argument("parameter vector length mismatch");
  StateVector psi = basis_state(a.reference, a.n_qubits);
  for (std::size_t p = 0; p < a.elements.size(); ++p)
    psi = apply_excitation(a.elements[p], theta[a.slots[p]], psi);
  return psi;
}

double energy(const Ansatz& a, const Eigen::VectorXd& theta,
              const PauliSum& h) {
  return expectation(h, prepare_state(a, theta));
}

double energy_and_gradient(const Ansatz& a, const Eigen::VectorXd& theta,
                           const PauliSum& h, Eigen::VectorXd& grad_out) {
  if (theta.size() != a.parameter_count())
    throw std::invalid_argument("parameter vector length mismatch");
  const std::size_t m = a.elements.size();

  // Forward sweep, keeping every intermediate state.
  std::vector<StateVector> forward;
  forward.reserve(m + 1);
  forward.push_back(basis_state(a.reference, a.n_qubits));
  for (std::size_t p = 0; p < m; ++p)
    forward.push_back(
        apply_excitation(a.elements[p], theta[a.slots[p]], forward.back()));

  const StateVector h_psi = apply_pauli_sum(h, forward.back());
  const complex e = inner_product(forward.back(), h_psi);
  if (std::abs(e.imag()) > 1e-10)
    throw std::runtime_error("energy has a non-real residue");

  // Adjoint sweep: phi_p = (U_{p+1} ... U_{m-1})^dagger H |psi_m> and
  // dE/d theta_p = 2 Re <phi_p | T_p | U_p psi_p>, with T U = U T.
  grad_out = Eigen::VectorXd::Zero(theta.size());
  StateVector phi = h_psi;
  for (std::size_t p = m; p-- > 0;) {
    const StateVector t_psi = apply_generator(a.elements[p], forward[p + 1]);
    grad_out[a.slots[p]] += 2.0 * inner_product(phi, t_psi).real();
    phi = apply_excitation(a.elements[p], -theta[a.slots[p]], phi);
  }
  return e.real();
}

Eigen::VectorXd gradient(const Ansatz& a, const Eigen::VectorXd& theta,
                         const PauliSum& h) {
  Eigen::VectorXd g;
  energy_and_gradient(a, theta, h, g);
  return g;
}

std::vector<double> pool_gradients(const StateVector& psi, const PauliSum& h,
                                   const ExcitationPool& pool, int threads) {
  if (!h.is_hermitian())
    throw std::invalid_argument("pool gradients need a Hermitian sum");
  const StateVector h_psi = apply_pauli_sum(h, psi);
  std::vector<double> grads(pool.elements.size());
  parallel_for(pool.elements.size(), threads, [&](std::size_t p) {
    const StateVector t_psi = apply_generator(pool.elements[p], psi);
    grads[p] = 2.0 * inner_product(h_psi, t_psi).real();
  });
  return grads;
}

}  // namespace iqeb
