#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "iqeb/excitation.hpp"
#include "iqeb/pauli.hpp"
#include "iqeb/statevector.hpp"

namespace iqeb {

/// Ordered ansatz elements applied to a reference determinant; elements are
/// appended to the left of the existing product, i.e. applied last.  The
/// slot map lets spin-complement pairs share one variational parameter.
struct Ansatz {
  int n_qubits = 0;
  std::uint64_t reference = 0;
  std::vector<Excitation> elements;
  std::vector<int> slots;

  int parameter_count() const;

  /// Append with a fresh parameter slot; returns the slot index.
  int append(const Excitation& e);
  /// Append sharing an existing slot.
  void append_shared(const Excitation& e, int slot);
};

StateVector prepare_state(const Ansatz& a, const Eigen::VectorXd& theta);

double energy(const Ansatz& a, const Eigen::VectorXd& theta,
              const PauliSum& h);

Eigen::VectorXd gradient(const Ansatz& a, const Eigen::VectorXd& theta,
                         const PauliSum& h);

/// One pass: expectation value and d/d theta for every slot, via a forward
/// state sweep and one adjoint sweep (one Hamiltonian application total).
double energy_and_gradient(const Ansatz& a, const Eigen::VectorXd& theta,
                           const PauliSum& h, Eigen::VectorXd& grad_out);

/// d<H>/d theta_p at theta_p = 0 for every pool element, evaluated as
/// 2 Re <H psi | T_p psi> with H psi computed once and shared.
std::vector<double> pool_gradients(const StateVector& psi, const PauliSum& h,
                                   const ExcitationPool& pool,
                                   int threads = 1);

}  // namespace iqeb
