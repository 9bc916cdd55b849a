#include "iqeb/ground_state.hpp"

#include <Eigen/Eigenvalues>
#include <bit>
#include <stdexcept>
#include <vector>

namespace iqeb {

namespace {

std::vector<std::uint64_t> sector_basis(int n_qubits,
                                        std::optional<int> particle_sector) {
  std::vector<std::uint64_t> basis;
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  for (std::uint64_t idx = 0; idx < dim; ++idx)
    if (!particle_sector || std::popcount(idx) == *particle_sector)
      basis.push_back(idx);
  if (basis.empty()) throw std::invalid_argument("empty particle sector");
  return basis;
}

void project_sector(StateVector& psi, int particles) {
  for (Eigen::Index i = 0; i < psi.size(); ++i)
    if (std::popcount(static_cast<std::uint64_t>(i)) != particles) psi[i] = 0.0;
}

GroundState dense_ground(const PauliSum& h, int n_qubits,
                         std::optional<int> particle_sector) {
  const auto basis = sector_basis(n_qubits, particle_sector);
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const StateVector column =
        apply_pauli_sum(h, basis_state(basis[col], n_qubits));
    for (Eigen::Index row = 0; row < dim; ++row)
      m(row, col) = column[static_cast<Eigen::Index>(basis[row])];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("dense eigensolver failed");
  GroundState gs{solver.eigenvalues()(0),
                 StateVector::Zero(Eigen::Index{1} << n_qubits)};
  const Eigen::VectorXcd vec = solver.eigenvectors().col(0);
  for (Eigen::Index row = 0; row < dim; ++row)
    gs.state[static_cast<Eigen::Index>(basis[row])] = vec[row];
  return gs;
}

// Lanczos with full re-orthogonalization, restarted from the best Ritz
// vector until the ground eigenvalue settles to tolerance.
GroundState lanczos_ground(const PauliSum& h, int n_qubits,
                           std::optional<int> particle_sector) {
  constexpr int kKrylovDim = 120;
  constexpr int kMaxRestarts = 60;
  constexpr double kTol = 1e-12;

  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  StateVector v = StateVector::Zero(dim);
  if (particle_sector) {
    // Deterministic in-sector start: spread over all sector basis states.
    for (Eigen::Index i = 0; i < dim; ++i)
      if (std::popcount(static_cast<std::uint64_t>(i)) == *particle_sector)
        v[i] = 1.0 + 1e-3 * static_cast<double>(i % 7);
  } else {
    for (Eigen::Index i = 0; i < dim; ++i)
      v[i] = 1.0 + 1e-3 * static_cast<double>(i % 7);
  }
  v.normalize();

  double previous = std::numeric_limits<double>::max();
  for (int restart = 0; restart < kMaxRestarts; ++restart) {
    std::vector<StateVector> basis;
    std::vector<double> alpha, beta;
    basis.push_back(v);
    for (int k = 0; k < kKrylovDim; ++k) {
      StateVector w = apply_pauli_sum(h, basis.back());
      if (particle_sector) project_sector(w, *particle_sector);
      alpha.push_back(inner_product(basis.back(), w).real());
      // Full re-orthogonalization, twice for numerical safety.
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : basis) w -= inner_product(b, w) * b;
      const double norm = w.norm();
      if (norm < 1e-13) break;
      beta.push_back(norm);
      basis.push_back(w / norm);
    }

    const auto m = static_cast<Eigen::Index>(alpha.size());
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
      tri(i, i) = alpha[static_cast<std::size_t>(i)];
      if (i + 1 < m) {
        tri(i, i + 1) = beta[static_cast<std::size_t>(i)];
        tri(i + 1, i) = beta[static_cast<std::size_t>(i)];
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(tri);
    const double energy = solver.eigenvalues()(0);
    StateVector ritz = StateVector::Zero(dim);
    for (Eigen::Index i = 0; i < m; ++i)
      ritz += solver.eigenvectors()(i, 0) * basis[static_cast<std::size_t>(i)];
    ritz.normalize();

    // Residual check against the full operator.
    StateVector r = apply_pauli_sum(h, ritz);
    if (particle_sector) project_sector(r, *particle_sector);
    const double residual = (r - energy * ritz).norm();
    if (residual < 1e-9 && std::abs(energy - previous) < kTol)
      return {energy, std::move(ritz)};
    previous = energy;
    v = std::move(ritz);
  }
  throw std::runtime_error("Lanczos did not converge");
}

}  // namespace

GroundState exact_ground_energy(const PauliSum& h, int n_qubits,
                                std::optional<int> particle_sector,
                                EigenMethod method) {
  if (!h.is_hermitian())
    throw std::invalid_argument("ground-state solve needs a Hermitian sum");
  if (h.max_qubit() >= n_qubits)
    throw std::out_of_range("operator acts outside the register");
  if (method == EigenMethod::Auto)
    method = n_qubits <= 8 ? EigenMethod::Dense : EigenMethod::Lanczos;
  return method == EigenMethod::Dense
             ? dense_ground(h, n_qubits, particle_sector)
             : lanczos_ground(h, n_qubits, particle_sector);
}

}  // namespace iqeb
