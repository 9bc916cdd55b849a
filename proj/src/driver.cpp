#include "iqeb/driver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "iqeb/fermion.hpp"
#include "iqeb/threading.hpp"

namespace iqeb {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

ChosenElement describe(const Excitation& e) {
  return {kind_name(e.kind), e.indices};
}

// Candidate order: descending |gradient|, pool index breaking ties.
std::vector<std::size_t> rank_by_gradient(const std::vector<double>& grads) {
  std::vector<std::size_t> order(grads.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return std::abs(grads[a]) > std::abs(grads[b]);
                   });
  return order;
}

struct Candidate {
  std::size_t pool_index = 0;
  double delta_e = 0.0;
  MinimizeResult opt;
};

}  // namespace

std::string termination_name(Termination t) {
  switch (t) {
    case Termination::EpsilonReached: return "epsilon_reached";
    case Termination::MaxIterations: return "max_iterations";
    case Termination::GradientFloor: return "gradient_floor";
  }
  return "?";
}

ReferenceEnergies reference_energies(const PauliSum& h,
                                     const MolecularIntegrals& ints) {
  const int n = ints.n_spin_orbitals();
  const StateVector hf =
      basis_state(hartree_fock_reference(ints.n_electrons(), n), n);
  return {expectation(h, hf),
          exact_ground_energy(h, n, ints.n_electrons()).energy};
}

RunRecord iqeb_run(const PauliSum& h, const MolecularIntegrals& ints,
                   const GrowthConfig& config, const std::string& fixture) {
  if (config.pool_kind != PoolKind::Qubit)
    throw std::invalid_argument("the iterative runner screens the qubit pool");
  if (config.top_n < 1 || config.epsilon <= 0.0)
    throw std::invalid_argument("need top_n >= 1 and epsilon > 0");

  const int n = ints.n_spin_orbitals();
  const ExcitationPool pool = build_pool(PoolKind::Qubit, n);

  RunRecord record;
  record.method = "iqeb";
  record.fixture = fixture;
  record.config = config;
  record.n_qubits = n;
  const ReferenceEnergies refs = reference_energies(h, ints);
  record.e_hf = refs.e_hf;
  record.e_fci = refs.e_fci;

  Ansatz ansatz{n, hartree_fock_reference(ints.n_electrons(), n), {}, {}};
  Eigen::VectorXd theta;
  double e_prev = refs.e_hf;
  record.termination = Termination::MaxIterations;

  for (int m = 1; m <= config.max_iterations; ++m) {
    const auto t0 = Clock::now();
    IterationRecord iter;
    iter.m = m;

    const StateVector psi = prepare_state(ansatz, theta);
    const std::vector<double> grads =
        pool_gradients(psi, h, pool, config.threads);
    const auto order = rank_by_gradient(grads);
    iter.largest_gradient = std::abs(grads[order.front()]);
    iter.gradients_above_floor = static_cast<int>(
        std::count_if(grads.begin(), grads.end(), [](double g) {
          return std::abs(g) >= kGradientFloor;
        }));

    if (iter.largest_gradient < kGradientFloor) {
      record.termination = Termination::GradientFloor;
      break;
    }

    // Step 3: minimize over all parameters for each of the n largest-
    // gradient candidates, warm-started with the new parameter at zero.
    const std::size_t n_candidates =
        std::min<std::size_t>(config.top_n, order.size());
    std::vector<Candidate> candidates(n_candidates);
    parallel_for(n_candidates, config.threads, [&](std::size_t c) {
      Ansatz trial = ansatz;
      trial.append(pool.elements[order[c]]);
      Eigen::VectorXd theta_trial(theta.size() + 1);
      theta_trial << theta, 0.0;
      MinimizeResult opt = minimize(trial, theta_trial, h, config.optimizer);
      candidates[c] = {order[c], e_prev - opt.value, std::move(opt)};
    });

    // Step 4: largest energy reduction, pool index breaking ties.
    std::size_t best = 0;
    for (std::size_t c = 1; c < n_candidates; ++c) {
      const bool better =
          candidates[c].delta_e > candidates[best].delta_e ||
          (candidates[c].delta_e == candidates[best].delta_e &&
           candidates[c].pool_index < candidates[best].pool_index);
      if (better) best = c;
    }
    const Candidate& chosen = candidates[best];
    iter.chosen.push_back(describe(pool.elements[chosen.pool_index]));
    iter.gradient_of_chosen = grads[chosen.pool_index];
    iter.delta_e = chosen.delta_e;

    if (chosen.delta_e < config.epsilon) {
      iter.energy = e_prev;
      const AnsatzResources res = ansatz_resources(ansatz.elements, ansatz.slots);
      iter.parameter_count = res.parameter_count;
      iter.cnot_total = res.cnot_total;
      iter.wall_ms = elapsed_ms(t0);
      record.iterations.push_back(std::move(iter));
      record.termination = Termination::EpsilonReached;
      break;
    }

    ansatz.append(pool.elements[chosen.pool_index]);
    theta = chosen.opt.theta;
    double e_new = chosen.opt.value;

    // Step 5: spin-complement append with an independent parameter,
    // started at the partner's optimum, then a full re-optimization.
    if (config.spin_complement_append &&
        !is_self_complement(pool.elements[chosen.pool_index], n)) {
      const Excitation comp =
          spin_complement(pool.elements[chosen.pool_index], n);
      ansatz.append(comp);
      Eigen::VectorXd theta_ext(theta.size() + 1);
      theta_ext << theta, theta[theta.size() - 1];
      const MinimizeResult opt = minimize(ansatz, theta_ext, h,
                                          config.optimizer);
      theta = opt.theta;
      e_new = opt.value;
      iter.chosen.push_back(describe(comp));
    }

    iter.energy = e_new;
    const AnsatzResources res = ansatz_resources(ansatz.elements, ansatz.slots);
    iter.parameter_count = res.parameter_count;
    iter.cnot_total = res.cnot_total;
    iter.wall_ms = elapsed_ms(t0);
    record.iterations.push_back(std::move(iter));
    e_prev = e_new;
  }

  record.final_energy = e_prev;
  record.final_ansatz = std::move(ansatz);
  record.final_theta = std::move(theta);
  return record;
}

RunRecord gradient_greedy_run(const PauliSum& h,
                              const MolecularIntegrals& ints,
                              const GrowthConfig& config,
                              const std::string& fixture) {
  if (config.epsilon <= 0.0)
    throw std::invalid_argument("need epsilon > 0");
  const int n = ints.n_spin_orbitals();
  const ExcitationPool pool = build_pool(config.pool_kind, n);
  const bool paired = !pool.pairing.empty();

  RunRecord record;
  record.method = paired ? "adapt"
                  : config.pool_kind == PoolKind::PauliExponential
                      ? "qubit-adapt"
                      : config.pool_kind == PoolKind::Qubit
                          ? "greedy-qubit"
                          : "greedy-fermionic";
  record.fixture = fixture;
  record.config = config;
  record.n_qubits = n;
  const ReferenceEnergies refs = reference_energies(h, ints);
  record.e_hf = refs.e_hf;
  record.e_fci = refs.e_fci;

  Ansatz ansatz{n, hartree_fock_reference(ints.n_electrons(), n), {}, {}};
  Eigen::VectorXd theta;
  double e_prev = refs.e_hf;
  record.termination = Termination::MaxIterations;

  for (int m = 1; m <= config.max_iterations; ++m) {
    const auto t0 = Clock::now();
    IterationRecord iter;
    iter.m = m;

    const StateVector psi = prepare_state(ansatz, theta);
    const std::vector<double> grads =
        pool_gradients(psi, h, pool, config.threads);

    // Candidates are pool elements, or complement groups sharing one slot.
    const std::size_t n_candidates = pool.candidate_count();
    double best_grad = 0.0;
    std::size_t best = 0;
    for (std::size_t c = 0; c < n_candidates; ++c) {
      double g = 0.0;
      if (paired)
        for (const int member : pool.pairing[c]) g += grads[member];
      else
        g = grads[c];
      if (std::abs(g) > std::abs(best_grad)) {
        best_grad = g;
        best = c;
      }
    }
    iter.largest_gradient = std::abs(best_grad);
    iter.gradients_above_floor = static_cast<int>(
        std::count_if(grads.begin(), grads.end(), [](double g) {
          return std::abs(g) >= kGradientFloor;
        }));

    if (iter.largest_gradient < kGradientFloor) {
      record.termination = Termination::GradientFloor;
      break;
    }
    if (iter.largest_gradient < config.epsilon) {
      // Gradient-based exit: nothing appended, no energy reduction left.
      iter.delta_e = 0.0;
      iter.energy = e_prev;
      iter.gradient_of_chosen = best_grad;
      const AnsatzResources res =
          ansatz_resources(ansatz.elements, ansatz.slots);
      iter.parameter_count = res.parameter_count;
      iter.cnot_total = res.cnot_total;
      iter.wall_ms = elapsed_ms(t0);
      record.iterations.push_back(std::move(iter));
      record.termination = Termination::EpsilonReached;
      break;
    }

    if (paired) {
      int slot = -1;
      for (const int member : pool.pairing[best]) {
        if (slot < 0)
          slot = ansatz.append(pool.elements[member]);
        else
          ansatz.append_shared(pool.elements[member], slot);
        iter.chosen.push_back(describe(pool.elements[member]));
      }
    } else {
      ansatz.append(pool.elements[best]);
      iter.chosen.push_back(describe(pool.elements[best]));
    }
    iter.gradient_of_chosen = best_grad;

    Eigen::VectorXd theta_ext(theta.size() + 1);
    theta_ext << theta, 0.0;
    const MinimizeResult opt = minimize(ansatz, theta_ext, h, config.optimizer);
    theta = opt.theta;
    iter.delta_e = e_prev - opt.value;
    iter.energy = opt.value;
    const AnsatzResources res = ansatz_resources(ansatz.elements, ansatz.slots);
    iter.parameter_count = res.parameter_count;
    iter.cnot_total = res.cnot_total;
    iter.wall_ms = elapsed_ms(t0);
    record.iterations.push_back(std::move(iter));
    e_prev = opt.value;
  }

  record.final_energy = e_prev;
  record.final_ansatz = std::move(ansatz);
  record.final_theta = std::move(theta);
  return record;
}

Ansatz build_uccsd_ansatz(const MolecularIntegrals& ints) {
  const int n = ints.n_spin_orbitals();
  const int n_e = ints.n_electrons();
  Ansatz ansatz{n, hartree_fock_reference(n_e, n), {}, {}};

  // Spin-preserving singles: occupied -> virtual with matching spin.
  for (int i = 0; i < n_e; ++i)
    for (int a = n_e; a < n; ++a)
      if (i % 2 == a % 2) ansatz.append(fermionic_single(a, i, n));

  // Spin-preserving doubles: the created spin pair matches the annihilated
  // spin pair as a multiset.
  for (int i = 0; i < n_e; ++i)
    for (int j = i + 1; j < n_e; ++j)
      for (int a = n_e; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          const int occ_spin = i % 2 + j % 2;
          const int virt_spin = a % 2 + b % 2;
          if (occ_spin != virt_spin) continue;
          ansatz.append(fermionic_double(a, b, i, j, n));
        }
  return ansatz;
}

UccsdResult uccsd_baseline(const PauliSum& h, const MolecularIntegrals& ints,
                           const OptimizerSettings& settings) {
  UccsdResult result;
  result.ansatz = build_uccsd_ansatz(ints);
  const MinimizeResult opt =
      minimize(result.ansatz, Eigen::VectorXd::Zero(result.ansatz.parameter_count()),
               h, settings);
  result.energy = opt.value;
  result.theta = opt.theta;
  result.budget_exhausted = opt.budget_exhausted;
  const AnsatzResources res =
      ansatz_resources(result.ansatz.elements, result.ansatz.slots);
  result.parameter_count = res.parameter_count;
  result.cnot_total = res.cnot_total;
  return result;
}

}  // namespace iqeb
