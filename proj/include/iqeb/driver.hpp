#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iqeb/ansatz.hpp"
#include "iqeb/bfgs.hpp"
#include "iqeb/excitation.hpp"
#include "iqeb/fcidump.hpp"
#include "iqeb/ground_state.hpp"

namespace iqeb {

enum class Selection { TopNEnergyReduction, LargestGradient };
enum class Termination { EpsilonReached, MaxIterations, GradientFloor };

std::string termination_name(Termination t);

/// Gradients below this are numerically indistinguishable from round-off;
/// a screening pass where nothing clears it terminates the run.
inline constexpr double kGradientFloor = 1e-12;

struct GrowthConfig {
  PoolKind pool_kind = PoolKind::Qubit;
  Selection selection = Selection::TopNEnergyReduction;
  int top_n = 10;
  double epsilon = 1e-6;
  bool spin_complement_append = true;
  int max_iterations = 200;
  OptimizerSettings optimizer;
  int threads = 1;
  int seed = 0;  // interface stability only; the pipeline is deterministic
};

struct ChosenElement {
  std::string kind;
  std::vector<int> indices;
};

struct IterationRecord {
  int m = 0;
  std::vector<ChosenElement> chosen;
  double gradient_of_chosen = 0.0;
  double delta_e = 0.0;
  double energy = 0.0;
  int parameter_count = 0;
  long cnot_total = 0;
  double largest_gradient = 0.0;
  int gradients_above_floor = 0;
  double wall_ms = 0.0;
};

struct RunRecord {
  std::string method;
  std::string fixture;
  GrowthConfig config;
  int n_qubits = 0;
  double e_hf = 0.0;
  double e_fci = 0.0;
  std::vector<IterationRecord> iterations;
  Termination termination = Termination::MaxIterations;
  double final_energy = 0.0;
  // E^(m) is recorded after re-optimizing the appended spin complement.
  bool energy_recorded_after_complement = true;

  Ansatz final_ansatz;
  Eigen::VectorXd final_theta;
};

struct ReferenceEnergies {
  double e_hf = 0.0;
  double e_fci = 0.0;
};

ReferenceEnergies reference_energies(const PauliSum& h,
                                     const MolecularIntegrals& ints);

/// The iterative loop with gradient screening, top-n energy-reduction
/// selection, threshold exit, and optional spin-complement append.
RunRecord iqeb_run(const PauliSum& h, const MolecularIntegrals& ints,
                   const GrowthConfig& config,
                   const std::string& fixture = "");

/// Baseline runner: appends the largest-|gradient| pool element (or
/// spin-complement pair with one shared slot) each iteration and exits when
/// the largest gradient magnitude drops below epsilon.
RunRecord gradient_greedy_run(const PauliSum& h,
                              const MolecularIntegrals& ints,
                              const GrowthConfig& config,
                              const std::string& fixture = "");

struct UccsdResult {
  double energy = 0.0;
  int parameter_count = 0;
  long cnot_total = 0;
  bool budget_exhausted = false;
  Ansatz ansatz;
  Eigen::VectorXd theta;
};

/// Spin-preserving singles and doubles over the reference determinant,
/// one Trotter step, minimized from theta = 0.
UccsdResult uccsd_baseline(const PauliSum& h, const MolecularIntegrals& ints,
                           const OptimizerSettings& settings = {});

/// The spin-preserving UCCSD ansatz itself (singles then doubles,
/// lexicographic order), exposed for parameter-count checks.
Ansatz build_uccsd_ansatz(const MolecularIntegrals& ints);

}  // namespace iqeb
