// Acceptance gate: one pass/fail line per criterion.
//
//   iqeb_acceptance [--data DIR] [--criteria 1,2,...] [--extended]
//
// Criteria 1-7 form the default gate; 8 (the 14-qubit points) runs only
// with --extended.

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "iqeb/circuits.hpp"
#include "iqeb/driver.hpp"
#include "iqeb/fermion.hpp"
#include "iqeb/record.hpp"
#include "support/oracles.hpp"

using namespace iqeb;

namespace {

std::string g_data_dir = IQEB_DATA_DIR;

struct Measured {
  int iterations = 0;  // first iteration reaching the target error
  int parameters = 0;
  long cnots = 0;
  bool reached = false;
};

Measured at_accuracy(const RunRecord& r, double target_error) {
  Measured m;
  for (const auto& it : r.iterations) {
    if (it.energy - r.e_fci <= target_error) {
      m.iterations = it.m;
      m.parameters = it.parameter_count;
      m.cnots = it.cnot_total;
      m.reached = true;
      return m;
    }
  }
  return m;
}

struct Context {
  std::map<std::string, RunRecord> lih_runs;
  std::vector<const RunRecord*> all_runs;

  PauliSum lih_h;
  std::optional<MolecularIntegrals> lih_ints;

  void load_lih() {
    if (lih_ints) return;
    lih_ints = load_fcidump(g_data_dir + "/lih_1.546.fcidump");
    lih_h = jw_transform(molecular_hamiltonian(*lih_ints), 12);
  }

  const RunRecord& lih_run(const std::string& method) {
    load_lih();
    auto it = lih_runs.find(method);
    if (it != lih_runs.end()) return it->second;
    GrowthConfig config;
    config.threads = 4;
    if (method == "iqeb" || method == "iqeb-tight") {
      config.epsilon = method == "iqeb" ? 1e-6 : 1e-8;
      config.spin_complement_append = true;
      config.max_iterations = 100;
      lih_runs[method] = iqeb_run(lih_h, *lih_ints, config, "lih_1.546");
    } else {
      config.selection = Selection::LargestGradient;
      config.epsilon = 1e-8;
      // Caps sit well past each method's 1e-6 Ha crossing on this fixture.
      config.max_iterations = method == "qubit-adapt" ? 160
                              : method == "adapt" ? 60
                                                  : 80;
      config.pool_kind = method == "adapt"
                             ? PoolKind::FermionicSpinComplementPairs
                             : method == "qubit-adapt"
                                   ? PoolKind::PauliExponential
                                   : method == "greedy-qubit"
                                         ? PoolKind::Qubit
                                         : PoolKind::Fermionic;
      lih_runs[method] =
          gradient_greedy_run(lih_h, *lih_ints, config, "lih_1.546");
    }
    all_runs.push_back(&lih_runs[method]);
    return lih_runs[method];
  }
};

Context g_ctx;

struct Outcome {
  bool pass = false;
  std::string detail;
};

#define EXPECT(cond, label)                                       \
  do {                                                            \
    if (!(cond)) {                                                \
      return {false, std::string("failed: ") + label};            \
    }                                                             \
  } while (0)

Outcome criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto ints = load_fcidump(g_data_dir + "/h2_0.735.fcidump");
  const PauliSum h = jw_transform(molecular_hamiltonian(ints), 4);
  GrowthConfig config;
  config.epsilon = 1e-8;
  const RunRecord r = iqeb_run(h, ints, config, "h2_0.735");
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  static RunRecord keep = r;
  g_ctx.all_runs.push_back(&keep);
  EXPECT(std::abs(r.final_energy - r.e_fci) <= 1e-8, "|E - E_FCI| <= 1e-8");
  EXPECT(r.iterations.size() <= 4, "<= 4 iterations");
  EXPECT(r.termination == Termination::EpsilonReached, "epsilon exit");
  EXPECT(seconds < 5.0, "runtime < 5 s");
  char buf[160];
  std::snprintf(buf, sizeof buf, "error %.1e Ha, %zu iterations, %.2f s",
                r.final_energy - r.e_fci, r.iterations.size(), seconds);
  return {true, buf};
}

Outcome criterion_2() {
  const RunRecord& r = g_ctx.lih_run("iqeb");
  const Measured chem = at_accuracy(r, 1e-3);
  char buf[240];
  std::snprintf(buf, sizeof buf,
                "1e-3 Ha at iteration %d with %d parameters (limit 46); "
                "termination %s after %zu iterations at error %.2e Ha",
                chem.iterations, chem.parameters,
                termination_name(r.termination).c_str(), r.iterations.size(),
                r.final_energy - r.e_fci);
  const std::string detail = buf;
  EXPECT(r.termination == Termination::EpsilonReached,
         ("epsilon_reached termination — " + detail).c_str());
  EXPECT(chem.reached, ("chemical accuracy reached — " + detail).c_str());
  EXPECT(chem.parameters <= 46,
         ("chemical accuracy with <= 46 parameters — " + detail).c_str());
  EXPECT(std::abs(r.final_energy - r.e_fci) <= 1e-6,
         ("error <= 1e-6 Ha at termination — " + detail).c_str());
  return {true, detail};
}

Outcome criterion_3() {
  const RunRecord& q = g_ctx.lih_run("greedy-qubit");
  const RunRecord& f = g_ctx.lih_run("greedy-fermionic");
  const Measured mq = at_accuracy(q, 1e-6);
  const Measured mf = at_accuracy(f, 1e-6);
  EXPECT(mq.reached, "qubit pool reaches 1e-6 Ha");
  EXPECT(mf.reached, "fermionic pool reaches 1e-6 Ha");
  EXPECT(mf.iterations <= mq.iterations, "fermionic iterations <= qubit");
  EXPECT(mq.iterations <= 1.3 * mf.iterations,
         "qubit iterations <= 1.3 x fermionic");
  char buf[120];
  std::snprintf(buf, sizeof buf, "iterations to 1e-6: fermionic %d, qubit %d",
                mf.iterations, mq.iterations);
  return {true, buf};
}

Outcome criterion_4() {
  // Fig. 4-style comparison at the 1e-6 Ha crossing; the IQEB trajectory
  // comes from the tight-threshold run, which passes through that accuracy.
  const Measured iqeb = at_accuracy(g_ctx.lih_run("iqeb-tight"), 1e-6);
  const Measured adapt = at_accuracy(g_ctx.lih_run("adapt"), 1e-6);
  const Measured qadapt = at_accuracy(g_ctx.lih_run("qubit-adapt"), 1e-6);
  EXPECT(iqeb.reached && adapt.reached && qadapt.reached,
         "all three methods reach 1e-6 Ha");
  EXPECT(iqeb.parameters <= 2 * adapt.parameters,
         "params(IQEB) <= 2 x params(ADAPT)");
  EXPECT(std::abs(iqeb.iterations - adapt.iterations) <=
             0.25 * adapt.iterations,
         "iterations(IQEB) within 25% of ADAPT");
  EXPECT(iqeb.parameters < qadapt.parameters,
         "params(IQEB) < params(qubit-ADAPT)");
  EXPECT(iqeb.iterations < qadapt.iterations,
         "iterations(IQEB) < iterations(qubit-ADAPT)");
  EXPECT(iqeb.cnots < adapt.cnots, "CNOTs(IQEB) < CNOTs(ADAPT)");
  char buf[240];
  std::snprintf(buf, sizeof buf,
                "at 1e-6 Ha: IQEB %d it / %d params / %ld CNOTs; ADAPT %d / "
                "%d / %ld; qubit-ADAPT %d / %d / %ld",
                iqeb.iterations, iqeb.parameters, iqeb.cnots, adapt.iterations,
                adapt.parameters, adapt.cnots, qadapt.iterations,
                qadapt.parameters, qadapt.cnots);
  return {true, buf};
}

Outcome criterion_5() {
  std::mt19937 rng(97);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  // Circuit equivalence on 4 qubits, both kinds, random angles.
  const std::vector<Excitation> cases{
      qubit_single(1, 0), qubit_single(0, 3), qubit_double(3, 2, 1, 0),
      qubit_double(0, 2, 1, 3), qubit_double(0, 1, 2, 3)};
  for (const auto& g : cases) {
    const int want_cnots = g.kind == ExcitationKind::QubitSingle ? 2 : 13;
    for (int trial = 0; trial < 4; ++trial) {
      const double theta = angle(rng);
      const GateList gates = emit_circuit(g, theta);
      EXPECT(cnot_count(gates) == want_cnots, "CNOT count");
      const Eigen::Index dim = 16;
      Eigen::MatrixXcd uc(dim, dim), ue(dim, dim);
      for (Eigen::Index col = 0; col < dim; ++col) {
        uc.col(col) = apply_gates(gates, basis_state(col, 4));
        ue.col(col) = apply_excitation(g, theta, basis_state(col, 4));
      }
      Eigen::Index r = 0, c = 0;
      ue.cwiseAbs().maxCoeff(&r, &c);
      complex phase = uc(r, c) / ue(r, c);
      phase /= std::abs(phase);
      EXPECT((uc - phase * ue).cwiseAbs().maxCoeff() < 1e-10,
             "circuit matches closed form to 1e-10");
    }
  }
  // Cost formulas on enumerated index sets.
  for (int i = 0; i < 8; ++i)
    for (int k = 0; k < 8; ++k) {
      if (i == k) continue;
      const int lo = std::min(i, k), hi = std::max(i, k);
      EXPECT(fermionic_single(i, k, 8).cnot_cost == 2 * (hi - lo) + 1,
             "single cost 2(k-i)+1");
    }
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      for (int c = b + 1; c < 8; ++c)
        for (int d = c + 1; d < 8; ++d)
          for (const auto& p : {std::array{a, b, c, d}, std::array{a, c, b, d},
                                std::array{a, d, b, c}})
            EXPECT(fermionic_double(p[0], p[1], p[2], p[3], 8).cnot_cost ==
                       2 * (d + b - a - c) + 9,
                   "double cost 2(l+j-i-k)+9");
  EXPECT(pauli_exponential({{0, PauliOp::X}, {4, PauliOp::Y}}).cnot_cost == 2,
         "staircase cost, length 2");
  EXPECT(pauli_exponential({{0, PauliOp::Y},
                            {1, PauliOp::X},
                            {2, PauliOp::X},
                            {5, PauliOp::X}})
                 .cnot_cost == 6,
         "staircase cost, length 4");
  return {true, "2/13-CNOT circuits match closed forms; cost formulas hold"};
}

Outcome criterion_6() {
  auto choose = [](int n, int k) {
    long r = 1;
    for (int p = 1; p <= k; ++p) r = r * (n - p + 1) / p;
    return r;
  };
  EXPECT(build_pool(PoolKind::Qubit, 4).elements.size() == 9, "N=4 pool 9");
  EXPECT(build_pool(PoolKind::Qubit, 12).elements.size() == 1551,
         "N=12 pool 1551");
  EXPECT(build_pool(PoolKind::Qubit, 14).elements.size() == 3094,
         "N=14 pool 3094");
  for (const int n : {4, 6, 8, 12, 14}) {
    EXPECT(build_pool(PoolKind::Fermionic, n).elements.size() ==
               static_cast<std::size_t>(choose(n, 2) + 3 * choose(n, 4)),
           "fermionic closed form");
    EXPECT(build_pool(PoolKind::PauliExponential, n).elements.size() ==
               static_cast<std::size_t>(2 * choose(n, 2) + 8 * choose(n, 4)),
           "qubit-ADAPT pool closed form");
  }
  return {true, "9 / 1551 / 3094 and 2C(N,2)+8C(N,4) verified"};
}

Outcome criterion_7() {
  std::mt19937 rng(101);
  // Pauli algebra vs dense matrices on 5 qubits.
  for (int trial = 0; trial < 10; ++trial) {
    const PauliSum a = oracle::random_sum(rng, 5, 8);
    const PauliSum b = oracle::random_sum(rng, 5, 8);
    const Eigen::MatrixXcd ma = oracle::dense_sum(a, 5);
    const Eigen::MatrixXcd mb = oracle::dense_sum(b, 5);
    EXPECT((oracle::dense_sum(a * b, 5) - ma * mb).cwiseAbs().maxCoeff() <
               1e-12,
           "product matrix oracle");
    EXPECT((oracle::dense_sum(commutator(a, b), 5) - (ma * mb - mb * ma))
                   .cwiseAbs()
                   .maxCoeff() < 1e-12,
           "commutator matrix oracle");
  }
  // JW anticommutation identities.
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      const PauliSum ai = jw_ladder(i, false, 6);
      const PauliSum cj = jw_ladder(j, true, 6);
      const PauliSum anti = ai * cj + cj * ai;
      if (i == j)
        EXPECT(anti == PauliSum::identity(), "{a_i, a+_i} = I");
      else
        EXPECT(anti.empty(), "{a_i, a+_j} = 0");
      EXPECT((ai * jw_ladder(j, false, 6) + jw_ladder(j, false, 6) * ai)
                 .empty(),
             "{a_i, a_j} = 0");
    }
  // T^3 = -T across both skew pools at 6 qubits.
  for (const PoolKind kind : {PoolKind::Qubit, PoolKind::Fermionic})
    for (const auto& g : build_pool(kind, 6).elements)
      EXPECT(g.generator * g.generator * g.generator == -g.generator,
             "T^3 = -T");
  // Closed form vs dense exponential (subsampled pool, random states).
  {
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    StateVector psi(1 << 6);
    for (Eigen::Index i = 0; i < psi.size(); ++i)
      psi[i] = complex{amp(rng), amp(rng)};
    psi.normalize();
    const ExcitationPool pool = build_pool(PoolKind::Qubit, 6);
    for (std::size_t p = 0; p < pool.elements.size(); p += 5) {
      const double theta = amp(rng) * 3.0;
      const Eigen::MatrixXcd u =
          (theta * oracle::dense_sum(pool.elements[p].generator, 6)).exp();
      const StateVector want = u * psi;
      const StateVector got = apply_excitation(pool.elements[p], theta, psi);
      EXPECT((got - want).cwiseAbs().maxCoeff() < 1e-10,
             "closed form vs matrix exponential");
    }
  }
  // Analytic vs finite-difference gradients on random instances.
  {
    const PauliSum h = oracle::random_sum(rng, 6, 16, /*hermitian=*/true);
    const ExcitationPool pool = build_pool(PoolKind::Qubit, 6);
    std::uniform_int_distribution<std::size_t> pick(0,
                                                    pool.elements.size() - 1);
    std::uniform_real_distribution<double> t(-1.0, 1.0);
    for (int instance = 0; instance < 10; ++instance) {
      Ansatz a{6, 0b0011, {}, {}};
      for (int e = 0; e < 4; ++e) a.append(pool.elements[pick(rng)]);
      Eigen::VectorXd theta(4);
      for (int s = 0; s < 4; ++s) theta[s] = t(rng);
      Eigen::VectorXd analytic;
      energy_and_gradient(a, theta, h, analytic);
      for (int s = 0; s < 4; ++s) {
        Eigen::VectorXd plus = theta, minus = theta;
        plus[s] += 1e-5;
        minus[s] -= 1e-5;
        const double numeric =
            (energy(a, plus, h) - energy(a, minus, h)) / 2e-5;
        EXPECT(std::abs(analytic[s] - numeric) < 1e-6,
               "analytic vs finite-difference gradient");
      }
    }
  }
  // Monotonicity and the variational bound on every recorded run.
  int checked = 0;
  for (const RunRecord* r : g_ctx.all_runs) {
    double prev = r->e_hf;
    for (const auto& it : r->iterations) {
      EXPECT(it.energy <= prev + 1e-10, "monotone energies");
      EXPECT(it.energy >= r->e_fci - 1e-9, "variational bound");
      prev = it.energy;
    }
    ++checked;
  }
  char buf[120];
  std::snprintf(buf, sizeof buf,
                "algebra, JW, T^3, exponentials, gradients ok; %d recorded "
                "runs monotone and bounded",
                checked);
  return {true, buf};
}

Outcome criterion_8() {
  char buf[240];
  std::string detail;
  for (const std::string point : {"beh2_1.316", "beh2_3.0"}) {
    const auto ints = load_fcidump(g_data_dir + "/" + point + ".fcidump");
    const PauliSum h = jw_transform(molecular_hamiltonian(ints), 14);
    GrowthConfig config;
    config.epsilon = 1e-6;
    config.threads = 4;
    config.max_iterations = 150;
    const RunRecord r = iqeb_run(h, ints, config, point);
    EXPECT(std::abs(r.final_energy - r.e_fci) <= 1e-3,
           ("chemical accuracy at " + point).c_str());
    if (point == "beh2_3.0") {
      const UccsdResult u = uccsd_baseline(h, ints);
      EXPECT(u.energy - r.e_fci > r.final_energy - r.e_fci,
             "UCCSD error exceeds IQEB error at 3.0 A");
      std::snprintf(buf, sizeof buf,
                    "IQEB errors ok; at 3.0 A UCCSD error %.2e vs IQEB %.2e",
                    u.energy - r.e_fci, r.final_energy - r.e_fci);
      detail = buf;
    }
  }
  return {true, detail};
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> criteria{1, 2, 3, 4, 5, 6, 7};
  bool extended = false;
  for (int a = 1; a < argc; ++a) {
    if (!std::strcmp(argv[a], "--data") && a + 1 < argc) {
      g_data_dir = argv[++a];
    } else if (!std::strcmp(argv[a], "--extended")) {
      extended = true;
    } else if (!std::strcmp(argv[a], "--criteria") && a + 1 < argc) {
      criteria.clear();
      std::string list = argv[++a];
      for (std::size_t pos = 0; pos < list.size();) {
        const auto comma = list.find(',', pos);
        criteria.push_back(std::stoi(list.substr(pos, comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    } else {
      std::fprintf(stderr,
                   "usage: %s [--data DIR] [--criteria LIST] [--extended]\n",
                   argv[0]);
      return 2;
    }
  }
  if (extended &&
      std::find(criteria.begin(), criteria.end(), 8) == criteria.end())
    criteria.push_back(8);

  const std::map<int, Outcome (*)()> table{
      {1, criterion_1}, {2, criterion_2}, {3, criterion_3}, {4, criterion_4},
      {5, criterion_5}, {6, criterion_6}, {7, criterion_7}, {8, criterion_8}};

  int failures = 0;
  for (const int c : criteria) {
    const auto it = table.find(c);
    if (it == table.end()) {
      std::printf("criterion %d: UNKNOWN\n", c);
      ++failures;
      continue;
    }
    Outcome outcome;
    try {
      outcome = it->second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %d: %s — %s\n", c, outcome.pass ? "PASS" : "FAIL",
                outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
