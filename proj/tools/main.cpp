#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <thread>
#include <vector>

#include "iqeb/driver.hpp"
#include "iqeb/fermion.hpp"
#include "iqeb/record.hpp"

namespace fs = std::filesystem;
using namespace iqeb;

namespace {

constexpr int kExitBadFlags = 2;
constexpr int kExitParseError = 3;
constexpr int kExitNoConvergence = 4;

struct RunFlags {
  std::string method = "iqeb";
  std::string fcidump;
  double epsilon = 1e-6;
  int top_n = 10;
  std::string spin_complement = "default";
  int max_iterations = 200;
  std::string out;
  std::string format = "json";
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  int seed = 0;
};

GrowthConfig make_config(const RunFlags& flags) {
  GrowthConfig config;
  config.epsilon = flags.epsilon;
  config.top_n = flags.top_n;
  config.max_iterations = flags.max_iterations;
  config.threads = std::max(1, flags.threads);
  config.seed = flags.seed;
  config.spin_complement_append =
      flags.spin_complement == "default" ? flags.method == "iqeb"
                                         : flags.spin_complement == "on";
  if (flags.method == "iqeb") {
    config.pool_kind = PoolKind::Qubit;
    config.selection = Selection::TopNEnergyReduction;
  } else {
    config.selection = Selection::LargestGradient;
    if (flags.method == "adapt")
      config.pool_kind = PoolKind::FermionicSpinComplementPairs;
    else if (flags.method == "qubit-adapt")
      config.pool_kind = PoolKind::PauliExponential;
    else if (flags.method == "greedy-qubit")
      config.pool_kind = PoolKind::Qubit;
    else
      config.pool_kind = PoolKind::Fermionic;
  }
  return config;
}

std::string fixture_name(const std::string& path) {
  return fs::path(path).stem().string();
}

RunRecord execute_method(const std::string& method, const PauliSum& h,
                         const MolecularIntegrals& ints,
                         const GrowthConfig& config,
                         const std::string& fixture) {
  if (method == "iqeb") return iqeb_run(h, ints, config, fixture);
  if (method == "uccsd") {
    const ReferenceEnergies refs = reference_energies(h, ints);
    const UccsdResult u = uccsd_baseline(h, ints, config.optimizer);
    RunRecord record;
    record.method = "uccsd";
    record.fixture = fixture;
    record.config = config;
    record.n_qubits = ints.n_spin_orbitals();
    record.e_hf = refs.e_hf;
    record.e_fci = refs.e_fci;
    record.final_energy = u.energy;
    record.termination = u.budget_exhausted ? Termination::MaxIterations
                                            : Termination::EpsilonReached;
    IterationRecord it;
    it.m = 1;
    it.delta_e = refs.e_hf - u.energy;
    it.energy = u.energy;
    it.parameter_count = u.parameter_count;
    it.cnot_total = u.cnot_total;
    record.iterations.push_back(it);
    record.final_ansatz = u.ansatz;
    record.final_theta = u.theta;
    return record;
  }
  return gradient_greedy_run(h, ints, config, fixture);
}

void write_record(const RunRecord& record, const std::string& out,
                  const std::string& format) {
  if (out.empty()) return;
  if (format == "json" || format == "both")
    write_file(format == "both" ? out + ".json" : out, to_json(record));
  if (format == "csv" || format == "both")
    write_file(format == "both" ? out + ".csv" : out, to_csv(record));
}

void print_summary(const RunRecord& record) {
  std::printf(
      "%s %s: E = %.12g Ha, error vs FCI = %.3e Ha, params = %d, "
      "CNOTs = %ld, iterations = %zu, termination = %s\n",
      record.method.c_str(), record.fixture.c_str(),
      record.final_energy, record.final_energy - record.e_fci,
      record.iterations.empty() ? 0
                                : record.iterations.back().parameter_count,
      record.iterations.empty() ? 0L : record.iterations.back().cnot_total,
      record.iterations.size(), termination_name(record.termination).c_str());
}

int cmd_run(const RunFlags& flags) {
  const MolecularIntegrals ints = load_fcidump(flags.fcidump);
  const PauliSum h =
      jw_transform(molecular_hamiltonian(ints), ints.n_spin_orbitals());
  const RunRecord record = execute_method(
      flags.method, h, ints, make_config(flags), fixture_name(flags.fcidump));
  write_record(record, flags.out, flags.format);
  print_summary(record);
  return record.termination == Termination::MaxIterations ? kExitNoConvergence
                                                          : 0;
}

struct SweepPoint {
  double bond_length = 0.0;
  std::string fcidump_path;
};

std::vector<SweepPoint> read_sweep_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open manifest file: " + path);
  std::vector<SweepPoint> points;
  std::string line;
  const fs::path base = fs::path(path).parent_path();
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    SweepPoint p;
    if (!(ls >> p.bond_length >> p.fcidump_path)) continue;
    if (fs::path(p.fcidump_path).is_relative())
      p.fcidump_path = (base / p.fcidump_path).string();
    points.push_back(std::move(p));
  }
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i].bond_length <= points[i - 1].bond_length)
      throw ParseError("manifest bond lengths must strictly increase");
  return points;
}

int cmd_dissociation(const std::string& manifest_path,
                     const std::string& methods_arg, double epsilon,
                     const std::string& out_dir, int threads) {
  const std::vector<SweepPoint> points = read_sweep_manifest(manifest_path);
  if (points.empty()) {
    std::fprintf(stderr, "error: manifest has no sweep points\n");
    return kExitBadFlags;
  }
  std::vector<std::string> methods;
  {
    std::istringstream ms(methods_arg);
    std::string m;
    while (std::getline(ms, m, ','))
      if (!m.empty() && m != "hf" && m != "fci") methods.push_back(m);
  }
  fs::create_directories(out_dir);

  std::ostringstream curve;
  curve.precision(12);
  curve << "distance,e_hf,e_fci";
  for (const auto& m : methods)
    curve << ",e_" << m << ",err_" << m << ",params_" << m;
  curve << "\n";

  bool any_failed = false;
  for (const auto& point : points) {
    try {
      const MolecularIntegrals ints = load_fcidump(point.fcidump_path);
      const PauliSum h =
          jw_transform(molecular_hamiltonian(ints), ints.n_spin_orbitals());
      const ReferenceEnergies refs = reference_energies(h, ints);
      curve << point.bond_length << ',' << stored_energy(refs.e_hf) << ','
            << stored_energy(refs.e_fci);
      for (const auto& method : methods) {
        RunFlags flags;
        flags.method = method;
        flags.epsilon = epsilon;
        flags.threads = threads;
        const RunRecord record =
            execute_method(method, h, ints, make_config(flags),
                           fixture_name(point.fcidump_path));
        write_record(record,
                     (fs::path(out_dir) /
                      (fixture_name(point.fcidump_path) + "_" + method + ".json"))
                         .string(),
                     "json");
        print_summary(record);
        const int params = record.iterations.empty()
                               ? 0
                               : record.iterations.back().parameter_count;
        curve << ',' << stored_energy(record.final_energy) << ','
              << stored_energy(record.final_energy - refs.e_fci) << ','
              << params;
        if (record.termination == Termination::MaxIterations)
          any_failed = true;
      }
      curve << "\n";
    } catch (const std::exception& e) {
      std::fprintf(stderr, "point %g failed: %s\n", point.bond_length,
                   e.what());
      any_failed = true;
    }
  }
  const std::string curve_path =
      (fs::path(out_dir) /
       (fs::path(manifest_path).stem().string() + "_curve.csv"))
          .string();
  write_file(curve_path, curve.str());
  std::printf("curve written to %s\n", curve_path.c_str());
  return any_failed ? 1 : 0;
}

int cmd_fci(const std::string& fcidump_path) {
  const MolecularIntegrals ints = load_fcidump(fcidump_path);
  const PauliSum h =
      jw_transform(molecular_hamiltonian(ints), ints.n_spin_orbitals());
  const ReferenceEnergies refs = reference_energies(h, ints);
  std::printf("qubits: %d\n", ints.n_spin_orbitals());
  std::printf("pauli terms: %zu\n", h.size());
  std::printf("E_HF:  %.12f Ha\n", refs.e_hf);
  std::printf("E_FCI: %.12f Ha\n", refs.e_fci);
  return 0;
}

int cmd_resources(const std::string& record_path, const std::string& out) {
  std::ifstream in(record_path);
  if (!in) throw ParseError("cannot open record file: " + record_path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("cannot parse record file " + record_path + ": " +
                     e.what());
  }
  std::ostringstream table;
  table << "m,n_params,n_cnots\n";
  std::printf("%-6s %-10s %-10s\n", "m", "params", "cnots");
  int params = 0;
  long cnots = 0;
  for (const auto& it : doc.at("iterations")) {
    params = it.at("n_params").get<int>();
    cnots = it.at("n_cnots").get<long>();
    std::printf("%-6d %-10d %-10ld\n", it.at("m").get<int>(), params, cnots);
    table << it.at("m").get<int>() << ',' << params << ',' << cnots << "\n";
  }
  std::printf("total: params = %d, CNOTs = %ld, iterations = %zu\n", params,
              cnots, doc.at("iterations").size());
  if (!out.empty()) write_file(out, table.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive qubit-excitation VQE simulator"};
  app.require_subcommand(1);

  RunFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "Run one simulation");
  run->add_option("--method", run_flags.method)
      ->check(CLI::IsMember({"iqeb", "adapt", "qubit-adapt", "greedy-qubit",
                             "greedy-fermionic", "uccsd"}));
  run->add_option("--fcidump", run_flags.fcidump)->required();
  run->add_option("--epsilon", run_flags.epsilon);
  run->add_option("--top-n", run_flags.top_n);
  run->add_option("--spin-complement", run_flags.spin_complement)
      ->check(CLI::IsMember({"on", "off", "default"}));
  run->add_option("--max-iters", run_flags.max_iterations);
  run->add_option("--out", run_flags.out);
  run->add_option("--format", run_flags.format)
      ->check(CLI::IsMember({"json", "csv", "both"}));
  run->add_option("--threads", run_flags.threads);
  run->add_option("--seed", run_flags.seed);

  std::string manifest_path, methods = "iqeb", out_dir = ".";
  double diss_epsilon = 1e-6;
  int diss_threads = static_cast<int>(std::thread::hardware_concurrency());
  CLI::App* diss =
      app.add_subcommand("dissociation", "Sweep a dissociation curve");
  diss->add_option("--manifest", manifest_path)->required();
  diss->add_option("--methods", methods);
  diss->add_option("--epsilon", diss_epsilon);
  diss->add_option("--out-dir", out_dir);
  diss->add_option("--threads", diss_threads);

  std::string fci_path;
  CLI::App* fci = app.add_subcommand("fci", "Reference energies for a fixture");
  fci->add_option("--fcidump", fci_path)->required();

  std::string record_path, resources_out;
  CLI::App* resources =
      app.add_subcommand("resources", "Per-iteration resource tallies");
  resources->add_option("--record", record_path)->required();
  resources->add_option("--out", resources_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadFlags;
  }

  try {
    if (run->parsed()) return cmd_run(run_flags);
    if (diss->parsed())
      return cmd_dissociation(manifest_path, methods, diss_epsilon, out_dir,
                              diss_threads);
    if (fci->parsed()) return cmd_fci(fci_path);
    if (resources->parsed()) return cmd_resources(record_path, resources_out);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParseError;
  } catch (const IntegrityError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParseError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
