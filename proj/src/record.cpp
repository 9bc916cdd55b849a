#include "iqeb/record.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace iqeb {

namespace {

using nlohmann::json;

std::string twelve_digits(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

json chosen_json(const std::vector<ChosenElement>& chosen) {
  json list = json::array();
  for (const auto& c : chosen)
    list.push_back({{"kind", c.kind}, {"indices", c.indices}});
  return list;
}

std::string chosen_label(const std::vector<ChosenElement>& chosen) {
  std::ostringstream os;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    if (i) os << '+';
    os << chosen[i].kind << '(';
    for (std::size_t p = 0; p < chosen[i].indices.size(); ++p) {
      if (p) os << ' ';
      os << chosen[i].indices[p];
    }
    os << ')';
  }
  return os.str();
}

}  // namespace

double stored_energy(double value) {
  return std::stod(twelve_digits(value));
}

std::string to_json(const RunRecord& record) {
  json doc;
  doc["method"] = record.method;
  doc["fixture"] = record.fixture;
  doc["config"] = {
      {"pool", pool_kind_name(record.config.pool_kind)},
      {"selection", record.config.selection == Selection::TopNEnergyReduction
                        ? "top_n_energy_reduction"
                        : "largest_gradient"},
      {"top_n", record.config.top_n},
      {"epsilon", record.config.epsilon},
      {"spin_complement_append", record.config.spin_complement_append},
      {"max_iterations", record.config.max_iterations},
      {"gradient_norm_tolerance",
       record.config.optimizer.gradient_norm_tolerance},
      {"max_evaluations", record.config.optimizer.max_evaluations},
      {"threads", record.config.threads},
      {"seed", record.config.seed},
      {"energy_recorded_after_complement",
       record.energy_recorded_after_complement},
  };
  doc["n_qubits"] = record.n_qubits;
  doc["e_hf"] = stored_energy(record.e_hf);
  doc["e_fci"] = stored_energy(record.e_fci);
  doc["final_energy"] = stored_energy(record.final_energy);
  doc["termination"] = termination_name(record.termination);
  json iterations = json::array();
  for (const auto& it : record.iterations) {
    iterations.push_back({
        {"m", it.m},
        {"chosen", chosen_json(it.chosen)},
        {"grad", stored_energy(it.gradient_of_chosen)},
        {"delta_e", stored_energy(it.delta_e)},
        {"energy", stored_energy(it.energy)},
        {"n_params", it.parameter_count},
        {"n_cnots", it.cnot_total},
        {"wall_ms", it.wall_ms},
    });
  }
  doc["iterations"] = std::move(iterations);
  return doc.dump(2) + "\n";
}

std::string to_csv(const RunRecord& record) {
  std::ostringstream os;
  os << "# method=" << record.method << " fixture=" << record.fixture
     << " termination=" << termination_name(record.termination) << "\n";
  os << "# e_hf=" << twelve_digits(record.e_hf)
     << " e_fci=" << twelve_digits(record.e_fci)
     << " final_energy=" << twelve_digits(record.final_energy) << "\n";
  os << "m,chosen,grad,delta_e,energy,n_params,n_cnots,wall_ms\n";
  for (const auto& it : record.iterations) {
    os << it.m << ',' << chosen_label(it.chosen) << ','
       << twelve_digits(it.gradient_of_chosen) << ','
       << twelve_digits(it.delta_e) << ',' << twelve_digits(it.energy) << ','
       << it.parameter_count << ',' << it.cnot_total << ',' << it.wall_ms
       << "\n";
  }
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace iqeb
