#pragma once

#include <string>

#include "iqeb/driver.hpp"

namespace iqeb {

/// JSON document for a run: {method, fixture, config, e_hf, e_fci,
/// iterations: [{m, chosen: [{kind, indices}], grad, delta_e, energy,
/// n_params, n_cnots, wall_ms}], termination}.  Energies carry 12
/// significant digits; wall_ms is informative only.
std::string to_json(const RunRecord& record);

/// Flat CSV, one row per iteration, same fields as the JSON.
std::string to_csv(const RunRecord& record);

void write_file(const std::string& path, const std::string& content);

/// Round to 12 significant digits (the stored-energy precision).
double stored_energy(double value);

}  // namespace iqeb
