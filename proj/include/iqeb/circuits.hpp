#pragma once

#include <string>
#include <vector>

#include "iqeb/excitation.hpp"
#include "iqeb/statevector.hpp"

namespace iqeb {

enum class GateKind { Rx, Ry, Rz, H, X, Cnot };

struct Gate {
  GateKind kind;
  int target;
  int control = -1;    // Cnot only
  double angle = 0.0;  // rotations only
};

using GateList = std::vector<Gate>;

Gate rx(int q, double angle);
Gate ry(int q, double angle);
Gate rz(int q, double angle);
Gate h(int q);
Gate x(int q);
Gate cnot(int control, int target);

int cnot_count(const GateList& gates);

/// Gate sequence implementing exp(theta T) for a qubit excitation: the
/// 2-CNOT sequence for singles, the 13-CNOT sequence for doubles.
/// Fermionic excitations are cost-modeled only and are rejected here.
GateList emit_circuit(const Excitation& g, double theta);

/// Apply the gates in order to a statevector (little-endian qubits).
StateVector apply_gates(const GateList& gates, StateVector psi);

/// OPENQASM 2.0 text, one gate per line.
std::string to_qasm(const GateList& gates, int n_qubits);

}  // namespace iqeb
