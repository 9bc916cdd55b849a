#include "iqeb/circuits.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace iqeb {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Single-excitation sequence on wires (k, i), 2 CNOTs; implements
// exp(theta T) for T = Q+_i Q_k - Q+_k Q_i with i < k.
GateList single_excitation_gates(int i, int k, double theta) {
  return {
      rz(k, kHalfPi), rx(k, kHalfPi), rx(i, kHalfPi),
      cnot(k, i),
      rx(k, theta),   rz(i, theta),
      cnot(k, i),
      rx(k, -kHalfPi), rx(i, -kHalfPi), rz(k, -kHalfPi),
  };
}

// Double-excitation sequence on wires (l, k, j, i), 13 CNOTs; implements
// exp(theta T) for T = Q+_i Q+_j Q_k Q_l - Q+_k Q+_l Q_i Q_j.
//
// Structure: CNOT/X prep maps the rotated pair onto qubit l flagged by
// (k, i, j); a Gray-code ladder of Ry(l) rotations conjugated by CNOTs out
// of l applies the rotation in that flagged frame; the final Hadamard on j
// is fused with the un-compute CNOT into the closing Rz/Ry gates, which is
// what keeps the CNOT count at 13.
GateList double_excitation_gates(int i, int j, int k, int l, double theta) {
  const double a = -theta / 4.0;
  return {
      cnot(l, k), cnot(j, i),
      x(k), x(i),
      cnot(l, j),
      ry(l, a), h(k),
      cnot(l, k),
      ry(l, -a), h(i),
      cnot(l, i),
      ry(l, a),
      cnot(l, k),
      ry(l, -a), h(j),
      cnot(l, j),
      ry(l, a),
      cnot(l, k),
      ry(l, -a),
      cnot(l, i),
      ry(l, a), h(i),
      cnot(l, k),
      ry(l, -a), h(k), rz(j, -kHalfPi),
      cnot(l, j),
      rz(l, kHalfPi), rz(j, -kHalfPi),
      x(k), x(i), ry(j, kHalfPi),
      cnot(l, k), cnot(j, i),
  };
}

// Stored generators carry the orientation of the constructor call; the gate
// sequences above implement the canonical-index orientation.
int orientation_sign(const Excitation& g) {
  const Excitation canonical =
      g.kind == ExcitationKind::QubitSingle
          ? qubit_single(g.indices[0], g.indices[1])
          : qubit_double(g.indices[0], g.indices[1], g.indices[2],
                         g.indices[3]);
  if (g.generator == canonical.generator) return 1;
  if (g.generator == -canonical.generator) return -1;
  throw std::logic_error("generator does not match its indices");
}

}  // namespace

Gate rx(int q, double angle) { return {GateKind::Rx, q, -1, angle}; }
Gate ry(int q, double angle) { return {GateKind::Ry, q, -1, angle}; }
Gate rz(int q, double angle) { return {GateKind::Rz, q, -1, angle}; }
Gate h(int q) { return {GateKind::H, q}; }
Gate x(int q) { return {GateKind::X, q}; }
Gate cnot(int control, int target) {
  if (control == target)
    throw std::invalid_argument("CNOT control equals target");
  return {GateKind::Cnot, target, control};
}

int cnot_count(const GateList& gates) {
  int n = 0;
  for (const auto& g : gates) n += g.kind == GateKind::Cnot;
  return n;
}

GateList emit_circuit(const Excitation& g, double theta) {
  switch (g.kind) {
    case ExcitationKind::QubitSingle:
      return single_excitation_gates(g.indices[0], g.indices[1],
                                     orientation_sign(g) * theta);
    case ExcitationKind::QubitDouble:
      return double_excitation_gates(g.indices[0], g.indices[1], g.indices[2],
                                     g.indices[3], orientation_sign(g) * theta);
    default:
      throw std::invalid_argument(
          "circuits are emitted for qubit excitations only");
  }
}

StateVector apply_gates(const GateList& gates, StateVector psi) {
  const int n = n_qubits_of(psi);
  const complex ii{0.0, 1.0};
  for (const auto& g : gates) {
    if (g.target >= n || g.control >= n)
      throw std::out_of_range("gate operand outside the register");
    if (g.kind == GateKind::Cnot) {
      const std::uint64_t cbit = std::uint64_t{1} << g.control;
      const std::uint64_t tbit = std::uint64_t{1} << g.target;
      for (std::uint64_t idx = 0; idx < static_cast<std::uint64_t>(psi.size());
           ++idx)
        if ((idx & cbit) && !(idx & tbit))
          std::swap(psi[static_cast<Eigen::Index>(idx)],
                    psi[static_cast<Eigen::Index>(idx | tbit)]);
      continue;
    }
    // Single-qubit 2x2 action over amplitude pairs.
    complex m00, m01, m10, m11;
    switch (g.kind) {
      case GateKind::Rx: {
        const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
        m00 = c; m01 = -ii * s; m10 = -ii * s; m11 = c;
        break;
      }
      case GateKind::Ry: {
        const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
        m00 = c; m01 = -s; m10 = s; m11 = c;
        break;
      }
      case GateKind::Rz: {
        m00 = std::exp(-ii * (g.angle / 2));
        m01 = m10 = 0.0;
        m11 = std::exp(ii * (g.angle / 2));
        break;
      }
      case GateKind::H: {
        const double r = 1.0 / std::sqrt(2.0);
        m00 = r; m01 = r; m10 = r; m11 = -r;
        break;
      }
      case GateKind::X: {
        m00 = m11 = 0.0;
        m01 = m10 = 1.0;
        break;
      }
      default:
        throw std::logic_error("unreachable");
    }
    const std::uint64_t tbit = std::uint64_t{1} << g.target;
    for (std::uint64_t idx = 0; idx < static_cast<std::uint64_t>(psi.size());
         ++idx) {
      if (idx & tbit) continue;
      const auto lo = static_cast<Eigen::Index>(idx);
      const auto hi = static_cast<Eigen::Index>(idx | tbit);
      const complex a = psi[lo], b = psi[hi];
      psi[lo] = m00 * a + m01 * b;
      psi[hi] = m10 * a + m11 * b;
    }
  }
  return psi;
}

std::string to_qasm(const GateList& gates, int n_qubits) {
  std::ostringstream os;
  os.precision(15);
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << n_qubits
     << "];\n";
  for (const auto& g : gates) {
    switch (g.kind) {
      case GateKind::Rx: os << "rx(" << g.angle << ") q[" << g.target << "];\n"; break;
      case GateKind::Ry: os << "ry(" << g.angle << ") q[" << g.target << "];\n"; break;
      case GateKind::Rz: os << "rz(" << g.angle << ") q[" << g.target << "];\n"; break;
      case GateKind::H: os << "h q[" << g.target << "];\n"; break;
      case GateKind::X: os << "x q[" << g.target << "];\n"; break;
      case GateKind::Cnot:
        os << "cx q[" << g.control << "],q[" << g.target << "];\n";
        break;
    }
  }
  return os.str();
}

}  // namespace iqeb
