#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace iqeb {

/// Malformed FCIDUMP input (bad header field, bad indices, bad line).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally valid input with inconsistent duplicate entries.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One- and two-electron integrals over spatial orbitals, in Hartree.
/// Two-body values are chemists' (pq|rs); all 8 real-orbital symmetry
/// images are expanded on load, unspecified entries are zero.
class MolecularIntegrals {
 public:
  MolecularIntegrals(int n_spatial, int n_electrons, int ms2,
                     double core_energy, Eigen::MatrixXd one_body,
                     std::vector<double> two_body);

  int n_spatial() const { return n_spatial_; }
  int n_spin_orbitals() const { return 2 * n_spatial_; }
  int n_electrons() const { return n_electrons_; }
  int ms2() const { return ms2_; }
  double core_energy() const { return core_energy_; }

  /// h_pq, 0-based spatial indices.
  double one_body(int p, int q) const { return one_body_(p, q); }

  /// Chemists' (pq|rs), 0-based spatial indices.
  double two_body(int p, int q, int r, int s) const {
    const int n = n_spatial_;
    return two_body_[((p * n + q) * n + r) * n + s];
  }

 private:
  void validate() const;

  int n_spatial_;
  int n_electrons_;
  int ms2_;
  double core_energy_;
  Eigen::MatrixXd one_body_;
  std::vector<double> two_body_;
};

/// Parse a Molpro-convention FCIDUMP: a namelist header with NORB, NELEC
/// and MS2 terminated by "&END" or "/", followed by "value i j k l" lines
/// with 1-based spatial indices.  The i=j=k=l=0 line carries the core
/// energy, k=l=0 lines are one-body h_ij, all-nonzero lines are (ij|kl).
MolecularIntegrals parse_fcidump(std::istream& in);

MolecularIntegrals load_fcidump(const std::string& path);

/// Key-value sidecar describing a shipped fixture.
struct FixtureManifest {
  std::string name;
  double bond_length_angstrom = 0.0;
  std::string basis;
  double scf_energy = 0.0;
  std::optional<double> fci_energy;
  std::string source;
};

FixtureManifest read_manifest(const std::string& path);

}  // namespace iqeb
