#include "iqeb/fcidump.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace iqeb {

namespace {

constexpr double kSymmetryTol = 1e-10;

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

// Reads the namelist header up to "&END" or a bare "/" and extracts the
// integer fields we care about.  ORBSYM/ISYM are accepted and ignored.
struct Header {
  int norb = -1;
  int nelec = -1;
  int ms2 = 0;
};

Header parse_header(std::istream& in) {
  std::string text;
  std::string line;
  bool terminated = false;
  while (std::getline(in, line)) {
    const std::string u = upper(line);
    const auto end = u.find("&END");
    const auto slash = u.find('/');
    if (end != std::string::npos) {
      text += line.substr(0, end);
      terminated = true;
      break;
    }
    if (slash != std::string::npos) {
      text += line.substr(0, slash);
      terminated = true;
      break;
    }
    text += line + " ";
  }
  if (!terminated) throw ParseError("FCIDUMP header not terminated by &END or /");

  Header h;
  const std::string u = upper(text);
  for (const auto& [key, dest, required] :
       {std::tuple{"NORB", &h.norb, true}, std::tuple{"NELEC", &h.nelec, true},
        std::tuple{"MS2", &h.ms2, false}}) {
    auto pos = u.find(key);
    // Avoid matching NORB inside e.g. ORBSYM by requiring a non-alpha prefix.
    while (pos != std::string::npos && pos > 0 &&
           (std::isalpha(static_cast<unsigned char>(u[pos - 1])) ||
            u[pos - 1] == '_'))
      pos = u.find(key, pos + 1);
    if (pos == std::string::npos) {
      if (required)
        throw ParseError(std::string("FCIDUMP header missing field ") + key);
      continue;
    }
    pos = u.find('=', pos);
    if (pos == std::string::npos)
      throw ParseError(std::string("FCIDUMP header field ") + key +
                       " has no value");
    try {
      *dest = std::stoi(u.substr(pos + 1));
    } catch (const std::exception&) {
      throw ParseError(std::string("FCIDUMP header field ") + key +
                       " is not an integer");
    }
  }
  if (h.norb <= 0) throw ParseError("FCIDUMP header: NORB must be positive");
  if (h.nelec <= 0) throw ParseError("FCIDUMP header: NELEC must be positive");
  return h;
}

}  // namespace

MolecularIntegrals::MolecularIntegrals(int n_spatial, int n_electrons, int ms2,
                                       double core_energy,
                                       Eigen::MatrixXd one_body,
                                       std::vector<double> two_body)
    : n_spatial_(n_spatial),
      n_electrons_(n_electrons),
      ms2_(ms2),
      core_energy_(core_energy),
      one_body_(std::move(one_body)),
      two_body_(std::move(two_body)) {
  validate();
}

void MolecularIntegrals::validate() const {
  const int n = n_spatial_;
  if (n_electrons_ <= 0 || n_electrons_ > 2 * n)
    throw IntegrityError("electron count outside (0, 2*NORB]");
  if (one_body_.rows() != n || one_body_.cols() != n ||
      two_body_.size() != static_cast<std::size_t>(n) * n * n * n)
    throw IntegrityError("integral table dimensions do not match NORB");
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < p; ++q)
      if (std::abs(one_body_(p, q) - one_body_(q, p)) > kSymmetryTol)
        throw IntegrityError("one-body integrals are not symmetric");
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          const double v = two_body(p, q, r, s);
          if (std::abs(v - two_body(q, p, r, s)) > kSymmetryTol ||
              std::abs(v - two_body(p, q, s, r)) > kSymmetryTol ||
              std::abs(v - two_body(r, s, p, q)) > kSymmetryTol)
            throw IntegrityError("two-body integrals break 8-fold symmetry");
        }
}

MolecularIntegrals parse_fcidump(std::istream& in) {
  const Header h = parse_header(in);
  const int n = h.norb;

  Eigen::MatrixXd one = Eigen::MatrixXd::Zero(n, n);
  std::vector<double> two(static_cast<std::size_t>(n) * n * n * n, 0.0);
  std::vector<bool> one_set(static_cast<std::size_t>(n) * n, false);
  std::vector<bool> two_set(two.size(), false);
  double core = 0.0;

  const auto flat2 = [n](int p, int q) { return p * n + q; };
  const auto flat4 = [n](int p, int q, int r, int s) {
    return ((static_cast<std::size_t>(p) * n + q) * n + r) * n + s;
  };

  std::string line;
  int line_no = 0;
  // Header line count is unknown here; line numbers below are entry lines.
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    double value;
    int i, j, k, l;
    if (!(ls >> value)) {
      // Blank line or trailing whitespace.
      std::string rest;
      if (ls.clear(), ls.str().find_first_not_of(" \t\r\n") ==
                          std::string::npos)
        continue;
      throw ParseError("FCIDUMP entry line " + std::to_string(line_no) +
                       ": expected a number");
    }
    if (!(ls >> i >> j >> k >> l))
      throw ParseError("FCIDUMP entry line " + std::to_string(line_no) +
                       ": expected four indices");
    for (const int idx : {i, j, k, l})
      if (idx < 0 || idx > n)
        throw ParseError("FCIDUMP entry line " + std::to_string(line_no) +
                         ": index " + std::to_string(idx) +
                         " outside [0, " + std::to_string(n) + "]");

    if (i == 0 && j == 0 && k == 0 && l == 0) {
      core = value;
    } else if (k == 0 && l == 0) {
      if (i == 0 || j == 0)
        throw ParseError("FCIDUMP entry line " + std::to_string(line_no) +
                         ": one-body entry with a zero index");
      const int p = i - 1;
      const int q = j - 1;
      for (const auto& [a, b] : {std::pair{p, q}, std::pair{q, p}}) {
        if (one_set[flat2(a, b)] && std::abs(one(a, b) - value) > kSymmetryTol)
          throw IntegrityError("FCIDUMP entry line " + std::to_string(line_no) +
                               ": inconsistent duplicate one-body entry");
        one(a, b) = value;
        one_set[flat2(a, b)] = true;
      }
    } else {
      if (i == 0 || j == 0 || k == 0 || l == 0)
        throw ParseError("FCIDUMP entry line " + std::to_string(line_no) +
                         ": two-body entry with a zero index");
      const int p = i - 1, q = j - 1, r = k - 1, s = l - 1;
      for (const auto& [a, b, c, d] :
           {std::array{p, q, r, s}, std::array{q, p, r, s},
            std::array{p, q, s, r}, std::array{q, p, s, r},
            std::array{r, s, p, q}, std::array{s, r, p, q},
            std::array{r, s, q, p}, std::array{s, r, q, p}}) {
        const auto idx = flat4(a, b, c, d);
        if (two_set[idx] && std::abs(two[idx] - value) > kSymmetryTol)
          throw IntegrityError("FCIDUMP entry line " + std::to_string(line_no) +
                               ": inconsistent duplicate two-body entry");
        two[idx] = value;
        two_set[idx] = true;
      }
    }
  }

  return MolecularIntegrals(n, h.nelec, h.ms2, core, std::move(one),
                            std::move(two));
}

MolecularIntegrals load_fcidump(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open FCIDUMP file: " + path);
  return parse_fcidump(in);
}

FixtureManifest read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open manifest file: " + path);
  FixtureManifest m;
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "name") m.name = value;
    else if (key == "bond_length_angstrom") m.bond_length_angstrom = std::stod(value);
    else if (key == "basis") m.basis = value;
    else if (key == "scf_energy") m.scf_energy = std::stod(value);
    else if (key == "fci_energy") m.fci_energy = std::stod(value);
    else if (key == "source") m.source = value;
  }
  if (m.name.empty()) throw ParseError("manifest has no name field: " + path);
  return m;
}

}  // namespace iqeb
