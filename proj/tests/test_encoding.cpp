#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <random>
#include <sstream>

#include "iqeb/fcidump.hpp"
#include "iqeb/fermion.hpp"
#include "iqeb/statevector.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/slater_condon.hpp"

using namespace iqeb;

namespace {

const char* kTinyDump =
    "&FCI NORB=2,NELEC=2,MS2=0,\n"
    "  ORBSYM=1,1,\n"
    "  ISYM=1,\n"
    "&END\n"
    " 0.70556961   0   0   0   0\n"
    "-1.25         1   1   0   0\n"
    " 0.67         1   1   1   1\n";

}  // namespace

TEST_CASE("fcidump header fields") {
  std::istringstream in(kTinyDump);
  const MolecularIntegrals ints = parse_fcidump(in);
  CHECK(ints.n_spatial() == 2);
  CHECK(ints.n_spin_orbitals() == 4);
  CHECK(ints.n_electrons() == 2);
  CHECK(ints.ms2() == 0);
  CHECK(ints.core_energy() == doctest::Approx(0.70556961).epsilon(1e-12));
  CHECK(ints.one_body(0, 0) == doctest::Approx(-1.25));
  CHECK(ints.one_body(1, 1) == 0.0);
  CHECK(ints.two_body(0, 0, 0, 0) == doctest::Approx(0.67));
  CHECK(ints.two_body(1, 1, 1, 1) == 0.0);
}

TEST_CASE("fcidump error paths") {
  SUBCASE("missing NORB names the field") {
    std::istringstream in("&FCI NELEC=2,MS2=0,\n&END\n");
    CHECK_THROWS_WITH_AS(parse_fcidump(in),
                         doctest::Contains("NORB"), ParseError);
  }
  SUBCASE("unterminated header") {
    std::istringstream in("&FCI NORB=2,NELEC=2,MS2=0,\n");
    CHECK_THROWS_AS(parse_fcidump(in), ParseError);
  }
  SUBCASE("index out of range reports the line") {
    std::istringstream in(
        "&FCI NORB=2,NELEC=2,MS2=0,\n&END\n"
        " 1.0   1   3   0   0\n");
    CHECK_THROWS_WITH_AS(parse_fcidump(in),
                         doctest::Contains("line 1"), ParseError);
  }
  SUBCASE("inconsistent duplicate entries") {
    std::istringstream in(
        "&FCI NORB=2,NELEC=2,MS2=0,\n&END\n"
        " 1.0   1   2   0   0\n"
        " 1.1   2   1   0   0\n");
    CHECK_THROWS_AS(parse_fcidump(in), IntegrityError);
  }
  SUBCASE("consistent duplicates are accepted") {
    std::istringstream in(
        "&FCI NORB=2,NELEC=2,MS2=0,\n&END\n"
        " 1.0   1   2   0   0\n"
        " 1.0   2   1   0   0\n");
    CHECK_NOTHROW(parse_fcidump(in));
  }
}

TEST_CASE("two-body symmetry expansion") {
  std::istringstream in(
      "&FCI NORB=2,NELEC=2,MS2=0,\n&END\n"
      " 0.3   1   1   1   2\n");
  const MolecularIntegrals ints = parse_fcidump(in);
  // (00|01) stored once; all 8 permutations readable.
  CHECK(ints.two_body(0, 0, 0, 1) == doctest::Approx(0.3));
  CHECK(ints.two_body(0, 0, 1, 0) == doctest::Approx(0.3));
  CHECK(ints.two_body(0, 1, 0, 0) == doctest::Approx(0.3));
  CHECK(ints.two_body(1, 0, 0, 0) == doctest::Approx(0.3));
}

TEST_CASE("diagonal one-body term duplicates across spins") {
  const int n = 1;
  Eigen::MatrixXd h1(n, n);
  h1 << -1.0;
  std::vector<double> h2(1, 0.0);
  const MolecularIntegrals ints(n, 1, 1, 0.25, h1, h2);
  const FermionOperator op = molecular_hamiltonian(ints);
  REQUIRE(op.size() == 3);
  CHECK(op.terms()[0].ops.empty());
  CHECK(op.terms()[0].coefficient == complex{0.25});
  const std::vector<LadderOp> up{{0, true}, {0, false}};
  const std::vector<LadderOp> dn{{1, true}, {1, false}};
  CHECK(op.terms()[1].ops == up);
  CHECK(op.terms()[1].coefficient == complex{-1.0});
  CHECK(op.terms()[2].ops == dn);
}

TEST_CASE("jw ladder images") {
  const PauliSum c0 = jw_ladder(0, true, 4);
  REQUIRE(c0.size() == 2);
  CHECK(c0.coefficient(PauliString::single(0, PauliOp::X)) == complex{0.5});
  CHECK(c0.coefficient(PauliString::single(0, PauliOp::Y)) ==
        complex{0.0, -0.5});

  const PauliSum c2 = jw_ladder(2, true, 4);
  const PauliString x2z1z0 = PauliString::from_factors(
      {{0, PauliOp::Z}, {1, PauliOp::Z}, {2, PauliOp::X}});
  const PauliString y2z1z0 = PauliString::from_factors(
      {{0, PauliOp::Z}, {1, PauliOp::Z}, {2, PauliOp::Y}});
  CHECK(c2.coefficient(x2z1z0) == complex{0.5});
  CHECK(c2.coefficient(y2z1z0) == complex{0.0, -0.5});

  const PauliSum a1 = jw_ladder(1, false, 4);
  const PauliString x1z0 =
      PauliString::from_factors({{0, PauliOp::Z}, {1, PauliOp::X}});
  const PauliString y1z0 =
      PauliString::from_factors({{0, PauliOp::Z}, {1, PauliOp::Y}});
  CHECK(a1.coefficient(x1z0) == complex{0.5});
  CHECK(a1.coefficient(y1z0) == complex{0.0, 0.5});

  CHECK_THROWS_AS(jw_ladder(4, true, 4), std::out_of_range);
}

TEST_CASE("number operator and anticommutator identities") {
  FermionOperator number;
  number.add_term(1.0, {{0, true}, {0, false}});
  const PauliSum n0 = jw_transform(number, 2);
  REQUIRE(n0.size() == 2);
  CHECK(n0.coefficient(PauliString{}) == complex{0.5});
  CHECK(n0.coefficient(PauliString::single(0, PauliOp::Z)) == complex{-0.5});

  FermionOperator both;
  both.add_term(1.0, {{0, false}, {0, true}});
  both.add_term(1.0, {{0, true}, {0, false}});
  const PauliSum identity = jw_transform(both, 2);
  REQUIRE(identity.size() == 1);
  CHECK(identity.coefficient(PauliString{}) == complex{1.0});
}

TEST_CASE("jw preserves the anticommutation relations") {
  const int n = 6;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const PauliSum ai = jw_ladder(i, false, n);
      const PauliSum aj = jw_ladder(j, false, n);
      const PauliSum cj = jw_ladder(j, true, n);
      const PauliSum anti_mixed = ai * cj + cj * ai;
      if (i == j) {
        REQUIRE(anti_mixed.size() == 1);
        CHECK(anti_mixed.coefficient(PauliString{}) == complex{1.0});
      } else {
        CHECK(anti_mixed.empty());
      }
      CHECK((ai * aj + aj * ai).empty());
    }
}

TEST_CASE("hartree-fock reference bitmasks") {
  CHECK(hartree_fock_reference(2, 4) == 0b0011);
  CHECK(hartree_fock_reference(4, 12) == 0b1111);
  CHECK(hartree_fock_reference(1, 1) == 1);
  CHECK_THROWS_AS(hartree_fock_reference(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(hartree_fock_reference(5, 4), std::invalid_argument);
}

TEST_CASE("h2 fixture reproduces the recorded SCF energy") {
  const auto ints = load_fcidump(testutil::data_path("h2_0.735.fcidump"));
  const auto manifest =
      read_manifest(testutil::data_path("h2_0.735.manifest"));

  // Slater-Condon determinant expectation straight from the tables.
  CHECK(oracle::hartree_fock_energy(ints) ==
        doctest::Approx(manifest.scf_energy).epsilon(1e-8));

  // Same number through the full operator pipeline.
  const PauliSum h = jw_transform(molecular_hamiltonian(ints),
                                  ints.n_spin_orbitals());
  CHECK(h.is_hermitian());
  const StateVector hf = basis_state(
      hartree_fock_reference(ints.n_electrons(), ints.n_spin_orbitals()),
      ints.n_spin_orbitals());
  CHECK(expectation(h, hf) ==
        doctest::Approx(manifest.scf_energy).epsilon(1e-8));
}

TEST_CASE("h2 fixture hamiltonian term count and spectrum") {
  const auto ints = load_fcidump(testutil::data_path("h2_0.735.fcidump"));
  const auto manifest =
      read_manifest(testutil::data_path("h2_0.735.manifest"));
  const PauliSum h = jw_transform(molecular_hamiltonian(ints), 4);
  CHECK(h.size() == 15);

  const Eigen::MatrixXcd dense = oracle::dense_sum(h, 4);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense);
  REQUIRE(manifest.fci_energy.has_value());
  CHECK(solver.eigenvalues()(0) ==
        doctest::Approx(*manifest.fci_energy).epsilon(1e-8));
}

TEST_CASE("fixture pauli term counts stay within the N^4 envelope") {
  struct Expected {
    const char* name;
    int n_qubits;
    std::size_t n_terms;
  };
  // Frozen counts; c * N^4 with c = 1 comfortably bounds all of them.
  for (const Expected& e :
       {Expected{"h2_0.735", 4, 15}, Expected{"lih_1.546", 12, 631}}) {
    const auto ints = load_fcidump(
        testutil::data_path(std::string(e.name) + ".fcidump"));
    const PauliSum h =
        jw_transform(molecular_hamiltonian(ints), ints.n_spin_orbitals());
    CHECK(h.size() == e.n_terms);
    CHECK(h.size() <= static_cast<std::size_t>(e.n_qubits) * e.n_qubits *
                          e.n_qubits * e.n_qubits);
    CHECK(h.is_hermitian());
  }
}
