#include "iqeb/excitation.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include "iqeb/fermion.hpp"

namespace iqeb {

namespace {

// Qubit ladder operators: (X_i -/+ iY_i)/2, no exchange-phase Z string.
PauliSum qubit_ladder(int i, bool creation) {
  const complex iy = creation ? complex{0.0, -0.5} : complex{0.0, 0.5};
  return PauliSum(0.5, PauliString::single(i, PauliOp::X)) +
         PauliSum(iy, PauliString::single(i, PauliOp::Y));
}

void require_distinct(const std::vector<int>& indices) {
  std::set<int> unique(indices.begin(), indices.end());
  if (unique.size() != indices.size())
    throw std::invalid_argument("excitation indices must be distinct");
  if (*unique.begin() < 0)
    throw std::invalid_argument("excitation indices must be non-negative");
}

// Ascending pairs, lexicographically smaller pair first.
std::vector<int> canonical_double_indices(int i, int j, int k, int l) {
  std::pair<int, int> create{std::min(i, j), std::max(i, j)};
  std::pair<int, int> annihilate{std::min(k, l), std::max(k, l)};
  if (annihilate < create) std::swap(create, annihilate);
  return {create.first, create.second, annihilate.first, annihilate.second};
}

int fermionic_single_cost(int i, int k) {
  return 2 * std::abs(k - i) + 1;
}

int fermionic_double_cost(int i, int j, int k, int l) {
  std::vector<int> s{i, j, k, l};
  std::sort(s.begin(), s.end());
  // 2(l + j - i - k) + 9 after relabeling to ascending i < j < k < l.
  return 2 * (s[3] + s[1] - s[0] - s[2]) + 9;
}

}  // namespace

bool is_skew_kind(ExcitationKind kind) {
  return kind != ExcitationKind::PauliExponential;
}

std::string kind_name(ExcitationKind kind) {
  switch (kind) {
    case ExcitationKind::QubitSingle: return "qubit_single";
    case ExcitationKind::QubitDouble: return "qubit_double";
    case ExcitationKind::FermionicSingle: return "fermionic_single";
    case ExcitationKind::FermionicDouble: return "fermionic_double";
    case ExcitationKind::PauliExponential: return "pauli_exponential";
  }
  return "?";
}

std::string Excitation::label() const {
  std::ostringstream os;
  if (kind == ExcitationKind::PauliExponential) {
    os << "exp_" << generator.terms().front().string.str();
    return os.str();
  }
  os << kind_name(kind) << '(';
  for (std::size_t p = 0; p < indices.size(); ++p) {
    if (p) os << (indices.size() == 4 && p == 2 ? ';' : ',');
    os << indices[p];
  }
  os << ')';
  return os.str();
}

Excitation qubit_single(int i, int k) {
  require_distinct({i, k});
  PauliSum t = qubit_ladder(i, true) * qubit_ladder(k, false) -
               qubit_ladder(k, true) * qubit_ladder(i, false);
  return {ExcitationKind::QubitSingle,
          {std::min(i, k), std::max(i, k)},
          std::move(t),
          2};
}

Excitation qubit_double(int i, int j, int k, int l) {
  require_distinct({i, j, k, l});
  PauliSum t = qubit_ladder(i, true) * qubit_ladder(j, true) *
                   qubit_ladder(k, false) * qubit_ladder(l, false) -
               qubit_ladder(k, true) * qubit_ladder(l, true) *
                   qubit_ladder(i, false) * qubit_ladder(j, false);
  return {ExcitationKind::QubitDouble, canonical_double_indices(i, j, k, l),
          std::move(t), 13};
}

Excitation fermionic_single(int i, int k, int n_qubits) {
  require_distinct({i, k});
  FermionOperator op;
  op.add_term(1.0, {{i, true}, {k, false}});
  op.add_term(-1.0, {{k, true}, {i, false}});
  return {ExcitationKind::FermionicSingle,
          {std::min(i, k), std::max(i, k)},
          jw_transform(op, n_qubits),
          fermionic_single_cost(i, k)};
}

Excitation fermionic_double(int i, int j, int k, int l, int n_qubits) {
  require_distinct({i, j, k, l});
  FermionOperator op;
  op.add_term(1.0, {{i, true}, {j, true}, {k, false}, {l, false}});
  op.add_term(-1.0, {{k, true}, {l, true}, {i, false}, {j, false}});
  return {ExcitationKind::FermionicDouble, canonical_double_indices(i, j, k, l),
          jw_transform(op, n_qubits), fermionic_double_cost(i, j, k, l)};
}

Excitation pauli_exponential(
    const std::vector<std::pair<int, PauliOp>>& letters) {
  if (letters.size() != 2 && letters.size() != 4)
    throw std::invalid_argument("Pauli exponential needs 2 or 4 qubits");
  std::vector<int> indices;
  int y_count = 0;
  std::map<int, PauliOp> factors;
  for (const auto& [qubit, op] : letters) {
    if (op == PauliOp::Z)
      throw std::invalid_argument("Pauli exponential letters must be X or Y");
    if (op == PauliOp::Y) ++y_count;
    indices.push_back(qubit);
    factors[qubit] = op;
  }
  require_distinct(indices);
  if (y_count % 2 == 0)
    throw std::invalid_argument("Pauli exponential needs an odd number of Ys");
  std::sort(indices.begin(), indices.end());
  const int cost = 2 * (static_cast<int>(letters.size()) - 1);
  return {ExcitationKind::PauliExponential, std::move(indices),
          PauliSum(1.0, PauliString::from_factors(factors)), cost};
}

namespace {

Excitation rebuild(ExcitationKind kind, const std::vector<int>& idx,
                   int n_qubits) {
  switch (kind) {
    case ExcitationKind::QubitSingle: return qubit_single(idx[0], idx[1]);
    case ExcitationKind::QubitDouble:
      return qubit_double(idx[0], idx[1], idx[2], idx[3]);
    case ExcitationKind::FermionicSingle:
      return fermionic_single(idx[0], idx[1], n_qubits);
    case ExcitationKind::FermionicDouble:
      return fermionic_double(idx[0], idx[1], idx[2], idx[3], n_qubits);
    case ExcitationKind::PauliExponential:
      break;
  }
  throw std::invalid_argument(
      "spin complement is undefined for Pauli-string exponentials");
}

}  // namespace

Excitation spin_complement(const Excitation& g, int n_qubits) {
  std::vector<int> mapped;
  for (const int i : g.indices) mapped.push_back(i ^ 1);
  Excitation comp = rebuild(g.kind, mapped, n_qubits);
  // Preserve the operator orientation: a stored generator may be the
  // negation of the one its canonical indices rebuild to.
  const Excitation canonical = rebuild(g.kind, g.indices, n_qubits);
  if (g.generator == -canonical.generator) comp.generator = -comp.generator;
  return comp;
}

bool is_self_complement(const Excitation& g, int n_qubits) {
  // Same canonical indices means the complement spans the same variational
  // direction (the generators agree up to sign), so appending it adds
  // nothing new.
  const Excitation comp = spin_complement(g, n_qubits);
  return comp.kind == g.kind && comp.indices == g.indices;
}

std::string pool_kind_name(PoolKind kind) {
  switch (kind) {
    case PoolKind::Qubit: return "qubit";
    case PoolKind::Fermionic: return "fermionic";
    case PoolKind::FermionicSpinComplementPairs:
      return "fermionic_spin_complement_pairs";
    case PoolKind::PauliExponential: return "pauli_exponential";
  }
  return "?";
}

ExcitationPool build_pool(PoolKind kind, int n_qubits) {
  if (n_qubits < 4)
    throw std::invalid_argument("pools with doubles need at least 4 qubits");
  ExcitationPool pool{kind, {}, {}};
  const bool fermionic = kind == PoolKind::Fermionic ||
                         kind == PoolKind::FermionicSpinComplementPairs;

  if (kind == PoolKind::PauliExponential) {
    for (int i = 0; i < n_qubits; ++i)
      for (int k = i + 1; k < n_qubits; ++k) {
        pool.elements.push_back(
            pauli_exponential({{i, PauliOp::X}, {k, PauliOp::Y}}));
        pool.elements.push_back(
            pauli_exponential({{i, PauliOp::Y}, {k, PauliOp::X}}));
      }
    for (int a = 0; a < n_qubits; ++a)
      for (int b = a + 1; b < n_qubits; ++b)
        for (int c = b + 1; c < n_qubits; ++c)
          for (int d = c + 1; d < n_qubits; ++d) {
            const int qubits[4] = {a, b, c, d};
            for (int pattern = 0; pattern < 16; ++pattern) {
              if (std::popcount(static_cast<unsigned>(pattern)) % 2 == 0)
                continue;
              std::vector<std::pair<int, PauliOp>> letters;
              for (int pos = 0; pos < 4; ++pos)
                letters.emplace_back(qubits[pos], pattern >> pos & 1
                                                      ? PauliOp::Y
                                                      : PauliOp::X);
              pool.elements.push_back(pauli_exponential(letters));
            }
          }
    return pool;
  }

  for (int i = 0; i < n_qubits; ++i)
    for (int k = i + 1; k < n_qubits; ++k)
      pool.elements.push_back(fermionic ? fermionic_single(i, k, n_qubits)
                                        : qubit_single(i, k));
  for (int a = 0; a < n_qubits; ++a)
    for (int b = a + 1; b < n_qubits; ++b)
      for (int c = b + 1; c < n_qubits; ++c)
        for (int d = c + 1; d < n_qubits; ++d) {
          // The three pair partitions of {a, b, c, d}.
          const int partitions[3][4] = {
              {a, b, c, d}, {a, c, b, d}, {a, d, b, c}};
          for (const auto& p : partitions)
            pool.elements.push_back(
                fermionic ? fermionic_double(p[0], p[1], p[2], p[3], n_qubits)
                          : qubit_double(p[0], p[1], p[2], p[3]));
        }

  if (kind == PoolKind::FermionicSpinComplementPairs) {
    std::vector<bool> grouped(pool.elements.size(), false);
    for (std::size_t p = 0; p < pool.elements.size(); ++p) {
      if (grouped[p]) continue;
      grouped[p] = true;
      const Excitation comp = spin_complement(pool.elements[p], n_qubits);
      if (is_self_complement(pool.elements[p], n_qubits)) {
        pool.pairing.push_back({static_cast<int>(p)});
        continue;
      }
      const auto it = std::find_if(
          pool.elements.begin(), pool.elements.end(), [&](const Excitation& e) {
            return e.kind == comp.kind && e.indices == comp.indices;
          });
      if (it == pool.elements.end())
        throw std::logic_error("pool is not closed under spin complement");
      const auto q = static_cast<std::size_t>(it - pool.elements.begin());
      grouped[q] = true;
      // Keep the faithful complement orientation: the pair shares one
      // parameter and the relative sign between the two members matters.
      *it = comp;
      pool.pairing.push_back({static_cast<int>(p), static_cast<int>(q)});
    }
  }
  return pool;
}

AnsatzResources ansatz_resources(const std::vector<Excitation>& elements,
                                 const std::vector<int>& slots) {
  if (elements.size() != slots.size())
    throw std::invalid_argument("one slot per element required");
  AnsatzResources r;
  std::set<int> distinct;
  for (std::size_t p = 0; p < elements.size(); ++p) {
    r.cnot_total += elements[p].cnot_cost;
    distinct.insert(slots[p]);
  }
  r.parameter_count = static_cast<int>(distinct.size());
  return r;
}

AnsatzResources ansatz_resources(const std::vector<Excitation>& elements) {
  std::vector<int> slots(elements.size());
  for (std::size_t p = 0; p < slots.size(); ++p) slots[p] = static_cast<int>(p);
  return ansatz_resources(elements, slots);
}

}  // namespace iqeb
