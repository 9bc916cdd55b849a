#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace iqeb {

using complex = std::complex<double>;

/// Coefficient magnitudes below this are dropped when sums are simplified.
inline constexpr double kSimplifyFloor = 1e-12;

enum class PauliOp : char { X = 'X', Y = 'Y', Z = 'Z' };

/// Product of single-qubit Pauli factors.  Qubits without an entry carry
/// the identity.  Stored as X/Z bit masks (a qubit with both bits set
/// carries Y), which makes products and statevector application cheap.
class PauliString {
 public:
  PauliString() = default;

  static PauliString single(int qubit, PauliOp op);
  static PauliString from_factors(const std::map<int, PauliOp>& factors);
  static PauliString from_masks(std::uint64_t x, std::uint64_t z) {
    return PauliString(x, z);
  }

  bool is_identity() const { return x_ == 0 && z_ == 0; }
  int weight() const;
  int max_qubit() const;  // -1 for the identity
  bool acts_on(int qubit) const;
  std::map<int, PauliOp> factors() const;

  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  std::uint64_t y_mask() const { return x_ & z_; }
  std::uint64_t support() const { return x_ | z_; }

  bool commutes_with(const PauliString& other) const;

  bool operator==(const PauliString& other) const = default;

  std::string str() const;

 private:
  PauliString(std::uint64_t x, std::uint64_t z) : x_(x), z_(z) {}

  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/// a * b as (phase, product); the phase is one of {1, -1, i, -i}.
std::pair<complex, PauliString> mul_strings(const PauliString& a,
                                            const PauliString& b);

/// Canonical term order: lexicographic over the (qubit, letter) factor
/// sequence with X < Y < Z.  The identity sorts first.
bool string_less(const PauliString& a, const PauliString& b);

struct PauliTerm {
  complex coefficient;
  PauliString string;

  bool operator==(const PauliTerm& other) const = default;
};

/// Weighted sum of Pauli strings, kept simplified: duplicate strings merged,
/// coefficients below the floor dropped, terms in canonical order.
class PauliSum {
 public:
  PauliSum() = default;
  PauliSum(complex coefficient, const PauliString& string);
  static PauliSum identity(complex coefficient = 1.0);

  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  int max_qubit() const;

  /// Coefficient of a given string, zero if absent.
  complex coefficient(const PauliString& s) const;

  /// Real coefficients on every (Hermitian) string.
  bool is_hermitian(double tol = kSimplifyFloor) const;

  PauliSum adjoint() const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(complex scalar);

  friend PauliSum operator+(const PauliSum& a, const PauliSum& b);
  friend PauliSum operator-(const PauliSum& a, const PauliSum& b);
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);
  friend PauliSum operator*(complex scalar, const PauliSum& a);
  friend PauliSum operator-(const PauliSum& a);

  bool operator==(const PauliSum& other) const = default;

  std::string str() const;

 private:
  friend class PauliAccumulator;
  std::vector<PauliTerm> terms_;
};

PauliSum commutator(const PauliSum& a, const PauliSum& b);

/// Re-simplify with an explicit floor (merging is implicit in all arithmetic).
PauliSum simplify(const PauliSum& a, double floor = kSimplifyFloor);

/// Builder used where many terms accumulate before one merge/sort pass.
class PauliAccumulator {
 public:
  void add(complex coefficient, const PauliString& string);
  void add(const PauliSum& sum, complex scale = 1.0);
  /// Merged, floored, canonically ordered result; the accumulator is reset.
  PauliSum take(double floor = kSimplifyFloor);

 private:
  struct MaskHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k)
        const noexcept;
  };
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, complex, MaskHash>
      terms_;
};

}  // namespace iqeb
