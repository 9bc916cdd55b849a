#include "iqeb/pauli.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace iqeb {

namespace {

constexpr complex kImag{0.0, 1.0};

int letter_rank(const PauliString& s, int qubit) {
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const bool x = s.x_mask() & bit;
  const bool z = s.z_mask() & bit;
  if (x && z) return 1;  // Y
  if (x) return 0;       // X
  return 2;              // Z
}

// i-power of the single-qubit product a*b, operators encoded as (x, z) bits.
// Rows/cols: I, X, Y, Z.
constexpr int kPhaseTable[4][4] = {
    // I  X  Y  Z
    {0, 0, 0, 0},  // I
    {0, 0, 1, 3},  // X: XY = iZ, XZ = -iY
    {0, 3, 0, 1},  // Y: YX = -iZ, YZ = iX
    {0, 1, 3, 0},  // Z: ZX = iY, ZY = -iX
};

int op_code(std::uint64_t x, std::uint64_t z, std::uint64_t bit) {
  return (x & bit ? 1 : 0) | (z & bit ? 2 : 0);  // 0=I 1=X 3=Z... see below
}

// op_code returns 0:I, 1:X, 2:Z, 3:Y under (x | z<<1); remap to table rows.
constexpr int kCodeToRow[4] = {0, 1, 3, 2};

}  // namespace

PauliString PauliString::single(int qubit, PauliOp op) {
  if (qubit < 0 || qubit >= 64) throw std::out_of_range("qubit index");
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (op) {
    case PauliOp::X: return PauliString(bit, 0);
    case PauliOp::Y: return PauliString(bit, bit);
    case PauliOp::Z: return PauliString(0, bit);
  }
  throw std::invalid_argument("bad Pauli letter");
}

PauliString PauliString::from_factors(const std::map<int, PauliOp>& factors) {
  PauliString out;
  for (const auto& [qubit, op] : factors) {
    const PauliString f = single(qubit, op);
    out.x_ |= f.x_;
    out.z_ |= f.z_;
  }
  return out;
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

int PauliString::max_qubit() const {
  const std::uint64_t s = x_ | z_;
  return s == 0 ? -1 : 63 - std::countl_zero(s);
}

bool PauliString::acts_on(int qubit) const {
  return (x_ | z_) >> qubit & 1;
}

std::map<int, PauliOp> PauliString::factors() const {
  std::map<int, PauliOp> out;
  for (std::uint64_t s = x_ | z_; s; s &= s - 1) {
    const int q = std::countr_zero(s);
    const int rank = letter_rank(*this, q);
    out[q] = rank == 0 ? PauliOp::X : rank == 1 ? PauliOp::Y : PauliOp::Z;
  }
  return out;
}

bool PauliString::commutes_with(const PauliString& other) const {
  // Strings commute iff they anticommute on an even number of qubits.
  const std::uint64_t clashes =
      (x_ & other.z_mask()) ^ (z_ & other.x_mask());
  return std::popcount(clashes) % 2 == 0;
}

std::string PauliString::str() const {
  if (is_identity()) return "I";
  std::ostringstream os;
  bool first = true;
  for (const auto& [q, op] : factors()) {
    if (!first) os << ' ';
    os << static_cast<char>(op) << q;
    first = false;
  }
  return os.str();
}

std::pair<complex, PauliString> mul_strings(const PauliString& a,
                                            const PauliString& b) {
  int ipow = 0;
  for (std::uint64_t s = a.support() | b.support(); s; s &= s - 1) {
    const std::uint64_t bit = s & ~(s - 1);
    const int ra = kCodeToRow[op_code(a.x_mask(), a.z_mask(), bit)];
    const int rb = kCodeToRow[op_code(b.x_mask(), b.z_mask(), bit)];
    ipow += kPhaseTable[ra][rb];
  }
  static const complex kIPowers[4] = {1.0, kImag, -1.0, -kImag};
  return {kIPowers[ipow % 4],
          PauliString::from_masks(a.x_mask() ^ b.x_mask(),
                                  a.z_mask() ^ b.z_mask())};
}

bool string_less(const PauliString& a, const PauliString& b) {
  std::uint64_t sa = a.support();
  std::uint64_t sb = b.support();
  while (sa || sb) {
    if (!sa) return true;   // a is a strict prefix of b
    if (!sb) return false;
    const int qa = std::countr_zero(sa);
    const int qb = std::countr_zero(sb);
    if (qa != qb) return qa < qb;
    const int ra = letter_rank(a, qa);
    const int rb = letter_rank(b, qb);
    if (ra != rb) return ra < rb;
    sa &= sa - 1;
    sb &= sb - 1;
  }
  return false;
}

PauliSum::PauliSum(complex coefficient, const PauliString& string) {
  if (std::abs(coefficient) >= kSimplifyFloor)
    terms_.push_back({coefficient, string});
}

PauliSum PauliSum::identity(complex coefficient) {
  return PauliSum(coefficient, PauliString{});
}

int PauliSum::max_qubit() const {
  int m = -1;
  for (const auto& t : terms_) m = std::max(m, t.string.max_qubit());
  return m;
}

complex PauliSum::coefficient(const PauliString& s) const {
  for (const auto& t : terms_)
    if (t.string == s) return t.coefficient;
  return 0.0;
}

bool PauliSum::is_hermitian(double tol) const {
  for (const auto& t : terms_)
    if (std::abs(t.coefficient.imag()) > tol) return false;
  return true;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out = *this;
  for (auto& t : out.terms_) t.coefficient = std::conj(t.coefficient);
  return out;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  *this = *this + other;
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  *this = *this - other;
  return *this;
}

PauliSum& PauliSum::operator*=(complex scalar) {
  *this = scalar * *this;
  return *this;
}

PauliSum operator+(const PauliSum& a, const PauliSum& b) {
  PauliAccumulator acc;
  acc.add(a);
  acc.add(b);
  return acc.take();
}

PauliSum operator-(const PauliSum& a, const PauliSum& b) {
  PauliAccumulator acc;
  acc.add(a);
  acc.add(b, -1.0);
  return acc.take();
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  PauliAccumulator acc;
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      auto [phase, prod] = mul_strings(ta.string, tb.string);
      acc.add(ta.coefficient * tb.coefficient * phase, prod);
    }
  return acc.take();
}

PauliSum operator*(complex scalar, const PauliSum& a) {
  PauliAccumulator acc;
  acc.add(a, scalar);
  return acc.take();
}

PauliSum operator-(const PauliSum& a) { return complex{-1.0} * a; }

std::string PauliSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    os << '(' << t.coefficient.real();
    if (t.coefficient.imag() >= 0) os << '+';
    os << t.coefficient.imag() << "i)*" << t.string.str();
    first = false;
  }
  return os.str();
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  PauliAccumulator acc;
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) {
      // Commuting strings cancel exactly; skip them so no residue survives.
      if (ta.string.commutes_with(tb.string)) continue;
      // For anticommuting strings [A, B] = 2AB.
      auto [phase, prod] = mul_strings(ta.string, tb.string);
      acc.add(2.0 * ta.coefficient * tb.coefficient * phase, prod);
    }
  return acc.take();
}

PauliSum simplify(const PauliSum& a, double floor) {
  if (floor < 0) throw std::invalid_argument("negative simplification floor");
  PauliAccumulator acc;
  acc.add(a);
  return acc.take(floor);
}

std::size_t PauliAccumulator::MaskHash::operator()(
    const std::pair<std::uint64_t, std::uint64_t>& k) const noexcept {
  std::uint64_t h = k.first * 0x9e3779b97f4a7c15ULL;
  h ^= k.second + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return static_cast<std::size_t>(h);
}

void PauliAccumulator::add(complex coefficient, const PauliString& string) {
  terms_[{string.x_mask(), string.z_mask()}] += coefficient;
}

void PauliAccumulator::add(const PauliSum& sum, complex scale) {
  for (const auto& t : sum.terms()) add(scale * t.coefficient, t.string);
}

PauliSum PauliAccumulator::take(double floor) {
  PauliSum out;
  out.terms_.reserve(terms_.size());
  for (const auto& [masks, coeff] : terms_) {
    if (std::abs(coeff) < floor) continue;
    out.terms_.push_back(
        {coeff, PauliString::from_masks(masks.first, masks.second)});
  }
  terms_.clear();
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const PauliTerm& a, const PauliTerm& b) {
              return string_less(a.string, b.string);
            });
  return out;
}

}  // namespace iqeb
