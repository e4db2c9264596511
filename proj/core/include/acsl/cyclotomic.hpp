#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace acsl {

/// Integer polynomial; coefficient i multiplies x^i. The leading coefficient
/// is nonzero unless the polynomial is zero (empty coefficient vector).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  const mpz_class& operator[](std::size_t i) const { return coeffs_[i]; }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  friend IntPoly operator*(const IntPoly& x, const IntPoly& y);

  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

int euler_phi(int n);

/// Phi_n, by exact division of x^n - 1 by Phi_d for every proper divisor d.
IntPoly cyclotomic_polynomial(int n);

/// Memoised cyclotomic_polynomial; safe to call concurrently.
const IntPoly& cyclotomic_modulus(int n);

/// Element of Q(zeta_n) in canonical form: exactly euler_phi(n) rational
/// coefficients of the representative reduced modulo Phi_n.
class CycNum {
 public:
  explicit CycNum(int order);
  /// Reduces an arbitrary-length coefficient vector modulo Phi_n.
  CycNum(int order, std::vector<mpq_class> coeffs);

  static CycNum zero(int order) { return CycNum(order); }
  static CycNum from_integer(int order, const mpz_class& value);
  /// Sum over r of counts[r] * zeta^r, with counts.size() <= order.
  static CycNum from_power_counts(int order, std::span<const std::uint64_t> counts);

  int order() const noexcept { return order_; }
  const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept;

  CycNum& operator+=(const CycNum& other);
  CycNum& operator-=(const CycNum& other);
  CycNum& operator*=(const CycNum& other);

  friend CycNum operator+(CycNum x, const CycNum& y) { return x += y; }
  friend CycNum operator-(CycNum x, const CycNum& y) { return x -= y; }
  friend CycNum operator*(const CycNum& x, const CycNum& y);
  friend CycNum operator-(CycNum x);

  friend bool operator==(const CycNum&, const CycNum&) = default;

  std::string to_string() const;

 private:
  void require_same_order(const CycNum& other) const;

  int order_;
  std::vector<mpq_class> coeffs_;
};

/// zeta_n^(e mod n).
CycNum root_power(int n, std::int64_t e);

CycNum add(const CycNum& x, const CycNum& y);
CycNum mul(const CycNum& x, const CycNum& y);
CycNum neg(const CycNum& x);

/// Multiplicative inverse via the extended Euclidean algorithm over Q[x].
/// Throws Error(zero_inverse) on zero.
CycNum inverse(const CycNum& x);

/// Complex conjugation, the automorphism zeta -> zeta^{-1}.
CycNum conjugate(const CycNum& x);

/// Value at zeta_n = exp(2 pi i / n).
std::complex<double> embed_numeric(const CycNum& x);

/// Exponent e in [0, n) with x == zeta_n^e, if x is a root of unity of that
/// form.
std::optional<std::int64_t> root_of_unity_exponent(const CycNum& x);

}  // namespace acsl
