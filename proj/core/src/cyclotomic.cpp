#include "acsl/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <utility>

#include "acsl/errors.hpp"

namespace acsl {

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder over Q; divisor must be nonzero and trimmed.
std::pair<QPoly, QPoly> divmod(QPoly num, const QPoly& den) {
  trim(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) return {QPoly{}, std::move(num)};
  QPoly quot(num.size() - dd);
  for (std::size_t i = num.size(); i-- > dd;) {
    if (num[i] == 0) continue;
    mpq_class t = num[i] / den[dd];
    quot[i - dd] = t;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= t * den[j];
  }
  num.resize(dd);
  trim(num);
  trim(quot);
  return {std::move(quot), std::move(num)};
}

QPoly multiply(const QPoly& x, const QPoly& y) {
  if (x.empty() || y.empty()) return {};
  QPoly out(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  trim(out);
  return out;
}

QPoly subtract(QPoly x, const QPoly& y) {
  if (x.size() < y.size()) x.resize(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) x[i] -= y[i];
  trim(x);
  return x;
}

QPoly to_qpoly(const IntPoly& p) {
  QPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return out;
}

// Reduces `c` in place to exactly phi(n) coefficients modulo Phi_n.
void reduce(QPoly& c, int n) {
  const IntPoly& modulus = cyclotomic_modulus(n);
  const auto phi = static_cast<std::size_t>(modulus.degree());
  if (c.size() > static_cast<std::size_t>(n)) {
    // x^n = 1 in the field.
    for (std::size_t i = static_cast<std::size_t>(n); i < c.size(); ++i) {
      c[i % static_cast<std::size_t>(n)] += c[i];
    }
    c.resize(static_cast<std::size_t>(n));
  }
  for (std::size_t i = c.size(); i-- > phi;) {
    if (c[i] == 0) continue;
    const mpq_class t = c[i];
    for (std::size_t j = 0; j < phi; ++j) {
      if (modulus[j] != 0) c[i - phi + j] -= t * modulus[j];
    }
    c[i] = 0;
  }
  c.resize(phi);
}

}  // namespace

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly operator*(const IntPoly& x, const IntPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<mpz_class> out(x.coeffs_.size() + y.coeffs_.size() - 1);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) out[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    const mpz_class mag = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i > 0) out << (mag != 1 ? "*" : "") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return out.str();
}

int euler_phi(int n) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "euler_phi: n must be positive");
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "cyclotomic_polynomial: n must be positive");
  std::vector<mpz_class> num(static_cast<std::size_t>(n) + 1);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    // Exact division by the monic Phi_d.
    const auto& den = cyclotomic_modulus(d).coeffs();
    const std::size_t dd = den.size() - 1;
    std::vector<mpz_class> quot(num.size() - dd);
    for (std::size_t i = num.size(); i-- > dd;) {
      const mpz_class t = num[i];
      quot[i - dd] = t;
      if (t == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= t * den[j];
    }
    num = std::move(quot);
  }
  return IntPoly(std::move(num));
}

const IntPoly& cyclotomic_modulus(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const IntPoly>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto computed = std::make_unique<const IntPoly>(cyclotomic_polynomial(n));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::move(computed));
  return *it->second;
}

// ---------------------------------------------------------------------------
// CycNum

CycNum::CycNum(int order) : order_(order) {
  if (order < 1) throw Error(ErrorKind::invalid_argument, "CycNum: order must be positive");
  coeffs_.resize(static_cast<std::size_t>(cyclotomic_modulus(order).degree()));
}

CycNum::CycNum(int order, std::vector<mpq_class> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 1) throw Error(ErrorKind::invalid_argument, "CycNum: order must be positive");
  reduce(coeffs_, order_);
}

CycNum CycNum::from_integer(int order, const mpz_class& value) {
  CycNum out(order);
  out.coeffs_[0] = value;
  return out;
}

CycNum CycNum::from_power_counts(int order, std::span<const std::uint64_t> counts) {
  if (counts.size() > static_cast<std::size_t>(order)) {
    throw Error(ErrorKind::invalid_argument, "from_power_counts: more residues than the order");
  }
  std::vector<mpq_class> coeffs;
  coeffs.reserve(counts.size());
  for (std::uint64_t c : counts) coeffs.emplace_back(mpz_class(static_cast<unsigned long>(c)));
  return CycNum(order, std::move(coeffs));
}

bool CycNum::is_zero() const noexcept {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

void CycNum::require_same_order(const CycNum& other) const {
  if (order_ != other.order_) {
    throw Error(ErrorKind::order_mismatch, "cyclotomic orders differ: " + std::to_string(order_) +
                                               " vs " + std::to_string(other.order_));
  }
}

CycNum& CycNum::operator+=(const CycNum& other) {
  require_same_order(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& other) {
  require_same_order(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CycNum operator*(const CycNum& x, const CycNum& y) {
  x.require_same_order(y);
  QPoly product(2 * x.coeffs_.size());
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
      if (y.coeffs_[j] != 0) product[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  return CycNum(x.order_, std::move(product));
}

CycNum& CycNum::operator*=(const CycNum& other) { return *this = *this * other; }

CycNum operator-(CycNum x) {
  for (auto& c : x.coeffs_) c = -c;
  return x;
}

std::string CycNum::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpq_class& c = coeffs_[i];
    if (c == 0) continue;
    const mpq_class mag = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i > 0) out << (mag != 1 ? "*" : "") << "z" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

CycNum root_power(int n, std::int64_t e) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "root_power: n must be positive");
  const std::int64_t r = ((e % n) + n) % n;
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(r) + 1);
  coeffs.back() = 1;
  return CycNum(n, std::move(coeffs));
}

CycNum add(const CycNum& x, const CycNum& y) { return x + y; }
CycNum mul(const CycNum& x, const CycNum& y) { return x * y; }
CycNum neg(const CycNum& x) { return -x; }

CycNum inverse(const CycNum& x) {
  if (x.is_zero()) throw Error(ErrorKind::zero_inverse, "inverse of zero in Q(zeta_" +
                                                            std::to_string(x.order()) + ")");
  QPoly r0 = to_qpoly(cyclotomic_modulus(x.order()));
  QPoly r1 = x.coeffs();
  trim(r1);
  QPoly s0;
  QPoly s1{mpq_class(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly next = subtract(s0, multiply(q, s1));
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  // Phi_n is irreducible, so the gcd r0 is a nonzero constant.
  const mpq_class scale = 1 / r0[0];
  for (auto& c : s0) c *= scale;
  return CycNum(x.order(), std::move(s0));
}

CycNum conjugate(const CycNum& x) {
  const auto n = static_cast<std::size_t>(x.order());
  QPoly flipped(n);
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) flipped[(n - i) % n] += x.coeffs()[i];
  return CycNum(x.order(), std::move(flipped));
}

std::complex<double> embed_numeric(const CycNum& x) {
  long double re = 0.0L;
  long double im = 0.0L;
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    if (x.coeffs()[i] == 0) continue;
    const long double c = x.coeffs()[i].get_d();
    const long double angle = two_pi * static_cast<long double>(i) / x.order();
    re += c * std::cos(angle);
    im += c * std::sin(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::optional<std::int64_t> root_of_unity_exponent(const CycNum& x) {
  if (x.is_zero()) return std::nullopt;
  const auto z = embed_numeric(x);
  if (std::abs(std::abs(z) - 1.0) > 1e-6) return std::nullopt;
  const int n = x.order();
  const double turns = std::arg(z) / (2.0 * std::numbers::pi);
  const auto guess = static_cast<std::int64_t>(std::llround(turns * n));
  for (std::int64_t delta : {0, -1, 1}) {
    const std::int64_t e = (((guess + delta) % n) + n) % n;
    if (root_power(n, e) == x) return e;
  }
  return std::nullopt;
}

}  // namespace acsl
