#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "acsl/cyclotomic.hpp"
#include "acsl/errors.hpp"
#include "support/oracles.hpp"

namespace acsl {
namespace {

std::complex<double> unit_root(int n, std::int64_t e) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / n);
}

CycNum random_element(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::vector<mpq_class> c(static_cast<std::size_t>(euler_phi(n)));
  for (auto& x : c) {
    x = mpq_class(num(rng), den(rng));
    x.canonicalize();
  }
  return CycNum(n, std::move(c));
}

TEST(Cyclotomic, SmallPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (IntPoly{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (IntPoly{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (IntPoly{1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12).to_string(), "x^4 - x^2 + 1");
}

TEST(Cyclotomic, MatchesNumericProductUpTo64) {
  for (int n = 1; n <= 64; ++n) {
    const IntPoly phi = cyclotomic_polynomial(n);
    const auto expected = oracle::numeric_cyclotomic(n);
    ASSERT_EQ(phi.degree(), euler_phi(n)) << n;
    ASSERT_EQ(static_cast<std::size_t>(phi.degree() + 1), expected.size()) << n;
    std::vector<long> coeffs;
    for (const auto& c : phi.coeffs()) coeffs.push_back(c.get_si());
    EXPECT_EQ(coeffs, expected) << n;
    for (int j = 1; j <= n; ++j) {
      if (std::gcd(j, n) == 1) EXPECT_LT(std::abs(oracle::evaluate(coeffs, unit_root(n, j))), 1e-8);
    }
  }
}

TEST(Cyclotomic, RootPowers) {
  EXPECT_EQ(root_power(4, 0), CycNum::from_integer(4, 1));
  EXPECT_EQ(root_power(4, 2), CycNum::from_integer(4, -1));
  EXPECT_EQ(root_power(4, -1), root_power(4, 3));
  EXPECT_LT(std::abs(embed_numeric(root_power(12, 7)) - unit_root(12, 7)), 1e-12);
  EXPECT_LT(std::abs(embed_numeric(root_power(4, 1)) - std::complex<double>(0, 1)), 1e-15);
}

TEST(Cyclotomic, CanonicalFormIsUnique) {
  // zeta^e built three ways lands on one canonical vector.
  for (int n = 1; n <= 64; ++n) {
    const CycNum z = root_power(n, 1);
    CycNum acc = CycNum::from_integer(n, 1);
    for (int e = 0; e < 2 * n; ++e) {
      std::vector<mpq_class> mono(static_cast<std::size_t>(e + 1));
      mono.back() = 1;
      EXPECT_EQ(CycNum(n, std::move(mono)), acc) << n << " " << e;
      EXPECT_EQ(root_power(n, e), acc);
      EXPECT_LT(std::abs(embed_numeric(acc) - unit_root(n, e)), 1e-9);
      acc *= z;
    }
  }
}

TEST(Cyclotomic, Arithmetic) {
  const CycNum one = CycNum::from_integer(8, 1);
  const CycNum z = root_power(8, 1);
  EXPECT_TRUE((CycNum::from_integer(4, 1) + CycNum::from_integer(4, -1)).is_zero());
  EXPECT_EQ(root_power(4, 1) * root_power(4, 1), CycNum::from_integer(4, -1));
  EXPECT_EQ((one - z) * (one + z), one - z * z);
  EXPECT_EQ(add(one, z), one + z);
  EXPECT_EQ(mul(one, z), z);
  EXPECT_EQ(neg(z), -z);
}

TEST(Cyclotomic, Inverses) {
  EXPECT_EQ(inverse(CycNum::from_integer(4, -1)), CycNum::from_integer(4, -1));
  for (int e = 0; e < 12; ++e) EXPECT_EQ(inverse(root_power(12, e)), root_power(12, -e));
  const CycNum i = root_power(4, 1);
  const CycNum one = CycNum::from_integer(4, 1);
  const CycNum inv = inverse(one - i);
  EXPECT_EQ(inv, CycNum(4, {mpq_class(1, 2), mpq_class(1, 2)}));
  EXPECT_LT(std::abs(embed_numeric(inv) - std::complex<double>(0.5, 0.5)), 1e-15);
  EXPECT_THROW(inverse(CycNum::zero(5)), Error);
}

TEST(Cyclotomic, OrderMismatch) {
  try {
    (void)(root_power(4, 1) + root_power(8, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::order_mismatch);
  }
}

TEST(Cyclotomic, ConjugateAndExponent) {
  for (int e = 0; e < 20; ++e) {
    EXPECT_EQ(conjugate(root_power(20, e)), root_power(20, -e));
    EXPECT_EQ(root_of_unity_exponent(root_power(20, e)), std::optional<std::int64_t>(e));
  }
  EXPECT_FALSE(root_of_unity_exponent(CycNum::from_integer(8, 2)).has_value());
  EXPECT_FALSE(root_of_unity_exponent(CycNum::zero(8)).has_value());
  EXPECT_EQ(embed_numeric(CycNum::zero(8)), std::complex<double>(0, 0));
}

TEST(Cyclotomic, PowerCounts) {
  // 3 + 2 zeta - zeta^2 style histograms sum phases.
  const std::vector<std::uint64_t> counts{3, 2, 0, 1, 0, 0, 0, 0};
  const CycNum x = CycNum::from_power_counts(8, counts);
  EXPECT_EQ(x, CycNum::from_integer(8, 3) + CycNum::from_integer(8, 2) * root_power(8, 1) + root_power(8, 3));
}

TEST(Cyclotomic, RandomFieldAxioms) {
  std::mt19937_64 rng(8);
  const int orders[] = {4, 8, 12, 20, 28};
  for (int t = 0; t < 2000; ++t) {
    for (int n : orders) {
      const CycNum a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ(a + b, b + a);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_TRUE((a - a).is_zero());
      if (!a.is_zero()) ASSERT_EQ(a * inverse(a), CycNum::from_integer(n, 1));
      const auto ea = embed_numeric(a), eb = embed_numeric(b);
      ASSERT_LT(std::abs(embed_numeric(a * b) - ea * eb), 1e-9);
      ASSERT_LT(std::abs(embed_numeric(a + b) - (ea + eb)), 1e-9);
      ASSERT_LT(std::abs(embed_numeric(conjugate(a)) - std::conj(ea)), 1e-9);
    }
  }
}

TEST(Cyclotomic, EmbeddingMatchesPhaseSums) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    const int n = std::uniform_int_distribution<int>(1, 40)(rng);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n));
    std::complex<double> direct = 0.0;
    for (int e = 0; e < n; ++e) {
      counts[static_cast<std::size_t>(e)] = std::uniform_int_distribution<std::uint64_t>(0, 50)(rng);
      direct += static_cast<double>(counts[static_cast<std::size_t>(e)]) * unit_root(n, e);
    }
    EXPECT_LT(std::abs(embed_numeric(CycNum::from_power_counts(n, counts)) - direct), 1e-9);
  }
}

}  // namespace
}  // namespace acsl
