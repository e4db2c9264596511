#include <gtest/gtest.h>

#include <random>

#include "acsl/errors.hpp"
#include "acsl/manifolds.hpp"

namespace acsl {
namespace {

FramedLink unknot(std::int64_t framing, std::int64_t q) { return make_link(IntMatrix{{framing}}, {q}); }

TEST(Manifolds, S1xS2ClosedForm) {
  EXPECT_TRUE(s1xs2_expectation({0, {1}, 0}, CouplingLevel(1)).is_zero);
  EXPECT_EQ(s1xs2_expectation({0, {0}, 0}, CouplingLevel(3)).value, CycNum::from_integer(12, 1));
  EXPECT_EQ(s1xs2_expectation({0, {4}, 3}, CouplingLevel(2)).value, root_power(8, -3));
  EXPECT_THROW(s1xs2_expectation({1, {0, 0, 0}, 0}, CouplingLevel(1)), Error);
}

TEST(Manifolds, S1xSigmaClosedForm) {
  EXPECT_TRUE(s1xsigma_expectation({1, {0, 0, 1}, 0}, CouplingLevel(1)).is_zero);
  for (int g = 0; g < 4; ++g) {
    const HomologyData h{g, std::vector<std::int64_t>(static_cast<std::size_t>(2 * g + 1), 0), 0};
    EXPECT_EQ(s1xsigma_expectation(h, CouplingLevel(2)).value, CycNum::from_integer(8, 1));
  }
  const Invariant v = s1xsigma_expectation({1, {2, -2, 4}, 5}, CouplingLevel(1));
  EXPECT_EQ(v.value, root_power(4, 3));
  ASSERT_TRUE(v.phase.has_value());
  EXPECT_EQ(v.phase->exponent, 3);
  EXPECT_THROW(s1xsigma_expectation({1, {0, 0}, 0}, CouplingLevel(1)), Error);
}

TEST(Manifolds, S1xS2Presentation) {
  const SurgeryPresentation p = s1xs2_presentation(unknot(5, 1), {1}, CouplingLevel(1));
  EXPECT_EQ(p.link.linking, (IntMatrix{{5, 1}, {1, 0}}));
  EXPECT_TRUE(p.link.is_surgery(1));
  EXPECT_EQ(p.link.names[1], "core");

  EXPECT_TRUE(surgery_expectation(s1xs2_presentation(unknot(0, 1), {1}, CouplingLevel(1))).is_zero);
  const auto two = s1xs2_presentation(unknot(0, 2), {1}, CouplingLevel(1));
  EXPECT_EQ(surgery_expectation(two), s1xs2_expectation(s1xs2_homology(unknot(0, 2), {1}), CouplingLevel(1)));
  EXPECT_EQ(surgery_expectation(two).value, CycNum::from_integer(4, 1));
}

TEST(Manifolds, T3Presentation) {
  const FramedLink none = make_link(IntMatrix(0), {});
  for (std::int64_t k : {1, 2, 3}) {
    const auto p = t3_presentation(none, {}, CouplingLevel(k));
    EXPECT_EQ(gauss_sum(p, false).value, CycNum::from_integer(static_cast<int>(4 * k), 8 * k * k * k));
  }
  const auto zero = t3_presentation(unknot(0, 1), {{1, 0, 0}}, CouplingLevel(1));
  EXPECT_TRUE(surgery_expectation(zero).is_zero);
  EXPECT_TRUE(s1xsigma_expectation(t3_homology(unknot(0, 1), {{1, 0, 0}}), CouplingLevel(1)).is_zero);
  const auto one = t3_presentation(unknot(0, 1), {{2, 2, 2}}, CouplingLevel(1));
  EXPECT_EQ(surgery_expectation(one).value, CycNum::from_integer(4, 1));
}

TEST(Manifolds, PresentationsMatchClosedForms) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> entry(-3, 3), charge(-6, 6);
  for (int t = 0; t < 150; ++t) {
    const CouplingLevel k(t % 4 == 3 ? -2 : 1 + t % 3);
    const std::size_t n = 1 + static_cast<std::size_t>(t % 3);
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = entry(rng);
    }
    std::vector<std::int64_t> q(n), core(n);
    std::vector<std::array<std::int64_t, 3>> rings(n);
    for (std::size_t i = 0; i < n; ++i) {
      q[i] = charge(rng);
      core[i] = entry(rng);
      for (auto& r : rings[i]) r = entry(rng);
    }
    const FramedLink observed = make_link(m, q);
    EXPECT_EQ(surgery_expectation(s1xs2_presentation(observed, core, k)),
              s1xs2_expectation(s1xs2_homology(observed, core), k));
    EXPECT_EQ(surgery_expectation(t3_presentation(observed, rings, k)),
              s1xsigma_expectation(t3_homology(observed, rings), k));
  }
}

TEST(Manifolds, RejectsSurgeryInput) {
  FramedLink l = unknot(1, 0);
  l.roles[0] = Role::surgery;
  EXPECT_THROW(s1xs2_presentation(l, {0}, CouplingLevel(1)), Error);
  EXPECT_THROW(s1xs2_presentation(unknot(0, 1), {0, 1}, CouplingLevel(1)), Error);
}

}  // namespace
}  // namespace acsl
