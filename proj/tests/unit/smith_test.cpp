#include <gtest/gtest.h>

#include "generators.hpp"
#include "lkgraph/errors.hpp"
#include "lkgraph/smith.hpp"

namespace lkgraph {
namespace {

std::vector<BigInt> ints(std::initializer_list<long long> values) {
  return {values.begin(), values.end()};
}

TEST(MinorOracle, HandComputedExamples) {
  // gcd of entries 1; the single 2x2 minor is 6.
  EXPECT_EQ(divisors_via_minors(IntMatrix{{2, 0}, {0, 3}}), ints({1, 6}));
  // gcd of entries 2; |det| 12 -> 12 / 2.
  EXPECT_EQ(divisors_via_minors(IntMatrix{{4, 2}, {2, 4}}), ints({2, 6}));
  EXPECT_EQ(divisors_via_minors(IntMatrix::identity(3)), ints({1, 1, 1}));
  EXPECT_TRUE(divisors_via_minors(IntMatrix(3, 2)).empty());
  EXPECT_TRUE(divisors_via_minors(IntMatrix(0, 4)).empty());
}

TEST(MinorOracle, DimensionLimit) {
  EXPECT_NO_THROW(divisors_via_minors(IntMatrix(6, 9)));
  EXPECT_THROW(divisors_via_minors(IntMatrix(7, 7)), DomainError);
}

TEST(Smith, ZeroOneByOne) {
  const auto c = smith_normal_form(IntMatrix{{0}});
  EXPECT_TRUE(c.divisors.empty());
  EXPECT_EQ(c.D, IntMatrix{{0}});
}

TEST(Smith, DiagonalTwoThree) {
  const IntMatrix m{{2, 0}, {0, 3}};
  const auto c = smith_normal_form(m);
  EXPECT_EQ(c.divisors, ints({1, 6}));
  EXPECT_EQ(c.D, (IntMatrix{{1, 0}, {0, 6}}));
  EXPECT_EQ(c.U * m * c.V, c.D);
}

TEST(Smith, FourTwoTwoFour) { EXPECT_EQ(smith_normal_form(IntMatrix{{4, 2}, {2, 4}}).divisors, ints({2, 6})); }

TEST(Smith, DegenerateShapes) {
  const auto c = smith_normal_form(IntMatrix(0, 3));
  EXPECT_TRUE(c.divisors.empty());
  EXPECT_EQ(c.U.rows(), 0u);
  EXPECT_EQ(c.U.cols(), 0u);
  EXPECT_EQ(c.V, IntMatrix::identity(3));
  EXPECT_EQ(c.D.rows(), 0u);
  EXPECT_EQ(c.D.cols(), 3u);
  EXPECT_TRUE(smith_normal_form(IntMatrix(2, 0)).divisors.empty());
}

TEST(Smith, NegativeEntriesGivePositiveDivisors) {
  EXPECT_EQ(smith_normal_form(IntMatrix{{-7}}).divisors, ints({7}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{0, -4}, {-6, 0}}).divisors, ints({2, 12}));
}

TEST(Smith, CertificateDefectsAreNamed) {
  const IntMatrix m{{2, 0}, {0, 3}};
  auto c = smith_normal_form(m);
  EXPECT_EQ(certificate_defect(m, c), "");
  auto bad = c;
  bad.divisors = ints({6, 1});
  EXPECT_NE(certificate_defect(m, bad), "");
  bad = c;
  bad.U(0, 0) += 1;
  EXPECT_NE(certificate_defect(m, bad), "");
}

TEST(SmithProperty, CertificateAndOracleAgreement) {
  testing::Rng rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const IntMatrix m = testing::random_matrix(rng, 6, 20);
    const auto c = smith_normal_form(m);
    ASSERT_EQ(certificate_defect(m, c), "");
    ASSERT_EQ(c.divisors, divisors_via_minors(m)) << m.to_string();
  }
}

TEST(SmithProperty, TransposeAndUnimodularInvariance) {
  testing::Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix m = testing::random_matrix(rng, 5, 9);
    const auto a = random_unimodular(m.rows(), rng(), 12);
    const auto b = random_unimodular(m.cols(), rng(), 12);
    const auto base = smith_normal_form(m).divisors;
    EXPECT_EQ(smith_normal_form(a * m * b).divisors, base);
    EXPECT_EQ(smith_normal_form(m.transpose()).divisors, base);
  }
}

TEST(Smith, LargeEntriesStayExact) {
  testing::Rng rng(99);
  std::uniform_int_distribution<long long> entry(-1000000, 1000000);
  IntMatrix m(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = entry(rng);
  const auto c = smith_normal_form(m);
  EXPECT_EQ(certificate_defect(m, c), "");
  EXPECT_EQ(c.divisors, divisors_via_minors(m));
  // Beyond 64 bits on purpose.
  IntMatrix huge{{1, 0}, {0, 1}};
  huge(0, 0) = BigInt("123456789012345678901234567890");
  huge(1, 1) = BigInt("987654321098765432109876543210");
  const auto h = smith_normal_form(huge);
  EXPECT_EQ(certificate_defect(huge, h), "");
  EXPECT_EQ(h.divisors, divisors_via_minors(huge));
}

TEST(LkInvariantValue, FromMatrices) {
  EXPECT_TRUE(lk_invariant(IntMatrix(2, 3)).is_zero());
  EXPECT_EQ(lk_invariant(IntMatrix(2, 3)).to_string(), "0");
  EXPECT_EQ(lk_invariant(IntMatrix{{1}}), LkInvariant(ints({1})));
  EXPECT_EQ(lk_invariant(IntMatrix{{2, 0}, {0, 3}}), LkInvariant(ints({1, 6})));
  EXPECT_EQ(lk_invariant(IntMatrix{{2, 0}, {0, 3}}).to_string(), "1 6");
  EXPECT_THROW(LkInvariant(ints({2, 3})), DomainError);
  EXPECT_THROW(LkInvariant(ints({0})), DomainError);
}

TEST(RandomUnimodular, Contract) {
  EXPECT_EQ(random_unimodular(4, 7, 0), IntMatrix::identity(4));
  EXPECT_EQ(random_unimodular(0, 7, 10), IntMatrix(0, 0));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto u = random_unimodular(1 + seed % 6, seed, 30);
    EXPECT_EQ(abs(determinant(u)), 1);
    EXPECT_EQ(u, random_unimodular(1 + seed % 6, seed, 30));
  }
}

TEST(IntMatrixText, Parse) {
  EXPECT_EQ(parse_int_matrix("2 2\n2 0\n0 3\n"), (IntMatrix{{2, 0}, {0, 3}}));
  EXPECT_EQ(parse_int_matrix("0 3"), IntMatrix(0, 3));
  EXPECT_EQ(parse_int_matrix("1 1 +7"), IntMatrix{{7}});
  EXPECT_THROW(parse_int_matrix("2 2\n1 2 3\n"), ParseError);
  EXPECT_THROW(parse_int_matrix("1 1 x"), ParseError);
  EXPECT_THROW(parse_int_matrix(""), ParseError);
}

TEST(Determinant, Small) {
  EXPECT_EQ(determinant(IntMatrix(0, 0)), 1);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix{{2, 1, 1}, {1, 3, 2}, {1, 0, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
}

}  // namespace
}  // namespace lkgraph
