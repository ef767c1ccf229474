#include "kgonal/oracle.hpp"

#include <gtest/gtest.h>

#include <vector>

namespace kgonal {
namespace {

std::vector<BigInt> values_of(const std::vector<CommonValue>& v) {
  std::vector<BigInt> out;
  for (const auto& c : v) out.push_back(c.value);
  return out;
}

TEST(OracleTest, TriangularTable) {
  const auto got = enumerate_common(PolygonParams(3), 400000);
  const std::vector<CommonValue> expected{{1, 1, 1},        {4, 3, 10},        {16, 10, 136},
                                          {61, 36, 1891},   {229, 133, 26335}, {856, 495, 366796}};
  EXPECT_EQ(got, expected);
}

TEST(OracleTest, SmallLimits) {
  EXPECT_EQ(enumerate_common(PolygonParams(3), 1), (std::vector<CommonValue>{{1, 1, 1}}));
  EXPECT_EQ(enumerate_common(PolygonParams(3), 9), (std::vector<CommonValue>{{1, 1, 1}}));
  EXPECT_EQ(enumerate_common(PolygonParams(3), 10).size(), 2U);
  EXPECT_THROW(enumerate_common(PolygonParams(3), 0), DomainError);
}

TEST(OracleTest, PentagonalSpotCheck) {
  const auto got = enumerate_common(PolygonParams(5), 10000);
  EXPECT_EQ(values_of(got), (std::vector<BigInt>{1, 51, 3151}));
  for (const auto& c : got) {
    EXPECT_EQ(polygonal(c.n, PolygonParams(5)), c.value);
    EXPECT_EQ(centered(c.m, PolygonParams(5)), c.value);
  }
}

TEST(OracleTest, OutputInvariants) {
  for (long k = 3; k <= 40; ++k) {
    const PolygonParams p(k);
    const BigInt limit = 10000000;
    const auto got = enumerate_common(p, limit);
    for (std::size_t j = 0; j < got.size(); ++j) {
      ASSERT_LE(got[j].value, limit);
      ASSERT_EQ(polygonal(got[j].n, p), got[j].value);
      ASSERT_EQ(centered(got[j].m, p), got[j].value);
      if (j > 0) ASSERT_GT(got[j].value, got[j - 1].value);
    }
  }
}

TEST(CompareTest, Examples) {
  const auto tri = compare(PolygonParams(3), 400000);
  EXPECT_TRUE(tri.closed_form_agreement);
  EXPECT_EQ(tri.matches.size(), 6U);
  EXPECT_FALSE(tri.first_divergence.has_value());

  const auto sq = compare(PolygonParams(4), 1000);
  EXPECT_TRUE(sq.closed_form_agreement);
  EXPECT_EQ(sq.matches, (std::vector<CommonValue>{{1, 1, 1}, {5, 4, 25}, {29, 21, 841}}));

  const auto one = compare(PolygonParams(3), 1);
  EXPECT_TRUE(one.closed_form_agreement);
  EXPECT_EQ(one.matches.size(), 1U);
  EXPECT_EQ(one.k, 3);
  EXPECT_EQ(one.limit, 1);
}

TEST(CompareTest, AgreementAcrossK) {
  for (long k = 3; k <= 60; ++k) {
    const auto report = compare(PolygonParams(k), 100000000);
    EXPECT_TRUE(report.closed_form_agreement) << "k=" << k;
  }
}

}  // namespace
}  // namespace kgonal
