#include <gtest/gtest.h>

#include "hpl/linalg.hpp"
#include "hpl/rational.hpp"

using namespace hpl;

TEST(Rational, ParsesCanonicalForms) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-3/6"), frac(-1, 2));
  EXPECT_EQ(parse_rational(" +4/2 "), Rational(2));
  EXPECT_EQ(parse_rational("0/5"), Rational(0));
}

TEST(Rational, RejectsBadText) {
  for (const char* s : {"", "1.5", "1/0", "a", "1/-2", "--1", "1/", "/2", "1e3"})
    EXPECT_THROW(parse_rational(s), InvalidInput) << s;
}

TEST(Rational, FloorAndCeil) {
  EXPECT_EQ(floor_of(frac(-3, 2)), -2);
  EXPECT_EQ(ceil_of(frac(-3, 2)), -1);
  EXPECT_EQ(floor_of(frac(7, 3)), 2);
  EXPECT_EQ(ceil_of(frac(7, 3)), 3);
  EXPECT_EQ(floor_of(Rational(4)), 4);
  EXPECT_EQ(ceil_of(Rational(4)), 4);
}

TEST(VectorV, ArithmeticAndParsing) {
  auto v = parse_vector("1,-1/2,0");
  ASSERT_EQ(v.dim(), 3u);
  EXPECT_EQ(v[1], frac(-1, 2));
  EXPECT_FALSE(v.is_integral());
  EXPECT_TRUE((Rational(2) * v).is_integral());
  EXPECT_EQ(v + (-v), VectorV(3));
  EXPECT_TRUE((v - v).is_zero());
  EXPECT_EQ(v.str(), "(1, -1/2, 0)");
  EXPECT_THROW(parse_vector("1,,2"), InvalidInput);
}

TEST(Linalg, RankSolveKernelDeterminant) {
  linalg::Matrix m = linalg::to_rational(std::vector<std::vector<int>>{{2, -2}, {-2, 2}});
  EXPECT_EQ(linalg::rank(m), 1u);
  EXPECT_EQ(linalg::determinant(m), 0);
  auto k = linalg::kernel(m);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0][0], k[0][1]);
  auto a2 = linalg::to_rational(std::vector<std::vector<int>>{{2, -1}, {-1, 2}});
  EXPECT_EQ(linalg::determinant(a2), 3);
  auto x = linalg::solve(a2, {Rational(1), Rational(1)});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], 1);
  EXPECT_EQ((*x)[1], 1);
  EXPECT_FALSE(linalg::solve(m, {Rational(1), Rational(0)}));
}
