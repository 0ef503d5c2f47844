#include <gtest/gtest.h>

#include <random>

#include "pa/scalar.hpp"

using pa::Scalar;
using pa::SymScalar;

TEST(Scalar, ParseAndPrint) {
  EXPECT_EQ(Scalar::parse("-2/12").str(), "-1/6");
  EXPECT_EQ(Scalar::parse(" 4/2 ").str(), "2");
  EXPECT_EQ(Scalar::parse("0/5").str(), "0");
  EXPECT_EQ(Scalar(3, -9).str(), "-1/3");
  EXPECT_THROW(Scalar::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Scalar::parse("abc"), std::invalid_argument);
}

TEST(Scalar, OverflowPromotesAndDemotes) {
  Scalar big = pa::factorial(25);
  EXPECT_EQ(big.str(), "15511210043330985984000000");
  Scalar back = big / pa::factorial(24);
  EXPECT_EQ(back, Scalar(25));
  EXPECT_TRUE(back.is_integer());
  Scalar x(INT64_MAX);
  EXPECT_EQ((x + Scalar(1)).str(), "9223372036854775808");
  EXPECT_EQ((x + Scalar(1)) - Scalar(1), x);
  EXPECT_EQ((Scalar(1) / x) * x, Scalar(1));
}

TEST(Scalar, FallingFactorial) {
  EXPECT_EQ(pa::falling_factorial(Scalar(3), 2), Scalar(6));
  EXPECT_EQ(pa::falling_factorial(Scalar(3), 0), Scalar(1));
  for (int m = 0; m < 5; ++m)
    EXPECT_TRUE(pa::falling_factorial(Scalar(m), static_cast<unsigned>(m + 1)).is_zero());
  SymScalar ff = pa::falling_factorial(SymScalar::xi(), 2);
  EXPECT_EQ(ff, SymScalar(std::vector<Scalar>{Scalar(0), Scalar(-1), Scalar(1)}));
}

TEST(Scalar, Eval) {
  SymScalar p = pa::falling_factorial(SymScalar::xi(), 2);
  EXPECT_EQ(pa::eval(p, Scalar(3)), Scalar(6));
  EXPECT_EQ(pa::eval(SymScalar(), Scalar(11)), Scalar(0));
  EXPECT_EQ(pa::eval(SymScalar::xi() - SymScalar(5), Scalar(5)), Scalar(0));
}

TEST(Scalar, FieldAxiomsRandom) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  auto draw = [&] { return Scalar(num(rng), den(rng)); };
  for (int t = 0; t < 1000; ++t) {
    Scalar a = draw(), b = draw(), c = draw();
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a - a, Scalar(0));
    if (!b.is_zero())
      ASSERT_EQ((a / b) * b, a);
    Scalar d = a;
    d.add_mul(b, c);
    ASSERT_EQ(d, a + b * c);
    ASSERT_EQ(Scalar::parse(a.str()), a);
  }
}

TEST(Scalar, EvalIsRingHomomorphism) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-20, 20), deg(0, 4);
  auto draw = [&] {
    std::vector<Scalar> c;
    for (int i = 0, d = deg(rng); i <= d; ++i)
      c.emplace_back(coef(rng));
    return SymScalar(std::move(c));
  };
  for (int t = 0; t < 200; ++t) {
    SymScalar p = draw(), q = draw();
    Scalar x(coef(rng), 7);
    ASSERT_EQ(pa::eval(p * q, x), pa::eval(p, x) * pa::eval(q, x));
    ASSERT_EQ(pa::eval(p + q, x), pa::eval(p, x) + pa::eval(q, x));
  }
}

TEST(Scalar, Ordering) {
  EXPECT_LT(Scalar(-1, 2), Scalar(1, 3));
  EXPECT_GT(pa::factorial(30), Scalar(INT64_MAX));
  EXPECT_EQ(Scalar(-3, 4).abs(), Scalar(3, 4));
  EXPECT_EQ(pa::binomial(6, 2), Scalar(15));
}

TEST(Scalar, ResidueModM61) {
  const std::uint64_t p = (std::uint64_t{1} << 61) - 1;
  EXPECT_EQ(Scalar(-1).mod_m61(), p - 1);
  EXPECT_EQ(Scalar(0).mod_m61(), 0u);
  EXPECT_EQ(Scalar(static_cast<long>(p)).mod_m61(), 0u);
  auto half = static_cast<unsigned __int128>(Scalar(1, 2).mod_m61());
  EXPECT_EQ(static_cast<std::uint64_t>(half * 2 % p), 1u);
  Scalar big = pa::factorial(30) / Scalar(7);
  auto r = static_cast<unsigned __int128>(big.mod_m61()) * 7 % p;
  EXPECT_EQ(static_cast<std::uint64_t>(r), pa::factorial(30).mod_m61());
  EXPECT_THROW(Scalar(1, static_cast<long>(p)).mod_m61(), std::domain_error);
}
