#include "qgrass/scalar.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace qgrass;

namespace {

const QScalar q = QScalar::q();

QScalar poly(std::vector<long long> low_to_high) {
  std::vector<BigInt> c(low_to_high.begin(), low_to_high.end());
  return QScalar::from_polys(IntPoly(std::move(c)), IntPoly(BigInt(1)));
}

}  // namespace

TEST(Scalar, arith_examples) {
  EXPECT_TRUE(qs_arith(ArithOp::add, q, -q).is_zero());
  EXPECT_TRUE(qs_arith(ArithOp::mul, q, qs_qpow(-1)).is_one());
  // q - 1/q = (q^2 - 1)/q
  const QScalar d = qs_arith(ArithOp::sub, q, qs_qpow(-1));
  EXPECT_EQ(d.num(), IntPoly(std::vector<BigInt>{-1, 0, 1}));
  EXPECT_EQ(d.den(), IntPoly::monomial(1, 1));
  EXPECT_EQ(d.to_exact_string(), "(q^2-1)/(q)");
  EXPECT_EQ(d.to_string(), "q - q^-1");
}

TEST(Scalar, division_by_zero_is_an_error) {
  EXPECT_THROW(qs_arith(ArithOp::div, q, QScalar()), DivisionByZero);
  EXPECT_THROW(QScalar().inverse(), DivisionByZero);
  EXPECT_THROW(QScalar::from_polys(IntPoly(BigInt(1)), IntPoly()), DivisionByZero);
}

TEST(Scalar, qpow) {
  EXPECT_TRUE(qs_qpow(0).is_one());
  EXPECT_EQ(qs_qpow(2), q * q);
  EXPECT_EQ(qs_qpow(-3), QScalar(1) / (q * q * q));
  EXPECT_EQ(qs_qpow(-3).to_string(), "q^-3");
  for (int a = -5; a <= 5; ++a)
    for (int b = -5; b <= 5; ++b) EXPECT_EQ(qs_qpow(a) * qs_qpow(b), qs_qpow(a + b));
}

TEST(Scalar, no_root_of_unity_collapse) {
  for (int e = 1; e <= 64; ++e) EXPECT_FALSE(qs_qpow(e).is_one()) << e;
}

TEST(Scalar, canonical_form) {
  // (q^2 - 1)/(q - 1) = q + 1
  const QScalar a = QScalar::from_polys(IntPoly(std::vector<BigInt>{-1, 0, 1}), IntPoly(std::vector<BigInt>{-1, 1}));
  EXPECT_EQ(a, poly({1, 1}));
  // -2/(-4q) = 1/(2q)
  const QScalar b = QScalar::from_polys(IntPoly(BigInt(-2)), IntPoly::monomial(-4, 1));
  EXPECT_EQ(b.num(), IntPoly(BigInt(1)));
  EXPECT_EQ(b.den(), IntPoly::monomial(2, 1));
  // (2q^2 + 2q)/(4q^2 - 4) = q/(2q - 2)
  const QScalar c = QScalar::from_polys(IntPoly(std::vector<BigInt>{0, 2, 2}), IntPoly(std::vector<BigInt>{-4, 0, 4}));
  EXPECT_EQ(c.num(), IntPoly::monomial(1, 1));
  EXPECT_EQ(c.den(), IntPoly(std::vector<BigInt>{-2, 2}));
  EXPECT_EQ(c.to_exact_string(), "(q)/(2*q-2)");
}

TEST(Scalar, rendering) {
  EXPECT_EQ(poly({-1, 0, 1}).to_string(), "q^2 - 1");
  EXPECT_EQ(QScalar::rational(-1, 2).to_string(), "-1/2");
  EXPECT_EQ((QScalar(1) - qs_qpow(-2)).to_string(), "1 - q^-2");
  EXPECT_EQ((q / poly({1, 1})).to_string(), "(q)/(q + 1)");
  EXPECT_EQ(QScalar().to_exact_string(), "(0)/(1)");
}

TEST(Scalar, field_axioms_on_random_samples) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const QScalar a = test_support::random_scalar(rng);
    const QScalar b = test_support::random_scalar(rng);
    const QScalar c = test_support::random_scalar(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

TEST(Scalar, canonical_along_different_paths) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const QScalar a = test_support::random_scalar(rng);
    const QScalar b = test_support::random_scalar(rng);
    if (b.is_zero()) continue;
    const QScalar lhs = (a * b + b * b) / b;
    const QScalar rhs = a + b;
    EXPECT_EQ(lhs.num(), rhs.num());
    EXPECT_EQ(lhs.den(), rhs.den());
  }
}

TEST(Scalar, gcd_of_polynomials) {
  // (q+1)(q-2) and (q+1)(3q+1) share q+1.
  const IntPoly a = IntPoly(std::vector<BigInt>{1, 1}) * IntPoly(std::vector<BigInt>{-2, 1});
  const IntPoly b = IntPoly(std::vector<BigInt>{1, 1}) * IntPoly(std::vector<BigInt>{1, 3});
  EXPECT_EQ(IntPoly::gcd(a, b), IntPoly(std::vector<BigInt>{1, 1}));
  EXPECT_EQ(IntPoly::gcd(a.scaled(6), b.scaled(4)), IntPoly(std::vector<BigInt>{2, 2}));
}
