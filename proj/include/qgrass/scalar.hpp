#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qgrass {

using BigInt = boost::multiprecision::cpp_int;

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in Q(q)") {}
};

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients. coeffs()[i] is the coefficient of q^i; no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(BigInt constant);
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly monomial(BigInt c, int degree);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monomial() const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
  int valuation() const;
  int term_count() const;
  const BigInt& lc() const { return c_.back(); }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt content() const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  IntPoly scaled(const BigInt& c) const;
  /// Divides every coefficient by c; c must divide the content.
  IntPoly divided(const BigInt& c) const;
  /// Multiplies by q^e (e may be negative when valuation() >= -e).
  IntPoly shifted(int e) const;
  /// Exact quotient a / b; throws std::logic_error if b does not divide a.
  static IntPoly div_exact(const IntPoly& a, const IntPoly& b);
  static IntPoly gcd(const IntPoly& a, const IntPoly& b);

  /// "q^2 - 1" when spaced, "q^2-1" when compact.
  std::string to_string(bool spaced = true) const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Exact element of Q(q). Always stored as num/den with gcd(num, den) = 1 in
/// Z[q] and lc(den) > 0, so equality is representation equality.
class QScalar {
 public:
  QScalar() : den_(BigInt(1)) {}
  QScalar(long long v) : num_(BigInt(v)), den_(BigInt(1)) {}
  QScalar(BigInt v) : num_(std::move(v)), den_(BigInt(1)) {}

  static QScalar from_polys(IntPoly num, IntPoly den);
  static QScalar rational(const BigInt& num, const BigInt& den);
  static QScalar q_pow(int e);
  static QScalar q() { return q_pow(1); }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_laurent() const { return den_.is_monomial() && den_.lc() == 1; }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  /// Pivot heuristic: total number of nonzero coefficients.
  int complexity() const { return num_.term_count() + den_.term_count(); }

  QScalar inverse() const;
  QScalar pow(int e) const;

  QScalar operator-() const;
  friend QScalar operator+(const QScalar& a, const QScalar& b);
  friend QScalar operator-(const QScalar& a, const QScalar& b);
  friend QScalar operator*(const QScalar& a, const QScalar& b);
  friend QScalar operator/(const QScalar& a, const QScalar& b);
  QScalar& operator+=(const QScalar& b) { return *this = *this + b; }
  QScalar& operator-=(const QScalar& b) { return *this = *this - b; }
  QScalar& operator*=(const QScalar& b) { return *this = *this * b; }
  QScalar& operator/=(const QScalar& b) { return *this = *this / b; }
  friend bool operator==(const QScalar&, const QScalar&) = default;

  /// Human form: Laurent polynomials as "q - q^-1", otherwise "(num)/(den)".
  std::string to_string() const;
  /// Bracketed exact form "(q^2-1)/(q)".
  std::string to_exact_string() const;
  bool needs_parens() const;

 private:
  QScalar(IntPoly num, IntPoly den, bool /*canonical*/) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  IntPoly num_;
  IntPoly den_;
};

/// Renders sum(coeff * basis) with signs pulled out of the coefficients:
/// "x - q*y", "(q - 1)*z". An empty basis string denotes the unit.
std::string render_linear_combination(
    const std::vector<std::pair<QScalar, std::string>>& terms, const std::string& times = "*");

/// Total order on canonical scalars, used only for deterministic sorting.
std::strong_ordering compare(const QScalar& a, const QScalar& b);

enum class ArithOp { add, sub, mul, div };

/// Checked binary operation; division by zero throws DivisionByZero.
QScalar qs_arith(ArithOp op, const QScalar& a, const QScalar& b);
inline QScalar qs_qpow(int e) { return QScalar::q_pow(e); }

}  // namespace qgrass
