#include "qgrass/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace qgrass {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

BigInt gcd_big(BigInt a, BigInt b) {
  a = abs_big(a);
  b = abs_big(b);
  while (b != 0) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const int db = b.degree();
  const BigInt& lb = b.lc();
  std::vector<BigInt> r = a.coeffs();
  int dr = static_cast<int>(r.size()) - 1;
  while (dr >= db && dr >= 0) {
    BigInt lr = r[dr];
    if (lr != 0) {
      for (auto& c : r) c *= lb;
      for (int i = 0; i <= db; ++i) r[dr - db + i] -= lr * b.coeffs()[i];
    }
    r.pop_back();
    --dr;
    while (!r.empty() && r.back() == 0) {
      r.pop_back();
      --dr;
    }
  }
  return IntPoly(std::move(r));
}

IntPoly primitive_part(const IntPoly& a) {
  if (a.is_zero()) return a;
  BigInt c = a.content();
  if (a.lc() < 0) c = -c;
  return a.divided(c);
}

void append_term(std::ostringstream& os, const BigInt& c, int e, bool first, bool spaced) {
  const bool neg = c < 0;
  const BigInt mag = neg ? BigInt(-c) : c;
  if (first) {
    if (neg) os << '-';
  } else {
    os << (spaced ? (neg ? " - " : " + ") : (neg ? "-" : "+"));
  }
  if (e == 0) {
    os << mag;
    return;
  }
  if (mag != 1) os << mag << '*';
  os << 'q';
  if (e != 1) os << '^' << e;
}

}  // namespace

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(BigInt constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(BigInt c, int degree) {
  if (c == 0) return {};
  std::vector<BigInt> v(degree + 1);
  v[degree] = std::move(c);
  IntPoly p;
  p.c_ = std::move(v);
  return p;
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool IntPoly::is_monomial() const {
  if (c_.empty()) return false;
  for (std::size_t i = 0; i + 1 < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

int IntPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

int IntPoly::term_count() const {
  return static_cast<int>(std::count_if(c_.begin(), c_.end(), [](const BigInt& x) { return x != 0; }));
}

BigInt IntPoly::content() const {
  BigInt g = 0;
  for (const auto& c : c_) {
    if (c == 0) continue;
    g = gcd_big(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  const auto& big = a.c_.size() >= b.c_.size() ? a : b;
  const auto& small = a.c_.size() >= b.c_.size() ? b : a;
  IntPoly r = big;
  for (std::size_t i = 0; i < small.c_.size(); ++i) r.c_[i] += small.c_[i];
  r.trim();
  return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) r[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const BigInt& c) const {
  if (c == 0) return {};
  IntPoly r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

IntPoly IntPoly::divided(const BigInt& c) const {
  if (c == 1) return *this;
  IntPoly r = *this;
  for (auto& x : r.c_) x /= c;
  return r;
}

IntPoly IntPoly::shifted(int e) const {
  if (is_zero() || e == 0) return *this;
  IntPoly r;
  if (e > 0) {
    r.c_.assign(e, BigInt(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  } else {
    if (valuation() < -e) throw std::logic_error("IntPoly::shifted below q^0");
    r.c_.assign(c_.begin() + (-e), c_.end());
  }
  return r;
}

IntPoly IntPoly::div_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return {};
  std::vector<BigInt> rem = a.c_;
  const int db = b.degree();
  int dr = a.degree();
  if (dr < db) throw std::logic_error("IntPoly::div_exact: not divisible");
  std::vector<BigInt> quo(dr - db + 1);
  for (; dr >= db; --dr) {
    if (rem[dr] == 0) continue;
    BigInt qc, rr;
    boost::multiprecision::divide_qr(rem[dr], b.lc(), qc, rr);
    if (rr != 0) throw std::logic_error("IntPoly::div_exact: not divisible");
    for (int i = 0; i <= db; ++i) rem[dr - db + i] -= qc * b.c_[i];
    quo[dr - db] = std::move(qc);
  }
  for (const auto& x : rem)
    if (x != 0) throw std::logic_error("IntPoly::div_exact: not divisible");
  return IntPoly(std::move(quo));
}

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return primitive_part(b).scaled(b.is_zero() ? BigInt(0) : b.content());
  if (b.is_zero()) return primitive_part(a).scaled(a.content());
  const BigInt cont = gcd_big(a.content(), b.content());
  // Split off the common power of q first; it is the only factor the
  // Laurent-heavy inputs usually share.
  const int v = std::min(a.valuation(), b.valuation());
  IntPoly x = primitive_part(a.shifted(-a.valuation()));
  IntPoly y = primitive_part(b.shifted(-b.valuation()));
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) {
      x = IntPoly(BigInt(1));
      break;
    }
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  x = primitive_part(x);
  return x.shifted(v).scaled(cont);
}

std::string IntPoly::to_string(bool spaced) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    append_term(os, c_[i], i, first, spaced);
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- QScalar

QScalar QScalar::from_polys(IntPoly num, IntPoly den) {
  if (den.is_zero()) throw DivisionByZero();
  QScalar r(std::move(num), std::move(den), true);
  r.normalize();
  return r;
}

QScalar QScalar::rational(const BigInt& num, const BigInt& den) {
  return from_polys(IntPoly(num), IntPoly(den));
}

QScalar QScalar::q_pow(int e) {
  if (e >= 0) return QScalar(IntPoly::monomial(1, e), IntPoly(BigInt(1)), true);
  return QScalar(IntPoly(BigInt(1)), IntPoly::monomial(1, -e), true);
}

void QScalar::normalize() {
  if (num_.is_zero()) {
    den_ = IntPoly(BigInt(1));
    return;
  }
  if (den_.is_monomial() || num_.is_monomial()) {
    // gcd of a polynomial with a monomial c*q^e is gcd(content, c) * q^min(v, e).
    const IntPoly& mono = den_.is_monomial() ? den_ : num_;
    const IntPoly& other = den_.is_monomial() ? num_ : den_;
    BigInt g = gcd_big(other.content(), mono.lc());
    const int v = std::min(other.valuation(), mono.degree());
    if (v > 0) {
      num_ = num_.shifted(-v);
      den_ = den_.shifted(-v);
    }
    if (g != 1) {
      num_ = num_.divided(g);
      den_ = den_.divided(g);
    }
  } else {
    IntPoly g = IntPoly::gcd(num_, den_);
    if (!(g.is_constant() && g.lc() == 1)) {
      num_ = IntPoly::div_exact(num_, g);
      den_ = IntPoly::div_exact(den_, g);
    }
  }
  if (den_.lc() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

bool QScalar::is_one() const {
  return num_.is_constant() && den_.is_constant() && num_.lc() == 1 && den_.lc() == 1;
}

QScalar QScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  QScalar r(den_, num_, true);
  if (r.den_.lc() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

QScalar QScalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QScalar result(1);
  QScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

QScalar QScalar::operator-() const { return QScalar(-num_, den_, true); }

QScalar operator+(const QScalar& a, const QScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return QScalar::from_polys(a.num_ + b.num_, a.den_);
  return QScalar::from_polys(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QScalar operator-(const QScalar& a, const QScalar& b) { return a + (-b); }

QScalar operator*(const QScalar& a, const QScalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return QScalar::from_polys(a.num_ * b.num_, a.den_ * b.den_);
}

QScalar operator/(const QScalar& a, const QScalar& b) {
  if (b.is_zero()) throw DivisionByZero();
  return a * b.inverse();
}

bool QScalar::needs_parens() const {
  return is_laurent() && num_.term_count() > 1;
}

std::string QScalar::to_string() const {
  if (is_laurent()) {
    if (num_.is_zero()) return "0";
    const int shift = den_.degree();
    std::ostringstream os;
    bool first = true;
    for (int i = num_.degree(); i >= 0; --i) {
      if (num_.coeffs()[i] == 0) continue;
      append_term(os, num_.coeffs()[i], i - shift, first, true);
      first = false;
    }
    return os.str();
  }
  if (is_rational()) return num_.to_string() + "/" + den_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::string QScalar::to_exact_string() const {
  return "(" + num_.to_string(false) + ")/(" + den_.to_string(false) + ")";
}

std::strong_ordering compare(const QScalar& a, const QScalar& b) {
  auto cmp_poly = [](const IntPoly& x, const IntPoly& y) {
    if (auto c = x.coeffs().size() <=> y.coeffs().size(); c != 0) return c;
    for (std::size_t i = x.coeffs().size(); i-- > 0;) {
      if (x.coeffs()[i] < y.coeffs()[i]) return std::strong_ordering::less;
      if (x.coeffs()[i] > y.coeffs()[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  };
  if (auto c = cmp_poly(a.num(), b.num()); c != 0) return c;
  return cmp_poly(a.den(), b.den());
}

QScalar qs_arith(ArithOp op, const QScalar& a, const QScalar& b) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw std::logic_error("qs_arith: unknown op");
}

}  // namespace qgrass

namespace qgrass {

std::string render_linear_combination(
    const std::vector<std::pair<QScalar, std::string>>& terms, const std::string& times) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [coeff, basis] : terms) {
    const bool neg = coeff.num().lc() < 0;
    const QScalar mag = neg ? -coeff : coeff;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool parens = mag.needs_parens() && !(first && !neg && basis.empty());
    std::string c = parens ? "(" + mag.to_string() + ")" : mag.to_string();
    if (basis.empty()) {
      out += c;
    } else if (mag.is_one()) {
      out += basis;
    } else {
      out += c + times + basis;
    }
    first = false;
  }
  return out;
}

}  // namespace qgrass
