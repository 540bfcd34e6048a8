#include "qgrass/parse.hpp"

#include <cctype>
#include <optional>

namespace qgrass {

RingKind parse_ring_kind(std::string_view name) {
  if (name == "qm") return RingKind::qm;
  if (name == "grass") return RingKind::grass;
  if (name == "t") return RingKind::t;
  throw std::invalid_argument("unknown ring '" + std::string(name) + "' (expected qm, grass or t)");
}

std::string to_string(RingKind kind) {
  switch (kind) {
    case RingKind::qm: return "qm";
    case RingKind::grass: return "grass";
    case RingKind::t: return "t";
  }
  return "?";
}

ParseError::ParseError(const std::string& what, int line, int column)
    : std::invalid_argument(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { integer, q, x, letter, u, y, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::size_t pos;
  BigInt value;
  std::vector<int> ints;
};

class Lexer {
 public:
  Lexer(std::string_view text, int n) : text_(text), n_(n) {}

  [[noreturn]] void fail(const std::string& what, std::size_t pos) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      const std::size_t start = i_;
      if (i_ == text_.size()) {
        out.push_back({Tok::end, start, 0, {}});
        return out;
      }
      const char c = text_[i_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back({Tok::integer, start, read_int(), {}});
        continue;
      }
      ++i_;
      switch (c) {
        case 'q': out.push_back({Tok::q, start, 0, {}}); break;
        case 'u': out.push_back({Tok::u, start, 0, {}}); break;
        case 'y': out.push_back({Tok::y, start, 0, {}}); break;
        case '+': out.push_back({Tok::plus, start, 0, {}}); break;
        case '-': out.push_back({Tok::minus, start, 0, {}}); break;
        case '*': out.push_back({Tok::star, start, 0, {}}); break;
        case '/': out.push_back({Tok::slash, start, 0, {}}); break;
        case '^': out.push_back({Tok::caret, start, 0, {}}); break;
        case '(': out.push_back({Tok::lparen, start, 0, {}}); break;
        case ')': out.push_back({Tok::rparen, start, 0, {}}); break;
        case 'x': {
          skip_space();
          expect('[');
          auto ints = read_list(start);
          if (ints.size() != 2) fail("generator needs two indices, as in x[1,2]", start);
          out.push_back({Tok::x, start, 0, std::move(ints)});
          break;
        }
        case '[': out.push_back({Tok::letter, start, 0, read_list(start)}); break;
        default: fail(std::string("unexpected character '") + c + "'", start);
      }
    }
  }

 private:
  void skip_space() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }

  void expect(char c) {
    if (i_ >= text_.size() || text_[i_] != c) fail(std::string("expected '") + c + "'", i_);
    ++i_;
  }

  BigInt read_int() {
    BigInt v = 0;
    if (i_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[i_]))) fail("expected an integer", i_);
    while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) v = v * 10 + (text_[i_++] - '0');
    return v;
  }

  int read_small_int() {
    const std::size_t at = i_;
    const BigInt v = read_int();
    if (v > 1000000) fail("index too large", at);
    return static_cast<int>(v);
  }

  // After '['; reads "a,b,...]" or the compact "ab...]".
  std::vector<int> read_list(std::size_t start) {
    std::vector<int> out;
    skip_space();
    const std::size_t first = i_;
    while (true) {
      skip_space();
      out.push_back(read_small_int());
      skip_space();
      if (i_ < text_.size() && text_[i_] == ',') {
        ++i_;
        continue;
      }
      if (i_ < text_.size() && text_[i_] == ']') {
        ++i_;
        break;
      }
      fail("unterminated bracket", start);
    }
    if (out.size() == 1 && n_ <= 9) {
      std::vector<int> digits;
      for (std::size_t p = first; p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p])); ++p)
        digits.push_back(text_[p] - '0');
      if (digits.size() > 1) return digits;
    }
    return out;
  }

  std::string_view text_;
  int n_;
  std::size_t i_ = 0;
};

// ---------------------------------------------------------------- rings

struct QmRing {
  using V = NCPoly;
  QMatrixAlgebra alg;
  V scalar(const QScalar& c) const { return NCPoly::constant(alg.shape(), c); }
  V x(int i, int j) const { return alg.gen(i, j); }
  V mul(const V& a, const V& b) const { return alg.mul(a, b); }
  std::optional<QScalar> as_scalar(const V& a) const {
    if (a.is_zero()) return QScalar(0);
    if (a.size() == 1 && a.terms().begin()->first.is_one()) return a.terms().begin()->second;
    return std::nullopt;
  }
  std::optional<V> inverse(const V& a) const {
    auto s = as_scalar(a);
    if (!s || s->is_zero()) return std::nullopt;
    return scalar(s->inverse());
  }
};

struct GrassRing {
  using V = LocalizedElement;
  GrassShape shape;
  V scalar(const QScalar& c) const { return LocalizedElement::scalar(shape, c); }
  V letter(std::vector<int> cols) const { return LocalizedElement::letter(shape, PluckerIndex(std::move(cols), shape)); }
  V u() const { return LocalizedElement::u_power(shape, 1); }
  V mul(const V& a, const V& b) const { return loc_mul(a, b); }
  std::optional<QScalar> as_scalar(const V& a) const {
    if (a.is_zero()) return QScalar(0);
    const auto& t = a.terms().front();
    if (a.terms().size() == 1 && t.word.empty() && t.upow == 0) return t.coeff;
    return std::nullopt;
  }
  std::optional<V> inverse(const V& a) const {
    if (a.terms().size() != 1 || !a.terms().front().word.empty()) return std::nullopt;
    const auto& t = a.terms().front();
    return LocalizedElement::term(shape, t.coeff.inverse(), {}, -t.upow);
  }
};

struct TRing {
  using V = TElement;
  TAlgebra alg;
  V scalar(const QScalar& c) const { return c * alg.one(); }
  V x(int i, int j) const { return alg.x(i, j); }
  V y() const { return alg.y(); }
  V mul(const V& a, const V& b) const { return alg.mul(a, b); }
  std::optional<QScalar> as_scalar(const V& a) const {
    if (a.is_zero()) return QScalar(0);
    const auto& [key, c] = *a.terms().begin();
    if (a.terms().size() == 1 && key.mono.is_one() && key.ypow == 0) return c;
    return std::nullopt;
  }
  std::optional<V> inverse(const V& a) const {
    if (a.terms().size() != 1) return std::nullopt;
    const auto& [key, c] = *a.terms().begin();
    if (!key.mono.is_one()) return std::nullopt;
    return TElement::term(alg.base().shape(), key.mono, -key.ypow, c.inverse());
  }
};

template <typename Ring>
class Parser {
 public:
  using V = typename Ring::V;

  Parser(const Ring& ring, Lexer& lexer, std::vector<Token> toks) : ring_(ring), lexer_(lexer), toks_(std::move(toks)) {}

  V parse() {
    V v = sum();
    if (peek().kind != Tok::end) lexer_.fail("unexpected token", peek().pos);
    return v;
  }

 private:
  const Token& peek() const { return toks_[p_]; }
  const Token& next() { return toks_[p_++]; }

  V sum() {
    V v = product();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = next().kind == Tok::minus;
      V r = product();
      v = minus ? v - r : v + r;
    }
    return v;
  }

  static bool starts_atom(Tok k) {
    return k == Tok::integer || k == Tok::q || k == Tok::x || k == Tok::letter || k == Tok::u || k == Tok::y ||
           k == Tok::lparen;
  }

  V product() {
    V v = unary();
    while (true) {
      const Tok k = peek().kind;
      if (k == Tok::star) {
        next();
        v = ring_.mul(v, unary());
      } else if (k == Tok::slash) {
        const std::size_t at = next().pos;
        const V d = unary();
        auto inv = ring_.inverse(d);
        if (!inv) lexer_.fail(ring_.as_scalar(d) ? "division by zero" : "divisor is not a unit", at);
        v = ring_.mul(v, *inv);
      } else if (starts_atom(k)) {
        v = ring_.mul(v, unary());
      } else {
        return v;
      }
    }
  }

  V unary() {
    if (peek().kind == Tok::minus) {
      next();
      return -unary();
    }
    if (peek().kind == Tok::plus) {
      next();
      return unary();
    }
    return power();
  }

  V power() {
    const std::size_t at = peek().pos;
    V base = atom();
    if (peek().kind != Tok::caret) return base;
    next();
    bool neg = false;
    if (peek().kind == Tok::minus) {
      next();
      neg = true;
    }
    if (peek().kind != Tok::integer) lexer_.fail("exponent must be an integer", peek().pos);
    const Token& e = next();
    if (e.value > 100000) lexer_.fail("exponent too large", e.pos);
    int ex = static_cast<int>(e.value);
    if (neg) {
      auto inv = ring_.inverse(base);
      if (!inv) lexer_.fail("negative power of an element that is not a unit", at);
      base = *inv;
    }
    if (auto s = ring_.as_scalar(base)) return ring_.scalar(s->pow(ex));
    V r = ring_.scalar(QScalar(1));
    for (int i = 0; i < ex; ++i) r = ring_.mul(r, base);
    return r;
  }

  V atom() {
    const Token& t = next();
    try {
      switch (t.kind) {
        case Tok::integer: return ring_.scalar(QScalar(t.value));
        case Tok::q: return ring_.scalar(QScalar::q());
        case Tok::lparen: {
          V v = sum();
          if (peek().kind != Tok::rparen) lexer_.fail("expected ')'", peek().pos);
          next();
          return v;
        }
        case Tok::x:
          if constexpr (requires { ring_.x(1, 1); })
            return ring_.x(t.ints[0], t.ints[1]);
          else
            lexer_.fail("generators x[i,j] are not available in this ring", t.pos);
        case Tok::letter:
          if constexpr (requires { ring_.letter(t.ints); })
            return ring_.letter(t.ints);
          else
            lexer_.fail("Pluecker letters are not available in this ring", t.pos);
        case Tok::u:
          if constexpr (requires { ring_.u(); })
            return ring_.u();
          else
            lexer_.fail("u is not available in this ring", t.pos);
        case Tok::y:
          if constexpr (requires { ring_.y(); })
            return ring_.y();
          else
            lexer_.fail("y is not available in this ring", t.pos);
        default: lexer_.fail("expected a value", t.pos);
      }
    } catch (const ShapeError& e) {
      lexer_.fail(e.what(), t.pos);
    }
  }

  const Ring& ring_;
  Lexer& lexer_;
  std::vector<Token> toks_;
  std::size_t p_ = 0;
};

template <typename Ring>
ExprValue run(const Ring& ring, std::string_view text, int n) {
  Lexer lexer(text, n);
  auto toks = lexer.run();
  return Parser<Ring>(ring, lexer, std::move(toks)).parse();
}

}  // namespace

ExprValue parse_expr(std::string_view text, const ParseContext& ctx) {
  switch (ctx.ring) {
    case RingKind::qm: {
      const AlgebraShape s{ctx.m, ctx.n};
      if (s.m < 1 || s.n < 1) throw ShapeError("matrix shape needs m, n >= 1");
      return run(QmRing{QMatrixAlgebra(s, ctx.relations)}, text, ctx.n);
    }
    case RingKind::grass: {
      const GrassShape s{ctx.m, ctx.n};
      s.validate();
      return run(GrassRing{s}, text, ctx.n);
    }
    case RingKind::t: return run(TRing{TAlgebra(GrassShape{ctx.m, ctx.n}, ctx.relations)}, text, ctx.n);
  }
  throw std::logic_error("unreachable");
}

std::string render(const ExprValue& v) {
  return std::visit([](const auto& x) { return x.to_string(); }, v);
}

}  // namespace qgrass
