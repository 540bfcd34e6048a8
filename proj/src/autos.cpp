#include "qgrass/autos.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <random>
#include <set>

namespace qgrass {

namespace {

void check_entries(const std::vector<QScalar>& v, std::size_t len, const char* what) {
  if (v.size() != len)
    throw ShapeError(std::string(what) + " needs " + std::to_string(len) + " entries, got " + std::to_string(v.size()));
  for (const auto& x : v)
    if (x.is_zero()) throw ShapeError(std::string(what) + " has a zero entry");
}

QScalar product(const std::vector<QScalar>& v, const std::vector<int>& one_based) {
  QScalar r(1);
  for (int i : one_based) r *= v[i - 1];
  return r;
}

// Applies a letter scaling c([L]) and [u] -> c_u [u] to every term.
LocalizedElement scale_letters(const LocalizedElement& a, const std::function<QScalar(const PluckerIndex&)>& c,
                               const QScalar& c_u) {
  LocalizedElement r(a.shape());
  for (const auto& t : a.terms()) {
    QScalar s = t.coeff * c_u.pow(t.upow);
    for (const auto& l : t.word) s *= c(l);
    r = r + LocalizedElement::term(a.shape(), s, t.word, t.upow);
  }
  return r;
}

LocalizedElement map_letters(const LocalizedElement& a, GrassShape target,
                             const std::function<PluckerIndex(const PluckerIndex&)>& f) {
  LocalizedElement r(target);
  for (const auto& t : a.terms()) {
    PluckerWord w;
    w.reserve(t.word.size());
    for (const auto& l : t.word) w.push_back(f(l));
    r = r + LocalizedElement::term(target, t.coeff, std::move(w), t.upow);
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------- tori

H0Element H0Element::identity(GrassShape shape) { return {std::vector<QScalar>(shape.n, QScalar(1))}; }

void H0Element::validate(GrassShape shape) const { check_entries(a, shape.n, "H0 element"); }

H1Element H1Element::identity(GrassShape shape) {
  return {QScalar(1), std::vector<QScalar>(shape.k, QScalar(1)), std::vector<QScalar>(shape.p(), QScalar(1))};
}

void H1Element::validate(GrassShape shape) const {
  if (alpha0.is_zero()) throw ShapeError("H1 element has alpha0 = 0");
  check_entries(alpha, shape.k, "H1 alpha");
  check_entries(beta, shape.p(), "H1 beta");
}

std::string H1Element::to_string() const {
  auto list = [](const std::vector<QScalar>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
    return s;
  };
  return "(" + alpha0.to_string() + "; " + list(alpha) + "; " + list(beta) + ")";
}

H1Element h1_compose(const H1Element& f, const H1Element& g) {
  if (f.alpha.size() != g.alpha.size() || f.beta.size() != g.beta.size())
    throw ShapeError("h1_compose: length mismatch");
  H1Element r = f;
  r.alpha0 *= g.alpha0;
  for (std::size_t i = 0; i < r.alpha.size(); ++i) r.alpha[i] *= g.alpha[i];
  for (std::size_t j = 0; j < r.beta.size(); ++j) r.beta[j] *= g.beta[j];
  return r;
}

H1Element h1_inverse(const H1Element& f) {
  H1Element r = f;
  r.alpha0 = r.alpha0.inverse();
  for (auto& x : r.alpha) x = x.inverse();
  for (auto& x : r.beta) x = x.inverse();
  return r;
}

H1Element h1_kernel_element(GrassShape shape, const QScalar& lambda) {
  return {QScalar(1), std::vector<QScalar>(shape.k, lambda), std::vector<QScalar>(shape.p(), lambda.inverse())};
}

AutoSpec AutoSpec::identity(GrassShape shape) { return {HCanonical{H1Element::identity(shape)}, false}; }

void AutoSpec::validate(GrassShape shape) const {
  torus.value.validate(shape);
  if (!torus.value.beta.empty() && !torus.value.beta.back().is_one())
    throw ShapeError("automorphism torus part is not canonical (beta_p != 1)");
  if (diagram && shape.n != 2 * shape.k)
    throw ShapeError("the diagram automorphism needs n = 2k, got " + shape.to_string());
}

LocalizedElement h0_apply(const H0Element& g, const LocalizedElement& a) {
  const GrassShape s = a.shape();
  g.validate(s);
  return scale_letters(a, [&](const PluckerIndex& l) { return product(g.a, l.cols()); }, product(g.a, u_index(s).cols()));
}

LocalizedElement h1_apply(const H1Element& f, const LocalizedElement& a) {
  const GrassShape s = a.shape();
  f.validate(s);
  auto letter = [&](const PluckerIndex& l) {
    const MinorFactor m = plucker_to_minor(l, s);
    return f.alpha0 * product(f.alpha, m.minor.rows) * product(f.beta, m.minor.cols);
  };
  return scale_letters(a, letter, f.alpha0);
}

TElement h1_apply(const H1Element& f, const TElement& t) {
  const AlgebraShape b = t.shape();
  if (static_cast<int>(f.alpha.size()) != b.m || static_cast<int>(f.beta.size()) != b.n)
    throw ShapeError("h1_apply: torus element does not match the algebra");
  TElement r(b);
  for (const auto& [key, c] : t.terms()) {
    QScalar s = c * f.alpha0.pow(key.ypow);
    for (int g = 0; g < b.generator_count(); ++g) {
      if (key.mono.exps[g] == 0) continue;
      const GenIndex x = generator_at(b, g);
      s *= (f.alpha[x.i - 1] * f.beta[x.j - 1]).pow(key.mono.exps[g]);
    }
    r.add_term(key, s);
  }
  return r;
}

H1Element h0_to_h1(const H0Element& g, GrassShape shape) {
  g.validate(shape);
  H1Element f;
  f.alpha0 = QScalar(1);
  for (int i = 0; i < shape.k; ++i) f.alpha0 *= g.a[i];
  for (int i = shape.k; i >= 1; --i) f.alpha.push_back(g.a[i - 1].inverse());
  f.beta.assign(g.a.begin() + shape.k, g.a.end());
  return f;
}

HCanonical h1_canonicalize(const H1Element& f) {
  if (f.beta.empty()) return {f};
  const QScalar bp = f.beta.back();
  H1Element r = f;
  for (auto& x : r.alpha) x *= bp;
  for (auto& x : r.beta) x /= bp;
  return {r};
}

H0Element h1_to_h0_with_roots(const H1Element& f, const QScalar& root0, const std::vector<QScalar>& alpha_roots,
                              GrassShape shape) {
  f.validate(shape);
  const int k = shape.k;
  if (static_cast<int>(alpha_roots.size()) != k) throw std::invalid_argument("need one root per alpha entry");
  if (root0.pow(k) != f.alpha0) throw std::invalid_argument("root0^k != alpha0");
  H0Element g = H0Element::identity(shape);
  for (int j = 1; j <= shape.p(); ++j) g.a[j + k - 1] *= f.beta[j - 1];
  for (int i = 1; i <= k; ++i) {
    const QScalar& b = alpha_roots[i - 1];
    if (b.is_zero() || b.pow(k) != f.alpha[i - 1]) throw std::invalid_argument("alpha root does not match");
    for (int c = 1; c <= shape.n; ++c) g.a[c - 1] *= c == k + 1 - i ? b.pow(-(k - 1)) : b;
  }
  for (auto& x : g.a) x *= root0;
  return g;
}

// ---------------------------------------------------------------- realize_in_h0

namespace {

using IntMatrix = std::vector<std::vector<BigInt>>;

struct IntSolve {
  std::optional<std::vector<BigInt>> x;
  bool rational_feasible = false;
};

// Solves M x = b over Z by diagonalising M with unimodular row and column
// operations.
IntSolve solve_over_z(IntMatrix m, std::vector<BigInt> b) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  IntMatrix v(cols, std::vector<BigInt>(cols, 0));
  for (std::size_t j = 0; j < cols; ++j) v[j][j] = 1;

  auto swap_cols = [&](std::size_t a, std::size_t c) {
    for (auto& row : m) std::swap(row[a], row[c]);
    for (auto& row : v) std::swap(row[a], row[c]);
  };
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    while (true) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) pr = i, pc = j;
      if (pr == rows) break;
      std::swap(m[t], m[pr]);
      std::swap(b[t], b[pr]);
      swap_cols(t, pc);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const BigInt f = m[i][t] / m[t][t];
        if (f != 0) {
          for (std::size_t j = t; j < cols; ++j) m[i][j] -= f * m[t][j];
          b[i] -= f * b[t];
        }
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const BigInt f = m[t][j] / m[t][t];
        if (f != 0) {
          for (std::size_t i = t; i < rows; ++i) m[i][j] -= f * m[i][t];
          for (std::size_t i = 0; i < cols; ++i) v[i][j] -= f * v[i][t];
        }
        if (m[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (t >= rows || m[t][t] == 0) break;
  }
  IntSolve out;
  const std::size_t rank = t;
  for (std::size_t i = rank; i < rows; ++i)
    if (b[i] != 0) return out;
  out.rational_feasible = true;
  std::vector<BigInt> z(cols, 0);
  for (std::size_t i = 0; i < rank; ++i) {
    if (b[i] % m[i][i] != 0) return out;
    z[i] = b[i] / m[i][i];
  }
  std::vector<BigInt> x(cols, 0);
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = 0; j < cols; ++j) x[i] += v[i][j] * z[j];
  out.x = std::move(x);
  return out;
}

std::optional<std::vector<int>> solve_over_gf2(std::vector<std::vector<int>> m, std::vector<int> b) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    std::swap(b[p], b[r]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && m[i][c]) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
        b[i] ^= b[r];
      }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i]) return std::nullopt;
  std::vector<int> x(cols, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

void factor_into(BigInt v, int sign, std::map<BigInt, BigInt>& exps) {
  if (v < 0) v = -v;
  for (BigInt p = 2; p <= 1000000 && p * p <= v; ++p) {
    while (v % p == 0) {
      exps[p] += sign;
      v /= p;
    }
  }
  if (v == 1) return;
  if (!boost::multiprecision::miller_rabin_test(v, 25))
    throw UnsupportedScope("realize_in_h0: cannot factor target component " + v.str());
  exps[v] += sign;
}

}  // namespace

RealizeResult realize_in_h0(const std::map<PluckerIndex, QScalar>& target, GrassShape shape) {
  const auto coords = all_plucker(shape);
  for (const auto& l : coords)
    if (!target.contains(l)) throw UnsupportedScope("realize_in_h0: no target for " + l.to_string());
  if (target.size() != coords.size()) throw UnsupportedScope("realize_in_h0: target for a non-coordinate");

  std::vector<std::map<BigInt, BigInt>> factored(coords.size());
  std::vector<int> signs(coords.size());
  std::set<BigInt> primes;
  for (std::size_t r = 0; r < coords.size(); ++r) {
    const QScalar& t = target.at(coords[r]);
    if (t.is_zero() || !t.is_rational())
      throw UnsupportedScope("realize_in_h0: target for " + coords[r].to_string() + " is not a nonzero rational");
    const BigInt num = t.num().lc(), den = t.den().lc();
    signs[r] = num < 0 ? 1 : 0;
    factor_into(num, 1, factored[r]);
    factor_into(den, -1, factored[r]);
    for (const auto& [p, e] : factored[r]) primes.insert(p);
  }

  const int n = shape.n;
  IntMatrix m(coords.size(), std::vector<BigInt>(n, 0));
  std::vector<std::vector<int>> m2(coords.size(), std::vector<int>(n, 0));
  for (std::size_t r = 0; r < coords.size(); ++r)
    for (int c : coords[r].cols()) m[r][c - 1] = 1, m2[r][c - 1] = 1;

  RealizeResult out;
  H0Element g = H0Element::identity(shape);
  for (const BigInt& p : primes) {
    std::vector<BigInt> b(coords.size(), 0);
    for (std::size_t r = 0; r < coords.size(); ++r)
      if (auto it = factored[r].find(p); it != factored[r].end()) b[r] = it->second;
    const IntSolve s = solve_over_z(m, b);
    if (!s.x) {
      out.obstruction = "prime " + p.str();
      out.rational_relaxation_feasible = s.rational_feasible;
      return out;
    }
    for (int i = 0; i < n; ++i) {
      const BigInt& e = (*s.x)[i];
      if (e == 0) continue;
      const QScalar pe = QScalar(BigInt(pow(p, static_cast<unsigned>(abs(e)))));
      g.a[i] *= e > 0 ? pe : pe.inverse();
    }
  }
  const auto sign = solve_over_gf2(m2, signs);
  if (!sign) {
    out.obstruction = "sign";
    out.rational_relaxation_feasible = true;
    return out;
  }
  for (int i = 0; i < n; ++i)
    if ((*sign)[i]) g.a[i] = -g.a[i];

  for (const auto& l : coords)
    if (product(g.a, l.cols()) != target.at(l))
      throw std::logic_error("realize_in_h0: witness fails substitution at " + l.to_string());
  out.witness = std::move(g);
  return out;
}

// ---------------------------------------------------------------- index maps

PluckerIndex w0_index(const PluckerIndex& l, GrassShape shape) {
  std::vector<int> c;
  for (int x : l.cols()) c.push_back(shape.n + 1 - x);
  return PluckerIndex(std::move(c), shape);
}

PluckerIndex kn_index(const PluckerIndex& l, GrassShape shape) {
  const GrassShape dual{shape.n - shape.k, shape.n};
  std::vector<int> c;
  for (int x = 1; x <= shape.n; ++x)
    if (!l.contains(x)) c.push_back(shape.n + 1 - x);
  return PluckerIndex(std::move(c), dual);
}

LocalizedElement diagram_tau(const LocalizedElement& a) {
  const GrassShape s = a.shape();
  if (s.n != 2 * s.k) throw ShapeError("diagram_tau needs n = 2k, got " + s.to_string());
  return map_letters(a, s, [&](const PluckerIndex& l) { return kn_index(l, s); });
}

TElement diagram_tau(const TElement& t, const TAlgebra& algebra) {
  const AlgebraShape b = algebra.base().shape();
  if (b.m != b.n) throw ShapeError("diagram_tau on T needs k = p");
  std::map<int, NCPoly> by_y;
  for (const auto& [key, c] : t.terms()) {
    auto [it, inserted] = by_y.try_emplace(key.ypow, b);
    it->second.add_term(key.mono, c);
  }
  TElement r(b);
  for (const auto& [e, poly] : by_y) r += TElement::from_poly(transpose_map(poly, algebra.base()), e);
  return r;
}

LocalizedElement kn_isomorphism(const LocalizedElement& a) {
  const GrassShape s = a.shape();
  const GrassShape dual{s.n - s.k, s.n};
  dual.validate();
  return map_letters(a, dual, [&](const PluckerIndex& l) { return kn_index(l, s); });
}

LocalizedElement theta_antiauto(const LocalizedElement& a) {
  const GrassShape s = a.shape();
  const PluckerIndex w = w_index(s);
  LocalizedElement r(s);
  for (const auto& t : a.terms()) {
    if (t.upow < 0) throw std::invalid_argument("theta_antiauto: [u] is not invertible in the image");
    PluckerWord img(t.upow, w);
    for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) img.push_back(w0_index(*it, s));
    r = r + LocalizedElement::term(s, t.coeff, std::move(img));
  }
  return r;
}

H1Element tau_conjugate(const H1Element& f) {
  if (f.alpha.size() != f.beta.size()) throw ShapeError("tau_conjugate needs k = p");
  return {f.alpha0, f.beta, f.alpha};
}

LocalizedElement auto_apply(const AutoSpec& spec, const LocalizedElement& a) {
  spec.validate(a.shape());
  LocalizedElement r = h1_apply(spec.torus.value, a);
  return spec.diagram ? diagram_tau(r) : r;
}

// ---------------------------------------------------------------- certification

CertReport certify_products(const Grassmannian& source, const Grassmannian& target, const ElementMap& map,
                            int degree, bool anti, int sample, unsigned seed) {
  const GrassShape s = source.shape();
  const auto& pi = source.coordinates();
  std::vector<PluckerWord> words;
  if (sample <= 0) {
    PluckerWord cur;
    std::function<void()> rec = [&] {
      if (static_cast<int>(cur.size()) == degree) {
        words.push_back(cur);
        return;
      }
      for (const auto& l : pi) {
        cur.push_back(l);
        rec();
        cur.pop_back();
      }
    };
    rec();
  } else {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pi.size() - 1);
    for (int t = 0; t < sample; ++t) {
      PluckerWord w;
      for (int l = 0; l < degree; ++l) w.push_back(pi[pick(rng)]);
      words.push_back(std::move(w));
    }
  }

  CertReport rep;
  for (const auto& w : words) {
    LocalizedElement straightened(s);
    for (const auto& [c, sw] : source.straighten(w, std::max(degree, default_max_straighten_degree())))
      straightened = straightened + LocalizedElement::term(s, c, sw);
    const LocalizedElement lhs = map(straightened);
    LocalizedElement rhs = LocalizedElement::scalar(target.shape(), QScalar(1));
    for (std::size_t i = 0; i < w.size(); ++i) {
      const LocalizedElement img = map(LocalizedElement::letter(s, w[anti ? w.size() - 1 - i : i]));
      rhs = loc_mul(rhs, img);
    }
    ++rep.checked;
    if (!target.equal(lhs, rhs)) {
      rep.ok = false;
      rep.failure = to_string(w);
      return rep;
    }
  }
  return rep;
}

AutoSpec certified(const AutoSpec& spec, const Grassmannian& g) {
  spec.validate(g.shape());
  const CertReport rep = certify_products(g, g, [&](const LocalizedElement& a) { return auto_apply(spec, a); }, 2);
  if (!rep.ok) throw CertificationError("automorphism fails on the product " + rep.failure);
  return spec;
}

std::optional<QScalar> scalar_on(const ElementMap& map, const PluckerIndex& letter, GrassShape shape) {
  const LocalizedElement base = LocalizedElement::letter(shape, letter);
  const LocalizedElement img = map(base);
  if (img.terms().size() != 1) return std::nullopt;
  const QScalar c = img.terms().front().coeff;
  if (!(c * base == img)) return std::nullopt;
  return c;
}

}  // namespace qgrass
