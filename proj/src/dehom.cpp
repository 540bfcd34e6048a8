#include "qgrass/dehom.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgrass {

namespace {

Monomial unit_monomial(AlgebraShape s) { return Monomial{std::vector<std::uint16_t>(s.generator_count(), 0)}; }

void check_increasing(const std::vector<int>& v, int hi, const char* what) {
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (v[a] < 1 || v[a] > hi) throw ShapeError(std::string("minor ") + what + " index out of range");
    if (a > 0 && v[a] <= v[a - 1]) throw ShapeError(std::string("minor ") + what + " indices must increase");
  }
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t a = 0; a < v.size(); ++a) s += (a ? "," : "") + std::to_string(v[a]);
  return s;
}

}  // namespace

// ---------------------------------------------------------------- TElement

bool TKeyLess::operator()(const TKey& a, const TKey& b) const {
  const WordLexLess less;
  if (less(a.mono, b.mono)) return true;
  if (less(b.mono, a.mono)) return false;
  return a.ypow < b.ypow;
}

TElement TElement::from_poly(const NCPoly& poly, int ypow) {
  TElement r(poly.shape());
  for (const auto& [m, c] : poly.terms()) r.terms_.emplace(TKey{m, ypow}, c);
  return r;
}

TElement TElement::term(AlgebraShape shape, Monomial mono, int ypow, const QScalar& c) {
  if (static_cast<int>(mono.exps.size()) != shape.generator_count()) throw ShapeError("monomial of the wrong length");
  TElement r(shape);
  r.add_term({std::move(mono), ypow}, c);
  return r;
}

void TElement::add_term(const TKey& key, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TElement TElement::operator-() const {
  TElement r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

TElement& TElement::operator+=(const TElement& b) {
  if (!(shape_ == b.shape_)) throw ShapeError("T elements of different shapes");
  for (const auto& [k, c] : b.terms_) add_term(k, c);
  return *this;
}

TElement operator*(const QScalar& c, const TElement& a) {
  TElement r(a.shape_);
  if (c.is_zero()) return r;
  r.terms_ = a.terms_;
  for (auto& [k, v] : r.terms_) v = c * v;
  return r;
}

std::string TElement::to_string() const {
  std::vector<std::pair<QScalar, std::string>> parts;
  for (const auto& [key, c] : terms_) {
    std::string basis = render_monomial(key.mono, shape_);
    if (key.ypow != 0) {
      if (!basis.empty()) basis += '*';
      basis += key.ypow == 1 ? "y" : "y^" + std::to_string(key.ypow);
    }
    parts.emplace_back(c, basis);
  }
  return render_linear_combination(parts);
}

// ---------------------------------------------------------------- index translation

void MinorIndex::validate(int k, int p) const {
  if (rows.size() != cols.size()) throw ShapeError("minor " + to_string() + " has |I| != |J|");
  check_increasing(rows, k, "row");
  check_increasing(cols, p, "column");
}

std::string MinorIndex::to_string() const { return "[" + join(rows) + "|" + join(cols) + "]"; }

PluckerFactor minor_to_plucker(const MinorIndex& mi, GrassShape shape) {
  const int k = shape.k;
  mi.validate(k, shape.p());
  std::vector<int> l;
  for (int a = 1; a <= k; ++a)
    if (std::find(mi.rows.begin(), mi.rows.end(), k + 1 - a) == mi.rows.end()) l.push_back(a);
  for (int j : mi.cols) l.push_back(k + j);
  return {PluckerIndex(std::move(l), shape), -1};
}

MinorFactor plucker_to_minor(const PluckerIndex& l, GrassShape shape) {
  const int k = shape.k;
  MinorIndex mi;
  for (int a = 1; a <= k; ++a)
    if (!l.contains(a)) mi.rows.push_back(k + 1 - a);
  std::sort(mi.rows.begin(), mi.rows.end());
  for (int c : l.cols())
    if (c > k) mi.cols.push_back(c - k);
  return {std::move(mi), 1};
}

bool belongs_row(int i, const PluckerIndex& l, GrassShape shape) {
  if (i < 1 || i > shape.k) throw ShapeError("belongs_row: row out of range");
  return !l.contains(shape.k + 1 - i);
}

bool belongs_col(int j, const PluckerIndex& l, GrassShape shape) {
  if (j < 1 || j > shape.p()) throw ShapeError("belongs_col: column out of range");
  return l.contains(j + shape.k);
}

// ---------------------------------------------------------------- T

namespace {
AlgebraShape base_shape(GrassShape s) {
  s.validate();
  if (s.p() < 1) throw ShapeError("dehomogenisation needs n > k, got " + s.to_string());
  return {s.k, s.p()};
}
}  // namespace

TAlgebra::TAlgebra(GrassShape shape, RelationConstants relations)
    : shape_(shape), base_(base_shape(shape), std::move(relations)) {}

TElement TAlgebra::one() const { return TElement::from_poly(base_.one()); }
TElement TAlgebra::x(int i, int j) const { return TElement::from_poly(base_.gen(i, j)); }
TElement TAlgebra::y(int e) const { return TElement::term(base_.shape(), unit_monomial(base_.shape()), e); }

TElement TAlgebra::minor(const MinorIndex& mi) const {
  mi.validate(shape_.k, shape_.p());
  if (mi.rows.empty()) return one();
  return TElement::from_poly(base_.quantum_minor(mi.rows, mi.cols));
}

TElement TAlgebra::mul(const TElement& a, const TElement& b) const {
  TElement r(base_.shape());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      // y^e m = q^(e deg m) m y^e
      const QScalar twist = QScalar::q_pow(ka.ypow * kb.mono.degree());
      const NCPoly prod = base_.mul(NCPoly::monomial(base_.shape(), ka.mono), NCPoly::monomial(base_.shape(), kb.mono));
      const QScalar c = ca * cb * twist;
      for (const auto& [m, v] : prod.terms()) r.add_term({m, ka.ypow + kb.ypow}, c * v);
    }
  return r;
}

TElement dehom_forward(const LocalizedElement& a, const TAlgebra& t) {
  if (!(a.shape() == t.shape())) throw ShapeError("dehom_forward: shape mismatch");
  TElement r(t.base().shape());
  for (const auto& term : a.terms()) {
    TElement img = t.one();
    for (const auto& letter : term.word) {
      const MinorFactor f = plucker_to_minor(letter, t.shape());
      img = t.mul(img, t.mul(t.minor(f.minor), t.y(f.ypow)));
    }
    r += term.coeff * t.mul(img, t.y(term.upow));
  }
  return r;
}

LocalizedElement dehom_backward(const TElement& a, GrassShape shape) {
  const AlgebraShape base = base_shape(shape);
  if (!(a.shape() == base)) throw ShapeError("dehom_backward: shape mismatch");
  LocalizedElement r(shape);
  for (const auto& [key, c] : a.terms()) {
    LocalizedElement img = LocalizedElement::scalar(shape, c);
    for (int g = 0; g < base.generator_count(); ++g) {
      if (key.mono.exps[g] == 0) continue;
      const GenIndex x = generator_at(base, g);
      const PluckerFactor f = minor_to_plucker({{x.i}, {x.j}}, shape);
      const LocalizedElement letter = LocalizedElement::term(shape, QScalar(1), {f.index}, f.upow);
      for (int e = 0; e < key.mono.exps[g]; ++e) img = loc_mul(img, letter);
    }
    r = r + loc_mul(img, LocalizedElement::u_power(shape, key.ypow));
  }
  return r;
}

// ---------------------------------------------------------------- gradings

int t_grading_y(const TKey& key) { return key.mono.degree(); }

int t_grading_minor(const TKey& key, GrassShape shape) {
  if (2 * shape.k > shape.n) throw ShapeError("minor grading needs 2k <= n, got " + shape.to_string());
  const AlgebraShape base = base_shape(shape);
  const int first_col = shape.p() + 1 - shape.k;
  int w = 0;
  for (int g = 0; g < base.generator_count(); ++g)
    if (generator_at(base, g).j < first_col) w += key.mono.exps[g];
  return w + shape.k * key.ypow;
}

namespace {
template <typename Weight>
std::map<int, TElement> components(const TElement& a, Weight weight) {
  std::map<int, TElement> out;
  for (const auto& [key, c] : a.terms()) {
    auto [it, inserted] = out.try_emplace(weight(key), a.shape());
    it->second.add_term(key, c);
  }
  return out;
}
}  // namespace

std::map<int, TElement> y_components(const TElement& a) { return components(a, t_grading_y); }

std::map<int, TElement> minor_components(const TElement& a, GrassShape shape) {
  return components(a, [&](const TKey& key) { return t_grading_minor(key, shape); });
}

bool membership_filter(const TElement& a, GrassShape shape) {
  if (shape.k < 2) throw ShapeError("membership_filter needs k >= 2");
  if (a.is_zero()) return true;
  const auto yc = y_components(a);
  if (yc.size() != 1 || yc.begin()->first != 1) return false;
  const auto mc = minor_components(a, shape);
  if (mc.size() != 1 || (mc.begin()->first != 0 && mc.begin()->first != 1)) return false;
  for (const auto& [key, c] : a.terms())
    if (key.ypow != 0) throw std::logic_error("membership_filter: filtered element has a y-power");
  return true;
}

}  // namespace qgrass
