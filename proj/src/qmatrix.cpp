#include "qgrass/qmatrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qgrass {

// ---------------------------------------------------------------- Monomial

int Monomial::degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

bool Monomial::is_one() const {
  return std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
}

bool WordLexLess::operator()(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.exps.size();
  for (std::size_t g = 0; g < n; ++g) {
    if (a.exps[g] == b.exps[g]) continue;
    // The words agree up to here; the one with more copies of letter g has
    // g at the first differing position, the other has a larger letter there
    // or has ended.
    const Monomial& more = a.exps[g] > b.exps[g] ? a : b;
    const Monomial& fewer = a.exps[g] > b.exps[g] ? b : a;
    const bool fewer_continues =
        std::any_of(fewer.exps.begin() + g + 1, fewer.exps.end(), [](auto e) { return e != 0; });
    const bool more_is_less = fewer_continues;
    return (&more == &a) == more_is_less;
  }
  return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exps) h = (h ^ e) * 1099511628211ull;
  return h;
}

int generator_offset(AlgebraShape shape, GenIndex g) {
  if (g.i < 1 || g.i > shape.m || g.j < 1 || g.j > shape.n) {
    std::ostringstream os;
    os << "generator x[" << g.i << ',' << g.j << "] outside shape (" << shape.m << ',' << shape.n << ')';
    throw ShapeError(os.str());
  }
  return (g.i - 1) * shape.n + (g.j - 1);
}

GenIndex generator_at(AlgebraShape shape, int offset) {
  return {offset / shape.n + 1, offset % shape.n + 1};
}

std::string render_monomial(const Monomial& m, AlgebraShape shape, char letter) {
  std::string out;
  for (std::size_t g = 0; g < m.exps.size(); ++g) {
    if (m.exps[g] == 0) continue;
    const GenIndex idx = generator_at(shape, static_cast<int>(g));
    if (!out.empty()) out += '*';
    out += letter;
    out += '[' + std::to_string(idx.i) + ',' + std::to_string(idx.j) + ']';
    if (m.exps[g] > 1) out += '^' + std::to_string(m.exps[g]);
  }
  return out;
}

// ---------------------------------------------------------------- NCPoly

NCPoly NCPoly::constant(AlgebraShape shape, const QScalar& c) {
  return monomial(shape, Monomial{std::vector<std::uint16_t>(shape.generator_count(), 0)}, c);
}

NCPoly NCPoly::generator(AlgebraShape shape, GenIndex g) {
  Monomial m{std::vector<std::uint16_t>(shape.generator_count(), 0)};
  m.exps[generator_offset(shape, g)] = 1;
  return monomial(shape, std::move(m));
}

NCPoly NCPoly::monomial(AlgebraShape shape, Monomial m, const QScalar& c) {
  NCPoly p(shape);
  p.add_term(m, c);
  return p;
}

void NCPoly::add_term(const Monomial& m, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NCPoly::check_shape(const NCPoly& b) const {
  if (!(shape_ == b.shape_)) throw ShapeError("NCPoly shape mismatch");
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& b) {
  check_shape(b);
  for (const auto& [m, c] : b.terms_) add_term(m, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& b) {
  check_shape(b);
  for (const auto& [m, c] : b.terms_) add_term(m, -c);
  return *this;
}

NCPoly operator*(const QScalar& c, const NCPoly& a) {
  NCPoly r(a.shape_);
  if (c.is_zero()) return r;
  for (const auto& [m, x] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), m, c * x);
  return r;
}

std::string NCPoly::to_string() const {
  std::vector<std::pair<QScalar, std::string>> parts;
  parts.reserve(terms_.size());
  for (const auto& [m, c] : terms_) parts.emplace_back(c, render_monomial(m, shape_));
  return render_linear_combination(parts);
}

// ---------------------------------------------------------------- relations

RelationConstants RelationConstants::mutated() {
  RelationConstants r;
  r.row = QScalar::q_pow(2);
  return r;
}

bool RelationConstants::is_standard() const {
  const RelationConstants s;
  return row == s.row && column == s.column && diagonal == s.diagonal;
}

// ---------------------------------------------------------------- algebra

struct QMatrixAlgebra::Memo {
  std::mutex mutex;
  std::unordered_map<Monomial, NCPoly, MonomialHash> products;  // key: exps + [g]
};

QMatrixAlgebra::QMatrixAlgebra(AlgebraShape shape, RelationConstants relations)
    : shape_(shape), relations_(std::move(relations)), memo_(std::make_shared<Memo>()) {
  if (shape.m < 1 || shape.n < 1) throw ShapeError("quantum matrix shape needs m, n >= 1");
  const int count = shape.generator_count();
  rules_.resize(static_cast<std::size_t>(count) * count);
  for (int a = 0; a < count; ++a)
    for (int b = 0; b < a; ++b) rules_[a * count + b] = swap_rule(a, b);
}

std::vector<QMatrixAlgebra::Rewrite> QMatrixAlgebra::swap_rule(int a, int b) const {
  const auto [k, l] = generator_at(shape_, a);
  const auto [i, j] = generator_at(shape_, b);
  if (k == i) return {{relations_.row.inverse(), b, a}};      // x_il x_ij = row^-1 x_ij x_il
  if (l == j) return {{relations_.column.inverse(), b, a}};   // x_kj x_ij = column^-1 x_ij x_kj
  if (l < j) return {{QScalar(1), b, a}};                     // antidiagonal pairs commute
  // x_kl x_ij = x_ij x_kl - diagonal * x_il x_kj. The new pair is ordered and
  // has strictly fewer column inversions than (x_kl, x_ij), so the rewrite
  // system terminates.
  return {{QScalar(1), b, a},
          {-relations_.diagonal, generator_offset(shape_, {i, l}), generator_offset(shape_, {k, j})}};
}

void QMatrixAlgebra::check_word(std::span<const GenIndex> word) const {
  for (const auto& g : word) generator_offset(shape_, g);
}

NCPoly QMatrixAlgebra::word_normal_form(std::span<const GenIndex> word) const {
  check_word(word);
  const int count = shape_.generator_count();
  struct Pending {
    QScalar coeff;
    std::vector<int> letters;
  };
  std::vector<Pending> stack;
  std::vector<int> letters;
  letters.reserve(word.size());
  for (const auto& g : word) letters.push_back(generator_offset(shape_, g));
  stack.push_back({QScalar(1), std::move(letters)});

  NCPoly result(shape_);
  while (!stack.empty()) {
    Pending item = std::move(stack.back());
    stack.pop_back();
    auto& w = item.letters;
    std::size_t pos = 0;
    while (pos + 1 < w.size() && w[pos] <= w[pos + 1]) ++pos;
    if (pos + 1 >= w.size()) {
      Monomial m{std::vector<std::uint16_t>(count, 0)};
      for (int g : w) ++m.exps[g];
      result.add_term(m, item.coeff);
      continue;
    }
    for (const auto& r : rules_[w[pos] * count + w[pos + 1]]) {
      Pending next{item.coeff * r.coeff, w};
      next.letters[pos] = r.left;
      next.letters[pos + 1] = r.right;
      stack.push_back(std::move(next));
    }
  }
  return result;
}

NCPoly QMatrixAlgebra::mul_monomial_generator(const Monomial& m, int g) const {
  const int count = shape_.generator_count();
  int last = -1;
  for (int t = count - 1; t >= 0; --t)
    if (m.exps[t] != 0) {
      last = t;
      break;
    }
  if (last <= g) {
    Monomial r = m;
    ++r.exps[g];
    return NCPoly::monomial(shape_, std::move(r));
  }

  Monomial key = m;
  key.exps.push_back(static_cast<std::uint16_t>(g));
  {
    std::lock_guard lock(memo_->mutex);
    if (auto it = memo_->products.find(key); it != memo_->products.end()) return it->second;
  }

  // m = m' x_last and x_last x_g is rewritten into ordered pairs.
  Monomial prefix = m;
  --prefix.exps[last];
  NCPoly result(shape_);
  for (const auto& rule : rules_[last * count + g]) {
    const NCPoly left = mul_monomial_generator(prefix, rule.left);
    for (const auto& [mon, c] : left.terms()) {
      const QScalar factor = rule.coeff * c;
      const NCPoly right = mul_monomial_generator(mon, rule.right);
      for (const auto& [mon2, c2] : right.terms()) result.add_term(mon2, factor * c2);
    }
  }

  std::lock_guard lock(memo_->mutex);
  memo_->products.emplace(std::move(key), result);
  return result;
}

NCPoly QMatrixAlgebra::mul(const NCPoly& a, const NCPoly& b) const {
  if (!(a.shape() == shape_) || !(b.shape() == shape_)) throw ShapeError("nc_mul: shape mismatch");
  NCPoly result(shape_);
  for (const auto& [mb, cb] : b.terms()) {
    NCPoly cur = a;
    for (std::size_t g = 0; g < mb.exps.size(); ++g) {
      for (int rep = 0; rep < mb.exps[g]; ++rep) {
        NCPoly next(shape_);
        for (const auto& [ma, ca] : cur.terms()) {
          const NCPoly step = mul_monomial_generator(ma, static_cast<int>(g));
          for (const auto& [mp, cp] : step.terms()) next.add_term(mp, ca * cp);
        }
        cur = std::move(next);
      }
    }
    result += cb * cur;
  }
  return result;
}

NCPoly QMatrixAlgebra::pow(const NCPoly& a, int e) const {
  if (e < 0) throw std::invalid_argument("negative power in O_q(M(m,n))");
  NCPoly r = one();
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

int permutation_length(std::span<const int> perm) {
  int inv = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inv;
  return inv;
}

NCPoly QMatrixAlgebra::quantum_determinant() const {
  if (shape_.m != shape_.n) throw ShapeError("quantum determinant needs a square shape");
  std::vector<int> all(shape_.n);
  std::iota(all.begin(), all.end(), 1);
  return quantum_minor(all, all);
}

NCPoly QMatrixAlgebra::quantum_minor(std::span<const int> rows, std::span<const int> cols) const {
  if (rows.size() != cols.size() || rows.empty()) throw ShapeError("quantum minor needs |I| == |J| >= 1");
  auto check = [](std::span<const int> s, int bound, const char* what) {
    for (std::size_t a = 0; a < s.size(); ++a) {
      if (s[a] < 1 || s[a] > bound) throw ShapeError(std::string("quantum minor ") + what + " index out of bounds");
      if (a > 0 && s[a - 1] >= s[a]) throw ShapeError(std::string("quantum minor ") + what + " not increasing");
    }
  };
  check(rows, shape_.m, "row");
  check(cols, shape_.n, "column");

  const int t = static_cast<int>(rows.size());
  std::vector<int> perm(t);
  std::iota(perm.begin(), perm.end(), 0);
  const QScalar minus_q = -QScalar::q();
  NCPoly result(shape_);
  std::vector<GenIndex> word(t);
  do {
    for (int a = 0; a < t; ++a) word[a] = {rows[a], cols[perm[a]]};
    result += minus_q.pow(permutation_length(perm)) * word_normal_form(word);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

NCPoly nc_mul(const NCPoly& a, const NCPoly& b, const QMatrixAlgebra& algebra) { return algebra.mul(a, b); }

NCPoly transpose_map(const NCPoly& a, const QMatrixAlgebra& target) {
  const AlgebraShape src = a.shape();
  if (!(target.shape() == AlgebraShape{src.n, src.m})) throw ShapeError("transpose_map: target shape mismatch");
  NCPoly result(target.shape());
  std::vector<GenIndex> word;
  for (const auto& [m, c] : a.terms()) {
    word.clear();
    for (std::size_t g = 0; g < m.exps.size(); ++g) {
      const GenIndex idx = generator_at(src, static_cast<int>(g));
      for (int rep = 0; rep < m.exps[g]; ++rep) word.push_back({idx.j, idx.i});
    }
    result += c * target.word_normal_form(word);
  }
  return result;
}

}  // namespace qgrass
