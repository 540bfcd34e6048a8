#include "qgrass/grassmann.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

namespace qgrass {

// ---------------------------------------------------------------- shapes and indices

void GrassShape::validate() const {
  if (k < 1 || n < k) throw ShapeError("grassmannian shape needs 1 <= k <= n, got " + to_string());
}

std::string GrassShape::to_string() const {
  return "G(" + std::to_string(k) + "," + std::to_string(n) + ")";
}

PluckerIndex::PluckerIndex(std::vector<int> cols, GrassShape shape) : cols_(std::move(cols)) {
  std::sort(cols_.begin(), cols_.end());
  if (static_cast<int>(cols_.size()) != shape.k)
    throw ShapeError("Pluecker index needs exactly " + std::to_string(shape.k) + " entries");
  for (std::size_t a = 0; a < cols_.size(); ++a) {
    if (cols_[a] < 1 || cols_[a] > shape.n) throw ShapeError("Pluecker index entry out of range for " + shape.to_string());
    if (a > 0 && cols_[a] == cols_[a - 1]) throw ShapeError("Pluecker index has a repeated entry");
  }
}

bool PluckerIndex::contains(int c) const { return std::binary_search(cols_.begin(), cols_.end(), c); }

std::string PluckerIndex::to_string() const {
  std::string s = "[";
  for (std::size_t a = 0; a < cols_.size(); ++a) {
    if (a > 0) s += ',';
    s += std::to_string(cols_[a]);
  }
  return s + "]";
}

std::string to_string(const PluckerWord& w) {
  std::string s;
  for (const auto& l : w) s += l.to_string();
  return s;
}

PluckerIndex u_index(GrassShape shape) {
  std::vector<int> c(shape.k);
  std::iota(c.begin(), c.end(), 1);
  return PluckerIndex(std::move(c), shape);
}

PluckerIndex w_index(GrassShape shape) {
  std::vector<int> c(shape.k);
  std::iota(c.begin(), c.end(), shape.n - shape.k + 1);
  return PluckerIndex(std::move(c), shape);
}

std::vector<PluckerIndex> all_plucker(GrassShape shape) {
  shape.validate();
  std::vector<PluckerIndex> out;
  std::vector<int> cur(shape.k);
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.emplace_back(cur, shape);
    int pos = shape.k - 1;
    while (pos >= 0 && cur[pos] == shape.n - shape.k + pos + 1) --pos;
    if (pos < 0) break;
    ++cur[pos];
    for (int a = pos + 1; a < shape.k; ++a) cur[a] = cur[a - 1] + 1;
  }
  return out;
}

int d_value(const PluckerIndex& index, GrassShape shape) {
  return static_cast<int>(std::count_if(index.cols().begin(), index.cols().end(), [&](int c) { return c > shape.k; }));
}

int d_value(const PluckerWord& word, GrassShape shape) {
  int d = 0;
  for (const auto& l : word) d += d_value(l, shape);
  return d;
}

bool plucker_leq(const PluckerIndex& a, const PluckerIndex& b) {
  if (a.size() != b.size()) throw ShapeError("plucker_leq: indices of different sizes");
  for (int l = 0; l < a.size(); ++l)
    if (a.cols()[l] > b.cols()[l]) return false;
  return true;
}

bool is_standard(const PluckerWord& word) {
  for (std::size_t a = 1; a < word.size(); ++a)
    if (!plucker_leq(word[a - 1], word[a])) return false;
  return true;
}

std::vector<PluckerWord> enumerate_standard(GrassShape shape, int degree) {
  if (degree < 0) throw std::invalid_argument("enumerate_standard: negative degree");
  const auto coords = all_plucker(shape);
  std::vector<PluckerWord> out;
  PluckerWord cur;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == degree) {
      out.push_back(cur);
      return;
    }
    for (std::size_t c = from; c < coords.size(); ++c) {
      if (!cur.empty() && !plucker_leq(cur.back(), coords[c])) continue;
      cur.push_back(coords[c]);
      extend(c);
      cur.pop_back();
    }
  };
  extend(0);
  return out;
}

// ---------------------------------------------------------------- localized elements

LocalizedElement LocalizedElement::term(GrassShape shape, const QScalar& coeff, PluckerWord word, int upow) {
  LocalizedElement e(shape);
  e.add_raw(coeff, std::move(word), upow);
  e.canonicalize();
  return e;
}

LocalizedElement LocalizedElement::letter(GrassShape shape, const PluckerIndex& index) {
  return term(shape, QScalar(1), {index});
}

LocalizedElement LocalizedElement::scalar(GrassShape shape, const QScalar& c) { return term(shape, c, {}); }

LocalizedElement LocalizedElement::u_power(GrassShape shape, int e) { return term(shape, QScalar(1), {}, e); }

void LocalizedElement::add_raw(const QScalar& coeff, PluckerWord word, int upow) {
  if (coeff.is_zero()) return;
  const PluckerIndex u = u_index(shape_);
  // Walk right to left; each [u] passes the letters to its right:
  // [u][I] = q^d(I) [I][u].
  int exponent = 0, d_right = 0, u_count = 0;
  PluckerWord kept;
  kept.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (it->size() != shape_.k) throw ShapeError("Pluecker letter of the wrong size for " + shape_.to_string());
    if (*it == u) {
      exponent += d_right;
      ++u_count;
    } else {
      d_right += d_value(*it, shape_);
      kept.push_back(*it);
    }
  }
  std::reverse(kept.begin(), kept.end());
  terms_.push_back({coeff * QScalar::q_pow(exponent), std::move(kept), upow + u_count});
}

void LocalizedElement::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const LocalizedTerm& a, const LocalizedTerm& b) {
    if (a.word != b.word) return a.word < b.word;
    return a.upow < b.upow;
  });
  std::vector<LocalizedTerm> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().word == t.word && merged.back().upow == t.upow) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const LocalizedTerm& t) { return t.coeff.is_zero(); });
  terms_ = std::move(merged);
}

int LocalizedElement::min_upow() const {
  int m = 0;
  for (const auto& t : terms_) m = std::min(m, t.upow);
  return m;
}

LocalizedElement LocalizedElement::operator-() const {
  LocalizedElement r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b) {
  if (!(a.shape_ == b.shape_)) throw ShapeError("localized elements of different shapes");
  LocalizedElement r = a;
  r.terms_.insert(r.terms_.end(), b.terms_.begin(), b.terms_.end());
  r.canonicalize();
  return r;
}

LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b) { return a + (-b); }

LocalizedElement operator*(const QScalar& c, const LocalizedElement& a) {
  LocalizedElement r(a.shape_);
  if (c.is_zero()) return r;
  r.terms_ = a.terms_;
  for (auto& t : r.terms_) t.coeff = c * t.coeff;
  return r;
}

bool operator==(const LocalizedElement& a, const LocalizedElement& b) {
  if (!(a.shape_ == b.shape_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto &x = a.terms_[i], &y = b.terms_[i];
    if (x.upow != y.upow || x.word != y.word || !(x.coeff == y.coeff)) return false;
  }
  return true;
}

std::string LocalizedElement::to_string() const {
  std::vector<std::pair<QScalar, std::string>> parts;
  for (const auto& t : terms_) {
    std::string basis = qgrass::to_string(t.word);
    if (t.upow != 0) {
      if (!basis.empty()) basis += " * ";
      basis += t.upow == 1 ? "u" : "u^" + std::to_string(t.upow);
    }
    parts.emplace_back(t.coeff, basis);
  }
  return render_linear_combination(parts, " * ");
}

LocalizedElement loc_mul(const LocalizedElement& a, const LocalizedElement& b) {
  if (!(a.shape() == b.shape())) throw ShapeError("loc_mul: shape mismatch");
  const GrassShape shape = a.shape();
  LocalizedElement r(shape);
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      // [u]^e1 passes the letters of the second word: q^(e1 * d(w2)).
      PluckerWord w = x.word;
      w.insert(w.end(), y.word.begin(), y.word.end());
      r = r + LocalizedElement::term(shape, x.coeff * y.coeff * QScalar::q_pow(x.upow * d_value(y.word, shape)),
                                     std::move(w), x.upow + y.upow);
    }
  }
  return r;
}

std::string to_string(const StandardExpansion& e) {
  std::vector<std::pair<QScalar, std::string>> parts;
  for (const auto& [c, w] : e) parts.emplace_back(c, to_string(w));
  return render_linear_combination(parts, " * ");
}

int default_max_straighten_degree() {
  if (const char* env = std::getenv("QGRASS_MAX_DEGREE")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) return static_cast<int>(v);
  }
  return 3;
}

// ---------------------------------------------------------------- Grassmannian

std::vector<int> column_content(const PluckerWord& word) {
  std::vector<int> c;
  for (const auto& l : word) c.insert(c.end(), l.cols().begin(), l.cols().end());
  std::sort(c.begin(), c.end());
  return c;
}

struct Grassmannian::StandardSystem {
  std::vector<PluckerWord> basis;
  std::map<Monomial, Eigen::Index, WordLexLess> rows;
  ExactFullPivLU<QScalar> lu;
};

struct Grassmannian::Cache {
  std::mutex mutex;
  std::map<PluckerWord, NCPoly> words;
  std::map<int, std::map<std::vector<int>, std::vector<PluckerWord>>> blocks;
  std::map<std::pair<int, std::vector<int>>, std::unique_ptr<StandardSystem>> systems;
};

Grassmannian::Grassmannian(GrassShape shape, RelationConstants relations)
    : shape_((shape.validate(), shape)),
      ambient_(AlgebraShape{shape.k, shape.n}, std::move(relations)),
      coords_(all_plucker(shape)),
      cache_(std::make_shared<Cache>()) {}

NCPoly Grassmannian::embed(const PluckerIndex& index) const {
  if (index.size() != shape_.k) throw ShapeError("Pluecker letter of the wrong size for " + shape_.to_string());
  const auto rows = u_index(shape_).cols();
  return ambient_.quantum_minor(rows, index.cols());
}

NCPoly Grassmannian::embed(const PluckerWord& word) const {
  if (word.empty()) return ambient_.one();
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->words.find(word); it != cache_->words.end()) return it->second;
  }
  NCPoly result = word.size() == 1
                      ? embed(word.front())
                      : ambient_.mul(embed(PluckerWord(word.begin(), word.end() - 1)), embed(PluckerWord{word.back()}));
  std::lock_guard lock(cache_->mutex);
  cache_->words.emplace(word, result);
  return result;
}

NCPoly Grassmannian::embed(const LocalizedElement& a) const {
  NCPoly out(ambient_.shape());
  const PluckerIndex u = u_index(shape_);
  for (const auto& t : a.terms()) {
    if (t.upow < 0) throw std::invalid_argument("embed: element has a negative power of [u]");
    PluckerWord w = t.word;
    w.insert(w.end(), t.upow, u);
    out += t.coeff * embed(w);
  }
  return out;
}

bool Grassmannian::equal(const LocalizedElement& a, const LocalizedElement& b) const {
  const LocalizedElement diff = a - b;
  if (diff.is_zero()) return true;
  const LocalizedElement cleared = loc_mul(diff, LocalizedElement::u_power(shape_, -diff.min_upow()));
  return embed(cleared).is_zero();
}

const std::map<std::vector<int>, std::vector<PluckerWord>>& Grassmannian::standard_blocks(int degree) const {
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->blocks.find(degree); it != cache_->blocks.end()) return it->second;
  }
  std::map<std::vector<int>, std::vector<PluckerWord>> blocks;
  for (auto& w : enumerate_standard(shape_, degree)) blocks[column_content(w)].push_back(std::move(w));
  std::lock_guard lock(cache_->mutex);
  return cache_->blocks.emplace(degree, std::move(blocks)).first->second;
}

// Standard words of one degree and column content. Products of Pluecker
// letters are homogeneous in the multiset of columns, so these blocks are
// independent.
const Grassmannian::StandardSystem& Grassmannian::standard_system(int degree, const std::vector<int>& content) const {
  const auto key = std::make_pair(degree, content);
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->systems.find(key); it != cache_->systems.end()) return *it->second;
  }
  auto sys = std::make_unique<StandardSystem>();
  const auto& blocks = standard_blocks(degree);
  if (auto it = blocks.find(content); it != blocks.end()) sys->basis = it->second;
  std::vector<NCPoly> columns;
  columns.reserve(sys->basis.size());
  for (const auto& w : sys->basis) {
    columns.push_back(embed(w));
    for (const auto& [m, c] : columns.back().terms()) sys->rows.try_emplace(m, 0);
  }
  Eigen::Index r = 0;
  for (auto& [m, idx] : sys->rows) idx = r++;
  DenseMatrix<QScalar> a = DenseMatrix<QScalar>::Constant(r, static_cast<Eigen::Index>(columns.size()), QScalar(0));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [m, c] : columns[j].terms()) a(sys->rows.at(m), static_cast<Eigen::Index>(j)) = c;
  sys->lu.compute(a);

  std::lock_guard lock(cache_->mutex);
  return *cache_->systems.emplace(key, std::move(sys)).first->second;
}

long Grassmannian::standard_rank(int degree) const {
  long rank = 0;
  for (const auto& [content, words] : standard_blocks(degree))
    rank += static_cast<long>(standard_system(degree, content).lu.rank());
  return rank;
}

StandardExpansion Grassmannian::straighten(const PluckerWord& word, int max_degree) const {
  const int degree = static_cast<int>(word.size());
  if (degree > max_degree)
    throw DegreeLimitError("straighten: degree " + std::to_string(degree) + " exceeds the cap " +
                           std::to_string(max_degree) + " (QGRASS_MAX_DEGREE)");
  if (degree == 0) return {{QScalar(1), {}}};
  for (const auto& l : word)
    if (l.size() != shape_.k) throw ShapeError("Pluecker letter of the wrong size for " + shape_.to_string());

  const StandardSystem& sys = standard_system(degree, column_content(word));
  if (!sys.lu.is_injective())
    throw StraightenError("straighten: embedded standard monomials of degree " + std::to_string(degree) +
                          " are linearly dependent in " + shape_.to_string());
  const NCPoly target = embed(word);
  DenseVector<QScalar> b = DenseVector<QScalar>::Constant(sys.lu.rows(), QScalar(0));
  for (const auto& [m, c] : target.terms()) {
    auto it = sys.rows.find(m);
    if (it == sys.rows.end())
      throw StraightenError("straighten: " + qgrass::to_string(word) + " is outside the span of standard monomials");
    b[it->second] = c;
  }
  const auto x = sys.lu.solve(b);
  if (!x) throw StraightenError("straighten: inconsistent system for " + qgrass::to_string(word));

  StandardExpansion out;
  NCPoly check(ambient_.shape());
  for (std::size_t j = 0; j < sys.basis.size(); ++j) {
    const QScalar& c = (*x)[static_cast<Eigen::Index>(j)];
    if (c.is_zero()) continue;
    out.emplace_back(c, sys.basis[j]);
    check += c * embed(sys.basis[j]);
  }
  if (check != target) throw StraightenError("straighten: re-embedding mismatch for " + qgrass::to_string(word));
  return out;
}

}  // namespace qgrass
