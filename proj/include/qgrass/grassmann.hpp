#pragma once

#include "qgrass/exact_linalg.hpp"
#include "qgrass/qmatrix.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace qgrass {

/// O_q(G(k,n)) inside O_q(M(k,n)); p = n - k.
struct GrassShape {
  int k = 2;
  int n = 4;

  int p() const { return n - k; }
  /// k >= 2 and 2k <= n: the range in which the automorphism results apply.
  bool supports_automorphisms() const { return k >= 2 && 2 * k <= n; }
  void validate() const;
  std::string to_string() const;
  friend bool operator==(const GrassShape&, const GrassShape&) = default;
};

/// A k-subset of {1..n}, stored strictly increasing.
class PluckerIndex {
 public:
  PluckerIndex() = default;
  /// Sorts the entries; throws ShapeError on repeats or out-of-range values.
  PluckerIndex(std::vector<int> cols, GrassShape shape);

  const std::vector<int>& cols() const { return cols_; }
  int size() const { return static_cast<int>(cols_.size()); }
  bool contains(int c) const;

  /// "[1,3]"
  std::string to_string() const;
  friend auto operator<=>(const PluckerIndex&, const PluckerIndex&) = default;

 private:
  std::vector<int> cols_;
};

using PluckerWord = std::vector<PluckerIndex>;

std::string to_string(const PluckerWord& w);

PluckerIndex u_index(GrassShape shape);  // {1..k}
PluckerIndex w_index(GrassShape shape);  // {n-k+1..n}

/// All k-subsets of {1..n} in lexicographic order.
std::vector<PluckerIndex> all_plucker(GrassShape shape);

/// Number of entries of I exceeding k.
int d_value(const PluckerIndex& index, GrassShape shape);
int d_value(const PluckerWord& word, GrassShape shape);

/// Componentwise order on sorted entries.
bool plucker_leq(const PluckerIndex& a, const PluckerIndex& b);

/// All nondecreasing chains of length degree, in lexicographic order.
std::vector<PluckerWord> enumerate_standard(GrassShape shape, int degree);
bool is_standard(const PluckerWord& word);
/// Sorted multiset of all columns in the word.
std::vector<int> column_content(const PluckerWord& word);

/// One term coeff * word * [u]^upow.
struct LocalizedTerm {
  QScalar coeff;
  PluckerWord word;
  int upow = 0;
};

/// Element of O_q(G(k,n))[[u]^-1]. Canonical form: [u] letters are moved to
/// the right end using [u][I] = q^d(I) [I][u], like terms are merged and
/// sorted by (word, upow), no zero coefficients. Words are not straightened,
/// so equality of algebra elements needs Grassmannian::equal.
class LocalizedElement {
 public:
  LocalizedElement() = default;
  explicit LocalizedElement(GrassShape shape) : shape_(shape) {}
  static LocalizedElement term(GrassShape shape, const QScalar& coeff, PluckerWord word, int upow = 0);
  static LocalizedElement letter(GrassShape shape, const PluckerIndex& index);
  static LocalizedElement scalar(GrassShape shape, const QScalar& c);
  /// [u]^e
  static LocalizedElement u_power(GrassShape shape, int e);

  GrassShape shape() const { return shape_; }
  const std::vector<LocalizedTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_upow() const;

  LocalizedElement operator-() const;
  friend LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b);
  friend LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b);
  friend LocalizedElement operator*(const QScalar& c, const LocalizedElement& a);
  /// Syntactic equality of canonical forms.
  friend bool operator==(const LocalizedElement& a, const LocalizedElement& b);

  /// "q^-1 * [1,3][1,4] * u^-2 + [2,4]"
  std::string to_string() const;

 private:
  void add_raw(const QScalar& coeff, PluckerWord word, int upow);
  void canonicalize();

  GrassShape shape_{};
  std::vector<LocalizedTerm> terms_;
};

LocalizedElement loc_mul(const LocalizedElement& a, const LocalizedElement& b);

class StraightenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeLimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Degree cap for straightening: QGRASS_MAX_DEGREE if set, else 3.
int default_max_straighten_degree();

/// Expansion sum coeff * standard word.
using StandardExpansion = std::vector<std::pair<QScalar, PluckerWord>>;
std::string to_string(const StandardExpansion& e);

/// O_q(G(k,n)) together with its embedding into O_q(M(k,n)). Embeddings of
/// words and the per-degree standard-basis systems are cached behind a mutex,
/// so one instance may be shared.
class Grassmannian {
 public:
  explicit Grassmannian(GrassShape shape, RelationConstants relations = {});

  GrassShape shape() const { return shape_; }
  const QMatrixAlgebra& ambient() const { return ambient_; }
  const std::vector<PluckerIndex>& coordinates() const { return coords_; }

  /// [1..k | I] in O_q(M(k,n)).
  NCPoly embed(const PluckerIndex& index) const;
  /// Product of the letters, read literally (no reordering).
  NCPoly embed(const PluckerWord& word) const;
  /// Requires every upow >= 0.
  NCPoly embed(const LocalizedElement& a) const;

  LocalizedElement mul(const LocalizedElement& a, const LocalizedElement& b) const { return loc_mul(a, b); }
  /// Equality in the localization: clear [u]^-1 on the right, embed, compare.
  bool equal(const LocalizedElement& a, const LocalizedElement& b) const;

  /// Unique expansion of word in standard monomials, found by exact linear
  /// algebra on the embedded coordinates.
  StandardExpansion straighten(const PluckerWord& word, int max_degree = default_max_straighten_degree()) const;
  /// Rank of the embedded standard monomials of one degree.
  long standard_rank(int degree) const;

 private:
  struct StandardSystem;
  const std::map<std::vector<int>, std::vector<PluckerWord>>& standard_blocks(int degree) const;
  const StandardSystem& standard_system(int degree, const std::vector<int>& content) const;

  GrassShape shape_;
  QMatrixAlgebra ambient_;
  std::vector<PluckerIndex> coords_;

  struct Cache;
  std::shared_ptr<Cache> cache_;
};

}  // namespace qgrass
