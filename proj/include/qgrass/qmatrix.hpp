#pragma once

#include "qgrass/scalar.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace qgrass {

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Shape of O_q(M(m,n)).
struct AlgebraShape {
  int m = 1;
  int n = 1;
  int generator_count() const { return m * n; }
  friend bool operator==(const AlgebraShape&, const AlgebraShape&) = default;
};

/// 1-indexed generator x[i,j].
struct GenIndex {
  int i = 1;
  int j = 1;
  friend bool operator==(const GenIndex&, const GenIndex&) = default;
};

/// Exponent vector over the generators in lexicographic (i,j) order.
struct Monomial {
  std::vector<std::uint16_t> exps;

  int degree() const;
  bool is_one() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Orders monomials by their nondecreasing words, lexicographically, with a
/// proper prefix first; the empty word is smallest.
struct WordLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

/// An element of O_q(M(m,n)) in the PBW basis. No zero coefficient is stored,
/// so two polynomials are equal exactly when their tables are.
class NCPoly {
 public:
  using TermMap = std::map<Monomial, QScalar, WordLexLess>;

  NCPoly() = default;
  explicit NCPoly(AlgebraShape shape) : shape_(shape) {}
  static NCPoly constant(AlgebraShape shape, const QScalar& c);
  static NCPoly generator(AlgebraShape shape, GenIndex g);
  static NCPoly monomial(AlgebraShape shape, Monomial m, const QScalar& c = QScalar(1));

  AlgebraShape shape() const { return shape_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c * m to this polynomial.
  void add_term(const Monomial& m, const QScalar& c);

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& b);
  NCPoly& operator-=(const NCPoly& b);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const QScalar& c, const NCPoly& a);
  friend bool operator==(const NCPoly&, const NCPoly&) = default;

  /// "x[1,1]*x[2,2] - q*x[1,2]*x[2,1]"
  std::string to_string() const;

 private:
  void check_shape(const NCPoly& b) const;
  AlgebraShape shape_{};
  TermMap terms_;
};

std::string render_monomial(const Monomial& m, AlgebraShape shape, char letter = 'x');
int generator_offset(AlgebraShape shape, GenIndex g);
GenIndex generator_at(AlgebraShape shape, int offset);

/// Constants of the four relation families. The defaults are the quantum
/// matrix relations; anything else is a deliberately broken algebra used to
/// test that the verification harness notices.
struct RelationConstants {
  QScalar row = QScalar::q();                       // x_ij x_il = row * x_il x_ij
  QScalar column = QScalar::q();                    // x_ij x_kj = column * x_kj x_ij
  QScalar diagonal = QScalar::q() - QScalar::q_pow(-1);  // x_ij x_kl - x_kl x_ij = diagonal * x_il x_kj

  static RelationConstants standard() { return {}; }
  static RelationConstants mutated();
  bool is_standard() const;
};

/// O_q(M(m,n)) with its multiplication. Products are memoised per instance;
/// the memo table is guarded, so one instance can be shared across threads.
class QMatrixAlgebra {
 public:
  explicit QMatrixAlgebra(AlgebraShape shape, RelationConstants relations = {});

  AlgebraShape shape() const { return shape_; }
  const RelationConstants& relations() const { return relations_; }

  NCPoly one() const { return NCPoly::constant(shape_, QScalar(1)); }
  NCPoly gen(int i, int j) const { return NCPoly::generator(shape_, {i, j}); }

  /// PBW expansion of a word, by repeatedly rewriting the leftmost
  /// out-of-order adjacent pair.
  NCPoly word_normal_form(std::span<const GenIndex> word) const;

  /// Product a*b, computed by inserting the letters of b one at a time from
  /// the right. Independent of word_normal_form's rewriting order.
  NCPoly mul(const NCPoly& a, const NCPoly& b) const;
  NCPoly pow(const NCPoly& a, int e) const;

  /// Quantum determinant; requires m == n.
  NCPoly quantum_determinant() const;
  /// [I|J]: quantum determinant of the rows I and columns J (1-indexed,
  /// strictly increasing, |I| == |J| >= 1).
  NCPoly quantum_minor(std::span<const int> rows, std::span<const int> cols) const;

 private:
  struct Rewrite {
    QScalar coeff;
    int left;
    int right;
  };
  // Rewrites x_a x_b (a > b as offsets) into a combination of ordered pairs.
  std::vector<Rewrite> swap_rule(int a, int b) const;
  NCPoly mul_monomial_generator(const Monomial& m, int g) const;
  void check_word(std::span<const GenIndex> word) const;

  AlgebraShape shape_;
  RelationConstants relations_;
  std::vector<std::vector<Rewrite>> rules_;  // rules_[a * N + b] for a > b

  struct Memo;
  std::shared_ptr<Memo> memo_;
};

NCPoly nc_mul(const NCPoly& a, const NCPoly& b, const QMatrixAlgebra& algebra);

/// Transpose isomorphism O_q(M(m,n)) -> O_q(M(n,m)), x[i,j] -> x[j,i].
NCPoly transpose_map(const NCPoly& a, const QMatrixAlgebra& target);

/// Length (inversion count) of a permutation of 0..t-1.
int permutation_length(std::span<const int> perm);

}  // namespace qgrass
