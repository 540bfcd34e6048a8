#pragma once

#include "qgrass/grassmann.hpp"

#include <map>
#include <string>
#include <vector>

namespace qgrass {

/// One basis element m * y^ypow of T = O_q(M(k,p))[y, y^-1; sigma].
struct TKey {
  Monomial mono;
  int ypow = 0;
  friend bool operator==(const TKey&, const TKey&) = default;
};

struct TKeyLess {
  bool operator()(const TKey& a, const TKey& b) const;
};

/// Element of T with y-powers on the right. No zero coefficients are stored.
class TElement {
 public:
  using TermMap = std::map<TKey, QScalar, TKeyLess>;

  TElement() = default;
  explicit TElement(AlgebraShape shape) : shape_(shape) {}
  /// poly * y^ypow
  static TElement from_poly(const NCPoly& poly, int ypow = 0);
  static TElement term(AlgebraShape shape, Monomial mono, int ypow, const QScalar& c = QScalar(1));

  AlgebraShape shape() const { return shape_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const TKey& key, const QScalar& c);

  TElement operator-() const;
  TElement& operator+=(const TElement& b);
  friend TElement operator+(TElement a, const TElement& b) { return a += b; }
  friend TElement operator-(TElement a, const TElement& b) { return a += -b; }
  friend TElement operator*(const QScalar& c, const TElement& a);
  friend bool operator==(const TElement&, const TElement&) = default;

  /// "x[1,1]*y^-2 + (q - q^-1)*y"
  std::string to_string() const;

 private:
  AlgebraShape shape_{};
  TermMap terms_;
};

/// [I|J] in O_q(M(k,p)); both empty means the unit.
struct MinorIndex {
  std::vector<int> rows;
  std::vector<int> cols;

  void validate(int k, int p) const;
  /// "[1,2|1,2]"
  std::string to_string() const;
  friend bool operator==(const MinorIndex&, const MinorIndex&) = default;
};

/// [I|J] = [L][u]^upow
struct PluckerFactor {
  PluckerIndex index;
  int upow = -1;
};

/// [L] = [I|J] y^ypow
struct MinorFactor {
  MinorIndex minor;
  int ypow = 1;
};

/// L = {1..k} \ (k+1-I) together with k+J.
PluckerFactor minor_to_plucker(const MinorIndex& mi, GrassShape shape);
/// I = (k+1) - ({1..k} \ L<=k), J = L>k - k.
MinorFactor plucker_to_minor(const PluckerIndex& l, GrassShape shape);

/// i in I, read off from L alone.
bool belongs_row(int i, const PluckerIndex& l, GrassShape shape);
/// j in J, read off from L alone.
bool belongs_col(int j, const PluckerIndex& l, GrassShape shape);

/// The Laurent extension T for a grassmannian shape (k,n), built on
/// O_q(M(k,p)) with y x_ij = q x_ij y. Requires p >= 1.
class TAlgebra {
 public:
  explicit TAlgebra(GrassShape shape, RelationConstants relations = {});

  GrassShape shape() const { return shape_; }
  const QMatrixAlgebra& base() const { return base_; }

  TElement one() const;
  TElement x(int i, int j) const;
  TElement y(int e = 1) const;
  TElement minor(const MinorIndex& mi) const;

  TElement mul(const TElement& a, const TElement& b) const;

 private:
  GrassShape shape_;
  QMatrixAlgebra base_;
};

/// Letters go to [I|J] y, [u] to y; extended multiplicatively.
TElement dehom_forward(const LocalizedElement& a, const TAlgebra& t);
/// x_ij goes to [L][u]^-1, y to [u]; extended multiplicatively.
LocalizedElement dehom_backward(const TElement& a, GrassShape shape);

/// Weight i with y a y^-1 = q^i a: the total x-degree.
int t_grading_y(const TKey& key);
/// Weight i with [I|J] a = q^-i a [I|J] for [I|J] = [1..k | p+1-k..p]:
/// the number of x factors in columns below p+1-k, plus k * ypow.
/// Requires 2k <= n.
int t_grading_minor(const TKey& key, GrassShape shape);

/// Homogeneous components keyed by weight; they sum back to a.
std::map<int, TElement> y_components(const TElement& a);
std::map<int, TElement> minor_components(const TElement& a, GrassShape shape);

/// True iff a has y-weight 1 and a single minor weight in {0, 1}. Throws
/// std::logic_error if such an a has a term with nonzero y-power.
bool membership_filter(const TElement& a, GrassShape shape);

}  // namespace qgrass
