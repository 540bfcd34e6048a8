#pragma once

#include "qgrass/dehom.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qgrass {

/// Column scaling (a_1..a_n).
struct H0Element {
  std::vector<QScalar> a;

  static H0Element identity(GrassShape shape);
  void validate(GrassShape shape) const;
  friend bool operator==(const H0Element&, const H0Element&) = default;
};

/// (alpha0; alpha_1..alpha_k; beta_1..beta_p): x_ij -> alpha_i beta_j x_ij, y -> alpha0 y.
struct H1Element {
  QScalar alpha0 = QScalar(1);
  std::vector<QScalar> alpha;
  std::vector<QScalar> beta;

  static H1Element identity(GrassShape shape);
  void validate(GrassShape shape) const;
  /// "(a0; a1, a2; b1, b2)"
  std::string to_string() const;
  friend bool operator==(const H1Element&, const H1Element&) = default;
};

/// An H1Element with beta_p = 1; one per torus automorphism.
struct HCanonical {
  H1Element value;
  friend bool operator==(const HCanonical&, const HCanonical&) = default;
};

/// Componentwise product and inverse in H1.
H1Element h1_compose(const H1Element& f, const H1Element& g);
H1Element h1_inverse(const H1Element& f);
/// (1; lambda..; lambda^-1..), the kernel of the action.
H1Element h1_kernel_element(GrassShape shape, const QScalar& lambda);

/// An element of the automorphism group: torus part, then tau if diagram is set.
struct AutoSpec {
  HCanonical torus;
  bool diagram = false;

  static AutoSpec identity(GrassShape shape);
  /// Throws ShapeError on wrong lengths, zero entries, beta_p != 1, or
  /// diagram with n != 2k.
  void validate(GrassShape shape) const;
};

class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedScope : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

LocalizedElement h0_apply(const H0Element& g, const LocalizedElement& a);
LocalizedElement h1_apply(const H1Element& f, const LocalizedElement& a);
TElement h1_apply(const H1Element& f, const TElement& t);

H1Element h0_to_h1(const H0Element& g, GrassShape shape);
HCanonical h1_canonicalize(const H1Element& f);

/// H0 element with the action of f, given k-th roots: root0^k = alpha0 and
/// alpha_roots[i]^k = alpha_i. Throws std::invalid_argument if a root is wrong.
H0Element h1_to_h0_with_roots(const H1Element& f, const QScalar& root0, const std::vector<QScalar>& alpha_roots,
                              GrassShape shape);

/// Outcome of realize_in_h0: a verified witness, or the first subsystem
/// without a solution.
struct RealizeResult {
  std::optional<H0Element> witness;
  /// "prime 2", "sign", ...; empty when a witness exists.
  std::string obstruction;
  /// True when the obstructing exponent system is solvable over Q but not Z.
  bool rational_relaxation_feasible = false;
};

/// Solves prod_{i in L} a_i = target(L) over Q^*. Targets must cover every
/// Pluecker coordinate and be nonzero rationals (UnsupportedScope otherwise).
RealizeResult realize_in_h0(const std::map<PluckerIndex, QScalar>& target, GrassShape shape);

/// w0: i -> n+1-i, applied to a set and re-sorted.
PluckerIndex w0_index(const PluckerIndex& l, GrassShape shape);
/// [w0(complement of L)] in G(n-k,n).
PluckerIndex kn_index(const PluckerIndex& l, GrassShape shape);

/// Letterwise [I] -> [w0(complement I)]; needs n = 2k.
LocalizedElement diagram_tau(const LocalizedElement& a);
/// The transpose x_ij -> x_ji, y -> y on T; needs k = p.
TElement diagram_tau(const TElement& t, const TAlgebra& algebra);
/// G(k,n) -> G(n-k,n), letterwise [L] -> [w0(complement L)]; needs 2k <= n.
LocalizedElement kn_isomorphism(const LocalizedElement& a);
/// Letterwise [I] -> [w0(I)] with every word reversed. Needs upow >= 0.
LocalizedElement theta_antiauto(const LocalizedElement& a);

LocalizedElement auto_apply(const AutoSpec& spec, const LocalizedElement& a);

/// tau h tau = (alpha0; beta; alpha) when k = p.
H1Element tau_conjugate(const H1Element& f);

using ElementMap = std::function<LocalizedElement(const LocalizedElement&)>;

struct CertReport {
  bool ok = true;
  long checked = 0;
  std::string failure;  // first failing word, if any
};

/// For every word w of the given degree in the source: map(straighten(w)) and
/// the product of the letter images must agree in the target. With anti set
/// the letter images are multiplied in reverse order. Degree 2 is exhaustive
/// over ordered letter pairs; higher degrees use sample random words.
CertReport certify_products(const Grassmannian& source, const Grassmannian& target, const ElementMap& map,
                            int degree, bool anti = false, int sample = 0, unsigned seed = 1);

/// Runs the degree-2 certification of auto_apply(spec, .) and returns the
/// spec, or throws CertificationError.
AutoSpec certified(const AutoSpec& spec, const Grassmannian& g);

/// Scalar lambda with a([u]) = lambda [u], if the image has that form.
std::optional<QScalar> scalar_on(const ElementMap& map, const PluckerIndex& letter, GrassShape shape);

}  // namespace qgrass
