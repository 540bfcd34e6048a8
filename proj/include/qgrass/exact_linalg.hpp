#pragma once

#include "qgrass/scalar.hpp"

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<qgrass::QScalar> : GenericNumTraits<qgrass::QScalar> {
  using Real = qgrass::QScalar;
  using NonInteger = qgrass::QScalar;
  using Nested = qgrass::QScalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 32,
    MulCost = 64,
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace qgrass {

/// Exact-arithmetic hooks for the elimination below.
template <typename Scalar>
struct ExactTraits;

template <>
struct ExactTraits<QScalar> {
  static bool is_zero(const QScalar& s) { return s.is_zero(); }
  static int complexity(const QScalar& s) { return s.complexity(); }
};

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Fully pivoted LU for exact scalars, API modeled after Eigen::FullPivLU.
/// Pivots are chosen as the nonzero entry of lowest complexity, which keeps
/// rational-function coefficients small. Immutable after compute(), so a
/// decomposition can be shared by concurrent solves.
template <typename Scalar>
class ExactFullPivLU {
 public:
  using Matrix = DenseMatrix<Scalar>;
  using Vector = DenseVector<Scalar>;
  using Index = Eigen::Index;
  using Traits = ExactTraits<Scalar>;

  ExactFullPivLU() = default;
  explicit ExactFullPivLU(const Matrix& a) { compute(a); }

  ExactFullPivLU& compute(const Matrix& a) {
    lu_ = a;
    const Index rows = a.rows(), cols = a.cols();
    row_perm_.resize(rows);
    col_perm_.resize(cols);
    for (Index i = 0; i < rows; ++i) row_perm_[i] = i;
    for (Index j = 0; j < cols; ++j) col_perm_[j] = j;
    rank_ = 0;
    for (Index s = 0; s < std::min(rows, cols); ++s) {
      Index pr = -1, pc = -1;
      int best = 0;
      for (Index j = s; j < cols; ++j)
        for (Index i = s; i < rows; ++i) {
          if (Traits::is_zero(lu_(i, j))) continue;
          const int c = Traits::complexity(lu_(i, j));
          if (pr < 0 || c < best) {
            pr = i;
            pc = j;
            best = c;
          }
        }
      if (pr < 0) break;
      if (pr != s) {
        lu_.row(pr).swap(lu_.row(s));
        std::swap(row_perm_[pr], row_perm_[s]);
      }
      if (pc != s) {
        lu_.col(pc).swap(lu_.col(s));
        std::swap(col_perm_[pc], col_perm_[s]);
      }
      const Scalar pivot = lu_(s, s);
      for (Index i = s + 1; i < rows; ++i) {
        if (Traits::is_zero(lu_(i, s))) continue;
        const Scalar factor = lu_(i, s) / pivot;
        lu_(i, s) = factor;
        for (Index j = s + 1; j < cols; ++j)
          if (!Traits::is_zero(lu_(s, j))) lu_(i, j) -= factor * lu_(s, j);
      }
      ++rank_;
    }
    return *this;
  }

  Index rank() const { return rank_; }
  Index rows() const { return lu_.rows(); }
  Index cols() const { return lu_.cols(); }
  bool is_injective() const { return rank_ == cols(); }

  /// A solution of A x = b with free variables set to zero, or nullopt when
  /// the system is inconsistent.
  std::optional<Vector> solve(const Vector& b) const {
    Vector pb(rows());
    for (Index i = 0; i < rows(); ++i) pb[i] = b[row_perm_[i]];
    for (Index s = 0; s < rank_; ++s) {
      if (Traits::is_zero(pb[s])) continue;
      for (Index i = s + 1; i < rows(); ++i)
        if (!Traits::is_zero(lu_(i, s))) pb[i] -= lu_(i, s) * pb[s];
    }
    for (Index i = rank_; i < rows(); ++i)
      if (!Traits::is_zero(pb[i])) return std::nullopt;
    Vector y = Vector::Constant(cols(), Scalar(0));
    for (Index s = rank_ - 1; s >= 0; --s) {
      Scalar acc = pb[s];
      for (Index j = s + 1; j < rank_; ++j)
        if (!Traits::is_zero(lu_(s, j)) && !Traits::is_zero(y[j])) acc -= lu_(s, j) * y[j];
      y[s] = acc / lu_(s, s);
    }
    Vector x(cols());
    for (Index j = 0; j < cols(); ++j) x[col_perm_[j]] = y[j];
    return x;
  }

  /// Columns form a basis of the null space.
  Matrix kernel() const {
    const Index dim = cols() - rank_;
    Matrix k = Matrix::Constant(cols(), dim, Scalar(0));
    for (Index f = 0; f < dim; ++f) {
      Vector y = Vector::Constant(cols(), Scalar(0));
      y[rank_ + f] = Scalar(1);
      for (Index s = rank_ - 1; s >= 0; --s) {
        Scalar acc = -lu_(s, rank_ + f);
        for (Index j = s + 1; j < rank_; ++j)
          if (!Traits::is_zero(lu_(s, j)) && !Traits::is_zero(y[j])) acc -= lu_(s, j) * y[j];
        y[s] = acc / lu_(s, s);
      }
      for (Index j = 0; j < cols(); ++j) k(col_perm_[j], f) = y[j];
    }
    return k;
  }

 private:
  Matrix lu_;
  std::vector<Index> row_perm_;
  std::vector<Index> col_perm_;
  Index rank_ = 0;
};

}  // namespace qgrass
