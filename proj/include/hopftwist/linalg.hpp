#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <optional>
#include <tuple>
#include <utility>

#include "hopftwist/cyclotomic.hpp"
#include "hopftwist/errors.hpp"

namespace Eigen {

template <>
struct NumTraits<hopftwist::Cyc> : GenericNumTraits<hopftwist::Cyc> {
  typedef hopftwist::Cyc Real;
  typedef hopftwist::Cyc NonInteger;
  typedef hopftwist::Cyc Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 60,
  };
};

}  // namespace Eigen

namespace hopftwist {

using Index = Eigen::Index;
using Mat = Eigen::Matrix<Cyc, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Cyc, Eigen::Dynamic, 1>;
using SpMat = Eigen::SparseMatrix<Cyc>;

template <typename A, typename B>
bool matEq(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

/// First coordinate where a and b differ, with both values.
template <typename A, typename B>
std::optional<std::tuple<Index, Index, Cyc, Cyc>> firstDiff(const Eigen::MatrixBase<A>& a,
                                                            const Eigen::MatrixBase<B>& b) {
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return std::tuple<Index, Index, Cyc, Cyc>{i, j, a(i, j), b(i, j)};
  return std::nullopt;
}

// Exact pivoted Gaussian elimination.
Index rank(const Mat& m);
Mat inverse(const Mat& m);               // throws SingularError carrying the rank
Mat kernel(const Mat& m);                // columns span the exact null space
Mat solve(const Mat& a, const Mat& rhs); // square a; throws SingularError

/// Kronecker product with big-endian index order: entry (ia*rb+ib, ja*cb+jb).
Mat kron(const Mat& a, const Mat& b);

/// The d²×d² permutation with tau(e_i ⊗ e_j) = e_j ⊗ e_i.
Mat flipMap(Index d);

// Sparse counterparts used by the representation-category layer.
SpMat toSparse(const Mat& m);
Mat toDense(const SpMat& m);
SpMat spId(Index n);
/// Permutation (nb*na)×(na*nb) sending e_a ⊗ e_b to e_b ⊗ e_a for a < na, b < nb.
SpMat spFlip(Index na, Index nb);
SpMat spKron(const SpMat& a, const SpMat& b);
bool spEq(const SpMat& a, const SpMat& b);
std::optional<std::tuple<Index, Index, Cyc>> spFirstDiff(const SpMat& a, const SpMat& b);
Cyc spTrace(const SpMat& m);

}  // namespace hopftwist
