#include "hopftwist/linalg.hpp"

#include <vector>

namespace hopftwist {

namespace {

// Reduced row echelon form in place; returns pivot column indices.
std::vector<Index> rrefInPlace(Mat& a) {
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Index p = -1;
    for (Index i = r; i < a.rows(); ++i) {
      if (!a(i, c).isZero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    Cyc inv = a(r, c).inverse();
    for (Index j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).isZero()) continue;
      Cyc f = a(i, c);
      for (Index j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Index rank(const Mat& m) {
  Mat a = m;
  return static_cast<Index>(rrefInPlace(a).size());
}

Mat solve(const Mat& a, const Mat& rhs) {
  if (a.rows() != a.cols()) throw Error("solve: matrix must be square");
  if (a.rows() != rhs.rows()) throw Error("solve: dimension mismatch");
  const Index n = a.rows();
  Mat aug(n, n + rhs.cols());
  aug.leftCols(n) = a;
  aug.rightCols(rhs.cols()) = rhs;
  std::vector<Index> pivots = rrefInPlace(aug);
  Index rk = 0;
  for (Index p : pivots)
    if (p < n) ++rk;
  if (rk < n) throw SingularError("solve: singular matrix", rk);
  return aug.rightCols(rhs.cols());
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw Error("inverse: matrix must be square");
  try {
    return solve(m, Mat::Identity(m.rows(), m.rows()));
  } catch (const SingularError& e) {
    throw SingularError("inverse: singular matrix", e.rank());
  }
}

Mat kernel(const Mat& m) {
  Mat a = m;
  std::vector<Index> pivots = rrefInPlace(a);
  const Index n = m.cols();
  std::vector<bool> isPivot(static_cast<size_t>(n), false);
  for (Index p : pivots) isPivot[static_cast<size_t>(p)] = true;
  const Index nullity = n - static_cast<Index>(pivots.size());
  Mat basis = Mat::Zero(n, nullity);
  Index col = 0;
  for (Index f = 0; f < n; ++f) {
    if (isPivot[static_cast<size_t>(f)]) continue;
    basis(f, col) = Cyc(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], col) = -a(static_cast<Index>(r), f);
    ++col;
  }
  return basis;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat r = Mat::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index ja = 0; ja < a.cols(); ++ja)
    for (Index ia = 0; ia < a.rows(); ++ia) {
      if (a(ia, ja).isZero()) continue;
      for (Index jb = 0; jb < b.cols(); ++jb)
        for (Index ib = 0; ib < b.rows(); ++ib) {
          if (b(ib, jb).isZero()) continue;
          r(ia * b.rows() + ib, ja * b.cols() + jb) = a(ia, ja) * b(ib, jb);
        }
    }
  return r;
}

Mat flipMap(Index d) {
  Mat r = Mat::Zero(d * d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) r(j * d + i, i * d + j) = Cyc(1);
  return r;
}

SpMat toSparse(const Mat& m) {
  std::vector<Eigen::Triplet<Cyc>> tr;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).isZero()) tr.emplace_back(i, j, m(i, j));
  SpMat s(m.rows(), m.cols());
  s.setFromTriplets(tr.begin(), tr.end());
  return s;
}

Mat toDense(const SpMat& m) {
  Mat d = Mat::Zero(m.rows(), m.cols());
  for (Index k = 0; k < m.outerSize(); ++k)
    for (SpMat::InnerIterator it(m, k); it; ++it) d(it.row(), it.col()) = it.value();
  return d;
}

SpMat spId(Index n) {
  SpMat s(n, n);
  s.setIdentity();
  return s;
}

SpMat spFlip(Index na, Index nb) {
  std::vector<Eigen::Triplet<Cyc>> tr;
  tr.reserve(static_cast<size_t>(na * nb));
  for (Index a = 0; a < na; ++a)
    for (Index b = 0; b < nb; ++b) tr.emplace_back(b * na + a, a * nb + b, Cyc(1));
  SpMat s(nb * na, na * nb);
  s.setFromTriplets(tr.begin(), tr.end());
  return s;
}

SpMat spKron(const SpMat& a, const SpMat& b) {
  std::vector<Eigen::Triplet<Cyc>> tr;
  tr.reserve(static_cast<size_t>(a.nonZeros()) * static_cast<size_t>(b.nonZeros()));
  for (Index ka = 0; ka < a.outerSize(); ++ka)
    for (SpMat::InnerIterator ita(a, ka); ita; ++ita)
      for (Index kb = 0; kb < b.outerSize(); ++kb)
        for (SpMat::InnerIterator itb(b, kb); itb; ++itb)
          tr.emplace_back(ita.row() * b.rows() + itb.row(),
                          ita.col() * b.cols() + itb.col(), ita.value() * itb.value());
  SpMat s(a.rows() * b.rows(), a.cols() * b.cols());
  s.setFromTriplets(tr.begin(), tr.end());
  return s;
}

bool spEq(const SpMat& a, const SpMat& b) { return !spFirstDiff(a, b).has_value(); }

std::optional<std::tuple<Index, Index, Cyc>> spFirstDiff(const SpMat& a, const SpMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return std::tuple<Index, Index, Cyc>{-1, -1, Cyc(0)};
  SpMat d = a - b;
  for (Index k = 0; k < d.outerSize(); ++k)
    for (SpMat::InnerIterator it(d, k); it; ++it)
      if (!it.value().isZero())
        return std::tuple<Index, Index, Cyc>{it.row(), it.col(), it.value()};
  return std::nullopt;
}

Cyc spTrace(const SpMat& m) {
  Cyc t(0);
  for (Index k = 0; k < m.outerSize(); ++k)
    for (SpMat::InnerIterator it(m, k); it; ++it)
      if (it.row() == it.col()) t += it.value();
  return t;
}

}  // namespace hopftwist
