#pragma once

#include <string>

#include "hopftwist/linalg.hpp"

namespace hopftwist {

/// Element of A^{⊗rank} as a dense coordinate vector. Index order is
/// big-endian: e_{i1}⊗…⊗e_{in} sits at ((i1·d + i2)·d + …)·d + in.
struct Element {
  Index dim = 0;
  int rank = 1;
  Vec coeffs;

  static Element zero(Index d, int rank);
  static Element fromVec(Vec v);  // rank 1
  Vec toVec() const;              // rank 1 only
  Index size() const { return coeffs.size(); }
};

Index tensorSize(Index d, int rank);
inline Index idx2(Index d, Index i, Index j) { return i * d + j; }
inline Index idx3(Index d, Index i, Index j, Index k) { return (i * d + j) * d + k; }

/// Digits of a flat big-endian index, most significant leg first.
void splitIndex(Index flat, Index d, int rank, Index out[3]);

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(const Cyc& c, const Element& a);
bool operator==(const Element& a, const Element& b);
inline bool operator!=(const Element& a, const Element& b) { return !(a == b); }

/// Tensor concatenation a ⊗ b (ranks add).
Element outer(const Element& a, const Element& b);

/// Leg swap on a rank-2 element: R ↦ R_21.
Element flip12(const Element& r);

/// The d×d grid M(i,j) = coefficient of e_i ⊗ e_j.
Mat coefficientMatrix(const Element& r);
Element elementFromCoefficientMatrix(const Mat& m);

std::string str(const Element& e);
std::string str(const Vec& v);

}  // namespace hopftwist
