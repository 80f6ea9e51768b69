#include "hopftwist/element.hpp"

#include <sstream>
#include <utility>

namespace hopftwist {

Index tensorSize(Index d, int rank) {
  Index s = 1;
  for (int i = 0; i < rank; ++i) s *= d;
  return s;
}

Element Element::zero(Index d, int rank) {
  if (rank < 1 || rank > 3) throw Error("Element: rank must be 1, 2 or 3");
  Element e;
  e.dim = d;
  e.rank = rank;
  e.coeffs = Vec::Zero(tensorSize(d, rank));
  return e;
}

Element Element::fromVec(Vec v) {
  Element e;
  e.dim = v.size();
  e.rank = 1;
  e.coeffs = std::move(v);
  return e;
}

Vec Element::toVec() const {
  if (rank != 1) throw Error("Element::toVec: rank must be 1");
  return coeffs;
}

void splitIndex(Index flat, Index d, int rank, Index out[3]) {
  for (int l = rank - 1; l >= 0; --l) {
    out[l] = flat % d;
    flat /= d;
  }
}

static void requireSameShape(const Element& a, const Element& b, const char* op) {
  if (a.dim != b.dim || a.rank != b.rank)
    throw Error(std::string(op) + ": elements have different shapes");
}

Element operator+(const Element& a, const Element& b) {
  requireSameShape(a, b, "element add");
  Element r = a;
  r.coeffs += b.coeffs;
  return r;
}

Element operator-(const Element& a, const Element& b) {
  requireSameShape(a, b, "element sub");
  Element r = a;
  r.coeffs -= b.coeffs;
  return r;
}

Element operator*(const Cyc& c, const Element& a) {
  Element r = a;
  r.coeffs *= c;
  return r;
}

bool operator==(const Element& a, const Element& b) {
  return a.dim == b.dim && a.rank == b.rank && matEq(a.coeffs, b.coeffs);
}

Element outer(const Element& a, const Element& b) {
  if (a.dim != b.dim) throw Error("outer: elements over different algebras");
  if (a.rank + b.rank > 3) throw Error("outer: resulting rank exceeds 3");
  Element r = Element::zero(a.dim, a.rank + b.rank);
  const Index nb = b.coeffs.size();
  for (Index ia = 0; ia < a.coeffs.size(); ++ia) {
    if (a.coeffs[ia].isZero()) continue;
    for (Index ib = 0; ib < nb; ++ib) {
      if (b.coeffs[ib].isZero()) continue;
      r.coeffs[ia * nb + ib] = a.coeffs[ia] * b.coeffs[ib];
    }
  }
  return r;
}

Element flip12(const Element& r) {
  if (r.rank != 2) throw Error("flip12: rank must be 2");
  Element out = Element::zero(r.dim, 2);
  const Index d = r.dim;
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) out.coeffs[idx2(d, j, i)] = r.coeffs[idx2(d, i, j)];
  return out;
}

Mat coefficientMatrix(const Element& r) {
  if (r.rank != 2) throw Error("coefficientMatrix: rank must be 2");
  const Index d = r.dim;
  Mat m(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) m(i, j) = r.coeffs[idx2(d, i, j)];
  return m;
}

Element elementFromCoefficientMatrix(const Mat& m) {
  if (m.rows() != m.cols()) throw Error("elementFromCoefficientMatrix: square matrix required");
  const Index d = m.rows();
  Element r = Element::zero(d, 2);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) r.coeffs[idx2(d, i, j)] = m(i, j);
  return r;
}

std::string str(const Element& e) {
  std::ostringstream os;
  bool first = true;
  Index digits[3] = {0, 0, 0};
  for (Index t = 0; t < e.coeffs.size(); ++t) {
    const Cyc& c = e.coeffs[t];
    if (c.isZero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string s = c.str();
    if (s.find(' ') != std::string::npos) s = "(" + s + ")";
    bool one = (c == Cyc(1));
    if (!one) os << s << "*";
    splitIndex(t, e.dim, e.rank, digits);
    for (int l = 0; l < e.rank; ++l) {
      if (l) os << "(x)";
      os << "e" << digits[l];
    }
  }
  if (first) return "0";
  return os.str();
}

std::string str(const Vec& v) { return str(Element::fromVec(v)); }

}  // namespace hopftwist
