#include "hopftwist/rmatrix.hpp"

#include <sstream>
#include <utility>

namespace hopftwist {

namespace {

Vec basisVec(Index d, Index i) {
  Vec v = Vec::Zero(d);
  v[i] = Cyc(1);
  return v;
}

std::string elemWitness(const char* what, const Element& lhs, const Element& rhs) {
  auto d = firstDiff(lhs.coeffs, rhs.coeffs);
  std::ostringstream os;
  os << what << ": coordinate " << std::get<0>(*d) << " differs, lhs " << std::get<2>(*d)
     << ", rhs " << std::get<3>(*d);
  return os.str();
}

std::string vecWitness(const char* what, const Vec& lhs, const Vec& rhs) {
  auto d = firstDiff(lhs, rhs);
  std::ostringstream os;
  os << what << ": coordinate " << std::get<0>(*d) << " differs, lhs " << std::get<2>(*d)
     << ", rhs " << std::get<3>(*d);
  return os.str();
}

}  // namespace

Report verifyQuasitriangular(const HopfAlgebra& h, const Element& r) {
  if (r.rank != 2 || r.dim != h.dim)
    throw Error("verifyQuasitriangular: rank-2 element over the host required");
  Report rep;

  try {
    elemInverse(h, r);
    rep.add("invertible", true);
  } catch (const SingularError& e) {
    rep.add("invertible", false, e.what());
  }

  Element r12 = embedLeg(h, r, Leg::leg12);
  Element r13 = embedLeg(h, r, Leg::leg13);
  Element r23 = embedLeg(h, r, Leg::leg23);

  {
    Element lhs = coprodLeft(h, r);
    Element rhs = elemMul(h, r13, r23);
    bool ok = (lhs == rhs);
    rep.add("comult-compat-left", ok, ok ? "" : elemWitness("(D(x)id)(R) vs R13·R23", lhs, rhs));
  }
  {
    Element lhs = coprodRight(h, r);
    Element rhs = elemMul(h, r13, r12);
    bool ok = (lhs == rhs);
    rep.add("comult-compat-right", ok, ok ? "" : elemWitness("(id(x)D)(R) vs R13·R12", lhs, rhs));
  }
  {
    bool ok = true;
    std::string wit;
    const Index d = h.dim;
    Mat flip = flipMap(d);
    for (Index i = 0; i < d && ok; ++i) {
      Element di = applyComult(h, basisVec(d, i));
      Element dcop = di;
      dcop.coeffs = flip * di.coeffs;
      Element lhs = elemMul(h, dcop, r);
      Element rhs = elemMul(h, r, di);
      if (lhs != rhs) {
        ok = false;
        std::ostringstream os;
        os << "basis " << i << ", " << elemWitness("Dcop(a)·R vs R·D(a)", lhs, rhs);
        wit = os.str();
      }
    }
    rep.add("intertwines-comult", ok, wit);
  }
  return rep;
}

bool isTriangular(const HopfAlgebra& h, const Element& r) {
  Element r21 = flip12(r);
  Element one = unitTensor(h, 2);
  return elemMul(h, r21, r) == one && elemMul(h, r, r21) == one;
}

Vec drinfeldElement(const HopfAlgebra& h, const Element& r) {
  if (r.rank != 2 || r.dim != h.dim)
    throw Error("drinfeldElement: rank-2 element over the host required");
  const Index d = h.dim;
  Vec u = Vec::Zero(d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const Cyc& c = r.coeffs[idx2(d, i, j)];
      if (c.isZero()) continue;
      u += c * mulVec(h, h.antipode.col(j), basisVec(d, i));
    }
  return u;
}

Report verifyDrinfeldLaws(const HopfAlgebra& h, const Element& r) {
  Report rep;
  const Index d = h.dim;
  Vec u = drinfeldElement(h, r);

  Vec uinv;
  bool invertible = true;
  try {
    uinv = elemInverse(h, Element::fromVec(u)).toVec();
    rep.add("drinfeld-invertible", true);
  } catch (const SingularError& e) {
    invertible = false;
    rep.add("drinfeld-invertible", false, e.what());
  }

  if (invertible) {
    bool ok = true;
    std::string wit;
    for (Index i = 0; i < d && ok; ++i) {
      Vec lhs = mulVec(h, mulVec(h, u, basisVec(d, i)), uinv);
      Vec rhs = h.antipode * h.antipode.col(i);
      if (!matEq(lhs, rhs)) {
        ok = false;
        wit = "basis " + std::to_string(i) + ", " + vecWitness("u·x·u^-1 vs S^2(x)", lhs, rhs);
      }
    }
    rep.add("conjugation-implements-s2", ok, wit);
  } else {
    rep.addSkipped("conjugation-implements-s2");
  }

  {
    Element lhs = applyComult(h, u);
    Element rhs = outer(Element::fromVec(u), Element::fromVec(u));
    bool ok = (lhs == rhs);
    rep.add("grouplike", ok, ok ? "" : elemWitness("D(u) vs u(x)u", lhs, rhs));
  }

  if (isSemisimple(h) && isTriangular(h, r)) {
    {
      bool ok = true;
      std::string wit;
      for (Index i = 0; i < d && ok; ++i) {
        Vec lhs = mulVec(h, u, basisVec(d, i));
        Vec rhs = mulVec(h, basisVec(d, i), u);
        if (!matEq(lhs, rhs)) {
          ok = false;
          wit = "basis " + std::to_string(i) + ", " + vecWitness("u·x vs x·u", lhs, rhs);
        }
      }
      rep.add("central", ok, wit);
    }
    {
      Vec su = h.antipode * u;
      bool ok = matEq(su, u);
      rep.add("fixed-by-antipode", ok, ok ? "" : vecWitness("S(u) vs u", su, u));
    }
    {
      Vec sq = mulVec(h, u, u);
      bool ok = matEq(sq, h.unit);
      rep.add("involutive", ok, ok ? "" : vecWitness("u^2 vs 1", sq, h.unit));
    }
  } else {
    rep.addSkipped("central");
    rep.addSkipped("fixed-by-antipode");
    rep.addSkipped("involutive");
  }
  return rep;
}

Element rU(const HopfAlgebra& h, const Vec& u) {
  {
    Vec sq = mulVec(h, u, u);
    if (!matEq(sq, h.unit))
      throw Error("rU: element is not involutive - " + vecWitness("u^2 vs 1", sq, h.unit));
    Element du = applyComult(h, u);
    Element uu = outer(Element::fromVec(u), Element::fromVec(u));
    if (du != uu)
      throw Error("rU: element is not grouplike - " + elemWitness("D(u) vs u(x)u", du, uu));
  }
  Element one = Element::fromVec(h.unit);
  Element eu = Element::fromVec(u);
  Element r = outer(one, one) + outer(one, eu) + outer(eu, one) - outer(eu, eu);
  return Cyc(mpq_class(1, 2)) * r;
}

CorrectedR correctR(const HopfAlgebra& h, const Element& r) {
  if (!isSemisimple(h)) throw Error("correctR: host algebra is not semisimple");
  if (!isTriangular(h, r)) throw Error("correctR: R is not triangular");
  Vec u = drinfeldElement(h, r);
  Element rt = elemMul(h, r, rU(h, u));
  Vec ut = drinfeldElement(h, rt);
  if (!matEq(ut, h.unit)) {
    std::ostringstream os;
    os << "correctR postcondition failed: Drinfeld element of R·R_u is " << str(ut)
       << ", not the unit; R = " << str(r) << ", u = " << str(u);
    throw std::logic_error(os.str());
  }
  if (!isTriangular(h, rt)) {
    std::ostringstream os;
    os << "correctR postcondition failed: R·R_u is not triangular; R = " << str(r)
       << ", u = " << str(u);
    throw std::logic_error(os.str());
  }
  return CorrectedR{std::move(rt), std::move(ut)};
}

bool isMinimal(const HopfAlgebra& h, const Element& r) {
  return rank(coefficientMatrix(r)) == h.dim;
}

namespace {

// Reduced echelon basis of the span of the given vectors.
std::vector<Vec> spanBasis(Index d, const std::vector<Vec>& vectors) {
  Mat m(static_cast<Index>(vectors.size()), d);
  for (Index i = 0; i < m.rows(); ++i) m.row(i) = vectors[static_cast<size_t>(i)].transpose();
  std::vector<Vec> basis;
  Index rr = 0;
  for (Index c = 0; c < m.cols() && rr < m.rows(); ++c) {
    Index p = -1;
    for (Index i = rr; i < m.rows(); ++i)
      if (!m(i, c).isZero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != rr) m.row(p).swap(m.row(rr));
    Cyc inv = m(rr, c).inverse();
    for (Index j = c; j < m.cols(); ++j) m(rr, j) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == rr || m(i, c).isZero()) continue;
      Cyc f = m(i, c);
      for (Index j = c; j < m.cols(); ++j) m(i, j) -= f * m(rr, j);
    }
    ++rr;
  }
  for (Index i = 0; i < rr; ++i) basis.push_back(m.row(i).transpose());
  return basis;
}

bool inSpan(const std::vector<Vec>& basis, const Vec& v) {
  if (basis.empty()) return matEq(v, Vec::Zero(v.size()));
  Mat m(v.size(), static_cast<Index>(basis.size()) + 1);
  for (size_t j = 0; j < basis.size(); ++j) m.col(static_cast<Index>(j)) = basis[j];
  m.col(static_cast<Index>(basis.size())) = v;
  return rank(m) == static_cast<Index>(basis.size());
}

}  // namespace

MinimalSubalgebra minimalSubalgebra(const HopfAlgebra& h, const Element& r) {
  const Index d = h.dim;
  Mat grid = coefficientMatrix(r);
  std::vector<Vec> generators;
  for (Index k = 0; k < d; ++k) generators.push_back(grid.col(k));              // (id⊗f_k)(R)
  for (Index k = 0; k < d; ++k) generators.push_back(grid.row(k).transpose());  // (f_k⊗id)(R)
  std::vector<Vec> basis = spanBasis(d, generators);

  for (;;) {
    std::vector<Vec> extended = basis;
    bool grew = false;
    for (const Vec& a : basis)
      for (const Vec& b : basis) {
        Vec p = mulVec(h, a, b);
        if (!inSpan(extended, p)) {
          extended.push_back(p);
          grew = true;
        }
      }
    if (!grew) break;
    basis = spanBasis(d, extended);
  }

  MinimalSubalgebra out;
  out.basis = basis;

  {
    bool ok = inSpan(basis, h.unit);
    out.report.add("contains-unit", ok, ok ? "" : "unit element is outside the span");
  }
  {
    const Index k = static_cast<Index>(basis.size());
    Mat pairs(d * d, k * k);
    for (Index r1 = 0; r1 < k; ++r1)
      for (Index r2 = 0; r2 < k; ++r2)
        pairs.col(r1 * k + r2) = outer(Element::fromVec(basis[static_cast<size_t>(r1)]),
                                       Element::fromVec(basis[static_cast<size_t>(r2)]))
                                     .coeffs;
    Index baseRank = rank(pairs);
    bool ok = true;
    std::string wit;
    for (Index b = 0; b < k && ok; ++b) {
      Mat aug(d * d, k * k + 1);
      aug.leftCols(k * k) = pairs;
      aug.col(k * k) = h.comult * basis[static_cast<size_t>(b)];
      if (rank(aug) != baseRank) {
        ok = false;
        wit = "coproduct of basis vector " + std::to_string(b) + " leaves the span";
      }
    }
    out.report.add("comult-stable", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (size_t b = 0; b < basis.size() && ok; ++b) {
      Vec s = h.antipode * basis[b];
      if (!inSpan(basis, s)) {
        ok = false;
        wit = "antipode of basis vector " + std::to_string(b) + " leaves the span";
      }
    }
    out.report.add("antipode-stable", ok, wit);
  }
  return out;
}

}  // namespace hopftwist
