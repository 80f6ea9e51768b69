#include "hopftwist/hopf.hpp"

#include <sstream>
#include <utility>

namespace hopftwist {

namespace {

Vec basisVec(Index d, Index i) {
  Vec v = Vec::Zero(d);
  v[i] = Cyc(1);
  return v;
}

// x · e_k for a general x.
Vec rightMulBasis(const HopfAlgebra& h, const Vec& x, Index k) {
  Vec r = Vec::Zero(h.dim);
  for (Index l = 0; l < h.dim; ++l)
    if (!x[l].isZero()) r += x[l] * h.mult[static_cast<size_t>(l)].col(k);
  return r;
}

std::string diffWitness(const char* what, const Vec& lhs, const Vec& rhs) {
  auto d = firstDiff(lhs, rhs);
  std::ostringstream os;
  os << what << ": coordinate " << std::get<0>(*d) << " differs, lhs " << std::get<2>(*d)
     << ", rhs " << std::get<3>(*d);
  return os.str();
}

}  // namespace

HopfAlgebra groupAlgebra(const Group& g) {
  const Index d = g.order();
  HopfAlgebra h;
  h.dim = d;
  h.mult.assign(static_cast<size_t>(d), Mat::Zero(d, d));
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      h.mult[static_cast<size_t>(i)](g.mul(static_cast<int>(i), static_cast<int>(j)), j) = Cyc(1);
  h.unit = basisVec(d, 0);
  h.comult = Mat::Zero(d * d, d);
  for (Index i = 0; i < d; ++i) h.comult(idx2(d, i, i), i) = Cyc(1);
  h.counit = Mat::Zero(1, d);
  for (Index i = 0; i < d; ++i) h.counit(0, i) = Cyc(1);
  h.antipode = Mat::Zero(d, d);
  for (Index i = 0; i < d; ++i) h.antipode(g.inverse(static_cast<int>(i)), i) = Cyc(1);
  return h;
}

HopfAlgebra sweedlerAlgebra() {
  const Index d = 4;  // basis 1, a, x, ax
  HopfAlgebra h;
  h.dim = d;
  h.mult.assign(4, Mat::Zero(d, d));
  // left multiplication by 1
  h.mult[0] = Mat::Identity(d, d);
  // by a: a·1=a, a·a=1, a·x=ax, a·ax=x
  h.mult[1](1, 0) = Cyc(1);
  h.mult[1](0, 1) = Cyc(1);
  h.mult[1](3, 2) = Cyc(1);
  h.mult[1](2, 3) = Cyc(1);
  // by x: x·1=x, x·a=-ax, x·x=0, x·ax=0
  h.mult[2](2, 0) = Cyc(1);
  h.mult[2](3, 1) = Cyc(-1);
  // by ax: ax·1=ax, ax·a=-x, ax·x=0, ax·ax=0
  h.mult[3](3, 0) = Cyc(1);
  h.mult[3](2, 1) = Cyc(-1);
  h.unit = basisVec(d, 0);
  h.comult = Mat::Zero(d * d, d);
  h.comult(idx2(d, 0, 0), 0) = Cyc(1);                        // Δ(1) = 1⊗1
  h.comult(idx2(d, 1, 1), 1) = Cyc(1);                        // Δ(a) = a⊗a
  h.comult(idx2(d, 2, 0), 2) = Cyc(1);                        // Δ(x) = x⊗1 + a⊗x
  h.comult(idx2(d, 1, 2), 2) = Cyc(1);
  h.comult(idx2(d, 3, 1), 3) = Cyc(1);                        // Δ(ax) = ax⊗a + 1⊗ax
  h.comult(idx2(d, 0, 3), 3) = Cyc(1);
  h.counit = Mat::Zero(1, d);
  h.counit(0, 0) = Cyc(1);
  h.counit(0, 1) = Cyc(1);
  h.antipode = Mat::Zero(d, d);
  h.antipode(0, 0) = Cyc(1);   // S(1) = 1
  h.antipode(1, 1) = Cyc(1);   // S(a) = a
  h.antipode(3, 2) = Cyc(-1);  // S(x) = -ax
  h.antipode(2, 3) = Cyc(1);   // S(ax) = x
  return h;
}

Vec mulVec(const HopfAlgebra& h, const Vec& x, const Vec& y) {
  Vec r = Vec::Zero(h.dim);
  for (Index i = 0; i < h.dim; ++i)
    if (!x[i].isZero()) r += x[i] * (h.mult[static_cast<size_t>(i)] * y);
  return r;
}

Cyc counitOf(const HopfAlgebra& h, const Vec& x) {
  Cyc s(0);
  for (Index i = 0; i < h.dim; ++i) s += h.counit(0, i) * x[i];
  return s;
}

Element applyComult(const HopfAlgebra& h, const Vec& x) {
  Element r = Element::zero(h.dim, 2);
  r.coeffs = h.comult * x;
  return r;
}

Element unitTensor(const HopfAlgebra& h, int rank) {
  Element r = Element::fromVec(h.unit);
  for (int i = 1; i < rank; ++i) r = outer(r, Element::fromVec(h.unit));
  return r;
}

Element elemMul(const HopfAlgebra& h, const Element& u, const Element& v) {
  if (u.dim != h.dim || v.dim != h.dim) throw Error("elemMul: dimension mismatch");
  if (u.rank != v.rank) throw Error("elemMul: rank mismatch");
  const Index d = h.dim;
  const int r = u.rank;
  Element out = Element::zero(d, r);
  Index pd[3], qd[3];
  for (Index p = 0; p < u.coeffs.size(); ++p) {
    if (u.coeffs[p].isZero()) continue;
    splitIndex(p, d, r, pd);
    for (Index q = 0; q < v.coeffs.size(); ++q) {
      if (v.coeffs[q].isZero()) continue;
      splitIndex(q, d, r, qd);
      Cyc c = u.coeffs[p] * v.coeffs[q];
      // accumulate c · (e_{pd1} e_{qd1}) ⊗ … over the nonzeros of each leg
      const Mat* legs[3];
      for (int l = 0; l < r; ++l) legs[l] = &h.mult[static_cast<size_t>(pd[l])];
      // small explicit recursion over legs
      struct Rec {
        const HopfAlgebra& h;
        const Mat** legs;
        const Index* qd;
        Element& out;
        int rank;
        void go(int l, Index flat, const Cyc& coeff) {
          if (l == rank) {
            out.coeffs[flat] += coeff;
            return;
          }
          const Mat& m = *legs[l];
          for (Index k = 0; k < m.rows(); ++k) {
            const Cyc& w = m(k, qd[l]);
            if (w.isZero()) continue;
            go(l + 1, flat * m.rows() + k, coeff * w);
          }
        }
      } rec{h, legs, qd, out, r};
      rec.go(0, 0, c);
    }
  }
  return out;
}

Mat leftMultMatrix(const HopfAlgebra& h, const Element& u) {
  const Index d = h.dim;
  Mat l = Mat::Zero(u.size(), u.size());
  Index pd[3];
  for (Index p = 0; p < u.coeffs.size(); ++p) {
    if (u.coeffs[p].isZero()) continue;
    splitIndex(p, d, u.rank, pd);
    Mat term = h.mult[static_cast<size_t>(pd[0])];
    for (int l2 = 1; l2 < u.rank; ++l2) term = kron(term, h.mult[static_cast<size_t>(pd[l2])]);
    l += u.coeffs[p] * term;
  }
  return l;
}

Element elemInverse(const HopfAlgebra& h, const Element& u) {
  Mat l = leftMultMatrix(h, u);
  Element one = unitTensor(h, u.rank);
  Mat x;
  try {
    x = solve(l, Mat(one.coeffs));
  } catch (const SingularError& e) {
    throw SingularError("element not invertible (rank defect " +
                            std::to_string(u.size() - e.rank()) + ")",
                        e.rank());
  }
  Element inv = u;
  inv.coeffs = x.col(0);
  if (elemMul(h, u, inv) != one || elemMul(h, inv, u) != one)
    throw SingularError("element not invertible (one-sided solution only)", rank(l));
  return inv;
}

Element embedLeg(const HopfAlgebra& h, const Element& u, Leg where) {
  if (u.rank != 2) throw Error("embedLeg: rank-2 element required");
  const Index d = h.dim;
  Element r = Element::zero(d, 3);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const Cyc& c = u.coeffs[idx2(d, i, j)];
      if (c.isZero()) continue;
      for (Index k = 0; k < d; ++k) {
        if (h.unit[k].isZero()) continue;
        Cyc w = c * h.unit[k];
        switch (where) {
          case Leg::leg12:
            r.coeffs[idx3(d, i, j, k)] += w;
            break;
          case Leg::leg13:
            r.coeffs[idx3(d, i, k, j)] += w;
            break;
          case Leg::leg23:
            r.coeffs[idx3(d, k, i, j)] += w;
            break;
        }
      }
    }
  return r;
}

Element coprodLeft(const HopfAlgebra& h, const Element& u) {
  if (u.rank != 2) throw Error("coprodLeft: rank-2 element required");
  const Index d = h.dim;
  Element r = Element::zero(d, 3);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const Cyc& c = u.coeffs[idx2(d, i, j)];
      if (c.isZero()) continue;
      for (Index p = 0; p < d * d; ++p)
        if (!h.comult(p, i).isZero()) r.coeffs[p * d + j] += c * h.comult(p, i);
    }
  return r;
}

Element coprodRight(const HopfAlgebra& h, const Element& u) {
  if (u.rank != 2) throw Error("coprodRight: rank-2 element required");
  const Index d = h.dim;
  Element r = Element::zero(d, 3);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const Cyc& c = u.coeffs[idx2(d, i, j)];
      if (c.isZero()) continue;
      for (Index p = 0; p < d * d; ++p)
        if (!h.comult(p, j).isZero()) r.coeffs[i * d * d + p] += c * h.comult(p, j);
    }
  return r;
}

Vec counitLeft(const HopfAlgebra& h, const Element& u) {
  if (u.rank != 2) throw Error("counitLeft: rank-2 element required");
  const Index d = h.dim;
  Vec r = Vec::Zero(d);
  for (Index i = 0; i < d; ++i) {
    if (h.counit(0, i).isZero()) continue;
    for (Index j = 0; j < d; ++j) r[j] += h.counit(0, i) * u.coeffs[idx2(d, i, j)];
  }
  return r;
}

Vec counitRight(const HopfAlgebra& h, const Element& u) {
  if (u.rank != 2) throw Error("counitRight: rank-2 element required");
  const Index d = h.dim;
  Vec r = Vec::Zero(d);
  for (Index j = 0; j < d; ++j) {
    if (h.counit(0, j).isZero()) continue;
    for (Index i = 0; i < d; ++i) r[i] += h.counit(0, j) * u.coeffs[idx2(d, i, j)];
  }
  return r;
}

Report verifyHopf(const HopfAlgebra& h) {
  Report rep;
  const Index d = h.dim;

  {
    bool ok = true;
    std::string wit;
    for (Index i = 0; i < d && ok; ++i)
      for (Index j = 0; j < d && ok; ++j) {
        Vec pij = h.basisProduct(i, j);
        for (Index k = 0; k < d && ok; ++k) {
          Vec lhs = rightMulBasis(h, pij, k);
          Vec rhs = h.mult[static_cast<size_t>(i)] * h.basisProduct(j, k);
          if (!matEq(lhs, rhs)) {
            ok = false;
            std::ostringstream os;
            os << "basis triple (" << i << "," << j << "," << k << "), "
               << diffWitness("product", lhs, rhs);
            wit = os.str();
          }
        }
      }
    rep.add("algebra-associativity", ok, wit);
  }

  {
    bool ok = true;
    std::string wit;
    for (Index i = 0; i < d && ok; ++i) {
      Vec e = basisVec(d, i);
      Vec l = mulVec(h, h.unit, e);
      Vec r = mulVec(h, e, h.unit);
      if (!matEq(l, e)) {
        ok = false;
        wit = "left unit at basis " + std::to_string(i) + ": " + diffWitness("1*e", l, e);
      } else if (!matEq(r, e)) {
        ok = false;
        wit = "right unit at basis " + std::to_string(i) + ": " + diffWitness("e*1", r, e);
      }
    }
    rep.add("algebra-unit", ok, wit);
  }

  {
    bool ok = true;
    std::string wit;
    for (Index i = 0; i < d && ok; ++i)
      for (Index j = 0; j < d && ok; ++j) {
        Element lhs = applyComult(h, h.basisProduct(i, j));
        Element rhs = elemMul(h, applyComult(h, basisVec(d, i)), applyComult(h, basisVec(d, j)));
        if (lhs != rhs) {
          ok = false;
          std::ostringstream os;
          os << "basis pair (" << i << "," << j << "), "
             << diffWitness("coproduct of product", lhs.coeffs, rhs.coeffs);
          wit = os.str();
        }
      }
    if (ok) {
      Element lhs = applyComult(h, h.unit);
      Element rhs = unitTensor(h, 2);
      if (lhs != rhs) {
        ok = false;
        wit = diffWitness("coproduct of unit", lhs.coeffs, rhs.coeffs);
      }
    }
    rep.add("comultiplication-algebra-map", ok, wit);
  }

  {
    bool ok = true;
    std::string wit;
    for (Index i = 0; i < d && ok; ++i)
      for (Index j = 0; j < d && ok; ++j) {
        Cyc lhs = counitOf(h, h.basisProduct(i, j));
        Cyc rhs = h.counit(0, i) * h.counit(0, j);
        if (lhs != rhs) {
          ok = false;
          std::ostringstream os;
          os << "basis pair (" << i << "," << j << "): counit of product " << lhs
             << " vs product of counits " << rhs;
          wit = os.str();
        }
      }
    if (ok && counitOf(h, h.unit) != Cyc(1)) {
      ok = false;
      wit = "counit of unit is " + counitOf(h, h.unit).str();
    }
    rep.add("counit-algebra-map", ok, wit);
  }

  {
    bool ok = true;
    std::string wit;
    for (Index i = 0; i < d && ok; ++i)
      for (Index j = 0; j < d && ok; ++j) {
        Vec lhs = h.antipode * h.basisProduct(i, j);
        Vec rhs = mulVec(h, h.antipode.col(j), h.antipode.col(i));
        if (!matEq(lhs, rhs)) {
          ok = false;
          std::ostringstream os;
          os << "basis pair (" << i << "," << j << "), "
             << diffWitness("S(e_i e_j) vs S(e_j)S(e_i)", lhs, rhs);
          wit = os.str();
        }
      }
    if (ok) {
      Vec su = h.antipode * h.unit;
      if (!matEq(su, h.unit)) {
        ok = false;
        wit = diffWitness("S(1) vs 1", su, h.unit);
      }
    }
    rep.add("antipode-antimultiplicative", ok, wit);
  }

  {
    bool ok = true;
    std::string wit;
    for (Index i = 0; i < d && ok; ++i) {
      Element di = applyComult(h, basisVec(d, i));
      Element lhs = coprodLeft(h, di);
      Element rhs = coprodRight(h, di);
      if (lhs != rhs) {
        ok = false;
        std::ostringstream os;
        os << "basis " << i << ", " << diffWitness("(Δ⊗id)Δ vs (id⊗Δ)Δ", lhs.coeffs, rhs.coeffs);
        wit = os.str();
      }
    }
    rep.add("coassociativity", ok, wit);
  }

  {
    bool ok = true;
    std::string wit;
    for (Index i = 0; i < d && ok; ++i) {
      Vec e = basisVec(d, i);
      Element di = applyComult(h, e);
      Vec l = counitLeft(h, di);
      Vec r = counitRight(h, di);
      if (!matEq(l, e)) {
        ok = false;
        wit = "basis " + std::to_string(i) + ", " + diffWitness("(ε⊗id)Δ vs id", l, e);
      } else if (!matEq(r, e)) {
        ok = false;
        wit = "basis " + std::to_string(i) + ", " + diffWitness("(id⊗ε)Δ vs id", r, e);
      }
    }
    rep.add("counit-law", ok, wit);
  }

  {
    bool ok = true;
    std::string wit;
    for (Index i = 0; i < d && ok; ++i) {
      Element di = applyComult(h, basisVec(d, i));
      Vec lhs1 = Vec::Zero(d), lhs2 = Vec::Zero(d);
      for (Index p = 0; p < d; ++p)
        for (Index q = 0; q < d; ++q) {
          const Cyc& c = di.coeffs[idx2(d, p, q)];
          if (c.isZero()) continue;
          lhs1 += c * mulVec(h, h.antipode.col(p), basisVec(d, q));
          lhs2 += c * mulVec(h, basisVec(d, p), h.antipode.col(q));
        }
      Vec rhs = h.counit(0, i) * h.unit;
      if (!matEq(lhs1, rhs)) {
        ok = false;
        wit = "basis " + std::to_string(i) + ", " + diffWitness("m(S⊗id)Δ vs ε·1", lhs1, rhs);
      } else if (!matEq(lhs2, rhs)) {
        ok = false;
        wit = "basis " + std::to_string(i) + ", " + diffWitness("m(id⊗S)Δ vs ε·1", lhs2, rhs);
      }
    }
    rep.add("antipode-law", ok, wit);
  }

  return rep;
}

bool isCocommutative(const HopfAlgebra& h) {
  const Index d = h.dim;
  for (Index i = 0; i < d; ++i)
    for (Index p = 0; p < d; ++p)
      for (Index q = 0; q < d; ++q)
        if (h.comult(idx2(d, p, q), i) != h.comult(idx2(d, q, p), i)) return false;
  return true;
}

bool isSemisimple(const HopfAlgebra& h) {
  const Index d = h.dim;
  Mat t(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      Cyc tr(0);
      const Mat& a = h.mult[static_cast<size_t>(i)];
      const Mat& b = h.mult[static_cast<size_t>(j)];
      for (Index k = 0; k < d; ++k)
        for (Index l = 0; l < d; ++l)
          if (!a(k, l).isZero() && !b(l, k).isZero()) tr += a(k, l) * b(l, k);
      t(i, j) = tr;
    }
  return rank(t) == d;
}

}  // namespace hopftwist
