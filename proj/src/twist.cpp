#include "hopftwist/twist.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "hopftwist/rmatrix.hpp"

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

Report verifyTwist(const HopfAlgebra& h, const Element& j) {
  if (j.rank != 2 || j.dim != h.dim) throw Error("verifyTwist: rank-2 element over the host required");
  Report rep;

  try {
    elemInverse(h, j);
    rep.add("invertible", true);
  } catch (const SingularError& e) {
    rep.add("invertible", false, e.what());
  }

  {
    Element lhs = elemMul(h, coprodLeft(h, j), embedLeg(h, j, Leg::leg12));
    Element rhs = elemMul(h, coprodRight(h, j), embedLeg(h, j, Leg::leg23));
    bool ok = (lhs == rhs);
    rep.add("cocycle", ok,
            ok ? "" : elemWitness("(D(x)id)(J)(J(x)1) vs (id(x)D)(J)(1(x)J)", lhs, rhs));
  }
  {
    Vec lhs = counitLeft(h, j);
    bool ok = matEq(lhs, h.unit);
    rep.add("counit-left", ok, ok ? "" : vecWitness("(eps(x)id)(J) vs 1", lhs, h.unit));
  }
  {
    Vec rhs = counitRight(h, j);
    bool ok = matEq(rhs, h.unit);
    rep.add("counit-right", ok, ok ? "" : vecWitness("(id(x)eps)(J) vs 1", rhs, h.unit));
  }
  return rep;
}

HopfAlgebra twistHopf(const HopfAlgebra& h, const Element& j) {
  Report tw = verifyTwist(h, j);
  if (!tw.pass()) {
    const Check* f = tw.firstFailure();
    throw Error("twistHopf: J is not a twist (" + f->name + ": " + f->witness + ")");
  }
  const Index d = h.dim;
  Element jinv = elemInverse(h, j);

  HopfAlgebra out;
  out.dim = d;
  out.mult = h.mult;
  out.unit = h.unit;
  out.counit = h.counit;
  out.comult = Mat::Zero(d * d, d);
  for (Index i = 0; i < d; ++i) {
    Element di = applyComult(h, basisVec(d, i));
    Element twisted = elemMul(h, elemMul(h, jinv, di), j);
    out.comult.col(i) = twisted.coeffs;
  }

  // Q = m(S⊗id)(J) = Σ J[i,j]·S(e_i)·e_j
  Vec q = Vec::Zero(d);
  for (Index i = 0; i < d; ++i)
    for (Index jj = 0; jj < d; ++jj) {
      const Cyc& c = j.coeffs[idx2(d, i, jj)];
      if (c.isZero()) continue;
      q += c * mulVec(h, h.antipode.col(i), basisVec(d, jj));
    }
  Vec qinv;
  try {
    qinv = elemInverse(h, Element::fromVec(q)).toVec();
  } catch (const SingularError&) {
    throw std::logic_error("twistHopf: Q = m(S(x)id)(J) is singular for a verified twist, Q = " +
                           str(q));
  }
  out.antipode = Mat::Zero(d, d);
  for (Index i = 0; i < d; ++i)
    out.antipode.col(i) = mulVec(h, mulVec(h, qinv, h.antipode.col(i)), q);

  Report hres = verifyHopf(out);
  if (!hres.pass()) {
    const Check* f = hres.firstFailure();
    throw std::logic_error("twistHopf: twisted structure fails the Hopf axioms (" + f->name +
                           ": " + f->witness + ")");
  }
  return out;
}

Element twistR(const HopfAlgebra& h, const Element& r, const Element& j) {
  Report tw = verifyTwist(h, j);
  if (!tw.pass()) {
    const Check* f = tw.firstFailure();
    throw Error("twistR: J is not a twist (" + f->name + ": " + f->witness + ")");
  }
  Report qt = verifyQuasitriangular(h, r);
  if (!qt.pass()) {
    const Check* f = qt.firstFailure();
    throw Error("twistR: R is not quasitriangular (" + f->name + ": " + f->witness + ")");
  }
  Element j21inv = elemInverse(h, flip12(j));
  Element rj = elemMul(h, elemMul(h, j21inv, r), j);

  HopfAlgebra twisted = twistHopf(h, j);
  Report qt2 = verifyQuasitriangular(twisted, rj);
  if (!qt2.pass()) {
    const Check* f = qt2.firstFailure();
    throw std::logic_error("twistR: twisted R fails quasitriangularity (" + f->name + ": " +
                           f->witness + ")");
  }
  if (isTriangular(h, r) && !isTriangular(twisted, rj))
    throw std::logic_error("twistR: unitarity was not preserved by the twist");
  return rj;
}

TwistData gaugeTransform(const HopfAlgebra& h, const Element& j, const Vec& x) {
  Cyc eps = counitOf(h, x);
  if (eps != Cyc(1))
    throw Error("gaugeTransform: counit of x must be 1, got " + eps.str());
  Vec xinv;
  try {
    xinv = elemInverse(h, Element::fromVec(x)).toVec();
  } catch (const SingularError& e) {
    throw Error(std::string("gaugeTransform: x is not invertible (") + e.what() + ")");
  }
  Element dx = applyComult(h, x);
  Element jx = elemMul(h, elemMul(h, dx, j),
                       outer(Element::fromVec(xinv), Element::fromVec(xinv)));
  TwistData out;
  out.value = jx;
  out.report = verifyTwist(h, jx);
  if (!out.report.pass()) {
    const Check* f = out.report.firstFailure();
    throw std::logic_error("gaugeTransform: J^x fails the twist axioms (" + f->name + ": " +
                           f->witness + ")");
  }
  out.inverse = elemInverse(h, jx);
  return out;
}

Report conjugationIsoCheck(const HopfAlgebra& h, const Element& j, const Vec& x,
                           const Element* r, const Element* claimedJx) {
  Report rep;
  const Index d = h.dim;

  Cyc eps = counitOf(h, x);
  if (eps != Cyc(1)) throw Error("conjugationIsoCheck: counit of x must be 1, got " + eps.str());
  Vec xinv;
  try {
    xinv = elemInverse(h, Element::fromVec(x)).toVec();
  } catch (const SingularError& e) {
    throw Error(std::string("conjugationIsoCheck: x is not invertible (") + e.what() + ")");
  }

  HopfAlgebra hj = twistHopf(h, j);
  TwistData gauge = gaugeTransform(h, j, x);
  const Element& jx = claimedJx ? *claimedJx : gauge.value;
  if (claimedJx) {
    Report tw = verifyTwist(h, *claimedJx);
    rep.merge("claimed-twist", tw);
    if (!tw.pass()) {
      for (const char* name : {"algebra-map", "preserves-unit", "intertwines-comult",
                               "preserves-counit", "intertwines-antipodes", "carries-r"})
        rep.addSkipped(name);
      return rep;
    }
  }
  HopfAlgebra hjx = twistHopf(h, jx);

  auto phi = [&](const Vec& v) { return mulVec(h, mulVec(h, x, v), xinv); };
  auto phi2 = [&](const Element& w) {
    Element xx = outer(Element::fromVec(x), Element::fromVec(x));
    Element xxInv = outer(Element::fromVec(xinv), Element::fromVec(xinv));
    return elemMul(h, elemMul(h, xx, w), xxInv);
  };

  {
    bool ok = true;
    std::string wit;
    for (Index i = 0; i < d && ok; ++i)
      for (Index k = 0; k < d && ok; ++k) {
        Vec lhs = phi(h.basisProduct(i, k));
        Vec rhs = mulVec(h, phi(basisVec(d, i)), phi(basisVec(d, k)));
        if (!matEq(lhs, rhs)) {
          ok = false;
          wit = "basis pair (" + std::to_string(i) + "," + std::to_string(k) + "), " +
                vecWitness("phi(ab) vs phi(a)phi(b)", lhs, rhs);
        }
      }
    rep.add("algebra-map", ok, wit);
  }
  {
    Vec pu = phi(h.unit);
    bool ok = matEq(pu, h.unit);
    rep.add("preserves-unit", ok, ok ? "" : vecWitness("phi(1) vs 1", pu, h.unit));
  }
  {
    bool ok = true;
    std::string wit;
    for (Index i = 0; i < d && ok; ++i) {
      Element lhs = applyComult(hjx, phi(basisVec(d, i)));
      Element rhs = phi2(applyComult(hj, basisVec(d, i)));
      if (lhs != rhs) {
        ok = false;
        wit = "basis " + std::to_string(i) + ", " +
              elemWitness("D^{J^x}(phi(a)) vs (phi(x)phi)(D^J(a))", lhs, rhs);
      }
    }
    rep.add("intertwines-comult", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (Index i = 0; i < d && ok; ++i) {
      Cyc lhs = counitOf(h, phi(basisVec(d, i)));
      Cyc rhs = h.counit(0, i);
      if (lhs != rhs) {
        ok = false;
        wit = "basis " + std::to_string(i) + ": eps(phi(a)) = " + lhs.str() + ", eps(a) = " +
              rhs.str();
      }
    }
    rep.add("preserves-counit", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (Index i = 0; i < d && ok; ++i) {
      Vec lhs = hjx.antipode * phi(basisVec(d, i));
      Vec rhs = phi(hj.antipode.col(i));
      if (!matEq(lhs, rhs)) {
        ok = false;
        wit = "basis " + std::to_string(i) + ", " +
              vecWitness("S^{J^x}(phi(a)) vs phi(S^J(a))", lhs, rhs);
      }
    }
    rep.add("intertwines-antipodes", ok, wit);
  }
  {
    Element canonical = unitTensor(h, 2);
    const Element* rr = r;
    if (!rr && isCocommutative(h)) rr = &canonical;
    if (rr) {
      Element rj = twistR(h, *rr, j);
      Element rjx = twistR(h, *rr, jx);
      Element lhs = phi2(rj);
      bool ok = (lhs == rjx);
      rep.add("carries-r", ok,
              ok ? "" : elemWitness("(phi(x)phi)(R^J) vs R^{J^x}", lhs, rjx));
    } else {
      rep.addSkipped("carries-r");
    }
  }
  return rep;
}

namespace {

// Direct-product decomposition of a finite abelian group by greedy choice of
// generators (maximal order first) with backtracking.
bool extendDecomposition(const Group& g, std::vector<int>& gens, std::vector<int>& orders,
                         std::set<int>& span) {
  if (static_cast<int>(span.size()) == g.order()) return true;
  std::vector<int> candidates;
  for (int a = 1; a < g.order(); ++a)
    if (!span.count(a)) candidates.push_back(a);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](int a, int b) { return g.elementOrder(a) > g.elementOrder(b); });
  for (int c : candidates) {
    const int ord = g.elementOrder(c);
    std::set<int> bigger;
    int p = 0;
    bool direct = true;
    for (int e = 0; e < ord && direct; ++e) {
      for (int s : span) {
        if (!bigger.insert(g.mul(s, p)).second) direct = false;
      }
      p = g.mul(p, c);
    }
    if (!direct || static_cast<int>(bigger.size()) != static_cast<int>(span.size()) * ord)
      continue;
    gens.push_back(c);
    orders.push_back(ord);
    std::set<int> saved = std::move(span);
    span = std::move(bigger);
    if (extendDecomposition(g, gens, orders, span)) return true;
    span = std::move(saved);
    gens.pop_back();
    orders.pop_back();
  }
  return false;
}

}  // namespace

AbelianCharacters abelianCharacters(const Group& g) {
  if (!g.isAbelian()) {
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        if (g.mul(a, b) != g.mul(b, a))
          throw Error("abelianCharacters: group is not abelian (elements " + std::to_string(a) +
                      " and " + std::to_string(b) + " do not commute)");
  }
  AbelianCharacters out;
  std::set<int> span{0};
  if (!extendDecomposition(g, out.generators, out.orders, span))
    throw std::logic_error("abelianCharacters: decomposition failed on an abelian group");
  const int k = static_cast<int>(out.generators.size());
  out.exponent = 1;
  for (int o : out.orders) out.exponent = std::lcm(out.exponent, static_cast<long>(o));

  const int n = g.order();
  out.elemExp.assign(static_cast<size_t>(n), {});
  std::vector<int> tuple(static_cast<size_t>(k), 0);
  for (;;) {
    int elem = 0;
    for (int i = 0; i < k; ++i) {
      int p = 0;  // generator^tuple[i]
      for (int e = 0; e < tuple[static_cast<size_t>(i)]; ++e)
        p = g.mul(p, out.generators[static_cast<size_t>(i)]);
      elem = g.mul(elem, p);
    }
    out.elemExp[static_cast<size_t>(elem)] = tuple;
    int i = k - 1;
    while (i >= 0 && ++tuple[static_cast<size_t>(i)] == out.orders[static_cast<size_t>(i)]) {
      tuple[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }

  // characters in row-major order over the exponent tuples
  std::vector<int> ct(static_cast<size_t>(k), 0);
  for (;;) {
    Vec vals(n);
    for (int e = 0; e < n; ++e) {
      Cyc v(1);
      for (int i = 0; i < k; ++i)
        v *= Cyc::rootOfUnity(out.orders[static_cast<size_t>(i)],
                              ct[static_cast<size_t>(i)] *
                                  out.elemExp[static_cast<size_t>(e)][static_cast<size_t>(i)]);
      vals[e] = v;
    }
    out.charTuple.push_back(ct);
    out.values.push_back(std::move(vals));
    int i = k - 1;
    while (i >= 0 && ++ct[static_cast<size_t>(i)] == out.orders[static_cast<size_t>(i)]) {
      ct[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

std::vector<Vec> characterIdempotents(const Group& sub, const AbelianCharacters& ch,
                                      const std::vector<int>& embedding, Index ambientDim) {
  const int m = sub.order();
  Cyc norm = Cyc(mpq_class(1, m));
  std::vector<Vec> idems;
  for (const Vec& chi : ch.values) {
    Vec e = Vec::Zero(ambientDim);
    for (int hh = 0; hh < m; ++hh) {
      // chi(h)^{-1} = chi(h^{-1}) — read off the value at the inverse element
      e[embedding[static_cast<size_t>(hh)]] += norm * chi[sub.inverse(hh)];
    }
    idems.push_back(std::move(e));
  }
  return idems;
}

TwistData bicharacterTwist(const Group& g, const std::vector<int>& subgroupElems,
                           const Mat& beta) {
  auto [sub, embedding] = subgroupFromElements(g, subgroupElems);
  AbelianCharacters ch = abelianCharacters(sub);
  const int m = sub.order();
  if (beta.rows() != m || beta.cols() != m)
    throw Error("bicharacterTwist: beta must be " + std::to_string(m) + "x" + std::to_string(m) +
                " over the character group");

  const int k = static_cast<int>(ch.orders.size());
  auto charIndex = [&](const std::vector<int>& tuple) {
    int idx = 0;
    for (int i = 0; i < k; ++i) idx = idx * ch.orders[static_cast<size_t>(i)] + tuple[static_cast<size_t>(i)];
    return idx;
  };
  auto charProduct = [&](int s, int t) {
    std::vector<int> tuple(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
      tuple[static_cast<size_t>(i)] =
          (ch.charTuple[static_cast<size_t>(s)][static_cast<size_t>(i)] +
           ch.charTuple[static_cast<size_t>(t)][static_cast<size_t>(i)]) %
          ch.orders[static_cast<size_t>(i)];
    return charIndex(tuple);
  };
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t)
      for (int w = 0; w < m; ++w) {
        if (beta(charProduct(s, t), w) != beta(s, w) * beta(t, w))
          throw Error("bicharacterTwist: beta is not multiplicative in the first argument at (" +
                      std::to_string(s) + "," + std::to_string(t) + ";" + std::to_string(w) + ")");
        if (beta(w, charProduct(s, t)) != beta(w, s) * beta(w, t))
          throw Error("bicharacterTwist: beta is not multiplicative in the second argument at (" +
                      std::to_string(w) + ";" + std::to_string(s) + "," + std::to_string(t) + ")");
      }

  HopfAlgebra h = groupAlgebra(g);
  std::vector<Vec> idems = characterIdempotents(sub, ch, embedding, h.dim);
  Element j = Element::zero(h.dim, 2);
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) {
      if (beta(s, t).isZero()) continue;
      j = j + beta(s, t) * outer(Element::fromVec(idems[static_cast<size_t>(s)]),
                                 Element::fromVec(idems[static_cast<size_t>(t)]));
    }

  TwistData out;
  out.value = j;
  out.report = verifyTwist(h, j);
  if (out.report.pass()) out.inverse = elemInverse(h, j);
  return out;
}

}  // namespace hopftwist
