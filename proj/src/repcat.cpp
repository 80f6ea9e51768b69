#include "hopftwist/repcat.hpp"

#include <sstream>
#include <utility>

#include "hopftwist/twist.hpp"

namespace hopftwist {

namespace {

Vec basisVec(Index d, Index i) {
  Vec v = Vec::Zero(d);
  v[i] = Cyc(1);
  return v;
}

std::string spWitness(const char* what, const SpMat& lhs, const SpMat& rhs) {
  auto d = spFirstDiff(lhs, rhs);
  std::ostringstream os;
  os << what << ": entry (" << std::get<0>(*d) << "," << std::get<1>(*d)
     << ") differs by " << std::get<2>(*d);
  return os.str();
}

void verifyModuleAxioms(const HopfAlgebra& h, const Module& m) {
  SpMat unitAction = actOn(h.unit, m);
  if (!spEq(unitAction, spId(m.dim))) {
    auto d = spFirstDiff(unitAction, spId(m.dim));
    std::ostringstream os;
    os << "module: unit does not act as the identity, entry (" << std::get<0>(*d) << ","
       << std::get<1>(*d) << ") off by " << std::get<2>(*d);
    throw Error(os.str());
  }
  for (Index i = 0; i < h.dim; ++i)
    for (Index j = 0; j < h.dim; ++j) {
      SpMat lhs = m.action[static_cast<size_t>(i)] * m.action[static_cast<size_t>(j)];
      SpMat rhs = actOn(h.basisProduct(i, j), m);
      if (!spEq(lhs, rhs)) {
        std::ostringstream os;
        os << "module: action not multiplicative at basis pair (" << i << "," << j << "), "
           << spWitness("ρ(e_i)ρ(e_j) vs ρ(e_i·e_j)", lhs, rhs);
        throw Error(os.str());
      }
    }
}

}  // namespace

SpMat actOn(const Vec& u, const Module& x) {
  SpMat r(x.dim, x.dim);
  for (Index i = 0; i < u.size(); ++i)
    if (!u[i].isZero()) r = r + SpMat(u[i] * x.action[static_cast<size_t>(i)]);
  return r;
}

SpMat actOn(const Element& w, const Module& x, const Module& y) {
  if (w.rank != 2) throw Error("actOn: rank-2 element required");
  const Index d = w.dim;
  SpMat r(x.dim * y.dim, x.dim * y.dim);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const Cyc& c = w.coeffs[idx2(d, i, j)];
      if (c.isZero()) continue;
      r = r + SpMat(c * spKron(x.action[static_cast<size_t>(i)],
                               y.action[static_cast<size_t>(j)]));
    }
  return r;
}

Module moduleFromAction(const HopfAlgebra& h, std::vector<SpMat> action) {
  if (static_cast<Index>(action.size()) != h.dim)
    throw Error("module: need one action matrix per basis element");
  Module m;
  m.hostDim = h.dim;
  m.dim = action.empty() ? 0 : action[0].rows();
  for (const SpMat& a : action)
    if (a.rows() != m.dim || a.cols() != m.dim)
      throw Error("module: action matrices must be square of equal size");
  m.action = std::move(action);
  verifyModuleAxioms(h, m);
  return m;
}

Module moduleFromAction(const HopfAlgebra& h, const std::vector<Mat>& action) {
  std::vector<SpMat> sp;
  sp.reserve(action.size());
  for (const Mat& a : action) sp.push_back(toSparse(a));
  return moduleFromAction(h, std::move(sp));
}

Module trivialModule(const HopfAlgebra& h) {
  std::vector<SpMat> action;
  for (Index i = 0; i < h.dim; ++i) {
    Mat a(1, 1);
    a(0, 0) = h.counit(0, i);
    action.push_back(toSparse(a));
  }
  return moduleFromAction(h, std::move(action));
}

Module regularModule(const HopfAlgebra& h) {
  std::vector<SpMat> action;
  for (Index i = 0; i < h.dim; ++i) action.push_back(toSparse(h.mult[static_cast<size_t>(i)]));
  return moduleFromAction(h, std::move(action));
}

Module characterModule(const HopfAlgebra& h, const Vec& values) {
  if (values.size() != h.dim) throw Error("characterModule: one value per basis element required");
  std::vector<SpMat> action;
  for (Index i = 0; i < h.dim; ++i) {
    Mat a(1, 1);
    a(0, 0) = values[i];
    action.push_back(toSparse(a));
  }
  return moduleFromAction(h, std::move(action));
}

Module tensorModule(const HopfAlgebra& h, const Module& x, const Module& y) {
  const Index d = h.dim;
  std::vector<SpMat> action;
  action.reserve(static_cast<size_t>(d));
  for (Index i = 0; i < d; ++i) {
    Element di = applyComult(h, basisVec(d, i));
    action.push_back(actOn(di, x, y));
  }
  Module m;
  m.hostDim = d;
  m.dim = x.dim * y.dim;
  m.action = std::move(action);
  verifyModuleAxioms(h, m);
  return m;
}

Module dualModule(const HopfAlgebra& h, const Module& x) {
  const Index d = h.dim;
  std::vector<SpMat> action;
  action.reserve(static_cast<size_t>(d));
  for (Index i = 0; i < d; ++i) {
    SpMat a = actOn(Vec(h.antipode.col(i)), x);
    action.push_back(a.transpose());
  }
  Module m;
  m.hostDim = d;
  m.dim = x.dim;
  m.action = std::move(action);
  verifyModuleAxioms(h, m);
  return m;
}

EvCoev evCoev(const HopfAlgebra& h, const Module& x) {
  const Index m = x.dim;
  EvCoev out;
  {
    std::vector<Eigen::Triplet<Cyc>> tr;
    for (Index i = 0; i < m; ++i) tr.emplace_back(0, i * m + i, Cyc(1));
    out.ev = SpMat(1, m * m);
    out.ev.setFromTriplets(tr.begin(), tr.end());
  }
  {
    std::vector<Eigen::Triplet<Cyc>> tr;
    for (Index i = 0; i < m; ++i) tr.emplace_back(i * m + i, 0, Cyc(1));
    out.coev = SpMat(m * m, 1);
    out.coev.setFromTriplets(tr.begin(), tr.end());
  }
  Module xd = dualModule(h, x);
  Module dualThenX = tensorModule(h, xd, x);
  Module xThenDual = tensorModule(h, x, xd);
  {
    bool ok = true;
    std::string wit;
    for (Index a = 0; a < h.dim && ok; ++a) {
      SpMat lhs = out.ev * dualThenX.action[static_cast<size_t>(a)];
      SpMat rhs = h.counit(0, a) * out.ev;
      if (!spEq(lhs, rhs)) {
        ok = false;
        wit = "basis " + std::to_string(a) + ", " + spWitness("ev∘ρ vs ε·ev", lhs, rhs);
      }
    }
    out.report.add("ev-module-map", ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (Index a = 0; a < h.dim && ok; ++a) {
      SpMat lhs = xThenDual.action[static_cast<size_t>(a)] * out.coev;
      SpMat rhs = h.counit(0, a) * out.coev;
      if (!spEq(lhs, rhs)) {
        ok = false;
        wit = "basis " + std::to_string(a) + ", " + spWitness("ρ∘coev vs ε·coev", lhs, rhs);
      }
    }
    out.report.add("coev-module-map", ok, wit);
  }
  return out;
}

Braiding braiding(const HopfAlgebra& h, const Element& r, const Module& x, const Module& y) {
  Braiding out;
  out.map = spFlip(x.dim, y.dim) * actOn(r, x, y);
  Module xy = tensorModule(h, x, y);
  Module yx = tensorModule(h, y, x);
  bool ok = true;
  std::string wit;
  for (Index a = 0; a < h.dim && ok; ++a) {
    SpMat lhs = yx.action[static_cast<size_t>(a)] * out.map;
    SpMat rhs = out.map * xy.action[static_cast<size_t>(a)];
    if (!spEq(lhs, rhs)) {
      ok = false;
      wit = "basis " + std::to_string(a) + ", " + spWitness("ρ_{YX}∘c vs c∘ρ_{XY}", lhs, rhs);
    }
  }
  out.report.add("braiding-module-map", ok, wit);
  return out;
}

Report verifySymmetry(const HopfAlgebra& h, const Element& r, const Module& x, const Module& y,
                      const Module& z) {
  Report rep;
  Braiding cxy = braiding(h, r, x, y);
  Braiding cyx = braiding(h, r, y, x);
  Braiding cxz = braiding(h, r, x, z);
  Braiding czx = braiding(h, r, z, x);
  Braiding cyz = braiding(h, r, y, z);
  Braiding czy = braiding(h, r, z, y);
  rep.merge("xy", cxy.report);
  rep.merge("yx", cyx.report);
  rep.merge("xz", cxz.report);
  rep.merge("yz", cyz.report);

  auto unitarity = [&](const char* name, const Braiding& ab, const Braiding& ba, Index dim) {
    SpMat composite = ab.map * ba.map;
    bool ok = spEq(composite, spId(dim));
    rep.add(name, ok, ok ? "" : spWitness("c∘c vs id", composite, spId(dim)));
  };
  unitarity("unitarity-xy", cxy, cyx, y.dim * x.dim);
  unitarity("unitarity-xz", cxz, czx, z.dim * x.dim);
  unitarity("unitarity-yz", cyz, czy, z.dim * y.dim);

  Module xy = tensorModule(h, x, y);
  Module yz = tensorModule(h, y, z);
  {
    // c_{X⊗Y,Z} = (c_{X,Z}⊗id_Y)(id_X⊗c_{Y,Z})
    Braiding lhs = braiding(h, r, xy, z);
    SpMat rhs = spKron(cxz.map, spId(y.dim)) * spKron(spId(x.dim), cyz.map);
    bool ok = spEq(lhs.map, rhs);
    rep.add("hexagon-left", ok,
            ok ? "" : spWitness("c_{X⊗Y,Z} vs (c_{X,Z}⊗id)(id⊗c_{Y,Z})", lhs.map, rhs));
  }
  {
    // c_{X,Y⊗Z} = (id_Y⊗c_{X,Z})(c_{X,Y}⊗id_Z)
    Braiding lhs = braiding(h, r, x, yz);
    SpMat rhs = spKron(spId(y.dim), cxz.map) * spKron(cxy.map, spId(z.dim));
    bool ok = spEq(lhs.map, rhs);
    rep.add("hexagon-right", ok,
            ok ? "" : spWitness("c_{X,Y⊗Z} vs (id⊗c_{X,Z})(c_{X,Y}⊗id)", lhs.map, rhs));
  }
  return rep;
}

Cyc categoricalDimension(const HopfAlgebra& h, const Element& r, const Module& x) {
  EvCoev ec = evCoev(h, x);
  Module xd = dualModule(h, x);
  Braiding c = braiding(h, r, x, xd);
  SpMat loop = ec.ev * (c.map * ec.coev);
  Cyc viaLoop(0);
  for (Index k = 0; k < loop.outerSize(); ++k)
    for (SpMat::InnerIterator it(loop, k); it; ++it) viaLoop += it.value();

  Vec u = drinfeldElement(h, r);
  Cyc viaTrace = spTrace(actOn(u, x));

  if (viaLoop != viaTrace) {
    std::ostringstream os;
    os << "categoricalDimension: the braided loop gives " << viaLoop
       << " but the trace of the Drinfeld element gives " << viaTrace;
    throw std::logic_error(os.str());
  }
  return viaTrace;
}

Report verifyTwistEquivalence(const HopfAlgebra& h, const Element& r, const Element& j,
                              const Module& x, const Module& y, const Module& z) {
  Report rep;
  // Everything below needs only invertibility of J, never the twist axioms:
  // a corrupted J must surface as failing squares, not as a thrown error.
  Element jinv, j21inv;
  try {
    jinv = elemInverse(h, j);
    j21inv = elemInverse(h, flip12(j));
    rep.add("invertible", true);
  } catch (const SingularError& e) {
    rep.add("invertible", false, e.what());
    for (const char* name : {"j-intertwines", "cocycle-square", "unit-square-left",
                             "unit-square-right", "symmetry-square-xy", "symmetry-square-xz",
                             "symmetry-square-yz"})
      rep.addSkipped(name);
    return rep;
  }
  Element rj = elemMul(h, elemMul(h, j21inv, r), j);

  auto jmap = [&](const Module& a, const Module& b) { return actOn(j, a, b); };

  {
    // tensor-structure maps are morphisms from the twisted tensor product
    // (action through J⁻¹ΔJ) to the plain one
    SpMat jxy = jmap(x, y);
    bool ok = true;
    std::string wit;
    for (Index a = 0; a < h.dim && ok; ++a) {
      Element da = applyComult(h, basisVec(h.dim, a));
      Element daTwisted = elemMul(h, elemMul(h, jinv, da), j);
      SpMat lhs = actOn(da, x, y) * jxy;
      SpMat rhs = jxy * actOn(daTwisted, x, y);
      if (!spEq(lhs, rhs)) {
        ok = false;
        wit = "basis " + std::to_string(a) + ", " + spWitness("ρ∘J vs J∘ρ'", lhs, rhs);
      }
    }
    rep.add("j-intertwines", ok, wit);
  }
  {
    // associativity square with trivial associators
    Module yz = tensorModule(h, y, z);
    Module xy = tensorModule(h, x, y);
    SpMat lhs = jmap(x, yz) * spKron(spId(x.dim), jmap(y, z));
    SpMat rhs = jmap(xy, z) * spKron(jmap(x, y), spId(z.dim));
    bool ok = spEq(lhs, rhs);
    rep.add("cocycle-square", ok,
            ok ? "" : spWitness("J_{X,Y⊗Z}(id⊗J_{Y,Z}) vs J_{X⊗Y,Z}(J_{X,Y}⊗id)", lhs, rhs));
  }
  {
    // unit squares: the trivial module absorbs J on either side
    Module t = trivialModule(h);
    SpMat lhs = jmap(t, x);
    bool okL = spEq(lhs, spId(x.dim));
    rep.add("unit-square-left", okL, okL ? "" : spWitness("J_{1,X} vs id", lhs, spId(x.dim)));
    SpMat rhs = jmap(x, t);
    bool okR = spEq(rhs, spId(x.dim));
    rep.add("unit-square-right", okR, okR ? "" : spWitness("J_{X,1} vs id", rhs, spId(x.dim)));
  }
  {
    // symmetry squares: J carries the braiding of R^J = J21⁻¹RJ to that of R
    for (auto [a, b, name] :
         {std::tuple<const Module*, const Module*, const char*>{&x, &y, "symmetry-square-xy"},
          {&x, &z, "symmetry-square-xz"},
          {&y, &z, "symmetry-square-yz"}}) {
      SpMat plain = spFlip(a->dim, b->dim) * actOn(r, *a, *b);
      SpMat twisted = spFlip(a->dim, b->dim) * actOn(rj, *a, *b);
      SpMat lhs = jmap(*b, *a) * twisted;
      SpMat rhs = plain * jmap(*a, *b);
      bool ok = spEq(lhs, rhs);
      rep.add(name, ok, ok ? "" : spWitness("J_{Y,X}∘c' vs c∘J_{X,Y}", lhs, rhs));
    }
  }
  return rep;
}

CharTable makeCharTable(const Group& g, std::vector<Vec> rows) {
  const int n = g.order();
  CharTable t;
  for (const Vec& row : rows)
    if (row.size() != n) throw Error("character table: each row needs one value per element");
  for (size_t s = 0; s < rows.size(); ++s)
    for (size_t w = 0; w < rows.size(); ++w) {
      Cyc sum(0);
      for (int e = 0; e < n; ++e) sum += rows[s][e] * rows[w][g.inverse(e)];
      Cyc expected = (s == w) ? Cyc(n) : Cyc(0);
      if (sum != expected) {
        std::ostringstream os;
        os << "character table: rows " << s << " and " << w
           << " violate orthogonality, inner product " << sum << "/" << n;
        throw Error(os.str());
      }
    }
  t.degrees.reserve(rows.size());
  for (const Vec& row : rows) t.degrees.push_back(row[0]);
  t.rows = std::move(rows);
  return t;
}

std::vector<Vec> centralIdempotents(const Group& g, const CharTable& table) {
  const int n = g.order();
  HopfAlgebra h = groupAlgebra(g);
  std::vector<Vec> idems;
  for (size_t s = 0; s < table.rows.size(); ++s) {
    Vec e = Vec::Zero(n);
    Cyc norm = table.degrees[s] * Cyc(mpq_class(1, n));
    for (int a = 0; a < n; ++a) e[a] = norm * table.rows[s][g.inverse(a)];
    idems.push_back(std::move(e));
  }
  Vec sum = Vec::Zero(n);
  for (size_t s = 0; s < idems.size(); ++s) {
    sum += idems[s];
    for (size_t w = 0; w < idems.size(); ++w) {
      Vec prod = mulVec(h, idems[s], idems[w]);
      Vec expected = (s == w) ? idems[s] : Vec(Vec::Zero(n));
      if (!matEq(prod, expected))
        throw Error("central idempotents: blocks " + std::to_string(s) + " and " +
                    std::to_string(w) + " are not orthogonal idempotents");
    }
    for (int a = 0; a < n; ++a) {
      Vec lhs = mulVec(h, idems[s], basisVec(n, a));
      Vec rhs = mulVec(h, basisVec(n, a), idems[s]);
      if (!matEq(lhs, rhs))
        throw Error("central idempotents: block " + std::to_string(s) +
                    " does not commute with basis element " + std::to_string(a));
    }
  }
  if (!matEq(sum, h.unit))
    throw Error("central idempotents: blocks do not sum to 1 (table may be incomplete)");
  return idems;
}

std::vector<ParityBlock> paritySplit(const HopfAlgebra& h, const Element& r,
                                     const std::vector<Vec>& idempotents) {
  Vec u = drinfeldElement(h, r);
  {
    Vec sq = mulVec(h, u, u);
    if (!matEq(sq, h.unit)) throw Error("paritySplit: the Drinfeld element is not involutive");
    for (Index i = 0; i < h.dim; ++i) {
      Vec lhs = mulVec(h, u, basisVec(h.dim, i));
      Vec rhs = mulVec(h, basisVec(h.dim, i), u);
      if (!matEq(lhs, rhs)) throw Error("paritySplit: the Drinfeld element is not central");
    }
  }
  std::vector<ParityBlock> blocks;
  for (size_t s = 0; s < idempotents.size(); ++s) {
    const Vec& e = idempotents[s];
    Vec ue = mulVec(h, u, e);
    ParityBlock b;
    b.idempotent = e;
    if (matEq(ue, e)) {
      b.parity = 0;
    } else if (matEq(ue, Vec(-e))) {
      b.parity = 1;
    } else {
      throw Error("paritySplit: the Drinfeld element does not act as ±1 on block " +
                  std::to_string(s));
    }
    blocks.push_back(std::move(b));
  }

  // blockwise sign-corrected R must coincide with R·R_u
  Element blockwise = Element::zero(h.dim, 2);
  for (const ParityBlock& v : blocks)
    for (const ParityBlock& w : blocks) {
      Cyc sign = (v.parity == 1 && w.parity == 1) ? Cyc(-1) : Cyc(1);
      Element block = elemMul(h, outer(Element::fromVec(v.idempotent),
                                       Element::fromVec(w.idempotent)),
                              r);
      blockwise = blockwise + sign * block;
    }
  Element viaRu = elemMul(h, r, rU(h, u));
  if (blockwise != viaRu) {
    std::ostringstream os;
    os << "paritySplit: blockwise sign correction " << str(blockwise)
       << " does not equal R·R_u = " << str(viaRu);
    throw std::logic_error(os.str());
  }
  return blocks;
}

}  // namespace hopftwist
