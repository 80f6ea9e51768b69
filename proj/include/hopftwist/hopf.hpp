#pragma once

#include <vector>

#include "hopftwist/element.hpp"
#include "hopftwist/group.hpp"
#include "hopftwist/report.hpp"

namespace hopftwist {

/// Hopf algebra on k^d given by structure constants. mult[i] is the matrix of
/// left multiplication by e_i, so (mult[i])(k, j) is the coefficient of e_k in
/// e_i·e_j. comult column i holds the big-endian coordinates of Δ(e_i);
/// antipode column i holds S(e_i).
struct HopfAlgebra {
  Index dim = 0;
  std::vector<Mat> mult;
  Vec unit;
  Mat comult;    // d² × d
  Mat counit;    // 1 × d
  Mat antipode;  // d × d

  Vec basisProduct(Index i, Index j) const { return mult[static_cast<size_t>(i)].col(j); }
};

HopfAlgebra groupAlgebra(const Group& g);

/// The 4-dimensional algebra on basis (1, a, x, ax) with a²=1, x²=0, ax=-xa,
/// Δ(a)=a⊗a, Δ(x)=x⊗1+a⊗x, ε(a)=1, ε(x)=0, S(a)=a, S(x)=-ax.
HopfAlgebra sweedlerAlgebra();

/// Checks, as exact identities on basis elements: associativity and unit,
/// Δ and ε algebra maps, S anti-multiplicative with S(1)=1, coassociativity,
/// the counit law, and the antipode law.
Report verifyHopf(const HopfAlgebra& h);

bool isCocommutative(const HopfAlgebra& h);
/// Nondegeneracy of the trace form of the left regular action (valid
/// semisimplicity criterion in characteristic 0).
bool isSemisimple(const HopfAlgebra& h);

Vec mulVec(const HopfAlgebra& h, const Vec& x, const Vec& y);
Cyc counitOf(const HopfAlgebra& h, const Vec& x);
Element applyComult(const HopfAlgebra& h, const Vec& x);  // Δ(x), rank 2

Element unitTensor(const HopfAlgebra& h, int rank);  // 1⊗…⊗1

/// Componentwise product in A^{⊗n}: (a⊗b)(c⊗d) = ac⊗bd, extended linearly.
Element elemMul(const HopfAlgebra& h, const Element& u, const Element& v);

/// Solves the exact linear system of left multiplication and confirms the
/// two-sided inverse; throws SingularError carrying the rank defect.
Element elemInverse(const HopfAlgebra& h, const Element& u);

/// Matrix of left multiplication by u on A^{⊗rank}.
Mat leftMultMatrix(const HopfAlgebra& h, const Element& u);

enum class Leg { leg12, leg13, leg23 };
/// Embed a rank-2 element into A⊗A⊗A, inserting the unit in the omitted slot.
Element embedLeg(const HopfAlgebra& h, const Element& u, Leg where);

Element coprodLeft(const HopfAlgebra& h, const Element& u);   // (Δ⊗id)(u)
Element coprodRight(const HopfAlgebra& h, const Element& u);  // (id⊗Δ)(u)
Vec counitLeft(const HopfAlgebra& h, const Element& u);       // (ε⊗id)(u)
Vec counitRight(const HopfAlgebra& h, const Element& u);      // (id⊗ε)(u)

}  // namespace hopftwist
