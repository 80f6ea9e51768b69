#pragma once

#include <random>

#include "hopftwist/hopf.hpp"

namespace hopftwist {

struct TwistData {
  Element value;    // J
  Element inverse;  // J^{-1}
  Report report;    // attached twist-axiom verification
};

/// Checks invertibility, the cocycle identity
/// (Δ⊗id)(J)(J⊗1) = (id⊗Δ)(J)(1⊗J) in A⊗A⊗A, and both counit conditions.
Report verifyTwist(const HopfAlgebra& h, const Element& j);

/// The twisted Hopf algebra (A, m, 1, Δ^J, ε, S^J) with Δ^J = J⁻¹ΔJ and
/// S^J = Q⁻¹SQ, Q = Σ J[i,j]·S(e_i)·e_j. Runs verifyTwist first and verifies
/// its own postcondition (the result passes verifyHopf).
HopfAlgebra twistHopf(const HopfAlgebra& h, const Element& j);

/// J21⁻¹·R·J; verified quasitriangular for the twisted algebra, and unitary
/// whenever R was.
Element twistR(const HopfAlgebra& h, const Element& r, const Element& j);

/// J^x = Δ(x)·J·(x⁻¹⊗x⁻¹) for invertible x with ε(x) = 1 (both checked).
TwistData gaugeTransform(const HopfAlgebra& h, const Element& j, const Vec& x);

/// Verifies on basis elements that a ↦ x·a·x⁻¹ is an isomorphism of Hopf
/// algebras A^J -> A^{J^x} carrying R^J to R^{J^x}. When r is null the
/// canonical triangular structure 1⊗1 is used for cocommutative hosts and the
/// R-transport sub-check is skipped otherwise. claimedJx, when given, is
/// verified in place of the computed gauge transform.
Report conjugationIsoCheck(const HopfAlgebra& h, const Element& j, const Vec& x,
                           const Element* r = nullptr, const Element* claimedJx = nullptr);

/// Canonical decomposition of a finite abelian group into cyclic factors and
/// the resulting enumeration of its character group. Generators are chosen
/// greedily (maximal order first, smallest index breaking ties); characters
/// are enumerated by exponent tuples (c1,…,ck) in row-major order, so
/// character t has value zeta_{orders[i]}^{tuple[i]} on generator i.
struct AbelianCharacters {
  std::vector<int> generators;              // indices into the group
  std::vector<int> orders;                  // orders of the generators
  long exponent = 1;                        // lcm of the orders
  std::vector<std::vector<int>> elemExp;    // exponent tuple of every element
  std::vector<std::vector<int>> charTuple;  // exponent tuple of every character
  std::vector<Vec> values;                  // values[t][g] = chi_t(g)
};

AbelianCharacters abelianCharacters(const Group& g);  // throws if not abelian

/// Orthogonal character idempotents e_chi = |H|⁻¹ Σ_h chi(h⁻¹) h of an
/// abelian subgroup, written in the coordinates of an ambient algebra of
/// dimension ambientDim through the embedding map.
std::vector<Vec> characterIdempotents(const Group& sub, const AbelianCharacters& ch,
                                      const std::vector<int>& embedding, Index ambientDim);

/// J = Σ beta(chi,psi) e_chi ⊗ e_psi over the characters of the abelian
/// subgroup spanned by subgroupElems; beta must be multiplicative in each
/// argument (checked). The twist axioms are re-verified and the report
/// attached rather than assumed.
TwistData bicharacterTwist(const Group& g, const std::vector<int>& subgroupElems, const Mat& beta);

}  // namespace hopftwist
