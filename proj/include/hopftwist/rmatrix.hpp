#pragma once

#include "hopftwist/hopf.hpp"

namespace hopftwist {

/// Checks invertibility, both comultiplication-compatibility identities
/// (Δ⊗id)(R) = R13·R23 and (id⊗Δ)(R) = R13·R12 — independently, even when R
/// is unitary — and the intertwining Δcop(a)·R = R·Δ(a) on every basis element.
Report verifyQuasitriangular(const HopfAlgebra& h, const Element& r);

/// True iff τ(R) is the two-sided inverse of R.
bool isTriangular(const HopfAlgebra& h, const Element& r);

/// u = Σ R[i,j]·S(e_j)·e_i for R = Σ R[i,j] e_i⊗e_j.
Vec drinfeldElement(const HopfAlgebra& h, const Element& r);

/// Always checks u·x·u⁻¹ = S²(x) on basis elements and Δ(u) = u⊗u. When the
/// algebra is semisimple and R is triangular, additionally checks that u is
/// central, fixed by S, and involutive; otherwise those entries are skipped.
Report verifyDrinfeldLaws(const HopfAlgebra& h, const Element& r);

/// (1⊗1 + 1⊗u + u⊗1 - u⊗u)/2 for an involutive grouplike u (both checked).
Element rU(const HopfAlgebra& h, const Vec& u);

struct CorrectedR {
  Element rTilde;
  Vec uTilde;
};

/// R̃ = R·R_u. Requires a semisimple host and triangular R; verifies its own
/// postcondition (Drinfeld element of R̃ is 1 and R̃ is triangular) and treats
/// a violation as a hard internal error.
CorrectedR correctR(const HopfAlgebra& h, const Element& r);

/// Full rank of the coefficient grid of R, i.e. R: A* -> A is an isomorphism.
bool isMinimal(const HopfAlgebra& h, const Element& r);

struct MinimalSubalgebra {
  std::vector<Vec> basis;  // reduced echelon basis of the span
  Report report;           // closure diagnostics: Δ-stability, S-stability, unit
};

/// Span of the left and right tensorands of R, closed under multiplication;
/// reports whether the result is Δ-stable and S-stable.
MinimalSubalgebra minimalSubalgebra(const HopfAlgebra& h, const Element& r);

}  // namespace hopftwist
