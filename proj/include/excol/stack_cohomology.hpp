#pragma once

// Cohomology of line bundles on products of P1 and on projective
// spaces, exact and equivariant.  These are the primitives behind the
// orthogonality checks: RHom between pushforward bundles is computed
// on the quotient stack as SL2 invariants of a Kunneth product.

#include <map>
#include <vector>

#include "excol/marking.hpp"
#include "excol/sl2.hpp"

namespace excol {

using GradedDim = std::map<int, Int>;

// RGamma(P1, O(a)) with its SL2 action: V_a in degree 0 for a >= 0,
// nothing for a = -1, V_{-a-2} in degree 1 for a <= -2.
VirtualGradedRep p1_cohomology(int a);

// Kunneth product over the factors of (P1)^n; empty iff some exponent
// is -1.
VirtualGradedRep product_cohomology(const std::vector<int>& exponents);

// Graded dimensions of RHom(F_{from}, F_{to}) on the quotient stack
// [(P1)^n / SL2]: invariants of the exponent-difference Kunneth product
// tensored with both V_l factors.  Nonzero requires E_from contained in
// E_to, and then only degree 0 appears.
GradedDim stack_rhom(int n, const FLabel& from, const FLabel& to);

// For n even: the model of F_{l,E} agrees with the model of
// dual(F_{l,E^c}) twisted by F_{0,full}.  Checks exponent vectors and
// SL2 content of both sides.
bool dual_identity_check(int n, const FLabel& x);

// RGamma(P^m, O(d)): C(d+m,m) in degree 0 for d >= 0, C(-d-1,m) in
// degree m for d <= -m-1, zero otherwise.
GradedDim projective_space_cohomology(int m, int d);

// RHom between twisted structure sheaves of a boundary divisor
// isomorphic to P^m x P^m embedded with normal bundle O(-1,-1):
// RHom(O(-a,-b), O(-a2,-b2)) =
//   RGamma(O(a-a2, b-b2)) + RGamma(O(a-a2-1, b-b2-1)) shifted by one.
GradedDim boundary_sheaf_rhom(int m, int a, int b, int a2, int b2);

}  // namespace excol
