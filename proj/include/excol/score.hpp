#pragma once

// Score combinatorics for labels (l, E) on spaces with p = 2r heavy and
// q = 2s+1 light markings (and their one-more-light companions).  The
// quantity f and the derived bounds drive both membership criteria and
// the vanishing arguments; all half-integer comparisons are done on
// doubled values so everything stays in exact integers.

#include <string>
#include <vector>

#include "excol/marking.hpp"

namespace excol {

// 2 * f_{T,E,l} where f = |E cap T| - (|E| - l)/2.  Doubled so the
// value is integral even when |E| + l is odd.
inline int f_twice(Mask T, Mask E, int l) {
  return 2 * popcount(E & T) - popcount(E) + l;
}

// f as an exact rational, for callers that want the undoubled value.
Rat f_value(Mask T, Mask E, int l);

// 2 * alpha and 2 * m where alpha = max(0, -f), m = max(0, f).
inline int alpha_twice(Mask T, Mask E, int l) {
  const int f2 = f_twice(T, E, l);
  return f2 < 0 ? -f2 : 0;
}
inline int m_twice(Mask T, Mask E, int l) {
  const int f2 = f_twice(T, E, l);
  return f2 > 0 ? f2 : 0;
}

// S  = l + min(e_p, p - e_p) + min(e_q, q - e_q)
// S' = l + min(e_p, p - e_p) + min(e_q, q + 1 - e_q)
// The caller passes the q entering the formula; e_q counts all lights
// of E in whichever light universe the label lives in.
int score_S(int p, int q, int l, int e_p, int e_q);
int score_Sprime(int p, int q, int l, int e_p, int e_q);
int score_S(const MarkingSplit& s, const FLabel& x);

// Membership groups for labels with l >= 0 and l + |E| even.  Heavy
// count p = 2r throughout; q is the odd light count (groups 2A/2B are
// for the space with q+1 lights but their formulas use this same q).
struct GroupFlags {
  bool g1A = false;
  bool g1B = false;
  bool g2 = false;   // q lights
  bool g2A = false;  // q+1 lights
  bool g2B = false;  // q+1 lights
};

// q_odd is the odd parameter 2s+1; e_q counts lights of E in the
// universe the caller works in (q or q+1 lights).
GroupFlags classify_group(int p, int q_odd, int l, int e_p, int e_q);

enum class Lemma { bounds_plus, critical, critical_on_wall };

// Critical subsets per the characterization tables.
//
// For Lemma::critical (space with q+1 lights, T with |T_p| = r and
// |T_qt| = s+1): the sets T where 2f attains r+s, per the group row.
// For Lemma::critical_on_wall (space with q lights, y a light not in
// T, |T_p| = r, |T_q| = s): the sets where 2f attains r+s-1.
std::vector<Mask> critical_subsets(const MarkingSplit& space, const FLabel& x,
                                   const std::string& group, Lemma which,
                                   int y = -1);

// Exhaustive verification of the score bounds against brute force over
// all admissible T.  p even, q odd; labels run over l <= lmax and all
// E with parity, and all statements below are checked:
//   - the S' bound with both equality characterizations,
//   - the r+s bound with per-group criticality tables and the
//     complement bound with its strictness condition,
//   - the light-only corollary for the q+1 light space,
//   - the wall bound with its criticality table and the m bound,
//   - the half-split heavy bound,
//   - the light-only estimates for q and q+1 lights.
// Returns the number of counterexamples found (0 expected); the first
// few are described in *details if given.
long verify_score_lemmas(int p, int q, int lmax,
                         std::vector<std::string>* details = nullptr);

}  // namespace excol
