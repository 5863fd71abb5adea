#pragma once

// Window calculus for the GIT presentations.  Weight data fixes a
// linearization on (P1)^n; one-parameter destabilizing subgroups are
// indexed by subsets K of markings with weight sum above 1, and each
// carries the width eta_K = 2(|K|-1).  A set of labels is verified
// exceptional when, stratum by stratum, the spread of restricted
// weights stays below the width.

#include <optional>
#include <string>
#include <vector>

#include "excol/marking.hpp"

namespace excol {

// Marking weights, total 2, generic (no subset sums to 1):
//   q = 0, p odd:        a = 2/p
//   q > 0, p odd:        a = 2/p - eps,  b = p*eps/q
//   q odd, p even = 2r:  a = 1/r - eps,  b = 2r*eps/q
std::vector<Rat> marking_weights(int p, int q);

// True when the marking-count pair (k_p, k_q) of a subset is unstable,
// i.e. its weight sum exceeds 1.  Closed combinatorial form, tested
// against exact rational sums.
bool unstable_type(int p, int q, int k_p, int k_q);

// All unstable subsets as masks (exponential; intended for n <= 14).
std::vector<Mask> enumerate_strata(const MarkingSplit& space);

// Restriction weights of F_{l,E} at the fixed point of the stratum K:
// an arithmetic progression from -l + d to l + d with step 2, where
// d = |E \ K| - |E cap K|.
struct WeightInterval {
  int bottom = 0;
  int top = 0;
};
WeightInterval fixed_point_weights(const MarkingSplit& space, const FLabel& x,
                                   Mask K);

struct WindowWitness {
  int k_p = 0, k_q = 0;
  int spread = 0;
  int width = 0;
  std::string describe() const;
};

// Window feasibility for a set of labels: for every unstable type, the
// maximal top minus the minimal bottom over the labels must be < eta.
// Returns a witness for the first violated type, or nullopt when
// feasible.
std::optional<WindowWitness> window_obstruction(
    const MarkingSplit& space, const std::vector<FLabel>& labels);

inline bool window_feasible(const MarkingSplit& space,
                            const std::vector<FLabel>& labels) {
  return !window_obstruction(space, labels).has_value();
}

// Pairwise closed form for q = 0, no stratum enumeration.  The worst
// spread over size-k strata is max(2 l1, 2 l2, cross(x,y), cross(y,x))
// with cross(u,v) = l_u + l_v + e_u - e_v
//   + 2 (min(|E_v \ E_u|, k) - max(0, k - n + |E_u \ E_v|));
// feasible iff the spread stays below 2(k-1) for every unstable k.
bool window_feasible_pairwise(int n, const FLabel& x, const FLabel& y);

// A one-parameter-subgroup weight bound: on every stratum of the given
// problem the restriction weight of each object must be > -eta.  The
// weight of a line bundle with exponents c at the fixed point of K is
// sum_{i in K} c_i - sum_{i not in K} c_i.
struct Stratum {
  Mask K = 0;
  int eta = 0;
};

// Strata of an auxiliary weighted problem (weights need not come from
// marking_weights).
std::vector<Stratum> strata_of(const std::vector<Rat>& weights);

int fixed_point_weight(const std::vector<int>& exponents, Mask K);

bool teleman_ok(const std::vector<Stratum>& strata,
                const std::vector<int>& exponents);

// Exponents that grow linearly in a twist parameter N: c_i = base_i +
// slope_i * N.  Feasible for all large N iff on each stratum the weight
// slope is positive, or zero with constant part > -eta.  n0_hint gives
// a concrete N at which numeric evaluations are expected to have
// stabilized.
struct DevilVerdict {
  bool ok = false;
  long n0 = 0;
};

DevilVerdict devil_twist(const std::vector<Stratum>& strata,
                         const std::vector<int>& base,
                         const std::vector<int>& slope, long n0_hint);

}  // namespace excol
