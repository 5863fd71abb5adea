#pragma once

// Pairwise exceptionality verification.  Every ordered pair of objects
// is dispatched to the cheapest method that decides it:
//
//  - "window+stack": the pair fits a common weight window (checked per
//    unstable stratum), so morphism spaces equal graded invariants of
//    the ambient product cohomology.
//  - "block-orthogonality": a structural vanishing forced by light-set
//    containment failure; the invariant computation confirms zero.
//  - "torsion-case-1..4": pairs involving torsion sheaves reduce to an
//    auxiliary quotient of the support locus; the reduction is
//    sanctioned by a Teleman-type bound on the twisted problem and then
//    evaluated at several large twists that must agree.
//  - "boundary-koszul": boundary pairs on one divisor reduce to a
//    product of projective spaces.
//  - "disjoint-support": the two objects live on disjoint loci.
//
// Statuses: ok (expected value confirmed), fail (a required vanishing
// or window broke, witness recorded), skipped-expected (pair class
// deliberately out of scope), inapplicable (no method decides the
// pair).  Backward pairs must all be ok for exceptionality; forward
// pairs are informational unless strongness checking is on.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "excol/collections.hpp"
#include "excol/git_windows.hpp"
#include "excol/parallel.hpp"
#include "excol/stack_cohomology.hpp"

namespace excol {

enum class VerdictStatus { ok, fail, skipped_expected, inapplicable };

std::string status_name(VerdictStatus s);

struct PairVerdict {
  int i = 0;  // source object index
  int j = 0;  // target object index
  std::string method;
  VerdictStatus status = VerdictStatus::inapplicable;
  std::string detail;
  int torsion_case = 0;  // 1..4 when a torsion reduction fired
};

struct VerifyOptions {
  bool check_strongness = false;  // forward pairs must sit in degree 0
  ExecPolicy policy = default_policy();
};

struct VerifyReport {
  MarkingSplit space;
  std::string variant;
  std::vector<PairVerdict> verdicts;  // ordered pairs, row-major
  long ok_count = 0;
  long fail_count = 0;
  long skipped_count = 0;
  long inapplicable_count = 0;
  std::set<int> fired_cases;
  bool order_ok = false;

  bool all_ok() const { return fail_count == 0 && order_ok; }
};

// True when the stored object order matches the pinned enumeration
// order for the space and variant.
bool order_valid(const Collection& c);

PairVerdict verify_pair(const Collection& c, int i, int j,
                        const VerifyOptions& opts = {});

VerifyReport verify_collection(const Collection& c,
                               const VerifyOptions& opts = {});

// Exposed for targeted tests.

// Graded morphism space between two bundle labels under a common
// window; empty optional when the pair admits no window.
std::optional<GradedDim> bundle_pair_rhom(const MarkingSplit& space,
                                          const FLabel& from, const FLabel& to);

// Torsion-reduction evaluation: RGamma of the auxiliary problem for the
// given case (1..4).  status.detail explains inapplicability.
struct TorsionEval {
  bool sanctioned = false;  // Teleman bound held on the twisted family
  bool stable = false;      // samples at three large twists agreed
  GradedDim rgamma;
  long twist_used = 0;
};

TorsionEval torsion_case_eval(const MarkingSplit& space, int which_case,
                              const Obj& src, const Obj& tgt);

}  // namespace excol
