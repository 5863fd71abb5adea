#pragma once

// Exact representation arithmetic for SL2.  Irreducibles are indexed by
// highest weight l >= 0; V_l has dimension l+1.  Sums are stored sparsely
// (absent weight = multiplicity zero) with exact integer multiplicities.

#include <map>

#include "excol/ints.hpp"

namespace excol {

class IrrepSum {
 public:
  IrrepSum() = default;

  // mult may be negative (virtual summands); zero entries are erased.
  void add(int highest_weight, const Int& mult);

  Int multiplicity(int highest_weight) const;
  bool empty() const { return mults_.empty(); }
  Int dim() const;

  IrrepSum& operator+=(const IrrepSum& other);
  bool operator==(const IrrepSum& other) const { return mults_ == other.mults_; }

  const std::map<int, Int>& mults() const { return mults_; }

 private:
  std::map<int, Int> mults_;
};

// V_a (x) V_b = V_{a+b} + V_{a+b-2} + ... + V_{|a-b|}.
IrrepSum clebsch_gordan(int a, int b);

// Bilinear extension of clebsch_gordan.
IrrepSum tensor(const IrrepSum& x, const IrrepSum& y);

// Multiplicity of the trivial representation V_0.
Int invariant_multiplicity(const IrrepSum& x);

// Cohomological degree -> SL2 representation; degrees with zero content
// are absent.  Tensoring convolves degrees.
class VirtualGradedRep {
 public:
  VirtualGradedRep() = default;

  void add(int degree, const IrrepSum& rep);
  const IrrepSum* at(int degree) const;
  bool empty() const { return reps_.empty(); }

  bool operator==(const VirtualGradedRep& other) const { return reps_ == other.reps_; }

  const std::map<int, IrrepSum>& reps() const { return reps_; }

 private:
  std::map<int, IrrepSum> reps_;
};

VirtualGradedRep graded_tensor(const VirtualGradedRep& x, const VirtualGradedRep& y);

// Degree-wise invariants; result maps degree -> dimension of invariants.
std::map<int, Int> graded_invariants(const VirtualGradedRep& x);

// Formal character as a Laurent polynomial in the torus variable t,
// stored exponent -> coefficient.  For d >= 0 this is the character of
// V_d; the rule extends to all integers by chi(-1) = 0 and
// chi(d) = -chi(-d-2) for d <= -2, matching Serre duality on P1.
using Laurent = std::map<int, Int>;

Laurent sl2_character(int d);

void laurent_add(Laurent& acc, const Laurent& x, const Int& scale);
Laurent laurent_mul(const Laurent& x, const Laurent& y);
void laurent_trim(Laurent& x);

}  // namespace excol
