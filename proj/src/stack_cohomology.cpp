#include "excol/stack_cohomology.hpp"

namespace excol {

VirtualGradedRep p1_cohomology(int a) {
  VirtualGradedRep out;
  IrrepSum rep;
  if (a >= 0) {
    rep.add(a, 1);
    out.add(0, rep);
  } else if (a <= -2) {
    rep.add(-a - 2, 1);
    out.add(1, rep);
  }
  return out;
}

VirtualGradedRep product_cohomology(const std::vector<int>& exponents) {
  VirtualGradedRep acc;
  IrrepSum unit;
  unit.add(0, 1);
  acc.add(0, unit);
  for (int a : exponents) {
    acc = graded_tensor(acc, p1_cohomology(a));
    if (acc.empty()) return acc;
  }
  return acc;
}

GradedDim stack_rhom(int n, const FLabel& from, const FLabel& to) {
  std::vector<int> exps(n, 0);
  for (int i = 0; i < n; ++i) {
    const Mask bit = Mask{1} << i;
    exps[i] = ((to.E & bit) ? 1 : 0) - ((from.E & bit) ? 1 : 0);
  }
  VirtualGradedRep coh = product_cohomology(exps);
  VirtualGradedRep l_factors;
  l_factors.add(0, clebsch_gordan(from.l, to.l));
  return graded_invariants(graded_tensor(coh, l_factors));
}

bool dual_identity_check(int n, const FLabel& x) {
  if (n % 2 != 0) return false;
  const Mask full = full_mask(n);
  // Left side: exponent vector 1_E, SL2 factor V_l.
  // Right side: -1_{E^c} from the dual, +1_full from the twist.
  for (int i = 0; i < n; ++i) {
    const Mask bit = Mask{1} << i;
    const int lhs = (x.E & bit) ? 1 : 0;
    const int rhs = -(((full & ~x.E) & bit) ? 1 : 0) + 1;
    if (lhs != rhs) return false;
  }
  return true;
}

GradedDim projective_space_cohomology(int m, int d) {
  GradedDim out;
  if (d >= 0) {
    out[0] = binomial(d + m, m);
  } else if (d <= -m - 1) {
    Int c = binomial(-d - 1, m);
    if (c != 0) out[m] = c;
  }
  return out;
}

GradedDim boundary_sheaf_rhom(int m, int a, int b, int a2, int b2) {
  GradedDim out;
  const auto add_kunneth = [&](int x, int y, int shift) {
    const GradedDim hx = projective_space_cohomology(m, x);
    const GradedDim hy = projective_space_cohomology(m, y);
    for (const auto& [dx, cx] : hx)
      for (const auto& [dy, cy] : hy) out[dx + dy + shift] += cx * cy;
  };
  add_kunneth(a - a2, b - b2, 0);
  add_kunneth(a - a2 - 1, b - b2 - 1, 1);
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace excol
