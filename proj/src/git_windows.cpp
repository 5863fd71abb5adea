#include "excol/git_windows.hpp"

#include <sstream>
#include <stdexcept>

namespace excol {

std::vector<Rat> marking_weights(int p, int q) {
  std::vector<Rat> w;
  if (p % 2 == 1) {
    if (q == 0) {
      w.assign(p, Rat(2, p));
    } else {
      const int r = (p - 1) / 2;
      const Rat eps(1, 2 * (2 * r + 1) * (r + 1));
      const Rat a = Rat(2, p) - eps;
      const Rat b = Rat(p) * eps / q;
      w.assign(p, a);
      w.insert(w.end(), q, b);
    }
  } else {
    if (q % 2 != 1)
      throw std::invalid_argument("even heavy count needs odd light count");
    const int r = p / 2;
    const Rat eps(1, 2 * r * (r + 1));
    const Rat a = Rat(1, r) - eps;
    const Rat b = Rat(2 * r) * eps / q;
    w.assign(p, a);
    w.insert(w.end(), q, b);
  }
  return w;
}

bool unstable_type(int p, int q, int k_p, int k_q) {
  if (p % 2 == 1) {
    // Heavy weight barely below 2/p; lights are a vanishing correction.
    (void)q;
    (void)k_q;
    return 2 * k_p > p;
  }
  const int r = p / 2;
  const int s = (q - 1) / 2;
  return k_p >= r + 1 || (k_p == r && k_q >= s + 1);
}

std::vector<Mask> enumerate_strata(const MarkingSplit& space) {
  std::vector<Mask> out;
  const Mask all = full_mask(space.n());
  for (Mask K = 1; K <= all; ++K) {
    const int k_p = popcount(K & space.heavy_mask());
    const int k_q = popcount(K & space.light_mask());
    if (unstable_type(space.p, space.q, k_p, k_q)) out.push_back(K);
  }
  return out;
}

WeightInterval fixed_point_weights(const MarkingSplit& space, const FLabel& x,
                                   Mask K) {
  const Mask all = full_mask(space.n());
  const int e_inf = popcount(x.E & K);
  const int e_zero = popcount(x.E & all & ~K);
  return {-x.l + (e_zero - e_inf), x.l + (e_zero - e_inf)};
}

std::string WindowWitness::describe() const {
  std::ostringstream os;
  os << "stratum type (" << k_p << "," << k_q << "): spread " << spread
     << " >= width " << width;
  return os.str();
}

std::optional<WindowWitness> window_obstruction(
    const MarkingSplit& space, const std::vector<FLabel>& labels) {
  if (labels.empty()) return std::nullopt;
  for (Mask K : enumerate_strata(space)) {
    const int kn = popcount(K);
    const int eta = 2 * (kn - 1);
    int max_top = 0, min_bot = 0;
    bool have = false;
    for (const FLabel& x : labels) {
      const WeightInterval w = fixed_point_weights(space, x, K);
      if (!have || w.top > max_top) max_top = w.top;
      if (!have || w.bottom < min_bot) min_bot = w.bottom;
      have = true;
    }
    if (max_top - min_bot >= eta)
      return WindowWitness{popcount(K & space.heavy_mask()),
                           popcount(K & space.light_mask()),
                           max_top - min_bot, eta};
  }
  return std::nullopt;
}

bool window_feasible_pairwise(int n, const FLabel& x, const FLabel& y) {
  const int e1 = popcount(x.E), e2 = popcount(y.E);
  const int a = popcount(x.E & ~y.E);  // |E_x \ E_y|
  const int b = popcount(y.E & ~x.E);  // |E_y \ E_x|
  for (int k = n / 2 + 1; k <= n; ++k) {
    const int cross_xy = x.l + y.l + e1 - e2 +
                         2 * (std::min(b, k) - std::max(0, k - n + a));
    const int cross_yx = y.l + x.l + e2 - e1 +
                         2 * (std::min(a, k) - std::max(0, k - n + b));
    const int spread = std::max({2 * x.l, 2 * y.l, cross_xy, cross_yx});
    if (spread >= 2 * (k - 1)) return false;
  }
  return true;
}

std::vector<Stratum> strata_of(const std::vector<Rat>& weights) {
  std::vector<Stratum> out;
  const int n = static_cast<int>(weights.size());
  const Mask all = full_mask(n);
  for (Mask K = 1; K <= all; ++K) {
    Rat sum = 0;
    for (int i = 0; i < n; ++i)
      if ((K >> i) & 1u) sum += weights[i];
    if (sum > 1) out.push_back({K, 2 * (popcount(K) - 1)});
  }
  return out;
}

int fixed_point_weight(const std::vector<int>& exponents, Mask K) {
  int w = 0;
  for (int i = 0; i < static_cast<int>(exponents.size()); ++i)
    w += ((K >> i) & 1u) ? exponents[i] : -exponents[i];
  return w;
}

bool teleman_ok(const std::vector<Stratum>& strata,
                const std::vector<int>& exponents) {
  for (const Stratum& st : strata)
    if (fixed_point_weight(exponents, st.K) <= -st.eta) return false;
  return true;
}

DevilVerdict devil_twist(const std::vector<Stratum>& strata,
                         const std::vector<int>& base,
                         const std::vector<int>& slope, long n0_hint) {
  for (const Stratum& st : strata) {
    const int w_slope = fixed_point_weight(slope, st.K);
    if (w_slope > 0) continue;
    if (w_slope < 0) return {false, n0_hint};
    if (fixed_point_weight(base, st.K) <= -st.eta) return {false, n0_hint};
  }
  return {true, n0_hint};
}

}  // namespace excol
