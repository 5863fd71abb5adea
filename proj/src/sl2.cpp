#include "excol/sl2.hpp"

#include <stdexcept>

namespace excol {

void IrrepSum::add(int highest_weight, const Int& mult) {
  if (highest_weight < 0) throw std::invalid_argument("negative highest weight");
  if (mult == 0) return;
  auto it = mults_.find(highest_weight);
  if (it == mults_.end()) {
    mults_.emplace(highest_weight, mult);
    return;
  }
  it->second += mult;
  if (it->second == 0) mults_.erase(it);
}

Int IrrepSum::multiplicity(int highest_weight) const {
  auto it = mults_.find(highest_weight);
  return it == mults_.end() ? Int{0} : it->second;
}

Int IrrepSum::dim() const {
  Int d = 0;
  for (const auto& [l, m] : mults_) d += m * (l + 1);
  return d;
}

IrrepSum& IrrepSum::operator+=(const IrrepSum& other) {
  for (const auto& [l, m] : other.mults_) add(l, m);
  return *this;
}

IrrepSum clebsch_gordan(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("clebsch_gordan needs a,b >= 0");
  IrrepSum out;
  for (int l = a + b; l >= (a > b ? a - b : b - a); l -= 2) out.add(l, 1);
  return out;
}

IrrepSum tensor(const IrrepSum& x, const IrrepSum& y) {
  IrrepSum out;
  for (const auto& [a, ma] : x.mults())
    for (const auto& [b, mb] : y.mults()) {
      const Int m = ma * mb;
      for (int l = a + b; l >= (a > b ? a - b : b - a); l -= 2) out.add(l, m);
    }
  return out;
}

Int invariant_multiplicity(const IrrepSum& x) { return x.multiplicity(0); }

void VirtualGradedRep::add(int degree, const IrrepSum& rep) {
  if (rep.empty()) return;
  auto it = reps_.find(degree);
  if (it == reps_.end()) {
    reps_.emplace(degree, rep);
    return;
  }
  it->second += rep;
  if (it->second.empty()) reps_.erase(it);
}

const IrrepSum* VirtualGradedRep::at(int degree) const {
  auto it = reps_.find(degree);
  return it == reps_.end() ? nullptr : &it->second;
}

VirtualGradedRep graded_tensor(const VirtualGradedRep& x, const VirtualGradedRep& y) {
  VirtualGradedRep out;
  for (const auto& [dx, rx] : x.reps())
    for (const auto& [dy, ry] : y.reps()) out.add(dx + dy, tensor(rx, ry));
  return out;
}

std::map<int, Int> graded_invariants(const VirtualGradedRep& x) {
  std::map<int, Int> out;
  for (const auto& [d, rep] : x.reps()) {
    Int inv = invariant_multiplicity(rep);
    if (inv != 0) out[d] = inv;
  }
  return out;
}

Laurent sl2_character(int d) {
  Laurent out;
  if (d >= 0) {
    for (int m = 0; m <= d; ++m) out[d - 2 * m] += 1;
  } else if (d <= -2) {
    for (int m = 0; m <= -d - 2; ++m) out[-d - 2 - 2 * m] -= 1;
  }
  return out;
}

void laurent_add(Laurent& acc, const Laurent& x, const Int& scale) {
  if (scale == 0) return;
  for (const auto& [e, c] : x) {
    auto it = acc.find(e);
    if (it == acc.end()) {
      acc.emplace(e, c * scale);
    } else {
      it->second += c * scale;
      if (it->second == 0) acc.erase(it);
    }
  }
}

Laurent laurent_mul(const Laurent& x, const Laurent& y) {
  Laurent out;
  for (const auto& [ex, cx] : x)
    for (const auto& [ey, cy] : y) out[ex + ey] += cx * cy;
  laurent_trim(out);
  return out;
}

void laurent_trim(Laurent& x) {
  for (auto it = x.begin(); it != x.end();)
    it = (it->second == 0) ? x.erase(it) : std::next(it);
}

}  // namespace excol
