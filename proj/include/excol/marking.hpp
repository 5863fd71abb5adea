#pragma once

// Marking conventions.  A space is indexed by p heavy markings and q
// light markings; heavies occupy bit positions 0..p-1, lights p..p+q-1.
// Subsets of markings are Mask values over those positions.

#include "excol/ints.hpp"

namespace excol {

struct MarkingSplit {
  int p = 0;
  int q = 0;

  int n() const { return p + q; }
  Mask heavy_mask() const { return full_mask(p); }
  Mask light_mask() const { return full_mask(n()) & ~heavy_mask(); }
  bool is_heavy(int i) const { return i < p; }
};

// Label (l, E) of a pushforward bundle; also used for torsion labels.
// Invariant everywhere: l >= 0 and l + |E| even.
struct FLabel {
  int l = 0;
  Mask E = 0;

  friend bool operator==(const FLabel&, const FLabel&) = default;
  friend auto operator<=>(const FLabel&, const FLabel&) = default;
};

inline bool label_parity_ok(const FLabel& x) {
  return x.l >= 0 && (x.l + popcount(x.E)) % 2 == 0;
}

inline int e_heavy(const MarkingSplit& s, Mask E) { return popcount(E & s.heavy_mask()); }
inline int e_light(const MarkingSplit& s, Mask E) { return popcount(E & s.light_mask()); }

}  // namespace excol
