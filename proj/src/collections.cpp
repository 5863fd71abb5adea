#include "excol/collections.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "excol/score.hpp"

namespace excol {

const char* obj_tag(ObjKind kind) {
  switch (kind) {
    case ObjKind::Bundle: return "F";
    case ObjKind::Torsion: return "T";
    case ObjKind::TildeTorsion: return "TT";
    case ObjKind::Boundary: return "A";
  }
  return "?";
}

std::string obj_describe(const MarkingSplit& space, const Obj& o) {
  (void)space;
  std::ostringstream os;
  os << obj_tag(o.kind);
  if (o.kind == ObjKind::Boundary) {
    os << "{";
    bool first = true;
    for (int i : mask_bits(o.divisor)) {
      if (!first) os << ",";
      os << i;
      first = false;
    }
    os << "}(-" << o.a << ",-" << o.b << ")";
  } else {
    os << "(l=" << o.l << ",E={";
    bool first = true;
    for (int i : mask_bits(o.E)) {
      if (!first) os << ",";
      os << i;
      first = false;
    }
    os << "})";
  }
  return os.str();
}

bool lex_less(Mask x, Mask y) {
  const auto bx = mask_bits(x), by = mask_bits(y);
  return std::lexicographical_compare(bx.begin(), bx.end(), by.begin(),
                                      by.end());
}

bool bundle_member(const MarkingSplit& space, const std::string& variant,
                   const FLabel& x) {
  if (!label_parity_ok(x)) return false;
  const int p = space.p;
  const int e_p = e_heavy(space, x.E);
  if (p % 2 == 1) {
    // Odd heavy count: self-dual criterion l + min(e_p, p - e_p) <= r-1.
    const int r = (p - 1) / 2;
    return x.l + std::min(e_p, p - e_p) <= r - 1;
  }
  const int r = p / 2;
  if (variant == "1B")
    return x.l + std::min(e_p + 1, p - e_p) <= r - 1;
  return x.l + std::min(e_p, p + 1 - e_p) <= r - 1;
}

bool torsion_member(const MarkingSplit& space, const std::string& variant,
                    const FLabel& x) {
  if (!label_parity_ok(x)) return false;
  const int p = space.p, q = space.q;
  if (p % 2 == 1 || q == 0) return false;
  const int r = p / 2;
  if (e_heavy(space, x.E) != r) return false;
  const int e_q = e_light(space, x.E);
  if (q % 2 == 1) {
    const int s = (q - 1) / 2;
    return x.l + std::min(e_q, q - e_q) <= s - 1;
  }
  // Even light count: formulas use the odd parameter q - 1.
  const int qo = q - 1;
  const int s = (qo - 1) / 2;
  if (variant == "2A")
    return x.l + std::min(e_q + 1, qo + 1 - e_q) <= s;
  return x.l + std::min(e_q, qo + 2 - e_q) <= s;
}

int boundary_factor_dim(const MarkingSplit& space) {
  return space.n() / 2 - 2;
}

std::vector<Mask> boundary_divisors(const MarkingSplit& space) {
  std::vector<Mask> out;
  if (space.q % 2 != 0) return out;
  for (Mask Tp : subsets_of_size(space.heavy_mask(), space.p / 2))
    for (Mask Tq : subsets_of_size(space.light_mask(), space.q / 2)) {
      const Mask T = Tp | Tq;
      if (T & 1u) out.push_back(T);  // canonical side holds marking 0
    }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<std::pair<int, int>> boundary_twists(const MarkingSplit& space) {
  std::vector<std::pair<int, int>> out;
  const int m = boundary_factor_dim(space);
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b) out.emplace_back(a, b);
  for (int b = 1; 2 * b <= m; ++b) out.emplace_back(0, b);
  for (int a = 1; 2 * a <= m; ++a) out.emplace_back(a, 0);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first + x.second != y.first + y.second)
      return x.first + x.second > y.first + y.second;
    return x.first > y.first;
  });
  return out;
}

bool order_less(const MarkingSplit& space, const Obj& x, const Obj& y) {
  // Boundary part first.
  const int kx = x.kind == ObjKind::Boundary ? 0 : 1;
  const int ky = y.kind == ObjKind::Boundary ? 0 : 1;
  if (kx != ky) return kx < ky;
  if (x.kind == ObjKind::Boundary) {
    if (x.divisor != y.divisor) return lex_less(x.divisor, y.divisor);
    if (x.a + x.b != y.a + y.b) return x.a + x.b > y.a + y.b;
    return x.a > y.a;
  }
  const Mask Eqx = x.E & space.light_mask(), Eqy = y.E & space.light_mask();
  const int eqx = popcount(Eqx), eqy = popcount(Eqy);
  if (eqx != eqy) return eqx < eqy;
  if (Eqx != Eqy) return lex_less(Eqx, Eqy);
  const bool tx = x.kind != ObjKind::Bundle, ty = y.kind != ObjKind::Bundle;
  if (tx != ty) return tx;  // torsion precedes bundles in a block
  const Mask Epx = x.E & space.heavy_mask(), Epy = y.E & space.heavy_mask();
  if (tx) {
    if (Epx != Epy) return lex_less(Epx, Epy);
    return x.l > y.l;
  }
  const int epx = popcount(Epx), epy = popcount(Epy);
  if (epx != epy) return epx < epy;
  if (Epx != Epy) return lex_less(Epx, Epy);
  return x.l < y.l;
}

namespace {

int max_label_l(const MarkingSplit& space) {
  // Membership criteria bound l by r - 1 (bundles) and s - 1 or s
  // (torsion); r + s covers every case with slack.
  return space.p / 2 + space.q / 2 + 2;
}

void append_bundles(Collection& c) {
  const MarkingSplit& sp = c.space;
  const Mask all = full_mask(sp.n());
  for (int l = 0; l <= max_label_l(sp); ++l)
    for (Mask E = 0; E <= all; ++E) {
      const FLabel x{l, E};
      if (bundle_member(sp, c.variant, x))
        c.objects.push_back(Obj{ObjKind::Bundle, l, E, 0, 0, 0});
    }
}

void append_torsion(Collection& c) {
  const MarkingSplit& sp = c.space;
  const Mask all = full_mask(sp.n());
  const ObjKind kind =
      sp.q % 2 == 1 ? ObjKind::Torsion : ObjKind::TildeTorsion;
  for (int l = 0; l <= max_label_l(sp); ++l)
    for (Mask E = 0; E <= all; ++E) {
      const FLabel x{l, E};
      if (torsion_member(sp, c.variant, x))
        c.objects.push_back(Obj{kind, l, E, 0, 0, 0});
    }
}

void append_boundary(Collection& c) {
  for (Mask T : boundary_divisors(c.space))
    for (const auto& [a, b] : boundary_twists(c.space))
      c.objects.push_back(Obj{ObjKind::Boundary, 0, 0, T, a, b});
}

void finish(Collection& c) {
  std::sort(c.objects.begin(), c.objects.end(),
            [&](const Obj& x, const Obj& y) {
              return order_less(c.space, x, y);
            });
}

}  // namespace

Collection enumerate_odd_p(int p, const std::string& variant) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be odd >= 3");
  if (variant != "1A")
    throw std::invalid_argument("odd heavy count admits only variant 1A");
  Collection c{{p, 0}, variant, {}};
  append_bundles(c);
  finish(c);
  return c;
}

Collection enumerate_odd_p_with_lights(int p, int q,
                                       const std::string& variant) {
  if (p < 3 || p % 2 == 0 || q < 1)
    throw std::invalid_argument("need odd p >= 3 and q >= 1");
  if (variant != "1A")
    throw std::invalid_argument("odd heavy count admits only variant 1A");
  Collection c{{p, q}, variant, {}};
  append_bundles(c);
  finish(c);
  return c;
}

Collection enumerate_peven_qodd(int p, int q, const std::string& variant) {
  if (p < 4 || p % 2 == 1 || q % 2 != 1)
    throw std::invalid_argument("need even p >= 4 and odd q");
  if (variant != "1A" && variant != "1B")
    throw std::invalid_argument("odd light count admits variants 1A and 1B");
  Collection c{{p, q}, variant, {}};
  append_bundles(c);
  append_torsion(c);
  finish(c);
  return c;
}

Collection enumerate_peven_qeven(int p, int q, const std::string& variant) {
  if (p < 4 || p % 2 == 1 || q % 2 != 0 || q < 0)
    throw std::invalid_argument("need even p >= 4 and even q >= 0");
  if (variant != "1A" && variant != "1B" && variant != "2A")
    throw std::invalid_argument("unknown variant");
  Collection c{{p, q}, variant, {}};
  append_boundary(c);
  append_bundles(c);
  if (q > 0) append_torsion(c);
  finish(c);
  return c;
}

Collection enumerate_collection(const MarkingSplit& space,
                                const std::string& variant) {
  if (space.p % 2 == 1)
    return space.q == 0 ? enumerate_odd_p(space.p, variant)
                        : enumerate_odd_p_with_lights(space.p, space.q,
                                                      variant);
  if (space.q % 2 == 1) return enumerate_peven_qodd(space.p, space.q, variant);
  return enumerate_peven_qeven(space.p, space.q, variant);
}

Obj apply_permutation(const MarkingSplit& space, const std::vector<int>& perm,
                      const Obj& o) {
  const auto map_mask = [&](Mask m) {
    Mask out = 0;
    for (int i : mask_bits(m)) out |= Mask{1} << perm[i];
    return out;
  };
  Obj img = o;
  if (o.kind == ObjKind::Boundary) {
    const Mask side = map_mask(o.divisor);
    if (side & 1u) {
      img.divisor = side;
    } else {
      img.divisor = full_mask(space.n()) & ~side;
      img.a = o.b;
      img.b = o.a;
    }
  } else {
    img.E = map_mask(o.E);
  }
  return img;
}

std::optional<std::string> check_equivariance(const Collection& c) {
  const MarkingSplit& sp = c.space;
  const int n = sp.n();
  std::vector<std::pair<int, int>> swaps;
  for (int i = 0; i + 1 < sp.p; ++i) swaps.emplace_back(i, i + 1);
  for (int i = sp.p; i + 1 < n; ++i) swaps.emplace_back(i, i + 1);
  for (const auto& [u, v] : swaps) {
    std::vector<int> perm(n);
    for (int j = 0; j < n; ++j) perm[j] = j;
    std::swap(perm[u], perm[v]);
    for (const Obj& o : c.objects) {
      const Obj img = apply_permutation(sp, perm, o);
      if (std::find(c.objects.begin(), c.objects.end(), img) ==
          c.objects.end()) {
        std::ostringstream os;
        os << "transposition (" << u << " " << v << ") maps "
           << obj_describe(sp, o) << " to " << obj_describe(sp, img)
           << " which is absent";
        return os.str();
      }
    }
  }
  return std::nullopt;
}

}  // namespace excol
