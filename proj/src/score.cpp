#include "excol/score.hpp"

#include <algorithm>

namespace excol {

namespace {

bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

int imin(int a, int b) { return a < b ? a : b; }

}  // namespace

Rat f_value(Mask T, Mask E, int l) { return Rat(f_twice(T, E, l), 2); }

int score_S(int p, int q, int l, int e_p, int e_q) {
  return l + imin(e_p, p - e_p) + imin(e_q, q - e_q);
}

int score_Sprime(int p, int q, int l, int e_p, int e_q) {
  return l + imin(e_p, p - e_p) + imin(e_q, q + 1 - e_q);
}

int score_S(const MarkingSplit& s, const FLabel& x) {
  return score_S(s.p, s.q, x.l, e_heavy(s, x.E), e_light(s, x.E));
}

GroupFlags classify_group(int p, int q_odd, int l, int e_p, int e_q) {
  GroupFlags g;
  if (l < 0) return g;
  const int r = p / 2;
  const int s = (q_odd - 1) / 2;
  g.g1A = l + imin(e_p, p + 1 - e_p) <= r - 1;
  g.g1B = l + imin(e_p + 1, p - e_p) <= r - 1;
  g.g2 = (e_p == r) && l + imin(e_q, q_odd - e_q) <= s - 1;
  g.g2A = (e_p == r) && l + imin(e_q + 1, q_odd + 1 - e_q) <= s;
  g.g2B = (e_p == r) && l + imin(e_q, q_odd + 2 - e_q) <= s;
  return g;
}

namespace {

// Criticality rows.  Row conditions split into a label part (no T) and
// a containment part; q_odd is the odd light parameter.
struct RowCheck {
  bool label_ok = false;
  // containment(Tp, Tq) for a candidate T.
  bool (*contain)(Mask Ep, Mask Eq, Mask Tp, Mask Tq) = nullptr;
};

RowCheck critical_row(const std::string& group, int p, int q_odd, int l,
                      int e_p, int e_q) {
  const int r = p / 2;
  const int s = (q_odd - 1) / 2;
  RowCheck row;
  if (group == "1A") {
    row.label_ok = (l + e_p == r - 1) && (e_q == s + 1);
    row.contain = [](Mask Ep, Mask Eq, Mask Tp, Mask Tq) {
      return subset(Ep, Tp) && Eq == Tq;
    };
  } else if (group == "1B") {
    row.label_ok = (l + (p - e_p) == r - 1) && (e_q == s + 1);
    row.contain = [](Mask Ep, Mask Eq, Mask Tp, Mask Tq) {
      return subset(Tp, Ep) && Eq == Tq;
    };
  } else if (group == "2A") {
    row.label_ok = (e_p == r) && (l + (q_odd + 1) - e_q == s);
    row.contain = [](Mask Ep, Mask Eq, Mask Tp, Mask Tq) {
      return Ep == Tp && subset(Tq, Eq);
    };
  } else if (group == "2B") {
    row.label_ok = (e_p == r) && (l + e_q == s);
    row.contain = [](Mask Ep, Mask Eq, Mask Tp, Mask Tq) {
      return Ep == Tp && subset(Eq, Tq);
    };
  }
  return row;
}

RowCheck wall_row(const std::string& group, int p, int q_odd, int l, int e_p,
                  int e_q) {
  const int r = p / 2;
  const int s = (q_odd - 1) / 2;
  RowCheck row;
  if (group == "1A") {
    row.label_ok = (l + e_p == r - 1) && (e_q == s);
    row.contain = [](Mask Ep, Mask Eq, Mask Tp, Mask Tq) {
      return subset(Ep, Tp) && Eq == Tq;
    };
  } else if (group == "1B") {
    row.label_ok = (l + (p - e_p) == r - 1) && (e_q == s);
    row.contain = [](Mask Ep, Mask Eq, Mask Tp, Mask Tq) {
      return subset(Tp, Ep) && Eq == Tq;
    };
  } else if (group == "2") {
    row.label_ok = (e_p == r) && (l + e_q == s - 1);
    row.contain = [](Mask Ep, Mask Eq, Mask Tp, Mask Tq) {
      return Ep == Tp && subset(Eq, Tq);
    };
  }
  return row;
}

}  // namespace

std::vector<Mask> critical_subsets(const MarkingSplit& space, const FLabel& x,
                                   const std::string& group, Lemma which,
                                   int y) {
  std::vector<Mask> out;
  const int r = space.p / 2;
  const Mask Pm = space.heavy_mask();
  const Mask Lm = space.light_mask();
  const Mask Ep = x.E & Pm;
  const Mask Eq = x.E & Lm;
  const int e_p = popcount(Ep);
  const int e_q = popcount(Eq);

  if (which == Lemma::critical) {
    // Space has q+1 lights; family |T_p| = r, |T_light| = s+1 where the
    // odd parameter is q = lights - 1.
    const int q_odd = space.q - 1;
    const int s = (q_odd - 1) / 2;
    if ((r + s) % 2 != 0) return out;
    const RowCheck row = critical_row(group, space.p, q_odd, x.l, e_p, e_q);
    if (!row.label_ok || !row.contain) return out;
    for (Mask Tp : subsets_of_size(Pm, r))
      for (Mask Tq : subsets_of_size(Lm, s + 1))
        if (row.contain(Ep, Eq, Tp, Tq)) out.push_back(Tp | Tq);
    return out;
  }

  if (which == Lemma::critical_on_wall) {
    const int q_odd = space.q;
    const int s = (q_odd - 1) / 2;
    if ((r + s) % 2 != 1) return out;
    if (y < 0 || (x.E >> y) & 1u) return out;
    const RowCheck row = wall_row(group, space.p, q_odd, x.l, e_p, e_q);
    if (!row.label_ok || !row.contain) return out;
    const Mask Lm_wall = Lm & ~(Mask{1} << y);
    for (Mask Tp : subsets_of_size(Pm, r))
      for (Mask Tq : subsets_of_size(Lm_wall, s))
        if (row.contain(Ep, Eq, Tp, Tq)) out.push_back(Tp | Tq);
    return out;
  }

  // bounds_plus: sets attaining the S' maximum.
  const int q_odd = space.q - 1;
  const int s = (q_odd - 1) / 2;
  for (Mask Tp : subsets_of_size(Pm, r))
    for (Mask Tq : subsets_of_size(Lm, s + 1)) {
      const bool first = (subset(Tp, Ep) || subset(Ep, Tp)) &&
                         (subset(Tq, Eq) || subset(Eq, Tq));
      if (first) out.push_back(Tp | Tq);
    }
  return out;
}

long verify_score_lemmas(int p, int q, int lmax,
                         std::vector<std::string>* details) {
  long bad = 0;
  const auto report = [&](const std::string& what) {
    ++bad;
    if (details && details->size() < 20) details->push_back(what);
  };
  const int r = p / 2;
  const int s = (q - 1) / 2;
  const int qt = q + 1;

  const MarkingSplit odd_space{p, q};
  const MarkingSplit even_space{p, qt};
  const Mask Pm = odd_space.heavy_mask();
  const Mask Lodd = odd_space.light_mask();
  const Mask Lev = even_space.light_mask();

  const auto heavy_subsets = subsets_of_size(Pm, r);
  const auto family_ev = [&] {
    std::vector<std::pair<Mask, Mask>> fam;
    for (Mask Tp : heavy_subsets)
      for (Mask Tq : subsets_of_size(Lev, s + 1)) fam.emplace_back(Tp, Tq);
    return fam;
  }();

  const char* groups_ev[] = {"1A", "1B", "2A", "2B"};

  // Statements on the q+1 light space.
  for (int l = 0; l <= lmax; ++l) {
    for (Mask E = 0; E <= (Pm | Lev); ++E) {
      if ((l + popcount(E)) % 2 != 0) continue;
      const Mask Ep = E & Pm, Eq = E & Lev;
      const int e_p = popcount(Ep), e_q = popcount(Eq);
      const int Sp = score_Sprime(p, q, l, e_p, e_q);
      const GroupFlags g = classify_group(p, q, l, e_p, e_q);
      const bool in_group[] = {g.g1A, g.g1B, g.g2A, g.g2B};
      const bool any_group = g.g1A || g.g1B || g.g2A || g.g2B;

      int max_f2 = -1 << 20, max_neg_f2 = -1 << 20;
      for (const auto& [Tp, Tq] : family_ev) {
        const Mask T = Tp | Tq;
        const int f2 = f_twice(T, E, l);
        max_f2 = std::max(max_f2, f2);
        max_neg_f2 = std::max(max_neg_f2, -f2);

        // Bound statement: equality characterizations.
        const bool first = (subset(Tp, Ep) || subset(Ep, Tp)) &&
                           (subset(Tq, Eq) || subset(Eq, Tq));
        if ((f2 == Sp) != first)
          report("Sprime first-equality mismatch");
        const Mask Tpc = Pm & ~Tp, Tqc = Lev & ~Tq;
        const bool second = (subset(Tpc, Ep) || subset(Ep, Tpc)) &&
                            (subset(Tqc, Eq) || subset(Eq, Tqc));
        if ((-f2 == Sp - 2 * l) != second)
          report("Sprime second-equality mismatch");

        if (any_group) {
          if (f2 > r + s) report("critical bound exceeded");
          for (int gi = 0; gi < 4; ++gi) {
            if (!in_group[gi]) continue;
            const RowCheck row =
                critical_row(groups_ev[gi], p, q, l, e_p, e_q);
            const bool crit = (r + s) % 2 == 0 && row.label_ok &&
                              row.contain(Ep, Eq, Tp, Tq);
            if ((f2 == r + s) != crit) report("criticality table mismatch");
            const int f2c = f_twice((Pm | Lev) & ~T, E, l);
            if (f2c < -(r + s)) report("complement bound exceeded");
            if (f2c == -(r + s) &&
                !((r + s) % 2 == 0 && l == 0 && crit))
              report("complement strictness violated");
          }
        }
      }
      if (max_f2 != Sp) report("Sprime max mismatch");
      if (max_neg_f2 != Sp - 2 * l) report("Sprime negative max mismatch");

      // Light-only bound for labels in groups 2A/2B.
      if (g.g2A || g.g2B) {
        for (Mask I : subsets_of_size(Lev, s + 1)) {
          const int f2l = 2 * popcount(Eq & I) - e_q + l;
          if (f2l > s) report("light bound exceeded");
          bool eq_allowed = false;
          if (g.g2A && e_q == l + s + 2 && subset(I, Eq)) eq_allowed = true;
          if (g.g2B && l + e_q == s && subset(Eq, I)) eq_allowed = true;
          if ((f2l == s) != eq_allowed) report("light equality mismatch");
          const Mask Ic = Lev & ~I;
          if (2 * popcount(Eq & Ic) - e_q + l < -s)
            report("light complement bound exceeded");
        }
      }
    }
  }

  // Wall statement on the q light space.
  const char* groups_odd[] = {"1A", "1B", "2"};
  for (int l = 0; l <= lmax; ++l) {
    for (Mask E = 0; E <= (Pm | Lodd); ++E) {
      if ((l + popcount(E)) % 2 != 0) continue;
      const Mask Ep = E & Pm, Eq = E & Lodd;
      const int e_p = popcount(Ep), e_q = popcount(Eq);
      const GroupFlags g = classify_group(p, q, l, e_p, e_q);
      const bool in_group[] = {g.g1A, g.g1B, g.g2};
      if (!(g.g1A || g.g1B || g.g2)) continue;
      for (int y = p; y < p + q; ++y) {
        const bool y_in_E = (E >> y) & 1u;
        const Mask Lwall = Lodd & ~(Mask{1} << y);
        for (Mask Tp : heavy_subsets)
          for (Mask Tq : subsets_of_size(Lwall, s)) {
            const Mask T = Tp | Tq;
            const int f2 = f_twice(T, E, l);
            if (f2 > r + s - 1) report("wall bound exceeded");
            for (int gi = 0; gi < 3; ++gi) {
              if (!in_group[gi]) continue;
              const RowCheck row =
                  wall_row(groups_odd[gi], p, q, l, e_p, e_q);
              const bool crit = (r + s) % 2 == 1 && !y_in_E &&
                                row.label_ok &&
                                row.contain(Ep, Eq, Tp, Tq);
              if ((f2 == r + s - 1) != crit)
                report("wall criticality mismatch");
            }
            const int m2 = f2 > 0 ? f2 : 0;
            if (m2 > r + s - 2 * (y_in_E ? 1 : 0))
              report("wall m bound exceeded");
          }
      }
    }
  }

  // Half-split heavy bound for labels in 1A or 1B (heavy data only).
  for (int l = 0; l <= lmax; ++l) {
    for (Mask Ep = 0; Ep <= Pm; ++Ep) {
      const int e_p = popcount(Ep);
      const GroupFlags g = classify_group(p, q, l, e_p, 0);
      if (!(g.g1A || g.g1B)) continue;
      for (Mask R : heavy_subsets)
        if (f_twice(R, Ep, l) > r - 1) report("half-split bound exceeded");
    }
  }

  // Light-only estimates.  q lights first.
  for (int l = 0; l <= lmax; ++l) {
    for (Mask E = 0;; E = ((E | ~Lodd) + 1) & Lodd) {
      const int e = popcount(E);
      if (l + imin(e, q - e) <= s - 1) {
        for (Mask I = 0;; I = ((I | ~Lodd) + 1) & Lodd) {
          const Mask Ic = Lodd & ~I;
          const int lhs = l + popcount(E & Ic) - popcount(E & I);
          const int bound = e <= s ? s - 1 : 2 * popcount(Ic) - s - 2;
          if (lhs > bound) report("light estimate exceeded");
          if (I == Lodd) break;
        }
      }
      if (E == Lodd) break;
    }
  }
  // q+1 lights (even count 2s+2); both hypothesis variants.
  {
    const int qe = qt;
    for (int l = 0; l <= lmax; ++l) {
      for (Mask I = 0;; I = ((I | ~Lev) + 1) & Lev) {
        const Mask Ic = Lev & ~I;
        for (Mask E = 0;; E = ((E | ~Lev) + 1) & Lev) {
          const int e = popcount(E);
          const int lhs = l + popcount(E & Ic) - popcount(E & I);
          if (l + imin(e + 1, qe + 1 - e) <= s) {
            const int bound = e <= s ? s - 1 : 2 * popcount(Ic) - s - 2;
            if (lhs > bound) report("even light estimate A exceeded");
          }
          if (l + imin(e, qe + 2 - e) <= s) {
            const int bound = e <= s + 1 ? s : 2 * popcount(Ic) - s - 3;
            if (lhs > bound) report("even light estimate B exceeded");
          }
          if (E == Lev) break;
        }
        if (I == Lev) break;
      }
    }
  }

  return bad;
}

}  // namespace excol
