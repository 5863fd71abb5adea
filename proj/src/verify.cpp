#include "excol/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "excol/sl2.hpp"

namespace excol {

std::string status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::ok:
      return "ok";
    case VerdictStatus::fail:
      return "fail";
    case VerdictStatus::skipped_expected:
      return "skipped-expected";
    case VerdictStatus::inapplicable:
      return "inapplicable";
  }
  return "?";
}

namespace {

std::string graded_str(const GradedDim& g) {
  if (g.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [deg, dim] : g) {
    if (!first) os << ", ";
    os << "deg " << deg << ": " << dim;
    first = false;
  }
  return os.str();
}

bool is_point(const GradedDim& g) {
  return g.size() == 1 && g.begin()->first == 0 && g.begin()->second == 1;
}

bool degree_zero_only(const GradedDim& g) {
  for (const auto& [deg, dim] : g)
    if (deg != 0 && dim != 0) return false;
  return true;
}

IrrepSum single(int a) {
  IrrepSum s;
  s.add(a, 1);
  return s;
}

// Degree-0 invariant dimension of the Kunneth product with the given
// exponents plus extra degree-0 factors.  Any exponent -1 kills the
// product; in the sampled twist regime nothing sits below -1, so the
// whole complex lives in degree 0 and the invariants equal the
// multiplicity of the largest factor inside the tensor of the rest.
Int deg0_invariants(const std::vector<int>& exps,
                    const std::vector<int>& extra) {
  int best = -1;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == -1) return 0;
    if (exps[i] < -1)
      throw std::logic_error("twisted exponent below -1; twist too small");
    if (exps[i] > best) {
      best = exps[i];
      arg = i;
    }
  }
  std::vector<int> rest;
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (i != arg) rest.push_back(exps[i]);
  rest.insert(rest.end(), extra.begin(), extra.end());
  std::sort(rest.begin(), rest.end());
  IrrepSum acc = single(0);
  for (int a : rest) acc = tensor(acc, single(a));
  return acc.multiplicity(best);
}

// Auxiliary quotient attached to a torsion support: the r colliding
// heavy markings merge into one point u of weight r*a; the remaining
// heavies and all lights keep their weights.
struct AuxProblem {
  std::vector<Rat> weights;
  std::vector<Stratum> strata;
  std::vector<int> heavies;  // original indices of the surviving heavies
};

AuxProblem support_problem(const MarkingSplit& sp, Mask R) {
  const int r = sp.p / 2;
  const auto w = marking_weights(sp.p, sp.q);
  AuxProblem aux;
  aux.weights.push_back(Rat(r) * w[0]);
  for (int i = 0; i < sp.p; ++i)
    if (!((R >> i) & 1u)) {
      aux.weights.push_back(w[0]);
      aux.heavies.push_back(i);
    }
  for (int i = 0; i < sp.q; ++i) aux.weights.push_back(w[sp.p]);
  aux.strata = strata_of(aux.weights);
  return aux;
}

// Two complementary supports collide simultaneously: both clumps merge,
// leaving two points of weight r*a plus the lights.
AuxProblem double_support_problem(const MarkingSplit& sp) {
  const int r = sp.p / 2;
  const auto w = marking_weights(sp.p, sp.q);
  AuxProblem aux;
  aux.weights.push_back(Rat(r) * w[0]);
  aux.weights.push_back(Rat(r) * w[0]);
  for (int i = 0; i < sp.q; ++i) aux.weights.push_back(w[sp.p]);
  aux.strata = strata_of(aux.weights);
  return aux;
}

}  // namespace

TorsionEval torsion_case_eval(const MarkingSplit& sp, int which_case,
                              const Obj& src, const Obj& tgt) {
  if (sp.p % 2 != 0 || sp.q % 2 != 1)
    throw std::invalid_argument(
        "torsion reduction needs even heavy and odd light counts");
  const int r = sp.p / 2;
  const int s = (sp.q - 1) / 2;
  const Mask heavy = sp.heavy_mask();
  const long n0 = 4L * (r + s + sp.q + std::max(src.l, tgt.l));

  AuxProblem aux;
  std::vector<std::vector<int>> bases;
  std::vector<int> slope;
  std::vector<int> extra;
  int margin = 0;

  auto push_light_diff = [&](std::vector<int>& base) {
    for (int i = 0; i < sp.q; ++i) {
      const Mask bit = Mask{1} << (sp.p + i);
      base.push_back(int((tgt.E & bit) != 0) - int((src.E & bit) != 0));
    }
  };
  auto clump_slope = [&]() {
    slope.assign(aux.weights.size(), 0);
    slope[0] = r;
    for (std::size_t k = 0; k < aux.heavies.size(); ++k) slope[k + 1] = 1;
  };

  switch (which_case) {
    case 1: {  // bundle source, torsion target
      const Mask R = tgt.E & heavy;
      aux = support_problem(sp, R);
      std::vector<int> base;
      base.push_back(r + tgt.l - popcount(src.E & R));
      for (int m : aux.heavies) base.push_back(-int((src.E >> m) & 1u));
      push_light_diff(base);
      bases.push_back(std::move(base));
      clump_slope();
      extra = {src.l};
      margin = src.l;
      break;
    }
    case 2: {  // torsion source, bundle target
      const Mask R = src.E & heavy;
      aux = support_problem(sp, R);
      std::vector<int> base;
      base.push_back(r - src.l + popcount(tgt.E & R) - 2);
      for (int m : aux.heavies) base.push_back(int((tgt.E >> m) & 1u));
      push_light_diff(base);
      bases.push_back(std::move(base));
      clump_slope();
      extra = {tgt.l};
      margin = tgt.l;
      break;
    }
    case 3: {  // common support; one term per subset of R minus its min
      const Mask R = src.E & heavy;
      if (R != (tgt.E & heavy))
        throw std::invalid_argument("case 3 needs a common support");
      aux = support_problem(sp, R);
      clump_slope();
      const Mask rest = R & (R - 1);  // drop the smallest element
      for (int k = 0; k <= popcount(rest); ++k) {
        for (Mask J : subsets_of_size(rest, k)) {
          (void)J;
          std::vector<int> base;
          base.push_back(2 * k - src.l + tgt.l);
          for (std::size_t h = 0; h < aux.heavies.size(); ++h)
            base.push_back(0);
          push_light_diff(base);
          bases.push_back(std::move(base));
        }
      }
      break;
    }
    case 4: {  // complementary supports collide on the double clump
      if (((src.E & heavy) & (tgt.E & heavy)) != 0)
        throw std::invalid_argument("case 4 needs disjoint supports");
      aux = double_support_problem(sp);
      std::vector<int> base;
      base.push_back(-src.l - tgt.l - 2);
      base.push_back(0);
      push_light_diff(base);
      bases.push_back(std::move(base));
      slope.assign(aux.weights.size(), 0);
      slope[0] = 1;
      slope[1] = 1;
      break;
    }
    default:
      throw std::invalid_argument("torsion case must be 1..4");
  }

  TorsionEval ev;
  ev.twist_used = n0;
  bool sanctioned = true;
  for (const auto& b : bases)
    if (!devil_twist(aux.strata, b, slope, n0).ok) sanctioned = false;

  std::vector<GradedDim> samples;
  for (long N : {n0, n0 + 1, 2 * n0}) {
    Int total = 0;
    for (const auto& b : bases) {
      std::vector<int> exps(b.size());
      for (std::size_t i = 0; i < b.size(); ++i)
        exps[i] = b[i] + slope[i] * static_cast<int>(N);
      for (const Stratum& st : aux.strata)
        if (fixed_point_weight(exps, st.K) - margin <= -st.eta)
          sanctioned = false;
      total += deg0_invariants(exps, extra);
    }
    GradedDim g;
    if (total != 0) g[0] = total;
    samples.push_back(std::move(g));
  }
  ev.sanctioned = sanctioned;
  ev.stable = samples[0] == samples[1] && samples[1] == samples[2];
  ev.rgamma = samples[0];
  return ev;
}

std::optional<GradedDim> bundle_pair_rhom(const MarkingSplit& space,
                                          const FLabel& from,
                                          const FLabel& to) {
  if (window_obstruction(space, {from, to})) return std::nullopt;
  return stack_rhom(space.n(), from, to);
}

namespace {

// Expectation handling shared by all computed pairs: diagonal must be
// one copy of the base field in degree 0, backward must vanish, forward
// is informational (degree-0 concentration enforced for bundle pairs
// under strongness checking).
void settle(PairVerdict& v, const GradedDim& g, bool strong_forward) {
  const bool diag = v.i == v.j;
  const bool backward = v.i > v.j;
  if (diag) {
    if (is_point(g)) {
      v.status = VerdictStatus::ok;
      v.detail = "C in degree 0";
    } else {
      v.status = VerdictStatus::fail;
      v.detail = "expected C in degree 0, found " + graded_str(g);
    }
  } else if (backward) {
    if (g.empty()) {
      v.status = VerdictStatus::ok;
      v.detail = "vanishes";
    } else {
      v.status = VerdictStatus::fail;
      v.detail = "expected vanishing, found " + graded_str(g);
    }
  } else {
    if (strong_forward && !degree_zero_only(g)) {
      v.status = VerdictStatus::fail;
      v.detail = "forward morphisms outside degree 0: " + graded_str(g);
    } else {
      v.status = VerdictStatus::ok;
      v.detail = "forward: " + graded_str(g);
    }
  }
}

}  // namespace

PairVerdict verify_pair(const Collection& c, int i, int j,
                        const VerifyOptions& opts) {
  const MarkingSplit& sp = c.space;
  const Obj& src = c.objects.at(i);
  const Obj& tgt = c.objects.at(j);
  PairVerdict v;
  v.i = i;
  v.j = j;
  const bool diag = i == j;
  const bool backward = i > j;

  // Deliberately out-of-scope pair classes.
  if (src.kind == ObjKind::TildeTorsion || tgt.kind == ObjKind::TildeTorsion) {
    v.method = "out-of-scope";
    v.status = VerdictStatus::skipped_expected;
    v.detail = "pairs with the reduced torsion objects are not checked";
    return v;
  }
  if ((src.kind == ObjKind::Boundary) != (tgt.kind == ObjKind::Boundary)) {
    v.method = "out-of-scope";
    v.status = VerdictStatus::skipped_expected;
    v.detail = "boundary against interior pairs are not checked";
    return v;
  }
  if ((src.kind == ObjKind::Torsion || tgt.kind == ObjKind::Torsion) &&
      sp.q % 2 == 0) {
    v.method = "out-of-scope";
    v.status = VerdictStatus::skipped_expected;
    v.detail = "torsion pairs on even light counts are not checked";
    return v;
  }

  if (src.kind == ObjKind::Boundary) {  // both boundary
    if (src.divisor == tgt.divisor) {
      v.method = "boundary-koszul";
      const GradedDim g =
          boundary_sheaf_rhom(boundary_factor_dim(sp), src.a, src.b, tgt.a,
                              tgt.b);
      settle(v, g, false);
    } else {
      v.method = "disjoint-support";
      v.status = VerdictStatus::ok;
      v.detail = "distinct splits cannot clump simultaneously";
    }
    return v;
  }

  if (src.kind == ObjKind::Torsion || tgt.kind == ObjKind::Torsion) {
    const Mask heavy = sp.heavy_mask();
    int which = 0;
    if (src.kind == ObjKind::Bundle) {
      which = 1;
    } else if (tgt.kind == ObjKind::Bundle) {
      which = 2;
    } else {
      const Mask r1 = src.E & heavy, r2 = tgt.E & heavy;
      if (r1 == r2) {
        which = 3;
      } else if ((r1 & r2) == 0) {
        which = 4;
      } else {
        v.method = "disjoint-support";
        v.status = VerdictStatus::ok;
        v.detail = "overlapping supports cannot clump simultaneously";
        return v;
      }
    }
    v.method = "torsion-case-" + std::to_string(which);
    v.torsion_case = which;
    const TorsionEval ev = torsion_case_eval(sp, which, src, tgt);
    if (!ev.sanctioned) {
      v.status = VerdictStatus::inapplicable;
      v.detail = "twisted weight bound failed on a stratum";
    } else if (!ev.stable) {
      v.status = VerdictStatus::fail;
      v.detail = "twist samples disagree";
    } else {
      settle(v, ev.rgamma, false);
    }
    return v;
  }

  // Bundle against bundle.
  const FLabel from{src.l, src.E};
  const FLabel to{tgt.l, tgt.E};
  const Mask lights = sp.light_mask();
  const Mask bq_src = src.E & lights, bq_tgt = tgt.E & lights;

  if (sp.p % 2 == 0 && sp.q == 0) {
    // Block structure alone decides these; no window is needed.
    v.method = "block-orthogonality";
    settle(v, stack_rhom(sp.n(), from, to), opts.check_strongness);
    return v;
  }
  if (bq_src != bq_tgt && (bq_src & ~bq_tgt) != 0) {
    v.method = "block-orthogonality";
    const GradedDim g = stack_rhom(sp.n(), from, to);
    if (g.empty()) {
      v.status = VerdictStatus::ok;
      v.detail = "light block forces vanishing";
    } else {
      v.status = VerdictStatus::fail;
      v.detail = "expected block vanishing, found " + graded_str(g);
    }
    return v;
  }

  v.method = "window+stack";
  if (auto obst = window_obstruction(sp, {from, to})) {
    if (backward || diag) {
      v.status = VerdictStatus::fail;
      v.detail = obst->describe();
    } else {
      v.status = VerdictStatus::inapplicable;
      v.detail = "no common window: " + obst->describe();
    }
    return v;
  }
  settle(v, stack_rhom(sp.n(), from, to), opts.check_strongness);
  return v;
}

bool order_valid(const Collection& c) {
  for (std::size_t k = 1; k < c.objects.size(); ++k)
    if (!order_less(c.space, c.objects[k - 1], c.objects[k])) return false;
  return true;
}

VerifyReport verify_collection(const Collection& c,
                               const VerifyOptions& opts) {
  VerifyReport rep;
  rep.space = c.space;
  rep.variant = c.variant;
  rep.order_ok = order_valid(c);

  const int count = static_cast<int>(c.objects.size());
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < count; ++i)
    for (int j = 0; j <= i; ++j) pairs.push_back({i, j});
  if (opts.check_strongness)
    for (int i = 0; i < count; ++i)
      for (int j = i + 1; j < count; ++j) pairs.push_back({i, j});

  rep.verdicts = parallel_map<PairVerdict>(
      pairs.size(),
      [&](std::size_t k) {
        return verify_pair(c, pairs[k].first, pairs[k].second, opts);
      },
      opts.policy);

  for (const PairVerdict& v : rep.verdicts) {
    switch (v.status) {
      case VerdictStatus::ok:
        ++rep.ok_count;
        break;
      case VerdictStatus::fail:
        ++rep.fail_count;
        break;
      case VerdictStatus::skipped_expected:
        ++rep.skipped_count;
        break;
      case VerdictStatus::inapplicable:
        ++rep.inapplicable_count;
        break;
    }
    if (v.torsion_case > 0 && v.i >= v.j && v.status == VerdictStatus::ok)
      rep.fired_cases.insert(v.torsion_case);
  }
  return rep;
}

}  // namespace excol
