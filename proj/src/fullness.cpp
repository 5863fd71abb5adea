#include "excol/fullness.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "excol/git_windows.hpp"
#include "excol/sl2.hpp"

namespace excol {

const char* game_name(GameKind g) {
  switch (g) {
    case GameKind::g1:
      return "g1";
    case GameKind::g2:
      return "g2";
    case GameKind::g3:
      return "g3";
    case GameKind::odd_case1:
      return "odd-case1";
    case GameKind::odd_case2:
      return "odd-case2";
  }
  return "?";
}

bool dual_member(const MarkingSplit& space, const std::string& variant,
                 const FLabel& x) {
  return bundle_member(space, variant, x);
}

namespace {

Mask least_subset(Mask universe, int k) {
  if (popcount(universe) < k)
    throw std::invalid_argument("universe too small for colliding set");
  Mask out = 0;
  Mask rest = universe;
  for (int taken = 0; taken < k; ++taken) {
    const Mask low = rest & (~rest + 1);
    out |= low;
    rest &= ~low;
  }
  return out;
}

std::string label_str(const FLabel& x) {
  std::ostringstream os;
  os << "(l=" << x.l << ", E=" << x.E << ")";
  return os.str();
}

std::pair<int, int> descent_key(const MarkingSplit& space, const FLabel& x) {
  return {score_S(space, x), x.l};
}

}  // namespace

Move expansion_move(const MarkingSplit& space, const std::string& variant,
                    const FLabel& x) {
  if (dual_member(space, variant, x))
    throw std::invalid_argument("label is already a member");
  const Mask heavy = space.heavy_mask();
  const Mask light = space.light_mask();
  if (space.q == 0) {
    const int r = (space.p - 1) / 2;
    const int e = popcount(x.E);
    if (e <= r)
      return {GameKind::odd_case1, least_subset(heavy & ~x.E, r + 1)};
    return {GameKind::odd_case2, least_subset(x.E, r + 1)};
  }
  const int r = space.p / 2;
  const int s = (space.q - 1) / 2;
  const int e_p = popcount(x.E & heavy);
  const int e_q = popcount(x.E & light);
  if (classify_group(space.p, space.q, x.l, e_p, e_q).g2)
    return {GameKind::g3, x.E & heavy};
  if (e_p < r) return {GameKind::g1, least_subset(heavy & ~x.E, r + 1)};
  if (e_p >= r + 1) return {GameKind::g2, least_subset(x.E & heavy, r + 1)};
  if (e_q <= s)
    return {GameKind::g1, (heavy & ~x.E) | least_subset(light & ~x.E, s + 1)};
  return {GameKind::g2, x.E};
}

std::vector<GameChild> game_children(const MarkingSplit&, const FLabel& x,
                                     GameKind game, Mask I) {
  std::vector<GameChild> out;
  const int i = popcount(I);
  auto emit = [&](int d, Mask E2, int j) {
    if (d >= 0)
      out.push_back({d, E2, j, 0, false});
    else if (d <= -2)
      out.push_back({-d - 2, E2, j, 1, false});
    // d = -1: the stage pushes forward to zero and is skipped.
  };
  switch (game) {
    case GameKind::g1:
    case GameKind::odd_case1:
      for (int j = 1; j <= i; ++j)
        for (Mask J : subsets_of_size(I, j)) emit(x.l - j, x.E | J, j);
      break;
    case GameKind::g2:
    case GameKind::odd_case2: {
      const Mask eprime = x.E & ~I;
      for (int j = 0; j < i; ++j)
        for (Mask J : subsets_of_size(I, j))
          emit(i - 2 - x.l - j, eprime | J, j);
      break;
    }
    case GameKind::g3: {
      const Mask eq = x.E & ~I;
      for (int j = 0; j < i; ++j)
        for (Mask J : subsets_of_size(I, j)) emit(i - 2 - x.l - j, eq | J, j);
      out.push_back({x.l, x.E, -1, 0, true});
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GameChild root_term(const FLabel& x, GameKind game, Mask I) {
  if (game == GameKind::g1 || game == GameKind::odd_case1)
    return {x.l, x.E, 0, 0, false};
  return {x.l, x.E, popcount(I), 1, false};
}

Certificate certify(const MarkingSplit& space, const std::string& variant,
                    int lmax) {
  if (variant == "2A")
    throw std::invalid_argument("no certification for the 2A variant");
  const bool odd_bare = space.p % 2 == 1 && space.q == 0;
  const bool even_odd = space.p % 2 == 0 && space.q % 2 == 1;
  if (!odd_bare && !even_odd)
    throw std::invalid_argument(
        "certification covers odd heavy counts without lights and even "
        "heavy counts with odd light counts");

  Certificate cert;
  cert.space = space;
  cert.variant = variant;
  cert.lmax = lmax;

  std::map<std::pair<int, Mask>, CertNode> done;
  std::vector<FLabel> work;
  const Mask all = full_mask(space.n());
  for (int l = 0; l <= lmax; ++l)
    for (Mask E = 0; E <= all; ++E) {
      const FLabel x{l, E};
      if (!label_parity_ok(x)) continue;
      if (!dual_member(space, variant, x)) work.push_back(x);
    }
  while (!work.empty()) {
    const FLabel x = work.back();
    work.pop_back();
    if (done.count({x.l, x.E})) continue;
    const Move mv = expansion_move(space, variant, x);
    CertNode node{x, mv.game, mv.I, game_children(space, x, mv.game, mv.I)};
    for (const GameChild& ch : node.children) {
      if (ch.torsion) continue;
      const FLabel y{ch.l, ch.E};
      if (!dual_member(space, variant, y) && !done.count({y.l, y.E}))
        work.push_back(y);
    }
    done.insert({{x.l, x.E}, std::move(node)});
  }
  cert.nodes.reserve(done.size());
  for (auto& [key, node] : done) cert.nodes.push_back(std::move(node));
  return cert;
}

bool koszul_class_check(const MarkingSplit& space, const CertNode& node,
                        std::string* why) {
  std::vector<GameChild> terms = node.children;
  terms.push_back(root_term(node.label, node.game, node.I));

  // Signed stage ranks cancel (the diagonal term has generic rank 0).
  Int rank_sum = 0;
  for (const GameChild& t : terms) {
    if (t.torsion) continue;
    const Int v = t.l + 1;
    rank_sum += ((t.stage + t.rdeg) % 2 == 0) ? v : -v;
  }
  if (rank_sum != 0) {
    if (why) *why = "stage ranks do not cancel for " + label_str(node.label);
    return false;
  }

  // Signed fixed-point characters cancel at every fixed point that
  // splits the colliding set (there the complex is exact).
  const Mask all = full_mask(space.n());
  for (Mask K = 1; K < all; ++K) {
    if ((node.I & K) == 0) continue;
    if ((node.I & ~K & all) == 0) continue;
    Laurent acc;
    for (const GameChild& t : terms) {
      if (t.torsion) continue;
      const int w = popcount(t.E & ~K & all) - popcount(t.E & K);
      const Int sgn = ((t.stage + t.rdeg) % 2 == 0) ? 1 : -1;
      for (const auto& [e, cnt] : sl2_character(t.l)) acc[e + w] += sgn * cnt;
    }
    laurent_trim(acc);
    if (!acc.empty()) {
      if (why) {
        std::ostringstream os;
        os << "stage characters do not cancel for " << label_str(node.label)
           << " at fixed-point set " << K;
        *why = os.str();
      }
      return false;
    }
  }
  return true;
}

CertCheck check_certificate(const Certificate& cert) {
  CertCheck out;
  const MarkingSplit& space = cert.space;
  const Mask heavy = space.heavy_mask();
  const Mask light = space.light_mask();
  const Mask all = full_mask(space.n());

  std::map<std::pair<int, Mask>, const CertNode*> nodes;
  for (const CertNode& node : cert.nodes) {
    if (!nodes.insert({{node.label.l, node.label.E}, &node}).second) {
      out.detail = "duplicate node for " + label_str(node.label);
      return out;
    }
  }

  for (const CertNode& node : cert.nodes) {
    const FLabel& x = node.label;
    if (!label_parity_ok(x)) {
      out.detail = "node label breaks parity: " + label_str(x);
      return out;
    }
    if (dual_member(space, cert.variant, x)) {
      out.detail = "member label was expanded: " + label_str(x);
      return out;
    }

    // The move kind must match the label's case; the colliding set must
    // have the right shape (any valid set is accepted, not only the
    // lex-least one, so relabeled certificates replay).
    const GameKind expected = expansion_move(space, cert.variant, x).game;
    if (node.game != expected) {
      out.detail = std::string("move kind should be ") + game_name(expected) +
                   " for " + label_str(x);
      return out;
    }
    const int k_p = popcount(node.I & heavy);
    const int k_q = popcount(node.I & light);
    bool shape_ok = false;
    switch (node.game) {
      case GameKind::g1:
      case GameKind::odd_case1:
        shape_ok = (node.I & x.E) == 0 && (node.I & all) == node.I &&
                   node.I != 0 && unstable_type(space.p, space.q, k_p, k_q);
        break;
      case GameKind::g2:
      case GameKind::odd_case2:
        shape_ok = (node.I & ~x.E) == 0 && node.I != 0 &&
                   unstable_type(space.p, space.q, k_p, k_q);
        break;
      case GameKind::g3:
        shape_ok = node.I == (x.E & heavy) && k_p == space.p / 2 &&
                   k_q == 0 && !unstable_type(space.p, space.q, k_p, k_q);
        break;
    }
    if (!shape_ok) {
      out.detail = "colliding set has the wrong shape for " + label_str(x);
      return out;
    }

    std::vector<GameChild> expect =
        game_children(space, x, node.game, node.I);
    std::vector<GameChild> got = node.children;
    std::sort(got.begin(), got.end());
    if (got != expect) {
      out.detail = "stage table mismatch for " + label_str(x);
      return out;
    }

    std::string why;
    if (!koszul_class_check(space, node, &why)) {
      out.detail = why;
      return out;
    }
    ++out.moves_checked;

    const auto parent_key = descent_key(space, x);
    for (const GameChild& ch : node.children) {
      const FLabel y{ch.l, ch.E};
      if (ch.torsion) {
        if (!torsion_member(space, cert.variant, y)) {
          out.detail = "torsion child is not a member under " + label_str(x);
          return out;
        }
        continue;
      }
      if (dual_member(space, cert.variant, y)) continue;
      if (!nodes.count({y.l, y.E})) {
        out.detail = "unexpanded non-member child " + label_str(y) +
                     " under " + label_str(x);
        return out;
      }
      if (!(descent_key(space, y) < parent_key)) {
        out.detail = "descent fails from " + label_str(x) + " to " +
                     label_str(y);
        return out;
      }
    }
    ++out.nodes_checked;
  }

  // Coverage: every dual label up to the cutoff is a member or expanded.
  for (int l = 0; l <= cert.lmax; ++l)
    for (Mask E = 0; E <= all; ++E) {
      const FLabel x{l, E};
      if (!label_parity_ok(x)) continue;
      if (dual_member(space, cert.variant, x)) continue;
      if (!nodes.count({x.l, x.E})) {
        out.detail = "uncovered label " + label_str(x);
        return out;
      }
    }

  out.ok = true;
  return out;
}

}  // namespace excol
