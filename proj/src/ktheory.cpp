#include "excol/ktheory.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

#include "excol/git_windows.hpp"
#include "excol/marking.hpp"

namespace excol {

namespace {

std::map<std::vector<Rat>, Int> g_memo;
std::mutex g_memo_mutex;

Rat subset_sum(const std::vector<Rat>& w, Mask J) {
  Rat s = 0;
  for (int i = 0; i < static_cast<int>(w.size()); ++i)
    if ((J >> i) & 1u) s += w[i];
  return s;
}

// Nonempty families of pairwise disjoint subsets drawn from `pool`,
// invoking fn(product of (|J|-2), union mask, member list).
void disjoint_families(const std::vector<Mask>& pool, std::size_t from,
                       Mask used, const Int& factor,
                       std::vector<Mask>& current,
                       const std::function<void(const Int&,
                                                const std::vector<Mask>&)>& fn) {
  for (std::size_t i = from; i < pool.size(); ++i) {
    if (pool[i] & used) continue;
    current.push_back(pool[i]);
    const Int f = factor * (popcount(pool[i]) - 2);
    fn(f, current);
    disjoint_families(pool, i + 1, used | pool[i], f, current, fn);
    current.pop_back();
  }
}

Int rank_impl(std::vector<Rat> w);

// Weights of the space obtained by letting every subset in `family`
// collide at walk time t: collided subsets become weight-1 points,
// survivors keep their interpolated weight.
Int family_rank(const std::vector<Rat>& at_event,
                const std::vector<Mask>& family) {
  Mask used = 0;
  for (Mask J : family) used |= J;
  std::vector<Rat> next;
  for (int i = 0; i < static_cast<int>(at_event.size()); ++i)
    if (!((used >> i) & 1u)) next.push_back(at_event[i]);
  next.insert(next.end(), family.size(), Rat(1));
  return rank_impl(std::move(next));
}

Int rank_impl(std::vector<Rat> w) {
  const int n = static_cast<int>(w.size());
  if (n < 3) throw std::invalid_argument("need at least three markings");
  std::sort(w.begin(), w.end(), std::greater<Rat>());

  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_memo.find(w);
    if (it != g_memo.end()) return it->second;
  }

  const Mask all = full_mask(n);

  // Nudge off chamber walls, downward, by less than the smallest
  // margin of any strictly unstable subset.
  bool on_wall = false;
  for (Mask J = 1; J < all && !on_wall; ++J)
    if (popcount(J) >= 2 && subset_sum(w, J) == 1) on_wall = true;
  if (on_wall) {
    Rat margin = w.back();  // keep every weight positive
    for (Mask J = 1; J <= all; ++J) {
      const Rat s = subset_sum(w, J);
      if (s > 1) margin = std::min(margin, Rat((s - 1) / popcount(J)));
    }
    const Rat delta = margin / 2;
    std::vector<Rat> nudged = w;
    for (Rat& a : nudged) a -= delta;
    const Int r = rank_impl(std::move(nudged));
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    g_memo.emplace(std::move(w), r);
    return r;
  }

  // Walk toward (1, eps, .., eps); the heavy marking is the one of
  // maximal weight (sorted: index 0).
  const Rat eps = (Rat(1, n - 1) + Rat(1, n - 2)) / 2;
  std::vector<Rat> target(n, eps);
  target[0] = 1;

  // Events: subsets whose weight sum crosses 1 strictly inside the
  // walk, grouped by crossing time; |J| = 2 carries factor zero.
  std::map<Rat, std::pair<std::vector<Mask>, std::vector<Mask>>> events;
  for (Mask J = 1; J < all; ++J) {
    const int k = popcount(J);
    if (k < 3 || k > n - 1) continue;
    const Rat s0 = subset_sum(w, J);
    const Rat s1 = subset_sum(target, J);
    if (s0 == s1) continue;
    const Rat t = (1 - s0) / (s1 - s0);
    if (!(t > 0 && t < 1)) continue;
    if (s1 < s0)
      events[t].first.push_back(J);   // downward: becomes collidable
    else
      events[t].second.push_back(J);  // upward: stops being collidable
  }

  Int rank = n - 2;
  for (const auto& [t, du] : events) {
    std::vector<Rat> at(n);
    for (int i = 0; i < n; ++i) at[i] = w[i] + t * (target[i] - w[i]);
    std::vector<Mask> current;
    const auto add = [&](int sign, const std::vector<Mask>& pool) {
      disjoint_families(
          pool, 0, 0, Int(1), current,
          [&](const Int& factor, const std::vector<Mask>& family) {
            if (factor == 0) return;
            rank += sign * factor * family_rank(at, family);
          });
    };
    add(+1, du.first);
    add(-1, du.second);
  }

  std::lock_guard<std::mutex> lock(g_memo_mutex);
  auto [it, inserted] = g_memo.emplace(std::move(w), rank);
  return it->second;
}

}  // namespace

Int rank_hassett(std::vector<Rat> weights) {
  Rat total = 0;
  for (const Rat& a : weights) {
    if (!(a > 0 && a <= 1))
      throw std::invalid_argument("weights must lie in (0, 1]");
    total += a;
  }
  if (!(total > 2)) throw std::invalid_argument("weight total must exceed 2");
  return rank_impl(std::move(weights));
}

Int rank_mpq(int p, int q) {
  std::vector<Rat> w = marking_weights(p, q);
  const int n = static_cast<int>(w.size());
  const Mask all = full_mask(n);
  Rat gap(1);
  for (Mask J = 1; J < all; ++J) {
    Rat s = 0;
    for (int i = 0; i < n; ++i)
      if ((J >> i) & 1u) s += w[i];
    if (s == 1) throw std::logic_error("linearization weights not generic");
    const Rat d = s > 1 ? Rat(s - 1) : Rat(1 - s);
    gap = std::min(gap, d);
  }
  const Rat delta = gap / (2 * n);
  for (Rat& a : w) a += delta;
  return rank_hassett(std::move(w));
}

}  // namespace excol
