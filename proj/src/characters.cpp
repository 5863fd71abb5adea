#include "excol/characters.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace excol {

namespace {

void partitions_rec(int remaining, int max_part, Partition& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

// Border-strip recursion on the beta-set.  Removing a strip of size k
// replaces some beta number b by b-k (distinctness must be preserved);
// the sign is (-1)^{number of beta numbers strictly between b-k and b}.
Int strip_rec(std::vector<int>& beta, const Partition& mu, std::size_t idx) {
  if (idx == mu.size()) return 1;
  const int k = mu[idx];
  Int total = 0;
  for (std::size_t pos = 0; pos < beta.size(); ++pos) {
    const int b = beta[pos];
    if (b < k) continue;
    const int target = b - k;
    bool clash = false;
    int leg = 0;
    for (std::size_t other = 0; other < beta.size(); ++other) {
      if (other == pos) continue;
      if (beta[other] == target) clash = true;
      if (beta[other] > target && beta[other] < b) ++leg;
    }
    if (clash) continue;
    beta[pos] = target;
    const Int sub = strip_rec(beta, mu, idx + 1);
    beta[pos] = b;
    if (leg % 2 == 0)
      total += sub;
    else
      total -= sub;
  }
  return total;
}

int partition_sum(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

}  // namespace

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::string partition_name(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  s += "]";
  return s;
}

Int class_size(const Partition& cycle_type, int n) {
  if (partition_sum(cycle_type) != n)
    throw std::invalid_argument("cycle type does not sum to n");
  Int centralizer = 1;
  int run_value = 0;
  int run_length = 0;
  auto flush = [&]() {
    for (int i = 1; i <= run_length; ++i) centralizer *= i;  // m_j!
    for (int i = 0; i < run_length; ++i) centralizer *= run_value;
  };
  for (int part : cycle_type) {
    if (part == run_value) {
      ++run_length;
    } else {
      flush();
      run_value = part;
      run_length = 1;
    }
  }
  flush();
  return factorial(n) / centralizer;
}

Int hook_dimension(const Partition& lambda) {
  const int n = partition_sum(lambda);
  const int rows = static_cast<int>(lambda.size());
  Int hooks = 1;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      int below = 0;
      for (int i2 = i + 1; i2 < rows; ++i2)
        if (lambda[i2] > j) ++below;
      hooks *= (lambda[i] - j) + below;
    }
  }
  return factorial(n) / hooks;
}

Int irreducible_character(const Partition& lambda, const Partition& mu) {
  const int n = partition_sum(lambda);
  if (partition_sum(mu) != n)
    throw std::invalid_argument("partition sizes disagree");
  // Pad to n rows so every strip removal stays inside the beta-set.
  std::vector<int> beta(n);
  for (int i = 0; i < n; ++i) {
    const int part = i < static_cast<int>(lambda.size()) ? lambda[i] : 0;
    beta[i] = part + (n - 1 - i);
  }
  if (n == 0) return 1;
  return strip_rec(beta, mu, 0);
}

void fill_cycles(std::vector<int>& perm, int first, const Partition& mu) {
  int base = first;
  for (int part : mu) {
    for (int i = 0; i < part; ++i)
      perm[base + i] = base + (i + 1) % part;
    base += part;
  }
}

Int permutation_character(const Collection& c, const Partition& mu_p,
                          const Partition& mu_q) {
  const int n = c.space.n();
  std::vector<int> perm(n);
  fill_cycles(perm, 0, mu_p);
  fill_cycles(perm, c.space.p, mu_q);
  Int fixed = 0;
  for (const Obj& o : c.objects)
    if (apply_permutation(c.space, perm, o) == o) ++fixed;
  return fixed;
}

Decomposition decompose(const Collection& c) {
  const int p = c.space.p;
  const int q = c.space.q;
  const auto parts_p = partitions(p);
  const auto parts_q = partitions(q);
  const Int group_order = factorial(p) * factorial(q);

  struct ClassData {
    Int size;
    Int fixed;
    std::size_t ip, iq;
  };
  std::vector<ClassData> classes;
  for (std::size_t a = 0; a < parts_p.size(); ++a)
    for (std::size_t b = 0; b < parts_q.size(); ++b)
      classes.push_back({class_size(parts_p[a], p) * class_size(parts_q[b], q),
                         permutation_character(c, parts_p[a], parts_q[b]), a,
                         b});

  Decomposition out;
  out.valid = true;
  for (const Partition& lam : parts_p) {
    std::vector<Int> chi_p(parts_p.size());
    for (std::size_t a = 0; a < parts_p.size(); ++a)
      chi_p[a] = irreducible_character(lam, parts_p[a]);
    for (const Partition& nu : parts_q) {
      std::vector<Int> chi_q(parts_q.size());
      for (std::size_t b = 0; b < parts_q.size(); ++b)
        chi_q[b] = irreducible_character(nu, parts_q[b]);
      Int inner = 0;
      for (const ClassData& cd : classes)
        inner += cd.size * cd.fixed * chi_p[cd.ip] * chi_q[cd.iq];
      if (inner % group_order != 0) {
        out.valid = false;
        continue;
      }
      const Int mult = inner / group_order;
      if (mult < 0) out.valid = false;
      if (mult != 0) {
        out.mults[{lam, nu}] = mult;
        out.dimension_total += mult * hook_dimension(lam) * hook_dimension(nu);
      }
    }
  }
  if (out.dimension_total != Int(static_cast<long>(c.objects.size())))
    out.valid = false;
  return out;
}

OrbitReport orbits(const Collection& c) {
  const int n = c.space.n();
  const auto N = c.objects.size();

  std::map<std::tuple<int, int, Mask, Mask, int, int>, int> index;
  for (std::size_t i = 0; i < N; ++i) {
    const Obj& o = c.objects[i];
    index[{static_cast<int>(o.kind), o.l, o.E, o.divisor, o.a, o.b}] =
        static_cast<int>(i);
  }
  auto find_index = [&](const Obj& o) {
    auto it = index.find({static_cast<int>(o.kind), o.l, o.E, o.divisor, o.a,
                          o.b});
    if (it == index.end())
      throw std::logic_error("permutation image not in collection");
    return it->second;
  };

  std::vector<int> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  std::vector<std::vector<int>> gens;
  for (int i = 0; i + 1 < c.space.p; ++i) {
    std::vector<int> g(n);
    std::iota(g.begin(), g.end(), 0);
    std::swap(g[i], g[i + 1]);
    gens.push_back(g);
  }
  for (int i = c.space.p; i + 1 < n; ++i) {
    std::vector<int> g(n);
    std::iota(g.begin(), g.end(), 0);
    std::swap(g[i], g[i + 1]);
    gens.push_back(g);
  }
  for (std::size_t i = 0; i < N; ++i)
    for (const auto& g : gens)
      unite(static_cast<int>(i), find_index(apply_permutation(c.space, g,
                                                              c.objects[i])));

  std::map<int, std::vector<int>> groups;
  for (std::size_t i = 0; i < N; ++i)
    groups[find(static_cast<int>(i))].push_back(static_cast<int>(i));

  OrbitReport out;
  std::vector<std::pair<long, int>> size_rep;
  for (const auto& [root, members] : groups)
    size_rep.push_back({static_cast<long>(members.size()), members.front()});
  std::sort(size_rep.begin(), size_rep.end());
  for (const auto& [size, rep] : size_rep) {
    out.orbit_sizes.push_back(size);
    out.representatives.push_back(rep);
  }
  out.orbit_count = static_cast<long>(groups.size());

  // Burnside cross-check: average fixed-point counts over the group.
  const auto parts_p = partitions(c.space.p);
  const auto parts_q = partitions(c.space.q);
  Int weighted = 0;
  for (const Partition& mp : parts_p)
    for (const Partition& mq : parts_q)
      weighted += class_size(mp, c.space.p) * class_size(mq, c.space.q) *
                  permutation_character(c, mp, mq);
  const Int order = factorial(c.space.p) * factorial(c.space.q);
  if (weighted % order != 0)
    throw std::logic_error("Burnside average is not an integer");
  out.burnside_count = weighted / order;
  return out;
}

}  // namespace excol
