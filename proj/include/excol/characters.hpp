#pragma once

// Symmetric-group character arithmetic, exact throughout.  Characters
// are computed by border-strip recursion over beta-sets; dimensions get
// an independent hook-length route.  The product group of heavy and
// light permutations acts on a collection by relabeling markings, and
// the resulting permutation character decomposes into pairs of
// partitions with nonnegative integer multiplicities.

#include <map>
#include <string>
#include <vector>

#include "excol/collections.hpp"
#include "excol/ints.hpp"

namespace excol {

using Partition = std::vector<int>;  // weakly decreasing, positive parts

std::vector<Partition> partitions(int n);
std::string partition_name(const Partition& p);

Int class_size(const Partition& cycle_type, int n);
Int hook_dimension(const Partition& lambda);

// chi_lambda evaluated on the class of cycle type mu (border strips).
Int irreducible_character(const Partition& lambda, const Partition& mu);

// A permutation with the given cycle type on markings first..first+k-1,
// written into perm.
void fill_cycles(std::vector<int>& perm, int first, const Partition& mu);

// Number of objects fixed by the class representative with heavy cycle
// type mu_p and light cycle type mu_q.
Int permutation_character(const Collection& c, const Partition& mu_p,
                          const Partition& mu_q);

struct Decomposition {
  // (heavy partition, light partition) -> multiplicity, zeros absent.
  std::map<std::pair<Partition, Partition>, Int> mults;
  bool valid = false;  // all multiplicities nonnegative integers
  Int dimension_total = 0;
};

Decomposition decompose(const Collection& c);

struct OrbitReport {
  long orbit_count = 0;
  std::vector<long> orbit_sizes;       // sorted ascending
  std::vector<int> representatives;    // object index per orbit
  Int burnside_count = 0;              // must equal orbit_count
};

OrbitReport orbits(const Collection& c);

}  // namespace excol
