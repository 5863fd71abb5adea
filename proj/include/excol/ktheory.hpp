#pragma once

// Exact K-group rank for weighted pointed genus-zero spaces, computed
// by walking the weight chamber decomposition.  The walk moves the
// given weights linearly toward (1, eps, .., eps) whose space is a
// projective space of rank n-2; every wall crossed on the way
// contributes blow-up or blow-down corrections counted by disjoint
// families of colliding subsets.

#include <vector>

#include "excol/ints.hpp"

namespace excol {

// Weights must satisfy 0 < a_i <= 1 and total > 2.  Weight vectors on
// a chamber wall (some subset summing to exactly 1) are nudged
// uniformly downward into the adjacent chamber, matching the walk
// direction.
Int rank_hassett(std::vector<Rat> weights);

// Rank for the linearization weights of the (p, q) space, bumped
// uniformly upward into the ambient weight chamber.
Int rank_mpq(int p, int q);

}  // namespace excol
