#pragma once

// Enumeration of the equivariant exceptional collections, their
// canonical order, and the symmetry check.  Objects come in four
// kinds: pushforward bundles F, torsion sheaves T supported over a
// heavy half-diagonal (odd light count), their analogues TT on spaces
// with even light count, and twisted boundary sheaves A.

#include <optional>
#include <string>
#include <vector>

#include "excol/marking.hpp"

namespace excol {

enum class ObjKind { Bundle, Torsion, TildeTorsion, Boundary };

struct Obj {
  ObjKind kind = ObjKind::Bundle;
  int l = 0;
  Mask E = 0;        // Bundle / Torsion / TildeTorsion label
  Mask divisor = 0;  // Boundary: canonical side, contains marking 0
  int a = 0, b = 0;  // Boundary twist relative to the canonical side

  friend bool operator==(const Obj&, const Obj&) = default;
};

const char* obj_tag(ObjKind kind);
std::string obj_describe(const MarkingSplit& space, const Obj& o);

struct Collection {
  MarkingSplit space;
  std::string variant;  // "1A", "1B" or "2A"
  std::vector<Obj> objects;
};

// Element-list lexicographic comparison of subsets.
bool lex_less(Mask x, Mask y);

// Bundle membership for the chosen variant ("1A" or "1B"); heavy-count
// criterion only, light part enters through the parity constraint.
bool bundle_member(const MarkingSplit& space, const std::string& variant,
                   const FLabel& x);

// Torsion-label membership: group 2 for odd light count; group 2B (or
// 2A under that variant) for even positive light count.
bool torsion_member(const MarkingSplit& space, const std::string& variant,
                    const FLabel& x);

// Boundary data for spaces with even light count: sides T with
// |T_p| = p/2 and |T_q| = q/2; delta_dim is the common projective
// factor dimension n/2 - 2.
int boundary_factor_dim(const MarkingSplit& space);
std::vector<Mask> boundary_divisors(const MarkingSplit& space);
std::vector<std::pair<int, int>> boundary_twists(const MarkingSplit& space);

// The enumerators.  enumerate_collection dispatches on the parity of
// the marking counts; the specialized entry points are kept public for
// targeted tests.
Collection enumerate_odd_p(int p, const std::string& variant = "1A");
Collection enumerate_odd_p_with_lights(int p, int q,
                                       const std::string& variant = "1A");
Collection enumerate_peven_qodd(int p, int q, const std::string& variant);
Collection enumerate_peven_qeven(int p, int q, const std::string& variant);
Collection enumerate_collection(const MarkingSplit& space,
                                const std::string& variant = "1A");

// Total order on objects within one collection; enumerators emit
// objects sorted by this key.
bool order_less(const MarkingSplit& space, const Obj& x, const Obj& y);

// Equivariance under adjacent transpositions of heavy and of light
// markings: every generator must permute the collection.  On failure
// returns a description of one violated (generator, object) pair.
std::optional<std::string> check_equivariance(const Collection& c);

// Apply a marking permutation (perm[i] = image of marking i) to an
// object; permutations must preserve the heavy/light split.
Obj apply_permutation(const MarkingSplit& space, const std::vector<int>& perm,
                      const Obj& o);

}  // namespace excol
