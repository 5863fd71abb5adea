#pragma once

// Fullness certificates.  Every dual label up to a cutoff is either a
// collection member or expanded by a resolution move whose Koszul
// stages are recorded.  A certificate replays offline: each node's
// children must match the move's stage table exactly, two exact
// identities must hold on the recorded stages (signed ranks cancel,
// and signed fixed-point characters cancel wherever the colliding set
// is split), and every edge must land on a member or strictly descend.

#include <map>
#include <string>
#include <vector>

#include "excol/collections.hpp"
#include "excol/score.hpp"

namespace excol {

// Move kinds: g1 collides a set disjoint from the label, g2 a subset
// of the label, g3 the common torsion support (the diagonal term
// survives as a torsion child); odd heavy counts use the g1/g2 schemas
// with their own colliding-set sizes.
enum class GameKind { g1, g2, g3, odd_case1, odd_case2 };

const char* game_name(GameKind g);

struct GameChild {
  int l = 0;
  Mask E = 0;
  int stage = 0;  // Koszul stage j; -1 marks the torsion augmentation
  int rdeg = 0;   // 0: stage pushes forward in degree 0, 1: in degree 1
  bool torsion = false;

  friend bool operator==(const GameChild&, const GameChild&) = default;
  friend auto operator<=>(const GameChild&, const GameChild&) = default;
};

struct CertNode {
  FLabel label;
  GameKind game = GameKind::g1;
  Mask I = 0;  // colliding set
  std::vector<GameChild> children;  // sorted
};

struct Certificate {
  MarkingSplit space;
  std::string variant;
  int lmax = 0;
  std::vector<CertNode> nodes;  // sorted by (l, E)
};

// Membership of a dual label: parity plus the bundle criterion.
bool dual_member(const MarkingSplit& space, const std::string& variant,
                 const FLabel& x);

struct Move {
  GameKind game = GameKind::g1;
  Mask I = 0;
};

// Canonical move for a non-member label (lex-least colliding set).
Move expansion_move(const MarkingSplit& space, const std::string& variant,
                    const FLabel& x);

// Stage table of a move, root stage excluded, sorted canonically.
std::vector<GameChild> game_children(const MarkingSplit& space,
                                     const FLabel& x, GameKind game, Mask I);

// The root's own stage term (its position and degree in the complex).
GameChild root_term(const FLabel& x, GameKind game, Mask I);

Certificate certify(const MarkingSplit& space, const std::string& variant,
                    int lmax);

// Both stage identities for one node, recomputed from the recorded
// children so any tampering is caught.
bool koszul_class_check(const MarkingSplit& space, const CertNode& node,
                        std::string* why = nullptr);

struct CertCheck {
  bool ok = false;
  long nodes_checked = 0;
  long moves_checked = 0;
  std::string detail;  // first failure
};

CertCheck check_certificate(const Certificate& cert);

}  // namespace excol
