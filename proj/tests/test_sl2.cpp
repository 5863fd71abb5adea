#include <doctest.h>

#include <map>

#include "excol/sl2.hpp"

using namespace excol;

namespace {

// Independent oracle: a representation is determined by its weight
// multiset, and the tensor product convolves weight multisets.  Irreps
// are recovered greedily from the top weight down.
using Weights = std::map<int, Int>;

Weights weights_of(int l) {
  Weights w;
  for (int m = 0; m <= l; ++m) w[l - 2 * m] += 1;
  return w;
}

Weights weights_of(const IrrepSum& s) {
  Weights w;
  for (const auto& [l, mult] : s.mults())
    for (int m = 0; m <= l; ++m) w[l - 2 * m] += mult;
  return w;
}

Weights convolve(const Weights& x, const Weights& y) {
  Weights out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out[a + b] += ca * cb;
  return out;
}

IrrepSum extract_irreps(Weights w) {
  IrrepSum out;
  while (!w.empty()) {
    const auto top = std::prev(w.end());
    const int l = top->first;
    const Int mult = top->second;
    REQUIRE(l >= 0);
    REQUIRE(mult > 0);
    out.add(l, mult);
    for (int m = 0; m <= l; ++m) {
      const int e = l - 2 * m;
      w[e] -= mult;
      if (w[e] == 0) w.erase(e);
    }
  }
  return out;
}

IrrepSum make(std::initializer_list<std::pair<int, int>> parts) {
  IrrepSum s;
  for (const auto& [l, m] : parts) s.add(l, m);
  return s;
}

}  // namespace

TEST_CASE("irrep sums store sparsely with exact multiplicities") {
  IrrepSum s;
  CHECK(s.empty());
  s.add(3, 2);
  s.add(3, -2);
  CHECK(s.empty());
  s.add(0, 1);
  s.add(4, 3);
  CHECK(s.dim() == 1 + 3 * 5);
  CHECK(s.multiplicity(4) == 3);
  CHECK(s.multiplicity(2) == 0);
  CHECK_THROWS_AS(s.add(-1, 1), std::invalid_argument);
}

TEST_CASE("pairwise product matches the weight-multiset oracle") {
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b) {
      const IrrepSum got = clebsch_gordan(a, b);
      const IrrepSum expect =
          extract_irreps(convolve(weights_of(a), weights_of(b)));
      CHECK(got == expect);
      CHECK(got.dim() == Int(a + 1) * (b + 1));
    }
}

TEST_CASE("pairwise product spot values") {
  CHECK(clebsch_gordan(0, 5) == make({{5, 1}}));
  CHECK(clebsch_gordan(1, 1) == make({{2, 1}, {0, 1}}));
  CHECK(clebsch_gordan(2, 3) == make({{5, 1}, {3, 1}, {1, 1}}));
}

TEST_CASE("tensor of sums is bilinear and matches the oracle") {
  const IrrepSum x = make({{0, 2}, {3, 1}, {4, 1}});
  const IrrepSum y = make({{1, 3}, {2, 1}});
  const IrrepSum got = tensor(x, y);
  const IrrepSum expect =
      extract_irreps(convolve(weights_of(x), weights_of(y)));
  CHECK(got == expect);
  CHECK(got.dim() == x.dim() * y.dim());
}

TEST_CASE("trivial summand appears exactly on matching factors") {
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      CHECK(invariant_multiplicity(clebsch_gordan(a, b)) ==
            (a == b ? 1 : 0));
}

TEST_CASE("graded tensor convolves degrees") {
  VirtualGradedRep x, y;
  x.add(0, make({{1, 1}}));
  x.add(1, make({{0, 2}}));
  y.add(0, make({{1, 1}}));
  y.add(2, make({{2, 1}}));
  const VirtualGradedRep got = graded_tensor(x, y);
  CHECK(*got.at(0) == tensor(make({{1, 1}}), make({{1, 1}})));
  CHECK(*got.at(1) == make({{1, 2}}));
  CHECK(*got.at(2) == tensor(make({{1, 1}}), make({{2, 1}})));
  CHECK(*got.at(3) == make({{2, 2}}));
  CHECK(got.at(4) == nullptr);
}

TEST_CASE("graded invariants pick the trivial multiplicity per degree") {
  VirtualGradedRep x;
  x.add(0, tensor(make({{1, 1}}), make({{1, 1}})));  // V2 + V0
  x.add(3, make({{2, 1}}));                          // no invariants
  const auto inv = graded_invariants(x);
  REQUIRE(inv.size() == 1);
  CHECK(inv.at(0) == 1);
}

TEST_CASE("formal characters extend through the duality rule") {
  CHECK(sl2_character(-1).empty());
  const Laurent c2 = sl2_character(2);
  CHECK(c2 == Laurent{{-2, 1}, {0, 1}, {2, 1}});
  for (int d = -8; d <= -2; ++d) {
    Laurent neg = sl2_character(d);
    Laurent pos = sl2_character(-d - 2);
    for (auto& [e, c] : pos) c = -c;
    CHECK(neg == pos);
  }
}

TEST_CASE("characters are multiplicative across the pairwise product") {
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) {
      const Laurent prod = laurent_mul(sl2_character(a), sl2_character(b));
      const IrrepSum cg = clebsch_gordan(a, b);
      Laurent sum;
      for (const auto& [l, m] : cg.mults())
        laurent_add(sum, sl2_character(l), m);
      CHECK(prod == sum);
    }
}

TEST_CASE("laurent arithmetic trims zero coefficients") {
  Laurent x{{0, 1}, {2, -1}};
  Laurent y{{0, 1}, {2, 1}};
  laurent_add(x, y, 1);
  laurent_trim(x);
  CHECK(x == Laurent{{0, 2}});
  const Laurent z = laurent_mul(Laurent{{1, 1}, {-1, -1}},
                                Laurent{{1, 1}, {-1, 1}});
  CHECK(z == Laurent{{2, 1}, {-2, -1}});
}
