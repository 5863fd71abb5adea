#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "excol/collections.hpp"
#include "excol/verify.hpp"

using namespace excol;

namespace {

int find_obj(const Collection& c, ObjKind kind, int l, Mask E) {
  for (std::size_t k = 0; k < c.objects.size(); ++k) {
    const Obj& o = c.objects[k];
    if (o.kind == kind && o.l == l && o.E == E) return static_cast<int>(k);
  }
  return -1;
}

bool counts_add_up(const VerifyReport& r) {
  return r.ok_count + r.fail_count + r.skipped_count + r.inapplicable_count ==
         static_cast<long>(r.verdicts.size());
}

}  // namespace

TEST_CASE("five heavy markings: every backward pair vanishes in a window") {
  const Collection c = enumerate_collection({5, 0});
  const VerifyReport rep = verify_collection(c);
  CHECK(rep.verdicts.size() == 28);  // diagonal plus backward
  CHECK(rep.ok_count == 28);
  CHECK(rep.fail_count == 0);
  CHECK(rep.skipped_count == 0);
  CHECK(rep.inapplicable_count == 0);
  CHECK(rep.all_ok());
  CHECK(rep.fired_cases.empty());
  CHECK(counts_add_up(rep));
  for (const PairVerdict& v : rep.verdicts) CHECK(v.method == "window+stack");
}

TEST_CASE("five heavy markings: the collection is strong") {
  const Collection c = enumerate_collection({5, 0});
  VerifyOptions opts;
  opts.check_strongness = true;
  const VerifyReport rep = verify_collection(c, opts);
  CHECK(rep.verdicts.size() == 49);
  CHECK(rep.fail_count == 0);
  CHECK(rep.inapplicable_count == 0);
  CHECK(rep.skipped_count == 0);
  auto detail_of = [&](int i, int j) {
    for (const PairVerdict& v : rep.verdicts)
      if (v.i == i && v.j == j) return v.detail;
    return std::string("missing");
  };
  CHECK(detail_of(0, 1) == "forward: deg 0: 2");
  CHECK(detail_of(0, 6) == "forward: deg 0: 5");
  CHECK(detail_of(1, 6) == "forward: deg 0: 1");
  CHECK(detail_of(0, 0) == "C in degree 0");
  CHECK(detail_of(6, 0) == "vanishes");
}

TEST_CASE("four heavy markings decide by block structure alone") {
  const Collection c = enumerate_collection({4, 0}, "1A");
  VerifyOptions opts;
  opts.check_strongness = true;
  const VerifyReport rep = verify_collection(c, opts);
  CHECK(rep.verdicts.size() == 4);
  CHECK(rep.fail_count == 0);
  CHECK(rep.skipped_count == 0);
  for (const PairVerdict& v : rep.verdicts) {
    CHECK(v.method == "block-orthogonality");
    if (v.i == v.j) CHECK(v.detail == "C in degree 0");
    if (v.i < v.j) CHECK(v.detail == "forward: deg 0: 2");
  }
}

TEST_CASE("six heavy markings: boundary versus interior is out of scope") {
  const VerifyReport rep =
      verify_collection(enumerate_collection({6, 0}, "1A"));
  CHECK(rep.verdicts.size() == 595);
  CHECK(rep.fail_count == 0);
  CHECK(rep.skipped_count == 240);  // 24 bundles x 10 boundary objects
  CHECK(rep.inapplicable_count == 0);
  CHECK(rep.all_ok());
  CHECK(counts_add_up(rep));
  for (const PairVerdict& v : rep.verdicts)
    if (v.status == VerdictStatus::skipped_expected)
      CHECK(v.detail == "boundary against interior pairs are not checked");
}

TEST_CASE("torsion reductions fire on the odd light-count spaces") {
  const Collection c = enumerate_collection({4, 3}, "1A");
  const VerifyReport rep = verify_collection(c);
  CHECK(rep.verdicts.size() == 595);
  CHECK(rep.fail_count == 0);
  CHECK(rep.skipped_count == 0);
  CHECK(rep.inapplicable_count == 0);
  CHECK(rep.all_ok());
  CHECK(rep.fired_cases == std::set<int>{1, 3, 4});
  std::set<std::string> methods;
  for (const PairVerdict& v : rep.verdicts) methods.insert(v.method);
  CHECK(methods == std::set<std::string>{
                       "window+stack", "block-orthogonality", "torsion-case-1",
                       "torsion-case-3", "torsion-case-4", "disjoint-support"});
}

TEST_CASE("a single light marking admits no torsion objects") {
  const VerifyReport rep =
      verify_collection(enumerate_collection({4, 1}, "1A"));
  CHECK(rep.verdicts.size() == 28);
  CHECK(rep.fail_count == 0);
  CHECK(rep.skipped_count == 0);
  CHECK(rep.inapplicable_count == 0);
  CHECK(rep.fired_cases.empty());
  CHECK(rep.all_ok());
}

TEST_CASE("torsion source against an earlier bundle reduces through case 2") {
  const Collection c = enumerate_collection({4, 5}, "1A");
  const int i = find_obj(c, ObjKind::Torsion, 0,
                         mask_of({0, 1, 4, 5, 6, 7}));  // e_q = 4
  const int j = find_obj(c, ObjKind::Bundle, 0, 0);
  REQUIRE(i >= 0);
  REQUIRE(j >= 0);
  REQUIRE(i > j);  // high light count sorts after the empty label
  const PairVerdict v = verify_pair(c, i, j);
  CHECK(v.method == "torsion-case-2");
  CHECK(v.torsion_case == 2);
  CHECK(v.status == VerdictStatus::ok);
  CHECK(v.detail == "vanishes");
}

TEST_CASE("torsion reduction evaluations case by case") {
  const MarkingSplit sp{4, 3};
  const Obj t01{ObjKind::Torsion, 0, mask_of({0, 1}), 0, 0, 0};
  const Obj t23{ObjKind::Torsion, 0, mask_of({2, 3}), 0, 0, 0};
  const Obj f0{ObjKind::Bundle, 0, 0, 0, 0, 0};

  SUBCASE("diagonal through the common-support reduction") {
    const TorsionEval ev = torsion_case_eval(sp, 3, t01, t01);
    CHECK(ev.sanctioned);
    CHECK(ev.stable);
    CHECK(ev.rgamma == GradedDim{{0, 1}});
  }
  SUBCASE("bundle source into a torsion target vanishes") {
    const TorsionEval ev = torsion_case_eval(sp, 1, f0, t01);
    CHECK(ev.sanctioned);
    CHECK(ev.stable);
    CHECK(ev.rgamma.empty());
  }
  SUBCASE("complementary supports vanish on the double clump") {
    const TorsionEval ev = torsion_case_eval(sp, 4, t23, t01);
    CHECK(ev.sanctioned);
    CHECK(ev.stable);
    CHECK(ev.rgamma.empty());
  }
  SUBCASE("argument validation") {
    CHECK_THROWS_AS(torsion_case_eval(sp, 3, t01, t23), std::invalid_argument);
    CHECK_THROWS_AS(torsion_case_eval(sp, 4, t01, t01), std::invalid_argument);
    CHECK_THROWS_AS(torsion_case_eval(sp, 5, t01, t01), std::invalid_argument);
    CHECK_THROWS_AS(torsion_case_eval({5, 2}, 1, f0, t01),
                    std::invalid_argument);
  }
}

TEST_CASE("overlapping torsion supports are orthogonal for free") {
  const Collection c = enumerate_collection({4, 3}, "1A");
  const int i = find_obj(c, ObjKind::Torsion, 0, mask_of({1, 2}));
  const int j = find_obj(c, ObjKind::Torsion, 0, mask_of({0, 1}));
  REQUIRE(i > j);
  const PairVerdict v = verify_pair(c, i, j);
  CHECK(v.method == "disjoint-support");
  CHECK(v.status == VerdictStatus::ok);
  CHECK(v.detail == "overlapping supports cannot clump simultaneously");
}

TEST_CASE("bundle pair morphism spaces under a common window") {
  const MarkingSplit sp{5, 0};
  const FLabel bottom{0, 0};
  const FLabel top{1, full_mask(5)};
  const auto fwd = bundle_pair_rhom(sp, bottom, top);
  REQUIRE(fwd.has_value());
  CHECK(*fwd == GradedDim{{0, 5}});
  const auto bwd = bundle_pair_rhom(sp, top, bottom);
  REQUIRE(bwd.has_value());
  CHECK(bwd->empty());
  // A label outside the collection has no window even against itself.
  CHECK_FALSE(bundle_pair_rhom(sp, {2, 0}, {2, 0}).has_value());
}

TEST_CASE("an injected non-member label is rejected with a stratum witness") {
  Collection c = enumerate_collection({5, 0});
  c.objects.push_back(Obj{ObjKind::Bundle, 2, 0, 0, 0, 0});
  const VerifyReport rep = verify_collection(c);
  CHECK_FALSE(rep.order_ok);
  CHECK(rep.fail_count > 0);
  CHECK_FALSE(rep.all_ok());
  bool witnessed = false;
  for (const PairVerdict& v : rep.verdicts)
    if (v.status == VerdictStatus::fail &&
        v.detail.find("stratum type (3,0)") != std::string::npos)
      witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("even light counts: reduced torsion and boundary pairs are skipped") {
  const Collection c = enumerate_collection({4, 2}, "1A");
  int tt = -1, f = -1;
  for (std::size_t k = 0; k < c.objects.size(); ++k) {
    if (tt < 0 && c.objects[k].kind == ObjKind::TildeTorsion)
      tt = static_cast<int>(k);
    if (f < 0 && c.objects[k].kind == ObjKind::Bundle) f = static_cast<int>(k);
  }
  REQUIRE(tt >= 0);
  REQUIRE(f >= 0);
  REQUIRE(c.objects[0].kind == ObjKind::Boundary);

  const PairVerdict vt = verify_pair(c, tt, 0);
  CHECK(vt.status == VerdictStatus::skipped_expected);
  CHECK(vt.detail == "pairs with the reduced torsion objects are not checked");

  const PairVerdict vf = verify_pair(c, f, 0);
  CHECK(vf.status == VerdictStatus::skipped_expected);
  CHECK(vf.detail == "boundary against interior pairs are not checked");

  const PairVerdict vd = verify_pair(c, 0, 0);
  CHECK(vd.method == "boundary-koszul");
  CHECK(vd.status == VerdictStatus::ok);
  CHECK(vd.detail == "C in degree 0");

  const PairVerdict vs = verify_pair(c, 1, 0);
  CHECK(vs.method == "disjoint-support");
  CHECK(vs.status == VerdictStatus::ok);
}

TEST_CASE("boundary pairs on one divisor reduce to the product of planes") {
  const Collection c = enumerate_collection({8, 0}, "1A");
  REQUIRE(c.objects[0].kind == ObjKind::Boundary);
  REQUIRE(c.objects[1].kind == ObjKind::Boundary);
  REQUIRE(c.objects[0].divisor == c.objects[1].divisor);
  const PairVerdict bwd = verify_pair(c, 1, 0);
  CHECK(bwd.method == "boundary-koszul");
  CHECK(bwd.status == VerdictStatus::ok);
  CHECK(bwd.detail == "vanishes");
  const PairVerdict diag = verify_pair(c, 0, 0);
  CHECK(diag.status == VerdictStatus::ok);
  CHECK(diag.detail == "C in degree 0");
}
