#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "ringbench/ring_spec.hpp"
#include "ringbench/subsets.hpp"

using namespace ringbench;

namespace {

FiniteRing t2f2() {
  RingSpec f2, t;
  f2.kind = RingSpec::Kind::zn;
  f2.n = 2;
  t.kind = RingSpec::Kind::triangular;
  t.k = 2;
  t.children = {f2};
  return construct(t);
}

std::vector<Elem> ids(const ElementSubset& s) { return s.indices(); }

}  // namespace

TEST_CASE("principal ideals and annihilators of Z/6", "[subsets]") {
  FiniteRing z6 = detail::make_zn(6);
  CHECK(ids(principal(z6, 2, Side::left)) == std::vector<Elem>{0, 2, 4});
  CHECK(ids(principal(z6, 3, Side::left)) == std::vector<Elem>{0, 3});
  CHECK(ids(principal(z6, 5, Side::right)) ==
        std::vector<Elem>{0, 1, 2, 3, 4, 5});
  CHECK(ids(annihilator(z6, 2, Side::left)) == std::vector<Elem>{0, 3});
  CHECK(ids(annihilator(z6, 3, Side::right)) ==
        std::vector<Elem>{0, 2, 4});
  CHECK(ids(annihilator(z6, 0, Side::left)) ==
        std::vector<Elem>{0, 1, 2, 3, 4, 5});
  CHECK(ids(units(z6, UnitKind::two_sided)) == std::vector<Elem>{1, 5});
}

TEST_CASE("one-sided structure of the triangular ring", "[subsets]") {
  FiniteRing t = t2f2();
  // elements are [[a, b], [0, c]] at index 4a + 2b + c
  const Elem e11 = 4, e12 = 2;

  CHECK(ids(principal(t, e12, Side::left)) == std::vector<Elem>{0, 2});
  CHECK(ids(principal(t, e12, Side::right)) == std::vector<Elem>{0, 2});
  CHECK(ids(principal(t, e11, Side::left)) == std::vector<Elem>{0, 4});
  CHECK(ids(principal(t, e11, Side::right)) ==
        std::vector<Elem>{0, 2, 4, 6});
  CHECK(ids(annihilator(t, e12, Side::left)) ==
        std::vector<Elem>{0, 1, 2, 3});
  CHECK(ids(annihilator(t, e12, Side::right)) ==
        std::vector<Elem>{0, 2, 4, 6});
  CHECK(ids(units(t, UnitKind::two_sided)) == std::vector<Elem>{5, 7});
}

TEST_CASE("unit kinds coincide on finite rings", "[subsets]") {
  for (int n : {4, 6, 8}) {
    FiniteRing r = detail::make_zn(n);
    CHECK(ids(units(r, UnitKind::left)) == ids(units(r, UnitKind::right)));
    CHECK(ids(units(r, UnitKind::left)) ==
          ids(units(r, UnitKind::two_sided)));
  }
  FiniteRing t = t2f2();
  CHECK(ids(units(t, UnitKind::left)) == ids(units(t, UnitKind::two_sided)));
  CHECK(ids(units(t, UnitKind::right)) ==
        ids(units(t, UnitKind::two_sided)));
}

TEST_CASE("side parameter means multiplication side, not mirroring",
          "[subsets]") {
  FiniteRing t = t2f2();
  for (Elem a = 0; a < t.order(); ++a) {
    // left principal ideal: all x*a
    ElementSubset left = principal(t, a, Side::left);
    for (Elem x = 0; x < t.order(); ++x) CHECK(left.test(t.mul(x, a)));
    CHECK(left.count() <= t.order());
    // right annihilator: a*x == 0
    ElementSubset rann = annihilator(t, a, Side::right);
    for (Elem x = 0; x < t.order(); ++x)
      CHECK(rann.test(x) == (t.mul(a, x) == t.zero()));
  }
}

TEST_CASE("families are sorted and deduplicated", "[subsets]") {
  FiniteRing t = t2f2();
  for (Side s : {Side::left, Side::right}) {
    auto pf = principal_family(t, s);
    auto af = annihilator_family(t, s);
    CHECK(std::is_sorted(pf.begin(), pf.end()));
    CHECK(std::is_sorted(af.begin(), af.end()));
    CHECK(std::adjacent_find(pf.begin(), pf.end()) == pf.end());
    CHECK(std::adjacent_find(af.begin(), af.end()) == af.end());
    for (Elem a = 0; a < t.order(); ++a) {
      CHECK(std::binary_search(pf.begin(), pf.end(), principal(t, a, s)));
      CHECK(std::binary_search(af.begin(), af.end(), annihilator(t, a, s)));
    }
  }
}

TEST_CASE("index preconditions throw invalid_argument", "[subsets]") {
  FiniteRing z4 = detail::make_zn(4);
  CHECK_THROWS_AS(principal(z4, 4, Side::left), std::invalid_argument);
  CHECK_THROWS_AS(annihilator(z4, 9, Side::right), std::invalid_argument);
}

TEST_CASE("side names render for reports", "[subsets]") {
  CHECK(std::string(to_string(Side::left)) == "left");
  CHECK(std::string(to_string(Side::right)) == "right");
}
