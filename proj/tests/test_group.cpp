#include <algorithm>

#include "doctest.h"
#include "gtqd/error.hpp"
#include "gtqd/group.hpp"

using namespace gtqd;

namespace {

// Quaternion group as regular permutations of {1,-1,i,-i,j,-j,k,-k}.
FiniteGroup quaternion() {
  return FiniteGroup::from_generators({{2, 3, 1, 0, 7, 6, 4, 5}, {4, 5, 6, 7, 1, 0, 3, 2}});
}

FiniteGroup s3() { return FiniteGroup::from_generators({{1, 2, 0}, {1, 0, 2}}); }

}  // namespace

TEST_CASE("table validation reports the failing property") {
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), Error);
  try {
    FiniteGroup::from_table({{0, 1}, {1, 1}});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotLatinSquare);
  }
  // Latin square with identity but not associative (order 5 loop).
  FiniteGroup::Table loop = {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    FiniteGroup::from_table(loop);
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonAssociative);
  }
  try {
    FiniteGroup::from_table({{1, 0}, {0, 1}});
  } catch (const Error& e) {
    FAIL("identity at index 1 should be accepted");
  }
}

TEST_CASE("identity is relabelled to index zero") {
  auto g = FiniteGroup::from_table({{1, 0}, {0, 1}}, {"a", "e"});
  CHECK(g.mul(0, 1) == 1);
  CHECK(g.name(0) == "e");
}

TEST_CASE("closure respects the cap") {
  std::vector<int> cycle(7), swap(7);
  for (int i = 0; i < 7; ++i) {
    cycle[i] = (i + 1) % 7;
    swap[i] = i;
  }
  std::swap(swap[0], swap[1]);
  CHECK_THROWS_AS(FiniteGroup::from_generators({cycle, swap}, 100), Error);
}

TEST_CASE("basic invariants of small groups") {
  auto q = quaternion();
  CHECK(q.order() == 8);
  CHECK(q.center().size() == 2);
  CHECK(q.classes().size() == 5);
  CHECK(unique_involution(q).has_value());
  CHECK(sylow2_type(q) == Sylow2Type::GeneralizedQuaternion);

  auto s = s3();
  CHECK(s.order() == 6);
  CHECK(s.classes().size() == 3);
  CHECK(s.center().size() == 1);
  CHECK(sylow2_type(s) == Sylow2Type::Cyclic);
  CHECK(sylow2_type(FiniteGroup::abelian({2, 2})) == Sylow2Type::Neither);
  CHECK(sylow2_type(FiniteGroup::cyclic(9)) == Sylow2Type::Odd);
}

TEST_CASE("character group matches the abelianization") {
  struct Case {
    FiniteGroup g;
    std::vector<i64> factors;
  };
  std::vector<Case> cases = {{FiniteGroup::cyclic(12), {12}},
                             {FiniteGroup::abelian({2, 4}), {2, 4}},
                             {FiniteGroup::abelian({6, 4}), {2, 12}},
                             {s3(), {2}},
                             {quaternion(), {2, 2}},
                             {FiniteGroup::cyclic(1), {}}};
  for (auto& c : cases) {
    CharacterGroup chars(c.g);
    CHECK(chars.invariant_factors() == c.factors);
    // oracle: brute-force count of homomorphisms G -> Z/e
    i64 e = std::max<i64>(1, chars.exponent());
    i64 count = 0;
    int n = c.g.order();
    // every character value vector must be a homomorphism and all are distinct
    auto all = chars.all();
    std::vector<std::vector<i64>> seen;
    for (const auto& ch : all) {
      auto v = chars.values(ch, e);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) CHECK((v[x] + v[y]) % e == v[c.g.mul(x, y)]);
      auto back = chars.decompose(v, e);
      REQUIRE(back.has_value());
      CHECK(*back == ch);
      seen.push_back(v);
      ++count;
    }
    std::sort(seen.begin(), seen.end());
    CHECK(std::unique(seen.begin(), seen.end()) == seen.end());
    CHECK(count * static_cast<i64>(chars.commutator_subgroup().size()) == n);
  }
}
