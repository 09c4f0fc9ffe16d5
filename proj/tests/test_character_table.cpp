#include "doctest.h"
#include "gtqd/character_table.hpp"

using namespace gtqd;

namespace {

// Row and column orthogonality, evaluated exactly.
void check_orthogonality(const FiniteGroup& g, const CharacterTable& t) {
  const auto& classes = g.classes();
  const std::size_t k = classes.size();
  REQUIRE(t.values.size() == k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Cyclotomic s(0);
      for (std::size_t j = 0; j < k; ++j)
        s += t.values[a][j] * t.values[b][j].conj() * Cyclotomic(static_cast<i64>(classes[j].size()));
      CHECK(s == Cyclotomic(a == b ? g.order() : 0));
    }
}

}  // namespace

TEST_CASE("character tables of small groups") {
  std::vector<FiniteGroup> groups = {
      FiniteGroup::cyclic(1),
      FiniteGroup::cyclic(5),
      FiniteGroup::abelian({2, 4}),
      FiniteGroup::from_generators({{1, 2, 0}, {1, 0, 2}}),
      FiniteGroup::from_generators({{2, 3, 1, 0, 7, 6, 4, 5}, {4, 5, 6, 7, 1, 0, 3, 2}}),
      FiniteGroup::from_generators({{1, 2, 0, 3}, {1, 0, 3, 2}}),  // A4
      FiniteGroup::from_generators({{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, 200),  // S5
  };
  for (const auto& g : groups) {
    auto t = character_table(g);
    check_orthogonality(g, t);
    for (const auto& v : t.values[0]) CHECK(v == Cyclotomic(1));
  }
  auto s3 = character_table(groups[3]);
  CHECK(s3.degrees == std::vector<int>{1, 1, 2});
  auto a4 = character_table(groups[5]);
  CHECK(a4.degrees == std::vector<int>{1, 1, 1, 3});
  auto s5 = character_table(groups[6]);
  CHECK(s5.degrees == std::vector<int>{1, 1, 4, 4, 5, 5, 6});
}
