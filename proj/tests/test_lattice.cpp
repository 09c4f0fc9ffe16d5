#include <algorithm>

#include "doctest.h"
#include "gtqd/error.hpp"
#include "gtqd/lattice.hpp"

using namespace gtqd;

namespace {

i64 det(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  i64 s = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<i64> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    s += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return s;
}

// Element orders of the fusion group; empty unless the fusion rules are a group law.
std::vector<int> fusion_group_orders(const ModularData& md) {
  const int r = md.rank();
  std::vector<std::vector<int>> prod(r, std::vector<int>(r, -1));
  for (const auto& f : md.fusion) {
    if (f.n != 1 || prod[f.i][f.j] != -1) return {};
    prod[f.i][f.j] = f.k;
  }
  for (const auto& row : prod)
    for (int k : row)
      if (k < 0) return {};
  // least k with x^k = 0
  std::vector<int> orders;
  for (int x = 0; x < r; ++x) {
    int y = x, k = 1;
    while (y != 0) {
      y = prod[y][x];
      ++k;
    }
    orders.push_back(k);
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

}  // namespace

TEST_CASE("even lattice validation") {
  CHECK_NOTHROW(EvenLattice(IntMatrix{{2, 1}, {1, 2}}));
  auto kind = [](const IntMatrix& g) {
    try {
      EvenLattice l(g);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Overflow;  // sentinel: no error
  };
  CHECK(kind({{1}}) == ErrorKind::NotEven);
  CHECK(kind({{2, 3}, {3, 2}}) == ErrorKind::NotPositiveDefinite);
  CHECK(kind({{-2}}) == ErrorKind::NotPositiveDefinite);
  CHECK(kind({{2, 1}, {0, 2}}) == ErrorKind::InputError);
}

TEST_CASE("discriminant groups") {
  struct Case {
    IntMatrix gram;
    std::vector<i64> factors;
  };
  std::vector<Case> cases = {
      {{{2}}, {2}},
      {{{2, 1}, {1, 2}}, {3}},
      {{{4}}, {4}},
      {orthogonal_sum({{2}}, {{2}}), {2, 2}},
      {orthogonal_sum({{2}}, {{4}}), {2, 4}},
      {{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {4}},  // A3
  };
  for (const auto& c : cases) {
    EvenLattice l(c.gram);
    auto d = discriminant_group(l);
    CHECK(d.factors == c.factors);
    CHECK(d.group->order() == det(c.gram));
    const int n = d.group->order();
    for (int a = 0; a < n; ++a) {
      for (const auto& x : d.section[a]) CHECK((!(x < Rational(0)) && x < Rational(1)));
      // s(a) lies in L*: <s(a), e_i> integral
      for (int i = 0; i < l.rank(); ++i) {
        RationalVector e(l.rank(), Rational(0));
        e[i] = Rational(1);
        CHECK(l.inner(d.section[a], e).is_integer());
      }
      // distinct cosets
      for (int b = 0; b < a; ++b) CHECK(d.section[a] != d.section[b]);
    }
    for (const auto& x : d.section[0]) CHECK(x.is_zero());
  }
}

TEST_CASE("c0 restricts to the sign form on the lattice") {
  for (const IntMatrix& g : {IntMatrix{{2}}, IntMatrix{{2, 0}, {0, 2}}, IntMatrix{{2, 1}, {1, 2}},
                             IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}}) {
    EvenLattice l(g);
    auto d = discriminant_group(l);
    for (const IntMatrix& shift : {IntMatrix{}, IntMatrix(g.size(), std::vector<i64>(g.size(), 0))}) {
      auto c = build_c0(l, d, shift);
      const int r = l.rank();
      // all lattice vectors with entries in {-1, 0, 1}
      int count = 1;
      for (int i = 0; i < r; ++i) count *= 3;
      for (int p = 0; p < count; ++p)
        for (int q = 0; q < count; ++q) {
          RationalVector a(r), b(r);
          for (int i = 0, pp = p, qq = q; i < r; ++i, pp /= 3, qq /= 3) {
            a[i] = Rational(pp % 3 - 1);
            b[i] = Rational(qq % 3 - 1);
          }
          Rational k(0);
          for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) k += a[i] * c.form[i][j] * b[j];
          CHECK((k - l.inner(a, b) / Rational(2)).is_integer());
          if (p == q) CHECK(k.is_zero());
        }
    }
  }
  EvenLattice a2(IntMatrix{{2, 1}, {1, 2}});
  IntMatrix bad{{0, 1}, {0, 0}};
  try {
    build_c0(a2, discriminant_group(a2), bad);
    FAIL("expected RestrictionFailure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RestrictionFailure);
  }
}

TEST_CASE("lattice cocycles") {
  EvenLattice a1(IntMatrix{{2}});
  auto d1 = discriminant_group(a1);
  auto w1 = lattice_cocycle(a1, d1, build_c0(a1, d1));
  CHECK(w1.modulus() == 4);
  CHECK(w1.at(1, 1, 1) == 2);  // -1
  CHECK(class_order(w1) == 2);

  EvenLattice a2(IntMatrix{{2, 1}, {1, 2}});
  auto d2 = discriminant_group(a2);
  // odd discriminant groups: the associator of a pointed braided category is a coboundary
  CHECK(class_order(lattice_cocycle(a2, d2, build_c0(a2, d2))) == 1);

  EvenLattice l4(IntMatrix{{4}});
  auto d4 = discriminant_group(l4);
  // q(x) = x^2 / 8 on Z/4 induces the class 2 in H^3(Z/4) = Z/4
  CHECK(class_order(lattice_cocycle(l4, d4, build_c0(l4, d4))) == 2);
}

TEST_CASE("cohomology class does not depend on the section or c0") {
  EvenLattice a1(IntMatrix{{2}});
  auto d1 = discriminant_group(a1);
  auto c1 = build_c0(a1, d1);
  CHECK(class_independence_check(a1, d1, c1, d1, c1));
  CHECK(class_independence_check(a1, d1, c1, shifted_section(d1, {{1, {-1}}}), c1));

  EvenLattice l4(IntMatrix{{4}});
  auto d4 = discriminant_group(l4);
  auto c4 = build_c0(l4, d4);
  CHECK(class_independence_check(l4, d4, c4, shifted_section(d4, {{1, {2}}, {3, {-1}}}), c4));

  EvenLattice a2(IntMatrix{{2, 1}, {1, 2}});
  auto d2 = discriminant_group(a2);
  auto c2 = build_c0(a2, d2);
  auto c2b = build_c0(a2, d2, {{0, 1}, {-1, 0}});
  CHECK(class_independence_check(a2, d2, c2, d2, c2b));
  CHECK(class_independence_check(a2, d2, c2, shifted_section(d2, {{1, {1, -1}}, {2, {0, 3}}}), c2b));

  EvenLattice v(IntMatrix{{2, 0}, {0, 2}});
  auto dv = discriminant_group(v);
  CHECK(class_independence_check(v, dv, build_c0(v, dv), shifted_section(dv, {{3, {-1, 0}}}),
                                 build_c0(v, dv, {{0, 2}, {-2, 0}})));
}

TEST_CASE("lattice pipeline") {
  SUBCASE("A1 gives the semion") {
    auto res = lattice_pipeline(EvenLattice(IntMatrix{{2}}));
    REQUIRE(res.cert.exists);
    CHECK(res.cert.is_mtc);
    CHECK(res.twists_match_quadratic_form);
    const auto& md = res.modular;
    REQUIRE(md.rank() == 2);
    CHECK(md.modular);
    int order4 = 0;
    for (const auto& t : md.T) order4 += t.root_order() == 4;
    CHECK(order4 == 1);
    const Cyclotomic h = Cyclotomic(1) / Cyclotomic::sqrt_of(2);
    CHECK(md.S[0][0] == h);
    CHECK(md.S[0][1] == h);
    CHECK(md.S[1][0] == h);
    CHECK(md.S[1][1] == -h);
    CHECK(fusion_group_orders(md) == std::vector<int>{1, 2});
  }
  SUBCASE("A2 gives Z/3 fusion") {
    auto res = lattice_pipeline(EvenLattice(IntMatrix{{2, 1}, {1, 2}}));
    CHECK(res.cert.is_mtc);
    CHECK(res.twists_match_quadratic_form);
    CHECK(res.modular.rank() == 3);
    CHECK(fusion_group_orders(res.modular) == std::vector<int>{1, 3, 3});
  }
  SUBCASE("orthogonal sums give product fusion groups") {
    auto r22 = lattice_pipeline(EvenLattice(orthogonal_sum({{2}}, {{2}})));
    CHECK(r22.cert.is_mtc);
    CHECK(fusion_group_orders(r22.modular) == std::vector<int>{1, 2, 2, 2});
    auto r24 = lattice_pipeline(EvenLattice(orthogonal_sum({{2}}, {{4}})));
    CHECK(r24.cert.is_mtc);
    CHECK(fusion_group_orders(r24.modular) == std::vector<int>{1, 2, 2, 2, 4, 4, 4, 4});
  }
}
