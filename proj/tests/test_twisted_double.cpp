#include "doctest.h"
#include "gtqd/error.hpp"
#include "gtqd/twisted_double.hpp"

using namespace gtqd;

namespace {

GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

GroupPtr quaternion() {
  return share(FiniteGroup::from_generators({{2, 3, 1, 0, 7, 6, 4, 5}, {4, 5, 6, 7, 1, 0, 3, 2}}));
}

}  // namespace

TEST_CASE("theta and gamma on Z/2 with the sign cocycle") {
  auto w = cyclic_cocycle(2, 1);
  auto t = ThetaGamma::build(w);
  // direct evaluation: omega(1,1,1)^2 / omega(1,1,1)
  CHECK(t.theta(1, 1, 1) == 1);
  CHECK(t.gamma(1, 1, 1) == 1);
  CHECK(t.theta(1, 0, 1) == 0);
  CHECK(t.gamma(0, 1, 1) == 0);
  TwistedDouble d(w);
  auto p = d.product({1, 1}, {1, 1});
  REQUIRE(p.has_value());
  CHECK(p->exponent == 1);
  CHECK(p->label == Label{1, 0});
}

TEST_CASE("trivial cocycle gives the untwisted double") {
  auto s3 = share(FiniteGroup::from_generators({{1, 2, 0}, {1, 0, 2}}));
  TwistedDouble d(Cochain(s3, 3, 6));
  for (int a = 0; a < 6; ++a)
    for (int x = 0; x < 6; ++x)
      for (int y = 0; y < 6; ++y) {
        CHECK(d.tables().theta(a, x, y) == 0);
        CHECK(d.tables().gamma(a, x, y) == 0);
      }
  CHECK_FALSE(d.product({1, 0}, {2, 0}).has_value());
  auto rep = verify_quasi_hopf(d);
  CHECK(rep.ok());
  CHECK(rep.hopf);
}

TEST_CASE("quasi-Hopf identities for nontrivial classes") {
  std::vector<Cochain> cases = {cyclic_cocycle(2, 1), cyclic_cocycle(4, 1), cyclic_cocycle(6, 5)};
  auto q8 = quaternion();
  auto hq = h3(q8);
  cases.push_back(hq.generators[0]);
  auto s3 = share(FiniteGroup::from_generators({{1, 2, 0}, {1, 0, 2}}));
  cases.push_back(h3(s3).generators[0]);
  auto v4 = share(FiniteGroup::abelian({2, 2}));
  for (const auto& gen : h3(v4).generators) cases.push_back(gen);
  for (const auto& w : cases) {
    TwistedDouble d(w);
    auto rep = verify_quasi_hopf(d);
    CHECK_MESSAGE(rep.ok(), rep.first_failure);
    CHECK_FALSE(rep.hopf);
    // oracle: component form of quasi-coassociativity and the twisted 2-cocycle law
    const auto& g = w.group();
    const auto& t = d.tables();
    const i64 m = w.modulus();
    int bad = 0;
    for (int x = 0; x < g.order(); ++x)
      for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
          for (int c = 0; c < g.order(); ++c) {
            i64 lhs = t.gamma(x, a, b) + t.gamma(x, g.mul(a, b), c) - w.at(a, b, c);
            i64 rhs = t.gamma(x, a, g.mul(b, c)) + t.gamma(x, b, c) -
                      w.at(g.conjugate(a, x), g.conjugate(b, x), g.conjugate(c, x));
            if (mod(lhs - rhs, m) != 0) ++bad;
            i64 l2 = t.theta(x, a, b) + t.theta(x, g.mul(a, b), c);
            i64 r2 = t.theta(g.conjugate(x, a), b, c) + t.theta(x, a, g.mul(b, c));
            if (mod(l2 - r2, m) != 0) ++bad;
          }
    CHECK(bad == 0);
  }
}

TEST_CASE("a tampered cocycle is located") {
  Cochain w = cyclic_cocycle(4, 1);
  CHECK_THROWS_AS(TwistedDouble{w.scaled(1) + [&] {
                    Cochain bump(w.group_ptr(), 3, 4);
                    bump.set({1, 2, 3}, 1);
                    return bump;
                  }()},
                  Error);
  Cochain bump(w.group_ptr(), 3, 4);
  bump.set({1, 2, 3}, 1);
  auto rep = verify_quasi_hopf(TwistedDouble::unchecked(w + bump));
  CHECK_FALSE(rep.cocycle);
  CHECK(rep.first_failure.find("cocycle identity fails") != std::string::npos);
  CHECK_FALSE((rep.associative && rep.quasi_coassociative));
}

TEST_CASE("theta equals gamma on centralizers") {
  auto z4 = share(FiniteGroup::cyclic(4));
  TwistedDouble d4(cyclic_cocycle(z4, 1));
  for (int g = 0; g < 4; ++g) CHECK(check_theta_eq_gamma_on_centralizer(d4, g).ok());

  auto q8 = quaternion();
  auto hq = h3(q8);
  REQUIRE(hq.invariant_factors == std::vector<i64>{8});
  TwistedDouble dq(hq.generators[0]);
  for (int g : q8->class_representatives()) {
    auto rep = check_theta_eq_gamma_on_centralizer(dq, g);
    CHECK_MESSAGE(rep.ok(), rep.first_failure);
  }
  // central elements: the identity holds on the whole group
  for (int z : q8->center())
    for (int x = 0; x < 8; ++x)
      for (int y = 0; y < 8; ++y) CHECK(dq.tables().theta(z, x, y) == dq.tables().gamma(z, x, y));
}
