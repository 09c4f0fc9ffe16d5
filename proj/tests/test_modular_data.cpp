#include <algorithm>

#include "doctest.h"
#include "gtqd/error.hpp"
#include "gtqd/modular_data.hpp"

using namespace gtqd;

namespace {

GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

GroupPtr quaternion() {
  return share(FiniteGroup::from_generators({{2, 3, 1, 0, 7, 6, 4, 5}, {4, 5, 6, 7, 1, 0, 3, 2}}));
}

GroupPtr s3() { return share(FiniteGroup::from_generators({{1, 2, 0}, {1, 0, 2}})); }

// Twists as sorted exponents of zeta_m.
std::vector<i64> twist_multiset(const std::vector<Cyclotomic>& t, i64 m) {
  std::vector<i64> out;
  for (const auto& z : t) {
    auto e = root_exponent(z, m);
    REQUIRE(e.has_value());
    out.push_back(*e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every cohomology class as a combination of the generators.
std::vector<Cochain> all_classes(const GroupPtr& g) {
  auto h = h3(g);
  std::vector<Cochain> out{Cochain(g, 3, g->order())};
  for (std::size_t i = 0; i < h.generators.size(); ++i) {
    std::vector<Cochain> next;
    for (const auto& base : out)
      for (i64 k = 0; k < h.invariant_factors[i]; ++k) next.push_back(base + h.generators[i].scaled(k));
    out = std::move(next);
  }
  return out;
}

// Projective orthogonality over C: sum_x chi(x) conj(chi'(x)) = delta |C|.
void check_projective_orthogonality(const ProjectiveTable& t, int order) {
  for (std::size_t a = 0; a < t.values.size(); ++a)
    for (std::size_t b = 0; b < t.values.size(); ++b) {
      Cyclotomic s(0);
      for (int x = 0; x < order; ++x) s += t.values[a][x] * t.values[b][x].conj();
      CHECK(s == Cyclotomic(a == b ? order : 0));
    }
}

// Group law fusion: each (i, j) has exactly one k, with multiplicity 1.
bool is_group_fusion(const ModularData& md) {
  std::map<std::pair<int, int>, int> count;
  for (const auto& f : md.fusion) {
    if (f.n != 1) return false;
    ++count[{f.i, f.j}];
  }
  if (static_cast<int>(count.size()) != md.rank() * md.rank()) return false;
  for (const auto& [k, c] : count)
    if (c != 1) return false;
  return true;
}

}  // namespace

TEST_CASE("projective character tables") {
  auto z2 = FiniteGroup::cyclic(2);
  SUBCASE("trivial factor set gives the ordinary table") {
    auto t = projective_character_table(z2, {0, 0, 0, 0}, 2);
    REQUIRE(t.values.size() == 2);
    check_projective_orthogonality(t, 2);
  }
  SUBCASE("Z/2 with theta(1,1) = -1") {
    auto t = projective_character_table(z2, {0, 0, 0, 1}, 2);
    REQUIRE(t.values.size() == 2);
    CHECK(t.degrees == std::vector<int>{1, 1});
    std::vector<Cyclotomic> at1{t.values[0][1], t.values[1][1]};
    const Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    CHECK(std::count(at1.begin(), at1.end(), i) == 1);
    CHECK(std::count(at1.begin(), at1.end(), -i) == 1);
    check_projective_orthogonality(t, 2);
  }
  SUBCASE("Z/2 x Z/2 with nondegenerate antisymmetrization") {
    auto v4 = FiniteGroup::abelian({2, 2});
    std::vector<i64> theta(16);
    // element index = x1 + 2 x2; theta(x, y) = x1 y2
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) theta[x * 4 + y] = (x % 2) * (y / 2);
    auto t = projective_character_table(v4, theta, 2);
    REQUIRE(t.values.size() == 1);
    CHECK(t.degrees[0] == 2);
    check_projective_orthogonality(t, 4);
  }
  SUBCASE("non-cocycle rejected") {
    auto z3 = FiniteGroup::cyclic(3);
    std::vector<i64> theta(9, 0);
    theta[1 * 3 + 1] = 1;
    try {
      projective_character_table(z3, theta, 3);
      FAIL("expected NotA2Cocycle");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotA2Cocycle);
    }
  }
}

TEST_CASE("toric code and double semion") {
  auto z2 = share(FiniteGroup::cyclic(2));
  TwistedDouble plain(Cochain(z2, 3, 2));
  auto md = modular_data(plain);
  REQUIRE(md.rank() == 4);
  CHECK(md.D2 == 4);
  CHECK(twist_multiset(md.T, 2) == std::vector<i64>{0, 0, 0, 1});
  for (const auto& row : md.S_unnormalized)
    for (const auto& v : row) CHECK((v == Cyclotomic(1) || v == Cyclotomic(-1)));
  for (const auto& row : md.S)
    for (const auto& v : row) CHECK((v == Cyclotomic(Rational(1, 2)) || v == Cyclotomic(Rational(-1, 2))));
  CHECK(is_group_fusion(md));

  TwistedDouble semion(cyclic_cocycle(z2, 1));
  auto ds = modular_data(semion);
  REQUIRE(ds.rank() == 4);
  CHECK(twist_multiset(ds.T, 4) == std::vector<i64>{0, 0, 1, 3});
  CHECK(is_group_fusion(ds));
}

TEST_CASE("D(S3) is modular of rank 8") {
  TwistedDouble d(Cochain(s3(), 3, 6));
  auto md = modular_data(d);
  CHECK(md.rank() == 8);
  CHECK(md.D2 == 36);
  CHECK(check_modular_axioms(md).empty());
  i64 total = 0;
  for (const auto& l : md.labels) total += l.dim() * l.dim();
  CHECK(total == 36);
  for (const auto& f : md.fusion)
    if (f.j == 0) CHECK((f.i == f.k && f.n == 1));
  // vacuum row holds the dimensions
  for (int i = 0; i < md.rank(); ++i) CHECK(md.S_unnormalized[0][i] == Cyclotomic(md.labels[i].dim()));
  // a label of dimension 2 fuses with itself into 1 + ... ; the sum of N_ii^k d_k is d_i^2
  for (int i = 0; i < md.rank(); ++i) {
    i64 s = 0;
    for (const auto& f : md.fusion)
      if (f.i == i && f.j == i) s += f.n * md.labels[f.k].dim();
    CHECK(s == md.labels[i].dim() * md.labels[i].dim());
  }
}

TEST_CASE("closed-form S agrees with the braiding oracle") {
  std::vector<GroupPtr> groups = {share(FiniteGroup::cyclic(1)), share(FiniteGroup::cyclic(2)),
                                  share(FiniteGroup::cyclic(3)), share(FiniteGroup::cyclic(4)),
                                  share(FiniteGroup::abelian({2, 2}))};
  for (const auto& g : groups)
    for (const auto& omega : all_classes(g)) {
      TwistedDouble d(omega);
      auto md = modular_data(d, false);
      for (int a = 0; a < md.rank(); ++a)
        for (int b = 0; b < md.rank(); ++b)
          CHECK(braiding_oracle(d, md.labels[a], md.labels[b]) == md.S_unnormalized[a][b]);
    }
  // non-abelian spot checks
  for (const auto& g : {s3(), quaternion()}) {
    auto classes = all_classes(g);
    for (std::size_t i : {std::size_t{0}, std::size_t{1}, classes.size() - 1}) {
      TwistedDouble d(classes[i]);
      auto md = modular_data(d, false);
      for (int a = 0; a < md.rank(); a += 2)
        for (int b = 0; b < md.rank(); b += 3)
          CHECK(braiding_oracle(d, md.labels[a], md.labels[b]) == md.S_unnormalized[a][b]);
    }
  }
}

TEST_CASE("oracle cap") {
  TwistedDouble d(Cochain(share(FiniteGroup::cyclic(9)), 3, 9));
  auto labels = simple_labels(d);
  try {
    braiding_oracle(d, labels[0], labels[0]);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}

TEST_CASE("restriction to the quotient subcategory") {
  auto z4 = share(FiniteGroup::cyclic(4));
  SUBCASE("Z/4, q = 1") {
    TwistedDouble d(cyclic_cocycle(z4, 1));
    auto md = modular_data(d);
    auto cert = check_quotient_exists(d, {0, 2});
    REQUIRE(cert.is_mtc);
    auto r = restrict_to_quotient(d, md, cert);
    CHECK(r.rank() == 8);
    CHECK(r.modular);
    CHECK(r.D2 == 8);
    CHECK(is_group_fusion(r));
    // T multiset does not depend on the tau / nu choices
    const auto base = twist_multiset(r.T, static_cast<i64>(r.conductor));
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      QuotientOptions opt;
      opt.seed = seed;
      auto c2 = check_quotient_exists(d, {0, 2}, opt);
      auto r2 = restrict_to_quotient(d, md, c2);
      CHECK(twist_multiset(r2.T, static_cast<i64>(r.conductor)) == base);
      CHECK(quotient_members(d, md.labels, c2) == quotient_members(d, md.labels, cert));
    }
  }
  SUBCASE("Z/4, q = 2 is degenerate") {
    TwistedDouble d(cyclic_cocycle(z4, 2));
    auto md = modular_data(d);
    auto cert = check_quotient_exists(d, {0, 2});
    REQUIRE(!cert.is_mtc);
    auto r = restrict_to_quotient(d, md, cert, false);
    CHECK(!r.modular);
    CHECK(r.radical.size() > 1);
  }
  SUBCASE("G = A = Z/2 leaves a rank-2 transparent category") {
    TwistedDouble d(Cochain(share(FiniteGroup::cyclic(2)), 3, 2));
    auto md = modular_data(d);
    auto cert = check_quotient_exists(d, {0, 1});
    auto r = restrict_to_quotient(d, md, cert);
    CHECK(r.rank() == 2);
    CHECK(!r.modular);
    CHECK(r.radical == std::vector<int>{0, 1});
  }
  SUBCASE("trivial A is the identity") {
    TwistedDouble d(cyclic_cocycle(z4, 1));
    auto md = modular_data(d);
    auto cert = check_quotient_exists(d, {0});
    auto r = restrict_to_quotient(d, md, cert);
    CHECK(r.rank() == md.rank());
    CHECK(r.S_unnormalized == md.S_unnormalized);
    CHECK(r.fusion == md.fusion);
  }
  SUBCASE("Q8 with its involution") {
    auto q8 = quaternion();
    auto classes = all_classes(q8);
    for (const auto& omega : classes) {
      TwistedDouble d(omega);
      auto md = modular_data(d, false);
      auto cert = check_quotient_exists(d, {0, *unique_involution(*q8)});
      auto r = restrict_to_quotient(d, md, cert, false);
      CHECK(r.modular == cert.is_mtc);
      i64 total = 0;
      for (const auto& l : r.labels) total += l.dim() * l.dim();
      CHECK(total == 32);
    }
  }
}
