// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are
// exact; the only tolerances are the wall-clock limits below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "gtqd/error.hpp"
#include "gtqd/lattice.hpp"
#include "gtqd/modular_data.hpp"

using namespace gtqd;

namespace {

constexpr double kQuasiHopfSeconds = 300.0;    // criterion 1, all groups together
constexpr double kCohomologySeconds = 60.0;    // criterion 2, per group
constexpr double kTwoGeneratorSeconds = 1.0;   // criterion 7
constexpr int kRobustnessSeeds = 10;           // criterion 8

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }
GroupPtr cyclic(int n) { return share(FiniteGroup::cyclic(n)); }
GroupPtr klein() { return share(FiniteGroup::abelian({2, 2})); }
GroupPtr s3() { return share(FiniteGroup::from_generators({{1, 2, 0}, {1, 0, 2}})); }
GroupPtr q8() { return share(FiniteGroup::from_generators({{2, 3, 1, 0, 7, 6, 4, 5}, {4, 5, 6, 7, 1, 0, 3, 2}})); }

// One representative per H^3 class: all combinations of the generators.
std::vector<Cochain> all_classes(const GroupPtr& g) {
  const auto h = h3(g);
  std::vector<Cochain> out{Cochain(g, 3, g->order())};
  for (std::size_t i = 0; i < h.generators.size(); ++i) {
    std::vector<Cochain> next;
    for (const auto& base : out)
      for (i64 k = 0; k < h.invariant_factors[i]; ++k) next.push_back(base + h.generators[i].scaled(k));
    out = std::move(next);
  }
  return out;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// theta recomputed from omega; the twisted 2-cocycle law
// theta_g(x,y) theta_g(xy,z) = theta_{g^x}(y,z) theta_g(x,yz) with g^x = x^-1 g x.
std::string theta_law_failure(const Cochain& w, const ThetaGamma& tables) {
  const FiniteGroup& G = w.group();
  const int n = G.order();
  const i64 N = w.modulus();
  auto theta = [&](int g, int x, int y) {
    const int gxy = G.conjugate(g, G.mul(x, y));
    return mod(w.at(g, x, y) + w.at(x, y, gxy) - w.at(x, G.conjugate(g, x), y), N);
  };
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (theta(g, x, y) != mod(tables.theta(g, x, y), N)) return "theta table differs from omega";
        for (int z = 0; z < n; ++z) {
          const i64 lhs = theta(g, x, y) + theta(g, G.mul(x, y), z);
          const i64 rhs = theta(G.conjugate(g, x), y, z) + theta(g, x, G.mul(y, z));
          if (mod(lhs - rhs, N) != 0) {
            std::ostringstream os;
            os << "theta law fails at g=" << g << " x=" << x << " y=" << y << " z=" << z;
            return os.str();
          }
        }
      }
  return {};
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  int pairs = 0;
  for (const auto& g : {cyclic(2), cyclic(3), cyclic(4), klein(), s3(), q8()}) {
    for (const auto& w : all_classes(g)) {
      ++pairs;
      const TwistedDouble d(w);
      const auto rep = verify_quasi_hopf(d);
      if (!rep.ok()) o.fail("quasi-Hopf: " + rep.first_failure);
      const auto law = theta_law_failure(w, d.tables());
      if (!law.empty()) o.fail(law);
      for (int rep_g : g->class_representatives()) {
        const auto c = check_theta_eq_gamma_on_centralizer(d, rep_g);
        if (!c.ok()) o.fail("centralizer: " + c.first_failure);
      }
    }
  }
  const double s = seconds_since(t0);
  if (s > kQuasiHopfSeconds) o.fail("took " + std::to_string(s) + " s");
  if (o.pass) o.detail = std::to_string(pairs) + " (G, omega) pairs in " + std::to_string(s) + " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  struct Case {
    std::string name;
    GroupPtr g;
    std::vector<i64> factors;
  };
  std::vector<Case> cases;
  for (int n = 2; n <= 8; ++n) cases.push_back({"Z/" + std::to_string(n), cyclic(n), {n}});
  cases.push_back({"Z/2 x Z/2", klein(), {2, 2, 2}});
  cases.push_back({"Q8", q8(), {8}});
  double worst = 0;
  for (const auto& c : cases) {
    const auto t0 = Clock::now();
    const auto h = h3(c.g);
    if (h.invariant_factors != c.factors) o.fail(c.name + ": wrong invariant factors");
    for (std::size_t i = 0; i < h.generators.size() && i < c.factors.size(); ++i)
      if (class_order(h.generators[i]) != c.factors[i]) o.fail(c.name + ": generator class order");
    const double s = seconds_since(t0);
    worst = std::max(worst, s);
    if (s > kCohomologySeconds) o.fail(c.name + " took " + std::to_string(s) + " s");
  }
  if (o.pass) o.detail = std::to_string(cases.size()) + " groups, slowest " + std::to_string(worst) + " s";
  return o;
}

struct ExampleCase {
  std::string name;
  GroupPtr g;
};

std::vector<ExampleCase> example_groups() { return {{"Z/4", cyclic(4)}, {"Z/6", cyclic(6)}, {"Z/8", cyclic(8)}, {"Q8", q8()}}; }

Outcome criterion3() {
  Outcome o;
  int total = 0, agree = 0;
  for (const auto& c : example_groups()) {
    const auto t = unique_involution(*c.g);
    if (!t) {
      o.fail(c.name + " has no unique involution");
      continue;
    }
    for (const auto& w : all_classes(c.g)) {
      ++total;
      const TwistedDouble d(w);
      const auto cert = check_quotient_exists(d, {0, *t});
      if (!cert.exists) {
        o.fail(c.name + ": no certificate");
        continue;
      }
      if (cert.is_mtc == two_generator_test(w))
        ++agree;
      else
        o.fail(c.name + ": is_mtc disagrees with the 2-generator test");
    }
  }
  if (o.pass) o.detail = std::to_string(agree) + "/" + std::to_string(total) + " classes agree";
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto z4 = cyclic(4);
  for (i64 q : {1, 2}) {
    const TwistedDouble d(cyclic_cocycle(z4, q));
    const auto cert = check_quotient_exists(d, {0, 2});
    if (!cert.exists) {
      o.fail("q=" + std::to_string(q) + ": no certificate");
      continue;
    }
    // (2|2) = zeta_modulus^bicharacter[1][1]; -1 means half the modulus
    const i64 e = mod(cert.bicharacter.at(1).at(1), cert.modulus);
    const bool minus_one = 2 * e == cert.modulus;
    if (q == 1) {
      if (!minus_one) o.fail("q=1: (2|2) is not -1");
      if (!cert.is_mtc) o.fail("q=1: not MTC");
      const auto full = modular_data(d, false);
      const auto md = restrict_to_quotient(d, full, cert, false);
      if (md.rank() != 8) o.fail("q=1: restricted rank " + std::to_string(md.rank()));
    } else {
      if (e != 0) o.fail("q=2: (2|2) is not +1");
      if (cert.is_mtc) o.fail("q=2: reported MTC");
    }
  }
  if (o.pass) o.detail = "q=1: (2|2)=-1, MTC, rank 8; q=2: (2|2)=+1, not MTC";
  return o;
}

std::multiset<i64> twist_exponents(const ModularData& md, i64 m, Outcome& o) {
  std::multiset<i64> out;
  for (const auto& t : md.T) {
    auto e = root_exponent(t, m);
    if (!e) o.fail("twist is not a root of unity of order dividing " + std::to_string(m));
    else out.insert(*e);
  }
  return out;
}

Outcome criterion5() {
  Outcome o;
  auto z2 = cyclic(2);
  const auto toric = modular_data(TwistedDouble(Cochain(z2, 3, 2)));
  if (twist_exponents(toric, 2, o) != std::multiset<i64>{0, 0, 0, 1}) o.fail("toric code T");
  for (const auto& row : toric.S)
    for (const auto& s : row)
      if (s != Cyclotomic(Rational(1, 2)) && s != Cyclotomic(Rational(-1, 2))) o.fail("toric code S entry");
  const auto semion = modular_data(TwistedDouble(cyclic_cocycle(z2, 1)));
  if (twist_exponents(semion, 4, o) != std::multiset<i64>{0, 0, 1, 3}) o.fail("double semion T");

  const auto ds3 = modular_data(TwistedDouble(Cochain(s3(), 3, 6)));
  if (ds3.rank() != 8) o.fail("D(S3) rank");
  if (!check_modular_axioms(ds3).empty()) o.fail("D(S3) axioms");
  if (ds3.fusion.empty() || verlinde(ds3.S_unnormalized, ds3.D2) != ds3.fusion) o.fail("D(S3) Verlinde");

  int entries = 0;
  for (const auto& g : {cyclic(1), cyclic(2), cyclic(3), cyclic(4), klein()})
    for (const auto& w : all_classes(g)) {
      const TwistedDouble d(w);
      const auto md = modular_data(d, false);
      for (int i = 0; i < md.rank(); ++i)
        for (int j = 0; j < md.rank(); ++j, ++entries)
          if (braiding_oracle(d, md.labels[i], md.labels[j]) != md.S_unnormalized[i][j])
            o.fail("oracle disagrees for |G|=" + std::to_string(g->order()));
    }
  if (o.pass) o.detail = "toric code, double semion, D(S3); " + std::to_string(entries) + " S entries match the oracle";
  return o;
}

// Sorted element orders of the fusion group, empty unless the fusion is a group law.
std::vector<int> fusion_group_orders(const ModularData& md) {
  const int r = md.rank();
  std::vector<std::vector<int>> prod(r, std::vector<int>(r, -1));
  for (const auto& f : md.fusion) {
    if (f.n != 1 || prod[f.i][f.j] != -1) return {};
    prod[f.i][f.j] = f.k;
  }
  for (const auto& row : prod)
    if (std::count(row.begin(), row.end(), -1) > 0) return {};
  std::vector<int> orders;
  for (int x = 0; x < r; ++x) {
    int y = x, k = 1;
    for (; y != 0 && k <= r; ++k) y = prod[y][x];
    orders.push_back(k);
  }
  std::sort(orders.begin(), orders.end());
  return orders;
}

Outcome criterion6() {
  Outcome o;
  const EvenLattice a1(IntMatrix{{2}});
  const auto r1 = lattice_pipeline(a1);
  if (!r1.cert.is_mtc || !r1.modular.modular || r1.modular.rank() != 2) o.fail("[2]: not a rank-2 MTC");
  if (std::count_if(r1.modular.T.begin(), r1.modular.T.end(), [](const Cyclotomic& t) { return t.root_order() == 4; }) != 1)
    o.fail("[2]: twists of order 4");
  const EvenLattice a2(IntMatrix{{2, 1}, {1, 2}});
  const auto r2 = lattice_pipeline(a2);
  if (!r2.cert.is_mtc || !r2.modular.modular || r2.modular.rank() != 3) o.fail("A2: not a rank-3 MTC");
  if (fusion_group_orders(r2.modular) != std::vector<int>{1, 3, 3}) o.fail("A2: fusion is not Z/3");

  int choices = 0;
  auto independent = [&](const EvenLattice& l, const DiscriminantData& d2, const IntMatrix& shift) {
    const auto d1 = discriminant_group(l);
    ++choices;
    if (!class_independence_check(l, d1, build_c0(l, d1), d2, build_c0(l, d2, shift)))
      o.fail("class changes with the section or c0");
  };
  const auto d1 = discriminant_group(a1);
  independent(a1, shifted_section(d1, {{1, {-1}}}), {});
  independent(a1, shifted_section(d1, {{1, {2}}}), {});
  const auto d2 = discriminant_group(a2);
  independent(a2, d2, {{0, 1}, {-1, 0}});
  independent(a2, shifted_section(d2, {{1, {1, -1}}, {2, {0, 3}}}), {{0, -2}, {2, 0}});
  if (o.pass) o.detail = "semion and Z/3 MTCs; " + std::to_string(choices) + " alternative section/c0 choices";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto c = count_two_generators(120, 8);
  const double s = seconds_since(t0);
  if (c.count != 60) o.fail("count " + std::to_string(c.count));
  const std::set<i64> allowed{8, 24, 40, 120};
  for (const auto& [order, mult] : c.orders)
    if (!allowed.count(order)) o.fail("unexpected order " + std::to_string(order));
  if (s > kTwoGeneratorSeconds) o.fail("took " + std::to_string(s) + " s");
  if (o.pass) o.detail = "60 classes, orders within {8, 24, 40, 120}";
  return o;
}

Outcome criterion8() {
  Outcome o;
  int runs = 0;
  for (const auto& c : example_groups()) {
    const int t = *unique_involution(*c.g);
    for (const auto& w : all_classes(c.g)) {
      const TwistedDouble d(w);
      const bool base = check_quotient_exists(d, {0, t}).is_mtc;
      for (std::uint64_t seed = 1; seed <= kRobustnessSeeds; ++seed)
        for (NuPolicy p : {NuPolicy::Least, NuPolicy::Random}) {
          QuotientOptions opt;
          opt.seed = seed;
          opt.policy = p;
          ++runs;
          if (check_quotient_exists(d, {0, t}, opt).is_mtc != base) o.fail(c.name + ": verdict depends on the seed");
        }
    }
  }
  if (o.pass) o.detail = std::to_string(runs) + " reseeded runs, verdict unchanged";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"quasi-Hopf identity suite", criterion1}, {"third cohomology", criterion2},
      {"quotient vs 2-generator test", criterion3}, {"Z/4 worked quotients", criterion4},
      {"modular data of doubles", criterion5},     {"lattice pipeline", criterion6},
      {"2-generator count", criterion7},           {"verdict robustness", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
