#include "gtqd/twisted_double.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "gtqd/error.hpp"

namespace gtqd {

ThetaGamma ThetaGamma::build(const Cochain& omega, bool require_cocycle) {
  if (omega.degree() != 3) throw std::invalid_argument("ThetaGamma: degree 3 cochain expected");
  if (require_cocycle) {
    if (auto bad = cocycle_failure(omega)) {
      std::ostringstream os;
      os << "coboundary nonzero at (" << (*bad)[0] << ", " << (*bad)[1] << ", " << (*bad)[2] << ", " << (*bad)[3]
         << ")";
      throw Error(ErrorKind::NotACocycle, os.str());
    }
  }
  ThetaGamma t(omega);
  const FiniteGroup& g = omega.group();
  const int n = g.order();
  const i64 m = omega.modulus();
  t.theta_.assign(static_cast<std::size_t>(n) * n * n, 0);
  t.gamma_.assign(static_cast<std::size_t>(n) * n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) {
      const int ax = g.conjugate(a, x);
      for (int y = 0; y < n; ++y) {
        // theta_a(x, y)
        const int axy = g.conjugate(a, g.mul(x, y));
        t.theta_[t.idx(a, x, y)] = mod(omega.at(a, x, y) + omega.at(x, y, axy) - omega.at(x, ax, y), m);
        // gamma_a(x, y)
        const int xa = g.conjugate(x, a), ya = g.conjugate(y, a);
        t.gamma_[t.idx(a, x, y)] = mod(omega.at(x, y, a) + omega.at(a, xa, ya) - omega.at(x, a, ya), m);
      }
    }
  return t;
}

std::optional<Term> TwistedDouble::product(const Label& u, const Label& v) const {
  const FiniteGroup& g = group();
  if (g.conjugate(u.g, u.x) != v.g) return std::nullopt;
  return Term{tables_.theta(u.g, u.x, v.x), {u.g, g.mul(u.x, v.x)}};
}

std::vector<CoproductTerm> TwistedDouble::coproduct(const Label& u) const {
  const FiniteGroup& g = group();
  std::vector<CoproductTerm> out;
  out.reserve(g.order());
  for (int a = 0; a < g.order(); ++a) {
    const int b = g.mul(g.inv(a), u.g);
    out.push_back({tables_.gamma(u.x, a, b), {a, u.x}, {b, u.x}});
  }
  return out;
}

namespace {

std::string label_str(const Label& l) { return "(" + std::to_string(l.g) + "," + std::to_string(l.x) + ")"; }

// Linear combination of basis tensors; coefficients kept as exponent lists so
// that equal terms compare exactly without summing roots of unity.
template <class Key>
class Combination {
 public:
  explicit Combination(i64 modulus) : m_(modulus) {}
  void add(const Key& k, i64 e) { terms_[k].push_back(mod(e, m_)); }
  bool operator==(Combination& o) {
    normalize();
    o.normalize();
    return terms_ == o.terms_;
  }

 private:
  void normalize() {
    for (auto& [k, v] : terms_) std::sort(v.begin(), v.end());
  }
  i64 m_;
  std::map<Key, std::vector<i64>> terms_;
};

}  // namespace

QuasiHopfReport verify_quasi_hopf(const TwistedDouble& d) {
  QuasiHopfReport rep;
  const FiniteGroup& g = d.group();
  const int n = g.order();
  const i64 m = d.modulus();
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    if (rep.first_failure.empty()) rep.first_failure = what;
  };

  rep.hopf = d.tables().omega().is_zero();
  if (auto bad = cocycle_failure(d.tables().omega())) {
    std::ostringstream os;
    os << "cocycle identity fails at (" << (*bad)[0] << ", " << (*bad)[1] << ", " << (*bad)[2] << ", " << (*bad)[3]
       << ")";
    fail(rep.cocycle, os.str());
  }

  // (i) associativity; both sides vanish unless h = g^x and k = h^y
  for (int a = 0; a < n && rep.associative; ++a)
    for (int x = 0; x < n && rep.associative; ++x) {
      const int h = g.conjugate(a, x);
      for (int y = 0; y < n && rep.associative; ++y) {
        const int k = g.conjugate(h, y);
        for (int z = 0; z < n; ++z) {
          Label u{a, x}, v{h, y}, w{k, z};
          auto uv = d.product(u, v);
          auto vw = d.product(v, w);
          auto left = uv ? d.product(uv->label, w) : std::nullopt;
          auto right = vw ? d.product(u, vw->label) : std::nullopt;
          if (!left || !right || left->label != right->label ||
              mod(uv->exponent + left->exponent - vw->exponent - right->exponent, m) != 0) {
            fail(rep.associative, "associativity fails at " + label_str(u) + label_str(v) + label_str(w));
            break;
          }
        }
      }
    }

  // (ii) phi (Delta (x) id) Delta(u) = (id (x) Delta) Delta(u) phi
  using Triple = std::tuple<Label, Label, Label>;
  for (int a = 0; a < n && rep.quasi_coassociative; ++a)
    for (int x = 0; x < n && rep.quasi_coassociative; ++x) {
      Label u{a, x};
      Combination<Triple> lhs(m), rhs(m);
      for (const auto& t1 : d.coproduct(u)) {
        for (const auto& t2 : d.coproduct(t1.left)) {
          // left multiplication by phi component on (t2.left.g, t2.right.g, t1.right.g)
          i64 e = t1.exponent + t2.exponent + d.associator(t2.left.g, t2.right.g, t1.right.g);
          auto p1 = d.product({t2.left.g, 0}, t2.left);
          auto p2 = d.product({t2.right.g, 0}, t2.right);
          auto p3 = d.product({t1.right.g, 0}, t1.right);
          lhs.add({p1->label, p2->label, p3->label}, e + p1->exponent + p2->exponent + p3->exponent);
        }
        for (const auto& t2 : d.coproduct(t1.right)) {
          // right multiplication by phi component on the conjugated triple
          const Label& l1 = t1.left;
          const Label& l2 = t2.left;
          const Label& l3 = t2.right;
          const int c1 = g.conjugate(l1.g, l1.x), c2 = g.conjugate(l2.g, l2.x), c3 = g.conjugate(l3.g, l3.x);
          i64 e = t1.exponent + t2.exponent + d.associator(c1, c2, c3);
          auto p1 = d.product(l1, {c1, 0});
          auto p2 = d.product(l2, {c2, 0});
          auto p3 = d.product(l3, {c3, 0});
          rhs.add({p1->label, p2->label, p3->label}, e + p1->exponent + p2->exponent + p3->exponent);
        }
      }
      if (!(lhs == rhs)) fail(rep.quasi_coassociative, "quasi-coassociativity fails at " + label_str(u));
    }

  // (iii) Delta(uv) = Delta(u) Delta(v); both sides vanish unless h = g^x
  using Pair = std::pair<Label, Label>;
  for (int a = 0; a < n && rep.multiplicative; ++a)
    for (int x = 0; x < n && rep.multiplicative; ++x) {
      const int h = g.conjugate(a, x);
      for (int y = 0; y < n; ++y) {
        Label u{a, x}, v{h, y};
        Combination<Pair> lhs(m), rhs(m);
        auto uv = d.product(u, v);
        for (const auto& t : d.coproduct(uv->label)) lhs.add({t.left, t.right}, uv->exponent + t.exponent);
        auto du = d.coproduct(u);
        auto dv = d.coproduct(v);
        for (const auto& s : du)
          for (const auto& t : dv) {
            auto l = d.product(s.left, t.left);
            auto r = d.product(s.right, t.right);
            if (!l || !r) continue;
            rhs.add({l->label, r->label}, s.exponent + t.exponent + l->exponent + r->exponent);
          }
        if (!(lhs == rhs)) {
          fail(rep.multiplicative, "coproduct not multiplicative at " + label_str(u) + label_str(v));
          break;
        }
      }
    }

  // (iv) counit
  for (int a = 0; a < n && rep.counital; ++a)
    for (int x = 0; x < n && rep.counital; ++x) {
      Label u{a, x};
      Combination<Label> left(m), right(m), want(m);
      want.add(u, 0);
      for (const auto& t : d.coproduct(u)) {
        if (d.counit(t.left)) left.add(t.right, t.exponent);
        if (d.counit(t.right)) right.add(t.left, t.exponent);
      }
      Combination<Label> want2 = want;
      if (!(left == want) || !(right == want2)) fail(rep.counital, "counit fails at " + label_str(u));
      for (int y = 0; y < n && a == 0; ++y) {
        auto p = d.product({0, x}, {0, y});
        if (!p || mod(p->exponent, m) != 0) fail(rep.counital, "counit not multiplicative at x=" + std::to_string(x));
      }
    }
  return rep;
}

CentralizerReport check_theta_eq_gamma_on_centralizer(const TwistedDouble& d, int g) {
  CentralizerReport rep;
  const FiniteGroup& grp = d.group();
  const auto& t = d.tables();
  const i64 m = d.modulus();
  auto c = grp.centralizer(g);
  for (int x : c)
    for (int y : c)
      if (mod(t.theta(g, x, y) - t.gamma(g, x, y), m) != 0 && rep.equal) {
        rep.equal = false;
        rep.first_failure = "theta and gamma differ at g=" + std::to_string(g) + " on (" + std::to_string(x) + ", " +
                            std::to_string(y) + ")";
      }
  for (int x : c)
    for (int y : c)
      for (int z : c) {
        i64 v = t.theta(g, y, z) - t.theta(g, grp.mul(x, y), z) + t.theta(g, x, grp.mul(y, z)) - t.theta(g, x, y);
        if (mod(v, m) != 0 && rep.cocycle) {
          rep.cocycle = false;
          if (rep.first_failure.empty())
            rep.first_failure = "restriction is not a 2-cocycle at (" + std::to_string(x) + ", " + std::to_string(y) +
                                ", " + std::to_string(z) + ")";
        }
      }
  return rep;
}

}  // namespace gtqd
