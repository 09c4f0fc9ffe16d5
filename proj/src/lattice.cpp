#include "gtqd/lattice.hpp"

#include <sstream>

#include "gtqd/error.hpp"

namespace gtqd {

namespace {

// Gauss-Jordan inverse over Q; the matrix must be invertible.
RationalMatrix inverse(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  RationalMatrix m(n, RationalVector(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
    m[i][n + i] = Rational(1);
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("inverse: singular matrix");
    std::swap(m[piv], m[c]);
    const Rational inv = Rational(1) / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const Rational t = m[r][c];
      for (int k = 0; k < 2 * n; ++k) m[r][k] -= t * m[c][k];
    }
  }
  RationalMatrix out(n, RationalVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = m[i][n + j];
  return out;
}

RationalVector frac(RationalVector v) {
  for (auto& x : v) x = x.frac();
  return v;
}

Rational bilinear(const RationalVector& x, const RationalMatrix& k, const RationalVector& y) {
  Rational s(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero() && !k[i][j].is_zero()) s += x[i] * k[i][j] * y[j];
  }
  return s;
}

// Mixed-radix coordinates, first factor fastest.
std::vector<i64> coordinates(const std::vector<i64>& factors, int a) {
  std::vector<i64> c(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    c[i] = a % factors[i];
    a = static_cast<int>(a / factors[i]);
  }
  return c;
}

}  // namespace

EvenLattice::EvenLattice(IntMatrix gram) : gram_(std::move(gram)) {
  const int n = rank();
  if (n == 0) throw Error(ErrorKind::InputError, "empty Gram matrix");
  for (const auto& row : gram_)
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::InputError, "Gram matrix is not square");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) throw Error(ErrorKind::InputError, "Gram matrix is not symmetric");
  for (int i = 0; i < n; ++i)
    if (gram_[i][i] % 2 != 0) throw Error(ErrorKind::NotEven, "odd diagonal entry " + std::to_string(gram_[i][i]));
  // leading principal minors are the products of the elimination pivots
  RationalMatrix m(n, RationalVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = Rational(gram_[i][j]);
  for (int c = 0; c < n; ++c) {
    if (!(Rational(0) < m[c][c]))
      throw Error(ErrorKind::NotPositiveDefinite, "leading minor " + std::to_string(c + 1) + " is not positive");
    for (int r = c + 1; r < n; ++r) {
      const Rational t = m[r][c] / m[c][c];
      for (int k = c; k < n; ++k) m[r][k] -= t * m[c][k];
    }
  }
}

Rational EvenLattice::inner(const RationalVector& x, const RationalVector& y) const {
  Rational s(0);
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      if (gram_[i][j] != 0) s += x[i] * Rational(gram_[i][j]) * y[j];
  return s;
}

IntMatrix orthogonal_sum(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), m = b.size();
  IntMatrix out(n + m, std::vector<i64>(n + m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out[n + i][n + j] = b[i][j];
  return out;
}

DiscriminantData discriminant_group(const EvenLattice& l) {
  const int n = l.rank();
  // U G V = D, so L*/L = Z^r / G Z^r = Z^r / D Z^r through u -> U u
  const SmithResult snf = smith_normal_form(l.gram());
  const RationalMatrix ginv = inverse(l.gram());
  const RationalMatrix uinv = inverse(snf.u);
  DiscriminantData data;
  for (int i = 0; i < n; ++i) {
    if (snf.divisors[i] <= 1) continue;
    data.factors.push_back(snf.divisors[i]);
    RationalVector f(n, Rational(0));
    for (int r = 0; r < n; ++r)
      for (int k = 0; k < n; ++k) f[r] += ginv[r][k] * uinv[k][i];
    data.dual_basis.push_back(frac(std::move(f)));
  }
  data.group = std::make_shared<const FiniteGroup>(
      FiniteGroup::abelian(std::vector<int>(data.factors.begin(), data.factors.end())));
  for (i64 f : data.factors) data.exponent = lcm(data.exponent, f);
  const int order = data.group->order();
  for (int a = 0; a < order; ++a) {
    const auto c = coordinates(data.factors, a);
    RationalVector s(n, Rational(0));
    for (std::size_t k = 0; k < c.size(); ++k)
      for (int r = 0; r < n; ++r) s[r] += Rational(c[k]) * data.dual_basis[k][r];
    data.section.push_back(frac(std::move(s)));
  }
  return data;
}

DiscriminantData shifted_section(const DiscriminantData& data, const std::map<int, std::vector<i64>>& shift) {
  DiscriminantData out = data;
  for (const auto& [a, v] : shift) {
    if (a == 0) {
      for (i64 x : v)
        if (x != 0) throw Error(ErrorKind::InputError, "the section must vanish at 0");
      continue;
    }
    if (v.size() != out.section[a].size()) throw Error(ErrorKind::InputError, "shift has wrong rank");
    for (std::size_t i = 0; i < v.size(); ++i) out.section[a][i] += Rational(v[i]);
  }
  return out;
}

C0 build_c0(const EvenLattice& l, const DiscriminantData& data, const IntMatrix& shift) {
  const int n = l.rank();
  const auto& g = l.gram();
  C0 c;
  c.form.assign(n, RationalVector(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i < j) c.form[i][j] = Rational(g[i][j], 2);
      if (i > j) c.form[i][j] = -Rational(g[i][j], 2);
      if (!shift.empty()) c.form[i][j] += Rational(shift[i][j]);
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      if (!(c.form[i][j] + c.form[j][i]).is_zero())
        throw Error(ErrorKind::RestrictionFailure, "c0 form is not antisymmetric");
  // c0(e_i, e_j) = (-1)^<e_i, e_j> on the lattice basis
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(c.form[i][j] - Rational(g[i][j], 2)).is_integer()) {
        std::ostringstream os;
        os << "c0(e_" << i << ", e_" << j << ") differs from (-1)^" << g[i][j];
        throw Error(ErrorKind::RestrictionFailure, os.str());
      }
  const std::size_t k = data.dual_basis.size();
  c.on_basis.assign(k, RationalVector(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) c.on_basis[i][j] = bilinear(data.dual_basis[i], c.form, data.dual_basis[j]).frac();
  for (std::size_t i = 0; i < k; ++i)
    if (!c.on_basis[i][i].is_zero()) throw Error(ErrorKind::RestrictionFailure, "c0 is not alternating");
  return c;
}

Cochain lattice_cocycle(const EvenLattice& l, const DiscriminantData& data, const C0& c0) {
  const FiniteGroup& a = *data.group;
  const int n = a.order();
  const int r = l.rank();
  const i64 modulus = 2 * data.exponent;
  // (-1)^<x, y> c0(x, y) = exp(2 pi i x^T (G/2 + K) y)
  RationalMatrix q = c0.form;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) q[i][j] += Rational(l.gram()[i][j], 2);
  Cochain omega(data.group, 3, modulus);
  for (int x = 1; x < n; ++x)
    for (int y = 1; y < n; ++y) {
      RationalVector lam(r);
      const auto& sxy = data.section[a.mul(x, y)];
      for (int i = 0; i < r; ++i) {
        lam[i] = data.section[x][i] + data.section[y][i] - sxy[i];
        if (!lam[i].is_integer()) throw std::logic_error("s(a) + s(b) - s(a+b) is not a lattice vector");
      }
      for (int z = 1; z < n; ++z) {
        const Rational e = bilinear(data.section[z], q, lam).frac() * Rational(modulus);
        if (!e.is_integer()) throw std::logic_error("lattice cocycle value outside mu_2e");
        omega.set({x, y, z}, e.num());
      }
    }
  if (auto bad = cocycle_failure(omega)) {
    std::ostringstream os;
    os << "lattice cocycle fails at (" << (*bad)[0] << ", " << (*bad)[1] << ", " << (*bad)[2] << ", " << (*bad)[3]
       << ")";
    throw Error(ErrorKind::NotACocycle, os.str());
  }
  return omega;
}

bool class_independence_check(const EvenLattice& l, const DiscriminantData& d1, const C0& c1,
                              const DiscriminantData& d2, const C0& c2) {
  const Cochain w1 = lattice_cocycle(l, d1, c1);
  const Cochain w2 = lattice_cocycle(l, d2, c2);
  return is_coboundary_over_C(w1 - w2).has_value();
}

Rational quadratic_form(const EvenLattice& l, const DiscriminantData& data, int a) {
  return (l.inner(data.section[a], data.section[a]) / Rational(2)).frac();
}

LatticeResult lattice_pipeline(const EvenLattice& l) {
  DiscriminantData data = discriminant_group(l);
  C0 c0 = build_c0(l, data, {});
  Cochain omega = lattice_cocycle(l, data, c0);
  LatticeResult res{std::move(data), std::move(c0), std::move(omega), nullptr, {}, {}, false};
  res.twisted = std::make_shared<TwistedDouble>(res.omega);
  const TwistedDouble& d = *res.twisted;
  const ModularData full = modular_data(d, false);

  const int n = res.data.group->order();
  std::vector<Cyclotomic> expected(n);
  for (int a = 0; a < n; ++a) {
    const Rational q = quadratic_form(l, res.data, a);
    expected[a] = Cyclotomic::root_of_unity(q.den(), q.num());
  }
  auto twists_match = [&](const QuotientCertificate& cert) {
    if (!cert.is_mtc) return false;
    std::vector<int> kept;
    try {
      kept = quotient_members(d, full.labels, cert);
    } catch (const Error&) {
      return false;
    }
    if (static_cast<int>(kept.size()) != n) return false;
    for (int i : kept)
      if (full.T[i] != expected[full.labels[i].g]) return false;
    return true;
  };
  QuotientOptions options;
  options.policy = NuPolicy::FirstNondegenerate;
  options.prefer = twists_match;
  std::vector<int> all(n);
  for (int a = 0; a < n; ++a) all[a] = a;
  res.cert = check_quotient_exists(d, all, options);
  if (!res.cert.exists) return res;
  res.twists_match_quadratic_form = twists_match(res.cert);
  res.modular = restrict_to_quotient(d, full, res.cert, true);
  return res;
}

}  // namespace gtqd
