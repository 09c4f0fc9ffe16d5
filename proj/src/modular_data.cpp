#include "gtqd/modular_data.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "gtqd/character_table.hpp"
#include "gtqd/error.hpp"

namespace gtqd {

namespace {

Cyclotomic zeta(i64 n, i64 k) { return Cyclotomic::root_of_unity(n, mod(k, n)); }

CycloMatrix mat_mul(const CycloMatrix& a, const CycloMatrix& b) {
  const std::size_t n = a.size();
  CycloMatrix c(n, std::vector<Cyclotomic>(n, Cyclotomic(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

std::vector<int> transparent_labels(const ModularData& md) {
  std::vector<int> out;
  const int r = md.rank();
  for (int x = 0; x < r; ++x) {
    bool transparent = true;
    for (int y = 0; y < r && transparent; ++y)
      transparent = md.S_unnormalized[x][y] == Cyclotomic(md.labels[x].dim() * md.labels[y].dim());
    if (transparent) out.push_back(x);
  }
  return out;
}

// Fills T-derived and normalized fields from labels, T and S_unnormalized.
void finish(ModularData& md, bool with_fusion) {
  md.D2 = 0;
  for (const auto& l : md.labels) md.D2 += l.dim() * l.dim();
  md.D = Cyclotomic::sqrt_of(md.D2);
  md.S = md.S_unnormalized;
  for (auto& row : md.S)
    for (auto& v : row) v /= md.D;
  md.conductor = 1;
  for (const auto& t : md.T) {
    const i64 o = t.root_order();
    if (o > 0) md.conductor = lcm(md.conductor, o);
  }
  md.issues = check_modular_axioms(md);
  md.modular = md.issues.empty();
  md.radical = md.modular ? std::vector<int>{0} : transparent_labels(md);
  md.fusion.clear();
  if (with_fusion && md.modular) md.fusion = verlinde(md.S_unnormalized, md.D2);
}

}  // namespace

std::optional<i64> root_exponent(const Cyclotomic& z, i64 modulus) {
  const i64 o = z.root_order();
  if (o == 0 || modulus % o != 0) return std::nullopt;
  for (i64 k = 0; k < o; ++k)
    if (Cyclotomic::root_of_unity(o, k) == z) return k * (modulus / o);
  return std::nullopt;
}

ProjectiveTable projective_character_table(const FiniteGroup& c, const std::vector<i64>& theta, i64 modulus) {
  const int n = c.order();
  if (theta.size() != static_cast<std::size_t>(n) * n) throw Error(ErrorKind::InputError, "theta has wrong size");
  auto th = [&](int x, int y) { return mod(theta[static_cast<std::size_t>(x) * n + y], modulus); };
  for (int x = 0; x < n; ++x)
    if (th(0, x) != 0 || th(x, 0) != 0) throw Error(ErrorKind::NotA2Cocycle, "theta is not normalized");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (mod(th(y, z) - th(c.mul(x, y), z) + th(x, c.mul(y, z)) - th(x, y), modulus) != 0) {
          std::ostringstream os;
          os << "cocycle identity fails at (" << x << ", " << y << ", " << z << ")";
          throw Error(ErrorKind::NotA2Cocycle, os.str());
        }

  // shrink N to the order of the subgroup of mu_N the values generate
  i64 g0 = modulus;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) g0 = gcd(g0, th(x, y));
  const i64 m = modulus / g0;
  const int big = static_cast<int>(m) * n;
  std::vector<int> flat(static_cast<std::size_t>(big) * big);
  for (int a = 0; a < m; ++a)
    for (int x = 0; x < n; ++x)
      for (int b = 0; b < m; ++b)
        for (int y = 0; y < n; ++y) {
          const i64 k = mod(a + b + th(x, y) / g0, m);
          flat[static_cast<std::size_t>(a * n + x) * big + b * n + y] = static_cast<int>(k) * n + c.mul(x, y);
        }
  const FiniteGroup ext = FiniteGroup::from_trusted_table(std::move(flat), big);
  const CharacterTable table = character_table(ext);

  ProjectiveTable out;
  const int central_class = ext.class_of(m > 1 ? n : 0);
  for (std::size_t r = 0; r < table.values.size(); ++r) {
    const int deg = table.degrees[r];
    if (table.values[r][central_class] != Cyclotomic(deg) * zeta(m, 1)) continue;
    std::vector<Cyclotomic> row(n);
    for (int x = 0; x < n; ++x) row[x] = table.values[r][ext.class_of(x)];
    out.values.push_back(std::move(row));
    out.degrees.push_back(deg);
  }
  i64 sum = 0;
  for (int deg : out.degrees) sum += static_cast<i64>(deg) * deg;
  if (sum != n) throw std::logic_error("projective table: degrees do not account for the group order");
  return out;
}

const Cyclotomic& SimpleLabel::chi_at(int x) const {
  const int p = position[x];
  if (p < 0) throw std::out_of_range("SimpleLabel: element outside the centralizer");
  return chi[p];
}

std::vector<SimpleLabel> simple_labels(const TwistedDouble& d) {
  const FiniteGroup& grp = d.group();
  const int n = grp.order();
  std::vector<SimpleLabel> out;
  const auto& classes = grp.classes();
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const int g = classes[ci][0];
    auto cent = grp.centralizer(g);
    std::sort(cent.begin(), cent.end());
    const Subgroup sub = make_subgroup(grp, cent);
    const int k = sub.group.order();
    std::vector<i64> theta(static_cast<std::size_t>(k) * k);
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y) theta[static_cast<std::size_t>(x) * k + y] = d.tables().theta(g, sub.embedding[x], sub.embedding[y]);
    const ProjectiveTable pt = projective_character_table(sub.group, theta, d.modulus());

    SimpleLabel base;
    base.g = g;
    base.class_index = static_cast<int>(ci);
    base.class_size = static_cast<int>(classes[ci].size());
    base.centralizer = cent;
    base.position.assign(n, -1);
    for (std::size_t i = 0; i < cent.size(); ++i) base.position[cent[i]] = static_cast<int>(i);
    base.conjugator.assign(n, -1);
    for (int r = 0; r < n; ++r) {
      const int h = grp.conjugate(g, grp.inv(r));  // r g r^-1
      if (base.conjugator[h] < 0) base.conjugator[h] = r;
    }
    for (std::size_t row = 0; row < pt.values.size(); ++row) {
      SimpleLabel l = base;
      l.degree = pt.degrees[row];
      l.chi.resize(cent.size());
      for (int x = 0; x < k; ++x) l.chi[base.position[sub.embedding[x]]] = pt.values[row][x];
      out.push_back(std::move(l));
    }
  }
  return out;
}

std::vector<Cyclotomic> t_matrix(const std::vector<SimpleLabel>& labels) {
  std::vector<Cyclotomic> t;
  t.reserve(labels.size());
  for (const auto& l : labels) {
    Cyclotomic v = l.chi_at(l.g) / Cyclotomic(l.degree);
    if (v.root_order() == 0) throw Error(ErrorKind::ConventionFault, "twist is not a root of unity");
    t.push_back(std::move(v));
  }
  return t;
}

namespace {

// Trace of k acting on the h-graded fibre of M(x): h in the class of x.g and k in C_G(h).
Cyclotomic fibre_trace(const TwistedDouble& d, const SimpleLabel& x, int h, int k) {
  const FiniteGroup& grp = d.group();
  const int r = x.conjugator[h];
  const int c = grp.mul(grp.mul(grp.inv(r), k), r);
  const auto& t = d.tables();
  return zeta(d.modulus(), t.theta(h, k, r) - t.theta(h, r, c)) * x.chi_at(c);
}

}  // namespace

CycloMatrix s_matrix_unnormalized(const TwistedDouble& d, const std::vector<SimpleLabel>& labels) {
  const FiniteGroup& grp = d.group();
  const std::size_t r = labels.size();
  const auto& classes = grp.classes();
  CycloMatrix s(r, std::vector<Cyclotomic>(r, Cyclotomic(0)));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a; b < r; ++b) {
      const auto& x = labels[a];
      const auto& y = labels[b];
      Cyclotomic sum(0);
      for (int h : classes[x.class_index])
        for (int k : classes[y.class_index])
          if (grp.commute(h, k)) sum += fibre_trace(d, x, h, k) * fibre_trace(d, y, k, h);
      // reverse braiding, so that chi(g) / chi(1) is its ribbon twist
      sum = sum.conj();
      s[a][b] = sum;
      s[b][a] = sum;
    }
  return s;
}

std::vector<std::string> check_modular_axioms(const ModularData& md) {
  std::vector<std::string> issues;
  const int r = md.rank();
  const auto& s = md.S_unnormalized;
  const Cyclotomic d2(md.D2);

  for (int i = 0; i < r; ++i)
    if (s[0][i] != Cyclotomic(md.labels[i].dim())) {
      issues.push_back("vacuum row is not the dimension row");
      break;
    }
  bool symmetric = true;
  for (int i = 0; i < r && symmetric; ++i)
    for (int j = i + 1; j < r && symmetric; ++j) symmetric = s[i][j] == s[j][i];
  if (!symmetric) issues.push_back("S is not symmetric");

  bool unitary = true;
  for (int i = 0; i < r && unitary; ++i)
    for (int j = 0; j < r && unitary; ++j) {
      Cyclotomic v(0);
      for (int k = 0; k < r; ++k) v += s[i][k] * s[j][k].conj();
      unitary = v == (i == j ? d2 : Cyclotomic(0));
    }
  if (!unitary) issues.push_back("S is not unitary");

  const CycloMatrix s2 = mat_mul(s, s);
  bool permutation = true;
  std::vector<int> hit(r, 0);
  for (int i = 0; i < r && permutation; ++i) {
    int nonzero = 0;
    for (int j = 0; j < r; ++j) {
      if (s2[i][j].is_zero()) continue;
      ++nonzero;
      ++hit[j];
      permutation = permutation && s2[i][j] == d2;
    }
    permutation = permutation && nonzero == 1;
  }
  for (int j = 0; j < r && permutation; ++j) permutation = hit[j] == 1;
  if (!permutation) issues.push_back("S^2 is not a permutation matrix");

  bool finite = true;
  for (const auto& t : md.T) finite = finite && t.root_order() > 0;
  if (!finite) issues.push_back("T has infinite order");

  if (permutation && finite) {
    CycloMatrix st = s;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) st[i][j] *= md.T[j];
    const CycloMatrix st3 = mat_mul(mat_mul(st, st), st);
    const Cyclotomic lambda = st3[0][0] / s2[0][0];
    bool proportional = lambda * lambda.conj() == d2;
    for (int i = 0; i < r && proportional; ++i)
      for (int j = 0; j < r && proportional; ++j) proportional = st3[i][j] == lambda * s2[i][j];
    if (!proportional) issues.push_back("(ST)^3 is not a unit multiple of S^2");
  }
  return issues;
}

std::vector<FusionEntry> verlinde(const CycloMatrix& s, i64 D2) {
  const int r = static_cast<int>(s.size());
  std::vector<FusionEntry> out;
  CycloMatrix sc(r, std::vector<Cyclotomic>(r));
  for (int k = 0; k < r; ++k)
    for (int m = 0; m < r; ++m) sc[k][m] = s[k][m].conj();
  std::map<std::tuple<int, int, int>, i64> found;
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      std::vector<Cyclotomic> v(r);
      for (int m = 0; m < r; ++m) v[m] = s[i][m] * s[j][m] / s[0][m];
      for (int k = 0; k < r; ++k) {
        Cyclotomic sum(0);
        for (int m = 0; m < r; ++m) sum += v[m] * sc[k][m];
        sum /= Cyclotomic(D2);
        if (!sum.is_rational() || !sum.rational().is_integer() || sum.rational().num() < 0) {
          std::ostringstream os;
          os << "N_{" << i << "," << j << "}^" << k << " = " << sum.str();
          throw Error(ErrorKind::NonIntegralFusion, os.str());
        }
        const i64 nval = sum.rational().num();
        if (nval == 0) continue;
        found[{i, j, k}] = nval;
        found[{j, i, k}] = nval;
      }
    }
  for (const auto& [key, nval] : found) out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), nval});
  return out;
}

ModularData modular_data(const TwistedDouble& d, bool with_fusion) {
  ModularData md;
  md.labels = simple_labels(d);
  md.T = t_matrix(md.labels);
  md.S_unnormalized = s_matrix_unnormalized(d, md.labels);
  finish(md, false);
  if (!md.modular) {
    std::string all;
    for (const auto& s : md.issues) all += (all.empty() ? "" : "; ") + s;
    throw Error(ErrorKind::ConventionFault, all);
  }
  if (with_fusion) md.fusion = verlinde(md.S_unnormalized, md.D2);
  return md;
}

std::vector<int> quotient_members(const TwistedDouble& d, const std::vector<SimpleLabel>& labels,
                                  const QuotientCertificate& cert) {
  const FiniteGroup& grp = d.group();
  const CharacterGroup chars(grp);
  const i64 L = cert.modulus;
  std::vector<int> kept;
  for (std::size_t li = 0; li < labels.size(); ++li) {
    const auto& l = labels[li];
    // u_a acts on the g-fibre of M(g, chi) as zeta^mu_a(g) rho(a), and rho(a) is scalar
    std::map<int, i64> scalar;
    for (int a : cert.subgroup) {
      const auto e = root_exponent(l.chi_at(a) / Cyclotomic(l.degree), L);
      if (!e) throw Error(ErrorKind::SectionNotHomomorphism, "section does not act by a scalar of order dividing the modulus");
      scalar[a] = mod(cert.mu(chars, a, l.g) + *e, L);
    }
    for (int a : cert.subgroup)
      for (int b : cert.subgroup)
        if (scalar[grp.mul(a, b)] != mod(scalar[a] + scalar[b], L))
          throw Error(ErrorKind::SectionNotHomomorphism, "section scalars are not multiplicative on label " +
                                                             std::to_string(li));
    bool member = true;
    for (const auto& [a, s] : scalar) member = member && s == 0;
    if (member) kept.push_back(static_cast<int>(li));
  }
  return kept;
}

ModularData restrict_to_quotient(const TwistedDouble& d, const ModularData& md, const QuotientCertificate& cert,
                                 bool with_fusion) {
  const auto kept = quotient_members(d, md.labels, cert);
  ModularData out;
  for (int i : kept) {
    out.labels.push_back(md.labels[i]);
    out.T.push_back(md.T[i]);
    std::vector<Cyclotomic> row;
    for (int j : kept) row.push_back(md.S_unnormalized[i][j]);
    out.S_unnormalized.push_back(std::move(row));
  }
  finish(out, with_fusion && cert.is_mtc);
  if (out.modular != cert.is_mtc) {
    std::string all = cert.is_mtc ? "certificate is modular but restriction fails:" : "certificate is degenerate but "
                                                                                      "restriction is modular";
    for (const auto& s : out.issues) all += " " + s + ";";
    throw Error(ErrorKind::ConventionFault, all);
  }
  return out;
}

namespace {

// Monomial action of 1 (x) x on the induced regular projective module of a
// label. Basis (i, c): i indexes the class, c the centralizer.
struct MonomialModule {
  const TwistedDouble* d;
  int n = 0;  // |G|
  int k = 0;  // |C|
  std::vector<int> grade;      // basis -> grading element
  std::vector<int> target;     // (x, basis) -> basis
  std::vector<i64> exponent;   // (x, basis) -> exponent at modulus
  int dim() const { return static_cast<int>(grade.size()); }
  int act(int x, int b) const { return target[static_cast<std::size_t>(x) * dim() + b]; }
  i64 exp(int x, int b) const { return exponent[static_cast<std::size_t>(x) * dim() + b]; }
};

MonomialModule build_module(const TwistedDouble& d, const SimpleLabel& l) {
  const FiniteGroup& grp = d.group();
  const auto& t = d.tables();
  MonomialModule m;
  m.d = &d;
  m.n = grp.order();
  m.k = static_cast<int>(l.centralizer.size());
  const auto& cls = grp.classes()[l.class_index];
  std::vector<int> fibre_of(m.n, -1);
  for (std::size_t i = 0; i < cls.size(); ++i) fibre_of[cls[i]] = static_cast<int>(i);
  const int dim = static_cast<int>(cls.size()) * m.k;
  for (int h : cls)
    for (int c = 0; c < m.k; ++c) m.grade.push_back(h);
  m.target.resize(static_cast<std::size_t>(m.n) * dim);
  m.exponent.resize(static_cast<std::size_t>(m.n) * dim);
  for (int x = 0; x < m.n; ++x)
    for (std::size_t i = 0; i < cls.size(); ++i) {
      const int hi = cls[i];
      const int ri = l.conjugator[hi];
      const int hj = grp.mul(grp.mul(x, hi), grp.inv(x));
      const int rj = l.conjugator[hj];
      const int c = grp.mul(grp.inv(rj), grp.mul(x, ri));
      const i64 base = t.theta(hj, x, ri) - t.theta(hj, rj, c);
      for (int w = 0; w < m.k; ++w) {
        const int cw = l.centralizer[w];
        const std::size_t at = static_cast<std::size_t>(x) * dim + i * m.k + w;
        m.target[at] = fibre_of[hj] * m.k + l.position[grp.mul(c, cw)];
        m.exponent[at] = mod(base + t.theta(l.g, c, cw), d.modulus());
      }
    }
  return m;
}

void check_module(const MonomialModule& m) {
  const FiniteGroup& grp = m.d->group();
  const i64 mod_n = m.d->modulus();
  for (int b = 0; b < m.dim(); ++b)
    for (int x = 0; x < m.n; ++x) {
      if (m.grade[m.act(x, b)] != grp.mul(grp.mul(x, m.grade[b]), grp.inv(x)))
        throw Error(ErrorKind::ConventionFault, "module grading is not conjugation-equivariant");
      for (int y = 0; y < m.n; ++y) {
        const int yb = m.act(y, b);
        const int xy = grp.mul(x, y);
        const int h = m.grade[m.act(xy, b)];
        if (m.act(x, yb) != m.act(xy, b) ||
            mod(m.exp(y, b) + m.exp(x, yb) - m.d->tables().theta(h, x, y) - m.exp(xy, b), mod_n) != 0)
          throw Error(ErrorKind::ConventionFault, "module action is not multiplicative");
      }
    }
}

// c(v (x) w) = (1 (x) g_v) w (x) v on basis tensors; returns (w', v) and the exponent.
struct BraidStep {
  int first, second;
  i64 exponent;
};

BraidStep braid(const MonomialModule& mv, const MonomialModule& mw, int v, int w) {
  const int gv = mv.grade[v];
  return {mw.act(gv, w), v, mw.exp(gv, w)};
}

void check_braiding_is_module_map(const MonomialModule& mx, const MonomialModule& my) {
  const auto& t = mx.d->tables();
  const i64 mod_n = mx.d->modulus();
  for (int v = 0; v < mx.dim(); ++v)
    for (int w = 0; w < my.dim(); ++w)
      for (int x = 0; x < mx.n; ++x) {
        // c(Delta(1 (x) x)(v (x) w))
        const int v1 = mx.act(x, v), w1 = my.act(x, w);
        const i64 e1 = t.gamma(x, mx.grade[v1], my.grade[w1]) + mx.exp(x, v) + my.exp(x, w);
        const BraidStep l = braid(mx, my, v1, w1);
        // Delta(1 (x) x)(c(v (x) w))
        const BraidStep c0 = braid(mx, my, v, w);
        const int a = my.act(x, c0.first), b = mx.act(x, c0.second);
        const i64 e2 = c0.exponent + t.gamma(x, my.grade[a], mx.grade[b]) + my.exp(x, c0.first) + mx.exp(x, c0.second);
        if (l.first != a || l.second != b || mod(e1 + l.exponent - e2, mod_n) != 0)
          throw Error(ErrorKind::ConventionFault, "braiding is not a module map");
      }
}

// Fibrewise central idempotent of chi on the regular projective module.
CycloMatrix fibre_projector(const TwistedDouble& d, const SimpleLabel& l) {
  const FiniteGroup& grp = d.group();
  const int k = static_cast<int>(l.centralizer.size());
  CycloMatrix p(k, std::vector<Cyclotomic>(k));
  const Rational scale(l.degree, k);
  for (int c1 = 0; c1 < k; ++c1)
    for (int c2 = 0; c2 < k; ++c2) {
      const int a = l.centralizer[c1], b = l.centralizer[c2];
      const int c = grp.mul(a, grp.inv(b));
      Cyclotomic v = l.chi_at(c).conj() * zeta(d.modulus(), d.tables().theta(l.g, c, b));
      v *= scale;
      p[c1][c2] = std::move(v);
    }
  return p;
}

}  // namespace

Cyclotomic braiding_oracle(const TwistedDouble& d, const SimpleLabel& x, const SimpleLabel& y) {
  if (d.group().order() > kOracleCap)
    throw Error(ErrorKind::CapExceeded, "braiding oracle is limited to groups of order " + std::to_string(kOracleCap));
  const MonomialModule mx = build_module(d, x), my = build_module(d, y);
  check_module(mx);
  check_module(my);
  check_braiding_is_module_map(mx, my);
  const CycloMatrix px = fibre_projector(d, x), py = fibre_projector(d, y);
  auto entry = [](const CycloMatrix& p, int k, int a, int b) -> const Cyclotomic* {
    if (a / k != b / k) return nullptr;
    return &p[a % k][b % k];
  };
  // c^2 sends alpha to phi_alpha sigma(alpha), so
  // Tr(c^-2 (P_x (x) P_y)) = sum_alpha phi_alpha^-1 (P_x (x) P_y)[sigma(alpha), alpha]
  Cyclotomic trace(0);
  for (int v = 0; v < mx.dim(); ++v)
    for (int w = 0; w < my.dim(); ++w) {
      const BraidStep s1 = braid(mx, my, v, w);
      const BraidStep s2 = braid(my, mx, s1.first, s1.second);
      const Cyclotomic* a = entry(px, mx.k, s2.first, v);
      const Cyclotomic* b = entry(py, my.k, s2.second, w);
      if (!a || !b || a->is_zero() || b->is_zero()) continue;
      trace += zeta(d.modulus(), -(s1.exponent + s2.exponent)) * *a * *b;
    }
  trace /= Cyclotomic(static_cast<i64>(x.degree) * y.degree);
  return trace;
}

}  // namespace gtqd
