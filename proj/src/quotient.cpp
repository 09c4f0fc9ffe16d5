#include "gtqd/quotient.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "gtqd/error.hpp"

namespace gtqd {

namespace {

Cochain theta_cochain(const TwistedDouble& d, int g) {
  const auto& grp = d.group();
  Cochain c(d.tables().omega().group_ptr(), 2, d.modulus());
  for (int x = 1; x < grp.order(); ++x)
    for (int y = 1; y < grp.order(); ++y) c.set({x, y}, d.tables().theta(g, x, y));
  return c;
}

Cochain gamma_cochain(const TwistedDouble& d, int g) {
  const auto& grp = d.group();
  Cochain c(d.tables().omega().group_ptr(), 2, d.modulus());
  for (int x = 1; x < grp.order(); ++x)
    for (int y = 1; y < grp.order(); ++y) c.set({x, y}, d.tables().gamma(g, x, y));
  return c;
}

bool lex_less(const Cochain& a, const Cochain& b) { return a.values() < b.values(); }

// Particular solution of d tau = theta_g at the lifted modulus, or nullopt.
std::optional<Cochain> tau_particular(const TwistedDouble& d, int g, std::uint64_t seed) {
  const auto& grp = d.group();
  const i64 big = lifted_modulus(d);
  Cochain theta = theta_cochain(d, g).lifted(big);
  if (grp.order() == 1) return Cochain(theta.group_ptr(), 1, big);
  ModNMatrix delta = delta_matrix(grp, 1, big);
  const int m = grp.order() - 1;
  std::vector<i64> rhs(delta.rows());
  for (int r = 0; r < delta.rows(); ++r) rhs[r] = theta.at(r / m + 1, r % m + 1);
  SolveOptions opts;
  opts.pivot_seed = seed;
  auto sol = solve_modN(delta, rhs, opts);
  if (!sol) return std::nullopt;
  Cochain tau(theta.group_ptr(), 1, big);
  for (int x = 1; x < grp.order(); ++x) tau.set({x}, sol->particular[x - 1]);
  if (!(coboundary(tau) == theta)) throw std::logic_error("tau witness does not verify");
  return tau;
}

Cochain shifted(const Cochain& tau, const CharacterGroup& chars, const std::vector<i64>& c) {
  Cochain out = tau;
  auto vals = chars.values(c, tau.modulus());
  for (int x = 1; x < tau.group().order(); ++x) out.set({x}, tau.at(x) + vals[x]);
  return out;
}

Cochain least_tau(const Cochain& particular, const CharacterGroup& chars) {
  Cochain best = particular;
  for (const auto& c : chars.all()) {
    Cochain cand = shifted(particular, chars, c);
    if (lex_less(cand, best)) best = std::move(cand);
  }
  return best;
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

i64 lifted_modulus(const TwistedDouble& d) { return d.modulus() * d.group().exponent(); }

std::vector<int> b_omega(const TwistedDouble& d) {
  std::vector<int> out;
  for (int g = 0; g < d.group().order(); ++g)
    if (is_coboundary_over_C(gamma_cochain(d, g))) out.push_back(g);
  if (!d.group().is_subgroup(out)) throw std::logic_error("B^omega is not a subgroup");
  return out;
}

std::vector<int> z_omega(const TwistedDouble& d) {
  std::vector<int> out;
  for (int g : b_omega(d))
    if (d.group().is_central(g)) out.push_back(g);
  if (!d.group().is_subgroup(out)) throw std::logic_error("Z^omega is not a subgroup");
  return out;
}

Cochain solve_tau(const TwistedDouble& d, int g) {
  if (!d.group().is_central(g)) throw Error(ErrorKind::NotInZOmega, "element " + std::to_string(g) + " is not central");
  auto p = tau_particular(d, g, 0);
  if (!p) throw Error(ErrorKind::NotInZOmega, "theta_" + std::to_string(g) + " is not a coboundary over C^x");
  CharacterGroup chars(d.group());
  return least_tau(*p, chars);
}

std::vector<i64> beta(const TwistedDouble& d, const CharacterGroup& chars, const std::map<int, Cochain>& tau, int g,
                      int h) {
  const auto& grp = d.group();
  const i64 big = lifted_modulus(d);
  const i64 f = big / d.modulus();
  const int gh = grp.mul(g, h);
  const Cochain& tg = tau.at(g);
  const Cochain& th = tau.at(h);
  const Cochain& tgh = tau.at(gh);
  std::vector<i64> vals(grp.order());
  for (int k = 0; k < grp.order(); ++k)
    vals[k] = mod(tg.at(k) + th.at(k) - tgh.at(k) + f * d.tables().theta(k, g, h), big);
  auto c = chars.decompose(vals, big);
  if (!c)
    throw Error(ErrorKind::ResultNotACharacter,
                "beta(" + std::to_string(g) + ", " + std::to_string(h) + ") is not a character");
  return *c;
}

i64 QuotientCertificate::mu(const CharacterGroup& chars, int a, int x) const {
  return mod(tau.at(a).at(x) - chars.evaluate(nu.at(a), x, modulus), modulus);
}

std::vector<std::vector<i64>> bicharacter(const QuotientCertificate& cert, const CharacterGroup& chars,
                                          BicharConvention convention, std::vector<int>* radical) {
  const auto& a = cert.subgroup;
  const std::size_t k = a.size();
  const i64 m = cert.modulus;
  std::vector<std::vector<i64>> table(k, std::vector<i64>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      i64 v = cert.tau.at(a[i]).at(a[j]) + cert.tau.at(a[j]).at(a[i]) - chars.evaluate(cert.nu.at(a[i]), a[j], m) -
              chars.evaluate(cert.nu.at(a[j]), a[i], m);
      if (convention == BicharConvention::Invert) v = -v;
      table[i][j] = mod(v, m);
    }
  if (radical) {
    radical->clear();
    for (std::size_t i = 0; i < k; ++i) {
      bool in = true;
      for (std::size_t j = 0; j < k && in; ++j) in = table[i][j] == 0;
      if (in) radical->push_back(a[i]);
    }
  }
  return table;
}

QuotientCertificate check_quotient_exists(const TwistedDouble& d, const std::vector<int>& subgroup,
                                          const QuotientOptions& options) {
  const auto& grp = d.group();
  QuotientCertificate cert;
  cert.subgroup = sorted_unique(subgroup);
  const auto& A = cert.subgroup;
  if (!grp.is_subgroup(A)) throw Error(ErrorKind::InputError, "the given elements do not form a subgroup");
  for (int a : A)
    if (!grp.is_central(a)) throw Error(ErrorKind::NotCentral, "element " + std::to_string(a) + " is not central");
  cert.modulus = lifted_modulus(d);
  const i64 big = cert.modulus;
  CharacterGroup chars(grp);
  std::mt19937_64 rng(options.seed);

  // (i) A inside Z^omega, with tau
  for (int a : A) {
    if (a == 0) {
      cert.tau.emplace(0, Cochain(d.tables().omega().group_ptr(), 1, big));
      continue;
    }
    auto p = tau_particular(d, a, options.seed);
    if (!p) {
      cert.reasons.push_back("element " + std::to_string(a) + " is not in Z^omega(G): theta_" + std::to_string(a) +
                             " is not a coboundary over C^x");
      continue;
    }
    Cochain tau = least_tau(*p, chars);
    if (options.seed != 0) {
      auto all = chars.all();
      tau = shifted(tau, chars, all[rng() % all.size()]);
    }
    cert.tau.emplace(a, std::move(tau));
  }
  if (!cert.reasons.empty()) return cert;

  // beta on A and its cocycle law
  for (int a : A)
    for (int b : A) cert.beta[{a, b}] = beta(d, chars, cert.tau, a, b);
  for (int a : A)
    for (int b : A)
      for (int c : A) {
        auto lhs = chars.add(cert.beta.at({b, c}), cert.beta.at({a, grp.mul(b, c)}));
        auto rhs = chars.add(cert.beta.at({grp.mul(a, b), c}), cert.beta.at({a, b}));
        if (lhs != rhs) throw std::logic_error("beta violates the 2-cocycle law");
      }

  // (ii) d nu = beta on A, one system per invariant factor of G^
  const auto& factors = chars.invariant_factors();
  std::vector<int> nonzero(A.begin() + 1, A.end());
  std::map<int, int> pos;
  for (std::size_t i = 0; i < nonzero.size(); ++i) pos[nonzero[i]] = static_cast<int>(i);
  const int unknowns = static_cast<int>(nonzero.size());
  std::vector<std::vector<std::vector<i64>>> per_factor;  // factor -> list of full solutions
  for (std::size_t fi = 0; fi < factors.size(); ++fi) {
    const i64 dmod = factors[fi];
    std::vector<i64> rhs;
    ModNMatrix mat(dmod, unknowns * unknowns, std::max(unknowns, 1));
    for (int i = 0; i < unknowns; ++i)
      for (int j = 0; j < unknowns; ++j) {
        const int r = i * unknowns + j;
        const int ab = grp.mul(nonzero[i], nonzero[j]);
        mat.add(r, i, 1);
        mat.add(r, j, 1);
        if (ab != 0) mat.add(r, pos.at(ab), -1);
        rhs.push_back(cert.beta.at({nonzero[i], nonzero[j]})[fi]);
      }
    mat.finalize();
    SolveOptions opts;
    opts.pivot_seed = options.seed;
    auto sol = solve_modN(mat, rhs, opts);
    if (!sol) {
      cert.reasons.push_back("d nu = beta has no solution in the factor Z/" + std::to_string(dmod) + " of G^");
      return cert;
    }
    // full solution set: particular + span of the kernel
    std::set<std::vector<i64>> span{std::vector<i64>(unknowns, 0)};
    std::vector<std::vector<i64>> frontier(span.begin(), span.end());
    while (!frontier.empty()) {
      std::vector<std::vector<i64>> next;
      for (const auto& v : frontier)
        for (const auto& k : sol->kernel) {
          std::vector<i64> w(unknowns);
          for (int i = 0; i < unknowns; ++i) w[i] = mod(v[i] + k[i], dmod);
          if (span.insert(w).second) next.push_back(std::move(w));
        }
      frontier = std::move(next);
    }
    std::vector<std::vector<i64>> full;
    for (const auto& k : span) {
      std::vector<i64> w(unknowns);
      for (int i = 0; i < unknowns; ++i) w[i] = mod(sol->particular[i] + k[i], dmod);
      full.push_back(std::move(w));
    }
    std::sort(full.begin(), full.end());
    per_factor.push_back(std::move(full));
  }

  // candidates as flattened vectors (a-major, then factor), sorted
  std::vector<std::vector<i64>> candidates;
  std::vector<std::size_t> idx(per_factor.size(), 0);
  while (candidates.size() < options.max_nu_candidates) {
    std::vector<i64> flat(static_cast<std::size_t>(unknowns) * factors.size());
    for (int i = 0; i < unknowns; ++i)
      for (std::size_t fi = 0; fi < factors.size(); ++fi) flat[i * factors.size() + fi] = per_factor[fi][idx[fi]][i];
    candidates.push_back(std::move(flat));
    std::size_t f = 0;
    while (f < idx.size() && ++idx[f] == per_factor[f].size()) idx[f++] = 0;
    if (f == idx.size()) break;
  }
  // order by the section table mu_a(x) = tau_a(x) - nu(a)(x): the set of
  // sections does not depend on tau, so neither does the choice
  std::vector<std::pair<std::vector<i64>, std::vector<i64>>> keyed;
  keyed.reserve(candidates.size());
  for (auto& flat : candidates) {
    std::vector<i64> key;
    key.reserve(static_cast<std::size_t>(unknowns) * grp.order());
    for (int i = 0; i < unknowns; ++i) {
      const std::vector<i64> nu_a(flat.begin() + i * factors.size(), flat.begin() + (i + 1) * factors.size());
      for (int x = 0; x < grp.order(); ++x)
        key.push_back(mod(cert.tau.at(nonzero[i]).at(x) - chars.evaluate(nu_a, x, big), big));
    }
    keyed.emplace_back(std::move(key), std::move(flat));
  }
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < keyed.size(); ++i) candidates[i] = std::move(keyed[i].second);
  cert.nu_candidates = candidates.size();

  auto install = [&](const std::vector<i64>& flat) {
    cert.nu.clear();
    cert.nu[0] = chars.zero();
    for (int i = 0; i < unknowns; ++i)
      cert.nu[nonzero[i]] = std::vector<i64>(flat.begin() + i * factors.size(), flat.begin() + (i + 1) * factors.size());
    cert.bicharacter = bicharacter(cert, chars, options.convention, &cert.radical);
    cert.is_mtc = cert.radical.size() == 1;
  };
  std::optional<std::size_t> chosen;
  if (options.prefer) {
    for (std::size_t i = 0; i < candidates.size() && !chosen; ++i) {
      install(candidates[i]);
      if (options.prefer(cert)) chosen = i;
    }
  }
  if (!chosen && options.policy == NuPolicy::FirstNondegenerate) {
    for (std::size_t i = 0; i < candidates.size() && !chosen; ++i) {
      install(candidates[i]);
      if (cert.is_mtc) chosen = i;
    }
  }
  if (!chosen && options.policy == NuPolicy::Random) chosen = rng() % candidates.size();
  if (!chosen) chosen = 0;
  install(candidates[*chosen]);

  // d nu = beta, checked directly
  for (int a : A)
    for (int b : A) {
      auto lhs = chars.add(chars.add(cert.nu.at(a), cert.nu.at(b)), chars.neg(cert.nu.at(grp.mul(a, b))));
      if (lhs != cert.beta.at({a, b})) throw std::logic_error("nu does not solve d nu = beta");
    }
  // symmetry, bimultiplicativity, convention independence of the radical
  const std::size_t k = A.size();
  std::map<int, std::size_t> where;
  for (std::size_t i = 0; i < k; ++i) where[A[i]] = i;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (cert.bicharacter[i][j] != cert.bicharacter[j][i])
        throw Error(ErrorKind::ConventionFault, "bicharacter is not symmetric");
      for (std::size_t l = 0; l < k; ++l) {
        const std::size_t ij = where.at(grp.mul(A[i], A[j]));
        if (mod(cert.bicharacter[ij][l] - cert.bicharacter[i][l] - cert.bicharacter[j][l], big) != 0)
          throw Error(ErrorKind::ConventionFault, "bicharacter is not bimultiplicative at (" + std::to_string(A[i]) +
                                                      ", " + std::to_string(A[j]) + " | " + std::to_string(A[l]) + ")");
      }
    }
  std::vector<int> other_radical;
  bicharacter(cert, chars,
              options.convention == BicharConvention::Divide ? BicharConvention::Invert : BicharConvention::Divide,
              &other_radical);
  if (other_radical != cert.radical) throw Error(ErrorKind::ConventionFault, "MTC verdict depends on the convention");
  cert.exists = true;
  return cert;
}

// ---------------------------------------------------------------------------

GeneralizedDouble::GeneralizedDouble(const TwistedDouble& d, const QuotientCertificate& cert)
    : parent_(&d), n_(d.group().order()), modulus_(cert.modulus) {
  if (!cert.exists) throw Error(ErrorKind::WellDefinednessFailure, "no certificate for the quotient");
  const auto& grp = d.group();
  coset_of_.assign(n_, -1);
  for (int x = 0; x < n_; ++x) {
    if (coset_of_[x] >= 0) continue;
    const int c = static_cast<int>(reps_.size());
    reps_.push_back(x);
    for (int a : cert.subgroup) coset_of_[grp.mul(x, a)] = c;
  }
  CharacterGroup chars(grp);
  const i64 f = modulus_ / d.modulus();
  lambda_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (int g = 0; g < n_; ++g)
    for (int x = 0; x < n_; ++x) {
      const int r = reps_[coset_of_[x]];
      const int a = grp.mul(grp.inv(r), x);
      lambda_[static_cast<std::size_t>(g) * n_ + x] =
          mod(-f * d.tables().theta(g, r, a) - cert.mu(chars, a, grp.conjugate(g, r)), modulus_);
    }
}

std::optional<Term> GeneralizedDouble::product(const Label& u, const Label& v) const {
  const auto& grp = parent_->group();
  const int r = reps_[u.x], s = reps_[v.x];
  if (grp.conjugate(u.g, r) != v.g) return std::nullopt;
  const int rs = grp.mul(r, s);
  const i64 f = modulus_ / parent_->modulus();
  return Term{mod(f * parent_->tables().theta(u.g, r, s) + lambda(u.g, rs), modulus_), {u.g, coset_of_[rs]}};
}

std::vector<CoproductTerm> GeneralizedDouble::coproduct(const Label& u) const {
  const auto& grp = parent_->group();
  const int r = reps_[u.x];
  const i64 f = modulus_ / parent_->modulus();
  std::vector<CoproductTerm> out;
  for (int a = 0; a < n_; ++a) {
    const int b = grp.mul(grp.inv(a), u.g);
    out.push_back({mod(f * parent_->tables().gamma(r, a, b), modulus_), {a, u.x}, {b, u.x}});
  }
  return out;
}

GeneralizedDoubleReport verify_generalized_double(const GeneralizedDouble& gd, const QuotientCertificate& cert,
                                                  bool throw_on_failure) {
  GeneralizedDoubleReport rep;
  const TwistedDouble& d = gd.parent();
  const auto& grp = d.group();
  const int n = grp.order();
  const i64 m = gd.modulus();
  const i64 f = m / d.modulus();
  CharacterGroup chars(grp);
  auto note = [&](bool& flag, const std::string& what) {
    flag = false;
    if (rep.first_failure.empty()) rep.first_failure = what;
  };

  // section a -> u_a: multiplicative, group-like, central
  for (int a : cert.subgroup) {
    GroupLike u{a, std::vector<i64>(n)};
    for (int x = 0; x < n; ++x) u.coeffs[x] = cert.mu(chars, a, x);
    if (!is_grouplike(d, u, m) || !is_central_element(d, u, m))
      note(rep.section_homomorphism, "u_" + std::to_string(a) + " is not a central group-like");
    for (int b : cert.subgroup)
      for (int x = 0; x < n; ++x) {
        i64 lhs = cert.mu(chars, a, x) + cert.mu(chars, b, x) + f * d.tables().theta(x, a, b);
        if (mod(lhs - cert.mu(chars, grp.mul(a, b), x), m) != 0) {
          note(rep.section_homomorphism,
               "u_" + std::to_string(a) + " u_" + std::to_string(b) + " differs from u_" +
                   std::to_string(grp.mul(a, b)) + " at x=" + std::to_string(x));
          break;
        }
      }
  }
  if (throw_on_failure && !rep.section_homomorphism)
    throw Error(ErrorKind::SectionNotHomomorphism, rep.first_failure);

  // algebra morphism, including the vanishing pattern
  for (int g = 0; g < n && rep.algebra_morphism; ++g)
    for (int x = 0; x < n && rep.algebra_morphism; ++x)
      for (int h = 0; h < n && rep.algebra_morphism; ++h)
        for (int y = 0; y < n; ++y) {
          auto up = d.product({g, x}, {h, y});
          auto down = gd.product({g, gd.coset_of(x)}, {h, gd.coset_of(y)});
          bool same = up.has_value() == down.has_value();
          if (same && up) {
            i64 lhs = f * up->exponent + gd.lambda(up->label.g, up->label.x);
            i64 rhs = gd.lambda(g, x) + gd.lambda(h, y) + down->exponent;
            same = down->label.g == up->label.g && down->label.x == gd.coset_of(up->label.x) && mod(lhs - rhs, m) == 0;
          }
          if (!same) {
            note(rep.algebra_morphism, "product not well defined on cosets " + std::to_string(gd.coset_of(x)) +
                                           " and " + std::to_string(gd.coset_of(y)) + " (g=" + std::to_string(g) +
                                           ", h=" + std::to_string(h) + ")");
            break;
          }
        }

  // coalgebra morphism
  for (int g = 0; g < n && rep.coalgebra_morphism; ++g)
    for (int x = 0; x < n && rep.coalgebra_morphism; ++x) {
      auto up = d.coproduct({g, x});
      auto down = gd.coproduct({g, gd.coset_of(x)});
      for (std::size_t i = 0; i < up.size(); ++i) {
        const auto& t = up[i];
        const auto& s = down[i];
        i64 lhs = f * t.exponent + gd.lambda(t.left.g, t.left.x) + gd.lambda(t.right.g, t.right.x);
        i64 rhs = gd.lambda(g, x) + s.exponent;
        if (s.left.g != t.left.g || s.right.g != t.right.g || mod(lhs - rhs, m) != 0) {
          note(rep.coalgebra_morphism, "coproduct not well defined on coset " + std::to_string(gd.coset_of(x)) +
                                           " (g=" + std::to_string(g) + ")");
          break;
        }
      }
    }

  // p-bar pi' = pi p and pi' i = i
  for (int x = 0; x < n; ++x)
    if (gd.lambda(0, x) != 0) note(rep.diagram_commutes, "pi' scales e_1 (x) " + std::to_string(x));
  for (int g = 0; g < n; ++g)
    if (gd.lambda(g, 0) != 0 || gd.coset_of(0) != 0)
      note(rep.diagram_commutes, "pi' moves the image of e_" + std::to_string(g));

  if (throw_on_failure && !rep.ok()) throw Error(ErrorKind::WellDefinednessFailure, rep.first_failure);
  return rep;
}

GeneralizedDouble build_generalized_double(const TwistedDouble& d, const QuotientCertificate& cert) {
  GeneralizedDouble gd(d, cert);
  verify_generalized_double(gd, cert, true);
  return gd;
}

// ---------------------------------------------------------------------------

bool is_grouplike(const TwistedDouble& d, const GroupLike& u, i64 modulus) {
  const auto& grp = d.group();
  const i64 f = modulus / d.modulus();
  if (mod(u.coeffs[0], modulus) != 0) return false;
  for (int y = 0; y < grp.order(); ++y)
    for (int z = 0; z < grp.order(); ++z)
      if (mod(u.coeffs[grp.mul(y, z)] + f * d.tables().gamma(u.g, y, z) - u.coeffs[y] - u.coeffs[z], modulus) != 0)
        return false;
  return true;
}

bool is_central_element(const TwistedDouble& d, const GroupLike& u, i64 modulus) {
  const auto& grp = d.group();
  const i64 f = modulus / d.modulus();
  const int g = u.g;
  for (int h = 0; h < grp.order(); ++h)
    for (int x = 0; x < grp.order(); ++x) {
      // u (e_h (x) x) lives on e_y0 (x) gx with y0^g = h; (e_h (x) x) u on e_h (x) xg
      const int y0 = grp.mul(grp.mul(g, h), grp.inv(g));
      if (y0 != h || grp.mul(g, x) != grp.mul(x, g)) return false;
      i64 left = u.coeffs[h] + f * d.tables().theta(h, g, x);
      i64 right = u.coeffs[grp.conjugate(h, x)] + f * d.tables().theta(h, x, g);
      if (mod(left - right, modulus) != 0) return false;
    }
  return true;
}

std::vector<GroupLike> central_grouplikes(const TwistedDouble& d) {
  const auto& grp = d.group();
  const i64 big = lifted_modulus(d);
  CharacterGroup chars(grp);
  std::vector<GroupLike> out;
  std::set<std::pair<int, std::vector<i64>>> seen;
  auto z = z_omega(d);
  for (int g : z) {
    Cochain tau = solve_tau(d, g);
    for (const auto& c : chars.all()) {
      GroupLike u{g, std::vector<i64>(grp.order())};
      auto vals = chars.values(c, big);
      for (int x = 0; x < grp.order(); ++x) u.coeffs[x] = mod(tau.at(x) + vals[x], big);
      if (!is_grouplike(d, u, big)) throw std::logic_error("Gamma_0 element is not group-like");
      if (!is_central_element(d, u, big)) throw std::logic_error("Gamma_0 element is not central");
      seen.insert({g, u.coeffs});
      out.push_back(std::move(u));
    }
  }
  if (seen.size() != static_cast<std::size_t>(chars.size()) * z.size())
    throw std::logic_error("|Gamma_0| differs from |G^| |Z^omega|");
  return out;
}

bool two_generator_test(const Cochain& omega) {
  const auto& grp = omega.group();
  if (!unique_involution(grp)) throw Error(ErrorKind::NoUniqueInvolution, "group has no unique involution");
  const auto t = static_cast<i64>(sylow2_subgroup(grp).size());
  return class_order(omega) % t == 0;
}

TwoGeneratorCount count_two_generators(i64 h3_order, i64 sylow2_part) {
  if (h3_order <= 0 || sylow2_part <= 0 || h3_order % sylow2_part != 0)
    throw Error(ErrorKind::InputError, "the 2-part must divide the order of H^3");
  TwoGeneratorCount out;
  for (i64 k = 0; k < h3_order; ++k) {
    const i64 order = h3_order / gcd(h3_order, k);
    if (order % sylow2_part != 0) continue;
    ++out.count;
    ++out.orders[order];
  }
  return out;
}

}  // namespace gtqd
