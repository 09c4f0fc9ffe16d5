#include "gtqd/character_table.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

namespace gtqd {

namespace {

using Mat = std::vector<std::vector<i64>>;

i64 mulmod(i64 a, i64 b, i64 p) { return static_cast<i64>(static_cast<i128>(a) * b % p); }

i64 next_prime_1_mod(i64 e, i64 above) {
  i64 p = (above / e + 1) * e + 1;
  while (!is_prime(p)) p += e;
  return p;
}

i64 primitive_root(i64 p) {
  auto fac = factorize(p - 1);
  for (i64 g = 2;; ++g) {
    bool ok = true;
    for (auto [q, k] : fac) ok = ok && pow_mod(g, (p - 1) / q, p) != 1;
    if (ok) return g;
  }
}

// Characteristic polynomial (monic, lowest degree first) via Hessenberg form.
std::vector<i64> charpoly(Mat a, i64 p) {
  const int n = static_cast<int>(a.size());
  for (int j = 0; j + 2 <= n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n && piv < 0; ++i)
      if (a[i][j] != 0) piv = i;
    if (piv < 0) continue;
    if (piv != j + 1) {
      std::swap(a[piv], a[j + 1]);
      for (int i = 0; i < n; ++i) std::swap(a[i][piv], a[i][j + 1]);
    }
    const i64 inv = inv_mod(a[j + 1][j], p);
    for (int i = j + 2; i < n; ++i) {
      if (a[i][j] == 0) continue;
      const i64 t = mulmod(a[i][j], inv, p);
      for (int c = 0; c < n; ++c) a[i][c] = mod(a[i][c] - mulmod(t, a[j + 1][c], p), p);
      for (int r = 0; r < n; ++r) a[r][j + 1] = (a[r][j + 1] + mulmod(t, a[r][i], p)) % p;
    }
  }
  // p_k(x) = det(xI - H_k), recurrence over the Hessenberg columns
  std::vector<std::vector<i64>> polys(n + 1);
  polys[0] = {1};
  for (int k = 1; k <= n; ++k) {
    std::vector<i64> pk(k + 1, 0);
    const auto& prev = polys[k - 1];
    for (int i = 0; i < k; ++i) {
      pk[i + 1] = (pk[i + 1] + prev[i]) % p;
      pk[i] = mod(pk[i] - mulmod(a[k - 1][k - 1], prev[i], p), p);
    }
    i64 prod = 1;
    for (int i = k - 1; i >= 1; --i) {
      prod = mulmod(prod, a[i][i - 1], p);
      if (prod == 0) break;
      const i64 t = mulmod(prod, a[i - 1][k - 1], p);
      const auto& q = polys[i - 1];
      for (std::size_t c = 0; c < q.size(); ++c) pk[c] = mod(pk[c] - mulmod(t, q[c], p), p);
    }
    polys[k] = std::move(pk);
  }
  return polys[n];
}

// One vector spanning the kernel of a (assumed one-dimensional), or empty.
std::vector<i64> kernel_vector(Mat a, i64 p) {
  const int n = static_cast<int>(a.size());
  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < n && row < n; ++c) {
    int piv = -1;
    for (int r = row; r < n && piv < 0; ++r)
      if (a[r][c] != 0) piv = r;
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    const i64 inv = inv_mod(a[row][c], p);
    for (int k = 0; k < n; ++k) a[row][k] = mulmod(a[row][k], inv, p);
    for (int r = 0; r < n; ++r) {
      if (r == row || a[r][c] == 0) continue;
      const i64 t = a[r][c];
      for (int k = 0; k < n; ++k) a[r][k] = mod(a[r][k] - mulmod(t, a[row][k], p), p);
    }
    pivot_col.push_back(c);
    ++row;
  }
  if (static_cast<int>(pivot_col.size()) != n - 1) return {};
  int free = 0;
  while (free < static_cast<int>(pivot_col.size()) && pivot_col[free] == free) ++free;
  std::vector<i64> v(n, 0);
  v[free] = 1;
  for (int r = 0; r < n - 1; ++r) v[pivot_col[r]] = mod(-a[r][free], p);
  return v;
}

struct ModularTable {
  std::vector<std::vector<i64>> values;  // chi(class rep) mod p
  std::vector<int> degrees;
};

std::optional<ModularTable> modular_pass(const FiniteGroup& g, const std::vector<int>& coeff, i64 p,
                                         std::uint64_t seed) {
  const auto& classes = g.classes();
  const int k = static_cast<int>(classes.size());
  std::mt19937_64 rng(seed);
  Mat m(k, std::vector<i64>(k, 0));
  for (int i = 0; i < k; ++i) {
    const i64 r = static_cast<i64>(rng() % static_cast<std::uint64_t>(p));
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) {
        const int a = coeff[(static_cast<std::size_t>(i) * k + j) * k + l];
        if (a) m[j][l] = (m[j][l] + mulmod(r, a, p)) % p;
      }
  }
  auto poly = charpoly(m, p);
  std::vector<i64> roots;
  for (i64 x = 0; x < p && static_cast<int>(roots.size()) < k; ++x) {
    i64 acc = 0;
    for (int i = k; i >= 0; --i) acc = (mulmod(acc, x, p) + poly[i]) % p;
    if (acc == 0) roots.push_back(x);
  }
  if (static_cast<int>(roots.size()) != k) return std::nullopt;

  std::vector<int> inverse_class(k);
  for (int j = 0; j < k; ++j) inverse_class[j] = g.class_of(g.inv(classes[j][0]));
  const i64 order = g.order();
  int max_degree = 1;
  while ((max_degree + 1) * (max_degree + 1) <= order) ++max_degree;

  ModularTable out;
  for (i64 lambda : roots) {
    Mat shifted = m;
    for (int j = 0; j < k; ++j) shifted[j][j] = mod(shifted[j][j] - lambda, p);
    auto w = kernel_vector(shifted, p);
    if (w.empty() || w[0] == 0) return std::nullopt;
    const i64 inv0 = inv_mod(w[0], p);
    for (i64& x : w) x = mulmod(x, inv0, p);
    // sum_j w_j w_j* / |K_j| = |G| / chi(1)^2
    i64 s = 0;
    for (int j = 0; j < k; ++j)
      s = (s + mulmod(mulmod(w[j], w[inverse_class[j]], p), inv_mod(static_cast<i64>(classes[j].size()), p), p)) % p;
    if (s == 0) return std::nullopt;
    const i64 d2 = mulmod(order % p, inv_mod(s, p), p);
    int degree = 0;
    for (int d = 1; d <= max_degree && !degree; ++d)
      if (static_cast<i64>(d) * d % p == d2) degree = d;
    if (!degree) return std::nullopt;
    std::vector<i64> vals(k);
    for (int j = 0; j < k; ++j)
      vals[j] = mulmod(mulmod(w[j], degree, p), inv_mod(static_cast<i64>(classes[j].size()), p), p);
    out.values.push_back(std::move(vals));
    out.degrees.push_back(degree);
  }
  return out;
}

}  // namespace

CharacterTable character_table(const FiniteGroup& g) {
  const auto& classes = g.classes();
  const int k = static_cast<int>(classes.size());
  const i64 e = g.exponent();
  const int n = g.order();

  // class multiplication coefficients a_{ijl} = #{(x, y) in K_i x K_j : xy = z_l}
  std::vector<int> coeff(static_cast<std::size_t>(k) * k * k, 0);
  for (int i = 0; i < k; ++i)
    for (int x : classes[i])
      for (int l = 0; l < k; ++l) {
        const int y = g.mul(g.inv(x), classes[l][0]);
        ++coeff[(static_cast<std::size_t>(i) * k + g.class_of(y)) * k + l];
      }

  i64 p = next_prime_1_mod(e, std::max<i64>(4 * n, 200));
  std::optional<ModularTable> mt;
  for (int attempt = 0; attempt < 40 && !mt; ++attempt) {
    mt = modular_pass(g, coeff, p, 0x9e3779b97f4a7c15ULL + attempt);
    if (!mt && attempt % 4 == 3) p = next_prime_1_mod(e, p);
  }
  if (!mt) throw std::runtime_error("character table: modular pass did not separate the characters");

  // lift via eigenvalue multiplicities, zeta_e <-> z
  const i64 z = pow_mod(primitive_root(p), (p - 1) / e, p);
  CharacterTable table;
  table.prime = p;
  for (std::size_t c = 0; c < mt->values.size(); ++c) {
    const auto& vals = mt->values[c];
    const int degree = mt->degrees[c];
    std::vector<Cyclotomic> row(k);
    for (int j = 0; j < k; ++j) {
      const int x = classes[j][0];
      const int o = g.element_order(x);
      const i64 zo = pow_mod(z, e / o, p);
      std::vector<i64> powers(o);
      for (int t = 0, y = 0; t < o; ++t, y = g.mul(y, x)) powers[t] = vals[g.class_of(y)];
      std::vector<std::pair<i64, Rational>> terms;
      i64 total = 0;
      const i64 inv_o = inv_mod(o, p);
      for (int s = 0; s < o; ++s) {
        i64 acc = 0;
        const i64 step = pow_mod(zo, mod(-s, o), p);
        i64 cur = 1;
        for (int t = 0; t < o; ++t) {
          acc = (acc + mulmod(powers[t], cur, p)) % p;
          cur = mulmod(cur, step, p);
        }
        const i64 mult = mulmod(acc, inv_o, p);
        if (mult > degree) throw std::logic_error("character table: eigenvalue multiplicity out of range");
        total += mult;
        if (mult) terms.emplace_back(s, Rational(mult));
      }
      if (total != degree) throw std::logic_error("character table: multiplicities do not sum to the degree");
      row[j] = Cyclotomic::from_terms(o, terms);
    }
    table.values.push_back(std::move(row));
    table.degrees.push_back(degree);
  }

  std::vector<std::size_t> order(table.values.size());
  std::iota(order.begin(), order.end(), 0);
  auto is_trivial = [&](std::size_t c) {
    for (const auto& v : table.values[c])
      if (v != Cyclotomic(1)) return false;
    return true;
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    return table.degrees[a] < table.degrees[b];
  });
  CharacterTable sorted;
  sorted.prime = p;
  for (std::size_t c : order) {
    sorted.values.push_back(table.values[c]);
    sorted.degrees.push_back(table.degrees[c]);
  }
  i64 sum = 0;
  for (int d : sorted.degrees) sum += static_cast<i64>(d) * d;
  if (sum != n || static_cast<int>(sorted.values.size()) != k)
    throw std::logic_error("character table: degrees do not account for the group order");
  return sorted;
}

}  // namespace gtqd
