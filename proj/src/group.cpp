#include "gtqd/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "gtqd/error.hpp"
#include "gtqd/modn.hpp"

namespace gtqd {

namespace {

std::string triple_str(int a, int b, int c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

}  // namespace

FiniteGroup FiniteGroup::from_table(const Table& table, std::vector<std::string> names, int cap) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorKind::InputError, "empty table");
  if (n > cap) throw Error(ErrorKind::CapExceeded, "order " + std::to_string(n) + " exceeds cap");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw Error(ErrorKind::InputError, "row " + std::to_string(i) + " has wrong length");
    for (int v : table[i])
      if (v < 0 || v >= n) throw Error(ErrorKind::InputError, "entry out of range in row " + std::to_string(i));
  }
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row_seen(n, false), col_seen(n, false);
    for (int j = 0; j < n; ++j) {
      if (row_seen[table[i][j]])
        throw Error(ErrorKind::NotLatinSquare, "row " + std::to_string(i) + " repeats entry " +
                                                   std::to_string(table[i][j]));
      if (col_seen[table[j][i]])
        throw Error(ErrorKind::NotLatinSquare, "column " + std::to_string(i) + " repeats entry " +
                                                   std::to_string(table[j][i]));
      row_seen[table[i][j]] = true;
      col_seen[table[j][i]] = true;
    }
  }
  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) identity = e;
  }
  if (identity < 0) throw Error(ErrorKind::NoIdentity, "no two-sided identity row");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(ErrorKind::NonAssociative, "fails at " + triple_str(a, b, c));

  // relabel: swap identity and 0
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::swap(sigma[0], sigma[identity]);
  FiniteGroup g;
  g.n_ = n;
  g.table_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table_[static_cast<std::size_t>(sigma[a]) * n + sigma[b]] = sigma[table[a][b]];
  if (!names.empty()) {
    if (static_cast<int>(names.size()) != n) throw Error(ErrorKind::InputError, "names length mismatch");
    std::swap(names[0], names[identity]);
    g.names_ = std::move(names);
  }
  g.derive();
  return g;
}

FiniteGroup FiniteGroup::from_generators(const std::vector<std::vector<int>>& perms, int cap) {
  std::size_t degree = perms.empty() ? 0 : perms[0].size();
  for (const auto& p : perms) {
    if (p.size() != degree) throw Error(ErrorKind::InputError, "generators have different degrees");
    std::vector<bool> seen(degree, false);
    for (int v : p) {
      if (v < 0 || static_cast<std::size_t>(v) >= degree || seen[v])
        throw Error(ErrorKind::InputError, "generator is not a permutation");
      seen[v] = true;
    }
  }
  // composition x*y: apply x, then y
  auto compose = [](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = y[x[i]];
    return out;
  };
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : perms) {
      auto next = compose(elems[head], gen);
      if (index.count(next)) continue;
      if (static_cast<int>(elems.size()) >= cap)
        throw Error(ErrorKind::ClosureTooLarge, "closure exceeds cap " + std::to_string(cap));
      index.emplace(next, static_cast<int>(elems.size()));
      elems.push_back(std::move(next));
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
  return from_trusted_table(std::move(flat), n);
}

FiniteGroup FiniteGroup::abelian(const std::vector<int>& factors) {
  int n = 1;
  for (int f : factors) {
    if (f <= 0) throw Error(ErrorKind::InputError, "non-positive cyclic factor");
    n *= f;
  }
  auto digits = [&](int x) {
    std::vector<int> d;
    for (int f : factors) {
      d.push_back(x % f);
      x /= f;
    }
    return d;
  };
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    auto da = digits(a);
    for (int b = 0; b < n; ++b) {
      auto db = digits(b);
      int idx = 0, scale = 1;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        idx += ((da[i] + db[i]) % factors[i]) * scale;
        scale *= factors[i];
      }
      flat[static_cast<std::size_t>(a) * n + b] = idx;
    }
  }
  return from_trusted_table(std::move(flat), n);
}

FiniteGroup FiniteGroup::from_trusted_table(std::vector<int> flat, int order) {
  FiniteGroup g;
  g.n_ = order;
  g.table_ = std::move(flat);
  for (int x = 0; x < order; ++x)
    if (g.mul(0, x) != x || g.mul(x, 0) != x) throw Error(ErrorKind::NoIdentity, "index 0 is not the identity");
  g.derive();
  return g;
}

void FiniteGroup::derive() {
  inverse_.assign(n_, -1);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (mul(x, y) == 0) {
        if (inverse_[x] >= 0) throw Error(ErrorKind::NotLatinSquare, "element " + std::to_string(x) + " has two inverses");
        inverse_[x] = y;
      }
  for (int x = 0; x < n_; ++x)
    if (inverse_[x] < 0) throw Error(ErrorKind::NotLatinSquare, "element " + std::to_string(x) + " has no inverse");

  orders_.assign(n_, 0);
  for (int x = 0; x < n_; ++x) {
    int k = 1, y = x;
    while (y != 0) {
      y = mul(y, x);
      ++k;
    }
    orders_[x] = k;
  }

  class_of_.assign(n_, -1);
  classes_.clear();
  for (int x = 0; x < n_; ++x) {
    if (class_of_[x] >= 0) continue;
    std::set<int> cls;
    for (int g = 0; g < n_; ++g) cls.insert(conjugate(x, g));
    int idx = static_cast<int>(classes_.size());
    for (int y : cls) class_of_[y] = idx;
    classes_.emplace_back(cls.begin(), cls.end());
  }
  center_.clear();
  for (const auto& cls : classes_)
    if (cls.size() == 1) center_.push_back(cls[0]);
  std::sort(center_.begin(), center_.end());
}

int FiniteGroup::power(int x, i64 k) const {
  k = mod(k, orders_[x]);
  int y = 0;
  for (i64 i = 0; i < k; ++i) y = mul(y, x);
  return y;
}

int FiniteGroup::exponent() const {
  i64 e = 1;
  for (int o : orders_) e = lcm(e, o);
  return static_cast<int>(e);
}

bool FiniteGroup::is_abelian() const { return static_cast<int>(center_.size()) == n_; }

std::string FiniteGroup::name(int x) const {
  if (!names_.empty()) return names_[x];
  return std::to_string(x);
}

FiniteGroup::Table FiniteGroup::table() const {
  Table t(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
  return t;
}

std::vector<int> FiniteGroup::class_representatives() const {
  std::vector<int> reps;
  for (const auto& cls : classes_) reps.push_back(cls[0]);
  return reps;
}

std::vector<int> FiniteGroup::centralizer(int x) const {
  std::vector<int> out;
  for (int g = 0; g < n_; ++g)
    if (commute(x, g)) out.push_back(g);
  return out;
}

bool FiniteGroup::is_central(int x) const { return std::binary_search(center_.begin(), center_.end(), x); }

std::vector<int> FiniteGroup::generated_subgroup(const std::vector<int>& gens) const {
  std::vector<bool> in(n_, false);
  std::vector<int> elems{0};
  in[0] = true;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (int g : gens) {
      int y = mul(elems[head], g);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elems) const {
  std::vector<bool> in(n_, false);
  for (int x : elems) {
    if (x < 0 || x >= n_) return false;
    in[x] = true;
  }
  if (elems.empty() || !in[0]) return false;
  for (int x : elems)
    for (int y : elems)
      if (!in[mul(x, inv(y))]) return false;
  return true;
}

std::vector<int> FiniteGroup::commutator_subgroup() const {
  std::set<int> comms;
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) comms.insert(mul(mul(inv(x), inv(y)), mul(x, y)));
  return generated_subgroup(std::vector<int>(comms.begin(), comms.end()));
}

// ---------------------------------------------------------------------------

CharacterGroup::CharacterGroup(const FiniteGroup& g) : group_(&g) {
  const int n = g.order();
  commutator_ = g.commutator_subgroup();
  coords_.assign(n, {});
  if (n == 1 || static_cast<int>(commutator_.size()) == n) {
    basis_elements_.clear();
    return;
  }
  // relations e_x + e_y - e_xy over Z/|G|
  ModNMatrix rel(n, n * n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int r = x * n + y;
      rel.add(r, x, 1);
      rel.add(r, y, 1);
      rel.add(r, g.mul(x, y), -1);
    }
  rel.finalize();

  struct Part {
    i64 p;
    int e;
    std::vector<i64> coord;  // per element, mod p^e
  };
  std::map<i64, std::vector<Part>> by_prime;
  for (auto [p, k] : factorize(n)) {
    i64 pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    LocalSmith snf(rel.reduced(pk), p, k, true);
    std::vector<int> col_val(n, k);
    for (const auto& pv : snf.pivots()) col_val[pv.col] = pv.valuation;
    for (int c = 0; c < n; ++c) {
      if (col_val[c] == 0) continue;
      i64 pe = 1;
      for (int i = 0; i < col_val[c]; ++i) pe *= p;
      Part part{p, col_val[c], std::vector<i64>(n)};
      auto vc = snf.v_column(c);
      for (int x = 0; x < n; ++x) part.coord[x] = mod(vc[x], pe);
      by_prime[p].push_back(std::move(part));
    }
  }
  std::size_t r = 0;
  for (auto& [p, parts] : by_prime) {
    std::stable_sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) { return a.e < b.e; });
    r = std::max(r, parts.size());
  }
  factors_.assign(r, 1);
  for (int x = 0; x < n; ++x) coords_[x].assign(r, 0);
  for (std::size_t j = 0; j < r; ++j) {
    // combine the j-th (aligned from the top) part of every prime by CRT
    i64 d = 1;
    std::vector<i64> acc(n, 0);
    for (auto& [p, parts] : by_prime) {
      std::size_t offset = r - parts.size();
      if (j < offset) continue;
      const Part& part = parts[j - offset];
      i64 pe = 1;
      for (int i = 0; i < part.e; ++i) pe *= p;
      i64 nd = d * pe;
      for (int x = 0; x < n; ++x) {
        // solve z = acc mod d, z = coord mod pe
        i64 t = mod((part.coord[x] - acc[x]) * inv_mod(d % pe, pe), pe);
        acc[x] = mod(acc[x] + d * t, nd);
      }
      d = nd;
    }
    factors_[j] = d;
    for (int x = 0; x < n; ++x) coords_[x][j] = acc[x];
  }
  for (i64 d : factors_) exponent_ = lcm(exponent_, d);

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& cx = coords_[x];
      const auto& cy = coords_[y];
      const auto& cxy = coords_[g.mul(x, y)];
      for (std::size_t j = 0; j < r; ++j)
        if (mod(cx[j] + cy[j] - cxy[j], factors_[j]) != 0)
          throw std::logic_error("abelianization coordinates are not additive");
    }
  basis_elements_.assign(r, -1);
  for (std::size_t j = 0; j < r; ++j) {
    for (int x = 0; x < n && basis_elements_[j] < 0; ++x) {
      bool unit = true;
      for (std::size_t i = 0; i < r; ++i) unit = unit && coords_[x][i] == (i == j ? 1 : 0);
      if (unit) basis_elements_[j] = x;
    }
    if (basis_elements_[j] < 0) throw std::logic_error("abelianization basis element not found");
  }
  if (size() * static_cast<i64>(commutator_.size()) != n)
    throw std::logic_error("abelianization order disagrees with commutator subgroup");
}

i64 CharacterGroup::size() const {
  i64 s = 1;
  for (i64 d : factors_) s *= d;
  return s;
}

i64 CharacterGroup::evaluate(const std::vector<i64>& c, int x, i64 modulus) const {
  i128 acc = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (modulus % factors_[i] != 0) throw std::invalid_argument("character modulus too small");
    acc += static_cast<i128>(c[i]) * coords_[x][i] % factors_[i] * (modulus / factors_[i]);
  }
  return static_cast<i64>(acc % modulus);
}

std::vector<i64> CharacterGroup::values(const std::vector<i64>& c, i64 modulus) const {
  std::vector<i64> out(coords_.size());
  for (std::size_t x = 0; x < coords_.size(); ++x) out[x] = evaluate(c, static_cast<int>(x), modulus);
  return out;
}

std::optional<std::vector<i64>> CharacterGroup::decompose(const std::vector<i64>& vals, i64 modulus) const {
  std::vector<i64> c(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    i128 scaled = static_cast<i128>(mod(vals[basis_elements_[i]], modulus)) * factors_[i];
    if (scaled % modulus != 0) return std::nullopt;
    c[i] = static_cast<i64>(scaled / modulus);
  }
  for (std::size_t x = 0; x < coords_.size(); ++x)
    if (evaluate(c, static_cast<int>(x), modulus) != mod(vals[x], modulus)) return std::nullopt;
  return c;
}

std::vector<std::vector<i64>> CharacterGroup::all() const {
  std::vector<std::vector<i64>> out;
  std::vector<i64> c(factors_.size(), 0);
  while (true) {
    out.push_back(c);
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == factors_[i]) c[i++] = 0;
    if (i == c.size()) break;
  }
  return out;
}

std::vector<i64> CharacterGroup::add(const std::vector<i64>& a, const std::vector<i64>& b) const {
  std::vector<i64> out(factors_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod(a[i] + b[i], factors_[i]);
  return out;
}

std::vector<i64> CharacterGroup::neg(const std::vector<i64>& a) const {
  std::vector<i64> out(factors_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod(-a[i], factors_[i]);
  return out;
}

// ---------------------------------------------------------------------------

const char* to_string(Sylow2Type t) {
  switch (t) {
    case Sylow2Type::Cyclic: return "Cyclic";
    case Sylow2Type::GeneralizedQuaternion: return "GeneralizedQuaternion";
    case Sylow2Type::Neither: return "Neither";
    case Sylow2Type::Odd: return "Odd";
  }
  return "?";
}

std::optional<int> unique_involution(const FiniteGroup& g) {
  std::optional<int> found;
  for (int x = 0; x < g.order(); ++x) {
    if (g.element_order(x) != 2) continue;
    if (found) return std::nullopt;
    found = x;
  }
  return found;
}

std::vector<int> sylow2_subgroup(const FiniteGroup& g) {
  auto is_pow2 = [](std::size_t v) { return v != 0 && (v & (v - 1)) == 0; };
  std::vector<int> h{0};
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < g.order(); ++x) {
      if (!is_pow2(static_cast<std::size_t>(g.element_order(x)))) continue;
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      auto gens = h;
      gens.push_back(x);
      auto k = g.generated_subgroup(gens);
      if (is_pow2(k.size())) {
        h = std::move(k);
        grew = true;
        break;
      }
    }
  }
  return h;
}

Sylow2Type sylow2_type(const FiniteGroup& g) {
  auto t = sylow2_subgroup(g);
  if (t.size() == 1) return Sylow2Type::Odd;
  for (int x : t)
    if (static_cast<std::size_t>(g.element_order(x)) == t.size()) return Sylow2Type::Cyclic;
  int involutions = 0;
  for (int x : t)
    if (g.element_order(x) == 2) ++involutions;
  return involutions == 1 ? Sylow2Type::GeneralizedQuaternion : Sylow2Type::Neither;
}

Subgroup make_subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
  std::vector<int> elems = elements;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (!g.is_subgroup(elems)) throw Error(ErrorKind::InputError, "elements do not form a subgroup");
  const int m = static_cast<int>(elems.size());
  std::map<int, int> index;
  for (int i = 0; i < m; ++i) index[elems[i]] = i;
  std::vector<int> flat(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) flat[static_cast<std::size_t>(a) * m + b] = index.at(g.mul(elems[a], elems[b]));
  return {FiniteGroup::from_trusted_table(std::move(flat), m), elems};
}

}  // namespace gtqd
