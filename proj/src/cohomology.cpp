#include "gtqd/cohomology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gtqd/error.hpp"

namespace gtqd {

namespace {

std::size_t ipow_size(int base, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

// Evaluates the coboundary at one tuple through an accessor for c.
template <class Get>
i64 coboundary_at(const FiniteGroup& g, const std::vector<int>& t, Get&& get) {
  const int n = static_cast<int>(t.size()) - 1;  // degree of c
  std::vector<int> args(n);
  i64 acc = 0;
  for (int i = 0; i < n; ++i) args[i] = t[i + 1];
  acc += get(args);
  for (int i = 0; i < n; ++i) {
    for (int j = 0, s = 0; j < n; ++j, ++s) {
      if (j == i) {
        args[j] = g.mul(t[s], t[s + 1]);
        ++s;
      } else {
        args[j] = t[s];
      }
    }
    acc += (i % 2 == 0 ? -1 : 1) * get(args);
  }
  for (int i = 0; i < n; ++i) args[i] = t[i];
  acc += (n % 2 == 0 ? -1 : 1) * get(args);
  return acc;
}

}  // namespace

Cochain::Cochain(GroupPtr group, int degree, i64 modulus)
    : group_(std::move(group)), degree_(degree), modulus_(modulus) {
  if (!group_) throw std::invalid_argument("Cochain: null group");
  if (degree < 1) throw std::invalid_argument("Cochain: degree must be at least 1");
  if (modulus < 1) throw std::invalid_argument("Cochain: modulus must be positive");
  n_ = group_->order();
  values_.assign(ipow_size(n_, degree), 0);
}

std::size_t Cochain::index(const std::vector<int>& args) const {
  if (static_cast<int>(args.size()) != degree_) throw std::invalid_argument("Cochain: wrong arity");
  std::size_t idx = 0;
  for (int a : args) idx = idx * n_ + static_cast<std::size_t>(a);
  return idx;
}

std::vector<int> Cochain::unindex(std::size_t idx) const {
  std::vector<int> args(degree_);
  for (int i = degree_ - 1; i >= 0; --i) {
    args[i] = static_cast<int>(idx % n_);
    idx /= n_;
  }
  return args;
}

void Cochain::set(const std::vector<int>& args, i64 value) {
  value = mod(value, modulus_);
  for (int a : args)
    if (a == 0 && value != 0) throw std::invalid_argument("Cochain: non-normalized write");
  values_[index(args)] = value;
}

Cochain Cochain::lifted(i64 m) const {
  if (m % modulus_ != 0) throw std::invalid_argument("Cochain::lifted: modulus does not divide target");
  Cochain out(group_, degree_, m);
  const i64 f = m / modulus_;
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = values_[i] * f;
  return out;
}

Cochain Cochain::scaled(i64 k) const {
  Cochain out = *this;
  const i64 kk = mod(k, modulus_);
  for (i64& v : out.values_) v = static_cast<i64>(static_cast<i128>(v) * kk % modulus_);
  return out;
}

Cochain Cochain::operator-() const { return scaled(-1); }

Cochain operator+(const Cochain& a, const Cochain& b) {
  if (a.group_ != b.group_ && a.group_->flat_table() != b.group_->flat_table())
    throw std::invalid_argument("Cochain: different groups");
  if (a.degree_ != b.degree_) throw std::invalid_argument("Cochain: different degrees");
  const i64 m = lcm(a.modulus_, b.modulus_);
  Cochain x = a.lifted(m), y = b.lifted(m);
  for (std::size_t i = 0; i < x.values_.size(); ++i) x.values_[i] = (x.values_[i] + y.values_[i]) % m;
  return x;
}

bool operator==(const Cochain& a, const Cochain& b) {
  if (a.degree_ != b.degree_ || a.n_ != b.n_) return false;
  const i64 m = lcm(a.modulus_, b.modulus_);
  return a.lifted(m).values_ == b.lifted(m).values_;
}

bool Cochain::is_zero() const {
  for (i64 v : values_)
    if (v != 0) return false;
  return true;
}

bool Cochain::is_normalized() const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == 0) continue;
    for (int a : unindex(i))
      if (a == 0) return false;
  }
  return true;
}

Cochain coboundary(const Cochain& c) {
  const FiniteGroup& g = c.group();
  Cochain out(c.group_ptr(), c.degree() + 1, c.modulus());
  auto get = [&](const std::vector<int>& args) { return c.at(args); };
  for (std::size_t i = 0; i < out.values().size(); ++i) {
    auto t = out.unindex(i);
    bool normalized = true;
    for (int a : t) normalized = normalized && a != 0;
    if (!normalized) continue;
    out.set(t, coboundary_at(g, t, get));
  }
  return out;
}

std::optional<std::vector<int>> cocycle_failure(const Cochain& c) {
  const FiniteGroup& g = c.group();
  const int n = g.order();
  const i64 m = c.modulus();
  if (c.degree() == 3) {
    for (int a = 1; a < n; ++a)
      for (int b = 1; b < n; ++b) {
        const int ab = g.mul(a, b);
        for (int x = 1; x < n; ++x) {
          const int bx = g.mul(b, x);
          for (int d = 1; d < n; ++d) {
            i64 v = c.at(b, x, d) - c.at(ab, x, d) + c.at(a, bx, d) - c.at(a, b, g.mul(x, d)) + c.at(a, b, x);
            if (mod(v, m) != 0) return std::vector<int>{a, b, x, d};
          }
        }
      }
    return std::nullopt;
  }
  Cochain d = coboundary(c);
  for (std::size_t i = 0; i < d.values().size(); ++i)
    if (d.values()[i] != 0) return d.unindex(i);
  return std::nullopt;
}

bool is_cocycle(const Cochain& c) { return !cocycle_failure(c).has_value(); }

int normalized_position(const std::vector<int>& args, int order) {
  int pos = 0;
  for (int a : args) {
    if (a == 0) return -1;
    pos = pos * (order - 1) + (a - 1);
  }
  return pos;
}

ModNMatrix delta_matrix(const FiniteGroup& g, int n, i64 modulus) {
  const int order = g.order();
  const int m = order - 1;
  const std::size_t rows = ipow_size(m, n + 1);
  const std::size_t cols = ipow_size(m, n);
  ModNMatrix mat(modulus, static_cast<int>(rows), static_cast<int>(cols));
  std::vector<int> t(n + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t x = r;
    for (int i = n; i >= 0; --i) {
      t[i] = static_cast<int>(x % m) + 1;
      x /= m;
    }
    std::vector<int> args(n);
    for (int i = 0; i < n; ++i) args[i] = t[i + 1];
    if (int pos = normalized_position(args, order); pos >= 0) mat.add(static_cast<int>(r), pos, 1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0, s = 0; j < n; ++j, ++s) {
        if (j == i) {
          args[j] = g.mul(t[s], t[s + 1]);
          ++s;
        } else {
          args[j] = t[s];
        }
      }
      if (int pos = normalized_position(args, order); pos >= 0)
        mat.add(static_cast<int>(r), pos, i % 2 == 0 ? -1 : 1);
    }
    for (int i = 0; i < n; ++i) args[i] = t[i];
    if (int pos = normalized_position(args, order); pos >= 0)
      mat.add(static_cast<int>(r), pos, n % 2 == 0 ? -1 : 1);
  }
  mat.finalize();
  return mat;
}

namespace {

std::optional<Cochain> coboundary_witness(const Cochain& c, const ModNMatrix& delta, i64 big) {
  const FiniteGroup& g = c.group();
  const int order = g.order();
  const int m = order - 1;
  Cochain lifted = c.lifted(big);
  std::vector<i64> rhs(delta.rows());
  std::vector<int> t(c.degree());
  for (int r = 0; r < delta.rows(); ++r) {
    int x = r;
    for (int i = c.degree() - 1; i >= 0; --i) {
      t[i] = x % m + 1;
      x /= m;
    }
    rhs[r] = lifted.at(t);
  }
  auto sol = solve_modN(delta, rhs);
  if (!sol) return std::nullopt;
  Cochain w(c.group_ptr(), c.degree() - 1, big);
  std::vector<int> s(c.degree() - 1);
  for (int col = 0; col < delta.cols(); ++col) {
    int x = col;
    for (int i = c.degree() - 2; i >= 0; --i) {
      s[i] = x % m + 1;
      x /= m;
    }
    w.set(s, sol->particular[col]);
  }
  if (!(coboundary(w) == lifted)) throw std::logic_error("coboundary witness does not verify");
  return w;
}

}  // namespace

std::optional<Cochain> is_coboundary_over_C(const Cochain& c, int cap) {
  if (c.degree() < 2) throw std::invalid_argument("is_coboundary_over_C: degree must be at least 2");
  const FiniteGroup& g = c.group();
  if (g.order() > cap) throw Error(ErrorKind::CapExceeded, "coboundary test beyond order cap");
  if (c.is_zero()) return Cochain(c.group_ptr(), c.degree() - 1, c.modulus());
  if (g.order() == 1) return Cochain(c.group_ptr(), c.degree() - 1, c.modulus());
  const i64 big = c.modulus() * g.exponent();
  return coboundary_witness(c, delta_matrix(g, c.degree() - 1, big), big);
}

i64 class_order(const Cochain& omega, int cap) {
  if (omega.degree() != 3) throw std::invalid_argument("class_order: degree 3 expected");
  if (!is_cocycle(omega)) throw Error(ErrorKind::NotACocycle, "class_order of a non-cocycle");
  const FiniteGroup& g = omega.group();
  if (g.order() > cap) throw Error(ErrorKind::CapExceeded, "coboundary test beyond order cap");
  if (omega.is_zero() || g.order() == 1) return 1;
  const i64 big = omega.modulus() * g.exponent();
  ModNMatrix delta = delta_matrix(g, 2, big);
  // the order divides |G|; the least working divisor is the order
  for (i64 k = 1; k <= g.order(); ++k) {
    if (g.order() % k != 0) continue;
    Cochain scaled = omega.scaled(k);
    if (scaled.is_zero() || coboundary_witness(scaled, delta, big)) return k;
  }
  throw std::logic_error("class_order: |G| does not annihilate the class");
}

CohomologyGroup h3(const GroupPtr& gp, i64 modulus, int cap) {
  const FiniteGroup& g = *gp;
  const int order = g.order();
  if (order > cap) throw Error(ErrorKind::CapExceeded, "H^3 beyond order cap " + std::to_string(cap));
  if (modulus == 0) modulus = order;
  CohomologyGroup out;
  if (order == 1) return out;

  const int m = order - 1;
  const std::size_t ncols = ipow_size(m, 3);
  struct Part {
    i64 p;
    int e;
    std::vector<i64> column;  // mod p^e
  };
  std::map<i64, std::vector<Part>> by_prime;
  for (auto [p, v] : factorize(order)) {
    const int k = v + 1;
    i64 pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    LocalSmith snf(delta_matrix(g, 3, pk), p, k, true);
    for (const auto& pv : snf.pivots()) {
      if (pv.valuation == 0) continue;
      i64 pe = 1;
      for (int i = 0; i < pv.valuation; ++i) pe *= p;
      auto col = snf.v_column(pv.col);
      for (i64& x : col) x = mod(x, pe);
      by_prime[p].push_back({p, pv.valuation, std::move(col)});
    }
  }
  std::size_t r = 0;
  for (auto& [p, parts] : by_prime) {
    std::stable_sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) { return a.e < b.e; });
    r = std::max(r, parts.size());
  }
  for (std::size_t j = 0; j < r; ++j) {
    i64 d = 1;
    for (auto& [p, parts] : by_prime) {
      std::size_t offset = r - parts.size();
      if (j < offset) continue;
      for (int i = 0; i < parts[j - offset].e; ++i) d *= p;
    }
    if (modulus % d != 0)
      throw Error(ErrorKind::InputError, "modulus " + std::to_string(modulus) + " cannot realize a class of order " +
                                             std::to_string(d));
    std::vector<i64> exps(ncols, 0);
    for (auto& [p, parts] : by_prime) {
      std::size_t offset = r - parts.size();
      if (j < offset) continue;
      const Part& part = parts[j - offset];
      i64 pe = 1;
      for (int i = 0; i < part.e; ++i) pe *= p;
      const i64 f = modulus / pe;
      for (std::size_t c = 0; c < ncols; ++c)
        exps[c] = static_cast<i64>((exps[c] + static_cast<i128>(f) * part.column[c]) % modulus);
    }
    Cochain w(gp, 3, modulus);
    for (std::size_t c = 0; c < ncols; ++c) {
      std::size_t x = c;
      int tc = static_cast<int>(x % m) + 1;
      x /= m;
      int tb = static_cast<int>(x % m) + 1;
      x /= m;
      int ta = static_cast<int>(x) + 1;
      w.set({ta, tb, tc}, exps[c]);
    }
    if (!is_cocycle(w)) throw std::logic_error("H^3 generator is not a cocycle");
    if (class_order(w, cap) != d) throw std::logic_error("H^3 generator order disagrees with its invariant factor");
    out.invariant_factors.push_back(d);
    out.generators.push_back(std::move(w));
  }
  return out;
}

Cochain cyclic_cocycle(const GroupPtr& zn, i64 q) {
  const int n = zn->order();
  Cochain w(zn, 3, n);
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      for (int c = 1; c < n; ++c) w.set({a, b, c}, q * a * ((b + c) / n));
  return w;
}

Cochain cyclic_cocycle(int n, i64 q) {
  return cyclic_cocycle(std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(n)), q);
}

namespace {

Cochain pull_back(const Cochain& omega, const GroupPtr& g, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != g->order()) throw std::invalid_argument("pull_back: map size");
  for (int a = 0; a < g->order(); ++a)
    for (int b = 0; b < g->order(); ++b)
      if (map[g->mul(a, b)] != omega.group().mul(map[a], map[b]))
        throw Error(ErrorKind::InputError, "element map is not a homomorphism");
  Cochain out(g, omega.degree(), omega.modulus());
  std::vector<int> img(omega.degree());
  for (std::size_t i = 0; i < out.values().size(); ++i) {
    auto t = out.unindex(i);
    for (std::size_t j = 0; j < t.size(); ++j) img[j] = map[t[j]];
    i64 v = omega.at(img);
    if (v != 0) out.set(t, v);
  }
  if (omega.degree() == 3 && is_cocycle(omega) && !is_cocycle(out))
    throw Error(ErrorKind::NotACocycle, "pullback lost the cocycle property");
  return out;
}

}  // namespace

Cochain inflate(const Cochain& omega, const GroupPtr& g, const std::vector<int>& projection) {
  return pull_back(omega, g, projection);
}

Cochain restrict_to(const Cochain& omega, const GroupPtr& h, const std::vector<int>& embedding) {
  return pull_back(omega, h, embedding);
}

}  // namespace gtqd
