#include "gtqd/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>

#include "gtqd/error.hpp"

namespace gtqd {

namespace {

std::vector<i64> poly_divide_exact(std::vector<i64> num, const std::vector<i64>& den) {
  // den monic; returns quotient, asserting zero remainder.
  int dn = static_cast<int>(num.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  std::vector<i64> q(dn - dd + 1, 0);
  for (int i = dn; i >= dd; --i) {
    i64 c = num[i];
    q[i - dd] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (int i = 0; i < dd; ++i)
    if (num[i] != 0) throw std::logic_error("cyclotomic polynomial division not exact");
  return q;
}

i64 legendre(i64 a, i64 p) {
  i64 r = pow_mod(a, (p - 1) / 2, p);
  return r == 1 ? 1 : (r == 0 ? 0 : -1);
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (auto [p, k] : factorize(n)) result = result / static_cast<int>(p) * static_cast<int>(p - 1);
  return result;
}

const std::vector<i64>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<i64>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<i64> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    poly = poly_divide_exact(poly, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic(i64 n) : num_{n} {}

Cyclotomic::Cyclotomic(const Rational& r) : num_{r.num()}, den_(r.den()) {}

Cyclotomic Cyclotomic::reduce_full(int n, std::vector<i128> coeffs, i64 den) {
  std::vector<i128> folded(n, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) folded[i % n] += coeffs[i];
  const auto& phi_poly = cyclotomic_polynomial(n);
  int deg = static_cast<int>(phi_poly.size()) - 1;
  for (int i = n - 1; i >= deg; --i) {
    i128 c = folded[i];
    if (c == 0) continue;
    for (int j = 0; j <= deg; ++j) folded[i - deg + j] -= c * phi_poly[j];
  }
  Cyclotomic z;
  z.n_ = n;
  z.den_ = den;
  z.num_.assign(deg, 0);
  i128 g = den;
  for (int i = 0; i < deg; ++i) {
    i128 a = folded[i] < 0 ? -folded[i] : folded[i];
    i128 b = g;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    g = a;
  }
  if (g < 0) g = -g;
  if (g == 0) g = 1;
  for (int i = 0; i < deg; ++i) z.num_[i] = narrow(folded[i] / g);
  z.den_ = narrow(den / g);
  z.normalize();
  return z;
}

void Cyclotomic::normalize() {
  bool all_zero = true;
  for (i64 c : num_) all_zero = all_zero && c == 0;
  if (all_zero) {
    den_ = 1;
    return;
  }
  i64 g = den_;
  for (i64 c : num_) g = gcd(g, c);
  if (g > 1) {
    for (i64& c : num_) c /= g;
    den_ /= g;
  }
}

Cyclotomic Cyclotomic::root_of_unity(i64 n, i64 k) {
  if (n <= 0) throw std::invalid_argument("root_of_unity: non-positive order");
  std::vector<i128> coeffs(n, 0);
  coeffs[mod(k, n)] = 1;
  return reduce_full(static_cast<int>(n), std::move(coeffs), 1);
}

Cyclotomic Cyclotomic::from_terms(i64 n, const std::vector<std::pair<i64, Rational>>& terms) {
  i64 den = 1;
  for (const auto& [e, c] : terms) den = lcm(den, c.den());
  std::vector<i128> coeffs(n, 0);
  for (const auto& [e, c] : terms) coeffs[mod(e, n)] += static_cast<i128>(c.num()) * (den / c.den());
  return reduce_full(static_cast<int>(n), std::move(coeffs), den);
}

Cyclotomic Cyclotomic::sqrt_of(i64 n) {
  if (n < 0) throw std::domain_error("sqrt_of: negative argument");
  if (n == 0) return Cyclotomic(0);
  i64 square = 1;
  Cyclotomic result(1);
  for (auto [p, k] : factorize(n)) {
    for (int i = 0; i < k / 2; ++i) square *= p;
    if (k % 2 == 0) continue;
    if (p == 2) {
      result *= root_of_unity(8, 1) + root_of_unity(8, 7);
      continue;
    }
    Cyclotomic gauss(0);
    std::vector<std::pair<i64, Rational>> terms;
    for (i64 a = 1; a < p; ++a) terms.emplace_back(a, Rational(legendre(a, p)));
    gauss = from_terms(p, terms);
    if (p % 4 == 3) gauss *= root_of_unity(4, 3);
    result *= gauss;
  }
  result *= Rational(square);
  return result;
}

bool Cyclotomic::is_zero() const {
  for (i64 c : num_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational() const {
  if (!is_rational()) throw std::domain_error("Cyclotomic value is not rational: " + str());
  return Rational(num_[0], den_);
}

Cyclotomic Cyclotomic::lifted(int n) const {
  if (n == n_) return *this;
  if (n % n_ != 0) throw std::invalid_argument("lifted: conductor does not divide target");
  int step = n / n_;
  std::vector<i128> coeffs(n, 0);
  for (std::size_t i = 0; i < num_.size(); ++i) coeffs[i * step] = num_[i];
  return reduce_full(n, std::move(coeffs), den_);
}

Cyclotomic Cyclotomic::galois(i64 k) const {
  std::vector<i128> coeffs(n_, 0);
  for (std::size_t i = 0; i < num_.size(); ++i) coeffs[mod(static_cast<i64>(i) * k, n_)] += num_[i];
  return reduce_full(n_, std::move(coeffs), den_);
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic z = *this;
  for (i64& c : z.num_) c = narrow(-static_cast<i128>(c));
  return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  int n = static_cast<int>(lcm(n_, o.n_));
  Cyclotomic a = lifted(n);
  Cyclotomic b = o.lifted(n);
  i64 den = lcm(a.den_, b.den_);
  i64 fa = den / a.den_, fb = den / b.den_;
  Cyclotomic r;
  r.n_ = n;
  r.den_ = den;
  r.num_.resize(a.num_.size());
  for (std::size_t i = 0; i < r.num_.size(); ++i)
    r.num_[i] = narrow(static_cast<i128>(a.num_[i]) * fa + static_cast<i128>(b.num_[i]) * fb);
  r.normalize();
  *this = std::move(r);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.n_ == 1) return *this *= Rational(o.num_[0], o.den_);
  if (n_ == 1) {
    Rational r(num_[0], den_);
    *this = o;
    return *this *= r;
  }
  int n = static_cast<int>(lcm(n_, o.n_));
  Cyclotomic a = lifted(n);
  Cyclotomic b = o.lifted(n);
  std::vector<i128> coeffs(a.num_.size() + b.num_.size(), 0);
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < b.num_.size(); ++j)
      coeffs[i + j] += static_cast<i128>(a.num_[i]) * b.num_[j];
  }
  *this = reduce_full(n, std::move(coeffs), narrow(static_cast<i128>(a.den_) * b.den_));
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  if (r.is_zero()) {
    num_.assign(num_.size(), 0);
    den_ = 1;
    return *this;
  }
  for (i64& c : num_) c = narrow(static_cast<i128>(c) * r.num());
  den_ = narrow(static_cast<i128>(den_) * r.den());
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& r) {
  if (r.is_zero()) throw std::domain_error("Cyclotomic: division by zero");
  return *this *= Rational(r.den(), r.num());
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
  if (o.is_zero()) throw std::domain_error("Cyclotomic: division by zero");
  if (o.is_rational()) return *this /= o.rational();
  // 1/o = (product of the other Galois conjugates) / norm(o)
  Cyclotomic others(1);
  for (i64 k = 2; k < o.n_; ++k)
    if (gcd(k, o.n_) == 1) others *= o.galois(k);
  Rational norm = (others * o).rational();
  *this *= others;
  return *this /= norm;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == b.n_) return a.den_ == b.den_ && a.num_ == b.num_;
  int n = static_cast<int>(lcm(a.n_, b.n_));
  Cyclotomic x = a.lifted(n), y = b.lifted(n);
  return x.den_ == y.den_ && x.num_ == y.num_;
}

Cyclotomic Cyclotomic::pow(i64 e) const {
  Cyclotomic base = *this;
  if (e < 0) {
    base = Cyclotomic(1) / base;
    e = -e;
  }
  Cyclotomic result(1);
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

i64 Cyclotomic::root_order() const {
  i64 m = n_ % 2 == 0 ? n_ : 2 * n_;
  if (pow(m) != Cyclotomic(1)) return 0;
  for (i64 k = 1; k <= m; ++k)
    if (m % k == 0 && pow(k) == Cyclotomic(1)) return k;
  return 0;
}

std::vector<std::pair<int, Rational>> Cyclotomic::terms() const {
  std::vector<std::pair<int, Rational>> out;
  for (std::size_t i = 0; i < num_.size(); ++i)
    if (num_[i] != 0) out.emplace_back(static_cast<int>(i), Rational(num_[i], den_));
  return out;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> acc = 0;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / n_;
    acc += static_cast<double>(num_[i]) * std::polar(1.0, angle);
  }
  return acc / static_cast<double>(den_);
}

std::string Cyclotomic::str() const {
  auto t = terms();
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t) {
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << c;
    } else {
      if (!(c == Rational(1))) os << "(" << c << ")*";
      os << "z" << n_ << "^" << e;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z) { return os << z.str(); }

}  // namespace gtqd
