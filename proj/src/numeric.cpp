#include "gtqd/numeric.hpp"

#include <cstdlib>
#include <limits>
#include <ostream>
#include <tuple>

#include "gtqd/error.hpp"

namespace gtqd {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::ClosureTooLarge: return "ClosureTooLarge";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::NotA2Cocycle: return "NotA2Cocycle";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotInZOmega: return "NotInZOmega";
    case ErrorKind::ResultNotACharacter: return "ResultNotACharacter";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::NoUniqueInvolution: return "NoUniqueInvolution";
    case ErrorKind::WellDefinednessFailure: return "WellDefinednessFailure";
    case ErrorKind::SectionNotHomomorphism: return "SectionNotHomomorphism";
    case ErrorKind::NonIntegralFusion: return "NonIntegralFusion";
    case ErrorKind::ConventionFault: return "ConventionFault";
    case ErrorKind::NotEven: return "NotEven";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::RestrictionFailure: return "RestrictionFailure";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InputError: return "InputError";
  }
  return "Unknown";
}

i64 gcd(i64 a, i64 b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 lcm(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  return narrow(static_cast<i128>(a / gcd(a, b)) * b);
}

i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
  i64 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

i64 inv_mod(i64 a, i64 m) {
  i64 x, y;
  i64 g = ext_gcd(mod(a, m), m, x, y);
  if (g != 1) throw std::domain_error("inv_mod: not a unit");
  return mod(x, m);
}

i64 pow_mod(i64 base, i64 e, i64 m) {
  i128 result = 1 % m;
  i128 b = mod(base, m);
  while (e > 0) {
    if (e & 1) result = result * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<i64>(result);
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
  std::vector<std::pair<i64, int>> out;
  if (n < 0) n = -n;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.emplace_back(p, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

i64 narrow(i128 v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
    throw Error(ErrorKind::Overflow, "64-bit overflow in exact arithmetic");
  return static_cast<i64>(v);
}

namespace {

std::pair<i64, i64> reduce(i128 n, i128 d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 a = n < 0 ? -n : n, b = d;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    n /= a;
    d /= a;
  }
  return {narrow(n), narrow(d)};
}

}  // namespace

Rational::Rational(i64 n, i64 d) {
  auto [a, b] = reduce(n, d);
  num_ = a;
  den_ = b;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow(-static_cast<i128>(num_));
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    std::tie(num_, den_) = reduce(static_cast<i128>(num_) + o.num_, den_);
    return *this;
  }
  auto [a, b] = reduce(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                       static_cast<i128>(den_) * o.den_);
  num_ = a;
  den_ = b;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  auto [a, b] = reduce(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
  num_ = a;
  den_ = b;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  auto [a, b] = reduce(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
  num_ = a;
  den_ = b;
  return *this;
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
}

i64 Rational::floor() const {
  i64 q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace gtqd
