#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace gtqd {

using i64 = std::int64_t;
using i128 = __int128;

/// Mathematical modulo: result in [0, m).
inline i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 gcd(i64 a, i64 b);
i64 lcm(i64 a, i64 b);

/// Extended gcd: returns g = gcd(a, b) and sets x, y with a*x + b*y = g.
i64 ext_gcd(i64 a, i64 b, i64& x, i64& y);

/// Inverse of a modulo m; throws if a is not a unit.
i64 inv_mod(i64 a, i64 m);

i64 pow_mod(i64 base, i64 e, i64 m);

/// Prime factorization as (p, k) pairs, ascending p.
std::vector<std::pair<i64, int>> factorize(i64 n);

bool is_prime(i64 n);

/// Narrow a 128-bit intermediate back to 64 bits, throwing Error(Overflow).
i64 narrow(i128 v);

/// Exact rational number over 64-bit integers. All operations are overflow
/// checked; the representation is always reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(i64 n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(i64 n, i64 d);

  i64 num() const { return num_; }
  i64 den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b);

  /// Largest integer not exceeding this value.
  i64 floor() const;
  /// Fractional part in [0, 1).
  Rational frac() const { return *this - Rational(floor()); }

  std::string str() const;

 private:
  i64 num_ = 0;
  i64 den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace gtqd
