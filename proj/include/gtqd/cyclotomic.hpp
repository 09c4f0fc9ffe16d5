#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gtqd/numeric.hpp"

namespace gtqd {

/// Element of the cyclotomic field Q(zeta_N), stored in the power basis
/// 1, z, ..., z^(phi(N)-1) with a common positive denominator. The
/// representation is canonical for a fixed conductor; values with different
/// conductors are compared after lifting to the lcm.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(i64 n);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& r);  // NOLINT(google-explicit-constructor)

  /// zeta_n^k with zeta_n = exp(2 pi i / n).
  static Cyclotomic root_of_unity(i64 n, i64 k);
  /// Positive square root of a non-negative integer, built from Gauss sums.
  static Cyclotomic sqrt_of(i64 n);
  /// Build from a (not necessarily reduced) sparse list of exponent/coefficient
  /// pairs meaning sum c * zeta_n^e.
  static Cyclotomic from_terms(i64 n, const std::vector<std::pair<i64, Rational>>& terms);

  int conductor() const { return n_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The rational value; throws if not rational.
  Rational rational() const;

  Cyclotomic lifted(int n) const;
  Cyclotomic conj() const;
  /// Galois automorphism zeta -> zeta^k, gcd(k, N) = 1.
  Cyclotomic galois(i64 k) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  Cyclotomic& operator/=(const Rational& r);
  /// Division in the field; throws on a zero divisor.
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  Cyclotomic pow(i64 e) const;
  /// Least k >= 1 with z^k = 1, or 0 if z is not a root of unity.
  i64 root_order() const;

  /// Sparse (exponent, coefficient) pairs in the reduced power basis.
  std::vector<std::pair<int, Rational>> terms() const;

  std::complex<double> to_complex() const;
  std::string str() const;

 private:
  void normalize();
  static Cyclotomic reduce_full(int n, std::vector<i128> coeffs, i64 den);

  int n_ = 1;
  std::vector<i64> num_{0};  // length phi(n_)
  i64 den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z);

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<i64>& cyclotomic_polynomial(int n);
int euler_phi(int n);

}  // namespace gtqd
