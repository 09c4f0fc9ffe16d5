#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gtqd/cohomology.hpp"

namespace gtqd {

/// theta_g(x, y) and gamma_x(a, b) as exponents of zeta_N.
class ThetaGamma {
 public:
  /// Throws NotACocycle unless require_cocycle is false (used to inspect
  /// deliberately broken input).
  static ThetaGamma build(const Cochain& omega, bool require_cocycle = true);

  const FiniteGroup& group() const { return omega_.group(); }
  const Cochain& omega() const { return omega_; }
  i64 modulus() const { return omega_.modulus(); }

  i64 theta(int g, int x, int y) const { return theta_[idx(g, x, y)]; }
  i64 gamma(int x, int a, int b) const { return gamma_[idx(x, a, b)]; }

 private:
  explicit ThetaGamma(Cochain omega) : omega_(std::move(omega)), n_(omega_.group().order()) {}
  std::size_t idx(int a, int b, int c) const { return (static_cast<std::size_t>(a) * n_ + b) * n_ + c; }

  Cochain omega_;
  int n_;
  std::vector<i64> theta_;
  std::vector<i64> gamma_;
};

/// Basis element e_g (x) x of D^omega(G).
struct Label {
  int g;
  int x;
  friend bool operator==(const Label& a, const Label& b) { return a.g == b.g && a.x == b.x; }
  friend bool operator<(const Label& a, const Label& b) { return a.g != b.g ? a.g < b.g : a.x < b.x; }
};

struct Term {
  i64 exponent;  // coefficient zeta_N^exponent
  Label label;
};

struct CoproductTerm {
  i64 exponent;
  Label left;
  Label right;
};

class TwistedDouble {
 public:
  explicit TwistedDouble(const Cochain& omega) : tables_(ThetaGamma::build(omega)) {}
  /// No cocycle check on omega; verify_quasi_hopf then reports the defects.
  static TwistedDouble unchecked(const Cochain& omega) { return TwistedDouble(ThetaGamma::build(omega, false)); }

  const ThetaGamma& tables() const { return tables_; }
  const FiniteGroup& group() const { return tables_.group(); }
  i64 modulus() const { return tables_.modulus(); }
  int dimension() const { return group().order() * group().order(); }

  /// Product of basis elements; nullopt when g^x != h.
  std::optional<Term> product(const Label& u, const Label& v) const;
  std::vector<CoproductTerm> coproduct(const Label& u) const;
  /// Exponent of the associator component on e_a (x) e_b (x) e_c.
  i64 associator(int a, int b, int c) const { return -tables_.omega().at(a, b, c); }
  int counit(const Label& u) const { return u.g == 0 ? 1 : 0; }

 private:
  explicit TwistedDouble(ThetaGamma t) : tables_(std::move(t)) {}
  ThetaGamma tables_;
};

struct QuasiHopfReport {
  bool associative = true;
  bool quasi_coassociative = true;
  bool multiplicative = true;
  bool counital = true;
  bool cocycle = true;
  /// Associator trivial: an honest Hopf algebra.
  bool hopf = false;
  std::string first_failure;

  bool ok() const { return associative && quasi_coassociative && multiplicative && counital && cocycle; }
};

QuasiHopfReport verify_quasi_hopf(const TwistedDouble& d);

struct CentralizerReport {
  bool equal = true;
  bool cocycle = true;
  std::string first_failure;
  bool ok() const { return equal && cocycle; }
};

/// gamma_g = theta_g on C_G(g), and the restriction is a 2-cocycle there.
CentralizerReport check_theta_eq_gamma_on_centralizer(const TwistedDouble& d, int g);

}  // namespace gtqd
