#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "gtqd/modn.hpp"
#include "gtqd/modular_data.hpp"

namespace gtqd {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Positive-definite even lattice Z^r with the given Gram matrix.
class EvenLattice {
 public:
  /// Throws InputError (shape, symmetry), NotEven or NotPositiveDefinite.
  explicit EvenLattice(IntMatrix gram);

  int rank() const { return static_cast<int>(gram_.size()); }
  const IntMatrix& gram() const { return gram_; }
  Rational inner(const RationalVector& x, const RationalVector& y) const;

 private:
  IntMatrix gram_;
};

/// Orthogonal direct sum of Gram matrices.
IntMatrix orthogonal_sum(const IntMatrix& a, const IntMatrix& b);

/// A = L*/L with vectors in lattice coordinates.
struct DiscriminantData {
  std::vector<i64> factors;   // invariant factors > 1
  GroupPtr group;             // FiniteGroup::abelian(factors)
  RationalMatrix dual_basis;  // generator f_i of L*, one per factor
  RationalMatrix section;     // s(a) per element of group
  i64 exponent = 1;
};

/// Canonical section: coordinates reduced to [0, 1).
DiscriminantData discriminant_group(const EvenLattice& l);

/// Same data with s(a) moved by the lattice vector shift[a] (shift[0] must be 0).
DiscriminantData shifted_section(const DiscriminantData& data, const std::map<int, std::vector<i64>>& shift);

/// Alternating bicharacter c0(x, y) = exp(2 pi i x^T K y) on L*, K antisymmetric.
struct C0 {
  RationalMatrix form;      // K in lattice coordinates
  RationalMatrix on_basis;  // x^T K y mod 1 on dual_basis pairs
};

/// K is half the strict upper triangle of the Gram matrix minus its
/// transpose, plus an optional integer antisymmetric `shift` (other valid
/// extensions). Verifies alternation and c0 = (-1)^<a,b> on L, else
/// RestrictionFailure.
C0 build_c0(const EvenLattice& l, const DiscriminantData& data, const IntMatrix& shift = {});

/// omega(a,b,c) = (-1)^<s(c), l> c0(s(c), l) with l = s(a) + s(b) - s(a+b),
/// at modulus 2 exp(A). Asserts the cocycle identity.
Cochain lattice_cocycle(const EvenLattice& l, const DiscriminantData& data, const C0& c0);

/// The two cocycles differ by a coboundary over C^x.
bool class_independence_check(const EvenLattice& l, const DiscriminantData& d1, const C0& c1,
                              const DiscriminantData& d2, const C0& c2);

/// q(a) = <s(a), s(a)> / 2 mod 1.
Rational quadratic_form(const EvenLattice& l, const DiscriminantData& data, int a);

struct LatticeResult {
  DiscriminantData data;
  C0 c0;
  Cochain omega;
  std::shared_ptr<TwistedDouble> twisted;
  QuotientCertificate cert;
  ModularData modular;  // D^omega(A, A)-mod
  /// The chosen section twists each label over a by exp(2 pi i q(a)).
  bool twists_match_quadratic_form = false;
};

/// G = A = L*/L with the lattice cocycle, through the quotient and modular
/// data. The nu choice prefers twists equal to the quadratic form, falling
/// back to the first nondegenerate bicharacter.
LatticeResult lattice_pipeline(const EvenLattice& l);

}  // namespace gtqd
