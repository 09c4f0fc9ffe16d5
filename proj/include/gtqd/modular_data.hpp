#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gtqd/cyclotomic.hpp"
#include "gtqd/quotient.hpp"

namespace gtqd {

using CycloMatrix = std::vector<std::vector<Cyclotomic>>;

/// Irreducible theta-projective characters of C: rho(x) rho(y) = zeta_N^theta(x,y) rho(xy).
struct ProjectiveTable {
  std::vector<std::vector<Cyclotomic>> values;  // values[row][x], x an element of C
  std::vector<int> degrees;
};

/// Through the central extension mu_N x_theta C. theta is indexed x * |C| + y
/// and must be a normalized 2-cocycle mod N, else NotA2Cocycle.
ProjectiveTable projective_character_table(const FiniteGroup& c, const std::vector<i64>& theta, i64 modulus);

/// Simple D^omega(G)-module M(g, chi): g a class representative, chi a
/// theta_g-projective irreducible character of C_G(g).
struct SimpleLabel {
  int g = 0;
  int class_index = 0;
  int class_size = 1;
  int degree = 1;
  std::vector<int> centralizer;  // sorted
  std::vector<Cyclotomic> chi;   // indexed like centralizer
  std::vector<int> position;     // element -> index in centralizer, or -1
  std::vector<int> conjugator;   // h -> least r with r g r^-1 = h, or -1 off the class

  i64 dim() const { return static_cast<i64>(degree) * class_size; }
  const Cyclotomic& chi_at(int x) const;
};

/// Labels ordered by class (identity class first), then by table row; the
/// vacuum comes first.
std::vector<SimpleLabel> simple_labels(const TwistedDouble& d);

/// chi(g) / chi(1) per label.
std::vector<Cyclotomic> t_matrix(const std::vector<SimpleLabel>& labels);

/// Trace of the reverse double braiding c^-2 on M_X (x) M_Y, as a closed
/// character sum; with R = sum_g e_g (x) g the ribbon twist of the reverse
/// braiding is chi(g) / chi(1).
CycloMatrix s_matrix_unnormalized(const TwistedDouble& d, const std::vector<SimpleLabel>& labels);

struct FusionEntry {
  int i, j, k;
  i64 n;
  friend bool operator==(const FusionEntry& a, const FusionEntry& b) {
    return a.i == b.i && a.j == b.j && a.k == b.k && a.n == b.n;
  }
};

struct ModularData {
  std::vector<SimpleLabel> labels;
  std::vector<Cyclotomic> T;
  CycloMatrix S_unnormalized;
  i64 D2 = 1;    // sum of dim^2
  Cyclotomic D;  // positive square root of D2
  CycloMatrix S;
  std::vector<FusionEntry> fusion;  // nonzero N_ij^k only
  i64 conductor = 1;                // order of T
  bool modular = true;
  std::vector<int> radical;  // transparent labels when degenerate
  std::vector<std::string> issues;

  int rank() const { return static_cast<int>(labels.size()); }
};

/// Modular axioms on (S_unnormalized, T, D2); each failed axiom is one message.
std::vector<std::string> check_modular_axioms(const ModularData& md);

/// N_ij^k = (1/D2) sum_m S_im S_jm conj(S_km) / S_0m from the unnormalized S.
/// Throws NonIntegralFusion unless every entry is a nonnegative integer.
std::vector<FusionEntry> verlinde(const CycloMatrix& s_unnormalized, i64 D2);

/// Full modular data of D^omega(G)-mod. A failed axiom is a ConventionFault.
ModularData modular_data(const TwistedDouble& d, bool with_fusion = true);

/// Indices of labels on which every section u_a acts as 1. Throws
/// SectionNotHomomorphism when the scalars are not multiplicative in a.
std::vector<int> quotient_members(const TwistedDouble& d, const std::vector<SimpleLabel>& labels,
                                  const QuotientCertificate& cert);

/// Subcategory D^omega(G, A)-mod. Axioms are re-checked when cert.is_mtc;
/// otherwise the transparent labels are reported in `radical`.
ModularData restrict_to_quotient(const TwistedDouble& d, const ModularData& md, const QuotientCertificate& cert,
                                 bool with_fusion = true);

inline constexpr int kOracleCap = 8;

/// Trace of c^-2 for (x, y) computed on explicit monomial modules
/// (induced regular projective representations cut down by central
/// idempotents). Checks the module axioms and that the braiding is a module
/// map, raising ConventionFault otherwise; CapExceeded above kOracleCap.
Cyclotomic braiding_oracle(const TwistedDouble& d, const SimpleLabel& x, const SimpleLabel& y);

/// k with z = zeta_modulus^k, if z is a root of unity of order dividing modulus.
std::optional<i64> root_exponent(const Cyclotomic& z, i64 modulus);

}  // namespace gtqd
