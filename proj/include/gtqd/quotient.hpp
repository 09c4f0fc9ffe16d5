#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gtqd/twisted_double.hpp"

namespace gtqd {

/// Elements g whose gamma_g is a coboundary over C^x (sorted).
std::vector<int> b_omega(const TwistedDouble& d);
/// B^omega intersected with the centre.
std::vector<int> z_omega(const TwistedDouble& d);

/// Modulus N * exp(G) at which tau and nu are solved.
i64 lifted_modulus(const TwistedDouble& d);

/// Least (lexicographic in x) solution tau_g of d tau_g = theta_g at the lifted modulus.
Cochain solve_tau(const TwistedDouble& d, int g);

/// beta(g, h)(k) = tau_g(k) + tau_h(k) - tau_gh(k) + theta_k(g, h), as the
/// coefficient vector of a character of G.
std::vector<i64> beta(const TwistedDouble& d, const CharacterGroup& chars, const std::map<int, Cochain>& tau, int g,
                      int h);

/// Solutions nu are ordered by the resulting section table mu_a(x)
/// (a-major, then x), which is independent of the choice of tau.
enum class NuPolicy {
  Least,               // least section table
  FirstNondegenerate,  // first with a nondegenerate bicharacter, else least
  Random,              // uniform choice from the seed
};

enum class BicharConvention {
  Divide,  // (a|b) = tau_a(b) tau_b(a) / (nu(a)(b) nu(b)(a))
  Invert,  // reciprocal table; same radical
};

struct QuotientCertificate;

struct QuotientOptions {
  NuPolicy policy = NuPolicy::Least;
  /// Non-zero: each tau_a is shifted by a random character and the linear
  /// solves use a shuffled pivot order.
  std::uint64_t seed = 0;
  /// Preferred nu: the first solution in section order accepted by this
  /// predicate wins over the policy.
  std::function<bool(const QuotientCertificate&)> prefer;
  BicharConvention convention = BicharConvention::Divide;
  /// Upper bound on the number of nu candidates enumerated.
  std::size_t max_nu_candidates = 1 << 16;
};

struct QuotientCertificate {
  std::vector<int> subgroup;  // A, sorted
  i64 modulus = 1;            // lifted modulus for tau, nu and the bicharacter
  bool exists = false;        // pi' exists
  bool is_mtc = false;
  std::vector<std::string> reasons;
  std::map<int, Cochain> tau;                 // a -> tau_a
  std::map<int, std::vector<i64>> nu;         // a -> character coefficients
  std::map<std::pair<int, int>, std::vector<i64>> beta;
  std::vector<std::vector<i64>> bicharacter;  // exponents at modulus, indexed like subgroup
  std::vector<int> radical;
  std::size_t nu_candidates = 0;

  /// mu_a(x) = tau_a(x) - nu(a)(x), the coefficients of the section u_a.
  i64 mu(const CharacterGroup& chars, int a, int x) const;
};

QuotientCertificate check_quotient_exists(const TwistedDouble& d, const std::vector<int>& subgroup,
                                          const QuotientOptions& options = {});

/// Bicharacter table for a given tau/nu choice; radical is returned in `radical`.
std::vector<std::vector<i64>> bicharacter(const QuotientCertificate& cert, const CharacterGroup& chars,
                                          BicharConvention convention, std::vector<int>* radical = nullptr);

/// Quotient algebra D^omega(G, A) on labels (g, coset index).
class GeneralizedDouble {
 public:
  GeneralizedDouble(const TwistedDouble& d, const QuotientCertificate& cert);

  const TwistedDouble& parent() const { return *parent_; }
  int coset_count() const { return static_cast<int>(reps_.size()); }
  int coset_of(int x) const { return coset_of_[x]; }
  int representative(int coset) const { return reps_[coset]; }
  int dimension() const { return parent_->group().order() * coset_count(); }

  /// pi'(e_g (x) x) = zeta^lambda e_g (x) xA; returns lambda.
  i64 lambda(int g, int x) const { return lambda_[static_cast<std::size_t>(g) * n_ + x]; }
  i64 modulus() const { return modulus_; }

  std::optional<Term> product(const Label& u, const Label& v) const;
  std::vector<CoproductTerm> coproduct(const Label& u) const;

 private:
  const TwistedDouble* parent_;
  int n_;
  i64 modulus_;
  std::vector<int> reps_;
  std::vector<int> coset_of_;
  std::vector<i64> lambda_;
};

struct GeneralizedDoubleReport {
  bool section_homomorphism = true;
  bool algebra_morphism = true;
  bool coalgebra_morphism = true;
  bool diagram_commutes = true;
  std::string first_failure;
  bool ok() const { return section_homomorphism && algebra_morphism && coalgebra_morphism && diagram_commutes; }
};

/// Exhaustive checks of pi'. Throws WellDefinednessFailure or
/// SectionNotHomomorphism when `throw_on_failure` is set.
GeneralizedDoubleReport verify_generalized_double(const GeneralizedDouble& gd, const QuotientCertificate& cert,
                                                  bool throw_on_failure = true);

GeneralizedDouble build_generalized_double(const TwistedDouble& d, const QuotientCertificate& cert);

/// Element sum_x zeta^coeff[x] e_x (x) g of D^omega(G).
struct GroupLike {
  int g;
  std::vector<i64> coeffs;
};

bool is_grouplike(const TwistedDouble& d, const GroupLike& u, i64 modulus);
bool is_central_element(const TwistedDouble& d, const GroupLike& u, i64 modulus);

/// Gamma_0: tau_g * chi over g in Z^omega and chi in G^, each asserted
/// group-like and central. Coefficients are at lifted_modulus(d).
std::vector<GroupLike> central_grouplikes(const TwistedDouble& d);

bool two_generator_test(const Cochain& omega);

struct TwoGeneratorCount {
  i64 count = 0;
  std::map<i64, i64> orders;  // class order -> multiplicity
};

TwoGeneratorCount count_two_generators(i64 h3_order, i64 sylow2_part);

}  // namespace gtqd
