#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "gtqd/group.hpp"
#include "gtqd/modn.hpp"

namespace gtqd {

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline constexpr int kCohomologyCap = 16;
inline constexpr int kCoboundaryCap = 24;

/// Normalized cochain G^n -> Z/N, read multiplicatively as zeta_N^value.
/// Stored densely; any identity argument evaluates to 0.
class Cochain {
 public:
  Cochain(GroupPtr group, int degree, i64 modulus);

  const GroupPtr& group_ptr() const { return group_; }
  const FiniteGroup& group() const { return *group_; }
  int degree() const { return degree_; }
  i64 modulus() const { return modulus_; }

  i64 at(const std::vector<int>& args) const { return values_[index(args)]; }
  i64 at(int a) const { return values_[a]; }
  i64 at(int a, int b) const { return values_[static_cast<std::size_t>(a) * n_ + b]; }
  i64 at(int a, int b, int c) const {
    return values_[(static_cast<std::size_t>(a) * n_ + b) * n_ + c];
  }
  /// Sets a value; writes with an identity argument must be 0.
  void set(const std::vector<int>& args, i64 value);

  const std::vector<i64>& values() const { return values_; }
  std::size_t index(const std::vector<int>& args) const;
  std::vector<int> unindex(std::size_t idx) const;

  /// Same cochain read at modulus m (a multiple of the current modulus).
  Cochain lifted(i64 m) const;
  Cochain scaled(i64 k) const;
  Cochain operator-() const;
  /// Sum at the lcm of the two moduli.
  friend Cochain operator+(const Cochain& a, const Cochain& b);
  friend Cochain operator-(const Cochain& a, const Cochain& b) { return a + (-b); }
  friend bool operator==(const Cochain& a, const Cochain& b);

  bool is_zero() const;
  bool is_normalized() const;

 private:
  GroupPtr group_;
  int degree_;
  i64 modulus_;
  int n_;
  std::vector<i64> values_;
};

Cochain coboundary(const Cochain& c);
bool is_cocycle(const Cochain& c);
/// Returns the first 4-tuple where the 3-cocycle identity fails.
std::optional<std::vector<int>> cocycle_failure(const Cochain& c);

/// Matrix of the coboundary C^n -> C^{n+1} restricted to normalized tuples
/// (entries of G \ {1}); columns are normalized n-tuples in index order.
ModNMatrix delta_matrix(const FiniteGroup& g, int n, i64 modulus);
/// Position of a normalized tuple in delta_matrix coordinates, or -1.
int normalized_position(const std::vector<int>& args, int order);

/// Witness x with dx = c over C^x, decided at modulus N * exp(G).
std::optional<Cochain> is_coboundary_over_C(const Cochain& c, int cap = kCoboundaryCap);
/// Order of [omega] in H^3(G, C^x).
i64 class_order(const Cochain& omega, int cap = kCoboundaryCap);

struct CohomologyGroup {
  int degree = 3;
  std::vector<i64> invariant_factors;
  std::vector<Cochain> generators;
};

/// H^3(G, C^x) with explicit generators at the given modulus (0: |G|).
CohomologyGroup h3(const GroupPtr& g, i64 modulus = 0, int cap = kCohomologyCap);

/// Cocycle q * a * floor((b + c) / n) on Z/n (element index = residue).
Cochain cyclic_cocycle(const GroupPtr& zn, i64 q);
Cochain cyclic_cocycle(int n, i64 q);

/// Pullback along a homomorphism G -> Q given as an element map.
Cochain inflate(const Cochain& omega, const GroupPtr& g, const std::vector<int>& projection);
/// Restriction to a subgroup given with its embedding.
Cochain restrict_to(const Cochain& omega, const GroupPtr& h, const std::vector<int>& embedding);

}  // namespace gtqd
