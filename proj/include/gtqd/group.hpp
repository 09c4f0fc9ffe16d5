#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gtqd/numeric.hpp"

namespace gtqd {

inline constexpr int kDefaultOrderCap = 64;

/// Finite group given by its multiplication table. Elements are dense
/// indices 0..order-1; index 0 is the identity.
class FiniteGroup {
 public:
  using Table = std::vector<std::vector<int>>;

  /// Validates a Cayley table. The identity is relabelled to index 0 if needed.
  static FiniteGroup from_table(const Table& table, std::vector<std::string> names = {},
                                int cap = kDefaultOrderCap);
  /// Closure of permutation generators. Elements are ordered breadth-first
  /// from the identity, trying generators in the given order.
  static FiniteGroup from_generators(const std::vector<std::vector<int>>& perms,
                                     int cap = kDefaultOrderCap);
  /// Z/n_1 x ... x Z/n_k with mixed-radix element indices (first factor fastest).
  static FiniteGroup abelian(const std::vector<int>& factors);
  static FiniteGroup cyclic(int n) { return abelian({n}); }
  /// Table known to be a group (internal constructions); only the Latin
  /// square and identity checks run.
  static FiniteGroup from_trusted_table(std::vector<int> flat, int order);

  int order() const { return n_; }
  int mul(int x, int y) const { return table_[static_cast<std::size_t>(x) * n_ + y]; }
  int inv(int x) const { return inverse_[x]; }
  /// Right conjugation x^g = g^-1 x g.
  int conjugate(int x, int g) const { return mul(mul(inverse_[g], x), g); }
  int power(int x, i64 k) const;
  int element_order(int x) const { return orders_[x]; }
  int exponent() const;
  bool is_abelian() const;

  const std::vector<std::string>& names() const { return names_; }
  std::string name(int x) const;
  Table table() const;
  const std::vector<int>& flat_table() const { return table_; }

  /// Conjugacy class index of each element; classes are ordered by their
  /// least element, which is the representative.
  int class_of(int x) const { return class_of_[x]; }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  std::vector<int> class_representatives() const;
  std::vector<int> centralizer(int x) const;
  bool commute(int x, int y) const { return mul(x, y) == mul(y, x); }
  const std::vector<int>& center() const { return center_; }
  bool is_central(int x) const;

  /// Subgroup generated by the given elements, sorted ascending.
  std::vector<int> generated_subgroup(const std::vector<int>& gens) const;
  bool is_subgroup(const std::vector<int>& elems) const;
  std::vector<int> commutator_subgroup() const;

 private:
  FiniteGroup() = default;
  void derive();

  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> orders_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> center_;
  std::vector<std::string> names_;
};

/// Group of linear characters G^ = Hom(G, C^x) = Hom(G/[G,G], Q/Z).
/// A character is a coefficient vector c (c_i mod d_i) over the invariant
/// factors; its value at x is exp(2 pi i sum_i c_i y_i(x) / d_i) where y(x)
/// are the coordinates of x in the abelianization.
class CharacterGroup {
 public:
  explicit CharacterGroup(const FiniteGroup& g);

  const std::vector<i64>& invariant_factors() const { return factors_; }
  /// Exponent e of G/[G,G]; character values are exponents mod e.
  i64 exponent() const { return exponent_; }
  i64 size() const;

  /// Coordinates of x in the abelianization.
  const std::vector<i64>& coordinates(int x) const { return coords_[x]; }
  /// Element of G mapping to the i-th unit vector of the abelianization.
  int basis_element(int i) const { return basis_elements_[i]; }

  /// chi_c(x) as an exponent of zeta_modulus; modulus must be a multiple of exponent().
  i64 evaluate(const std::vector<i64>& c, int x, i64 modulus) const;
  /// Values of chi_c on all of G as exponents of zeta_modulus.
  std::vector<i64> values(const std::vector<i64>& c, i64 modulus) const;
  /// Coefficient vector of a function G -> Z/modulus that is a character;
  /// nullopt if it is not one.
  std::optional<std::vector<i64>> decompose(const std::vector<i64>& values, i64 modulus) const;

  std::vector<std::vector<i64>> all() const;
  std::vector<i64> add(const std::vector<i64>& a, const std::vector<i64>& b) const;
  std::vector<i64> neg(const std::vector<i64>& a) const;
  std::vector<i64> zero() const { return std::vector<i64>(factors_.size(), 0); }

  const std::vector<int>& commutator_subgroup() const { return commutator_; }

 private:
  const FiniteGroup* group_;
  std::vector<i64> factors_;
  i64 exponent_ = 1;
  std::vector<std::vector<i64>> coords_;
  std::vector<int> basis_elements_;
  std::vector<int> commutator_;
};

enum class Sylow2Type { Cyclic, GeneralizedQuaternion, Neither, Odd };

const char* to_string(Sylow2Type t);

/// The unique element of order 2, if exactly one exists.
std::optional<int> unique_involution(const FiniteGroup& g);
/// A 2-Sylow subgroup (sorted), found by greedy extension of 2-subgroups.
std::vector<int> sylow2_subgroup(const FiniteGroup& g);
Sylow2Type sylow2_type(const FiniteGroup& g);

/// Subgroup data as an explicit group with the embedding into the parent.
struct Subgroup {
  FiniteGroup group;
  std::vector<int> embedding;  // subgroup index -> parent index
};

Subgroup make_subgroup(const FiniteGroup& g, const std::vector<int>& elements);

}  // namespace gtqd
