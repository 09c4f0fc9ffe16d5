#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gtqd/numeric.hpp"

namespace gtqd {

/// Sparse matrix over Z/N, row-major. Entries are kept reduced into [0, N).
class ModNMatrix {
 public:
  using Row = std::vector<std::pair<int, i64>>;  // (column, value), sorted by column

  ModNMatrix(i64 modulus, int rows, int cols);

  i64 modulus() const { return modulus_; }
  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  /// Adds value to entry (r, c).
  void add(int r, int c, i64 value);
  /// Call after a batch of add() to merge duplicates and drop zeros.
  void finalize();

  const Row& row(int r) const { return rows_[r]; }
  i64 at(int r, int c) const;

  std::vector<i64> apply(const std::vector<i64>& x) const;
  /// Same entries reduced to another modulus (integer lift, then reduce).
  ModNMatrix reduced(i64 modulus) const;
  /// Same integer entries (representatives in [0, N)) scaled by a factor into a larger modulus.
  ModNMatrix rescaled(i64 modulus) const;

 private:
  i64 modulus_;
  int cols_;
  std::vector<Row> rows_;
};

struct SolveOptions {
  /// Non-zero: variables are permuted by a seeded shuffle before elimination,
  /// exercising a different pivot order. Solutions stay exact.
  std::uint64_t pivot_seed = 0;
};

struct ModNSolution {
  std::vector<i64> particular;
  /// Generators of {x : A x = 0}; they span the kernel but need not be independent.
  std::vector<std::vector<i64>> kernel;
};

/// Solves A x = b over Z/N. Returns nullopt when no solution exists.
std::optional<ModNSolution> solve_modN(const ModNMatrix& a, const std::vector<i64>& b,
                                       const SolveOptions& options = {});

/// Smith normal form of A over the local ring Z/p^k with column transform
/// tracking. The diagonal entries are p^e with e < k (entries p^k vanish).
class LocalSmith {
 public:
  struct Pivot {
    int row;
    int col;
    int valuation;
  };

  LocalSmith(const ModNMatrix& a, i64 p, int k, bool track_columns,
             std::vector<std::vector<i64>> rhs = {});

  i64 prime() const { return p_; }
  i64 modulus() const { return pk_; }
  const std::vector<Pivot>& pivots() const { return pivots_; }
  /// Column transform V with A V = U^{-1} D; column j of V, reduced mod p^k.
  std::vector<i64> v_column(int j) const;
  /// Row j of V.
  std::vector<i64> v_row(int j) const;
  /// Transformed right-hand side U b (one entry per original row).
  const std::vector<std::vector<i64>>& rhs() const { return rhs_; }
  /// Whether any non-pivot row of the transformed rhs is non-zero.
  bool rhs_consistent(std::size_t which) const;

 private:
  void run();

  i64 p_;
  int k_;
  i64 pk_;
  int cols_;
  bool track_;
  std::vector<ModNMatrix::Row> rows_;
  std::vector<std::vector<i64>> rhs_;
  std::vector<Pivot> pivots_;
  std::vector<std::vector<i64>> v_cols_;  // dense, v_cols_[j][i] = V[i][j]
  std::vector<bool> row_done_;
};

/// Elementary divisors of an integer matrix (given by its entries mod N).
/// For each prime p | N the local form over Z/p^v_p(N) is computed and
/// recombined; divisors equal to 0 mod N are reported as 0.
std::vector<i64> elementary_divisors_modN(const ModNMatrix& a);

using IntMatrix = std::vector<std::vector<i64>>;

struct SmithResult {
  std::vector<i64> divisors;  // d_1 | d_2 | ..., length min(rows, cols)
  IntMatrix u;                // rows x rows, unimodular
  IntMatrix v;                // cols x cols, unimodular
};

/// Smith normal form over the integers with U A V = diag(d). Intended for
/// small matrices (Gram matrices); entries are overflow checked.
SmithResult smith_normal_form(const IntMatrix& a);

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

}  // namespace gtqd
