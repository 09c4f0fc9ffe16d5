#pragma once

#include <vector>

#include "gtqd/cyclotomic.hpp"
#include "gtqd/group.hpp"

namespace gtqd {

struct CharacterTable {
  /// values[chi][class], classes in the group's class order.
  std::vector<std::vector<Cyclotomic>> values;
  std::vector<int> degrees;
  /// Prime used for the modular pass.
  i64 prime = 0;
};

/// Exact ordinary character table by the Burnside-Dixon method: class
/// matrices are diagonalized over F_p with p = 1 mod exp(G), and values are
/// lifted through eigenvalue multiplicities. The trivial character comes
/// first, then rows by ascending degree.
CharacterTable character_table(const FiniteGroup& g);

}  // namespace gtqd
