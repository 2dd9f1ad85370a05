#pragma once

#include <string>
#include <vector>

namespace alcove {

// Structure detection on a finite multiplication table (indices into the
// element list, identity must be index of the row equal to [0..m-1]).
struct GroupStructure {
  std::size_t order = 0;
  bool abelian = false;
  std::vector<int> element_orders;
  // {1, 2, ...} -> count of elements of that order
  std::vector<std::pair<int, int>> order_spectrum;
  // "Z1", "Zk", "Z2xZ2", "I2(k)" (dihedral of order 2k), "S4"
  std::string label;
};

GroupStructure analyze_group(const std::vector<std::vector<int>>& table);

}  // namespace alcove
