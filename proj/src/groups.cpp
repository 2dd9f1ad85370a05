#include "alcove/groups.hpp"

#include <map>

#include "alcove/error.hpp"

namespace alcove {

GroupStructure analyze_group(const std::vector<std::vector<int>>& table) {
  GroupStructure g;
  const std::size_t m = table.size();
  g.order = m;
  if (m == 0) throw domain_error("analyze_group: empty table");

  int id = -1;
  for (std::size_t i = 0; i < m; ++i) {
    bool is_id = true;
    for (std::size_t j = 0; j < m; ++j)
      if (table[i][j] != static_cast<int>(j)) {
        is_id = false;
        break;
      }
    if (is_id) {
      id = static_cast<int>(i);
      break;
    }
  }
  if (id < 0) throw domain_error("analyze_group: no identity");

  g.abelian = true;
  for (std::size_t i = 0; i < m && g.abelian; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (table[i][j] != table[j][i]) {
        g.abelian = false;
        break;
      }

  std::map<int, int> spectrum;
  int max_order = 0;
  for (std::size_t i = 0; i < m; ++i) {
    int p = static_cast<int>(i), ord = 1;
    while (p != id) {
      p = table[p][i];
      ++ord;
    }
    g.element_orders.push_back(ord);
    ++spectrum[ord];
    max_order = std::max(max_order, ord);
  }
  for (auto& kv : spectrum) g.order_spectrum.push_back(kv);

  if (m == 1) {
    g.label = "Z1";
  } else if (g.abelian && static_cast<std::size_t>(max_order) == m) {
    g.label = "Z" + std::to_string(m);
  } else if (g.abelian && m == 4 && max_order == 2) {
    g.label = "Z2xZ2";
  } else if (!g.abelian && m == 24 && spectrum[2] == 9 && spectrum[3] == 8 &&
             spectrum[4] == 6) {
    g.label = "S4";
  } else if (!g.abelian && m % 2 == 0) {
    // dihedral: a cyclic subgroup of index 2 and an inverting involution
    const int k = static_cast<int>(m) / 2;
    int rot = -1;
    for (std::size_t i = 0; i < m; ++i)
      if (g.element_orders[i] == k) {
        rot = static_cast<int>(i);
        break;
      }
    bool dihedral = false;
    if (rot >= 0) {
      int rinv = rot;
      while (table[rinv][rot] != id) rinv = table[rinv][rot];
      for (std::size_t s = 0; s < m && !dihedral; ++s)
        if (g.element_orders[s] == 2 && table[table[s][rot]][s] == rinv)
          dihedral = true;
    }
    g.label = dihedral ? "I2(" + std::to_string(k) + ")" : "?";
  } else {
    g.label = "?";
  }
  return g;
}

}  // namespace alcove
