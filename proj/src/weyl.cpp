#include "alcove/weyl.hpp"

#include <algorithm>

#include "alcove/error.hpp"
#include "alcove/groups.hpp"

namespace alcove {

WeylElement simple_reflection(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) throw domain_error("simple reflection index out of range");
  const int n = rs.rank();
  RatMat m = RatMat::identity(n);
  // column j: s_i(alpha_j) = alpha_j - c(i,j) alpha_i
  for (int j = 0; j < n; ++j) m(i - 1, j) -= rs.cartan()(i - 1, j);
  return {m, {i}};
}

WeylElement longest_element(const RootSystem& rs, const std::vector<int>& subset) {
  const int n = rs.rank();
  WeylElement w{RatMat::identity(n), {}};
  if (subset.empty()) return w;
  RatVec x(n);
  for (int i : subset) x = x + rs.coweight(i);
  for (;;) {
    int pick = 0;
    for (int i : subset)
      if (rs.inner(rs.simple_root(i), x) > 0) {
        pick = i;
        break;
      }
    if (pick == 0) break;
    WeylElement s = simple_reflection(rs, pick);
    x = s.matrix * x;
    w.matrix = s.matrix * w.matrix;
    w.word.push_back(pick);
  }
  return w;
}

WeylElement v_element(const RootSystem& rs, int j) {
  if (!rs.is_minuscule(j)) throw domain_error("v_element: index not minuscule");
  std::vector<int> full, rest;
  for (int i = 1; i <= rs.rank(); ++i) {
    full.push_back(i);
    if (i != j) rest.push_back(i);
  }
  WeylElement wminus = longest_element(rs, full);
  WeylElement wj = longest_element(rs, rest);
  WeylElement v;
  v.matrix = wj.matrix * wminus.matrix;
  v.word = wminus.word;
  v.word.insert(v.word.end(), wj.word.begin(), wj.word.end());
  return v;
}

AffineIsometry compose(const AffineIsometry& a, const AffineIsometry& b) {
  return {a.linear * b.linear, a.linear * b.translation + a.translation};
}

AffineIsometry inverse(const AffineIsometry& a) {
  RatMat li = alcove::inverse(a.linear);
  return {li, -(li * a.translation)};
}

AffineIsometry omega_element(const RootSystem& rs, int j) {
  WeylElement v = v_element(rs, j);
  return {v.matrix, rs.coweight(j)};
}

FundamentalGroup fundamental_group(const RootSystem& rs) {
  FundamentalGroup g;
  g.elements.push_back(AffineIsometry::identity(rs.rank()));
  g.vertex_index.push_back(0);
  for (int j : rs.minuscule()) {
    g.elements.push_back(omega_element(rs, j));
    g.vertex_index.push_back(j);
  }
  const std::size_t m = g.elements.size();
  g.table.assign(m, std::vector<int>(m, -1));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      AffineIsometry p = compose(g.elements[i], g.elements[j]);
      for (std::size_t k = 0; k < m; ++k)
        if (g.elements[k] == p) {
          g.table[i][j] = static_cast<int>(k);
          break;
        }
      if (g.table[i][j] < 0)
        throw domain_error("fundamental group not closed under composition");
    }
  g.label = analyze_group(g.table).label;
  return g;
}

HPolytope dirichlet_domain(const RootSystem& rs) {
  HPolytope p = alcove_polytope(rs);
  for (int j : rs.minuscule()) {
    const RatVec& w = rs.coweight(j);
    p.halfspaces.push_back(
        {w, rs.norm2(w) / 2, Sense::le, "D_" + std::to_string(j)});
  }
  return p;
}

}  // namespace alcove
