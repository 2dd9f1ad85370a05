#pragma once

#include <vector>

#include "alcove/polytope.hpp"
#include "alcove/root_system.hpp"

namespace alcove {

// Weyl group element as its exact matrix on simple-root coordinates, with the
// (unnormalized) word of simple reflections that produced it.
struct WeylElement {
  RatMat matrix;
  std::vector<int> word;

  bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
};

// s_i(x) = x - <alpha_i^vee, x> alpha_i
WeylElement simple_reflection(const RootSystem& rs, int i);

// Longest element of the parabolic subgroup generated by the given simple
// reflections, by dominance descent from the subset's coweight sum. No group
// enumeration; word length equals the number of positive roots of the
// subsystem.
WeylElement longest_element(const RootSystem& rs, const std::vector<int>& subset);

// v_j = w_j^- w^- for minuscule j; maps -alpha_0 to alpha_j.
WeylElement v_element(const RootSystem& rs, int j);

// x -> linear x + translation
struct AffineIsometry {
  RatMat linear;
  RatVec translation;

  static AffineIsometry identity(int n) {
    return {RatMat::identity(n), RatVec(n)};
  }
  RatVec apply(const RatVec& x) const { return linear * x + translation; }
  bool operator==(const AffineIsometry& o) const {
    return linear == o.linear && translation == o.translation;
  }
  bool operator!=(const AffineIsometry& o) const { return !(*this == o); }
};

// a after b
AffineIsometry compose(const AffineIsometry& a, const AffineIsometry& b);
AffineIsometry inverse(const AffineIsometry& a);

// omega_j = t_{coweight_j} v_j; stabilizes the alcove, sends 0 to coweight_j.
AffineIsometry omega_element(const RootSystem& rs, int j);

struct FundamentalGroup {
  std::vector<AffineIsometry> elements;  // identity first, then ascending j
  std::vector<int> vertex_index;         // 0 for identity, else the j
  std::vector<std::vector<int>> table;   // table[i][j] = index of e_i e_j
  std::string label;                     // "Z1", "Zk", "Z2xZ2"
};

FundamentalGroup fundamental_group(const RootSystem& rs);

// Alcove cut by (coweight_j, x) <= |coweight_j|^2 / 2 for each minuscule j
// (the norm inequality |x| <= |x - coweight_j| expanded; tags D_j).
HPolytope dirichlet_domain(const RootSystem& rs);

}  // namespace alcove
