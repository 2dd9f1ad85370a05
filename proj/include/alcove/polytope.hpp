#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alcove/diagram.hpp"
#include "alcove/lp.hpp"
#include "alcove/root_system.hpp"

namespace alcove {

enum class Sense { le, ge };

// Constraint inner(normal, x) sense offset, paired through the Gram matrix.
struct HalfSpace {
  RatVec normal;
  Rational offset;
  Sense sense;
  std::string tag;  // "H_i", "H_0", "H_i^0", "S_v0", ...
};

struct HPolytope {
  int dim = 0;
  std::vector<HalfSpace> halfspaces;
};

struct VPolytope {
  HPolytope source;
  std::vector<RatVec> vertices;              // sorted lexicographically
  std::vector<std::vector<bool>> incidence;  // vertex x halfspace, tight?
};

// {x | (alpha_i, x) >= 0, (alpha_0, x) <= 1}; walls tagged H_1..H_n, H_0.
HPolytope alcove_polytope(const RootSystem& rs);

// Alcove cut by (alpha_0 + alpha_j, x) <= 1 for each minuscule j (tag H_j^0).
HPolytope komrakov_premet(const RootSystem& rs);

// {coweight_i/m_i : i not minuscule} u { (1/(|L|+1)) sum_L coweights : L subset J }.
std::vector<RatVec> kp_vertices_closed_form(const RootSystem& rs);

bool satisfies(const RootSystem& rs, const HalfSpace& h, const RatVec& x);
bool contains(const RootSystem& rs, const HPolytope& p, const RatVec& x);
LinConstraint to_constraint(const RootSystem& rs, const HalfSpace& h, bool strict);

// Exact vertex enumeration over all rank-size subsets of the half-space list.
// Throws domain_error on unbounded input (detected by a recession-cone LP).
VPolytope enumerate_vertices(const RootSystem& rs, const HPolytope& p);

// Indices of half-spaces whose incident vertices affinely span dimension n-1.
std::vector<int> bounding_halfspaces(const RootSystem& rs, const VPolytope& vp);
std::vector<std::string> bounding_tags(const RootSystem& rs, const VPolytope& vp);

struct BalancedRoot {
  std::vector<int> plus;   // J_0^+
  std::vector<int> minus;  // J_0^-
  RatVec vector;           // sum(plus) - sum(minus) of simple roots
  bool minuscule_support;  // support inside J
};

// Validates: disjoint support, phi swaps plus onto minus, phi(v) = -v, v != 0.
BalancedRoot balanced_root(const RootSystem& rs, const DiagramAut& phi,
                           const std::vector<int>& plus, const std::vector<int>& minus);

HPolytope sliced(const HPolytope& p, const RootSystem& rs, const RatVec& v,
                 const std::string& tag);

// The standard balanced roots per type (empty when Aut(D) is trivial).
std::vector<BalancedRoot> standard_balanced_roots(const RootSystem& rs);

// KP polytope sliced by (v, x) >= 0 for each standard balanced root; equals
// the KP polytope when there is none. Throws domain_error if a slice leaves
// no interior.
HPolytope fundamental_polytope(const RootSystem& rs);

// Same, with an explicit support for the slice (phi = the type's standard
// diagram involution). Used for alternate and deliberately bad supports.
HPolytope fundamental_polytope_with_support(const RootSystem& rs,
                                            const std::vector<int>& plus,
                                            const std::vector<int>& minus);

// The standard nontrivial involution phi_0 of the finite diagram, identity
// when Aut(D) = 1. For D4 this is the (n-1 n) swap used for v_0.
DiagramAut standard_involution(const RootSystem& rs);

// 2^{n-1} + (3 - (-1)^n)/4 * C(2 floor(n/2), floor(n/2))
std::uint64_t vertex_count_formula_A(int n);

struct Face {
  std::vector<int> vertex_ids;
  std::vector<int> active;  // half-space indices tight on the whole face
  int dim = 0;
};

struct FaceLattice {
  std::vector<Face> faces;  // includes the polytope itself and all vertices
  std::vector<std::vector<int>> children;  // exposed subfaces found per face
  bool cap_hit = false;
};

FaceLattice face_lattice(const RootSystem& rs, const VPolytope& vp,
                         std::size_t cap = 1000000);

// Index of the smallest face containing x (x must lie in the polytope).
int regular_face(const RootSystem& rs, const VPolytope& vp, const FaceLattice& fl,
                 const RatVec& x);

// Lebesgue volume in simple-root coordinates, by recursive cone decomposition
// from a base vertex (exact; metric scale factors cancel in every volume
// identity checked in this project).
Rational volume(const RootSystem& rs, const VPolytope& vp);

// |det(p_1 - p_0, ..., p_n - p_0)| / n!
Rational simplex_volume(const std::vector<RatVec>& pts);

}  // namespace alcove
