#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alcove/alcove_aut.hpp"
#include "alcove/polytope.hpp"
#include "alcove/weyl.hpp"

namespace alcove {

// A finite group of affine isometries together with the region it tiles.
// Construction checks closure, identity, Gram-orthogonal linear parts, and
// that every element permutes the ambient vertex set.
struct GroupAction {
  std::vector<AffineIsometry> elements;  // identity first
  HPolytope ambient;
  VPolytope ambient_v;

  static GroupAction create(const RootSystem& rs, std::vector<AffineIsometry> elems,
                            const HPolytope& ambient);
};

GroupAction omega_action(const RootSystem& rs);
GroupAction alcove_aut_action(const RootSystem& rs);

struct FundamentalDomainReport {
  bool fundamental = false;
  bool interiors_disjoint = false;
  bool volume_covers = false;
  int overlapping_element = -1;  // index witnessing an interior overlap
  RatVec overlap_point;
  Rational vol_f, vol_ambient;
};

// (a) interior(F) and interior(gF) LP-disjoint for every g != 1, and
// (b) |G| vol(F) = vol(ambient). Requires F inside the ambient region.
FundamentalDomainReport is_fundamental_domain(const RootSystem& rs, const HPolytope& f,
                                              const GroupAction& g);

// Half-space of gF pulled back through g: (M a, y) sense c + (M a, t).
HalfSpace transform_halfspace(const RootSystem& rs, const AffineIsometry& g,
                              const HalfSpace& h);

std::vector<int> stabilizer(const GroupAction& g, const RatVec& x);

// Fixed-point set of an affine isometry: solutions of (linear - id) x = -t.
AffineSubspace fixed_space(const AffineIsometry& g);

struct ExtStabilizer {
  std::vector<int> omega_elements;  // indices into the omega action
  std::vector<int> walls;           // alcove walls through x: 0 for H_0, else i
};

// (W_ext)_x = Omega_x x| (W_aff)_x with the affine part represented by the
// walls through x; no enumeration of the affine Weyl group.
ExtStabilizer ext_stabilizer_decomposition(const RootSystem& rs, const RatVec& x);

struct StratWitness {
  int face_index;
  int element_index;
  RatVec fixed_point;   // in relint(face), fixed by the element
  RatVec moved_point;   // in relint(face), moved by the element
};

struct StratificationReport {
  bool stratified = true;
  bool cap_hit = false;
  std::size_t face_count = 0;
  std::vector<StratWitness> witnesses;
};

// Face criterion: fails iff some g != 1 and face F have aff(F) not inside
// Fix(g) while relint(F) meets Fix(g). Equivalent to the stabilizer
// definition because points share a regular face exactly when they lie in a
// common relative interior, stabilizers are constant there iff each g fixes
// all of it or none of it, and "all of it" is an affine condition.
StratificationReport stratified_centralizers(const RootSystem& rs, const GroupAction& g,
                                             const HPolytope& f,
                                             std::size_t face_cap = 1000000);

// [b_0, ..., b_n] with b_i = (alpha_i, x) and b_0 = 1 - (alpha_0, x).
std::vector<Rational> kac_coordinates(const RootSystem& rs, const RatVec& x);

// Walls criterion for the affine Weyl group: on every alcove face, the active
// wall set at interior sample points matches the face's incidence set.
bool waff_stratified(const RootSystem& rs);

// Extended-group verdict for the KP polytope via the stabilizer
// decomposition: the Omega face criterion plus wall-set constancy.
bool wext_stratified_kp(const RootSystem& rs, std::size_t face_cap = 1000000);

}  // namespace alcove
