#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alcove/diagram.hpp"
#include "alcove/weyl.hpp"

namespace alcove {

// The unique linear map sending root_of_node(i) to root_of_node(sigma(i));
// verified to be Gram-orthogonal and consistent on node 0. Throws if sigma
// does not preserve the affine Cartan integers.
RatMat linear_realization(const RootSystem& rs, const DiagramAut& sigma);

// theta(phi) = t_{coweight_j} phi with j = sigma(0): the affine isometry of
// the alcove projecting to phi.
AffineIsometry theta(const RootSystem& rs, const DiagramAut& sigma);

// Node permutation of a Gram-orthogonal linear map that permutes the node
// roots; empty if it does not.
std::optional<DiagramAut> node_permutation(const RootSystem& rs, const RatMat& m);

struct AlcoveAutElement {
  DiagramAut sigma;   // action on the affine diagram
  AffineIsometry iso;  // theta(sigma)
  int omega_j;         // sigma(0); 0 for the linear elements
  DiagramAut d_part;   // v_j^{-1} sigma, the Aut(D) factor
};

struct AlcoveAutGroup {
  std::vector<AlcoveAutElement> elements;  // sorted by sigma; identity first
  std::vector<std::vector<int>> table;
  // named Coxeter generators ("tau0", "tau1", ...), indices into elements
  std::vector<std::pair<std::string, int>> generators;
  std::string label;

  int index_of_sigma(const DiagramAut& s) const;
};

// Image of Aut(affine diagram) under theta, with the per-type Coxeter
// generator recipe: flips and rotations for A, the triality generators for
// D4, the end swaps for D/E6, the single omega for B/C/E7.
AlcoveAutGroup alcove_automorphism_group(const RootSystem& rs);

}  // namespace alcove
