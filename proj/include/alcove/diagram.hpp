#pragma once

#include <vector>

#include "alcove/root_system.hpp"

namespace alcove {

// Dynkin diagram as the table of Cartan integers over its node roots.
// Finite diagrams have nodes {1..n}; the affine diagram adds node 0 for
// -alpha_0. Node ids are stable (removing a node keeps the others' ids).
struct DynkinDiagram {
  std::vector<int> nodes;               // sorted node ids
  std::vector<std::vector<long>> cartan;  // indexed by position in nodes

  bool affine() const { return !nodes.empty() && nodes.front() == 0; }
  std::size_t size() const { return nodes.size(); }
  int position_of(int node) const;
  long cartan_int(int node_i, int node_j) const;
};

DynkinDiagram build_diagram(const RootSystem& rs, bool affine);

DynkinDiagram remove_node(const DynkinDiagram& dd, int node);

// Node permutation preserving Cartan integers. Stored over 0..n for
// uniformity; automorphisms of the finite diagram fix slot 0.
struct DiagramAut {
  std::vector<int> sigma;  // sigma[node] = image node

  int operator()(int node) const { return sigma[node]; }
  bool is_identity() const;
  bool operator==(const DiagramAut& o) const { return sigma == o.sigma; }
  bool operator<(const DiagramAut& o) const { return sigma < o.sigma; }
};

DiagramAut aut_identity(int n);
// (a after b)(x) = a(b(x))
DiagramAut aut_compose(const DiagramAut& a, const DiagramAut& b);
DiagramAut aut_inverse(const DiagramAut& a);

bool preserves_cartan(const DynkinDiagram& dd, const DiagramAut& a);

// Exhaustive backtracking over Cartan-integer-preserving node permutations;
// the result is a group, sorted canonically (identity first).
std::vector<DiagramAut> diagram_automorphisms(const DynkinDiagram& dd);

bool diagrams_isomorphic(const DynkinDiagram& a, const DynkinDiagram& b);

// Label-preserving automorphisms of the Coxeter diagram of the finite system,
// realized as matrices in the basis of unit-normalized simple roots (so they
// are permutation matrices; alpha-basis matrices would need irrational length
// ratios for the B/C/F/G node swaps).
struct ChamberAut {
  std::vector<int> perm;  // 1-based over slots 1..n, perm[0] unused
  RatMat matrix;          // n x n permutation matrix, unit-normal basis
};
std::vector<ChamberAut> chamber_automorphisms(const RootSystem& rs);

}  // namespace alcove
