#pragma once

#include <set>
#include <string>
#include <vector>

#include "alcove/linalg.hpp"

namespace alcove {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
Family family_from_letter(char c);

struct RootSystemId {
  Family family;
  int rank;

  // Rank bounds: A n>=1, B n>=2, C n>=3, D n>=4, E n in {6,7,8}, F n=4, G n=2.
  bool valid() const;
  std::string name() const;  // e.g. "A3"
  bool operator==(const RootSystemId& o) const {
    return family == o.family && rank == o.rank;
  }
};

// An irreducible reduced root system in Bourbaki numbering. All vectors are
// coordinates in the simple-root basis; simple roots and affine node use
// 1-based indices 1..n, with node 0 standing for -alpha_0.
//
// Long roots are normalized to squared length 2. The optional gram_scale
// multiplies the Gram matrix globally; every combinatorial output is
// invariant under it (tested), it exists to make that checkable.
class RootSystem {
 public:
  static RootSystem build(const RootSystemId& id, const Rational& gram_scale = 1);

  const RootSystemId& id() const { return id_; }
  int rank() const { return id_.rank; }
  const RatMat& cartan() const { return cartan_; }  // cartan(i-1,j-1) = <a_i^vee, a_j>
  const RatMat& gram() const { return gram_; }
  const std::vector<RatVec>& positive_roots() const { return positive_roots_; }
  std::vector<RatVec> all_roots() const;
  const RatVec& highest_root() const { return highest_root_; }
  const std::vector<long>& marks() const { return marks_; }  // marks()[i-1] = m_i
  long mark(int i) const { return marks_[i - 1]; }
  const RatVec& coweight(int i) const { return coweights_[i - 1]; }  // 1-based
  const std::vector<int>& minuscule() const { return minuscule_; }   // sorted J
  bool is_minuscule(int j) const;

  Rational inner(const RatVec& x, const RatVec& y) const;
  Rational norm2(const RatVec& x) const { return inner(x, x); }
  // 2(alpha, x)/(alpha, alpha)
  Rational pair_coroot(const RatVec& alpha, const RatVec& x) const;

  bool is_root(const RatVec& v) const;
  bool is_positive_root(const RatVec& v) const;

  // alpha_i for i in 1..n, -alpha_0 for node 0.
  RatVec simple_root(int i) const;
  RatVec root_of_node(int node) const;

  // {0, coweight_i / m_i}: the n+1 alcove vertices in general position.
  std::vector<RatVec> alcove_vertices() const;

  // Whether Pi_j = {-alpha_0} u {alpha_i : i != j} is a simple system, decided
  // directly: every root must have uniformly-signed integer coordinates in the
  // Pi_j basis. Agrees with j being minuscule.
  bool is_simple_system(int j) const;

 private:
  RootSystemId id_;
  RatMat cartan_;
  RatMat gram_;
  std::vector<RatVec> positive_roots_;
  std::set<std::vector<Rational>> positive_set_;
  RatVec highest_root_;
  std::vector<long> marks_;
  std::vector<RatVec> coweights_;
  std::vector<int> minuscule_;
};

}  // namespace alcove
