#include "alcove/alcove_aut.hpp"

#include <algorithm>

#include "alcove/error.hpp"
#include "alcove/groups.hpp"

namespace alcove {

RatMat linear_realization(const RootSystem& rs, const DiagramAut& sigma) {
  const int n = rs.rank();
  RatMat m(n, n);
  for (int i = 1; i <= n; ++i) {
    RatVec target = rs.root_of_node(sigma.sigma[i]);
    for (int r = 0; r < n; ++r) m(r, i - 1) = target[r];
  }
  // must take the node-0 root along and preserve the form
  if (m * rs.root_of_node(0) != rs.root_of_node(sigma.sigma[0]))
    throw domain_error("linear_realization: permutation does not preserve the affine diagram");
  if (m.transposed() * rs.gram() * m != rs.gram())
    throw domain_error("linear_realization: image map is not Gram-orthogonal");
  return m;
}

AffineIsometry theta(const RootSystem& rs, const DiagramAut& sigma) {
  DynkinDiagram dd = build_diagram(rs, true);
  if (!preserves_cartan(dd, sigma))
    throw domain_error("theta: permutation does not preserve Cartan integers");
  RatMat lin = linear_realization(rs, sigma);
  int j = sigma.sigma[0];
  RatVec t = j == 0 ? RatVec(rs.rank()) : rs.coweight(j);
  return {lin, t};
}

std::optional<DiagramAut> node_permutation(const RootSystem& rs, const RatMat& m) {
  const int n = rs.rank();
  DiagramAut a;
  a.sigma.assign(n + 1, -1);
  for (int i = 0; i <= n; ++i) {
    RatVec img = m * rs.root_of_node(i);
    int hit = -1;
    for (int k = 0; k <= n; ++k)
      if (img == rs.root_of_node(k)) {
        hit = k;
        break;
      }
    if (hit < 0) return std::nullopt;
    a.sigma[i] = hit;
  }
  return a;
}

int AlcoveAutGroup::index_of_sigma(const DiagramAut& s) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].sigma == s) return static_cast<int>(i);
  return -1;
}

namespace {

// Node permutation of v_j, read off its matrix.
DiagramAut v_node_perm(const RootSystem& rs, int j) {
  WeylElement v = v_element(rs, j);
  auto p = node_permutation(rs, v.matrix);
  if (!p) throw domain_error("v_element does not permute the node roots");
  return *p;
}

std::vector<std::pair<std::string, DiagramAut>> generator_recipe(const RootSystem& rs) {
  const int n = rs.rank();
  const Family fam = rs.id().family;
  std::vector<std::pair<std::string, DiagramAut>> gens;
  DiagramAut phi0 = standard_involution(rs);
  switch (fam) {
    case Family::A:
      if (n == 1) {
        gens.push_back({"tau1", v_node_perm(rs, 1)});
      } else {
        gens.push_back({"tau0", phi0});
        gens.push_back({"tau1", aut_compose(v_node_perm(rs, 1), phi0)});
      }
      break;
    case Family::B:
      gens.push_back({"tau1", v_node_perm(rs, 1)});
      break;
    case Family::C:
      gens.push_back({"tau1", v_node_perm(rs, n)});
      break;
    case Family::D:
      if (n == 4) {
        // transposition chain 0-1-3-4 on the outer nodes: (34), (13), (01);
        // the third one is v_1 phi_0, the mixed reflection through node 0
        DiagramAut phi1 = aut_identity(n);
        std::swap(phi1.sigma[1], phi1.sigma[3]);
        gens.push_back({"tau0", phi0});
        gens.push_back({"tau1", phi1});
        gens.push_back({"tau2", aut_compose(v_node_perm(rs, 1), phi0)});
      } else if (n % 2 == 0) {
        gens.push_back({"tau0", phi0});
        gens.push_back({"tau1", v_node_perm(rs, n - 1)});
      } else {
        gens.push_back({"tau0", phi0});
        gens.push_back({"tau1", aut_compose(phi0, v_node_perm(rs, n))});
      }
      break;
    case Family::E:
      if (n == 6) {
        gens.push_back({"tau0", phi0});
        gens.push_back({"tau1", aut_compose(phi0, v_node_perm(rs, 6))});
      } else if (n == 7) {
        gens.push_back({"tau1", v_node_perm(rs, 7)});
      }
      break;
    default:
      break;  // E8, F4, G2: trivial
  }
  return gens;
}

}  // namespace

AlcoveAutGroup alcove_automorphism_group(const RootSystem& rs) {
  DynkinDiagram affine = build_diagram(rs, true);
  std::vector<DiagramAut> auts = diagram_automorphisms(affine);

  AlcoveAutGroup g;
  for (const auto& sigma : auts) {
    AlcoveAutElement e;
    e.sigma = sigma;
    e.iso = theta(rs, sigma);
    e.omega_j = sigma.sigma[0];
    e.d_part = e.omega_j == 0
                   ? sigma
                   : aut_compose(aut_inverse(v_node_perm(rs, e.omega_j)), sigma);
    if (e.d_part.sigma[0] != 0)
      throw domain_error("alcove automorphism: decomposition failed");
    g.elements.push_back(std::move(e));
  }

  const std::size_t m = g.elements.size();
  g.table.assign(m, std::vector<int>(m, -1));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      DiagramAut prod = aut_compose(g.elements[i].sigma, g.elements[j].sigma);
      g.table[i][j] = g.index_of_sigma(prod);
      if (g.table[i][j] < 0) throw domain_error("Aut(affine diagram) not closed");
      // the affine isometries must compose the same way
      if (compose(g.elements[i].iso, g.elements[j].iso) != g.elements[g.table[i][j]].iso)
        throw domain_error("theta is not multiplicative");
    }

  for (const auto& [name, sigma] : generator_recipe(rs)) {
    int idx = g.index_of_sigma(sigma);
    if (idx < 0) throw domain_error("generator not found in Aut(affine diagram)");
    g.generators.push_back({name, idx});
  }
  g.label = analyze_group(g.table).label;
  return g;
}

}  // namespace alcove
