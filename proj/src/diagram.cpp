#include "alcove/diagram.hpp"

#include <algorithm>
#include <map>

#include "alcove/error.hpp"

namespace alcove {

int DynkinDiagram::position_of(int node) const {
  auto it = std::find(nodes.begin(), nodes.end(), node);
  if (it == nodes.end()) throw domain_error("node not in diagram");
  return static_cast<int>(it - nodes.begin());
}

long DynkinDiagram::cartan_int(int node_i, int node_j) const {
  return cartan[position_of(node_i)][position_of(node_j)];
}

DynkinDiagram build_diagram(const RootSystem& rs, bool affine) {
  DynkinDiagram dd;
  const int n = rs.rank();
  for (int i = affine ? 0 : 1; i <= n; ++i) dd.nodes.push_back(i);
  dd.cartan.assign(dd.nodes.size(), std::vector<long>(dd.nodes.size(), 0));
  for (std::size_t a = 0; a < dd.nodes.size(); ++a) {
    RatVec ra = rs.root_of_node(dd.nodes[a]);
    for (std::size_t b = 0; b < dd.nodes.size(); ++b) {
      RatVec rb = rs.root_of_node(dd.nodes[b]);
      Rational c = rs.pair_coroot(ra, rb);
      if (den(c) != 1) throw domain_error("non-integral Cartan pairing");
      dd.cartan[a][b] = static_cast<long>(num(c));
    }
  }
  return dd;
}

DynkinDiagram remove_node(const DynkinDiagram& dd, int node) {
  DynkinDiagram out;
  for (int m : dd.nodes)
    if (m != node) out.nodes.push_back(m);
  out.cartan.assign(out.nodes.size(), std::vector<long>(out.nodes.size(), 0));
  for (std::size_t a = 0; a < out.nodes.size(); ++a)
    for (std::size_t b = 0; b < out.nodes.size(); ++b)
      out.cartan[a][b] = dd.cartan_int(out.nodes[a], out.nodes[b]);
  return out;
}

bool DiagramAut::is_identity() const {
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (sigma[i] != static_cast<int>(i)) return false;
  return true;
}

DiagramAut aut_identity(int n) {
  DiagramAut a;
  a.sigma.resize(n + 1);
  for (int i = 0; i <= n; ++i) a.sigma[i] = i;
  return a;
}

DiagramAut aut_compose(const DiagramAut& a, const DiagramAut& b) {
  DiagramAut r;
  r.sigma.resize(a.sigma.size());
  for (std::size_t i = 0; i < a.sigma.size(); ++i) r.sigma[i] = a.sigma[b.sigma[i]];
  return r;
}

DiagramAut aut_inverse(const DiagramAut& a) {
  DiagramAut r;
  r.sigma.resize(a.sigma.size());
  for (std::size_t i = 0; i < a.sigma.size(); ++i) r.sigma[a.sigma[i]] = static_cast<int>(i);
  return r;
}

bool preserves_cartan(const DynkinDiagram& dd, const DiagramAut& a) {
  for (int i : dd.nodes)
    for (int j : dd.nodes)
      if (dd.cartan_int(a.sigma[i], a.sigma[j]) != dd.cartan_int(i, j)) return false;
  return true;
}

namespace {

// Backtracking search for node bijections src -> dst preserving Cartan ints.
void search_isos(const DynkinDiagram& src, const DynkinDiagram& dst,
                 std::vector<int>& image, std::vector<bool>& used, std::size_t k,
                 std::vector<std::vector<int>>* all, bool* found_one) {
  if (found_one && *found_one) return;
  if (k == src.nodes.size()) {
    if (all) all->push_back(image);
    if (found_one) *found_one = true;
    return;
  }
  int i = src.nodes[k];
  for (std::size_t t = 0; t < dst.nodes.size(); ++t) {
    if (used[t]) continue;
    int cand = dst.nodes[t];
    bool ok = true;
    for (std::size_t p = 0; p < k && ok; ++p) {
      int ip = src.nodes[p];
      if (dst.cartan_int(image[ip], cand) != src.cartan_int(ip, i)) ok = false;
      else if (dst.cartan_int(cand, image[ip]) != src.cartan_int(i, ip)) ok = false;
    }
    if (!ok) continue;
    image[i] = cand;
    used[t] = true;
    search_isos(src, dst, image, used, k + 1, all, found_one);
    used[t] = false;
  }
}

}  // namespace

std::vector<DiagramAut> diagram_automorphisms(const DynkinDiagram& dd) {
  int maxnode = dd.nodes.empty() ? 0 : dd.nodes.back();
  std::vector<int> image(maxnode + 1, 0);
  std::vector<bool> used(dd.size(), false);
  std::vector<std::vector<int>> raw;
  search_isos(dd, dd, image, used, 0, &raw, nullptr);

  std::vector<DiagramAut> out;
  for (auto& im : raw) {
    DiagramAut a;
    a.sigma.assign(maxnode + 1, 0);
    for (int i = 0; i <= maxnode; ++i) a.sigma[i] = i;  // nodes outside dd are fixed
    for (int i : dd.nodes) a.sigma[i] = im[i];
    out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool diagrams_isomorphic(const DynkinDiagram& a, const DynkinDiagram& b) {
  if (a.size() != b.size()) return false;
  int maxnode = a.nodes.empty() ? 0 : a.nodes.back();
  std::vector<int> image(maxnode + 1, 0);
  std::vector<bool> used(b.size(), false);
  bool found = false;
  search_isos(a, b, image, used, 0, nullptr, &found);
  return found;
}

std::vector<ChamberAut> chamber_automorphisms(const RootSystem& rs) {
  const int n = rs.rank();
  // Coxeter labels m_ij from c_ij * c_ji: 0 -> 2, 1 -> 3, 2 -> 4, 3 -> 6.
  DynkinDiagram cox;
  for (int i = 1; i <= n; ++i) cox.nodes.push_back(i);
  cox.cartan.assign(n, std::vector<long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        cox.cartan[i][j] = 2;
        continue;
      }
      long p = static_cast<long>(num(rs.cartan()(i, j) * rs.cartan()(j, i)));
      cox.cartan[i][j] = p == 0 ? 2 : (p == 1 ? 3 : (p == 2 ? 4 : 6));
    }

  std::vector<ChamberAut> out;
  for (const auto& a : diagram_automorphisms(cox)) {
    ChamberAut c;
    c.perm = a.sigma;
    c.matrix = RatMat(n, n);
    for (int i = 1; i <= n; ++i) c.matrix(a.sigma[i] - 1, i - 1) = 1;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace alcove
