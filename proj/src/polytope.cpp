#include "alcove/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "alcove/error.hpp"

namespace alcove {

HPolytope alcove_polytope(const RootSystem& rs) {
  HPolytope p;
  p.dim = rs.rank();
  for (int i = 1; i <= rs.rank(); ++i)
    p.halfspaces.push_back(
        {rs.simple_root(i), Rational(0), Sense::ge, "H_" + std::to_string(i)});
  p.halfspaces.push_back({rs.highest_root(), Rational(1), Sense::le, "H_0"});
  return p;
}

HPolytope komrakov_premet(const RootSystem& rs) {
  HPolytope p = alcove_polytope(rs);
  for (int j : rs.minuscule())
    p.halfspaces.push_back({rs.highest_root() + rs.simple_root(j), Rational(1),
                            Sense::le, "H_" + std::to_string(j) + "^0"});
  return p;
}

std::vector<RatVec> kp_vertices_closed_form(const RootSystem& rs) {
  std::vector<RatVec> out;
  const auto& J = rs.minuscule();
  for (int i = 1; i <= rs.rank(); ++i)
    if (!rs.is_minuscule(i)) out.push_back(rs.coweight(i) / Rational(rs.mark(i)));
  for (std::size_t mask = 0; mask < (std::size_t(1) << J.size()); ++mask) {
    RatVec v(rs.rank());
    long count = 0;
    for (std::size_t b = 0; b < J.size(); ++b)
      if (mask & (std::size_t(1) << b)) {
        v = v + rs.coweight(J[b]);
        ++count;
      }
    out.push_back(v / Rational(count + 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool satisfies(const RootSystem& rs, const HalfSpace& h, const RatVec& x) {
  Rational v = rs.inner(h.normal, x);
  return h.sense == Sense::le ? v <= h.offset : v >= h.offset;
}

bool contains(const RootSystem& rs, const HPolytope& p, const RatVec& x) {
  for (const auto& h : p.halfspaces)
    if (!satisfies(rs, h, x)) return false;
  return true;
}

LinConstraint to_constraint(const RootSystem& rs, const HalfSpace& h, bool strict) {
  RatVec paired = rs.gram() * h.normal;
  Rel rel = h.sense == Sense::le ? (strict ? Rel::lt : Rel::le)
                                 : (strict ? Rel::gt : Rel::ge);
  return {paired, rel, h.offset};
}

namespace {

bool is_bounded(const RootSystem& rs, const HPolytope& p) {
  const std::size_t n = p.dim;
  // recession cone: homogeneous versions of all constraints
  std::vector<LinConstraint> cone;
  for (const auto& h : p.halfspaces) {
    LinConstraint c = to_constraint(rs, h, false);
    c.rhs = 0;
    cone.push_back(c);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (int s : {1, -1}) {
      auto cs = cone;
      RatVec e = RatVec::unit(n, k);
      cs.push_back({e, Rel::eq, Rational(s)});
      if (lp_feasible(cs, n).feasible) return false;  // unbounded direction
    }
  }
  return true;
}

}  // namespace

VPolytope enumerate_vertices(const RootSystem& rs, const HPolytope& p) {
  const std::size_t n = p.dim;
  const std::size_t f = p.halfspaces.size();
  if (f < n) throw domain_error("enumerate_vertices: unbounded polyhedron");
  if (!is_bounded(rs, p)) throw domain_error("enumerate_vertices: unbounded polyhedron");

  std::vector<RatVec> paired;
  for (const auto& h : p.halfspaces) paired.push_back(rs.gram() * h.normal);

  std::set<std::vector<Rational>> found;
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  for (;;) {
    RatMat a(n, n);
    RatVec b(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) a(r, c) = paired[pick[r]][c];
      b[r] = p.halfspaces[pick[r]].offset;
    }
    auto sol = solve_linear(a, b);
    if (sol.status == LinearSolve::Status::unique && contains(rs, p, sol.solution))
      found.insert(sol.solution.coords());

    // next n-combination of {0..f-1}
    std::size_t i = n;
    while (i-- > 0) {
      if (pick[i] != i + f - n) {
        ++pick[i];
        for (std::size_t j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
        break;
      }
      if (i == 0) goto done;
    }
  }
done:
  VPolytope vp;
  vp.source = p;
  for (const auto& c : found) vp.vertices.push_back(RatVec(c));
  vp.incidence.assign(vp.vertices.size(), std::vector<bool>(f, false));
  for (std::size_t v = 0; v < vp.vertices.size(); ++v)
    for (std::size_t h = 0; h < f; ++h)
      vp.incidence[v][h] = paired[h].dot(vp.vertices[v]) == p.halfspaces[h].offset;
  return vp;
}

namespace {

int affine_dim(const std::vector<RatVec>& pts) {
  if (pts.empty()) return -1;
  if (pts.size() == 1) return 0;
  RatMat m(pts.size() - 1, pts[0].size());
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts[0].size(); ++j) m(i - 1, j) = pts[i][j] - pts[0][j];
  return static_cast<int>(rank(m));
}

}  // namespace

std::vector<int> bounding_halfspaces(const RootSystem& rs, const VPolytope& vp) {
  (void)rs;
  std::vector<int> out;
  const int n = vp.source.dim;
  for (std::size_t h = 0; h < vp.source.halfspaces.size(); ++h) {
    std::vector<RatVec> pts;
    for (std::size_t v = 0; v < vp.vertices.size(); ++v)
      if (vp.incidence[v][h]) pts.push_back(vp.vertices[v]);
    if (affine_dim(pts) == n - 1) out.push_back(static_cast<int>(h));
  }
  return out;
}

std::vector<std::string> bounding_tags(const RootSystem& rs, const VPolytope& vp) {
  std::vector<std::string> tags;
  for (int h : bounding_halfspaces(rs, vp)) tags.push_back(vp.source.halfspaces[h].tag);
  std::sort(tags.begin(), tags.end());
  return tags;
}

BalancedRoot balanced_root(const RootSystem& rs, const DiagramAut& phi,
                           const std::vector<int>& plus, const std::vector<int>& minus) {
  if (plus.empty()) throw domain_error("balanced root: empty support");
  if (plus.size() != minus.size())
    throw domain_error("balanced root: support halves differ in size");
  std::set<int> sp(plus.begin(), plus.end()), sm(minus.begin(), minus.end());
  for (int i : sp)
    if (sm.count(i)) throw domain_error("balanced root: support halves intersect");
  if (aut_compose(phi, phi) != aut_identity(rs.rank()))
    throw domain_error("balanced root: involution required");
  for (int i : sp)
    if (!sm.count(phi(i)))
      throw domain_error("balanced root: involution does not swap the halves");

  BalancedRoot br;
  br.plus = plus;
  br.minus = minus;
  std::sort(br.plus.begin(), br.plus.end());
  std::sort(br.minus.begin(), br.minus.end());
  br.vector = RatVec(rs.rank());
  for (int i : plus) br.vector[i - 1] += 1;
  for (int i : minus) br.vector[i - 1] -= 1;
  if (br.vector.is_zero()) throw domain_error("balanced root: zero vector");

  // phi(v) = -v, exactly
  RatVec image(rs.rank());
  for (int i = 1; i <= rs.rank(); ++i)
    if (br.vector[i - 1] != 0) image[phi(i) - 1] += br.vector[i - 1];
  if (image != -br.vector) throw domain_error("balanced root: phi(v) != -v");

  br.minuscule_support = true;
  for (int i : plus)
    if (!rs.is_minuscule(i)) br.minuscule_support = false;
  for (int i : minus)
    if (!rs.is_minuscule(i)) br.minuscule_support = false;
  return br;
}

HPolytope sliced(const HPolytope& p, const RootSystem& rs, const RatVec& v,
                 const std::string& tag) {
  (void)rs;
  HPolytope out = p;
  out.halfspaces.push_back({v, Rational(0), Sense::ge, tag});
  return out;
}

DiagramAut standard_involution(const RootSystem& rs) {
  const int n = rs.rank();
  DiagramAut a = aut_identity(n);
  switch (rs.id().family) {
    case Family::A:
      if (n >= 2)
        for (int i = 1; i <= n; ++i) a.sigma[i] = n + 1 - i;
      break;
    case Family::D:
      std::swap(a.sigma[n - 1], a.sigma[n]);
      break;
    case Family::E:
      if (n == 6) {
        std::swap(a.sigma[1], a.sigma[6]);
        std::swap(a.sigma[3], a.sigma[5]);
      }
      break;
    default:
      break;
  }
  return a;
}

std::vector<BalancedRoot> standard_balanced_roots(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<BalancedRoot> out;
  switch (rs.id().family) {
    case Family::A: {
      if (n < 2) break;
      std::vector<int> plus, minus;
      for (int i = 1; i <= n / 2; ++i) {
        plus.push_back(i);
        minus.push_back(n + 1 - i);
      }
      out.push_back(balanced_root(rs, standard_involution(rs), plus, minus));
      break;
    }
    case Family::D: {
      out.push_back(balanced_root(rs, standard_involution(rs), {n - 1}, {n}));
      if (n == 4) {
        DiagramAut phi1 = aut_identity(n);
        std::swap(phi1.sigma[1], phi1.sigma[3]);
        out.push_back(balanced_root(rs, phi1, {1}, {3}));
      }
      break;
    }
    case Family::E:
      if (n == 6)
        out.push_back(balanced_root(rs, standard_involution(rs), {1}, {6}));
      break;
    default:
      break;
  }
  return out;
}

namespace {

void require_interior(const RootSystem& rs, const HPolytope& p, const std::string& what) {
  std::vector<LinConstraint> cs;
  for (const auto& h : p.halfspaces) cs.push_back(to_constraint(rs, h, true));
  if (!lp_feasible(cs, p.dim).feasible)
    throw domain_error(what + ": sliced polytope has empty interior");
}

}  // namespace

HPolytope fundamental_polytope(const RootSystem& rs) {
  HPolytope p = komrakov_premet(rs);
  int k = 0;
  for (const auto& br : standard_balanced_roots(rs)) {
    p = sliced(p, rs, br.vector, "S_v" + std::to_string(k));
    ++k;
  }
  if (k > 0) require_interior(rs, p, "fundamental_polytope");
  return p;
}

HPolytope fundamental_polytope_with_support(const RootSystem& rs,
                                            const std::vector<int>& plus,
                                            const std::vector<int>& minus) {
  DiagramAut phi = standard_involution(rs);
  if (phi.is_identity())
    throw domain_error("fundamental_polytope_with_support: Aut(D) is trivial");
  BalancedRoot br = balanced_root(rs, phi, plus, minus);
  HPolytope p = sliced(komrakov_premet(rs), rs, br.vector, "S_v0");
  require_interior(rs, p, "fundamental_polytope_with_support");
  return p;
}

std::uint64_t vertex_count_formula_A(int n) {
  if (n < 2) throw domain_error("vertex_count_formula_A needs n >= 2");
  int k = n / 2;
  std::uint64_t binom = 1;
  for (int i = 1; i <= k; ++i) binom = binom * (k + i) / i;  // C(2k, k)
  std::uint64_t base = std::uint64_t(1) << (n - 1);
  return n % 2 == 0 ? base + binom / 2 : base + binom;
}

FaceLattice face_lattice(const RootSystem& rs, const VPolytope& vp, std::size_t cap) {
  (void)rs;
  FaceLattice fl;
  const std::size_t nv = vp.vertices.size();
  const std::size_t nh = vp.source.halfspaces.size();
  if (nv == 0) return fl;

  auto active_of = [&](const std::vector<int>& vs) {
    std::vector<int> act;
    for (std::size_t h = 0; h < nh; ++h) {
      bool all = true;
      for (int v : vs)
        if (!vp.incidence[v][h]) {
          all = false;
          break;
        }
      if (all) act.push_back(static_cast<int>(h));
    }
    return act;
  };
  auto dim_of = [&](const std::vector<int>& vs) {
    std::vector<RatVec> pts;
    for (int v : vs) pts.push_back(vp.vertices[v]);
    return affine_dim(pts);
  };

  std::map<std::vector<int>, int> index_of;
  std::vector<int> top(nv);
  for (std::size_t v = 0; v < nv; ++v) top[v] = static_cast<int>(v);
  fl.faces.push_back({top, active_of(top), dim_of(top)});
  fl.children.emplace_back();
  index_of[top] = 0;

  for (std::size_t qi = 0; qi < fl.faces.size(); ++qi) {
    // copy, faces vector reallocates
    const std::vector<int> verts = fl.faces[qi].vertex_ids;
    const std::vector<int> act = fl.faces[qi].active;
    std::set<int> actset(act.begin(), act.end());
    std::set<int> kids;
    for (std::size_t h = 0; h < nh; ++h) {
      if (actset.count(static_cast<int>(h))) continue;
      std::vector<int> sub;
      for (int v : verts)
        if (vp.incidence[v][h]) sub.push_back(v);
      if (sub.empty() || sub.size() == verts.size()) continue;
      auto it = index_of.find(sub);
      int idx;
      if (it != index_of.end()) {
        idx = it->second;
      } else {
        if (fl.faces.size() >= cap) {
          fl.cap_hit = true;
          return fl;
        }
        idx = static_cast<int>(fl.faces.size());
        fl.faces.push_back({sub, active_of(sub), dim_of(sub)});
        fl.children.emplace_back();
        index_of[sub] = idx;
      }
      kids.insert(idx);
    }
    fl.children[qi].assign(kids.begin(), kids.end());
  }
  return fl;
}

int regular_face(const RootSystem& rs, const VPolytope& vp, const FaceLattice& fl,
                 const RatVec& x) {
  if (!contains(rs, vp.source, x)) throw domain_error("regular_face: point outside polytope");
  const std::size_t nh = vp.source.halfspaces.size();
  std::vector<bool> tight(nh, false);
  for (std::size_t h = 0; h < nh; ++h)
    tight[h] = rs.inner(vp.source.halfspaces[h].normal, x) == vp.source.halfspaces[h].offset;
  std::vector<int> verts;
  for (std::size_t v = 0; v < vp.vertices.size(); ++v) {
    bool ok = true;
    for (std::size_t h = 0; h < nh && ok; ++h)
      if (tight[h] && !vp.incidence[v][h]) ok = false;
    if (ok) verts.push_back(static_cast<int>(v));
  }
  for (std::size_t i = 0; i < fl.faces.size(); ++i)
    if (fl.faces[i].vertex_ids == verts) return static_cast<int>(i);
  throw domain_error("regular_face: face not in lattice");
}

Rational simplex_volume(const std::vector<RatVec>& pts) {
  if (pts.empty()) throw domain_error("simplex_volume: no points");
  const std::size_t n = pts.size() - 1;
  if (n != pts[0].size()) throw domain_error("simplex_volume: not a full simplex");
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = pts[i + 1][j] - pts[0][j];
  Rational d = abs_of(det(m));
  Rational fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= Rational(i);
  return d / fact;
}

namespace {

// First-vertex triangulation of each face, memoized over the lattice.
void triangulate(const FaceLattice& fl, int fi,
                 std::map<int, std::vector<std::vector<int>>>& memo) {
  if (memo.count(fi)) return;
  const Face& f = fl.faces[fi];
  std::vector<std::vector<int>> out;
  if (f.dim == 0) {
    out.push_back({f.vertex_ids[0]});
    memo[fi] = std::move(out);
    return;
  }
  int anchor = f.vertex_ids[0];  // vertex ids are sorted; deterministic
  for (int c : fl.children[fi]) {
    const Face& g = fl.faces[c];
    if (g.dim != f.dim - 1) continue;
    if (std::find(g.vertex_ids.begin(), g.vertex_ids.end(), anchor) != g.vertex_ids.end())
      continue;
    triangulate(fl, c, memo);
    for (const auto& s : memo[c]) {
      std::vector<int> simplex;
      simplex.push_back(anchor);
      simplex.insert(simplex.end(), s.begin(), s.end());
      out.push_back(std::move(simplex));
    }
  }
  memo[fi] = std::move(out);
}

}  // namespace

Rational volume(const RootSystem& rs, const VPolytope& vp) {
  FaceLattice fl = face_lattice(rs, vp);
  if (fl.cap_hit) throw domain_error("volume: face cap exceeded");
  if (fl.faces.empty() || fl.faces[0].dim != vp.source.dim)
    throw domain_error("volume: polytope is not full-dimensional");
  std::map<int, std::vector<std::vector<int>>> memo;
  triangulate(fl, 0, memo);
  Rational total = 0;
  for (const auto& s : memo[0]) {
    std::vector<RatVec> pts;
    for (int v : s) pts.push_back(vp.vertices[v]);
    total += simplex_volume(pts);
  }
  return total;
}

}  // namespace alcove
