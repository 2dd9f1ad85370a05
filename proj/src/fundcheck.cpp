#include "alcove/fundcheck.hpp"

#include <algorithm>
#include <set>

#include "alcove/error.hpp"

namespace alcove {

GroupAction GroupAction::create(const RootSystem& rs, std::vector<AffineIsometry> elems,
                                const HPolytope& ambient) {
  GroupAction g;
  g.elements = std::move(elems);
  g.ambient = ambient;
  g.ambient_v = enumerate_vertices(rs, ambient);
  if (g.elements.empty() || g.elements[0] != AffineIsometry::identity(rs.rank()))
    throw domain_error("group action: identity must come first");

  std::set<std::vector<Rational>> ambient_verts;
  for (const auto& v : g.ambient_v.vertices) ambient_verts.insert(v.coords());
  for (const auto& e : g.elements) {
    if (e.linear.transposed() * rs.gram() * e.linear != rs.gram())
      throw domain_error("group action: linear part is not Gram-orthogonal");
    std::set<std::vector<Rational>> image;
    for (const auto& v : g.ambient_v.vertices) image.insert(e.apply(v).coords());
    if (image != ambient_verts)
      throw domain_error("group action: element does not stabilize the ambient region");
  }
  for (std::size_t i = 0; i < g.elements.size(); ++i)
    for (std::size_t j = 0; j < g.elements.size(); ++j) {
      AffineIsometry p = compose(g.elements[i], g.elements[j]);
      bool found = false;
      for (const auto& e : g.elements)
        if (e == p) {
          found = true;
          break;
        }
      if (!found) throw domain_error("group action: not closed under composition");
    }
  return g;
}

GroupAction omega_action(const RootSystem& rs) {
  FundamentalGroup fg = fundamental_group(rs);
  return GroupAction::create(rs, fg.elements, alcove_polytope(rs));
}

GroupAction alcove_aut_action(const RootSystem& rs) {
  AlcoveAutGroup g = alcove_automorphism_group(rs);
  std::vector<AffineIsometry> elems;
  elems.push_back(AffineIsometry::identity(rs.rank()));
  for (const auto& e : g.elements)
    if (!e.sigma.is_identity()) elems.push_back(e.iso);
  return GroupAction::create(rs, std::move(elems), alcove_polytope(rs));
}

HalfSpace transform_halfspace(const RootSystem& rs, const AffineIsometry& g,
                              const HalfSpace& h) {
  // y in gF <=> g^{-1} y in F; with M Gram-orthogonal,
  // (a, M^{-1}(y - t)) = (M a, y) - (M a, t).
  RatVec ma = g.linear * h.normal;
  return {ma, h.offset + rs.inner(ma, g.translation), h.sense, h.tag + "'"};
}

FundamentalDomainReport is_fundamental_domain(const RootSystem& rs, const HPolytope& f,
                                              const GroupAction& g) {
  FundamentalDomainReport rep;
  VPolytope fv = enumerate_vertices(rs, f);
  for (const auto& v : fv.vertices)
    if (!contains(rs, g.ambient, v))
      throw domain_error("is_fundamental_domain: F is not inside the ambient region");

  rep.interiors_disjoint = true;
  for (std::size_t gi = 1; gi < g.elements.size(); ++gi) {
    std::vector<LinConstraint> cs;
    for (const auto& h : f.halfspaces) cs.push_back(to_constraint(rs, h, true));
    for (const auto& h : f.halfspaces)
      cs.push_back(to_constraint(rs, transform_halfspace(rs, g.elements[gi], h), true));
    auto feas = lp_feasible(cs, f.dim);
    if (feas.feasible) {
      rep.interiors_disjoint = false;
      rep.overlapping_element = static_cast<int>(gi);
      rep.overlap_point = feas.witness;
      break;
    }
  }

  rep.vol_f = volume(rs, fv);
  rep.vol_ambient = volume(rs, g.ambient_v);
  rep.volume_covers = rep.vol_f * Rational(g.elements.size()) == rep.vol_ambient;
  rep.fundamental = rep.interiors_disjoint && rep.volume_covers;
  return rep;
}

std::vector<int> stabilizer(const GroupAction& g, const RatVec& x) {
  std::vector<int> out;
  for (std::size_t i = 0; i < g.elements.size(); ++i)
    if (g.elements[i].apply(x) == x) out.push_back(static_cast<int>(i));
  return out;
}

AffineSubspace fixed_space(const AffineIsometry& g) {
  const std::size_t n = g.translation.size();
  RatMat a = g.linear - RatMat::identity(n);
  return solve_affine(a, -g.translation);
}

ExtStabilizer ext_stabilizer_decomposition(const RootSystem& rs, const RatVec& x) {
  auto kac = kac_coordinates(rs, x);
  for (const auto& b : kac)
    if (b < 0) throw domain_error("ext_stabilizer_decomposition: point outside the alcove");
  ExtStabilizer out;
  GroupAction omega = omega_action(rs);
  out.omega_elements = stabilizer(omega, x);
  for (int i = 0; i <= rs.rank(); ++i)
    if (kac[i] == 0) out.walls.push_back(i);
  return out;
}

namespace {

// Does relint(face) meet the affine set {x : rows . x = rhs}? The active
// equalities of the face cut out aff(face) exactly, so the combined system is
// solved first and only the strict facet conditions go to the LP.
std::optional<RatVec> relint_meets(const RootSystem& rs, const VPolytope& vp,
                                   const Face& face, const std::vector<RatVec>& rows,
                                   const std::vector<Rational>& rhs) {
  const std::size_t n = vp.source.dim;
  std::set<int> active(face.active.begin(), face.active.end());
  std::vector<RatVec> paired;
  for (const auto& h : vp.source.halfspaces) paired.push_back(rs.gram() * h.normal);

  RatMat a(active.size() + rows.size(), n);
  RatVec b(active.size() + rows.size());
  std::size_t r = 0;
  for (int hi : active) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = paired[hi][c];
    b[r] = vp.source.halfspaces[hi].offset;
    ++r;
  }
  for (std::size_t k = 0; k < rows.size(); ++k, ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = rows[k][c];
    b[r] = rhs[k];
  }
  AffineSubspace s = solve_affine(a, b);
  if (s.empty) return std::nullopt;

  auto strict_ok = [&](const RatVec& x) {
    for (std::size_t h = 0; h < vp.source.halfspaces.size(); ++h) {
      if (active.count(static_cast<int>(h))) continue;
      Rational v = paired[h].dot(x);
      const auto& hs = vp.source.halfspaces[h];
      if (hs.sense == Sense::le ? v >= hs.offset : v <= hs.offset) return false;
    }
    return true;
  };

  if (s.dim() == 0) {
    if (strict_ok(s.point)) return s.point;
    return std::nullopt;
  }

  // LP over the subspace parameters with a gap variable for strictness.
  std::vector<LinConstraint> cs;
  for (std::size_t h = 0; h < vp.source.halfspaces.size(); ++h) {
    if (active.count(static_cast<int>(h))) continue;
    const auto& hs = vp.source.halfspaces[h];
    RatVec coeff(s.dim());
    for (std::size_t k = 0; k < s.dim(); ++k) coeff[k] = paired[h].dot(s.basis[k]);
    Rational c0 = paired[h].dot(s.point);
    cs.push_back({coeff, hs.sense == Sense::le ? Rel::lt : Rel::gt, hs.offset - c0});
  }
  auto feas = lp_feasible(cs, s.dim());
  if (!feas.feasible) return std::nullopt;
  RatVec x = s.point;
  for (std::size_t k = 0; k < s.dim(); ++k) x = x + s.basis[k] * feas.witness[k];
  return x;
}

// A relint point of the face moved by g; the weighted barycenters used here
// affinely span aff(face), so they cannot all be fixed when aff(face) is not
// inside Fix(g).
RatVec relint_point_moved(const VPolytope& vp, const Face& face, const AffineIsometry& g) {
  const std::size_t k = face.vertex_ids.size();
  for (std::size_t skew = 0; skew <= k; ++skew) {
    RatVec p(vp.source.dim);
    Rational total = 0;
    for (std::size_t i = 0; i < k; ++i) {
      Rational w = 1 + Rational(skew == i + 1 ? 1 : 0);
      p = p + vp.vertices[face.vertex_ids[i]] * w;
      total += w;
    }
    p = p / total;
    if (g.apply(p) != p) return p;
  }
  throw domain_error("relint_point_moved: no moved point found");
}

}  // namespace

StratificationReport stratified_centralizers(const RootSystem& rs, const GroupAction& g,
                                             const HPolytope& f, std::size_t face_cap) {
  StratificationReport rep;
  VPolytope vp = enumerate_vertices(rs, f);
  FaceLattice fl = face_lattice(rs, vp, face_cap);
  rep.face_count = fl.faces.size();
  if (fl.cap_hit) {
    rep.cap_hit = true;
    rep.stratified = false;
    return rep;
  }

  for (std::size_t gi = 1; gi < g.elements.size(); ++gi) {
    const AffineIsometry& el = g.elements[gi];
    AffineSubspace fix = fixed_space(el);
    if (fix.empty) continue;  // fixes nothing, cannot break stratification

    std::vector<bool> vertex_fixed(vp.vertices.size());
    for (std::size_t v = 0; v < vp.vertices.size(); ++v)
      vertex_fixed[v] = el.apply(vp.vertices[v]) == vp.vertices[v];

    RatMat fixrows = el.linear - RatMat::identity(rs.rank());
    std::vector<RatVec> rows;
    std::vector<Rational> rhs;
    for (int r = 0; r < rs.rank(); ++r) {
      rows.push_back(fixrows.row(r));
      rhs.push_back(-el.translation[r]);
    }

    for (std::size_t fi = 0; fi < fl.faces.size(); ++fi) {
      const Face& face = fl.faces[fi];
      bool all_fixed = true;
      for (int v : face.vertex_ids)
        if (!vertex_fixed[v]) {
          all_fixed = false;
          break;
        }
      if (all_fixed) continue;  // aff(face) inside Fix(g): stabilizer constant

      auto hit = relint_meets(rs, vp, face, rows, rhs);
      if (!hit) continue;
      rep.stratified = false;
      rep.witnesses.push_back({static_cast<int>(fi), static_cast<int>(gi), *hit,
                               relint_point_moved(vp, face, el)});
    }
  }
  return rep;
}

std::vector<Rational> kac_coordinates(const RootSystem& rs, const RatVec& x) {
  std::vector<Rational> b(rs.rank() + 1);
  b[0] = 1 - rs.inner(rs.highest_root(), x);
  for (int i = 1; i <= rs.rank(); ++i) b[i] = rs.inner(rs.simple_root(i), x);
  return b;
}

bool waff_stratified(const RootSystem& rs) {
  HPolytope a = alcove_polytope(rs);
  VPolytope vp = enumerate_vertices(rs, a);
  FaceLattice fl = face_lattice(rs, vp);

  // Stabilizers in the affine Weyl group are generated by the reflections in
  // the walls through the point, so constancy of the active wall set on each
  // relative interior is exactly the stratified property.
  auto active_at = [&](const RatVec& x) {
    std::vector<int> act;
    for (std::size_t h = 0; h < a.halfspaces.size(); ++h)
      if (rs.inner(a.halfspaces[h].normal, x) == a.halfspaces[h].offset)
        act.push_back(static_cast<int>(h));
    return act;
  };
  for (const auto& face : fl.faces) {
    const std::size_t k = face.vertex_ids.size();
    for (std::size_t skew = 0; skew <= k; ++skew) {
      RatVec p(rs.rank());
      Rational total = 0;
      for (std::size_t i = 0; i < k; ++i) {
        Rational w = 1 + Rational(skew == i + 1 ? 1 : 0);
        p = p + vp.vertices[face.vertex_ids[i]] * w;
        total += w;
      }
      p = p / total;
      if (active_at(p) != face.active) return false;
    }
  }
  return true;
}

bool wext_stratified_kp(const RootSystem& rs, std::size_t face_cap) {
  HPolytope kp = komrakov_premet(rs);
  GroupAction omega = omega_action(rs);
  StratificationReport omega_rep = stratified_centralizers(rs, omega, kp, face_cap);
  if (omega_rep.cap_hit) throw domain_error("wext_stratified_kp: face cap exceeded");

  // The affine factor of the stabilizer is read off the walls through the
  // point; walls are among the defining half-spaces of the KP polytope, so
  // their activity is constant on relative interiors. Verified mechanically.
  VPolytope vp = enumerate_vertices(rs, kp);
  FaceLattice fl = face_lattice(rs, vp, face_cap);
  if (fl.cap_hit) throw domain_error("wext_stratified_kp: face cap exceeded");
  bool walls_constant = true;
  for (std::size_t fi = 0; fi < fl.faces.size() && walls_constant; ++fi) {
    const Face& face = fl.faces[fi];
    std::set<int> active(face.active.begin(), face.active.end());
    for (int h = 0; h <= rs.rank(); ++h) {  // the alcove walls come first
      if (active.count(h)) continue;
      RatVec paired = rs.gram() * kp.halfspaces[h].normal;
      std::vector<RatVec> rows{paired};
      std::vector<Rational> rhs{kp.halfspaces[h].offset};
      if (relint_meets(rs, vp, face, rows, rhs)) {
        walls_constant = false;
        break;
      }
    }
  }
  return omega_rep.stratified && walls_constant;
}

}  // namespace alcove
