#include "alcove/json_io.hpp"

#include "alcove/error.hpp"

namespace alcove {

json to_json(const Rational& r) { return rat_to_string(r); }

json to_json(const RatVec& v) {
  json a = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) a.push_back(rat_to_string(v[i]));
  return a;
}

json to_json(const RatMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return rows;
}

RatVec ratvec_from_json(const json& j) {
  RatVec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    v[i] = rat_from_string(j[i].get<std::string>());
  return v;
}

RatMat ratmat_from_json(const json& j) {
  if (j.empty()) return RatMat();
  RatMat m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i)
    for (std::size_t k = 0; k < j[i].size(); ++k)
      m(i, k) = rat_from_string(j[i][k].get<std::string>());
  return m;
}

json to_json(const RootSystem& rs) {
  json j;
  j["family"] = std::string(1, family_letter(rs.id().family));
  j["rank"] = rs.rank();
  json cartan = json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    json row = json::array();
    for (int k = 0; k < rs.rank(); ++k)
      row.push_back(static_cast<long>(num(rs.cartan()(i, k))));
    cartan.push_back(row);
  }
  j["cartan"] = cartan;
  j["marks"] = rs.marks();
  j["minuscule"] = rs.minuscule();
  j["positive_root_count"] = rs.positive_roots().size();
  j["highest_root"] = to_json(rs.highest_root());
  json cw = json::array();
  for (int i = 1; i <= rs.rank(); ++i) cw.push_back(to_json(rs.coweight(i)));
  j["coweights"] = cw;
  return j;
}

json to_json(const AffineIsometry& a) {
  return {{"linear", to_json(a.linear)}, {"translation", to_json(a.translation)}};
}

AffineIsometry isometry_from_json(const json& j) {
  return {ratmat_from_json(j.at("linear")), ratvec_from_json(j.at("translation"))};
}

json to_json(const RootSystem& rs, const HalfSpace& h) {
  (void)rs;
  return {{"normal", to_json(h.normal)},
          {"offset", rat_to_string(h.offset)},
          {"sense", h.sense == Sense::le ? "<=" : ">="},
          {"tag", h.tag}};
}

json to_json(const RootSystem& rs, const HPolytope& p) {
  json hs = json::array();
  for (const auto& h : p.halfspaces) hs.push_back(to_json(rs, h));
  return {{"dim", p.dim}, {"halfspaces", hs}};
}

json to_json(const RootSystem& rs, const VPolytope& vp) {
  json j = to_json(rs, vp.source);
  json verts = json::array();
  for (const auto& v : vp.vertices) verts.push_back(to_json(v));
  j["vertices"] = verts;
  j["vertex_count"] = vp.vertices.size();
  return j;
}

json to_json(const FundamentalGroup& g) {
  json elems = json::array();
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    json e = to_json(g.elements[i]);
    e["vertex"] = g.vertex_index[i];
    elems.push_back(e);
  }
  return {{"order", g.elements.size()},
          {"label", g.label},
          {"elements", elems},
          {"table", g.table}};
}

json to_json(const AlcoveAutGroup& g) {
  json elems = json::array();
  for (const auto& e : g.elements) {
    elems.push_back({{"sigma", e.sigma.sigma},
                     {"omega", e.omega_j},
                     {"d_part", e.d_part.sigma},
                     {"isometry", to_json(e.iso)}});
  }
  json gens = json::object();
  for (const auto& [name, idx] : g.generators) gens[name] = idx;
  return {{"order", g.elements.size()},
          {"label", g.label},
          {"elements", elems},
          {"generators", gens},
          {"table", g.table}};
}

json to_json(const RootSystem& rs, const GroupAction& g, const StratificationReport& rep) {
  json witnesses = json::array();
  for (const auto& w : rep.witnesses) {
    json e = to_json(g.elements[w.element_index]);
    auto sigma = node_permutation(rs, g.elements[w.element_index].linear);
    json jw = {{"element", e},
               {"face", w.face_index},
               {"fixed_point", to_json(w.fixed_point)},
               {"moved_point", to_json(w.moved_point)}};
    if (sigma) jw["element_node_permutation"] = sigma->sigma;
    witnesses.push_back(jw);
  }
  return {{"stratified", rep.stratified},
          {"cap_hit", rep.cap_hit},
          {"face_count", rep.face_count},
          {"witnesses", witnesses}};
}

json to_json(const FundamentalDomainReport& rep) {
  json j = {{"fundamental", rep.fundamental},
            {"interiors_disjoint", rep.interiors_disjoint},
            {"volume_covers", rep.volume_covers},
            {"volume", rat_to_string(rep.vol_f)},
            {"ambient_volume", rat_to_string(rep.vol_ambient)}};
  if (!rep.interiors_disjoint) {
    j["overlapping_element"] = rep.overlapping_element;
    j["overlap_point"] = to_json(rep.overlap_point);
  }
  return j;
}

json group_fixture(const RootSystem& rs) {
  FundamentalGroup omega = fundamental_group(rs);
  AlcoveAutGroup aut = alcove_automorphism_group(rs);
  json j;
  j["type"] = rs.id().name();
  j["omega"] = {{"order", omega.elements.size()},
                {"label", omega.label},
                {"table", omega.table}};
  json vperms = json::array();
  for (std::size_t i = 0; i < omega.elements.size(); ++i) {
    auto p = node_permutation(rs, omega.elements[i].linear);
    vperms.push_back({{"vertex", omega.vertex_index[i]}, {"sigma", p ? p->sigma : std::vector<int>{}}});
  }
  j["omega"]["linear_parts"] = vperms;
  json gens = json::object();
  for (const auto& [name, idx] : aut.generators)
    gens[name] = {{"sigma", aut.elements[idx].sigma.sigma},
                  {"omega", aut.elements[idx].omega_j},
                  {"d_part", aut.elements[idx].d_part.sigma}};
  json sigmas = json::array();
  for (const auto& e : aut.elements) sigmas.push_back(e.sigma.sigma);
  j["aut_alcove"] = {{"order", aut.elements.size()},
                     {"label", aut.label},
                     {"elements", sigmas},
                     {"generators", gens},
                     {"table", aut.table}};
  json chamber = json::array();
  for (const auto& c : chamber_automorphisms(rs)) chamber.push_back(c.perm);
  j["chamber"] = {{"order", chamber.size()}, {"perms", chamber}};
  return j;
}

}  // namespace alcove
