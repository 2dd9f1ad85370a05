// Command-line front end: exact computations on fundamental alcoves, their
// isometry groups, and the associated fundamental polytopes.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "alcove/error.hpp"
#include "alcove/json_io.hpp"

using namespace alcove;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitClaimFailed = 2;
constexpr int kExitUsage = 64;

std::size_t face_cap_from_env() {
  const char* v = std::getenv("ALCOVE_FACE_CAP");
  if (!v) return 1000000;
  return static_cast<std::size_t>(std::strtoull(v, nullptr, 10));
}

struct Output {
  std::string format = "pretty";
  std::string path;

  // flat key\tvalue lines; nested values inline as json
  static std::string doc_to_tsv(const json& doc) {
    std::ostringstream os;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      os << it.key() << '\t';
      if (it.value().is_string())
        os << it.value().get<std::string>();
      else
        os << it.value().dump();
      os << '\n';
    }
    return os.str();
  }

  void emit(const json& doc, const std::string& pretty) const {
    std::ostringstream body;
    if (format == "json")
      body << doc.dump(2) << "\n";
    else if (format == "tsv")
      body << doc_to_tsv(doc);
    else
      body << pretty;
    if (path.empty())
      std::cout << body.str();
    else
      std::ofstream(path) << body.str();
  }
};

RootSystem build_system(const std::string& family, int rank) {
  if (family.size() != 1) throw domain_error("family must be one letter A..G");
  return RootSystem::build({family_from_letter(family[0]), rank});
}

std::string pretty_vec(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rat_to_string(v[i]);
  }
  return s + ")";
}

std::string pretty_kac(const RootSystem& rs, const RatVec& x) {
  auto b = kac_coordinates(rs, x);
  std::string s = "[";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) s += ", ";
    s += rat_to_string(b[i]);
  }
  return s + "]";
}

std::string pretty_vertices(const RootSystem& rs, const VPolytope& vp) {
  std::ostringstream os;
  os << vp.vertices.size() << " vertices (alpha-coordinates | Kac coordinates):\n";
  for (const auto& v : vp.vertices)
    os << "  " << pretty_vec(v) << "  |  " << pretty_kac(rs, v) << "\n";
  return os.str();
}

// "1,2:-4,-5" or "1,2,-4,-5": signed indices, ':' starts the minus half.
void parse_support(const std::string& s, std::vector<int>& plus, std::vector<int>& minus) {
  int sign = 1, value = 0;
  bool have = false;
  auto flush = [&]() {
    if (have) (sign > 0 ? plus : minus).push_back(value);
    value = 0;
    have = false;
    sign = sign < 0 ? -1 : 1;  // '-' applies to one number; ':' is sticky
  };
  bool sticky_minus = false;
  for (char c : s) {
    if (c >= '0' && c <= '9') {
      value = value * 10 + (c - '0');
      have = true;
    } else {
      flush();
      if (c == '-') sign = -1;
      if (c == ':') sticky_minus = true;
      if (sticky_minus) sign = -1;
    }
  }
  flush();
}

json polytope_doc(const RootSystem& rs, const HPolytope& p) {
  VPolytope vp = enumerate_vertices(rs, p);
  json j = to_json(rs, vp);
  j["bounding"] = bounding_tags(rs, vp);
  j["volume"] = rat_to_string(volume(rs, vp));
  return j;
}

int run_sweep(const std::string& family, int lo, int hi, const Output& out) {
  json rows = json::array();
  std::ostringstream pretty;
  pretty << "type\t|Omega|\t|Aut(D)|\t|Aut(A)|\t|vert K|\t|vert L|\tfund\tstrat(Omega,K)\n";
  for (int n = lo; n <= hi; ++n) {
    RootSystemId id{family_from_letter(family[0]), n};
    if (!id.valid()) throw domain_error("invalid rank for family: " + id.name());
    RootSystem rs = RootSystem::build(id);
    AlcoveAutGroup aut = alcove_automorphism_group(rs);
    FundamentalGroup omega = fundamental_group(rs);
    std::size_t dcount = diagram_automorphisms(build_diagram(rs, false)).size();
    VPolytope kp = enumerate_vertices(rs, komrakov_premet(rs));
    VPolytope fp = enumerate_vertices(rs, fundamental_polytope(rs));
    json row;
    row["type"] = id.name();
    row["omega_order"] = omega.elements.size();
    row["omega_label"] = omega.label;
    row["aut_d_order"] = dcount;
    row["aut_alcove_order"] = aut.elements.size();
    row["aut_alcove_label"] = aut.label;
    row["kp_vertices"] = kp.vertices.size();
    row["fund_vertices"] = fp.vertices.size();
    std::string fund, strat;
    auto frep = is_fundamental_domain(rs, fundamental_polytope(rs), alcove_aut_action(rs));
    row["fund_domain"] = frep.fundamental;
    fund = frep.fundamental ? "true" : "false";
    auto srep = stratified_centralizers(rs, omega_action(rs), komrakov_premet(rs),
                                        face_cap_from_env());
    if (srep.cap_hit) {
      row["stratified_omega_kp"] = "skipped(cap)";
      strat = "skipped(cap)";
    } else {
      row["stratified_omega_kp"] = srep.stratified;
      strat = srep.stratified ? "true" : "false";
    }
    rows.push_back(row);
    pretty << id.name() << '\t' << omega.elements.size() << '\t' << dcount << '\t'
           << aut.elements.size() << '\t' << kp.vertices.size() << '\t'
           << fp.vertices.size() << '\t' << fund << '\t' << strat << "\n";
  }
  json doc;
  doc["rows"] = rows;
  if (out.format == "tsv") {
    std::ostringstream os;
    for (const auto& row : rows)
      os << row["type"].get<std::string>() << '\t' << row["omega_order"] << '\t'
         << row["aut_d_order"] << '\t' << row["aut_alcove_order"] << '\t'
         << row["kp_vertices"] << '\t' << row["fund_vertices"] << '\t'
         << row["fund_domain"] << '\t' << row["stratified_omega_kp"] << '\n';
    if (out.path.empty())
      std::cout << os.str();
    else
      std::ofstream(out.path) << os.str();
    return kExitOk;
  }
  out.emit(doc, pretty.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations on fundamental alcoves and their isometry groups"};
  app.require_subcommand(1);

  std::string family;
  int rank = 0;
  Output out;
  std::string support;
  std::string vol_polytope = "fund";
  std::string checkf_group = "aut", checkf_polytope;
  std::string checks_group = "omega", checks_polytope;
  std::string rank_range;

  auto add_common = [&](CLI::App* cmd, bool with_system = true) {
    if (with_system) {
      cmd->add_option("family", family, "root system family A..G")->required();
      cmd->add_option("rank", rank, "rank")->required();
    }
    cmd->add_option("--format", out.format, "output format: pretty|json|tsv")
        ->check(CLI::IsMember({"pretty", "json", "tsv"}));
    cmd->add_option("--out", out.path, "write output to a file");
  };

  CLI::App* info = app.add_subcommand("info", "root system data");
  add_common(info);
  CLI::App* omega_cmd = app.add_subcommand("omega", "fundamental group of the alcove");
  add_common(omega_cmd);
  CLI::App* aut_cmd = app.add_subcommand("aut-alcove", "full isometry group of the alcove");
  add_common(aut_cmd);
  CLI::App* kp_cmd = app.add_subcommand("kp", "Komrakov-Premet polytope");
  add_common(kp_cmd);
  CLI::App* fund_cmd = app.add_subcommand("fund-polytope", "sliced fundamental polytope");
  add_common(fund_cmd);
  fund_cmd->add_option("--support", support,
                       "balanced-root support override, e.g. \"1,2:4,5\"");
  CLI::App* dir_cmd =
      app.add_subcommand("dirichlet", "Dirichlet domain of the fundamental group");
  add_common(dir_cmd);
  CLI::App* vol_cmd = app.add_subcommand("volume", "exact volume of a polytope");
  add_common(vol_cmd);
  vol_cmd->add_option("--polytope", vol_polytope, "alcove|kp|fund|dirichlet")
      ->check(CLI::IsMember({"alcove", "kp", "fund", "dirichlet"}));
  CLI::App* checkf_cmd =
      app.add_subcommand("check-fund", "verify the fundamental-domain property");
  add_common(checkf_cmd);
  checkf_cmd->add_option("--group", checkf_group, "omega|aut")
      ->check(CLI::IsMember({"omega", "aut"}));
  checkf_cmd->add_option("--polytope", checkf_polytope, "kp|fund")
      ->check(CLI::IsMember({"kp", "fund"}));
  CLI::App* checks_cmd =
      app.add_subcommand("check-stratified", "stratified-centralizer check");
  add_common(checks_cmd);
  checks_cmd->add_option("--group", checks_group, "omega|aut|waff")
      ->check(CLI::IsMember({"omega", "aut", "waff"}));
  checks_cmd->add_option("--polytope", checks_polytope, "kp|fund|alcove")
      ->check(CLI::IsMember({"kp", "fund", "alcove"}));
  CLI::App* ta_cmd = app.add_subcommand("table-a", "isometry group data per type");
  add_common(ta_cmd);
  CLI::App* tb_cmd = app.add_subcommand("table-b", "fundamental polytope data per type");
  add_common(tb_cmd);
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "summary rows over a rank range");
  sweep_cmd->add_option("family", family, "root system family A..G")->required();
  sweep_cmd->add_option("--ranks", rank_range, "rank range a..b")->required();
  add_common(sweep_cmd, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sweep_cmd->parsed()) {
      auto dots = rank_range.find("..");
      if (dots == std::string::npos) throw domain_error("rank range must be a..b");
      int lo = std::atoi(rank_range.substr(0, dots).c_str());
      int hi = std::atoi(rank_range.substr(dots + 2).c_str());
      return run_sweep(family, lo, hi, out);
    }

    RootSystem rs = build_system(family, rank);

    if (info->parsed()) {
      std::ostringstream pretty;
      pretty << rs.id().name() << ": " << rs.positive_roots().size()
             << " positive roots, marks (";
      for (int i = 1; i <= rs.rank(); ++i) pretty << (i > 1 ? "," : "") << rs.mark(i);
      pretty << "), minuscule {";
      for (std::size_t i = 0; i < rs.minuscule().size(); ++i)
        pretty << (i ? "," : "") << rs.minuscule()[i];
      pretty << "}\n";
      out.emit(to_json(rs), pretty.str());
      return kExitOk;
    }

    if (omega_cmd->parsed()) {
      FundamentalGroup g = fundamental_group(rs);
      std::ostringstream pretty;
      pretty << "Omega(" << rs.id().name() << ") = " << g.label << " of order "
             << g.elements.size() << "\n";
      for (std::size_t i = 0; i < g.elements.size(); ++i)
        pretty << "  omega_" << g.vertex_index[i] << " sends 0 to "
               << pretty_vec(g.elements[i].apply(RatVec(rs.rank()))) << "\n";
      out.emit(to_json(g), pretty.str());
      return kExitOk;
    }

    if (aut_cmd->parsed() || ta_cmd->parsed()) {
      AlcoveAutGroup g = alcove_automorphism_group(rs);
      json j = ta_cmd->parsed() ? group_fixture(rs) : to_json(g);
      std::ostringstream pretty;
      pretty << "Aut(A) for " << rs.id().name() << ": order " << g.elements.size()
             << ", structure " << g.label << "\n";
      if (!g.generators.empty()) {
        pretty << "generators:";
        for (auto& [name, idx] : g.generators) {
          pretty << "  " << name << " = nodes(";
          for (std::size_t k = 0; k < g.elements[idx].sigma.sigma.size(); ++k)
            pretty << (k ? " " : "") << g.elements[idx].sigma.sigma[k];
          pretty << ")";
        }
        pretty << "\n";
      }
      out.emit(j, pretty.str());
      return kExitOk;
    }

    if (kp_cmd->parsed()) {
      VPolytope vp = enumerate_vertices(rs, komrakov_premet(rs));
      out.emit(polytope_doc(rs, komrakov_premet(rs)),
               "Komrakov-Premet polytope of " + rs.id().name() + "\n" +
                   pretty_vertices(rs, vp));
      return kExitOk;
    }

    if (fund_cmd->parsed() || tb_cmd->parsed()) {
      HPolytope p;
      std::vector<BalancedRoot> used_roots;
      if (!support.empty()) {
        std::vector<int> plus, minus;
        parse_support(support, plus, minus);
        p = fundamental_polytope_with_support(rs, plus, minus);
        used_roots.push_back(balanced_root(rs, standard_involution(rs), plus, minus));
      } else {
        p = fundamental_polytope(rs);
        used_roots = standard_balanced_roots(rs);
      }
      json j = polytope_doc(rs, p);
      json roots = json::array();
      for (const auto& br : used_roots)
        roots.push_back({{"plus", br.plus},
                         {"minus", br.minus},
                         {"vector", to_json(br.vector)},
                         {"minuscule_support", br.minuscule_support}});
      j["balanced_root"] = roots;
      VPolytope vp = enumerate_vertices(rs, p);
      std::ostringstream pretty;
      pretty << "fundamental polytope of " << rs.id().name() << "\n";
      for (const auto& br : used_roots)
        pretty << "  balanced root " << pretty_vec(br.vector)
               << (br.minuscule_support ? "" : "  (support not minuscule)") << "\n";
      pretty << pretty_vertices(rs, vp) << "bounding:";
      for (const auto& t : bounding_tags(rs, vp)) pretty << " " << t;
      pretty << "\n";
      out.emit(j, pretty.str());
      return kExitOk;
    }

    if (dir_cmd->parsed()) {
      VPolytope vp = enumerate_vertices(rs, dirichlet_domain(rs));
      out.emit(polytope_doc(rs, dirichlet_domain(rs)),
               "Dirichlet domain of " + rs.id().name() + "\n" + pretty_vertices(rs, vp));
      return kExitOk;
    }

    if (vol_cmd->parsed()) {
      HPolytope p;
      if (vol_polytope == "alcove")
        p = alcove_polytope(rs);
      else if (vol_polytope == "kp")
        p = komrakov_premet(rs);
      else if (vol_polytope == "dirichlet")
        p = dirichlet_domain(rs);
      else
        p = fundamental_polytope(rs);
      Rational v = volume(rs, enumerate_vertices(rs, p));
      json j{{"polytope", vol_polytope}, {"volume", rat_to_string(v)}};
      out.emit(j, vol_polytope + " volume = " + rat_to_string(v) + "\n");
      return kExitOk;
    }

    if (checkf_cmd->parsed()) {
      std::string group_choice = checkf_group;
      std::string polytope_choice =
          checkf_polytope.empty() ? (group_choice == "omega" ? "kp" : "fund")
                                  : checkf_polytope;
      HPolytope p = polytope_choice == "kp" ? komrakov_premet(rs) : fundamental_polytope(rs);
      GroupAction g = group_choice == "omega" ? omega_action(rs) : alcove_aut_action(rs);
      auto rep = is_fundamental_domain(rs, p, g);
      json j = to_json(rep);
      j["claim"] = polytope_choice + " is a fundamental domain for " + group_choice;
      std::ostringstream pretty;
      pretty << j["claim"].get<std::string>() << ": "
             << (rep.fundamental ? "verified" : "FAILED") << " (|G| vol(F) = "
             << rat_to_string(rep.vol_f * Rational(g.elements.size()))
             << ", vol(ambient) = " << rat_to_string(rep.vol_ambient) << ")\n";
      out.emit(j, pretty.str());
      return rep.fundamental ? kExitOk : kExitClaimFailed;
    }

    if (checks_cmd->parsed()) {
      std::string group_choice = checks_group;
      if (group_choice == "waff") {
        bool ok = waff_stratified(rs);
        json j{{"claim", "affine Weyl group is stratified on the alcove"},
               {"stratified", ok}};
        out.emit(j, std::string("W_aff on the alcove: ") +
                        (ok ? "stratified" : "NOT stratified") + "\n");
        return ok ? kExitOk : kExitClaimFailed;
      }
      std::string polytope_choice =
          checks_polytope.empty() ? (group_choice == "omega" ? "kp" : "fund")
                                  : checks_polytope;
      HPolytope p = polytope_choice == "kp"
                        ? komrakov_premet(rs)
                        : (polytope_choice == "alcove" ? alcove_polytope(rs)
                                                       : fundamental_polytope(rs));
      GroupAction g = group_choice == "omega" ? omega_action(rs) : alcove_aut_action(rs);
      auto rep = stratified_centralizers(rs, g, p, face_cap_from_env());
      json j = to_json(rs, g, rep);
      j["claim"] = "stratified centralizers of " + group_choice + " on " + polytope_choice;
      std::ostringstream pretty;
      if (rep.cap_hit) {
        pretty << "skipped(cap): face lattice larger than ALCOVE_FACE_CAP\n";
      } else {
        pretty << group_choice << " on " << polytope_choice << ": verdict "
               << (rep.stratified ? "true (stratified)"
                                  : "false (not stratified), " +
                                        std::to_string(rep.witnesses.size()) +
                                        " witness(es)")
               << "\n";
        for (const auto& w : rep.witnesses) {
          pretty << "  element ";
          auto sig = node_permutation(rs, g.elements[w.element_index].linear);
          if (sig) {
            pretty << "nodes(";
            for (std::size_t k = 0; k < sig->sigma.size(); ++k)
              pretty << (k ? " " : "") << sig->sigma[k];
            pretty << ")";
          }
          pretty << " fixes " << pretty_vec(w.fixed_point) << ", moves "
                 << pretty_vec(w.moved_point) << "\n";
        }
      }
      out.emit(j, pretty.str());
      return rep.cap_hit ? kExitDomainError : kExitOk;
    }
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitUsage;
}
