#include "hecke_atlas/json_io.hpp"

#include <fstream>
#include <sstream>

#include "hecke_atlas/error.hpp"

namespace hecke_atlas::json_io {

namespace {

std::string half_string(int twice) { return std::to_string(twice) + "/2"; }

template <class T>
T field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field \"") + name + "\"");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("field \"") + name + "\" has the wrong type");
  }
}

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << dump(j);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json to_json(const weil::InertialClass& c) {
  json d;
  if (c.self_dual) {
    d = {{"kind", "self_dual"}, {"type_plus", weil::type_name(c.type_plus)}, {"type_minus", weil::type_name(c.type_minus)}};
  } else {
    d = {{"kind", "pair"}, {"partner", c.partner}};
  }
  return {{"label", c.label}, {"dim", c.dim}, {"torsion", c.torsion}, {"duality", d}, {"det_base", c.det_base}};
}

weil::InertialClass class_from_json(const json& j) {
  weil::InertialClass c;
  c.label = field<std::string>(j, "label");
  c.dim = field<int>(j, "dim");
  c.torsion = j.contains("torsion") ? field<int>(j, "torsion") : 1;
  const json d = field<json>(j, "duality");
  const auto kind = field<std::string>(d, "kind");
  if (kind == "self_dual") {
    c.self_dual = true;
    c.type_plus = weil::parse_type(field<std::string>(d, "type_plus"));
    c.type_minus = weil::parse_type(field<std::string>(d, "type_minus"));
  } else if (kind == "pair") {
    c.self_dual = false;
    c.partner = field<std::string>(d, "partner");
  } else {
    throw InputError("duality kind must be self_dual or pair, got \"" + kind + "\"");
  }
  if (j.contains("det_base")) c.det_base = field<std::string>(j, "det_base");
  return c;
}

json to_json(const weil::Inventory& inv) {
  json out = json::array();
  for (const auto& label : inv.labels()) out.push_back(to_json(*inv.get(label)));
  return out;
}

weil::Inventory inventory_from_json(const json& j) {
  if (!j.is_array()) throw InputError("inventory must be a JSON array");
  std::vector<weil::InertialClass> classes;
  for (const auto& c : j) classes.push_back(class_from_json(c));
  return weil::Inventory(std::move(classes));
}

json to_json(const UnitMonomial& f) { return {{"root", f.root_string()}, {"qexp", f.qexp_string()}}; }

UnitMonomial monomial_from_json(const json& j) {
  return parse_unit_monomial(field<std::string>(j, "root"), field<std::string>(j, "qexp"));
}

json to_json(const weil::DualGroupDescriptor& g) {
  return {{"family", weil::family_name(g.family)}, {"dim", g.ambient_dim}};
}

weil::DualGroupDescriptor ambient_from_json(const json& j) {
  weil::DualGroupDescriptor g{weil::parse_family(field<std::string>(j, "family")), field<int>(j, "dim")};
  weil::validate(g);
  return g;
}

json to_json(const params::LDParameter& phi) {
  json s = json::array();
  for (const auto& x : phi.summands)
    s.push_back({{"class", x.point.label()}, {"f", to_json(x.point.f)}, {"a", x.a}, {"mult", x.mult}});
  return {{"ambient", to_json(phi.ambient)}, {"summands", s}};
}

params::LDParameter parameter_from_json(const weil::Inventory& inv, const json& j) {
  const auto g = ambient_from_json(field<json>(j, "ambient"));
  const json list = field<json>(j, "summands");
  if (!list.is_array()) throw InputError("summands must be an array");
  std::vector<params::LDSummand> summands;
  for (const auto& s : list) {
    const UnitMonomial f = s.contains("f") ? monomial_from_json(s.at("f")) : UnitMonomial::one();
    summands.push_back({weil::orbit_point(inv, field<std::string>(s, "class"), f),
                        s.contains("a") ? field<int>(s, "a") : 1, s.contains("mult") ? field<int>(s, "mult") : 1});
  }
  return params::build_ld_parameter(inv, std::move(summands), g);
}

json to_json(const support::Orbit& o, const std::pair<int, int>& entry) {
  return {{"orbit", o.label()}, {"a_plus", entry.first}, {"a_minus", entry.second}};
}

namespace {

json levi_json(const support::Levi& l) {
  json gl = json::array();
  for (const auto& f : l.gl) gl.push_back({{"k", f.k}, {"count", f.count}, {"label", f.label}});
  return {{"gl", gl},
          {"tail", {{"family", weil::family_name(l.tail_family)}, {"dim", l.tail_dim}, {"rank", l.tail_rank}}},
          {"text", l.to_string()}};
}

json datum_json(const std::vector<support::Orbit>& orbs, const support::SupportDatum& s) {
  json out = json::array();
  for (std::size_t i = 0; i < orbs.size(); ++i) out.push_back(to_json(orbs[i], s.entries[i]));
  return out;
}

}  // namespace

json supports_to_json(const params::LDParameter& phi0, const support::CuspidalPairs& pairs) {
  const auto orbs = support::orbits(phi0);
  json list = json::array();
  for (const auto& p : pairs.pairs) {
    list.push_back({{"S", datum_json(orbs, p.S)},
                    {"phiS", to_json(p.phi.phi_S)},
                    {"LS", p.phi.L_S},
                    {"lS", p.phi.l_S},
                    {"dS", p.phi.d_S},
                    {"levi", levi_json(p.levi)},
                    {"epsilon", p.eps.values},
                    {"epsZ", p.eps.eps_z},
                    {"degenerate", p.degenerate}});
  }
  json dups = json::array();
  for (const auto& [a, b] : pairs.duplicates) dups.push_back({a, b});
  return {{"phi0", to_json(phi0)}, {"supports", list}, {"duplicates", dups}, {"degenerate", pairs.degenerate}};
}

json to_json(const hecke::HeckeFactor& f) {
  return {{"family", hecke::root_family_name(f.family)},
          {"size", f.size},
          {"extended", f.extended},
          {"t", f.t},
          {"internal", half_string(f.internal2)},
          {"endLong", half_string(f.end_long2)},
          {"endShort", half_string(f.end_short2)}};
}

json hecke_to_json(const params::LDParameter& phi0) {
  const auto orbs = support::orbits(phi0);
  json list = json::array();
  for (const auto& s : support::supports(phi0)) {
    json factors = json::array(), normalized = json::array();
    for (const auto& f : hecke::hecke_descriptor(phi0, s)) {
      factors.push_back(to_json(f));
      normalized.push_back(to_json(hecke::sp_normalization(f)));
    }
    list.push_back({{"S", datum_json(orbs, s)}, {"factors", factors}, {"normalized", normalized}});
  }
  json red = json::array();
  for (const auto& r : hecke::unipotent_reduction(phi0))
    red.push_back({{"orbit", r.orbit}, {"family", r.family}, {"size", r.size}, {"degree", r.degree}});
  return {{"phi0", to_json(phi0)}, {"descriptors", list}, {"reduction", red}};
}

json table_to_json(hecke::Kind kind, int rank, const std::vector<hecke::TableRow>& rows) {
  json list = json::array();
  for (const auto& r : rows)
    list.push_back({{"d_plus", r.d_plus},
                    {"d_minus", r.d_minus},
                    {"factor", to_json(r.factor)},
                    {"bucket", hecke::bucket_name(r.bucket)},
                    {"mult", r.mult}});
  return {{"kind", hecke::kind_name(kind)}, {"rank", rank}, {"rows", list}};
}

json to_json(const centralizer::ClassicalGroup& g) {
  json list = json::array();
  for (const auto& f : g.factors)
    list.push_back({{"family", centralizer::group_family_name(f.family)}, {"size", f.size}, {"block", f.block}});
  return {{"factors", list}, {"det_one_available", g.det_one_available}};
}

json to_json(const centralizer::Triple& t) {
  json ev = json::array();
  for (const auto& [x, m] : t.eigenvalues) ev.push_back({{"value", to_json(x)}, {"mult", m}});
  json parts = json::object();
  for (const auto& b : t.blocks) parts[b.key()] = b.partition;
  return {{"group", to_json(t.ambient)}, {"eigenvalues", ev}, {"partitions", parts}, {"xi", t.xi}};
}

}  // namespace hecke_atlas::json_io
