#include "continuum/io.hpp"

#include <fstream>

#include "continuum/errors.hpp"

namespace continuum {

namespace {

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<std::string> string_list(const json& j) {
  if (!j.is_array()) throw Error("expected an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(e.get<std::string>());
  return out;
}

std::vector<std::pair<std::string, std::string>> pair_list(const json& j) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!j.is_array()) throw Error("expected an array of pairs");
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw Error("expected a two-element pair");
    out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return out;
}

Bound bound_from_string(const std::string& s) {
  if (s == "-inf") return Bound::neg_inf();
  if (s == "+inf" || s == "inf") return Bound::pos_inf();
  return Bound::at(parse_rat(s));
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputParseError(path, 0, "cannot open file");
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputParseError(path, e.byte, e.what());
  }
}

HeytingAlgebra lattice_from_json(const json& j) {
  std::optional<std::string> top, bottom;
  if (j.contains("top")) top = j["top"].get<std::string>();
  if (j.contains("bottom")) bottom = j["bottom"].get<std::string>();
  return HeytingAlgebra::build(string_list(field(j, "elements")), pair_list(field(j, "order")),
                               top, bottom);
}

json lattice_to_json(const HeytingAlgebra& a) {
  json j;
  j["elements"] = a.element_names();
  json order = json::array();
  for (const auto& [lo, hi] : a.cover_pairs()) order.push_back(json::array({lo, hi}));
  j["order"] = order;
  j["top"] = a.name(a.top());
  j["bottom"] = a.name(a.bottom());
  return j;
}

FiniteSpace space_from_json(const json& j) {
  std::vector<std::string> points = string_list(field(j, "points"));
  const json& opens_j = field(j, "opens");
  if (!opens_j.is_array()) throw Error("'opens' must be an array of point lists");

  // Resolve names against the declared points before validation so a stray
  // name maps to the right error type.
  std::vector<PointSet> opens;
  for (const auto& open_j : opens_j) {
    PointSet mask = 0;
    for (const auto& name_j : open_j) {
      const std::string name = name_j.get<std::string>();
      bool found = false;
      for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i] == name) {
          mask |= PointSet{1} << i;
          found = true;
          break;
        }
      if (!found) throw OpenMentionsUnknownPoint(name);
    }
    opens.push_back(mask);
  }
  return FiniteSpace::validate(std::move(points), std::move(opens));
}

json space_to_json(const FiniteSpace& s) {
  json j;
  j["points"] = s.point_names();
  json opens = json::array();
  for (PointSet u : s.opens()) {
    json open = json::array();
    for (int i = 0; i < s.point_count(); ++i)
      if (u & (PointSet{1} << i)) open.push_back(s.point_names()[static_cast<std::size_t>(i)]);
    opens.push_back(open);
  }
  j["opens"] = opens;
  return j;
}

FiniteSpace space_from_preorder_json(const json& j) {
  return FiniteSpace::from_preorder(string_list(field(j, "points")),
                                    pair_list(field(j, "order")));
}

PointMap point_map_from_json(const json& j, FiniteSpace source, FiniteSpace target) {
  const json& map_j = field(j, "map");
  if (!map_j.is_object()) throw Error("'map' must be an object");
  std::map<std::string, std::string> assignment;
  for (auto it = map_j.begin(); it != map_j.end(); ++it)
    assignment[it.key()] = it.value().get<std::string>();
  return PointMap::build(std::move(source), std::move(target), assignment);
}

OpenRegion region_from_json(const json& j) {
  const json& ivs = field(j, "intervals");
  if (!ivs.is_array()) throw Error("'intervals' must be an array");
  std::vector<Interval> out;
  for (const auto& iv : ivs)
    out.push_back({bound_from_string(field(iv, "lo").get<std::string>()),
                   bound_from_string(field(iv, "hi").get<std::string>())});
  return OpenRegion::of(std::move(out));
}

json region_to_json(const OpenRegion& u) {
  json j;
  json ivs = json::array();
  for (const auto& iv : u.intervals()) {
    json e;
    e["lo"] = iv.lo.str();
    e["hi"] = iv.hi.str();
    ivs.push_back(e);
  }
  j["intervals"] = ivs;
  return j;
}

std::vector<OpenRegion> region_list_from_json(const json& j) {
  if (!j.is_array()) throw Error("expected a JSON array of regions");
  std::vector<OpenRegion> out;
  for (const auto& e : j) out.push_back(region_from_json(e));
  return out;
}

Poly poly_from_json(const json& j) {
  std::vector<Rat> coeffs;
  for (const auto& c : j) coeffs.push_back(parse_rat(c.get<std::string>()));
  return Poly(std::move(coeffs));
}

json poly_to_json(const Poly& p) {
  json out = json::array();
  for (const Rat& c : p.coeffs()) out.push_back(rat_to_string(c));
  return out;
}

PiecewiseFn piecewise_from_json(const json& j) {
  std::vector<Rat> breakpoints;
  for (const auto& b : field(j, "breakpoints")) breakpoints.push_back(parse_rat(b.get<std::string>()));
  std::vector<Poly> pieces;
  for (const auto& p : field(j, "pieces")) pieces.push_back(poly_from_json(p));
  std::vector<Rat> values(breakpoints.size(), Rat(0));
  const json& values_j = field(j, "values");
  std::vector<char> assigned(breakpoints.size(), 0);
  for (auto it = values_j.begin(); it != values_j.end(); ++it) {
    const Rat at = parse_rat(it.key());
    bool found = false;
    for (std::size_t i = 0; i < breakpoints.size(); ++i)
      if (breakpoints[i] == at) {
        values[i] = parse_rat(it.value().get<std::string>());
        assigned[i] = 1;
        found = true;
        break;
      }
    if (!found) throw Error("value assigned at a non-breakpoint: " + it.key());
  }
  for (std::size_t i = 0; i < breakpoints.size(); ++i)
    if (!assigned[i]) throw Error("breakpoint without an assigned value: " + rat_to_string(breakpoints[i]));
  return PiecewiseFn::build(std::move(breakpoints), std::move(pieces), std::move(values));
}

Presheaf presheaf_from_json(const json& j) {
  FiniteSpace space = space_from_json(field(j, "space"));
  std::vector<std::vector<std::string>> sections(
      static_cast<std::size_t>(space.open_count()));
  std::vector<char> declared(sections.size(), 0);
  const json& sections_j = field(j, "sections");
  for (auto it = sections_j.begin(); it != sections_j.end(); ++it) {
    const int idx = std::stoi(it.key());
    if (idx < 0 || idx >= space.open_count())
      throw Error("section set for unknown open index " + it.key());
    sections[static_cast<std::size_t>(idx)] = string_list(it.value());
    declared[static_cast<std::size_t>(idx)] = 1;
  }
  for (int u = 0; u < space.open_count(); ++u)
    if (!declared[static_cast<std::size_t>(u)])
      throw MissingSectionSet(space.format_subset(space.opens()[static_cast<std::size_t>(u)]));

  std::map<std::pair<int, int>, std::map<std::string, std::string>> restrictions;
  if (j.contains("restrictions")) {
    const json& r = j["restrictions"];
    for (auto it = r.begin(); it != r.end(); ++it) {
      const std::string key = it.key();
      const auto arrow = key.find("->");
      if (arrow == std::string::npos)
        throw Error("restriction key must look like '<V-index>-><U-index>': " + key);
      const int v = std::stoi(key.substr(0, arrow));
      const int u = std::stoi(key.substr(arrow + 2));
      std::map<std::string, std::string> table;
      for (auto e = it.value().begin(); e != it.value().end(); ++e)
        table[e.key()] = e.value().get<std::string>();
      restrictions[{v, u}] = std::move(table);
    }
  }
  return Presheaf::build(std::move(space), std::move(sections), restrictions);
}

}  // namespace continuum
