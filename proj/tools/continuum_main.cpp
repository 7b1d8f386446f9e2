// Command-line front end: one subcommand per module surface, JSON or text
// reports, deterministic under a fixed --seed.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "continuum/axioms.hpp"
#include "continuum/catalog.hpp"
#include "continuum/errors.hpp"
#include "continuum/io.hpp"
#include "continuum/logic.hpp"
#include "continuum/nilpotent.hpp"
#include "continuum/piecewise.hpp"
#include "continuum/sheaf.hpp"

namespace {

using continuum::json;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitBadInput = 2;

struct Options {
  bool json_out = false;
  std::uint64_t seed = 0;
};

struct Report {
  json j;
  std::vector<std::string> text;
  int exit_code = kExitHolds;
};

Report make_report(const Options& opt, const std::string& command, const std::string& verdict) {
  Report r;
  r.j["schema_version"] = 1;
  r.j["command"] = command;
  r.j["seed"] = opt.seed;
  r.j["verdict"] = verdict;
  return r;
}

int emit(const Options& opt, const Report& r) {
  if (opt.json_out) {
    std::cout << r.j.dump(2) << "\n";
  } else {
    for (const auto& line : r.text) std::cout << line << "\n";
  }
  return r.exit_code;
}

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') { if (!cur.empty()) out.push_back(cur); cur.clear(); }
    else cur += c;
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

continuum::Poly poly_from_csv(const std::string& csv) {
  std::vector<continuum::Rat> coeffs;
  for (const auto& c : split_names(csv)) coeffs.push_back(continuum::parse_rat(c));
  return continuum::Poly(std::move(coeffs));
}

continuum::TruncatedPoly truncated_from_csv(const std::string& csv, int order) {
  std::vector<continuum::Rat> coeffs;
  for (const auto& c : split_names(csv)) coeffs.push_back(continuum::parse_rat(c));
  return continuum::TruncatedPoly::from_coeffs(order, std::move(coeffs));
}

json axiom_report_to_json(const continuum::AxiomReport& r) {
  json j;
  j["axiom"] = continuum::to_string(r.axiom);
  j["mode"] = continuum::to_string(r.mode);
  j["holds"] = r.holds;
  j["witness"] = r.witness;
  j["note"] = r.note;
  return j;
}

std::string axiom_report_to_text(const continuum::AxiomReport& r) {
  std::string line = "axiom " + continuum::to_string(r.axiom) + " (" +
                     continuum::to_string(r.mode) + "): " + (r.holds ? "holds" : "FAILS");
  if (!r.note.empty()) line += "  [" + r.note + "]";
  return line;
}

json stalk_to_json(const continuum::Presheaf& p, const continuum::Stalk& s) {
  const auto& space = p.space();
  json j;
  j["at"] = space.format_subset(s.at);
  j["canonical_open"] = space.format_subset(space.opens()[static_cast<std::size_t>(s.canonical_open)]);
  json classes = json::array();
  for (std::size_t c = 0; c < s.classes.size(); ++c) {
    json cls;
    cls["canonical_section"] =
        p.sections(s.canonical_open)[static_cast<std::size_t>(s.canonical_section[c])];
    json members = json::array();
    for (const auto& [open, sec] : s.classes[c]) {
      json m;
      m["open"] = space.format_subset(space.opens()[static_cast<std::size_t>(open)]);
      m["section"] = p.sections(open)[static_cast<std::size_t>(sec)];
      members.push_back(m);
    }
    cls["members"] = members;
    classes.push_back(cls);
  }
  j["classes"] = classes;
  return j;
}

// ---- lattice ----

int run_lattice_check(const Options& opt, const std::string& file) {
  Report r = make_report(opt, "lattice check", "holds");
  try {
    const auto a = continuum::lattice_from_json(continuum::load_json_file(file));
    r.j["value"] = continuum::lattice_to_json(a);
    r.text.push_back("valid Heyting algebra with " + std::to_string(a.size()) + " elements");
  } catch (const continuum::InputParseError&) {
    throw;
  } catch (const continuum::Error& e) {
    r.j["verdict"] = "fails";
    r.j["witnesses"] = json::array({e.what()});
    r.text.push_back(std::string("not a Heyting algebra: ") + e.what());
    r.exit_code = kExitFails;
  }
  return emit(opt, r);
}

int run_lattice_op(const Options& opt, const std::string& file, const std::string& op,
                   const std::string& u_name, const std::string& v_name) {
  const auto a = continuum::lattice_from_json(continuum::load_json_file(file));
  const int u = a.index_of(u_name);
  int result;
  if (op == "not") {
    result = a.pseudo_complement(u);
  } else {
    if (v_name.empty()) throw continuum::Error("--v is required for op '" + op + "'");
    const int v = a.index_of(v_name);
    if (op == "meet") result = a.meet(u, v);
    else if (op == "join") result = a.join(u, v);
    else if (op == "implies") result = a.implies(u, v);
    else throw continuum::Error("unknown lattice op: " + op);
  }
  Report r = make_report(opt, "lattice op", "value");
  r.j["op"] = op;
  r.j["value"] = a.name(result);
  r.text.push_back(op + " = " + a.name(result));
  return emit(opt, r);
}

// ---- space ----

int run_space_check(const Options& opt, const std::string& file) {
  Report r = make_report(opt, "space check", "holds");
  try {
    const auto s = continuum::space_from_json(continuum::load_json_file(file));
    r.j["value"] = continuum::space_to_json(s);
    r.text.push_back("valid finite space: " + std::to_string(s.point_count()) + " points, " +
                     std::to_string(s.open_count()) + " opens");
  } catch (const continuum::InputParseError&) {
    throw;
  } catch (const continuum::Error& e) {
    r.j["verdict"] = "fails";
    r.j["witnesses"] = json::array({e.what()});
    r.text.push_back(std::string("not a topology: ") + e.what());
    r.exit_code = kExitFails;
  }
  return emit(opt, r);
}

int run_space_alexandrov(const Options& opt, const std::string& file) {
  const auto s = continuum::space_from_preorder_json(continuum::load_json_file(file));
  Report r = make_report(opt, "space alexandrov", "value");
  r.j["value"] = continuum::space_to_json(s);
  r.text.push_back("Alexandrov space with " + std::to_string(s.open_count()) +
                   " opens (down-sets of the preorder)");
  return emit(opt, r);
}

int run_space_op(const Options& opt, const std::string& file, const std::string& op,
                 const std::string& set_csv) {
  const auto s = continuum::space_from_json(continuum::load_json_file(file));
  const continuum::PointSet y = s.subset_of_names(split_names(set_csv));
  continuum::PointSet result;
  if (op == "interior") result = s.interior(y);
  else if (op == "closure") result = s.closure(y);
  else if (op == "boundary") result = s.boundary(y);
  else throw continuum::Error("unknown space op: " + op);
  Report r = make_report(opt, "space op", "value");
  r.j["op"] = op;
  r.j["value"] = s.format_subset(result);
  r.text.push_back(op + "(" + s.format_subset(y) + ") = " + s.format_subset(result));
  return emit(opt, r);
}

int run_space_connected(const Options& opt, const std::string& file, const std::string& set_csv) {
  const auto s = continuum::space_from_json(continuum::load_json_file(file));
  const continuum::PointSet u = s.subset_of_names(split_names(set_csv));
  const bool connected = s.is_connected_open(u);
  const auto comps = s.components(u);
  Report r = make_report(opt, "space connected", connected ? "holds" : "fails");
  json comp_j = json::array();
  for (auto c : comps) comp_j.push_back(s.format_subset(c));
  r.j["components"] = comp_j;
  std::string comps_text;
  for (auto c : comps) comps_text += (comps_text.empty() ? "" : " ") + s.format_subset(c);
  r.text.push_back(s.format_subset(u) + (connected ? " is connected" : " is NOT connected") +
                   "; components: " + (comps_text.empty() ? "none" : comps_text));
  r.exit_code = connected ? kExitHolds : kExitFails;
  return emit(opt, r);
}

int run_space_continuous(const Options& opt, const std::string& source_file,
                         const std::string& target_file, const std::string& map_file) {
  const auto source = continuum::space_from_json(continuum::load_json_file(source_file));
  const auto target = continuum::space_from_json(continuum::load_json_file(target_file));
  const auto f = continuum::point_map_from_json(continuum::load_json_file(map_file), source, target);
  const auto res = continuum::is_continuous(f);
  Report r = make_report(opt, "space continuous", res.continuous ? "holds" : "fails");
  if (!res.continuous) {
    r.j["witnesses"] = json::array({target.format_subset(*res.witness_open)});
    r.text.push_back("not continuous: preimage of " + target.format_subset(*res.witness_open) +
                     " is not open");
    r.exit_code = kExitFails;
  } else {
    r.text.push_back("continuous");
  }
  return emit(opt, r);
}

int run_space_lattice(const Options& opt, const std::string& file) {
  const auto s = continuum::space_from_json(continuum::load_json_file(file));
  const auto a = s.opens_lattice();
  Report r = make_report(opt, "space lattice", "value");
  r.j["value"] = continuum::lattice_to_json(a);
  r.text.push_back("opens lattice with " + std::to_string(a.size()) + " elements; top = " +
                   a.name(a.top()));
  return emit(opt, r);
}

// ---- line ----

continuum::OpenRegion load_region(const std::string& file) {
  return continuum::region_from_json(continuum::load_json_file(file));
}

int run_line_op(const Options& opt, const std::string& op, const std::string& u_file,
                const std::string& v_file) {
  const auto u = load_region(u_file);
  continuum::OpenRegion result;
  if (op == "not") {
    result = continuum::region_not(u);
  } else {
    if (v_file.empty()) throw continuum::Error("--v is required for op '" + op + "'");
    const auto v = load_region(v_file);
    if (op == "meet") result = continuum::region_meet(u, v);
    else if (op == "join") result = continuum::region_join(u, v);
    else if (op == "implies") result = continuum::region_implies(u, v);
    else throw continuum::Error("unknown line op: " + op);
  }
  Report r = make_report(opt, "line op", "value");
  r.j["op"] = op;
  r.j["value"] = continuum::region_to_json(result);
  r.text.push_back(op + " = " + result.str());
  return emit(opt, r);
}

int run_line_boundary(const Options& opt, const std::string& u_file) {
  const auto u = load_region(u_file);
  const auto pts = continuum::region_boundary(u);
  Report r = make_report(opt, "line boundary", "value");
  json v = json::array();
  std::string text;
  for (const auto& p : pts) {
    v.push_back(continuum::rat_to_string(p));
    text += (text.empty() ? "" : ", ") + continuum::rat_to_string(p);
  }
  r.j["value"] = v;
  r.text.push_back("boundary = {" + text + "}");
  return emit(opt, r);
}

int run_line_divide(const Options& opt, const std::string& u_file, const std::string& at) {
  const auto u = load_region(u_file);
  const auto [w, v] = continuum::divide(u, continuum::parse_rat(at));
  Report r = make_report(opt, "line divide", "value");
  r.j["value"]["left"] = continuum::region_to_json(w);
  r.j["value"]["right"] = continuum::region_to_json(v);
  r.text.push_back("left  = " + w.str());
  r.text.push_back("right = " + v.str());
  return emit(opt, r);
}

int run_line_compact(const Options& opt, const std::string& u_file) {
  const auto u = load_region(u_file);
  const bool compact = continuum::is_compact_complement(u);
  Report r = make_report(opt, "line compact", compact ? "holds" : "fails");
  r.text.push_back(compact ? "complement is compact (closed and bounded)"
                           : "complement is NOT compact");
  r.exit_code = compact ? kExitHolds : kExitFails;
  return emit(opt, r);
}

int run_line_germ(const Options& opt, const std::string& fn_file, const std::string& at) {
  const auto f = continuum::piecewise_from_json(continuum::load_json_file(fn_file));
  const auto g = continuum::germ_at(f, continuum::parse_rat(at));
  Report r = make_report(opt, "line germ", "value");
  r.j["value"]["at"] = continuum::rat_to_string(g.at);
  r.j["value"]["left"] = continuum::poly_to_json(g.left);
  r.j["value"]["value"] = continuum::rat_to_string(g.value);
  r.j["value"]["right"] = continuum::poly_to_json(g.right);
  r.text.push_back("germ at " + continuum::rat_to_string(g.at) + ": left " + g.left.str() +
                   ", value " + continuum::rat_to_string(g.value) + ", right " + g.right.str());
  return emit(opt, r);
}

int run_line_strata(const Options& opt, const std::string& fn_file, int k_max) {
  const auto f = continuum::piecewise_from_json(continuum::load_json_file(fn_file));
  const auto cat = continuum::catastrophe_set(f);
  const auto st = continuum::strata(f, k_max);
  Report r = make_report(opt, "line strata", "value");
  json cat_j = json::array();
  std::string cat_text;
  for (const auto& p : cat) {
    cat_j.push_back(continuum::rat_to_string(p));
    cat_text += (cat_text.empty() ? "" : ", ") + continuum::rat_to_string(p);
  }
  r.j["value"]["catastrophe_set"] = cat_j;
  json strata_j = json::array();
  for (const auto& s : st) {
    json e;
    if (s.is_point) {
      e["point"] = continuum::rat_to_string(s.point);
    } else {
      e["interval"] = json::array({s.interval.lo.str(), s.interval.hi.str()});
    }
    e["smoothness"] = s.smoothness.str();
    strata_j.push_back(e);
    if (s.is_point)
      r.text.push_back("  {" + continuum::rat_to_string(s.point) + "}  " + s.smoothness.str());
    else
      r.text.push_back("  (" + s.interval.lo.str() + "," + s.interval.hi.str() + ")  " +
                       s.smoothness.str());
  }
  r.j["value"]["strata"] = strata_j;
  r.text.insert(r.text.begin(), "catastrophe set = {" + cat_text + "}");
  return emit(opt, r);
}

int run_line_ivt(const Options& opt, const std::string& fn_file, const std::string& a,
                 const std::string& b, const std::string& c) {
  const auto f = continuum::piecewise_from_json(continuum::load_json_file(fn_file));
  const auto x = continuum::ivt_witness(f, continuum::parse_rat(a), continuum::parse_rat(b),
                                        continuum::parse_rat(c));
  Report r = make_report(opt, "line ivt", "value");
  r.j["value"] = continuum::rat_to_string(x);
  r.text.push_back("f(x) = " + c + " at x = " + continuum::rat_to_string(x));
  return emit(opt, r);
}

// ---- axioms ----

int run_axioms_check(const Options& opt, const std::string& file, const std::string& mode_name,
                     const std::string& which) {
  const auto a = continuum::lattice_from_json(continuum::load_json_file(file));
  const continuum::AxiomMode mode = mode_name == "as-written"
                                        ? continuum::AxiomMode::as_written
                                        : continuum::AxiomMode::corrected;
  std::vector<continuum::AxiomReport> reports;
  if (which == "all" || which == "global")
    reports.push_back(continuum::check_global_connectivity(a, mode));
  if (which == "all" || which == "local")
    reports.push_back(continuum::check_local_connectivity(a, mode));
  if (which == "all" || which == "divisibility")
    reports.push_back(continuum::check_divisibility(a, mode));
  if (reports.empty()) throw continuum::Error("unknown axiom selection: " + which);

  bool all_hold = true;
  json list = json::array();
  Report r = make_report(opt, "axioms check", "holds");
  r.j["mode"] = mode_name;
  for (const auto& rep : reports) {
    all_hold = all_hold && rep.holds;
    list.push_back(axiom_report_to_json(rep));
    r.text.push_back(axiom_report_to_text(rep));
  }
  r.j["verdict"] = all_hold ? "holds" : "fails";
  r.j["reports"] = list;
  r.exit_code = all_hold ? kExitHolds : kExitFails;
  return emit(opt, r);
}

int run_axioms_check_line(const Options& opt, const std::string& samples_file, int random_count) {
  auto samples = continuum::region_list_from_json(continuum::load_json_file(samples_file));
  continuum::RegionSampler sampler(opt.seed);
  for (int i = 0; i < random_count; ++i) samples.push_back(sampler.next_nonempty());
  const auto rep = continuum::check_divisibility_line(samples);
  Report r = make_report(opt, "axioms check-line", rep.holds ? "holds" : "fails");
  r.j["samples"] = samples.size();
  r.j["report"] = axiom_report_to_json(rep);
  r.text.push_back(axiom_report_to_text(rep));
  r.exit_code = rep.holds ? kExitHolds : kExitFails;
  return emit(opt, r);
}

// ---- sheaf ----

int run_sheaf_validate(const Options& opt, const std::string& file) {
  Report r = make_report(opt, "sheaf validate", "holds");
  try {
    const auto p = continuum::presheaf_from_json(continuum::load_json_file(file));
    r.text.push_back("valid presheaf on " + std::to_string(p.space().open_count()) + " opens");
  } catch (const continuum::InputParseError&) {
    throw;
  } catch (const continuum::Error& e) {
    r.j["verdict"] = "fails";
    r.j["witnesses"] = json::array({e.what()});
    r.text.push_back(std::string("not a presheaf: ") + e.what());
    r.exit_code = kExitFails;
  }
  return emit(opt, r);
}

int run_sheaf_check(const Options& opt, const std::string& file) {
  const auto p = continuum::presheaf_from_json(continuum::load_json_file(file));
  const auto verdict = continuum::check_sheaf(p);
  Report r = make_report(opt, "sheaf check", verdict.is_sheaf ? "holds" : "fails");
  if (verdict.is_sheaf) {
    r.text.push_back("sheaf: every compatible family glues uniquely");
  } else {
    const auto& w = *verdict.witness;
    const auto& space = p.space();
    json wj;
    wj["open"] = space.format_subset(space.opens()[static_cast<std::size_t>(w.open)]);
    json cover = json::array();
    json family = json::array();
    std::string cover_text, family_text;
    for (std::size_t i = 0; i < w.cover.size(); ++i) {
      const std::string name =
          space.format_subset(space.opens()[static_cast<std::size_t>(w.cover[i])]);
      const std::string label =
          p.sections(w.cover[i])[static_cast<std::size_t>(w.family[i])];
      cover.push_back(name);
      family.push_back(label);
      cover_text += (i ? " " : "") + name;
      family_text += (i ? " " : "") + label;
    }
    wj["cover"] = cover;
    wj["family"] = family;
    wj["amalgamations"] = w.amalgamations;
    r.j["witnesses"] = json::array({wj});
    r.text.push_back("not a sheaf: on open " + wj["open"].get<std::string>() + ", cover {" +
                     cover_text + "} with compatible family (" + family_text + ") has " +
                     std::to_string(w.amalgamations) + " amalgamations (needs exactly 1)");
    r.exit_code = kExitFails;
  }
  return emit(opt, r);
}

int run_sheaf_stalk(const Options& opt, const std::string& file, const std::string& point) {
  const auto p = continuum::presheaf_from_json(continuum::load_json_file(file));
  const auto s = continuum::stalk_at_point(p, point);
  Report r = make_report(opt, "sheaf stalk", "value");
  r.j["value"] = stalk_to_json(p, s);
  r.text.push_back("stalk at " + point + " has " + std::to_string(s.classes.size()) +
                   " germ classes; canonical sections from open " +
                   p.space().format_subset(
                       p.space().opens()[static_cast<std::size_t>(s.canonical_open)]));
  return emit(opt, r);
}

int run_sheaf_topos(const Options& opt, const std::string& file, const std::string& closed_csv) {
  const auto p = continuum::presheaf_from_json(continuum::load_json_file(file));
  const continuum::PointSet k = p.space().subset_of_names(split_names(closed_csv));
  const auto s = continuum::topos_of(p, k);
  Report r = make_report(opt, "sheaf topos", "value");
  r.j["value"] = stalk_to_json(p, s);
  r.text.push_back("inverse-image sections at " + p.space().format_subset(k) + ": " +
                   std::to_string(s.classes.size()) + " germ classes (canonical open " +
                   p.space().format_subset(
                       p.space().opens()[static_cast<std::size_t>(s.canonical_open)]) + ")");
  return emit(opt, r);
}

int run_sheaf_hull(const Options& opt, const std::string& space_file, const std::string& perm_file,
                   const std::string& set_csv) {
  const auto s = continuum::space_from_json(continuum::load_json_file(space_file));
  const auto phi = continuum::point_map_from_json(continuum::load_json_file(perm_file), s, s);
  const continuum::PointSet k = s.subset_of_names(split_names(set_csv));
  const continuum::PointSet hull = continuum::invariant_hull(s, phi, k);
  Report r = make_report(opt, "sheaf hull", "value");
  r.j["value"] = s.format_subset(hull);
  r.text.push_back("invariant hull of " + s.format_subset(k) + " = " + s.format_subset(hull));
  return emit(opt, r);
}

// ---- nil ----

int run_nil_ring(const Options& opt, const std::string& a_csv, const std::string& b_csv,
                 const std::string& op, int order) {
  const auto a = truncated_from_csv(a_csv, order);
  continuum::TruncatedPoly result(order);
  if (op == "neg") {
    result = -a;
  } else {
    if (b_csv.empty()) throw continuum::Error("--b is required for op '" + op + "'");
    const auto b = truncated_from_csv(b_csv, order);
    if (op == "add") result = a + b;
    else if (op == "mul") result = a * b;
    else throw continuum::Error("unknown ring op: " + op);
  }
  Report r = make_report(opt, "nil ring", "value");
  r.j["op"] = op;
  r.j["order"] = order;
  json coeffs = json::array();
  for (const auto& c : result.coeffs()) coeffs.push_back(continuum::rat_to_string(c));
  r.j["value"] = coeffs;
  r.text.push_back(op + " = " + result.str());
  return emit(opt, r);
}

int run_nil_lift(const Options& opt, const std::string& poly_csv, const std::string& at,
                 int order) {
  const auto f = poly_from_csv(poly_csv);
  const auto lifted = continuum::lift_and_eval(f, continuum::parse_rat(at), order);
  Report r = make_report(opt, "nil lift", "value");
  r.j["order"] = order;
  json coeffs = json::array();
  for (const auto& c : lifted.coeffs()) coeffs.push_back(continuum::rat_to_string(c));
  r.j["value"] = coeffs;
  r.text.push_back("f(" + at + " + e) = " + lifted.str());
  return emit(opt, r);
}

int run_nil_derive(const Options& opt, const std::string& poly_csv, const std::string& at) {
  const auto f = poly_from_csv(poly_csv);
  const auto d = continuum::derivative_at(f, continuum::parse_rat(at));
  Report r = make_report(opt, "nil derive", "value");
  r.j["value"] = continuum::rat_to_string(d);
  r.text.push_back(continuum::rat_to_string(d));
  return emit(opt, r);
}

int run_nil_leibniz(const Options& opt, const std::string& y_csv, const std::string& z_csv) {
  const auto y = truncated_from_csv(y_csv, 2);
  const auto z = truncated_from_csv(z_csv, 2);
  const auto trace = continuum::leibniz_check(y, z);
  Report r = make_report(opt, "nil leibniz", trace.holds ? "holds" : "fails");
  r.j["y"] = y.str();
  r.j["z"] = z.str();
  r.j["product"] = trace.product.str();
  r.j["differential"] = trace.differential.str();
  r.j["middle"] = continuum::rat_to_string(trace.middle);
  r.j["discarded"] = continuum::rat_to_string(trace.discarded);
  r.text.push_back("y·z  = " + trace.product.str());
  r.text.push_back("d(yz) = y·z - y0·z0 = " + trace.differential.str());
  r.text.push_back("z·dy + y·dz = " + continuum::rat_to_string(trace.middle) + "e");
  r.text.push_back("discarded dy·dz term: " + continuum::rat_to_string(trace.discarded) +
                   "e^2 = 0 (order 2)");
  r.exit_code = trace.holds ? kExitHolds : kExitFails;
  return emit(opt, r);
}

// ---- logic ----

int run_logic_parse(const Options& opt, const std::string& formula) {
  const auto f = continuum::parse_formula(formula);
  Report r = make_report(opt, "logic parse", "value");
  r.j["value"] = continuum::format_formula(*f);
  r.text.push_back(continuum::format_formula(*f));
  return emit(opt, r);
}

int run_logic_eval(const Options& opt, const std::string& formula, const std::string& lattice_file,
                   const std::vector<std::string>& assigns,
                   const std::vector<std::string>& region_assigns) {
  const auto f = continuum::parse_formula(formula);
  auto split_assign = [](const std::string& s) {
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw continuum::Error("assignment must look like atom=value: " + s);
    return std::make_pair(s.substr(0, eq), s.substr(eq + 1));
  };

  if (!region_assigns.empty()) {
    std::map<std::string, continuum::OpenRegion> assignment;
    for (const auto& s : region_assigns) {
      const auto [atom, file] = split_assign(s);
      assignment[atom] = load_region(file);
    }
    const auto value = continuum::eval_formula(*f, assignment);
    Report r = make_report(opt, "logic eval", "value");
    r.j["frame"] = "line";
    r.j["value"] = continuum::region_to_json(value);
    r.j["is_top"] = value.is_whole_line();
    r.text.push_back(continuum::format_formula(*f) + " = " + value.str() +
                     (value.is_whole_line() ? "  (= top)" : "  (\xE2\x89\xA0 top)"));
    return emit(opt, r);
  }

  if (lattice_file.empty())
    throw continuum::Error("either --lattice with --assign or --assign-region is required");
  const auto a = continuum::lattice_from_json(continuum::load_json_file(lattice_file));
  std::map<std::string, int> assignment;
  for (const auto& s : assigns) {
    const auto [atom, element] = split_assign(s);
    assignment[atom] = a.index_of(element);
  }
  const int value = continuum::eval_formula(*f, a, assignment);
  Report r = make_report(opt, "logic eval", "value");
  r.j["frame"] = "lattice";
  r.j["value"] = a.name(value);
  r.j["is_top"] = value == a.top();
  r.text.push_back(continuum::format_formula(*f) + " = " + a.name(value) +
                   (value == a.top() ? "  (= top)" : "  (\xE2\x89\xA0 top)"));
  return emit(opt, r);
}

int run_logic_valid(const Options& opt, const std::string& formula,
                    const std::string& lattice_file) {
  const auto f = continuum::parse_formula(formula);
  const auto a = continuum::lattice_from_json(continuum::load_json_file(lattice_file));
  const auto res = continuum::is_valid(*f, a);
  Report r = make_report(opt, "logic valid", res.valid ? "holds" : "fails");
  if (!res.valid) {
    json counter;
    std::string text;
    for (const auto& [atom, e] : res.countervaluation) {
      counter[atom] = a.name(e);
      text += (text.empty() ? "" : ", ") + atom + " = " + a.name(e);
    }
    r.j["witnesses"] = json::array({counter});
    r.text.push_back("invalid; countervaluation: " + text);
    r.exit_code = kExitFails;
  } else {
    r.text.push_back("valid in every valuation");
  }
  return emit(opt, r);
}

int run_logic_counter(const Options& opt, const std::string& formula, int max_size) {
  const auto f = continuum::parse_formula(formula);
  const auto counter = continuum::find_countermodel(*f, max_size);
  Report r = make_report(opt, "logic counter", "value");
  if (!counter) {
    r.j["value"] = nullptr;
    r.text.push_back("no countermodel up to size " + std::to_string(max_size));
  } else {
    json cj;
    cj["algebra"] = counter->algebra_name;
    json valuation;
    std::string text;
    for (const auto& [atom, e] : counter->valuation) {
      valuation[atom] = counter->algebra.name(e);
      text += (text.empty() ? "" : ", ") + atom + " = " + counter->algebra.name(e);
    }
    cj["valuation"] = valuation;
    r.j["value"] = cj;
    r.text.push_back("countermodel: " + counter->algebra_name + " with " + text);
  }
  return emit(opt, r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "continuum — point-free topology toolbox: finite Heyting algebras, the "
      "rational-interval frame of the line, connectivity/divisibility axiom checks, "
      "presheaves with stalks and gluing, nilpotent-infinitesimal calculus, and an "
      "intuitionistic propositional evaluator. [ops: dispatch emit]"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json_out, "emit a machine-readable JSON report");
  app.add_option("--seed", opt.seed, "seed for all randomized sampling")->default_val(0);

  // lattice
  auto* lattice = app.add_subcommand("lattice", "finite bounded distributive lattices");
  std::string lat_file, lat_op, lat_u, lat_v;
  auto* lattice_check = lattice->add_subcommand(
      "check", "validate a lattice file: partial order, meets/joins, distributivity "
               "[ops: build_lattice]");
  lattice_check->add_option("--lattice", lat_file)->required();
  auto* lattice_op = lattice->add_subcommand(
      "op", "meet/join/implies/not of elements; 'not' is the pseudo-complement u -> 0 "
            "[ops: meet join implies pseudo_complement]");
  lattice_op->add_option("--lattice", lat_file)->required();
  lattice_op->add_option("--op", lat_op, "meet|join|implies|not")->required();
  lattice_op->add_option("--u", lat_u)->required();
  lattice_op->add_option("--v", lat_v);

  // space
  auto* space = app.add_subcommand("space", "finite topological spaces");
  std::string sp_file, sp_op, sp_set, sp_source, sp_target, sp_map;
  auto* space_check = space->add_subcommand(
      "check", "validate points + opens as a topology [ops: validate_space]");
  space_check->add_option("--space", sp_file)->required();
  auto* space_alex = space->add_subcommand(
      "alexandrov", "space from a preorder; opens are the down-closed sets, so the minimal "
                    "open around x is its principal down-set [ops: alexandrov_from_preorder]");
  space_alex->add_option("--preorder", sp_file)->required();
  auto* space_op = space->add_subcommand(
      "op", "interior/closure/boundary of a point subset; closure is the intersection of "
            "all CLOSED sets containing it (intersecting the open supersets instead gives "
            "the minimal open neighborhood, a different operator) [ops: interior closure boundary]");
  space_op->add_option("--space", sp_file)->required();
  space_op->add_option("--op", sp_op, "interior|closure|boundary")->required();
  space_op->add_option("--set", sp_set, "comma-separated points")->required();
  auto* space_conn = space->add_subcommand(
      "connected", "connectivity of an open and its finest decomposition "
                   "[ops: is_connected_open components]");
  space_conn->add_option("--space", sp_file)->required();
  space_conn->add_option("--set", sp_set, "comma-separated points (must be an open)")->required();
  auto* space_cont = space->add_subcommand(
      "continuous", "preimage test for a point map [ops: is_continuous]");
  space_cont->add_option("--source", sp_source)->required();
  space_cont->add_option("--target", sp_target)->required();
  space_cont->add_option("--map", sp_map)->required();
  auto* space_lat = space->add_subcommand(
      "lattice", "the Heyting algebra of opens under inclusion [ops: opens_lattice]");
  space_lat->add_option("--space", sp_file)->required();

  // line
  auto* line = app.add_subcommand("line", "exact open regions and piecewise functions on the line");
  std::string ln_op, ln_u, ln_v, ln_at, ln_fn, ln_a, ln_b, ln_c;
  int ln_kmax = 2;
  auto* line_op = line->add_subcommand(
      "op", "frame operations on regions; 'not' is the interior of the complement, "
            "'implies' is interior(complement(u) ∪ v) "
            "[ops: region_meet region_join region_not region_implies]");
  line_op->add_option("--op", ln_op, "meet|join|not|implies")->required();
  line_op->add_option("--u", ln_u, "region file")->required();
  line_op->add_option("--v", ln_v, "region file");
  auto* line_boundary = line->add_subcommand(
      "boundary", "finite endpoint set of a region [ops: region_boundary]");
  line_boundary->add_option("--u", ln_u)->required();
  auto* line_divide = line->add_subcommand(
      "divide", "split a region at an interior point into disjoint halves whose join is "
                "dense in it [ops: divide]");
  line_divide->add_option("--u", ln_u)->required();
  line_divide->add_option("--at", ln_at)->required();
  auto* line_compact = line->add_subcommand(
      "compact", "is the complement closed and bounded [ops: is_compact_complement]");
  line_compact->add_option("--u", ln_u)->required();
  auto* line_germ = line->add_subcommand(
      "germ", "one-sided germ of a piecewise function at a point [ops: germ_at]");
  line_germ->add_option("--fn", ln_fn)->required();
  line_germ->add_option("--at", ln_at)->required();
  auto* line_strata = line->add_subcommand(
      "strata", "catastrophe points and smoothness strata [ops: catastrophe_set strata]");
  line_strata->add_option("--fn", ln_fn)->required();
  line_strata->add_option("--kmax", ln_kmax, "smoothness classification cap")->default_val(2);
  auto* line_ivt = line->add_subcommand(
      "ivt", "leftmost exact solution of f(x) = c on [a,b] for piecewise-linear continuous f "
             "[ops: ivt_witness]");
  line_ivt->add_option("--fn", ln_fn)->required();
  line_ivt->add_option("--a", ln_a)->required();
  line_ivt->add_option("--b", ln_b)->required();
  line_ivt->add_option("--c", ln_c)->required();

  // axioms
  auto* axioms = app.add_subcommand("axioms", "the three locale axioms");
  std::string ax_file, ax_mode = "corrected", ax_which = "all", ax_samples;
  int ax_random = 0;
  auto* axioms_check = axioms->add_subcommand(
      "check", "global connectivity, local connectivity and divisibility on a finite "
               "lattice, literal or corrected reading "
               "[ops: check_global_connectivity check_local_connectivity check_divisibility]");
  axioms_check->add_option("--lattice", ax_file)->required();
  axioms_check->add_option("--mode", ax_mode, "as-written|corrected")->default_val("corrected");
  axioms_check->add_option("--axiom", ax_which, "all|global|local|divisibility")->default_val("all");
  auto* axioms_line = axioms->add_subcommand(
      "check-line", "witness-based divisibility over sample regions of the line; --random N "
                    "appends seeded samples [ops: check_divisibility_line]");
  axioms_line->add_option("--samples", ax_samples, "JSON array of regions")->required();
  axioms_line->add_option("--random", ax_random, "extra generated samples")->default_val(0);

  // sheaf
  auto* sheaf = app.add_subcommand("sheaf", "presheaves on finite spaces");
  std::string sh_file, sh_point, sh_closed, sh_space, sh_perm, sh_set;
  auto* sheaf_validate = sheaf->add_subcommand(
      "validate", "functoriality of a presheaf file [ops: validate_presheaf]");
  sheaf_validate->add_option("--presheaf", sh_file)->required();
  auto* sheaf_check = sheaf->add_subcommand(
      "check", "unique gluing against every irredundant cover [ops: check_sheaf]");
  sheaf_check->add_option("--presheaf", sh_file)->required();
  auto* sheaf_stalk = sheaf->add_subcommand(
      "stalk", "germ classes at a point [ops: stalk_at_point]");
  sheaf_stalk->add_option("--presheaf", sh_file)->required();
  sheaf_stalk->add_option("--point", sh_point)->required();
  auto* sheaf_topos = sheaf->add_subcommand(
      "topos", "inverse-image sections at a closed subset [ops: topos_of]");
  sheaf_topos->add_option("--presheaf", sh_file)->required();
  sheaf_topos->add_option("--closed", sh_closed, "comma-separated points")->required();
  auto* sheaf_hull = sheaf->add_subcommand(
      "hull", "smallest invariant open containing a subset, for a homeomorphism "
              "[ops: invariant_hull]");
  sheaf_hull->add_option("--space", sh_space)->required();
  sheaf_hull->add_option("--perm", sh_perm, "point map file")->required();
  sheaf_hull->add_option("--set", sh_set, "comma-separated points")->required();

  // nil
  auto* nil = app.add_subcommand("nil", "truncated ring Q[e]/(e^N)");
  std::string nil_a, nil_b, nil_op, nil_poly, nil_at, nil_y, nil_z;
  int nil_order = 2;
  auto* nil_ring = nil->add_subcommand(
      "ring", "ring arithmetic on coefficient lists [ops: add mul neg]");
  nil_ring->add_option("--a", nil_a, "constant-first coefficients")->required();
  nil_ring->add_option("--b", nil_b);
  nil_ring->add_option("--op", nil_op, "add|mul|neg")->required();
  nil_ring->add_option("--order", nil_order)->default_val(2);
  auto* nil_lift = nil->add_subcommand(
      "lift", "f(x + e) in the truncated ring; coefficient k is f^(k)(x)/k! "
              "[ops: lift_and_eval]");
  nil_lift->add_option("--poly", nil_poly, "constant-first coefficients")->required();
  nil_lift->add_option("--at", nil_at)->required();
  nil_lift->add_option("--order", nil_order)->default_val(2);
  auto* nil_derive = nil->add_subcommand(
      "derive", "derivative of a polynomial at a point via the e-coefficient "
                "[ops: derivative]");
  nil_derive->add_option("--poly", nil_poly)->required();
  nil_derive->add_option("--at", nil_at)->required();
  auto* nil_leibniz = nil->add_subcommand(
      "leibniz", "d(yz) = z·dy + y·dz with the discarded dy·dz rectangle reported "
                 "[ops: leibniz_check]");
  nil_leibniz->add_option("--y", nil_y, "two coefficients y0,y1")->required();
  nil_leibniz->add_option("--z", nil_z, "two coefficients z0,z1")->required();

  // logic
  auto* logic = app.add_subcommand("logic", "intuitionistic propositional logic");
  std::string lg_formula, lg_lattice;
  std::vector<std::string> lg_assigns, lg_region_assigns;
  int lg_max_size = 5;
  auto* logic_parse = logic->add_subcommand(
      "parse", "parse and reprint a formula; ~phi is sugar for phi -> bot [ops: parse]");
  logic_parse->add_option("--formula", lg_formula)->required();
  auto* logic_eval = logic->add_subcommand(
      "eval", "value of a formula in a finite algebra (--assign atom=element) or in the "
              "line frame (--assign-region atom=region-file) [ops: eval]");
  logic_eval->add_option("--formula", lg_formula)->required();
  logic_eval->add_option("--lattice", lg_lattice);
  logic_eval->add_option("--assign", lg_assigns);
  logic_eval->add_option("--assign-region", lg_region_assigns);
  auto* logic_valid = logic->add_subcommand(
      "valid", "exhaustive validity over all valuations [ops: is_valid]");
  logic_valid->add_option("--formula", lg_formula)->required();
  logic_valid->add_option("--lattice", lg_lattice)->required();
  auto* logic_counter = logic->add_subcommand(
      "counter", "smallest refuting algebra, chains first [ops: find_countermodel]");
  logic_counter->add_option("--formula", lg_formula)->required();
  logic_counter->add_option("--max-size", lg_max_size)->default_val(5);

  CLI11_PARSE(app, argc, argv);

  try {
    if (lattice_check->parsed()) return run_lattice_check(opt, lat_file);
    if (lattice_op->parsed()) return run_lattice_op(opt, lat_file, lat_op, lat_u, lat_v);
    if (space_check->parsed()) return run_space_check(opt, sp_file);
    if (space_alex->parsed()) return run_space_alexandrov(opt, sp_file);
    if (space_op->parsed()) return run_space_op(opt, sp_file, sp_op, sp_set);
    if (space_conn->parsed()) return run_space_connected(opt, sp_file, sp_set);
    if (space_cont->parsed()) return run_space_continuous(opt, sp_source, sp_target, sp_map);
    if (space_lat->parsed()) return run_space_lattice(opt, sp_file);
    if (line_op->parsed()) return run_line_op(opt, ln_op, ln_u, ln_v);
    if (line_boundary->parsed()) return run_line_boundary(opt, ln_u);
    if (line_divide->parsed()) return run_line_divide(opt, ln_u, ln_at);
    if (line_compact->parsed()) return run_line_compact(opt, ln_u);
    if (line_germ->parsed()) return run_line_germ(opt, ln_fn, ln_at);
    if (line_strata->parsed()) return run_line_strata(opt, ln_fn, ln_kmax);
    if (line_ivt->parsed()) return run_line_ivt(opt, ln_fn, ln_a, ln_b, ln_c);
    if (axioms_check->parsed()) return run_axioms_check(opt, ax_file, ax_mode, ax_which);
    if (axioms_line->parsed()) return run_axioms_check_line(opt, ax_samples, ax_random);
    if (sheaf_validate->parsed()) return run_sheaf_validate(opt, sh_file);
    if (sheaf_check->parsed()) return run_sheaf_check(opt, sh_file);
    if (sheaf_stalk->parsed()) return run_sheaf_stalk(opt, sh_file, sh_point);
    if (sheaf_topos->parsed()) return run_sheaf_topos(opt, sh_file, sh_closed);
    if (sheaf_hull->parsed()) return run_sheaf_hull(opt, sh_space, sh_perm, sh_set);
    if (nil_ring->parsed()) return run_nil_ring(opt, nil_a, nil_b, nil_op, nil_order);
    if (nil_lift->parsed()) return run_nil_lift(opt, nil_poly, nil_at, nil_order);
    if (nil_derive->parsed()) return run_nil_derive(opt, nil_poly, nil_at);
    if (nil_leibniz->parsed()) return run_nil_leibniz(opt, nil_y, nil_z);
    if (logic_parse->parsed()) return run_logic_parse(opt, lg_formula);
    if (logic_eval->parsed())
      return run_logic_eval(opt, lg_formula, lg_lattice, lg_assigns, lg_region_assigns);
    if (logic_valid->parsed()) return run_logic_valid(opt, lg_formula, lg_lattice);
    if (logic_counter->parsed()) return run_logic_counter(opt, lg_formula, lg_max_size);
    std::cerr << "unknown command\n";
    return kExitBadInput;
  } catch (const continuum::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
