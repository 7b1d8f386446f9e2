#include "continuum/axioms.hpp"

#include <algorithm>

#include "continuum/errors.hpp"

namespace continuum {

std::string to_string(AxiomMode mode) {
  return mode == AxiomMode::as_written ? "as-written" : "corrected";
}

std::string to_string(AxiomName axiom) {
  switch (axiom) {
    case AxiomName::global_connectivity: return "global-connectivity";
    case AxiomName::local_connectivity: return "local-connectivity";
    case AxiomName::divisibility: return "divisibility";
  }
  return {};
}

bool is_connected_element(const HeytingAlgebra& a, int z) {
  for (int u = 0; u < a.size(); ++u) {
    if (u == a.bottom()) continue;
    for (int v = 0; v < a.size(); ++v) {
      if (v == a.bottom()) continue;
      if (a.join(u, v) == z && a.meet(u, v) == a.bottom()) return false;
    }
  }
  return true;
}

AxiomReport check_global_connectivity(const HeytingAlgebra& a, AxiomMode mode) {
  AxiomReport report{AxiomName::global_connectivity, mode, true, {}, {}};
  // The degenerate pair first, so the as-written report names (1, 0).
  std::vector<std::pair<int, int>> pairs{{a.top(), a.bottom()}};
  for (int u = 0; u < a.size(); ++u)
    for (int v = 0; v < a.size(); ++v) pairs.emplace_back(u, v);
  for (auto [u, v] : pairs) {
    if (mode == AxiomMode::corrected && (u == a.bottom() || v == a.bottom())) continue;
    if (a.join(u, v) == a.top() && a.meet(u, v) == a.bottom()) {
      report.holds = false;
      report.witness = {a.name(u), a.name(v)};
      report.note = "1 = " + a.name(u) + " \xE2\x88\xA8 " + a.name(v) + " with " + a.name(u) +
                    " \xE2\x88\xA7 " + a.name(v) + " = 0";
      if (mode == AxiomMode::as_written && u == a.top() && v == a.bottom())
        report.note += " (degenerate instantiation)";
      return report;
    }
  }
  return report;
}

AxiomReport check_local_connectivity(const HeytingAlgebra& a, AxiomMode mode) {
  AxiomReport report{AxiomName::local_connectivity, mode, true, {}, {}};
  std::vector<int> connected;
  for (int z = 0; z < a.size(); ++z)
    if (is_connected_element(a, z)) connected.push_back(z);

  auto join_of_connected_below = [&](int x) {
    int r = a.bottom();
    for (int z : connected)
      if (a.leq(z, x)) r = a.join(r, z);
    return r;
  };

  if (mode == AxiomMode::as_written) {
    const int total = join_of_connected_below(a.top());
    if (total != a.top()) {
      report.holds = false;
      report.witness = {a.name(a.top()), a.name(total)};
      report.note = "join of all connected elements is " + a.name(total) + ", not top";
    }
    return report;
  }
  for (int x = 0; x < a.size(); ++x) {
    const int r = join_of_connected_below(x);
    if (r != x) {
      report.holds = false;
      report.witness = {a.name(x), a.name(r)};
      report.note = "join of connected elements below " + a.name(x) + " is only " + a.name(r);
      return report;
    }
  }
  return report;
}

namespace {

bool dense_below(const HeytingAlgebra& a, int part, int u) {
  // every nonzero z <= u meets `part`
  for (int z = 0; z < a.size(); ++z) {
    if (z == a.bottom() || !a.leq(z, u)) continue;
    if (a.meet(z, part) == a.bottom()) return false;
  }
  return true;
}

}  // namespace

AxiomReport check_divisibility(const HeytingAlgebra& a, AxiomMode mode) {
  AxiomReport report{AxiomName::divisibility, mode, true, {}, {}};
  if (mode == AxiomMode::as_written) {
    for (int u = 0; u < a.size(); ++u) {
      bool found = false;
      for (int w = 0; w < a.size() && !found; ++w)
        for (int v = 0; v < a.size() && !found; ++v) {
          if (a.meet(w, v) != a.bottom()) continue;
          bool all = true;
          const int wv = a.join(w, v);
          for (int z = 0; z < a.size(); ++z)
            if (a.leq(wv, z) && z != u) { all = false; break; }
          if (all) found = true;
        }
      if (!found) {
        report.holds = false;
        report.witness = {a.name(u)};
        report.note = "no pair (w,v) with w \xE2\x88\xA7 v = 0 forces every z above w \xE2\x88\xA8 v to equal " +
                      a.name(u);
        return report;
      }
    }
    return report;
  }
  for (int u = 0; u < a.size(); ++u) {
    if (u == a.bottom()) continue;
    bool found = false;
    for (int w = 0; w < a.size() && !found; ++w) {
      if (w == a.bottom() || !a.leq(w, u)) continue;
      for (int v = 0; v < a.size() && !found; ++v) {
        if (v == a.bottom() || !a.leq(v, u)) continue;
        if (a.meet(w, v) != a.bottom()) continue;
        if (dense_below(a, a.join(w, v), u)) found = true;
      }
    }
    if (!found) {
      report.holds = false;
      report.witness = {a.name(u)};
      report.note = a.name(u) + " has no two disjoint nonzero parts whose join is dense in it";
      return report;
    }
  }
  return report;
}

AxiomReport check_divisibility_line(const std::vector<OpenRegion>& samples) {
  AxiomReport report{AxiomName::divisibility, AxiomMode::corrected, true, {}, {}};
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const OpenRegion& u = samples[i];
    if (u.empty()) throw EmptySampleRegion(i);
    const Rat cut = interval_probe_point(u.intervals().front());
    const auto [w, v] = divide(u, cut);

    auto fail = [&](const std::string& why, const OpenRegion& z) {
      report.holds = false;
      report.witness = {u.str(), w.str(), v.str(), z.str()};
      report.note = "sample #" + std::to_string(i) + ": " + why;
    };
    if (w.empty() || v.empty()) {
      fail("split part empty", OpenRegion());
      return report;
    }
    if (!region_meet(w, v).empty()) {
      fail("split parts are not disjoint", region_meet(w, v));
      return report;
    }

    // Density probes: single intervals with endpoints drawn from u's
    // endpoints and midpoints, clipped to u, plus u itself.
    std::vector<Rat> points;
    for (const auto& iv : u.intervals()) {
      if (iv.lo.finite()) points.push_back(iv.lo.value());
      if (iv.hi.finite()) points.push_back(iv.hi.value());
      points.push_back(interval_probe_point(iv));
    }
    points.push_back(cut);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    std::vector<Bound> bounds{Bound::neg_inf()};
    for (const Rat& p : points) bounds.push_back(Bound::at(p));
    bounds.push_back(Bound::pos_inf());

    const OpenRegion parts = region_join(w, v);
    std::vector<OpenRegion> probes{u};
    for (std::size_t lo = 0; lo < bounds.size(); ++lo)
      for (std::size_t hi = lo + 1; hi < bounds.size(); ++hi) {
        if (!(bounds[lo] < bounds[hi])) continue;
        probes.push_back(region_meet(u, OpenRegion::of({{bounds[lo], bounds[hi]}})));
      }
    for (const OpenRegion& z : probes) {
      if (z.empty()) continue;
      if (region_meet(z, parts).empty()) {
        fail("probe subregion misses the split", z);
        return report;
      }
    }
  }
  report.note = "all " + std::to_string(samples.size()) + " samples divisible with halving witnesses";
  return report;
}

}  // namespace continuum
