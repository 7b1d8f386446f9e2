#include "continuum/finite_space.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace continuum {

namespace {

const std::vector<std::string> kGenericPoints = {"p", "q", "r", "s"};

std::vector<std::string> generic_points(int n) {
  std::vector<std::string> pts;
  for (int i = 0; i < n; ++i) {
    if (i < static_cast<int>(kGenericPoints.size())) pts.push_back(kGenericPoints[static_cast<std::size_t>(i)]);
    else pts.push_back("p" + std::to_string(i));
  }
  return pts;
}

}  // namespace

FiniteSpace FiniteSpace::validate(std::vector<std::string> points, std::vector<PointSet> opens) {
  if (points.size() > 64) throw Error("at most 64 points are supported");
  FiniteSpace s;
  s.points_ = std::move(points);
  {
    std::map<std::string, int> seen;
    for (int i = 0; i < s.point_count(); ++i)
      if (!seen.emplace(s.points_[static_cast<std::size_t>(i)], i).second)
        throw Error("duplicate point: " + s.points_[static_cast<std::size_t>(i)]);
  }
  s.full_ = s.point_count() == 64 ? ~PointSet{0} : (PointSet{1} << s.point_count()) - 1;
  s.opens_ = std::move(opens);

  for (std::size_t i = 0; i < s.opens_.size(); ++i) {
    if (s.opens_[i] & ~s.full_) throw OpenMentionsUnknownPoint("bit outside the point set");
    for (std::size_t j = i + 1; j < s.opens_.size(); ++j)
      if (s.opens_[i] == s.opens_[j])
        throw Error("duplicate open: " + s.format_subset(s.opens_[i]));
  }

  auto member = [&](PointSet u) {
    return std::find(s.opens_.begin(), s.opens_.end(), u) != s.opens_.end();
  };
  if (!member(0) || !member(s.full_)) throw MissingEmptyOrFull();
  for (PointSet u : s.opens_)
    for (PointSet v : s.opens_) {
      if (!member(u | v)) throw NotClosedUnderUnion(s.format_subset(u), s.format_subset(v));
      if (!member(u & v)) throw NotClosedUnderIntersection(s.format_subset(u), s.format_subset(v));
    }
  return s;
}

FiniteSpace FiniteSpace::from_preorder(
    std::vector<std::string> points,
    const std::vector<std::pair<std::string, std::string>>& preorder) {
  const int n = static_cast<int>(points.size());
  if (n > 20) throw Error("from_preorder supports at most 20 points");
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i)
    if (!index.emplace(points[static_cast<std::size_t>(i)], i).second)
      throw Error("duplicate point: " + points[static_cast<std::size_t>(i)]);

  std::vector<char> leq(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  auto at = [n](int i, int j) { return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j); };
  for (int i = 0; i < n; ++i) leq[at(i, i)] = 1;
  for (const auto& [lo, hi] : preorder) {
    auto a = index.find(lo), b = index.find(hi);
    if (a == index.end()) throw UnknownPoint(lo);
    if (b == index.end()) throw UnknownPoint(hi);
    leq[at(a->second, b->second)] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[at(i, k)])
        for (int j = 0; j < n; ++j)
          if (leq[at(k, j)]) leq[at(i, j)] = 1;

  // Down-closed subsets of the preorder become the opens.
  std::vector<PointSet> opens;
  const PointSet full = n == 0 ? 0 : (PointSet{1} << n) - 1;
  for (PointSet sub = 0;; ++sub) {
    bool down_closed = true;
    for (int y = 0; y < n && down_closed; ++y) {
      if (!(sub & (PointSet{1} << y))) continue;
      for (int x = 0; x < n; ++x)
        if (leq[at(x, y)] && !(sub & (PointSet{1} << x))) { down_closed = false; break; }
    }
    if (down_closed) opens.push_back(sub);
    if (sub == full) break;
  }
  std::sort(opens.begin(), opens.end(), [](PointSet a, PointSet b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return validate(std::move(points), std::move(opens));
}

int FiniteSpace::point_index(const std::string& name) const {
  for (int i = 0; i < point_count(); ++i)
    if (points_[static_cast<std::size_t>(i)] == name) return i;
  throw UnknownPoint(name);
}

std::optional<int> FiniteSpace::open_index(PointSet s) const {
  for (int i = 0; i < open_count(); ++i)
    if (opens_[static_cast<std::size_t>(i)] == s) return i;
  return std::nullopt;
}

void FiniteSpace::check_subset(PointSet s) const {
  if (s & ~full_) throw UnknownPoint("bit outside the point set");
}

PointSet FiniteSpace::interior(PointSet y) const {
  check_subset(y);
  PointSet r = 0;
  for (PointSet u : opens_)
    if ((u & ~y) == 0) r |= u;
  return r;
}

PointSet FiniteSpace::closure(PointSet y) const {
  check_subset(y);
  PointSet r = full_;
  for (PointSet u : opens_) {
    const PointSet closed = full_ & ~u;
    if ((y & ~closed) == 0) r &= closed;
  }
  return r;
}

PointSet FiniteSpace::boundary(PointSet y) const {
  return closure(y) & ~interior(y);
}

PointSet FiniteSpace::minimal_open_superset(PointSet s) const {
  check_subset(s);
  PointSet r = full_;
  for (PointSet u : opens_)
    if ((s & ~u) == 0) r &= u;
  return r;
}

PointSet FiniteSpace::minimal_open_of_point(int p) const {
  if (p < 0 || p >= point_count()) throw UnknownPoint("#" + std::to_string(p));
  return minimal_open_superset(PointSet{1} << p);
}

bool FiniteSpace::is_connected_open(PointSet u) const {
  if (!is_open(u)) throw NotAnOpen(format_subset(u));
  for (PointSet v : opens_) {
    if (v == 0 || (v & ~u)) continue;
    for (PointSet w : opens_) {
      if (w == 0 || (w & ~u)) continue;
      if ((v & w) == 0 && (v | w) == u) return false;
    }
  }
  return true;
}

std::vector<PointSet> FiniteSpace::components(PointSet u) const {
  if (!is_open(u)) throw NotAnOpen(format_subset(u));
  std::vector<PointSet> out;
  std::vector<PointSet> stack{u};
  while (!stack.empty()) {
    const PointSet cur = stack.back();
    stack.pop_back();
    if (cur == 0) continue;
    bool split = false;
    for (std::size_t i = 0; i < opens_.size() && !split; ++i) {
      const PointSet v = opens_[i];
      if (v == 0 || (v & ~cur)) continue;
      for (std::size_t j = 0; j < opens_.size(); ++j) {
        const PointSet w = opens_[j];
        if (w == 0 || (w & ~cur)) continue;
        if ((v & w) == 0 && (v | w) == cur) {
          stack.push_back(v);
          stack.push_back(w);
          split = true;
          break;
        }
      }
    }
    if (!split) out.push_back(cur);
  }
  std::sort(out.begin(), out.end(), [](PointSet a, PointSet b) {
    return std::countr_zero(a) < std::countr_zero(b);
  });
  return out;
}

HeytingAlgebra FiniteSpace::opens_lattice() const {
  std::vector<std::string> names;
  names.reserve(opens_.size());
  for (PointSet u : opens_) names.push_back(format_subset(u));
  HeytingAlgebra::OrderPairs pairs;
  for (std::size_t i = 0; i < opens_.size(); ++i)
    for (std::size_t j = 0; j < opens_.size(); ++j)
      if (i != j && (opens_[i] & ~opens_[j]) == 0)
        pairs.emplace_back(names[i], names[j]);
  return HeytingAlgebra::build(std::move(names), pairs);
}

std::string FiniteSpace::format_subset(PointSet s) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < point_count(); ++i) {
    if (!(s & (PointSet{1} << i))) continue;
    if (!first) out += ",";
    out += points_[static_cast<std::size_t>(i)];
    first = false;
  }
  return out + "}";
}

PointSet FiniteSpace::subset_of_names(const std::vector<std::string>& names) const {
  PointSet s = 0;
  for (const auto& n : names) s |= PointSet{1} << point_index(n);
  return s;
}

PointMap PointMap::build(FiniteSpace source, FiniteSpace target,
                         const std::map<std::string, std::string>& map) {
  PointMap f{std::move(source), std::move(target), {}};
  f.assignment.resize(static_cast<std::size_t>(f.source.point_count()));
  std::vector<char> covered(static_cast<std::size_t>(f.source.point_count()), 0);
  for (const auto& [from, to] : map) {
    const int i = f.source.point_index(from);
    f.assignment[static_cast<std::size_t>(i)] = f.target.point_index(to);
    covered[static_cast<std::size_t>(i)] = 1;
  }
  for (int i = 0; i < f.source.point_count(); ++i)
    if (!covered[static_cast<std::size_t>(i)])
      throw Error("point map is not total: missing " + f.source.point_names()[static_cast<std::size_t>(i)]);
  return f;
}

PointSet PointMap::image(PointSet s) const {
  PointSet r = 0;
  for (int i = 0; i < source.point_count(); ++i)
    if (s & (PointSet{1} << i)) r |= PointSet{1} << assignment[static_cast<std::size_t>(i)];
  return r;
}

PointSet PointMap::preimage(PointSet s) const {
  PointSet r = 0;
  for (int i = 0; i < source.point_count(); ++i)
    if (s & (PointSet{1} << assignment[static_cast<std::size_t>(i)])) r |= PointSet{1} << i;
  return r;
}

ContinuityResult is_continuous(const PointMap& f) {
  for (PointSet u : f.target.opens())
    if (!f.source.is_open(f.preimage(u))) return {false, u};
  return {true, std::nullopt};
}

std::vector<FiniteSpace> all_topologies(int point_count) {
  if (point_count < 0 || point_count > 4) throw Error("all_topologies supports 0..4 points");
  const int n = point_count;
  const int subsets = 1 << n;
  std::vector<FiniteSpace> result;
  // A family of subsets is encoded by a bitmask over the 2^n subsets.
  for (std::uint32_t fam = 0; fam < (1u << subsets); ++fam) {
    if (!(fam & 1u) || !(fam & (1u << (subsets - 1)))) continue;  // ∅ and X
    bool closed = true;
    for (int a = 0; a < subsets && closed; ++a) {
      if (!(fam & (1u << a))) continue;
      for (int b = a; b < subsets; ++b) {
        if (!(fam & (1u << b))) continue;
        if (!(fam & (1u << (a | b))) || !(fam & (1u << (a & b)))) { closed = false; break; }
      }
    }
    if (!closed) continue;
    std::vector<PointSet> opens;
    for (int a = 0; a < subsets; ++a)
      if (fam & (1u << a)) opens.push_back(static_cast<PointSet>(a));
    std::sort(opens.begin(), opens.end(), [](PointSet a, PointSet b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    result.push_back(FiniteSpace::validate(generic_points(n), std::move(opens)));
  }
  return result;
}

FiniteSpace sierpinski_space() {
  return FiniteSpace::validate({"p", "q"}, {0, 1, 3});
}

FiniteSpace discrete_space(int point_count) {
  if (point_count < 0 || point_count > 16) throw Error("discrete_space supports 0..16 points");
  std::vector<PointSet> opens;
  const PointSet full = point_count == 0 ? 0 : (PointSet{1} << point_count) - 1;
  for (PointSet s = 0;; ++s) {
    opens.push_back(s);
    if (s == full) break;
  }
  std::sort(opens.begin(), opens.end(), [](PointSet a, PointSet b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return FiniteSpace::validate(generic_points(point_count), std::move(opens));
}

FiniteSpace coarse_space(int point_count) {
  std::vector<PointSet> opens{0};
  const PointSet full = point_count == 0 ? 0 : (PointSet{1} << point_count) - 1;
  if (full != 0) opens.push_back(full);
  return FiniteSpace::validate(generic_points(point_count), std::move(opens));
}

}  // namespace continuum
