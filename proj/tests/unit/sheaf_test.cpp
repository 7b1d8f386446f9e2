#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "continuum/sheaf.hpp"
#include "test_helpers.hpp"

using namespace continuum;

namespace {

// F(X)={s1,s2}, F({p})={t}, F(∅)={*}; both global sections restrict to t.
Presheaf sierpinski_presheaf() {
  return Presheaf::build(
      sierpinski_space(), {{"*"}, {"t"}, {"s1", "s2"}},
      {{{1, 0}, {{"t", "*"}}}, {{2, 1}, {{"s1", "t"}, {"s2", "t"}}}});
}

// F(U) = {c0, c1} everywhere, identity restrictions.
Presheaf constant_presheaf(const FiniteSpace& space) {
  std::vector<std::vector<std::string>> sections(
      static_cast<std::size_t>(space.open_count()), {"c0", "c1"});
  std::map<std::pair<int, int>, std::map<std::string, std::string>> restrictions;
  for (int v = 0; v < space.open_count(); ++v)
    for (int u = 0; u < space.open_count(); ++u)
      if (u != v && (space.opens()[static_cast<std::size_t>(u)] &
                     ~space.opens()[static_cast<std::size_t>(v)]) == 0)
        restrictions[{v, u}] = {{"c0", "c0"}, {"c1", "c1"}};
  return Presheaf::build(space, std::move(sections), restrictions);
}

// Product presheaf: F(U) = functions U -> values; restriction drops points.
// This is always a sheaf. stalk_size_at(x) = |values(x)|.
Presheaf function_presheaf(const FiniteSpace& space, const std::vector<int>& sizes) {
  const int n = space.open_count();
  std::vector<std::vector<std::string>> sections(static_cast<std::size_t>(n));
  auto tuples_of = [&](PointSet u) {
    std::vector<std::string> out;
    std::vector<int> idx;
    std::vector<int> pts;
    for (int i = 0; i < space.point_count(); ++i)
      if (u & (PointSet{1} << i)) pts.push_back(i);
    idx.assign(pts.size(), 0);
    while (true) {
      std::string label;
      for (std::size_t k = 0; k < pts.size(); ++k)
        label += std::to_string(pts[k]) + ":" + std::to_string(idx[k]) + ";";
      if (label.empty()) label = "()";
      out.push_back(label);
      std::size_t k = 0;
      for (; k < pts.size(); ++k) {
        if (++idx[k] < sizes[static_cast<std::size_t>(pts[k])]) break;
        idx[k] = 0;
      }
      if (k == pts.size()) break;
    }
    return out;
  };
  for (int u = 0; u < n; ++u) sections[static_cast<std::size_t>(u)] =
      tuples_of(space.opens()[static_cast<std::size_t>(u)]);

  // restriction: keep only the coordinates of the smaller open
  std::map<std::pair<int, int>, std::map<std::string, std::string>> restrictions;
  auto project = [&](const std::string& label, PointSet to) {
    std::string out;
    std::size_t pos = 0;
    while (pos < label.size() && label != "()") {
      const auto colon = label.find(':', pos);
      const auto semi = label.find(';', pos);
      const int point = std::stoi(label.substr(pos, colon - pos));
      if (to & (PointSet{1} << point)) out += label.substr(pos, semi - pos + 1);
      pos = semi + 1;
    }
    return out.empty() ? "()" : out;
  };
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u) {
      const PointSet pu = space.opens()[static_cast<std::size_t>(u)];
      const PointSet pv = space.opens()[static_cast<std::size_t>(v)];
      if (u == v || (pu & ~pv)) continue;
      std::map<std::string, std::string> table;
      for (const auto& label : sections[static_cast<std::size_t>(v)])
        table[label] = project(label, pu);
      restrictions[{v, u}] = std::move(table);
    }
  return Presheaf::build(space, std::move(sections), restrictions);
}

// Independent germ-class oracle: sweep-based partition refinement instead of
// the library's union-find, straight from the definition.
std::vector<std::set<std::pair<int, int>>> oracle_germ_classes(const Presheaf& p,
                                                               const std::vector<int>& family) {
  const auto& opens = p.space().opens();
  std::vector<std::pair<int, int>> members;
  for (int u : family)
    for (int i = 0; i < static_cast<int>(p.sections(u).size()); ++i) members.emplace_back(u, i);

  auto equivalent = [&](std::pair<int, int> a, std::pair<int, int> b) {
    const PointSet inter = opens[static_cast<std::size_t>(a.first)] &
                           opens[static_cast<std::size_t>(b.first)];
    for (int w : family) {
      if (opens[static_cast<std::size_t>(w)] & ~inter) continue;
      if (p.restrict_section(a.first, w, a.second) == p.restrict_section(b.first, w, b.second))
        return true;
    }
    return false;
  };

  std::vector<int> cls(members.size());
  std::iota(cls.begin(), cls.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < members.size(); ++j)
        if (cls[i] != cls[j] && equivalent(members[i], members[j])) {
          const int from = std::max(cls[i], cls[j]), to = std::min(cls[i], cls[j]);
          for (auto& c : cls)
            if (c == from) c = to;
          changed = true;
        }
  }
  std::map<int, std::set<std::pair<int, int>>> grouped;
  for (std::size_t i = 0; i < members.size(); ++i) grouped[cls[i]].insert(members[i]);
  std::vector<std::set<std::pair<int, int>>> out;
  for (auto& [_, group] : grouped) out.push_back(std::move(group));
  return out;
}

std::vector<int> point_family(const FiniteSpace& s, int point) {
  std::vector<int> family;
  for (int u = 0; u < s.open_count(); ++u)
    if (s.opens()[static_cast<std::size_t>(u)] & (PointSet{1} << point)) family.push_back(u);
  return family;
}

void check_stalk_against_oracle(const Presheaf& p, const Stalk& stalk,
                                const std::vector<int>& family) {
  const auto oracle = oracle_germ_classes(p, family);
  REQUIRE(stalk.classes.size() == oracle.size());
  std::set<std::set<std::pair<int, int>>> got;
  for (const auto& cls : stalk.classes) got.insert({cls.begin(), cls.end()});
  std::set<std::set<std::pair<int, int>>> want(oracle.begin(), oracle.end());
  REQUIRE(got == want);
  // canonical identification is a bijection with F(minimal open)
  REQUIRE(stalk.classes.size() == p.sections(stalk.canonical_open).size());
  std::set<int> images(stalk.canonical_section.begin(), stalk.canonical_section.end());
  REQUIRE(images.size() == stalk.canonical_section.size());
}

// Gluing oracle without the irredundancy reduction: every family of opens
// whose union is U, including redundant ones and the empty cover of ∅.
bool oracle_is_sheaf(const Presheaf& p) {
  const auto& s = p.space();
  const auto& opens = s.opens();
  const int n = static_cast<int>(opens.size());
  for (int u = 0; u < n; ++u) {
    const PointSet target = opens[static_cast<std::size_t>(u)];
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> cover;
      PointSet covered = 0;
      bool bad = false;
      for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) {
          if (opens[static_cast<std::size_t>(v)] & ~target) { bad = true; break; }
          cover.push_back(v);
          covered |= opens[static_cast<std::size_t>(v)];
        }
      if (bad || covered != target) continue;
      // enumerate all families over the cover
      std::vector<int> family(cover.size(), 0);
      while (true) {
        bool compatible = true;
        for (std::size_t i = 0; i < cover.size() && compatible; ++i)
          for (std::size_t j = i + 1; j < cover.size() && compatible; ++j) {
            const PointSet inter = opens[static_cast<std::size_t>(cover[i])] &
                                   opens[static_cast<std::size_t>(cover[j])];
            const auto w = s.open_index(inter);
            compatible = p.restrict_section(cover[i], *w, family[i]) ==
                         p.restrict_section(cover[j], *w, family[j]);
          }
        if (compatible) {
          int amalgamations = 0;
          for (int sec = 0; sec < static_cast<int>(p.sections(u).size()); ++sec) {
            bool ok = true;
            for (std::size_t i = 0; i < cover.size() && ok; ++i)
              ok = p.restrict_section(u, cover[i], sec) == family[i];
            if (ok) ++amalgamations;
          }
          if (amalgamations != 1) return false;
        }
        std::size_t i = 0;
        for (; i < cover.size(); ++i) {
          if (++family[i] < static_cast<int>(p.sections(cover[i]).size())) break;
          family[i] = 0;
        }
        if (i == cover.size()) break;
      }
    }
  }
  return true;
}

std::vector<Presheaf> fixture_presheaves() {
  std::vector<Presheaf> out;
  out.push_back(sierpinski_presheaf());
  out.push_back(constant_presheaf(discrete_space(2)));
  out.push_back(constant_presheaf(sierpinski_space()));
  out.push_back(constant_presheaf(coarse_space(2)));
  out.push_back(function_presheaf(sierpinski_space(), {2, 3}));
  out.push_back(function_presheaf(discrete_space(2), {2, 2}));
  out.push_back(function_presheaf(coarse_space(3), {1, 2, 2}));
  const auto chain3 = FiniteSpace::from_preorder({"p", "q", "r"}, {{"p", "q"}, {"q", "r"}});
  out.push_back(function_presheaf(chain3, {2, 1, 2}));
  const auto swap = FiniteSpace::validate({"1", "2", "3"}, {0, 1, 4, 5, 7});
  out.push_back(function_presheaf(swap, {2, 2, 1}));
  for (const auto& s : all_topologies(4)) {
    if (s.open_count() == 6) {  // a few mid-size 4-point spaces
      out.push_back(function_presheaf(s, {2, 1, 2, 1}));
      if (out.size() > 14) break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("validate_presheaf: functoriality passes and fails with witnesses") {
  CHECK_NOTHROW(sierpinski_presheaf());

  // missing restriction X -> {p} (and the composite to ∅ cannot be formed)
  CHECK_THROWS_AS(Presheaf::build(sierpinski_space(), {{"*"}, {"t"}, {"s1", "s2"}},
                                  {{{1, 0}, {{"t", "*"}}}}),
                  MissingRestriction);

  // chain of 3 opens with an inconsistent direct map W -> U
  const auto chain = FiniteSpace::from_preorder({"p", "q"}, {{"p", "q"}});
  CHECK_THROWS_AS(
      Presheaf::build(chain, {{"a", "b"}, {"a", "b"}, {"a", "b"}},
                      {{{2, 1}, {{"a", "a"}, {"b", "b"}}},
                       {{1, 0}, {{"a", "a"}, {"b", "b"}}},
                       {{2, 0}, {{"a", "b"}, {"b", "a"}}}}),
      CompositionViolated);

  // declared self-map that is not the identity
  CHECK_THROWS_AS(
      Presheaf::build(coarse_space(1), {{"x", "y"}, {"x", "y"}},
                      {{{1, 1}, {{"x", "y"}, {"y", "x"}}},
                       {{1, 0}, {{"x", "x"}, {"y", "y"}}}}),
      IdentityViolated);

  // section set missing for one open
  CHECK_THROWS_AS(Presheaf::build(sierpinski_space(), {{"*"}, {"t"}}, {}), MissingSectionSet);
}

TEST_CASE("check_sheaf: constant presheaf rejected, function presheaves pass") {
  const auto bad = constant_presheaf(discrete_space(2));
  const auto verdict = check_sheaf(bad);
  REQUIRE(!verdict.is_sheaf);
  REQUIRE(verdict.witness.has_value());
  // first failure is the empty cover of ∅: F(∅) has two elements
  CHECK(verdict.witness->cover.empty());
  CHECK(verdict.witness->amalgamations == 2);

  CHECK(check_sheaf(sierpinski_presheaf()).is_sheaf);
  CHECK(check_sheaf(function_presheaf(discrete_space(2), {2, 2})).is_sheaf);
}

TEST_CASE("a constant presheaf with singleton F(∅) still fails on the disjoint cover") {
  const auto space = discrete_space(2);
  std::vector<std::vector<std::string>> sections{{"*"}, {"c0", "c1"}, {"c0", "c1"},
                                                 {"c0", "c1"}};
  std::map<std::pair<int, int>, std::map<std::string, std::string>> restrictions;
  restrictions[{1, 0}] = {{"c0", "*"}, {"c1", "*"}};
  restrictions[{2, 0}] = {{"c0", "*"}, {"c1", "*"}};
  restrictions[{3, 0}] = {{"c0", "*"}, {"c1", "*"}};
  restrictions[{3, 1}] = {{"c0", "c0"}, {"c1", "c1"}};
  restrictions[{3, 2}] = {{"c0", "c0"}, {"c1", "c1"}};
  const auto p = Presheaf::build(space, std::move(sections), restrictions);

  const auto verdict = check_sheaf(p);
  REQUIRE(!verdict.is_sheaf);
  const auto& w = *verdict.witness;
  CHECK(p.space().opens()[static_cast<std::size_t>(w.open)] == p.space().full());
  REQUIRE(w.cover.size() == 2);
  // sections c0 on {p} and c1 on {q} are compatible over ∅ but no constant
  // glues them
  CHECK(w.amalgamations == 0);
}

TEST_CASE("any presheaf with |F(∅)| = 2 fails via the empty cover") {
  const auto p = constant_presheaf(coarse_space(2));
  const auto verdict = check_sheaf(p);
  REQUIRE(!verdict.is_sheaf);
  CHECK(verdict.witness->cover.empty());
  CHECK(p.space().opens()[static_cast<std::size_t>(verdict.witness->open)] == 0);
}

TEST_CASE("stalks on the Sierpinski presheaf") {
  const auto p = sierpinski_presheaf();
  const auto at_p = stalk_at_point(p, "p");
  // both global sections collapse onto t
  CHECK(at_p.classes.size() == 1);
  CHECK(p.space().opens()[static_cast<std::size_t>(at_p.canonical_open)] == 1);

  const auto at_q = stalk_at_point(p, "q");
  CHECK(at_q.classes.size() == 2);
  CHECK(p.space().opens()[static_cast<std::size_t>(at_q.canonical_open)] == 3);

  CHECK_THROWS_AS(stalk_at_point(p, "nope"), UnknownPoint);
}

TEST_CASE("stalk on a one-open space is the global section set") {
  const auto p = constant_presheaf(coarse_space(2));
  const auto s = stalk_at_point(p, 0);
  CHECK(s.classes.size() == 2);
  CHECK(p.space().opens()[static_cast<std::size_t>(s.canonical_open)] == p.space().full());
}

TEST_CASE("stalk and topos agree with the brute-force oracle on all fixtures") {
  for (const auto& p : fixture_presheaves()) {
    const auto& s = p.space();
    for (int x = 0; x < s.point_count(); ++x) {
      const auto stalk = stalk_at_point(p, x);
      check_stalk_against_oracle(p, stalk, point_family(s, x));

      // topos at a closed singleton coincides with the stalk
      const PointSet single = PointSet{1} << x;
      if (s.is_open(s.full() & ~single)) {
        const auto t = topos_of(p, single);
        REQUIRE(t.classes == stalk.classes);
        REQUIRE(t.canonical_open == stalk.canonical_open);
        REQUIRE(t.canonical_section == stalk.canonical_section);
      }
    }
    // all closed subsets
    for (PointSet k = 1; k <= s.full(); ++k) {
      if (!s.is_open(s.full() & ~k)) continue;
      std::vector<int> family;
      for (int u = 0; u < s.open_count(); ++u)
        if ((k & ~s.opens()[static_cast<std::size_t>(u)]) == 0) family.push_back(u);
      check_stalk_against_oracle(p, topos_of(p, k), family);
    }
  }
}

TEST_CASE("topos_of on Sierpinski: K={q} sees exactly the global sections") {
  const auto p = sierpinski_presheaf();
  const auto t = topos_of(p, 2);
  CHECK(t.classes.size() == 2);
  CHECK(p.space().opens()[static_cast<std::size_t>(t.canonical_open)] == 3);

  // K = whole space -> F(X)
  const auto whole = topos_of(p, 3);
  CHECK(whole.classes.size() == 2);

  CHECK_THROWS_AS(topos_of(p, 0), EmptySubset);
  CHECK_THROWS_AS(topos_of(p, 1), NotClosed);  // {p} is open, not closed
}

TEST_CASE("topos_of on the 3-chain space at the closed top point") {
  const auto chain3 = FiniteSpace::from_preorder({"p", "q", "r"}, {{"p", "q"}, {"q", "r"}});
  const auto p = function_presheaf(chain3, {2, 1, 2});
  const PointSet r_single = PointSet{1} << chain3.point_index("r");
  REQUIRE(chain3.is_open(chain3.full() & ~r_single));
  const auto t = topos_of(p, r_single);
  // minimal open superset of {r} is the whole space
  CHECK(chain3.opens()[static_cast<std::size_t>(t.canonical_open)] == chain3.full());
  CHECK(t.classes.size() == p.sections(t.canonical_open).size());
}

TEST_CASE("irredundant-cover reduction is safe: full-cover oracle agrees") {
  for (const auto& p : fixture_presheaves())
    REQUIRE(check_sheaf(p).is_sheaf == oracle_is_sheaf(p));
}

TEST_CASE("invariant_hull: identity, swap, and monotonicity") {
  const auto space = FiniteSpace::validate({"1", "2", "3"}, {0, 1, 4, 5, 7});
  const auto id = PointMap::build(space, space, {{"1", "1"}, {"2", "2"}, {"3", "3"}});
  for (PointSet k = 0; k <= space.full(); ++k)
    REQUIRE(invariant_hull(space, id, k) == space.minimal_open_superset(k));

  const auto swap = PointMap::build(space, space, {{"1", "3"}, {"2", "2"}, {"3", "1"}});
  CHECK(invariant_hull(space, swap, 1) == 5);             // {1} -> {1,3}
  CHECK(invariant_hull(space, swap, 2) == space.full());  // {2} -> X

  // monotonicity in K
  for (PointSet k = 0; k <= space.full(); ++k)
    for (PointSet k2 = k; k2 <= space.full(); ++k2)
      if ((k & ~k2) == 0)
        REQUIRE((invariant_hull(space, swap, k) & ~invariant_hull(space, swap, k2)) == 0);

  const auto broken = PointMap::build(space, space, {{"1", "1"}, {"2", "1"}, {"3", "3"}});
  CHECK_THROWS_AS(invariant_hull(space, broken, 1), NotAHomeomorphism);
  const auto discontinuous =
      PointMap::build(sierpinski_space(), sierpinski_space(), {{"p", "q"}, {"q", "p"}});
  CHECK_THROWS_AS(invariant_hull(sierpinski_space(), discontinuous, 1), NotAHomeomorphism);
}

TEST_CASE("invariant_hull with identity equals minimal open superset on all small spaces") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : all_topologies(n)) {
      std::map<std::string, std::string> id_map;
      for (const auto& name : s.point_names()) id_map[name] = name;
      const auto id = PointMap::build(s, s, id_map);
      for (PointSet k = 0; k <= s.full(); ++k)
        REQUIRE(invariant_hull(s, id, k) == s.minimal_open_superset(k));
    }
}
