#include "continuum/sheaf.hpp"

#include <algorithm>
#include <numeric>

#include "continuum/errors.hpp"

namespace continuum {

Presheaf Presheaf::build(
    FiniteSpace space, std::vector<std::vector<std::string>> sections,
    const std::map<std::pair<int, int>, std::map<std::string, std::string>>& restrictions) {
  Presheaf p(std::move(space));
  const int n = p.space_.open_count();
  if (static_cast<int>(sections.size()) != n)
    throw MissingSectionSet("one section set per open is required");
  p.sections_ = std::move(sections);
  for (int u = 0; u < n; ++u) {
    std::map<std::string, int> seen;
    const auto& labels = p.sections_[static_cast<std::size_t>(u)];
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
      if (!seen.emplace(labels[static_cast<std::size_t>(i)], i).second)
        throw Error("duplicate section label '" + labels[static_cast<std::size_t>(i)] +
                    "' on open " + p.space_.format_subset(p.space_.opens()[static_cast<std::size_t>(u)]));
  }

  auto open_name = [&](int u) {
    return p.space_.format_subset(p.space_.opens()[static_cast<std::size_t>(u)]);
  };
  auto included = [&](int u, int v) {  // U ⊆ V
    return (p.space_.opens()[static_cast<std::size_t>(u)] &
            ~p.space_.opens()[static_cast<std::size_t>(v)]) == 0;
  };

  p.maps_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), {});
  std::vector<char> present(p.maps_.size(), 0);

  // Identities are implicit; empty section sets have the (empty) map to
  // every smaller open for free.
  for (int u = 0; u < n; ++u) {
    auto& id = p.maps_[p.pair_key(u, u)];
    id.resize(p.sections_[static_cast<std::size_t>(u)].size());
    std::iota(id.begin(), id.end(), 0);
    present[p.pair_key(u, u)] = 1;
    if (id.empty())
      for (int v = 0; v < n; ++v)
        if (v != u && included(v, u)) present[p.pair_key(u, v)] = 1;
  }

  for (const auto& [key, table] : restrictions) {
    const auto [v, u] = key;
    if (v < 0 || v >= n || u < 0 || u >= n)
      throw Error("restriction references an unknown open index");
    if (!included(u, v))
      throw Error("restriction " + open_name(v) + " -> " + open_name(u) +
                  " does not follow an inclusion");
    const auto& from = p.sections_[static_cast<std::size_t>(v)];
    std::vector<int> map(from.size(), -1);
    for (std::size_t i = 0; i < from.size(); ++i) {
      auto it = table.find(from[i]);
      if (it == table.end())
        throw MissingRestriction(open_name(v) + "[" + from[i] + "]", open_name(u));
      map[i] = p.section_index(u, it->second);
    }
    if (u == v) {
      for (std::size_t i = 0; i < map.size(); ++i)
        if (map[i] != static_cast<int>(i)) throw IdentityViolated(open_name(u));
      continue;
    }
    p.maps_[p.pair_key(v, u)] = std::move(map);
    present[p.pair_key(v, u)] = 1;
  }

  // Saturate by composition until fixpoint; disagreement is a functoriality
  // violation witnessed by the triple.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int w = 0; w < n; ++w)
      for (int v = 0; v < n; ++v) {
        if (w == v || !included(v, w) || !present[p.pair_key(w, v)]) continue;
        for (int u = 0; u < n; ++u) {
          if (u == v || !included(u, v) || !present[p.pair_key(v, u)]) continue;
          const auto& wv = p.maps_[p.pair_key(w, v)];
          const auto& vu = p.maps_[p.pair_key(v, u)];
          std::vector<int> composite(wv.size());
          for (std::size_t i = 0; i < wv.size(); ++i)
            composite[i] = vu[static_cast<std::size_t>(wv[i])];
          if (!present[p.pair_key(w, u)]) {
            p.maps_[p.pair_key(w, u)] = std::move(composite);
            present[p.pair_key(w, u)] = 1;
            changed = true;
          } else if (p.maps_[p.pair_key(w, u)] != composite) {
            throw CompositionViolated(open_name(w), open_name(v), open_name(u));
          }
        }
      }
  }

  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u) {
      if (u == v || !included(u, v)) continue;
      if (!present[p.pair_key(v, u)]) throw MissingRestriction(open_name(v), open_name(u));
    }

  // Final functoriality sweep over all triangles U ⊆ V ⊆ W.
  for (int w = 0; w < n; ++w)
    for (int v = 0; v < n; ++v) {
      if (!included(v, w)) continue;
      for (int u = 0; u < n; ++u) {
        if (!included(u, v)) continue;
        const std::size_t count = p.sections_[static_cast<std::size_t>(w)].size();
        for (std::size_t i = 0; i < count; ++i)
          if (p.restrict_section(w, u, static_cast<int>(i)) !=
              p.restrict_section(v, u, p.restrict_section(w, v, static_cast<int>(i))))
            throw CompositionViolated(open_name(w), open_name(v), open_name(u));
      }
    }
  return p;
}

const std::vector<std::string>& Presheaf::sections(int open) const {
  if (open < 0 || open >= space_.open_count()) throw Error("open index out of range");
  return sections_[static_cast<std::size_t>(open)];
}

int Presheaf::section_index(int open, const std::string& label) const {
  const auto& labels = sections(open);
  for (int i = 0; i < static_cast<int>(labels.size()); ++i)
    if (labels[static_cast<std::size_t>(i)] == label) return i;
  throw Error("unknown section '" + label + "' on open " +
              space_.format_subset(space_.opens()[static_cast<std::size_t>(open)]));
}

int Presheaf::restrict_section(int v_open, int u_open, int sv) const {
  const auto& map = maps_[pair_key(v_open, u_open)];
  if (sv < 0 || sv >= static_cast<int>(map.size())) throw Error("section index out of range");
  return map[static_cast<std::size_t>(sv)];
}

namespace {

bool subset_of(PointSet a, PointSet b) { return (a & ~b) == 0; }

// Irredundant: no member contained in the union of the others.
bool irredundant(const FiniteSpace& s, const std::vector<int>& cover) {
  for (std::size_t i = 0; i < cover.size(); ++i) {
    PointSet rest = 0;
    for (std::size_t j = 0; j < cover.size(); ++j)
      if (j != i) rest |= s.opens()[static_cast<std::size_t>(cover[j])];
    if (subset_of(s.opens()[static_cast<std::size_t>(cover[i])], rest)) return false;
  }
  return true;
}

// All sections of F(U) restricting to the family on the cover.
int count_amalgamations(const Presheaf& p, int u, const std::vector<int>& cover,
                        const std::vector<int>& family) {
  int count = 0;
  for (int s = 0; s < static_cast<int>(p.sections(u).size()); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < cover.size() && ok; ++i)
      ok = p.restrict_section(u, cover[i], s) == family[i];
    if (ok) ++count;
  }
  return count;
}

bool family_compatible(const Presheaf& p, const std::vector<int>& cover,
                       const std::vector<int>& family, std::size_t upto) {
  const auto& opens = p.space().opens();
  for (std::size_t i = 0; i < upto; ++i)
    for (std::size_t j = i + 1; j < upto; ++j) {
      const PointSet inter = opens[static_cast<std::size_t>(cover[i])] &
                             opens[static_cast<std::size_t>(cover[j])];
      const auto w = p.space().open_index(inter);
      if (!w) continue;  // cannot happen in a valid space
      if (p.restrict_section(cover[i], *w, family[i]) !=
          p.restrict_section(cover[j], *w, family[j]))
        return false;
    }
  return true;
}

// Depth-first enumeration of compatible families over the cover; returns a
// witness as soon as some family has amalgamation count != 1.
std::optional<GluingWitness> search_families(const Presheaf& p, int u,
                                             const std::vector<int>& cover,
                                             std::vector<int>& family, std::size_t depth) {
  if (depth == cover.size()) {
    const int count = count_amalgamations(p, u, cover, family);
    if (count != 1) return GluingWitness{u, cover, family, count};
    return std::nullopt;
  }
  const int options = static_cast<int>(p.sections(cover[depth]).size());
  for (int s = 0; s < options; ++s) {
    family[depth] = s;
    if (!family_compatible(p, cover, family, depth + 1)) continue;
    if (auto w = search_families(p, u, cover, family, depth + 1)) return w;
  }
  return std::nullopt;
}

}  // namespace

SheafVerdict check_sheaf(const Presheaf& p) {
  const FiniteSpace& s = p.space();
  const auto& opens = s.opens();
  const int n = static_cast<int>(opens.size());

  for (int u = 0; u < n; ++u) {
    const PointSet target = opens[static_cast<std::size_t>(u)];

    if (target == 0) {
      // The empty cover of ∅: the empty family is compatible, so F(∅) must
      // have exactly one amalgamation, i.e. be a singleton.
      const int count = static_cast<int>(p.sections(u).size());
      if (count != 1) return {false, GluingWitness{u, {}, {}, count}};
      continue;
    }

    // Candidate members: nonempty opens contained in the target.
    std::vector<int> candidates;
    for (int v = 0; v < n; ++v)
      if (opens[static_cast<std::size_t>(v)] != 0 &&
          subset_of(opens[static_cast<std::size_t>(v)], target))
        candidates.push_back(v);
    if (candidates.size() > 20) throw Error("too many opens for the gluing search");

    for (std::uint32_t mask = 1; mask < (1u << candidates.size()); ++mask) {
      std::vector<int> cover;
      PointSet covered = 0;
      for (std::size_t i = 0; i < candidates.size(); ++i)
        if (mask & (1u << i)) {
          cover.push_back(candidates[i]);
          covered |= opens[static_cast<std::size_t>(candidates[i])];
        }
      if (covered != target || !irredundant(s, cover)) continue;
      std::vector<int> family(cover.size(), 0);
      if (auto w = search_families(p, u, cover, family, 0)) return {false, std::move(w)};
    }
  }
  return {true, std::nullopt};
}

namespace {

// Shared germ-class construction over a neighborhood family (opens indices).
Stalk germ_quotient(const Presheaf& p, PointSet at, const std::vector<int>& family) {
  const FiniteSpace& s = p.space();
  const auto& opens = s.opens();

  // Minimal open of the family (the family is closed under the space's
  // pairwise intersections, so the overall intersection is a member).
  PointSet minimal = s.full();
  for (int u : family) minimal &= opens[static_cast<std::size_t>(u)];
  const auto min_idx = s.open_index(minimal);
  if (!min_idx || std::find(family.begin(), family.end(), *min_idx) == family.end())
    throw Error("internal: neighborhood family has no minimal member");

  // Disjoint union of sections over the family.
  std::vector<std::pair<int, int>> members;  // (open index, section index)
  for (int u : family)
    for (int i = 0; i < static_cast<int>(p.sections(u).size()); ++i)
      members.emplace_back(u, i);

  // Union-find over germ equivalence: (U,s) ~ (V,t) iff they agree after
  // restriction to some family member W ⊆ U ∩ V.
  std::vector<std::size_t> parent(members.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const auto [ui, si] = members[i];
      const auto [uj, sj] = members[j];
      const PointSet inter =
          opens[static_cast<std::size_t>(ui)] & opens[static_cast<std::size_t>(uj)];
      bool equal = false;
      for (int w : family) {
        if (!subset_of(opens[static_cast<std::size_t>(w)], inter)) continue;
        if (p.restrict_section(ui, w, si) == p.restrict_section(uj, w, sj)) {
          equal = true;
          break;
        }
      }
      if (equal) parent[find(i)] = find(j);
    }

  std::vector<std::vector<std::pair<int, int>>> classes;
  std::map<std::size_t, std::size_t> root_to_class;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::size_t root = find(i);
    auto it = root_to_class.find(root);
    if (it == root_to_class.end()) {
      it = root_to_class.emplace(root, classes.size()).first;
      classes.emplace_back();
    }
    classes[it->second].push_back(members[i]);
  }
  for (auto& cls : classes) std::sort(cls.begin(), cls.end());
  std::sort(classes.begin(), classes.end());

  // Canonical identification with F(minimal): each class restricts to one
  // section of the minimal open; the directed-colimit shortcut demands this
  // be a bijection, which we re-verify rather than trust.
  std::vector<int> canonical;
  std::vector<char> hit(p.sections(*min_idx).size(), 0);
  for (const auto& cls : classes) {
    int image = -1;
    for (const auto& [u, sidx] : cls) {
      const int r = p.restrict_section(u, *min_idx, sidx);
      if (image < 0) image = r;
      else if (image != r) throw Error("internal: germ class restricts ambiguously");
    }
    if (image < 0 || hit[static_cast<std::size_t>(image)])
      throw Error("internal: germ classes do not biject with the minimal-open sections");
    hit[static_cast<std::size_t>(image)] = 1;
    canonical.push_back(image);
  }
  if (static_cast<std::size_t>(std::count(hit.begin(), hit.end(), 1)) != hit.size())
    throw Error("internal: germ classes do not biject with the minimal-open sections");

  Stalk stalk;
  stalk.at = at;
  stalk.classes = std::move(classes);
  stalk.canonical_open = *min_idx;
  stalk.canonical_section = std::move(canonical);
  return stalk;
}

}  // namespace

Stalk stalk_at_point(const Presheaf& p, int point) {
  const FiniteSpace& s = p.space();
  if (point < 0 || point >= s.point_count()) throw UnknownPoint("#" + std::to_string(point));
  const PointSet x = PointSet{1} << point;
  std::vector<int> family;
  for (int u = 0; u < s.open_count(); ++u)
    if (s.opens()[static_cast<std::size_t>(u)] & x) family.push_back(u);
  return germ_quotient(p, x, family);
}

Stalk stalk_at_point(const Presheaf& p, const std::string& point) {
  return stalk_at_point(p, p.space().point_index(point));
}

Stalk topos_of(const Presheaf& p, PointSet closed_subset) {
  const FiniteSpace& s = p.space();
  s.check_subset(closed_subset);
  if (closed_subset == 0) throw EmptySubset();
  if (!s.is_open(s.full() & ~closed_subset)) throw NotClosed(s.format_subset(closed_subset));
  std::vector<int> family;
  for (int u = 0; u < s.open_count(); ++u)
    if (subset_of(closed_subset, s.opens()[static_cast<std::size_t>(u)])) family.push_back(u);
  return germ_quotient(p, closed_subset, family);
}

PointSet invariant_hull(const FiniteSpace& space, const PointMap& phi, PointSet k) {
  space.check_subset(k);
  if (!(phi.source == space) || !(phi.target == space))
    throw NotAHomeomorphism("the map must go from the space to itself");
  std::vector<char> seen(static_cast<std::size_t>(space.point_count()), 0);
  for (int i = 0; i < space.point_count(); ++i) {
    const int img = phi.assignment[static_cast<std::size_t>(i)];
    if (seen[static_cast<std::size_t>(img)]) throw NotAHomeomorphism("the map is not a bijection");
    seen[static_cast<std::size_t>(img)] = 1;
  }
  if (!is_continuous(phi).continuous) throw NotAHomeomorphism("the map is not continuous");
  // Inverse continuity: images of opens are opens.
  for (PointSet u : space.opens())
    if (!space.is_open(phi.image(u))) throw NotAHomeomorphism("the inverse is not continuous");

  PointSet hull = space.full();
  for (PointSet u : space.opens())
    if (phi.image(u) == u && subset_of(k, u)) hull &= u;
  return hull;
}

}  // namespace continuum
