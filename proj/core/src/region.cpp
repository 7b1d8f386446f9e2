#include "continuum/region.hpp"

#include <algorithm>

#include "continuum/errors.hpp"

namespace continuum {

std::string Bound::str() const {
  switch (kind_) {
    case Kind::neg_inf: return "-inf";
    case Kind::pos_inf: return "+inf";
    case Kind::finite: return rat_to_string(value_);
  }
  return {};
}

OpenRegion OpenRegion::of(std::vector<Interval> intervals) {
  for (const auto& iv : intervals)
    if (!(iv.lo < iv.hi))
      throw MalformedRegion("interval (" + iv.lo.str() + "," + iv.hi.str() + ") has lo >= hi");
  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  OpenRegion r;
  for (auto& iv : intervals) {
    if (!r.intervals_.empty() && iv.lo < r.intervals_.back().hi) {
      if (r.intervals_.back().hi < iv.hi) r.intervals_.back().hi = iv.hi;
    } else {
      r.intervals_.push_back(std::move(iv));
    }
  }
  return r;
}

bool OpenRegion::contains(const Rat& x) const {
  const Bound b = Bound::at(x);
  for (const auto& iv : intervals_)
    if (iv.lo < b && b < iv.hi) return true;
  return false;
}

std::string OpenRegion::str() const {
  if (intervals_.empty()) return "\xE2\x88\x85";
  std::string out;
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (i) out += " \xE2\x88\xAA ";
    out += "(" + intervals_[i].lo.str() + "," + intervals_[i].hi.str() + ")";
  }
  return out;
}

OpenRegion region_meet(const OpenRegion& u, const OpenRegion& v) {
  std::vector<Interval> out;
  for (const auto& a : u.intervals())
    for (const auto& b : v.intervals()) {
      const Bound lo = a.lo < b.lo ? b.lo : a.lo;
      const Bound hi = a.hi < b.hi ? a.hi : b.hi;
      if (lo < hi) out.push_back({lo, hi});
    }
  return OpenRegion::of(std::move(out));
}

OpenRegion region_join(const OpenRegion& u, const OpenRegion& v) {
  std::vector<Interval> out = u.intervals();
  out.insert(out.end(), v.intervals().begin(), v.intervals().end());
  return OpenRegion::of(std::move(out));
}

OpenRegion region_not(const OpenRegion& u) {
  if (u.empty()) return OpenRegion::whole_line();
  std::vector<Interval> out;
  const auto& ivs = u.intervals();
  if (ivs.front().lo.finite()) out.push_back({Bound::neg_inf(), ivs.front().lo});
  for (std::size_t i = 0; i + 1 < ivs.size(); ++i)
    if (ivs[i].hi < ivs[i + 1].lo) out.push_back({ivs[i].hi, ivs[i + 1].lo});
  if (ivs.back().hi.finite()) out.push_back({ivs.back().hi, Bound::pos_inf()});
  return OpenRegion::of(std::move(out));
}

namespace {

// Decomposition of the line at the finite endpoints of u and v: open atoms
// (-inf,e1),(e1,e2),...,(ek,+inf) interleaved with the point atoms {e_i}.
// Every boolean combination of u and v is a union of such atoms.
struct Atoms {
  std::vector<Rat> cuts;  // sorted, unique

  std::size_t open_atom_count() const { return cuts.size() + 1; }
  Interval open_atom(std::size_t i) const {
    const Bound lo = i == 0 ? Bound::neg_inf() : Bound::at(cuts[i - 1]);
    const Bound hi = i == cuts.size() ? Bound::pos_inf() : Bound::at(cuts[i]);
    return {lo, hi};
  }
  Rat open_atom_probe(std::size_t i) const { return interval_probe_point(open_atom(i)); }
};

Atoms atoms_for(const OpenRegion& u, const OpenRegion& v) {
  Atoms a;
  for (const OpenRegion* r : {&u, &v})
    for (const auto& iv : r->intervals()) {
      if (iv.lo.finite()) a.cuts.push_back(iv.lo.value());
      if (iv.hi.finite()) a.cuts.push_back(iv.hi.value());
    }
  std::sort(a.cuts.begin(), a.cuts.end());
  a.cuts.erase(std::unique(a.cuts.begin(), a.cuts.end()), a.cuts.end());
  return a;
}

}  // namespace

OpenRegion region_implies(const OpenRegion& u, const OpenRegion& v) {
  const Atoms atoms = atoms_for(u, v);
  const std::size_t n_open = atoms.open_atom_count();

  // Membership of each atom in S = complement(u) ∪ v.
  std::vector<char> open_in(n_open, 0), point_in(atoms.cuts.size(), 0);
  for (std::size_t i = 0; i < n_open; ++i) {
    const Rat probe = atoms.open_atom_probe(i);
    open_in[i] = !u.contains(probe) || v.contains(probe);
  }
  for (std::size_t i = 0; i < atoms.cuts.size(); ++i)
    point_in[i] = !u.contains(atoms.cuts[i]) || v.contains(atoms.cuts[i]);

  // interior(S): open atoms stay; a cut point is interior iff it and both
  // neighbouring open atoms are in S, which glues those atoms together.
  std::vector<Interval> out;
  for (std::size_t i = 0; i < n_open; ++i) {
    if (!open_in[i]) continue;
    Interval iv = atoms.open_atom(i);
    while (i + 1 < n_open && point_in[i] && open_in[i + 1]) {
      ++i;
      iv.hi = atoms.open_atom(i).hi;
    }
    out.push_back(iv);
  }
  return OpenRegion::of(std::move(out));
}

std::vector<Rat> region_boundary(const OpenRegion& u) {
  std::vector<Rat> out;
  for (const auto& iv : u.intervals()) {
    if (iv.lo.finite()) out.push_back(iv.lo.value());
    if (iv.hi.finite()) out.push_back(iv.hi.value());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<OpenRegion, OpenRegion> divide(const OpenRegion& u, const Rat& at) {
  if (!u.contains(at)) throw PointNotInteriorToRegion(rat_to_string(at));
  const OpenRegion left = OpenRegion::of({{Bound::neg_inf(), Bound::at(at)}});
  const OpenRegion right = OpenRegion::of({{Bound::at(at), Bound::pos_inf()}});
  return {region_meet(u, left), region_meet(u, right)};
}

bool is_compact_complement(const OpenRegion& u) {
  if (u.empty()) return false;  // complement is the whole line
  return u.intervals().front().lo.kind() == Bound::Kind::neg_inf &&
         u.intervals().back().hi.kind() == Bound::Kind::pos_inf;
}

OpenRegion region_scale(const OpenRegion& u, const Rat& factor) {
  if (factor <= 0) throw Error("scale factor must be positive");
  std::vector<Interval> out;
  for (const auto& iv : u.intervals()) {
    const Bound lo = iv.lo.finite() ? Bound::at(iv.lo.value() * factor) : iv.lo;
    const Bound hi = iv.hi.finite() ? Bound::at(iv.hi.value() * factor) : iv.hi;
    out.push_back({lo, hi});
  }
  return OpenRegion::of(std::move(out));
}

Rat interval_probe_point(const Interval& iv) {
  if (iv.lo.finite() && iv.hi.finite()) return (iv.lo.value() + iv.hi.value()) / 2;
  if (iv.lo.finite()) return iv.lo.value() + 1;
  if (iv.hi.finite()) return iv.hi.value() - 1;
  return Rat(0);
}

Rat RegionSampler::next_rat() {
  const long num = static_cast<long>(next_below(81)) - 40;
  const long den = static_cast<long>(next_below(8)) + 1;
  return rat(num, den);
}

OpenRegion RegionSampler::next_nonempty() {
  const std::size_t k = 1 + next_below(3);
  std::vector<Interval> ivs;
  for (std::size_t i = 0; i < k; ++i) {
    const bool lo_ray = next_below(10) == 0;
    const bool hi_ray = next_below(10) == 0;
    if (lo_ray && hi_ray) {
      ivs.push_back({Bound::neg_inf(), Bound::pos_inf()});
      continue;
    }
    if (lo_ray) {
      ivs.push_back({Bound::neg_inf(), Bound::at(next_rat())});
      continue;
    }
    if (hi_ray) {
      ivs.push_back({Bound::at(next_rat()), Bound::pos_inf()});
      continue;
    }
    Rat a = next_rat(), b = next_rat();
    while (a == b) b = next_rat();
    if (b < a) std::swap(a, b);
    ivs.push_back({Bound::at(std::move(a)), Bound::at(std::move(b))});
  }
  return OpenRegion::of(std::move(ivs));
}

}  // namespace continuum
