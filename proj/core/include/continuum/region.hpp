#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "continuum/rational.hpp"

namespace continuum {

/// Endpoint of an open interval: -inf, a rational, or +inf.
class Bound {
 public:
  enum class Kind { neg_inf, finite, pos_inf };

  static Bound neg_inf() { return Bound(Kind::neg_inf, 0); }
  static Bound pos_inf() { return Bound(Kind::pos_inf, 0); }
  static Bound at(Rat v) { return Bound(Kind::finite, std::move(v)); }

  Kind kind() const { return kind_; }
  bool finite() const { return kind_ == Kind::finite; }
  const Rat& value() const { return value_; }  // only meaningful when finite

  friend bool operator==(const Bound& a, const Bound& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.value_ == b.value_);
  }
  friend bool operator<(const Bound& a, const Bound& b) {
    if (a.kind_ != b.kind_) return rank(a.kind_) < rank(b.kind_);
    return a.kind_ == Kind::finite && a.value_ < b.value_;
  }
  friend bool operator<=(const Bound& a, const Bound& b) { return a < b || a == b; }

  std::string str() const;

 private:
  Bound(Kind k, Rat v) : kind_(k), value_(std::move(v)) {}
  static int rank(Kind k) { return k == Kind::neg_inf ? 0 : k == Kind::finite ? 1 : 2; }
  Kind kind_;
  Rat value_;
};

/// Open interval (lo, hi) with lo < hi.
struct Interval {
  Bound lo;
  Bound hi;
  bool operator==(const Interval& other) const { return lo == other.lo && hi == other.hi; }
};

/// Finite union of open intervals in canonical form: pairwise disjoint,
/// non-overlapping, sorted by lo. Adjacent intervals like (0,1) and (1,2)
/// stay separate — the shared endpoint is not in the set. The empty list is
/// the bottom region; the single interval (-inf,+inf) is the top.
class OpenRegion {
 public:
  OpenRegion() = default;  // empty region

  /// Normalizes an arbitrary interval list (sorts, merges overlaps).
  /// Throws MalformedRegion if some interval has lo >= hi.
  static OpenRegion of(std::vector<Interval> intervals);
  static OpenRegion whole_line() { return of({{Bound::neg_inf(), Bound::pos_inf()}}); }
  static OpenRegion segment(Rat lo, Rat hi) {
    return of({{Bound::at(std::move(lo)), Bound::at(std::move(hi))}});
  }

  bool empty() const { return intervals_.empty(); }
  bool is_whole_line() const {
    return intervals_.size() == 1 && !intervals_[0].lo.finite() && !intervals_[0].hi.finite() &&
           intervals_[0].lo.kind() == Bound::Kind::neg_inf;
  }
  const std::vector<Interval>& intervals() const { return intervals_; }
  bool contains(const Rat& x) const;

  bool operator==(const OpenRegion& other) const { return intervals_ == other.intervals_; }

  std::string str() const;  // "(0,1) ∪ (1,+inf)", "∅" for empty

 private:
  std::vector<Interval> intervals_;
};

// Frame (Heyting) operations on the opens of the line.
OpenRegion region_meet(const OpenRegion& u, const OpenRegion& v);
OpenRegion region_join(const OpenRegion& u, const OpenRegion& v);
/// Interior of the set complement of u.
OpenRegion region_not(const OpenRegion& u);
/// interior(complement(u) ∪ v) — the largest w with w ∩ u ⊆ v.
OpenRegion region_implies(const OpenRegion& u, const OpenRegion& v);

/// The finite endpoints of the canonical intervals (= closure(u) \ u).
std::vector<Rat> region_boundary(const OpenRegion& u);

/// Splits u at an interior point: (u ∩ (-inf,at), u ∩ (at,+inf)).
/// Throws PointNotInteriorToRegion if `at` is not strictly inside an interval.
std::pair<OpenRegion, OpenRegion> divide(const OpenRegion& u, const Rat& at);

/// True iff the (closed) complement of u is bounded.
bool is_compact_complement(const OpenRegion& u);

/// u scaled by a positive rational factor (x ↦ factor·x pointwise).
OpenRegion region_scale(const OpenRegion& u, const Rat& factor);

/// A representative interior point of each interval: the midpoint for a
/// bounded interval, lo+1 / hi-1 for rays, 0 for the whole line.
Rat interval_probe_point(const Interval& iv);

/// Deterministic generator of canonical regions for seeded sampling runs.
class RegionSampler {
 public:
  explicit RegionSampler(std::uint64_t seed) : rng_(seed) {}
  /// A canonical region with 1..3 intervals; may include unbounded rays.
  OpenRegion next_nonempty();

 private:
  Rat next_rat();
  std::uint64_t next_below(std::uint64_t n) { return rng_() % n; }
  std::mt19937_64 rng_;
};

}  // namespace continuum
