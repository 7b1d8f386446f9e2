#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "continuum/errors.hpp"
#include "continuum/lattice.hpp"

namespace continuum {

/// Subset of a space's points, as a bitmask over point indices (max 64 points).
using PointSet = std::uint64_t;

/// A finite topological space: explicit points and an explicit family of
/// opens containing ∅ and the full set and closed under pairwise union and
/// intersection. Immutable after validation. The opens keep their input
/// order: section tables and reports refer to opens by index.
class FiniteSpace {
 public:
  static FiniteSpace validate(std::vector<std::string> points, std::vector<PointSet> opens);

  /// Alexandrov space of a preorder: opens are exactly the down-closed sets
  /// (so the minimal open around x is its principal down-set). The preorder
  /// is closed reflexively and transitively first. Opens are ordered by
  /// (size, mask), ∅ first and the full set last.
  static FiniteSpace from_preorder(std::vector<std::string> points,
                                   const std::vector<std::pair<std::string, std::string>>& preorder);

  int point_count() const { return static_cast<int>(points_.size()); }
  const std::vector<std::string>& point_names() const { return points_; }
  int point_index(const std::string& name) const;
  PointSet full() const { return full_; }

  const std::vector<PointSet>& opens() const { return opens_; }
  int open_count() const { return static_cast<int>(opens_.size()); }
  bool is_open(PointSet s) const { return open_index(s).has_value(); }
  std::optional<int> open_index(PointSet s) const;

  /// Largest open contained in Y.
  PointSet interior(PointSet y) const;
  /// Smallest closed superset of Y: the intersection of all closed sets
  /// containing Y. (Complements of opens are the closed sets.)
  PointSet closure(PointSet y) const;
  /// closure(Y) minus interior(Y).
  PointSet boundary(PointSet y) const;

  /// Minimal open containing S (the intersection of all opens ⊇ S, which is
  /// itself an open by closure under intersection).
  PointSet minimal_open_superset(PointSet s) const;
  PointSet minimal_open_of_point(int p) const;

  /// False iff U splits as V ∪ W with V, W nonempty disjoint opens.
  /// Throws NotAnOpen if U is not in the family.
  bool is_connected_open(PointSet u) const;

  /// The finest decomposition of the open U into connected opens, computed by
  /// repeated splitting along disjoint open pairs; sorted by least point.
  std::vector<PointSet> components(PointSet u) const;

  /// Inclusion-ordered lattice of the opens; element i names opens()[i].
  HeytingAlgebra opens_lattice() const;

  void check_subset(PointSet s) const;
  std::string format_subset(PointSet s) const;  // "{p,q}"
  PointSet subset_of_names(const std::vector<std::string>& names) const;

  bool operator==(const FiniteSpace& other) const {
    return points_ == other.points_ && opens_ == other.opens_;
  }

 private:
  FiniteSpace() = default;
  std::vector<std::string> points_;
  std::vector<PointSet> opens_;
  PointSet full_ = 0;
};

/// A total map between the points of two finite spaces.
struct PointMap {
  FiniteSpace source;
  FiniteSpace target;
  std::vector<int> assignment;  // source point index -> target point index

  static PointMap build(FiniteSpace source, FiniteSpace target,
                        const std::map<std::string, std::string>& map);
  PointSet image(PointSet s) const;
  PointSet preimage(PointSet s) const;
};

struct ContinuityResult {
  bool continuous = false;
  std::optional<PointSet> witness_open;  // target open whose preimage is not open
};

/// True iff the preimage of every target open is a source open.
ContinuityResult is_continuous(const PointMap& f);

/// All topologies on n labeled points (n <= 4), for exhaustive scans.
/// Point names are p, q, r, s.
std::vector<FiniteSpace> all_topologies(int point_count);

// Named small spaces used throughout the tests and fixtures.
FiniteSpace sierpinski_space();   // points {p,q}, opens {∅,{p},{p,q}}
FiniteSpace discrete_space(int point_count);
FiniteSpace coarse_space(int point_count);

}  // namespace continuum
