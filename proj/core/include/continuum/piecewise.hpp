#pragma once

#include <limits>
#include <string>
#include <vector>

#include "continuum/poly.hpp"
#include "continuum/region.hpp"

namespace continuum {

/// Piecewise polynomial on the line: k strictly increasing breakpoints,
/// k+1 polynomial pieces (one per open interval between consecutive
/// breakpoints, including the two unbounded ends), and an assigned value at
/// each breakpoint.
class PiecewiseFn {
 public:
  static PiecewiseFn build(std::vector<Rat> breakpoints, std::vector<Poly> pieces,
                           std::vector<Rat> values);

  const std::vector<Rat>& breakpoints() const { return breaks_; }
  const std::vector<Poly>& pieces() const { return pieces_; }
  const std::vector<Rat>& values() const { return values_; }

  Rat eval(const Rat& x) const;
  /// Index of the piece whose open interval contains x (x not a breakpoint).
  std::size_t piece_index(const Rat& x) const;

  /// Copy with a redundant breakpoint inserted inside a piece: the piece is
  /// duplicated on both sides and the assigned value matches. Used to state
  /// germ stability under refinement.
  PiecewiseFn with_spurious_breakpoint(const Rat& at) const;

 private:
  std::vector<Rat> breaks_;
  std::vector<Poly> pieces_;
  std::vector<Rat> values_;
};

/// One-sided germ data at a point: the adjacent pieces and the value there.
struct Germ {
  Rat at;
  Poly left;
  Rat value;
  Poly right;
  bool operator==(const Germ& other) const {
    return at == other.at && left == other.left && value == other.value && right == other.right;
  }
};

Germ germ_at(const PiecewiseFn& f, const Rat& x);

/// Breakpoints where left limit, assigned value and right limit are not all
/// equal (C⁰ failure points).
std::vector<Rat> catastrophe_set(const PiecewiseFn& f);

/// Smoothness tag: kJump for a C⁰ failure, k for "C^k but not C^{k+1}
/// (within the checked cap)", kInfinite when the germ is a single polynomial.
struct Smoothness {
  static constexpr int kJump = -1;
  static constexpr int kInfinite = std::numeric_limits<int>::max();
  int k = kInfinite;
  bool operator==(const Smoothness& other) const { return k == other.k; }
  std::string str() const;
};

/// A stratum is either a maximal open interval on which f is one polynomial,
/// or a single breakpoint where smoothness drops.
struct Stratum {
  bool is_point = false;
  Interval interval{Bound::neg_inf(), Bound::pos_inf()};  // when !is_point
  Rat point;                                              // when is_point
  Smoothness smoothness;
};

/// Left-to-right strata of f. Breakpoints where the two adjacent pieces are
/// the same polynomial and the value matches do not separate strata; every
/// other breakpoint becomes a 0-dimensional stratum tagged with the largest
/// k <= k_max such that f is C^k there (kJump when not even continuous).
/// Open strata carry kInfinite: f is a single polynomial on them.
std::vector<Stratum> strata(const PiecewiseFn& f, int k_max = 2);

/// Leftmost exact rational x in [a,b] with f(x) = c, for piecewise-linear f
/// continuous on [a,b]. Throws NotPiecewiseLinear, NotContinuousOnInterval,
/// or TargetOutOfRange (c unattained on [a,b]).
Rat ivt_witness(const PiecewiseFn& f, const Rat& a, const Rat& b, const Rat& c);

}  // namespace continuum
