#include "continuum/piecewise.hpp"

#include <algorithm>

#include "continuum/errors.hpp"

namespace continuum {

PiecewiseFn PiecewiseFn::build(std::vector<Rat> breakpoints, std::vector<Poly> pieces,
                               std::vector<Rat> values) {
  if (pieces.size() != breakpoints.size() + 1)
    throw Error("piece count must be breakpoint count + 1");
  if (values.size() != breakpoints.size())
    throw Error("every breakpoint needs an assigned value");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (!(breakpoints[i] < breakpoints[i + 1]))
      throw Error("breakpoints must be strictly increasing");
  PiecewiseFn f;
  f.breaks_ = std::move(breakpoints);
  f.pieces_ = std::move(pieces);
  f.values_ = std::move(values);
  return f;
}

std::size_t PiecewiseFn::piece_index(const Rat& x) const {
  std::size_t i = 0;
  while (i < breaks_.size() && breaks_[i] < x) ++i;
  return i;  // piece i covers (breaks_[i-1], breaks_[i])
}

Rat PiecewiseFn::eval(const Rat& x) const {
  for (std::size_t i = 0; i < breaks_.size(); ++i)
    if (breaks_[i] == x) return values_[i];
  return pieces_[piece_index(x)].eval(x);
}

PiecewiseFn PiecewiseFn::with_spurious_breakpoint(const Rat& at) const {
  for (const Rat& b : breaks_)
    if (b == at) throw Error("already a breakpoint: " + rat_to_string(at));
  const std::size_t i = piece_index(at);
  const Poly piece = pieces_[i];
  PiecewiseFn f = *this;
  f.breaks_.insert(f.breaks_.begin() + static_cast<std::ptrdiff_t>(i), at);
  f.pieces_.insert(f.pieces_.begin() + static_cast<std::ptrdiff_t>(i), piece);
  f.values_.insert(f.values_.begin() + static_cast<std::ptrdiff_t>(i), piece.eval(at));
  return f;
}

Germ germ_at(const PiecewiseFn& f, const Rat& x) {
  const auto& breaks = f.breakpoints();
  for (std::size_t i = 0; i < breaks.size(); ++i)
    if (breaks[i] == x)
      return Germ{x, f.pieces()[i], f.values()[i], f.pieces()[i + 1]};
  const Poly& piece = f.pieces()[f.piece_index(x)];
  return Germ{x, piece, piece.eval(x), piece};
}

std::vector<Rat> catastrophe_set(const PiecewiseFn& f) {
  std::vector<Rat> out;
  for (std::size_t i = 0; i < f.breakpoints().size(); ++i) {
    const Rat& b = f.breakpoints()[i];
    const Rat left = f.pieces()[i].eval(b);
    const Rat right = f.pieces()[i + 1].eval(b);
    if (left != f.values()[i] || right != f.values()[i]) out.push_back(b);
  }
  return out;
}

std::string Smoothness::str() const {
  if (k == kJump) return "jump";
  if (k == kInfinite) return "C^inf";
  return "C^" + std::to_string(k);
}

namespace {

// Largest k <= k_max with matching one-sided derivatives up to order k at b
// (and matching value), or kJump if the three-way value test fails.
Smoothness smoothness_at(const Poly& left, const Rat& value, const Poly& right, const Rat& b,
                         int k_max) {
  if (left.eval(b) != value || right.eval(b) != value) return Smoothness{Smoothness::kJump};
  if (left == right) return Smoothness{Smoothness::kInfinite};
  Poly dl = left, dr = right;
  for (int k = 1; k <= k_max; ++k) {
    dl = dl.derivative();
    dr = dr.derivative();
    if (dl.eval(b) != dr.eval(b)) return Smoothness{k - 1};
  }
  return Smoothness{k_max};
}

}  // namespace

std::vector<Stratum> strata(const PiecewiseFn& f, int k_max) {
  if (k_max < 0) throw Error("k_max must be >= 0");
  // Essential breakpoints: germ is not a single polynomial there.
  std::vector<std::size_t> essential;
  for (std::size_t i = 0; i < f.breakpoints().size(); ++i) {
    const Rat& b = f.breakpoints()[i];
    const bool spurious =
        f.pieces()[i] == f.pieces()[i + 1] && f.pieces()[i].eval(b) == f.values()[i];
    if (!spurious) essential.push_back(i);
  }
  std::vector<Stratum> out;
  Bound lo = Bound::neg_inf();
  for (std::size_t e : essential) {
    const Rat& b = f.breakpoints()[e];
    Stratum open;
    open.interval = {lo, Bound::at(b)};
    open.smoothness = Smoothness{Smoothness::kInfinite};
    out.push_back(open);

    Stratum point;
    point.is_point = true;
    point.point = b;
    point.smoothness = smoothness_at(f.pieces()[e], f.values()[e], f.pieces()[e + 1], b, k_max);
    out.push_back(point);
    lo = Bound::at(b);
  }
  Stratum last;
  last.interval = {lo, Bound::pos_inf()};
  last.smoothness = Smoothness{Smoothness::kInfinite};
  out.push_back(last);
  return out;
}

Rat ivt_witness(const PiecewiseFn& f, const Rat& a, const Rat& b, const Rat& c) {
  if (b < a) throw Error("empty interval: a > b");
  for (const Poly& piece : f.pieces())
    if (piece.degree() > 1)
      throw NotPiecewiseLinear("piece of degree " + std::to_string(piece.degree()));
  for (const Rat& p : catastrophe_set(f))
    if (a <= p && p <= b)
      throw NotContinuousOnInterval("catastrophe point at " + rat_to_string(p) +
                                    " inside the interval");
  // Nodes: a, interior breakpoints, b. Each segment between consecutive
  // nodes lies in one piece, so the leftmost solution is the first node with
  // f(node) = c or the first strict crossing.
  std::vector<Rat> nodes{a};
  for (const Rat& p : f.breakpoints())
    if (a < p && p < b) nodes.push_back(p);
  if (a < b) nodes.push_back(b);

  for (std::size_t s = 0; s < nodes.size(); ++s) {
    const Rat& left = nodes[s];
    if (f.eval(left) == c) return left;
    if (s + 1 == nodes.size()) break;
    const Rat& right = nodes[s + 1];
    const Rat mid = (left + right) / 2;
    const Poly& piece = f.pieces()[f.piece_index(mid)];
    const Rat fl = piece.eval(left), fr = piece.eval(right);
    if ((fl < c && c < fr) || (fr < c && c < fl))
      return (c - piece.coeff(0)) / piece.coeff(1);
  }
  throw TargetOutOfRange("f does not attain " + rat_to_string(c) + " on the interval");
}

}  // namespace continuum
