#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "continuum/errors.hpp"

namespace continuum {

/// A finite bounded distributive lattice with its Heyting implication.
///
/// Elements are opaque strings in input order; operations work on indices.
/// The input order relation may be a bare Hasse diagram: it is closed
/// reflexively and transitively before validation. Construction validates
/// antisymmetry, existence of all pairwise meets and joins, and
/// distributivity, then precomputes the meet/join/implication tables, so a
/// constructed algebra is immutable and every query is a table lookup.
class HeytingAlgebra {
 public:
  using OrderPairs = std::vector<std::pair<std::string, std::string>>;

  /// Validates and builds. Throws NotAPartialOrder, NotALattice,
  /// NotDistributive (each with a witness), or UnknownElement.
  /// Declared top/bottom, when given, are checked against the inferred ones.
  static HeytingAlgebra build(std::vector<std::string> elements,
                              const OrderPairs& order_pairs,
                              const std::optional<std::string>& top = std::nullopt,
                              const std::optional<std::string>& bottom = std::nullopt);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& element_names() const { return names_; }
  const std::string& name(int e) const { check(e); return names_[static_cast<std::size_t>(e)]; }
  int index_of(const std::string& element) const;

  bool leq(int u, int v) const { check(u); check(v); return leq_[idx(u, v)]; }
  int meet(int u, int v) const { check(u); check(v); return meet_[idx(u, v)]; }
  int join(int u, int v) const { check(u); check(v); return join_[idx(u, v)]; }

  /// The largest w with w ∧ u ≤ v; satisfies the adjunction
  /// w ≤ implies(u,v)  ⇔  w ∧ u ≤ v.
  int implies(int u, int v) const { check(u); check(v); return imp_[idx(u, v)]; }

  /// ¬u = implies(u, bottom).
  int pseudo_complement(int u) const { return implies(u, bottom()); }

  int top() const { return top_; }
  int bottom() const { return bottom_; }

  /// Cover relation (transitive reduction) of the order, for serialization.
  OrderPairs cover_pairs() const;

  bool operator==(const HeytingAlgebra& other) const {
    return names_ == other.names_ && leq_ == other.leq_;
  }

 private:
  HeytingAlgebra() = default;
  std::size_t idx(int u, int v) const {
    return static_cast<std::size_t>(u) * names_.size() + static_cast<std::size_t>(v);
  }
  void check(int e) const {
    if (e < 0 || e >= size()) throw UnknownElement("#" + std::to_string(e));
  }

  std::vector<std::string> names_;
  std::vector<char> leq_;   // n*n adjacency of the partial order
  std::vector<int> meet_, join_, imp_;
  int top_ = 0, bottom_ = 0;
};

/// True iff ¬¬u = u for every u (the algebra is Boolean).
bool is_boolean(const HeytingAlgebra& a);

// Small catalog used by the axiom suite and the countermodel search.

/// Linear order 0 < a < b < ... < 1 with n elements (n >= 1).
HeytingAlgebra chain_algebra(int n);

/// Powerset of `atom_count` atoms named x, y, z, ...; element names are
/// concatenations of their atoms, with "0" for the empty join and "1" for top.
HeytingAlgebra boolean_algebra(int atom_count);

/// The four-element diamond {0, x, y, 1} with x, y incomparable.
inline HeytingAlgebra diamond() { return boolean_algebra(2); }

}  // namespace continuum
