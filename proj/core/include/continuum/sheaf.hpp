#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "continuum/finite_space.hpp"

namespace continuum {

/// A presheaf of finite section sets on a finite space: one label set per
/// open (by open index) and a restriction map for every inclusion U ⊆ V.
///
/// Restrictions may be declared only on the covering relation of the opens
/// poset; composites are generated and checked. Construction verifies
/// functoriality (identities and all composition triangles), so a built
/// Presheaf is a genuine functor. Whether it glues is a separate question
/// answered by check_sheaf — presheaves that are not sheaves are first-class.
class Presheaf {
 public:
  /// Keys of `restrictions` are (V index, U index) with U ⊆ V; each map sends
  /// labels of F(V) to labels of F(U).
  static Presheaf build(FiniteSpace space, std::vector<std::vector<std::string>> sections,
                        const std::map<std::pair<int, int>, std::map<std::string, std::string>>&
                            restrictions);

  const FiniteSpace& space() const { return space_; }
  const std::vector<std::string>& sections(int open) const;
  int section_index(int open, const std::string& label) const;

  /// Restriction F(V) → F(U) applied to the section with index sv.
  int restrict_section(int v_open, int u_open, int sv) const;

 private:
  explicit Presheaf(FiniteSpace s) : space_(std::move(s)) {}
  std::size_t pair_key(int v_open, int u_open) const {
    return static_cast<std::size_t>(v_open) * space_.opens().size() +
           static_cast<std::size_t>(u_open);
  }
  FiniteSpace space_;
  std::vector<std::vector<std::string>> sections_;
  // maps_[V * n + U][i] = index in F(U) of the restriction of F(V)[i]
  std::vector<std::vector<int>> maps_;
};

/// A failed gluing instance: a cover of `open` and a compatible family with
/// zero or at least two amalgamations.
struct GluingWitness {
  int open = 0;
  std::vector<int> cover;    // open indices
  std::vector<int> family;   // section index per cover member
  int amalgamations = 0;
};

struct SheafVerdict {
  bool is_sheaf = false;
  std::optional<GluingWitness> witness;
};

/// Checks unique gluing for every open against every irredundant cover
/// (no member contained in the union of the others), including the empty
/// cover of ∅ which forces F(∅) to be a singleton.
SheafVerdict check_sheaf(const Presheaf& p);

/// Germ classes over a neighborhood family, with the canonical identification
/// against the sections at the family's minimal open.
struct Stalk {
  PointSet at = 0;  // the point or closed subset
  /// Each class lists its members as (open index, section index), sorted.
  std::vector<std::vector<std::pair<int, int>>> classes;
  int canonical_open = 0;                 // index of the minimal open of the family
  std::vector<int> canonical_section;    // per class: its image in F(minimal open)
};

/// Stalk at a point: disjoint union of F(U) over opens U ∋ x, quotiented by
/// agreement on a smaller neighborhood. The canonical set is F(U_x) for the
/// minimal open U_x ∋ x; the recorded bijection is cross-checked against the
/// brute-force quotient on every call.
Stalk stalk_at_point(const Presheaf& p, int point);
Stalk stalk_at_point(const Presheaf& p, const std::string& point);

/// Inverse-image sections at a closed subset K: the same germ construction
/// over the family of opens containing K. Throws NotClosed / EmptySubset.
Stalk topos_of(const Presheaf& p, PointSet closed_subset);

/// Smallest open U with phi(U) = U and K ⊆ U, where phi must be a
/// homeomorphism of the space onto itself.
PointSet invariant_hull(const FiniteSpace& space, const PointMap& phi, PointSet k);

}  // namespace continuum
