#pragma once

#include <string>
#include <vector>

#include "continuum/lattice.hpp"
#include "continuum/region.hpp"

namespace continuum {

enum class AxiomMode { as_written, corrected };
enum class AxiomName { global_connectivity, local_connectivity, divisibility };

std::string to_string(AxiomMode mode);
std::string to_string(AxiomName axiom);

/// Outcome of one axiom check. `witness` names the elements (or regions)
/// that refute the axiom; it is always present when holds == false. `note`
/// is a deterministic human-readable explanation.
struct AxiomReport {
  AxiomName axiom;
  AxiomMode mode;
  bool holds = false;
  std::vector<std::string> witness;
  std::string note;
};

/// z is connected: no decomposition z = u ∨ v with u ∧ v = 0 and u, v ≠ 0.
bool is_connected_element(const HeytingAlgebra& a, int z);

/// Global Connectivity, literally: no pair u, v at all with 1 = u ∨ v and
/// u ∧ v = 0 (as_written — refuted by (1,0) in every algebra), or with the
/// nondegeneracy side condition u, v ≠ 0 (corrected).
AxiomReport check_global_connectivity(const HeytingAlgebra& a, AxiomMode mode);

/// Local Connectivity: top is the join of the connected elements
/// (as_written), or every element is the join of the connected elements
/// below it (corrected).
AxiomReport check_local_connectivity(const HeytingAlgebra& a, AxiomMode mode);

/// Divisibility. as_written evaluates the displayed formula literally:
/// ∀u ∃w,v: w ∧ v = 0 and ∀z (w ∨ v ≤ z → z = u) — the unbounded z forces
/// u = 1, so any algebra with a second element refutes it. corrected is the
/// density reading: every u ≠ 0 has w, v ≠ 0 below it with w ∧ v = 0 and
/// w ∨ v dense in u (every nonzero z ≤ u meets w ∨ v).
AxiomReport check_divisibility(const HeytingAlgebra& a, AxiomMode mode);

/// Witness-based divisibility on the line frame: each sample is split at the
/// midpoint of its first interval and the parts are verified disjoint,
/// nonempty and dense in the sample against a generated family of test
/// subregions (single intervals over the sample's endpoints and midpoints).
/// Throws EmptySampleRegion if a sample is empty.
AxiomReport check_divisibility_line(const std::vector<OpenRegion>& samples);

}  // namespace continuum
