#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "continuum/finite_space.hpp"
#include "continuum/lattice.hpp"
#include "continuum/piecewise.hpp"
#include "continuum/region.hpp"
#include "continuum/sheaf.hpp"

namespace continuum {

/// Keys keep insertion order so serialized reports are byte-stable.
using json = nlohmann::ordered_json;

/// Reads and parses a JSON file; throws InputParseError with the byte
/// position on malformed input.
json load_json_file(const std::string& path);

// Lattice wire format:
//   {"elements": ["0","a","1"], "order": [["0","a"],["a","1"]],
//    "top": "1", "bottom": "0"}
// top/bottom optional; the order may be any relation whose closure is the
// intended partial order (a cover relation suffices).
HeytingAlgebra lattice_from_json(const json& j);
json lattice_to_json(const HeytingAlgebra& a);

// Space wire format: {"points": ["p","q"], "opens": [[], ["p"], ["p","q"]]}
FiniteSpace space_from_json(const json& j);
json space_to_json(const FiniteSpace& s);

// Preorder wire format: {"points": ["p","q"], "order": [["p","q"]]}
FiniteSpace space_from_preorder_json(const json& j);

// Point map wire format: {"map": {"p": "q"}}
PointMap point_map_from_json(const json& j, FiniteSpace source, FiniteSpace target);

// Region wire format:
//   {"intervals": [{"lo": "0", "hi": "1/2"}, {"lo": "1", "hi": "+inf"}]}
// Rationals are strings "n" or "p/q"; endpoints may be "-inf"/"+inf".
OpenRegion region_from_json(const json& j);
json region_to_json(const OpenRegion& u);

// Sample list for the line divisibility check: a JSON array of regions.
std::vector<OpenRegion> region_list_from_json(const json& j);

// Piecewise wire format (polynomials are constant-first coefficient lists):
//   {"breakpoints": ["0"], "pieces": [["0","-1"],["0","1"]], "values": {"0": "0"}}
PiecewiseFn piecewise_from_json(const json& j);

// Presheaf wire format (open indices refer to the space's `opens` array):
//   {"space": {...}, "sections": {"0": ["s"], ...},
//    "restrictions": {"2->1": {"s1": "t"}, ...}}
Presheaf presheaf_from_json(const json& j);

json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

}  // namespace continuum
