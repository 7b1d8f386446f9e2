#pragma once

#include <string>
#include <utility>
#include <vector>

#include "continuum/finite_space.hpp"
#include "continuum/lattice.hpp"

namespace continuum {

/// The named algebras the exhaustive suites run over: chains 2..max_size,
/// Boolean 4 (= the diamond) and Boolean 8 when they fit the size bound, and
/// the opens-lattices of all topologies on up to `space_points` points
/// (filtered to max_size elements).
std::vector<std::pair<std::string, HeytingAlgebra>> catalog_algebras(int max_size,
                                                                     int space_points = 4);

}  // namespace continuum
