#include "continuum/catalog.hpp"

namespace continuum {

std::vector<std::pair<std::string, HeytingAlgebra>> catalog_algebras(int max_size,
                                                                     int space_points) {
  std::vector<std::pair<std::string, HeytingAlgebra>> out;
  for (int n = 2; n <= max_size; ++n)
    out.emplace_back("chain" + std::to_string(n), chain_algebra(n));
  if (max_size >= 4) out.emplace_back("bool4", boolean_algebra(2));
  if (max_size >= 8) out.emplace_back("bool8", boolean_algebra(3));
  for (int pts = 0; pts <= space_points; ++pts) {
    const auto spaces = all_topologies(pts);
    for (std::size_t i = 0; i < spaces.size(); ++i) {
      HeytingAlgebra a = spaces[i].opens_lattice();
      if (a.size() > max_size) continue;
      out.emplace_back("opens(" + std::to_string(pts) + "pt#" + std::to_string(i) + ")",
                       std::move(a));
    }
  }
  return out;
}

}  // namespace continuum
