#include "continuum/lattice.hpp"

#include <algorithm>
#include <map>

namespace continuum {

HeytingAlgebra HeytingAlgebra::build(std::vector<std::string> elements,
                                     const OrderPairs& order_pairs,
                                     const std::optional<std::string>& top,
                                     const std::optional<std::string>& bottom) {
  if (elements.empty()) throw Error("a lattice needs at least one element");
  const int n = static_cast<int>(elements.size());

  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(elements[static_cast<std::size_t>(i)], i).second)
      throw Error("duplicate element: " + elements[static_cast<std::size_t>(i)]);
  }
  auto resolve = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw UnknownElement(name);
    return it->second;
  };

  HeytingAlgebra a;
  a.names_ = std::move(elements);
  a.leq_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) a.leq_[a.idx(i, i)] = 1;
  for (const auto& [lo, hi] : order_pairs) a.leq_[a.idx(resolve(lo), resolve(hi))] = 1;

  // Transitive closure, then antisymmetry.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (a.leq_[a.idx(i, k)])
        for (int j = 0; j < n; ++j)
          if (a.leq_[a.idx(k, j)]) a.leq_[a.idx(i, j)] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a.leq_[a.idx(i, j)] && a.leq_[a.idx(j, i)])
        throw NotAPartialOrder(a.names_[static_cast<std::size_t>(i)],
                               a.names_[static_cast<std::size_t>(j)]);

  // Every pair needs a greatest lower bound and a least upper bound.
  a.meet_.assign(a.leq_.size(), -1);
  a.join_.assign(a.leq_.size(), -1);
  std::vector<int> bounds;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      bounds.clear();
      for (int w = 0; w < n; ++w)
        if (a.leq_[a.idx(w, u)] && a.leq_[a.idx(w, v)]) bounds.push_back(w);
      int glb = -1;
      for (int m : bounds) {
        bool greatest = true;
        for (int w : bounds)
          if (!a.leq_[a.idx(w, m)]) { greatest = false; break; }
        if (greatest) { glb = m; break; }
      }
      if (glb < 0)
        throw NotALattice(a.names_[static_cast<std::size_t>(u)],
                          a.names_[static_cast<std::size_t>(v)], "meet");
      a.meet_[a.idx(u, v)] = glb;

      bounds.clear();
      for (int w = 0; w < n; ++w)
        if (a.leq_[a.idx(u, w)] && a.leq_[a.idx(v, w)]) bounds.push_back(w);
      int lub = -1;
      for (int m : bounds) {
        bool least = true;
        for (int w : bounds)
          if (!a.leq_[a.idx(m, w)]) { least = false; break; }
        if (least) { lub = m; break; }
      }
      if (lub < 0)
        throw NotALattice(a.names_[static_cast<std::size_t>(u)],
                          a.names_[static_cast<std::size_t>(v)], "join");
      a.join_[a.idx(u, v)] = lub;
    }
  }

  a.top_ = 0;
  a.bottom_ = 0;
  for (int i = 1; i < n; ++i) {
    a.top_ = a.join_[a.idx(a.top_, i)];
    a.bottom_ = a.meet_[a.idx(a.bottom_, i)];
  }
  if (top && resolve(*top) != a.top_)
    throw Error("declared top '" + *top + "' is not the maximum element");
  if (bottom && resolve(*bottom) != a.bottom_)
    throw Error("declared bottom '" + *bottom + "' is not the minimum element");

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int lhs = a.meet_[a.idx(x, a.join_[a.idx(y, z)])];
        const int rhs = a.join_[a.idx(a.meet_[a.idx(x, y)], a.meet_[a.idx(x, z)])];
        if (lhs != rhs)
          throw NotDistributive(a.names_[static_cast<std::size_t>(x)],
                                a.names_[static_cast<std::size_t>(y)],
                                a.names_[static_cast<std::size_t>(z)]);
      }

  // Implication by brute-force maximum over candidates. The candidate set is
  // closed under join in a distributive lattice, so folding join over it
  // yields the largest member.
  a.imp_.assign(a.leq_.size(), 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int r = a.bottom_;
      for (int w = 0; w < n; ++w)
        if (a.leq_[a.idx(a.meet_[a.idx(w, u)], v)]) r = a.join_[a.idx(r, w)];
      a.imp_[a.idx(u, v)] = r;
    }

  return a;
}

int HeytingAlgebra::index_of(const std::string& element) const {
  for (int i = 0; i < size(); ++i)
    if (names_[static_cast<std::size_t>(i)] == element) return i;
  throw UnknownElement(element);
}

HeytingAlgebra::OrderPairs HeytingAlgebra::cover_pairs() const {
  OrderPairs covers;
  const int n = size();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v || !leq_[idx(u, v)]) continue;
      bool direct = true;
      for (int w = 0; w < n && direct; ++w)
        if (w != u && w != v && leq_[idx(u, w)] && leq_[idx(w, v)]) direct = false;
      if (direct)
        covers.emplace_back(names_[static_cast<std::size_t>(u)],
                            names_[static_cast<std::size_t>(v)]);
    }
  return covers;
}

bool is_boolean(const HeytingAlgebra& a) {
  for (int u = 0; u < a.size(); ++u)
    if (a.pseudo_complement(a.pseudo_complement(u)) != u) return false;
  return true;
}

HeytingAlgebra chain_algebra(int n) {
  if (n < 1) throw Error("chain size must be >= 1");
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (i == 0) names.emplace_back("0");
    else if (i == n - 1) names.emplace_back("1");
    else names.emplace_back(1, static_cast<char>('a' + i - 1));
  }
  HeytingAlgebra::OrderPairs pairs;
  for (int i = 0; i + 1 < n; ++i)
    pairs.emplace_back(names[static_cast<std::size_t>(i)], names[static_cast<std::size_t>(i) + 1]);
  return HeytingAlgebra::build(std::move(names), pairs);
}

HeytingAlgebra boolean_algebra(int atom_count) {
  if (atom_count < 0 || atom_count > 6) throw Error("boolean_algebra supports 0..6 atoms");
  const int n = 1 << atom_count;
  auto label = [&](int mask) -> std::string {
    if (mask == 0) return "0";
    if (mask == n - 1) return "1";
    std::string s;
    for (int i = 0; i < atom_count; ++i)
      if (mask & (1 << i)) s += static_cast<char>('x' + i);
    return s;
  };
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) names.push_back(label(m));
  HeytingAlgebra::OrderPairs pairs;
  for (int m = 0; m < n; ++m)
    for (int u = 0; u < n; ++u)
      if ((m & u) == m && m != u)
        pairs.emplace_back(names[static_cast<std::size_t>(m)], names[static_cast<std::size_t>(u)]);
  return HeytingAlgebra::build(std::move(names), pairs);
}

}  // namespace continuum
