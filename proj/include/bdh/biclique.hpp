#pragma once

#include "bdh/core.hpp"

namespace bdh {

/// A biclique named by its two shores, each a sorted per-class index list.
struct Biclique {
  std::vector<int> x_shore;
  std::vector<int> y_shore;
  friend bool operator==(const Biclique&, const Biclique&) = default;
};

enum class OrderRel { less, greater, equal, incomparable };

/// Shore-inclusion order: B before B' iff X(B) is contained in X(B').
inline OrderRel compare(const Biclique& a, const Biclique& b) {
  if (a.x_shore == b.x_shore) return OrderRel::equal;
  if (is_subset(a.x_shore, b.x_shore)) return OrderRel::less;
  if (is_subset(b.x_shore, a.x_shore)) return OrderRel::greater;
  return OrderRel::incomparable;
}

inline bool shore_less(const Biclique& a, const Biclique& b) {
  return a.x_shore < b.x_shore;
}

inline void canonical_sort(std::vector<Biclique>& list) {
  std::sort(list.begin(), list.end(), shore_less);
}

/// True iff both defining intersections hold: the x-shore is the common
/// neighborhood of the y-shore and vice versa.
inline bool satisfies_polarity(const BipartiteGraph& g, const Biclique& b) {
  if (b.x_shore.empty() || b.y_shore.empty()) return false;
  std::vector<int> xs(g.n(Side::X));
  for (int i = 0; i < g.n(Side::X); ++i) xs[i] = i;
  std::vector<int> x_closure = xs;
  for (int y : b.y_shore) x_closure = set_intersect(x_closure, g.neighbors(y_vertex(y)));
  if (x_closure != b.x_shore) return false;
  std::vector<int> y_closure(g.n(Side::Y));
  for (int j = 0; j < g.n(Side::Y); ++j) y_closure[j] = j;
  for (int x : b.x_shore) y_closure = set_intersect(y_closure, g.neighbors(x_vertex(x)));
  return y_closure == b.y_shore;
}

inline std::string to_string(const Biclique& b) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < b.x_shore.size(); ++i) out << (i ? "," : "") << "x" << b.x_shore[i] + 1;
  out << "}|{";
  for (std::size_t i = 0; i < b.y_shore.size(); ++i) out << (i ? "," : "") << "y" << b.y_shore[i] + 1;
  out << "}";
  return out.str();
}

}  // namespace bdh
