#pragma once

#include "bdh/arborescence.hpp"
#include "bdh/biclique.hpp"
#include "bdh/oracle.hpp"
#include "bdh/poset.hpp"

namespace bdh {

/// Maximal bicliques in canonical order (x-shore lexicographic).
///
/// When an elimination sequence exists the family is assembled from single
/// neighborhoods and pairwise intersections, which is complete for such
/// graphs; otherwise the reference enumeration runs (bounded input size).
inline std::vector<Biclique> maximal_bicliques(const BipartiteGraph& g) {
  if (!g.connected()) throw std::invalid_argument("maximal_bicliques: graph must be connected");
  if (!pruning_sequence(g)) return oracle::brute_maximal_bicliques(g);

  std::set<std::vector<int>> y_family;
  for (int i = 0; i < g.n(Side::X); ++i) {
    auto nb = g.neighbors(x_vertex(i));
    if (!nb.empty()) y_family.insert(std::vector<int>(nb.begin(), nb.end()));
    for (int i2 = i + 1; i2 < g.n(Side::X); ++i2) {
      std::vector<int> common = set_intersect(nb, g.neighbors(x_vertex(i2)));
      if (!common.empty()) y_family.insert(std::move(common));
    }
  }
  std::vector<Biclique> out;
  std::set<std::vector<int>> seen_x;
  for (const auto& y0 : y_family) {
    std::vector<int> x0;
    for (int i = 0; i < g.n(Side::X); ++i) x0.push_back(i);
    for (int y : y0) x0 = set_intersect(x0, g.neighbors(y_vertex(y)));
    if (x0.empty() || !seen_x.insert(x0).second) continue;
    out.push_back({std::move(x0), y0});
  }
  canonical_sort(out);
  return out;
}

/// The lattice proper: canonical element list plus the two bound elements.
struct GaloisLattice {
  std::vector<Biclique> elements;
  Biclique bottom;
  Biclique top;
  int nx = 0;
  int ny = 0;

  int find(const Biclique& b) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), b, shore_less);
    if (it == elements.end() || !(*it == b)) return -1;
    return static_cast<int>(it - elements.begin());
  }
};

inline GaloisLattice galois_lattice(const BipartiteGraph& g) {
  GaloisLattice lat;
  lat.elements = maximal_bicliques(g);
  lat.nx = g.n(Side::X);
  lat.ny = g.n(Side::Y);
  for (int j = 0; j < lat.ny; ++j) lat.bottom.y_shore.push_back(j);
  for (int i = 0; i < lat.nx; ++i) lat.top.x_shore.push_back(i);
  return lat;
}

/// Covering digraph of the element list (bounds excluded): node ids index the
/// canonical list, one arc per covering pair.
struct HasseDigraph {
  int node_count = 0;
  std::vector<std::pair<int, int>> arcs;

  std::vector<int> in_degree() const {
    std::vector<int> d(node_count, 0);
    for (auto [u, v] : arcs) ++d[v];
    return d;
  }
  std::vector<int> out_degree() const {
    std::vector<int> d(node_count, 0);
    for (auto [u, v] : arcs) ++d[u];
    return d;
  }
  std::vector<int> sources() const {
    auto in = in_degree();
    std::vector<int> out;
    for (int i = 0; i < node_count; ++i)
      if (in[i] == 0) out.push_back(i);
    return out;
  }
  std::vector<int> sinks() const {
    auto out_deg = out_degree();
    std::vector<int> out;
    for (int i = 0; i < node_count; ++i)
      if (out_deg[i] == 0) out.push_back(i);
    return out;
  }
  std::vector<int> flow_nodes() const {
    auto in = in_degree();
    auto out_deg = out_degree();
    std::vector<int> out;
    for (int i = 0; i < node_count; ++i)
      if (in[i] > 0 && out_deg[i] > 0) out.push_back(i);
    return out;
  }
};

inline LessMatrix shore_order_matrix(std::span<const Biclique> elements) {
  const int k = static_cast<int>(elements.size());
  LessMatrix less(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && compare(elements[i], elements[j]) == OrderRel::less) less[i][j] = true;
  return less;
}

inline HasseDigraph hasse(const GaloisLattice& lat) {
  HasseDigraph h;
  h.node_count = static_cast<int>(lat.elements.size());
  h.arcs = transitive_reduction_arcs(shore_order_matrix(lat.elements));
  return h;
}

inline HasseDigraph hasse(const BipartiteGraph& g) { return hasse(galois_lattice(g)); }

inline bool is_tree_shaped(const HasseDigraph& h) {
  return underlying_is_tree(h.node_count, h.arcs);
}

/// Greatest lower and least upper bound, scanned over the whole element list
/// (bounds included as candidates).
inline std::pair<Biclique, Biclique> meet_join(const GaloisLattice& lat, const Biclique& b1,
                                               const Biclique& b2) {
  std::vector<Biclique> all;
  all.push_back(lat.bottom);
  all.insert(all.end(), lat.elements.begin(), lat.elements.end());
  all.push_back(lat.top);
  auto leq = [&](const Biclique& a, const Biclique& b) {
    auto r = compare(a, b);
    return r == OrderRel::less || r == OrderRel::equal;
  };
  std::optional<Biclique> meet, join;
  for (const auto& c : all) {
    if (leq(c, b1) && leq(c, b2) && (!meet || leq(*meet, c))) meet = c;
    if (leq(b1, c) && leq(b2, c) && (!join || leq(c, *join))) join = c;
  }
  for (const auto& c : all) {
    if (leq(c, b1) && leq(c, b2) && !leq(c, *meet))
      throw std::logic_error("meet_join: lower bounds not dominated");
    if (leq(b1, c) && leq(b2, c) && !leq(*join, c))
      throw std::logic_error("meet_join: upper bounds not dominated");
  }
  return {*meet, *join};
}

/// Three linear orders on the element list whose intersection is the shore
/// order. Each element's y-shore spans a path in the Y-arc tree; the keys are
/// the two preorder ranks of the path's deepest arc (reversed) and the depth
/// of its shallowest arc.
inline std::array<std::vector<int>, 3> build_realizer(const GaloisLattice& lat,
                                                      const ArborescenceEncoding& enc) {
  if (enc.arc_side != Side::Y) throw std::invalid_argument("build_realizer: needs the Y-arc encoding");
  if (enc.arc_count() != lat.ny) throw std::invalid_argument("build_realizer: encoding size mismatch");
  const int k = static_cast<int>(lat.elements.size());
  std::vector<std::array<int, 3>> key(k);
  for (int i = 0; i < k; ++i) {
    const auto& ys = lat.elements[i].y_shore;
    int a = -1, b = -1;
    for (int y : ys) {
      int node = enc.node_of_vertex[y];
      if (a < 0 || enc.depth[node] < enc.depth[a]) a = node;
      if (b < 0 || enc.depth[node] > enc.depth[b]) b = node;
    }
    if (!enc.leq_t(a, b) || enc.depth[b] - enc.depth[a] + 1 != static_cast<int>(ys.size()))
      throw std::logic_error("build_realizer: y-shore is not a tree path");
    key[i] = {-enc.pre_lr[b], -enc.pre_rl[b], enc.depth[a]};
  }
  // ties within one key must be broken the same way everywhere, and in a way
  // that never reverses a comparable pair: use one fixed linear extension
  std::vector<int> ext_rank(k, 0);
  {
    auto less = shore_order_matrix(lat.elements);
    std::vector<int> indeg(k, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (less[i][j]) ++indeg[j];
    std::vector<int> stack;
    for (int i = 0; i < k; ++i)
      if (indeg[i] == 0) stack.push_back(i);
    int rank = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ext_rank[v] = rank++;
      for (int j = 0; j < k; ++j)
        if (less[v][j] && --indeg[j] == 0) stack.push_back(j);
    }
  }
  std::array<std::vector<int>, 3> orders;
  for (int c = 0; c < 3; ++c) {
    auto& ord = orders[c];
    ord.resize(k);
    for (int i = 0; i < k; ++i) ord[i] = i;
    std::sort(ord.begin(), ord.end(), [&](int i, int j) {
      if (key[i][c] != key[j][c]) return key[i][c] < key[j][c];
      return ext_rank[i] < ext_rank[j];
    });
  }
  return orders;
}

/// Deterministic DOT rendering of the covering digraph.
inline std::string to_dot(const GaloisLattice& lat, const HasseDigraph& h) {
  std::ostringstream out;
  out << "digraph hasse {\n";
  for (int i = 0; i < h.node_count; ++i)
    out << "  n" << i << " [label=\"" << to_string(lat.elements[i]) << "\"];\n";
  for (auto [u, v] : h.arcs) out << "  n" << u << " -> n" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace bdh
