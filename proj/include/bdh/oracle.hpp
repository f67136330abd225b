#pragma once

#include <set>

#include "bdh/biclique.hpp"
#include "bdh/poset.hpp"

namespace bdh {
namespace oracle {

/// Reference enumeration of maximal bicliques. Every y-shore is an
/// intersection of x-neighborhoods, so the intersection closure of the
/// neighborhood family followed by one polarity pass is complete; no code is
/// shared with the fast paths.
inline std::vector<Biclique> brute_maximal_bicliques(const BipartiteGraph& g) {
  if (g.n(Side::X) > 24) throw std::invalid_argument("brute_maximal_bicliques: |X| > 24");
  std::set<std::vector<int>> family;
  for (int i = 0; i < g.n(Side::X); ++i) {
    auto nb = g.neighbors(x_vertex(i));
    std::vector<int> ns(nb.begin(), nb.end());
    if (!ns.empty()) family.insert(ns);
  }
  // close under pairwise intersection
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(family.begin(), family.end());
    for (std::size_t a = 0; a < snapshot.size() && !grew; ++a)
      for (std::size_t b = a + 1; b < snapshot.size(); ++b) {
        std::vector<int> c = set_intersect(snapshot[a], snapshot[b]);
        if (!c.empty() && family.insert(c).second) {
          grew = true;
          break;
        }
      }
  }
  std::set<std::vector<int>> x_seen;
  std::vector<Biclique> out;
  for (const auto& y0 : family) {
    std::vector<int> x0;
    for (int i = 0; i < g.n(Side::X); ++i) x0.push_back(i);
    for (int y : y0) x0 = set_intersect(x0, g.neighbors(y_vertex(y)));
    if (x0.empty()) continue;
    std::vector<int> y_closed;
    for (int j = 0; j < g.n(Side::Y); ++j) y_closed.push_back(j);
    for (int x : x0) y_closed = set_intersect(y_closed, g.neighbors(x_vertex(x)));
    if (y_closed != y0) continue;  // not polarity-closed; a superset member covers it
    if (x_seen.insert(x0).second) out.push_back({x0, y0});
  }
  canonical_sort(out);
  return out;
}

/// Plain fold of sorted-list intersections over the subset's neighborhoods.
inline std::vector<int> brute_intersection(const BipartiteGraph& g, std::span<const Vertex> subset) {
  if (subset.empty()) throw std::invalid_argument("brute_intersection: empty subset");
  Side s = subset.front().side;
  std::vector<int> acc(g.neighbors(subset.front()).begin(), g.neighbors(subset.front()).end());
  for (std::size_t i = 1; i < subset.size(); ++i) {
    if (subset[i].side != s) throw std::invalid_argument("brute_intersection: mixed sides");
    acc = set_intersect(acc, g.neighbors(subset[i]));
  }
  return acc;
}

namespace detail {

// A total tournament extending P is transitive iff out-degrees are all distinct.
inline bool complement_flip_is_linear(const LessMatrix& less, const std::vector<int>& ext) {
  const int k = static_cast<int>(less.size());
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) pos[ext[i]] = i;
  std::vector<int> outdeg(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      bool forward;
      if (less[i][j]) {
        forward = true;
      } else if (less[j][i]) {
        forward = false;
      } else {
        forward = pos[j] < pos[i];  // flip of the extension's choice
      }
      if (forward) ++outdeg[i];
    }
  std::vector<char> seen(k, 0);
  for (int d : outdeg) {
    if (d < 0 || d >= k || seen[d]) return false;
    seen[d] = 1;
  }
  return true;
}

inline bool relation_is_acyclic(const std::vector<std::vector<char>>& rel) {
  const int k = static_cast<int>(rel.size());
  std::vector<int> indeg(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (rel[i][j]) ++indeg[j];
  std::vector<int> stack;
  for (int i = 0; i < k; ++i)
    if (indeg[i] == 0) stack.push_back(i);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int j = 0; j < k; ++j)
      if (rel[v][j] && --indeg[j] == 0) stack.push_back(j);
  }
  return seen == k;
}

}  // namespace detail

/// Exhaustive realizer search for order dimension at most d (d in 1..3),
/// over posets with at most 10 elements. d = 2 scans single extensions whose
/// flipped complement is again linear; d = 3 scans extension pairs.
inline bool brute_order_dimension_leq(const LessMatrix& less, int d) {
  check_strict_order(less);
  const int k = static_cast<int>(less.size());
  if (k > 10) throw std::invalid_argument("brute_order_dimension_leq: more than 10 elements");
  if (d < 1 || d > 3) throw std::invalid_argument("brute_order_dimension_leq: d must be 1..3");
  if (k <= 1) return true;

  bool chain = true;
  for (int i = 0; i < k && chain; ++i)
    for (int j = 0; j < k && chain; ++j)
      if (i != j && !less[i][j] && !less[j][i]) chain = false;
  if (chain) return true;
  if (d == 1) return false;

  bool found = false;
  bool complete = for_each_linear_extension(less, [&](const std::vector<int>& ext) {
    if (detail::complement_flip_is_linear(less, ext)) {
      found = true;
      return false;
    }
    return true;
  });
  if (found) return true;
  if (!complete) throw std::runtime_error("brute_order_dimension_leq: search budget exhausted");
  if (d == 2) return false;

  // d = 3: choose extensions L1, L2; a third extension separating the rest
  // exists iff the forced flips leave an acyclic relation.
  std::vector<std::vector<int>> extensions;
  complete = for_each_linear_extension(less, [&](const std::vector<int>& ext) {
    extensions.push_back(ext);
    return extensions.size() <= 40000;
  });
  if (!complete || extensions.size() > 40000)
    throw std::runtime_error("brute_order_dimension_leq: too many extensions for d=3 search");
  std::vector<std::vector<char>> rel(k, std::vector<char>(k, 0));
  std::vector<int> pos1(k), pos2(k);
  for (const auto& l1 : extensions) {
    for (int i = 0; i < k; ++i) pos1[l1[i]] = i;
    for (const auto& l2 : extensions) {
      for (int i = 0; i < k; ++i) pos2[l2[i]] = i;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          if (i == j) {
            rel[i][j] = 0;
            continue;
          }
          // forced flip: pairs ordered the same way by both extensions must
          // be reversed by the third
          bool incomparable = !less[i][j] && !less[j][i];
          rel[i][j] = less[i][j] ||
                      (incomparable && pos1[j] < pos1[i] && pos2[j] < pos2[i]);
        }
      if (detail::relation_is_acyclic(rel)) return true;
    }
  }
  return false;
}

/// Direct check of the isometric property: every connected induced subgraph
/// preserves pairwise distances.
inline bool brute_distance_hereditary(const BipartiteGraph& g) {
  const int total = g.total_vertices();
  if (total > 14) throw std::invalid_argument("brute_distance_hereditary: more than 14 vertices");
  auto all = g.vertices();
  for (std::uint32_t mask = 1; mask < (1u << total); ++mask) {
    std::vector<Vertex> keep;
    for (int i = 0; i < total; ++i)
      if (mask & (1u << i)) keep.push_back(all[i]);
    if (keep.size() < 4) continue;
    auto sub = induced_subgraph(g, keep);
    if (!sub.graph.connected()) continue;
    const int k = static_cast<int>(keep.size());
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) {
        auto va = keep[a], vb = keep[b];
        Vertex sa{va.side, -1}, sb{vb.side, -1};
        const auto& map_a = sub.old_index[side_index(va.side)];
        const auto& map_b = sub.old_index[side_index(vb.side)];
        sa.index = static_cast<int>(std::lower_bound(map_a.begin(), map_a.end(), va.index) - map_a.begin());
        sb.index = static_cast<int>(std::lower_bound(map_b.begin(), map_b.end(), vb.index) - map_b.begin());
        auto d_sub = sub.graph.distance(sa, sb);
        auto d_full = g.distance(va, vb);
        if (d_sub && d_full && *d_sub != *d_full) return false;
      }
  }
  return true;
}

}  // namespace oracle
}  // namespace bdh
