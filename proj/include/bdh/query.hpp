#pragma once

#include "bdh/arborescence.hpp"
#include "bdh/biclique.hpp"

namespace bdh {

/// Per-query instrumentation; one instance per call, never shared.
/// `comparisons` counts arc-order probes and ancestor-jump steps,
/// `nodes_visited` counts arcs touched while listing a path.
struct QueryStats {
  long comparisons = 0;
  long nodes_visited = 0;
  void reset() { comparisons = 0, nodes_visited = 0; }
};

namespace detail {

inline void check_interval_vertex(const ArborescenceEncoding& enc, Vertex v) {
  if (v.side != enc.interval_side())
    throw std::invalid_argument("query: vertex " + to_string(v) + " is on the arc side");
  if (v.index < 0 || v.index >= enc.interval_count())
    throw std::invalid_argument("query: unknown vertex " + to_string(v));
}

inline std::vector<int> walk_path(const ArborescenceEncoding& enc, int top, int bottom,
                                  QueryStats* stats) {
  std::vector<int> out;
  for (int cur = bottom;; cur = enc.parent[cur]) {
    if (stats) ++stats->nodes_visited;
    out.push_back(enc.arc_vertex[cur]);
    if (cur == top) break;
  }
  return out;
}

/// Shared fold: the path [a_max, b_min] covering the intersection of the
/// subset's intervals, or nullopt when the intersection is empty.
inline std::optional<PathInterval> intersection_interval(const ArborescenceEncoding& enc,
                                                         std::span<const Vertex> subset,
                                                         QueryStats* stats) {
  if (subset.empty()) throw std::invalid_argument("query: empty subset");
  for (Vertex v : subset) check_interval_vertex(enc, v);
  PathInterval first = enc.intervals[subset.front().index];
  if (first.empty()) return std::nullopt;
  int a_max = first.a;
  for (std::size_t i = 1; i < subset.size(); ++i) {
    PathInterval iv = enc.intervals[subset[i].index];
    if (iv.empty()) return std::nullopt;
    if (stats) ++stats->comparisons;
    if (enc.leq_t(a_max, iv.a)) {
      a_max = iv.a;
    } else {
      if (stats) ++stats->comparisons;
      if (!enc.leq_t(iv.a, a_max)) return std::nullopt;
    }
  }
  int b_min = first.b;
  for (std::size_t i = 1; i < subset.size() && b_min != 0; ++i) {
    long steps = 0;
    b_min = enc.lca_pair(b_min, enc.intervals[subset[i].index].b, &steps);
    if (stats) stats->comparisons += steps + 1;
  }
  if (stats) ++stats->comparisons;
  if (b_min == 0 || !enc.leq_t(a_max, b_min)) return std::nullopt;
  return PathInterval{a_max, b_min};
}

}  // namespace detail

/// Neighborhood of an interval-side vertex, listed from the deep end of its
/// path upward.
inline std::vector<int> list_neighbors(const ArborescenceEncoding& enc, Vertex v,
                                       QueryStats* stats = nullptr) {
  if (stats) stats->reset();
  detail::check_interval_vertex(enc, v);
  PathInterval iv = enc.intervals[v.index];
  if (iv.empty()) return {};
  return detail::walk_path(enc, iv.a, iv.b, stats);
}

/// Common neighborhood of a nonempty same-side subset, in deep-to-shallow
/// path order. Cost is linear in subset size plus output size.
inline std::vector<int> neighbor_intersection(const ArborescenceEncoding& enc,
                                              std::span<const Vertex> subset,
                                              QueryStats* stats = nullptr) {
  if (stats) stats->reset();
  auto iv = detail::intersection_interval(enc, subset, stats);
  if (!iv) return {};
  return detail::walk_path(enc, iv->a, iv->b, stats);
}

/// Emptiness test only: the fold without the final path listing.
inline bool intersection_empty(const ArborescenceEncoding& enc, std::span<const Vertex> subset,
                               QueryStats* stats = nullptr) {
  if (stats) stats->reset();
  return !detail::intersection_interval(enc, subset, stats).has_value();
}

/// Double-polarity check: subset X' (on enc_arcs_y's interval side) is the
/// x-shore of a maximal biclique iff closing its common neighborhood back
/// through enc_arcs_x returns exactly X'. An empty common neighborhood is a
/// plain "no".
inline bool is_maximal_biclique(const ArborescenceEncoding& enc_arcs_x,
                                const ArborescenceEncoding& enc_arcs_y,
                                std::span<const Vertex> subset, QueryStats* stats = nullptr) {
  if (stats) stats->reset();
  if (enc_arcs_x.arc_side != Side::X || enc_arcs_y.arc_side != Side::Y)
    throw std::invalid_argument("is_maximal_biclique: pass the X-arc and Y-arc encodings");
  if (enc_arcs_x.arc_count() != enc_arcs_y.interval_count() ||
      enc_arcs_y.arc_count() != enc_arcs_x.interval_count())
    throw std::invalid_argument("is_maximal_biclique: encodings disagree on the graph size");
  QueryStats local;
  std::vector<int> y0 = neighbor_intersection(enc_arcs_y, subset, &local);
  if (stats) stats->comparisons += local.comparisons, stats->nodes_visited += local.nodes_visited;
  if (y0.empty()) return false;
  std::vector<Vertex> ys;
  ys.reserve(y0.size());
  for (int y : y0) ys.push_back(y_vertex(y));
  std::vector<int> x0 = neighbor_intersection(enc_arcs_x, ys, &local);
  if (stats) stats->comparisons += local.comparisons, stats->nodes_visited += local.nodes_visited;
  std::vector<int> want;
  want.reserve(subset.size());
  for (Vertex v : subset) want.push_back(v.index);
  std::sort(want.begin(), want.end());
  want.erase(std::unique(want.begin(), want.end()), want.end());
  std::sort(x0.begin(), x0.end());
  return x0 == want;
}

/// All maximal bicliques via the pair family: canonical intervals for every
/// N(x) and N(x) ∩ N(x'), deduplicated, then one polarity pass each.
inline std::vector<Biclique> enumerate_via_F(const ArborescenceEncoding& enc_arcs_x,
                                             const ArborescenceEncoding& enc_arcs_y) {
  if (enc_arcs_x.arc_side != Side::X || enc_arcs_y.arc_side != Side::Y)
    throw std::invalid_argument("enumerate_via_F: pass the X-arc and Y-arc encodings");
  const int nx = enc_arcs_y.interval_count();
  std::set<std::pair<int, int>> seen;  // (pre_lr[a], pre_lr[b]) keys
  std::vector<PathInterval> candidates;
  auto add = [&](PathInterval iv) {
    if (iv.empty()) return;
    if (seen.insert({enc_arcs_y.pre_lr[iv.a], enc_arcs_y.pre_lr[iv.b]}).second)
      candidates.push_back(iv);
  };
  for (int i = 0; i < nx; ++i) add(enc_arcs_y.intervals[i]);
  for (int i = 0; i < nx; ++i) {
    PathInterval iv1 = enc_arcs_y.intervals[i];
    if (iv1.empty()) continue;
    for (int j = i + 1; j < nx; ++j) {
      PathInterval iv2 = enc_arcs_y.intervals[j];
      if (iv2.empty()) continue;
      int a_max;
      if (enc_arcs_y.leq_t(iv1.a, iv2.a)) {
        a_max = iv2.a;
      } else if (enc_arcs_y.leq_t(iv2.a, iv1.a)) {
        a_max = iv1.a;
      } else {
        continue;
      }
      int b_min = enc_arcs_y.lca_pair(iv1.b, iv2.b);
      if (b_min == 0 || !enc_arcs_y.leq_t(a_max, b_min)) continue;
      add({a_max, b_min});
    }
  }
  std::vector<Biclique> out;
  for (PathInterval iv : candidates) {
    std::vector<int> y0 = expand_interval(enc_arcs_y, iv);
    std::sort(y0.begin(), y0.end());
    std::vector<Vertex> ys;
    ys.reserve(y0.size());
    for (int y : y0) ys.push_back(y_vertex(y));
    std::vector<int> x0 = neighbor_intersection(enc_arcs_x, ys);
    std::sort(x0.begin(), x0.end());
    out.push_back({std::move(x0), std::move(y0)});
  }
  std::set<std::vector<int>> dedupe;
  std::vector<Biclique> unique_out;
  for (auto& b : out)
    if (dedupe.insert(b.x_shore).second) unique_out.push_back(std::move(b));
  canonical_sort(unique_out);
  return unique_out;
}

}  // namespace bdh
