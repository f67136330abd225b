#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace bdh {

/// Strict order as an explicit k x k matrix; less[i][j] means i < j.
using LessMatrix = std::vector<std::vector<bool>>;

inline void check_strict_order(const LessMatrix& less) {
  const std::size_t k = less.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (less[i].size() != k) throw std::invalid_argument("order matrix must be square");
    if (less[i][i]) throw std::invalid_argument("order matrix must be irreflexive");
  }
}

/// Covering arcs of a strict order: (i,j) with i < j and nothing in between.
inline std::vector<std::pair<int, int>> transitive_reduction_arcs(const LessMatrix& less) {
  const int k = static_cast<int>(less.size());
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!less[i][j]) continue;
      bool covered = true;
      for (int t = 0; t < k && covered; ++t)
        if (less[i][t] && less[t][j]) covered = false;
      if (covered) arcs.emplace_back(i, j);
    }
  return arcs;
}

inline bool underlying_is_forest(int nodes, std::span<const std::pair<int, int>> arcs) {
  // acyclic undirected <=> every component has |edges| = |nodes| - 1
  std::vector<int> parent(nodes);
  for (int i = 0; i < nodes; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (auto [a, b] : arcs) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

inline bool underlying_is_tree(int nodes, std::span<const std::pair<int, int>> arcs) {
  if (nodes == 0) return false;
  return static_cast<int>(arcs.size()) == nodes - 1 && underlying_is_forest(nodes, arcs);
}

inline bool underlying_is_connected(int nodes, std::span<const std::pair<int, int>> arcs) {
  if (nodes == 0) return true;
  std::vector<int> parent(nodes);
  for (int i = 0; i < nodes; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  int comps = nodes;
  for (auto [a, b] : arcs) {
    int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --comps;
    }
  }
  return comps == 1;
}

/// Enumerates linear extensions of a strict order, invoking `visit` with each
/// extension (element indices in order) until `visit` returns false or the
/// step budget runs out. Returns false if the budget was exhausted.
inline bool for_each_linear_extension(const LessMatrix& less,
                                      const std::function<bool(const std::vector<int>&)>& visit,
                                      std::uint64_t step_budget = 50'000'000) {
  const int k = static_cast<int>(less.size());
  std::vector<int> indeg(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (less[i][j]) ++indeg[j];
  std::vector<int> order;
  std::vector<char> used(k, 0);
  std::uint64_t steps = 0;
  bool stop = false, exhausted = false;

  std::function<void()> rec = [&]() {
    if (stop || exhausted) return;
    if (++steps > step_budget) {
      exhausted = true;
      return;
    }
    if (static_cast<int>(order.size()) == k) {
      if (!visit(order)) stop = true;
      return;
    }
    for (int v = 0; v < k && !stop && !exhausted; ++v) {
      if (used[v] || indeg[v] != 0) continue;
      used[v] = 1;
      order.push_back(v);
      for (int j = 0; j < k; ++j)
        if (less[v][j]) --indeg[j];
      rec();
      for (int j = 0; j < k; ++j)
        if (less[v][j]) ++indeg[j];
      order.pop_back();
      used[v] = 0;
    }
  };
  rec();
  return !exhausted;
}

}  // namespace bdh
