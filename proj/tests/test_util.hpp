#pragma once

#include <cstdint>
#include <vector>

#include "bdh/core.hpp"

namespace testutil {

// domino: a,b,c vs d,e,f with edges a-d a-e b-d b-e b-f c-e c-f
inline bdh::BipartiteGraph domino() {
  bdh::BipartiteGraph g(3, 3);
  g.add_edge(bdh::x_vertex(0), bdh::y_vertex(0));
  g.add_edge(bdh::x_vertex(0), bdh::y_vertex(1));
  g.add_edge(bdh::x_vertex(1), bdh::y_vertex(0));
  g.add_edge(bdh::x_vertex(1), bdh::y_vertex(1));
  g.add_edge(bdh::x_vertex(1), bdh::y_vertex(2));
  g.add_edge(bdh::x_vertex(2), bdh::y_vertex(1));
  g.add_edge(bdh::x_vertex(2), bdh::y_vertex(2));
  return g;
}

// 6-cycle a-d-b-f-c-e-a
inline bdh::BipartiteGraph c6() {
  bdh::BipartiteGraph g(3, 3);
  g.add_edge(bdh::x_vertex(0), bdh::y_vertex(0));
  g.add_edge(bdh::x_vertex(1), bdh::y_vertex(0));
  g.add_edge(bdh::x_vertex(1), bdh::y_vertex(2));
  g.add_edge(bdh::x_vertex(2), bdh::y_vertex(2));
  g.add_edge(bdh::x_vertex(2), bdh::y_vertex(1));
  g.add_edge(bdh::x_vertex(0), bdh::y_vertex(1));
  return g;
}

// path on 2k vertices x1-y1-x2-y2-...
inline bdh::BipartiteGraph path(int vertices) {
  int nx = (vertices + 1) / 2, ny = vertices / 2;
  bdh::BipartiteGraph g(nx, ny);
  for (int v = 0; v + 1 < vertices; ++v) {
    if (v % 2 == 0)
      g.add_edge(bdh::x_vertex(v / 2), bdh::y_vertex(v / 2));
    else
      g.add_edge(bdh::x_vertex(v / 2 + 1), bdh::y_vertex(v / 2));
  }
  return g;
}

inline bdh::BipartiteGraph k2() { return path(2); }
inline bdh::BipartiteGraph p4() { return path(4); }
inline bdh::BipartiteGraph path5() { return path(5); }

// every bipartite graph with nx <= ny, one representative per X-relabeling
// (rows nondecreasing as integers)
template <class F>
void for_each_bipartite(int nx, int ny, F&& f) {
  std::vector<std::uint32_t> rows(nx, 0);
  auto rec = [&](auto&& self, int idx, std::uint32_t min_mask) -> void {
    if (idx == nx) {
      f(rows);
      return;
    }
    for (std::uint32_t m = min_mask; m < (1u << ny); ++m) {
      rows[idx] = m;
      self(self, idx + 1, m);
    }
  };
  rec(rec, 0, 0);
}

inline bdh::BipartiteGraph from_rows(int nx, int ny, const std::vector<std::uint32_t>& rows) {
  bdh::BipartiteGraph g(nx, ny);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      if (rows[i] & (1u << j)) g.add_edge(bdh::x_vertex(i), bdh::y_vertex(j));
  return g;
}

struct MaskFilters {
  bool connected = false;
  bool has_universal = true;
};

inline MaskFilters mask_filters(int nx, int ny, const std::vector<std::uint32_t>& rows) {
  MaskFilters out;
  const std::uint32_t full = (1u << ny) - 1;
  std::uint32_t cover = 0;
  out.has_universal = false;
  for (auto r : rows) {
    if (r == full) out.has_universal = true;
    cover |= r;
  }
  for (int j = 0; j < ny; ++j) {
    int cnt = 0;
    for (auto r : rows)
      cnt += (r >> j) & 1;
    if (cnt == nx) out.has_universal = true;
  }
  std::uint32_t xs = 1, ys = 0;
  bool grow = true;
  while (grow) {
    grow = false;
    for (int i = 0; i < nx; ++i)
      if (xs & (1u << i)) {
        if ((ys | rows[i]) != ys) {
          ys |= rows[i];
          grow = true;
        }
      }
    for (int i = 0; i < nx; ++i)
      if (!(xs & (1u << i)) && (rows[i] & ys)) {
        xs |= 1u << i;
        grow = true;
      }
  }
  out.connected = xs == (1u << nx) - 1 && ys == full && cover == full;
  return out;
}

inline bdh::BipartiteGraph random_bipartite(int nx, int ny, double density, bdh::SplitMix64& rng) {
  bdh::BipartiteGraph g(nx, ny);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      if (rng.unit() < density) g.add_edge(bdh::x_vertex(i), bdh::y_vertex(j));
  return g;
}

}  // namespace testutil
