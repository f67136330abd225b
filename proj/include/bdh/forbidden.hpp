#pragma once

#include <bit>
#include <cstdint>
#include <optional>

#include "bdh/core.hpp"

namespace bdh {

/// Certificate for a failed hole/domino-freeness check.
/// A domino certificate lists three X vertices followed by three Y vertices;
/// a hole certificate lists the cycle in traversal order.
struct ForbiddenSubgraph {
  enum class Kind { domino, hole };
  Kind kind;
  std::vector<Vertex> vertices;
};

/// True iff xs x ys induce a domino: exactly 7 edges and the two non-edges
/// share no row and no column of the 3x3 adjacency pattern.
inline bool is_induced_domino(const BipartiteGraph& g, std::span<const Vertex> xs,
                              std::span<const Vertex> ys) {
  if (xs.size() != 3 || ys.size() != 3) return false;
  int ones = 0;
  int zero_rows = 0, zero_cols = 0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      if (g.adjacent(xs[r], ys[c])) {
        ++ones;
      } else {
        zero_rows |= 1 << r;
        zero_cols |= 1 << c;
      }
    }
  return ones == 7 && std::popcount(static_cast<unsigned>(zero_rows)) == 2 &&
         std::popcount(static_cast<unsigned>(zero_cols)) == 2;
}

inline bool is_chordless_cycle(const BipartiteGraph& g, std::span<const Vertex> cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 6 || k % 2 != 0) return false;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (cycle[i] == cycle[j]) return false;
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

namespace detail {

inline std::vector<std::uint64_t> row_bits(const BipartiteGraph& g, Side s, int words) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.n(s)) * words, 0);
  for (int i = 0; i < g.n(s); ++i)
    for (int j : g.neighbors({s, i})) rows[static_cast<std::size_t>(i) * words + j / 64] |= 1ull << (j % 64);
  return rows;
}

// Flat vertex order used by the cycle search: X block then Y block.
inline int flat_id(const BipartiteGraph& g, Vertex v) {
  return v.side == Side::X ? v.index : g.n(Side::X) + v.index;
}
inline Vertex unflat(const BipartiteGraph& g, int id) {
  return id < g.n(Side::X) ? x_vertex(id) : y_vertex(id - g.n(Side::X));
}

// Shortest-path probe: for each 2-path u-w-v, search a u..v path avoiding
// N[w] \ {u,v}. Any such path of length >= 4 closes a chordless cycle of
// length >= 6 through w. Finds most holes quickly but is not exhaustive.
inline std::optional<ForbiddenSubgraph> hole_bfs_probe(const BipartiteGraph& g) {
  const int total = g.total_vertices();
  std::vector<int> parent(static_cast<std::size_t>(total));
  std::vector<char> blocked(static_cast<std::size_t>(total));
  for (Vertex w : g.vertices()) {
    auto nb = g.neighbors(w);
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        Vertex u{opposite(w.side), nb[a]};
        Vertex v{opposite(w.side), nb[b]};
        std::fill(blocked.begin(), blocked.end(), 0);
        blocked[flat_id(g, w)] = 1;
        for (int t : nb) blocked[flat_id(g, Vertex{opposite(w.side), t})] = 1;
        blocked[flat_id(g, u)] = 0;
        blocked[flat_id(g, v)] = 0;
        std::fill(parent.begin(), parent.end(), -2);
        std::queue<int> q;
        parent[flat_id(g, u)] = -1;
        q.push(flat_id(g, u));
        int hit = -1;
        while (!q.empty() && hit < 0) {
          int cur = q.front();
          q.pop();
          for (int t : g.neighbors(unflat(g, cur))) {
            int tid = flat_id(g, Vertex{opposite(unflat(g, cur).side), t});
            if (blocked[tid] || parent[tid] != -2) continue;
            parent[tid] = cur;
            if (tid == flat_id(g, v)) {
              hit = tid;
              break;
            }
            q.push(tid);
          }
        }
        if (hit < 0) continue;
        std::vector<Vertex> path;
        for (int cur = hit; cur != -1; cur = parent[cur]) path.push_back(unflat(g, cur));
        if (path.size() >= 5) {  // length >= 4
          path.push_back(w);
          if (is_chordless_cycle(g, path)) return ForbiddenSubgraph{ForbiddenSubgraph::Kind::hole, path};
        }
      }
  }
  return std::nullopt;
}

// Exhaustive search over induced paths: every chordless cycle is found from
// its minimum vertex. Returns the first hole encountered.
inline std::optional<ForbiddenSubgraph> hole_exhaustive(const BipartiteGraph& g) {
  const int total = g.total_vertices();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(total));
  for (Vertex v : g.vertices())
    for (int nb : g.neighbors(v))
      adj[flat_id(g, v)].push_back(flat_id(g, Vertex{opposite(v.side), nb}));

  std::vector<int> path;
  std::vector<int> ban_count(static_cast<std::size_t>(total), 0);  // bans from interior neighborhoods
  std::vector<char> on_path(static_cast<std::size_t>(total), 0);
  std::optional<ForbiddenSubgraph> found;

  auto to_certificate = [&](int closing) {
    std::vector<Vertex> cyc;
    for (int id : path) cyc.push_back(unflat(g, id));
    cyc.push_back(unflat(g, closing));
    return ForbiddenSubgraph{ForbiddenSubgraph::Kind::hole, cyc};
  };

  // path = s, v1, ..., tail; candidates must avoid neighborhoods of
  // v1..tail-1 and may touch s only to close a cycle.
  auto dfs = [&](auto&& self, int s) -> void {
    if (found) return;
    int tail = path.back();
    for (int w : adj[tail]) {
      if (found) return;
      if (w <= s || on_path[w] || ban_count[w] > 0) continue;
      bool closes = std::binary_search(adj[s].begin(), adj[s].end(), w);
      if (closes) {
        if (path.size() >= 5) {
          path.push_back(w);
          std::vector<Vertex> cyc;
          for (int id : path) cyc.push_back(unflat(g, id));
          path.pop_back();
          if (is_chordless_cycle(g, cyc)) {
            found = ForbiddenSubgraph{ForbiddenSubgraph::Kind::hole, cyc};
            return;
          }
        }
        continue;  // short closure; w cannot extend an induced path past s
      }
      // extend: previous tail becomes interior, its other neighbors are banned
      for (int t : adj[tail])
        if (t != w) ++ban_count[t];
      on_path[w] = 1;
      path.push_back(w);
      self(self, s);
      path.pop_back();
      on_path[w] = 0;
      for (int t : adj[tail])
        if (t != w) --ban_count[t];
    }
  };
  (void)to_certificate;

  for (int s = 0; s < total && !found; ++s) {
    std::sort(adj[s].begin(), adj[s].end());
    for (int first : adj[s]) {
      if (first <= s || found) continue;
      path = {s, first};
      std::fill(ban_count.begin(), ban_count.end(), 0);
      std::fill(on_path.begin(), on_path.end(), 0);
      on_path[s] = 1;
      on_path[first] = 1;
      dfs(dfs, s);
    }
  }
  return found;
}

}  // namespace detail

/// Finds an induced domino by scanning X-triples against Y-triples.
inline std::optional<ForbiddenSubgraph> find_induced_domino(const BipartiteGraph& g) {
  const int nx = g.n(Side::X), ny = g.n(Side::Y);
  if (nx < 3 || ny < 3) return std::nullopt;
  std::vector<int> xs, ys;
  for (int i = 0; i < nx; ++i)
    if (g.degree(x_vertex(i)) >= 2) xs.push_back(i);
  for (int j = 0; j < ny; ++j)
    if (g.degree(y_vertex(j)) >= 2) ys.push_back(j);
  const int wy = (ny + 63) / 64;
  auto rows = detail::row_bits(g, Side::X, wy);
  auto bit = [&](int x, int y) { return (rows[static_cast<std::size_t>(x) * wy + y / 64] >> (y % 64)) & 1; };
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = a + 1; b < xs.size(); ++b)
      for (std::size_t c = b + 1; c < xs.size(); ++c) {
        const int x0 = xs[a], x1 = xs[b], x2 = xs[c];
        for (std::size_t p = 0; p < ys.size(); ++p)
          for (std::size_t q = p + 1; q < ys.size(); ++q)
            for (std::size_t r = q + 1; r < ys.size(); ++r) {
              int ones = 0, zr = 0, zc = 0;
              const int yy[3] = {ys[p], ys[q], ys[r]};
              const int xx[3] = {x0, x1, x2};
              for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                  if (bit(xx[i], yy[j])) {
                    ++ones;
                  } else {
                    zr |= 1 << i;
                    zc |= 1 << j;
                  }
                }
              if (ones == 7 && std::popcount(static_cast<unsigned>(zr)) == 2 &&
                  std::popcount(static_cast<unsigned>(zc)) == 2) {
                return ForbiddenSubgraph{
                    ForbiddenSubgraph::Kind::domino,
                    {x_vertex(x0), x_vertex(x1), x_vertex(x2), y_vertex(yy[0]), y_vertex(yy[1]),
                     y_vertex(yy[2])}};
              }
            }
      }
  return std::nullopt;
}

/// Finds an induced chordless cycle of length >= 6, if one exists.
inline std::optional<ForbiddenSubgraph> find_hole(const BipartiteGraph& g) {
  if (auto quick = detail::hole_bfs_probe(g)) return quick;
  return detail::hole_exhaustive(g);
}

/// Certificate search behind the recognizer: an induced domino or a hole.
/// Intended for desk-scale inputs.
inline std::optional<ForbiddenSubgraph> find_forbidden(const BipartiteGraph& g) {
  if (auto d = find_induced_domino(g)) return d;
  return find_hole(g);
}

}  // namespace bdh
