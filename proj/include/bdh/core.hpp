#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bdh {

enum class Side : std::uint8_t { X = 0, Y = 1 };

constexpr Side opposite(Side s) { return s == Side::X ? Side::Y : Side::X; }
constexpr int side_index(Side s) { return static_cast<int>(s); }

/// A vertex is addressed by its color class and a dense per-class index.
struct Vertex {
  Side side{Side::X};
  int index{0};
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

constexpr Vertex x_vertex(int i) { return {Side::X, i}; }
constexpr Vertex y_vertex(int i) { return {Side::Y, i}; }

/// Printable label, 1-based: x1, x2, ..., y1, y2, ...
inline std::string to_string(Vertex v) {
  return (v.side == Side::X ? std::string("x") : std::string("y")) + std::to_string(v.index + 1);
}

inline std::optional<Vertex> vertex_from_label(std::string_view s) {
  if (s.size() < 2 || (s[0] != 'x' && s[0] != 'y')) return std::nullopt;
  int idx = 0;
  for (char c : s.substr(1)) {
    if (c < '0' || c > '9') return std::nullopt;
    idx = idx * 10 + (c - '0');
  }
  if (idx < 1) return std::nullopt;
  return Vertex{s[0] == 'x' ? Side::X : Side::Y, idx - 1};
}

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + message), line(line_no) {}
};

/// Deterministic, platform-independent RNG; all randomness in the library
/// flows through explicit seeds.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

// Sorted-vector set helpers shared across the library.
inline std::vector<int> set_intersect(std::span<const int> a, std::span<const int> b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool is_subset(std::span<const int> a, std::span<const int> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Bipartite graph over two color classes with sorted adjacency lists.
/// Values are immutable by convention once fully built; operations that
/// change a graph return a new value.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int nx, int ny) {
    adj_[0].resize(static_cast<std::size_t>(nx));
    adj_[1].resize(static_cast<std::size_t>(ny));
  }

  int n(Side s) const { return static_cast<int>(adj_[side_index(s)].size()); }
  int total_vertices() const { return n(Side::X) + n(Side::Y); }
  int edge_count() const { return edges_; }

  bool has(Vertex v) const { return v.index >= 0 && v.index < n(v.side); }

  Vertex add_vertex(Side s) {
    adj_[side_index(s)].emplace_back();
    return {s, n(s) - 1};
  }

  void add_edge(Vertex u, Vertex v) {
    if (u.side == v.side) throw std::invalid_argument("add_edge: endpoints in the same class");
    if (!has(u) || !has(v)) throw std::invalid_argument("add_edge: unknown vertex");
    if (u.side == Side::Y) std::swap(u, v);
    auto& xu = adj_[0][u.index];
    auto it = std::lower_bound(xu.begin(), xu.end(), v.index);
    if (it != xu.end() && *it == v.index) throw std::invalid_argument("add_edge: duplicate edge");
    xu.insert(it, v.index);
    auto& yv = adj_[1][v.index];
    yv.insert(std::lower_bound(yv.begin(), yv.end(), u.index), u.index);
    ++edges_;
  }

  bool adjacent(Vertex u, Vertex v) const {
    if (u.side == v.side) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v.index);
  }

  /// Neighbor indices in the opposite class, sorted ascending.
  std::span<const int> neighbors(Vertex v) const {
    check(v);
    return adj_[side_index(v.side)][v.index];
  }

  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(total_vertices()));
    for (int i = 0; i < n(Side::X); ++i) out.push_back(x_vertex(i));
    for (int j = 0; j < n(Side::Y); ++j) out.push_back(y_vertex(j));
    return out;
  }

  /// BFS distance; empty when u and v are in different components.
  std::optional<int> distance(Vertex u, Vertex v) const {
    check(u);
    check(v);
    if (u == v) return 0;
    std::vector<int> dist(static_cast<std::size_t>(total_vertices()), -1);
    std::queue<Vertex> q;
    dist[flat(u)] = 0;
    q.push(u);
    while (!q.empty()) {
      Vertex w = q.front();
      q.pop();
      for (int nb : neighbors(w)) {
        Vertex t{opposite(w.side), nb};
        if (dist[flat(t)] >= 0) continue;
        dist[flat(t)] = dist[flat(w)] + 1;
        if (t == v) return dist[flat(t)];
        q.push(t);
      }
    }
    return std::nullopt;
  }

  /// Vertices adjacent to the entire opposite class.
  std::vector<Vertex> universal_vertices() const {
    std::vector<Vertex> out;
    for (Side s : {Side::X, Side::Y}) {
      for (int i = 0; i < n(s); ++i)
        if (degree({s, i}) == n(opposite(s))) out.push_back({s, i});
    }
    return out;
  }

  bool connected() const {
    if (total_vertices() <= 1) return true;
    auto comp = components();
    return comp.size() == 1;
  }

  std::vector<std::vector<Vertex>> components() const {
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(static_cast<std::size_t>(total_vertices()), false);
    for (Vertex s : vertices()) {
      if (seen[flat(s)]) continue;
      std::vector<Vertex> comp;
      std::queue<Vertex> q;
      seen[flat(s)] = true;
      q.push(s);
      while (!q.empty()) {
        Vertex w = q.front();
        q.pop();
        comp.push_back(w);
        for (int nb : neighbors(w)) {
          Vertex t{opposite(w.side), nb};
          if (!seen[flat(t)]) {
            seen[flat(t)] = true;
            q.push(t);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  bool operator==(const BipartiteGraph& other) const { return adj_ == other.adj_; }

  /// Line-oriented format: header `p bip |X| |Y| |E|`, edges `e i j` with
  /// 1-based per-class indices, comments starting with `c`.
  static BipartiteGraph parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int declared_edges = 0;
    int seen_edges = 0;
    BipartiteGraph g;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::istringstream ls(line);
      std::string tag;
      if (!(ls >> tag)) continue;
      if (tag == "c") continue;
      if (tag == "p") {
        if (have_header) throw ParseError(line_no, "duplicate header");
        std::string kind;
        int nx = -1, ny = -1, m = -1;
        if (!(ls >> kind >> nx >> ny >> m) || kind != "bip" || nx < 0 || ny < 0 || m < 0 || !at_end(ls))
          throw ParseError(line_no, "malformed header, expected `p bip |X| |Y| |E|`");
        g = BipartiteGraph(nx, ny);
        declared_edges = m;
        have_header = true;
      } else if (tag == "e") {
        if (!have_header) throw ParseError(line_no, "edge before header");
        int i = 0, j = 0;
        if (!(ls >> i >> j) || !at_end(ls)) throw ParseError(line_no, "malformed edge line");
        if (i < 1 || i > g.n(Side::X) || j < 1 || j > g.n(Side::Y))
          throw ParseError(line_no, "edge index out of range");
        if (g.adjacent(x_vertex(i - 1), y_vertex(j - 1)))
          throw ParseError(line_no, "duplicate edge e " + std::to_string(i) + " " + std::to_string(j));
        g.add_edge(x_vertex(i - 1), y_vertex(j - 1));
        ++seen_edges;
      } else {
        throw ParseError(line_no, "unrecognized line tag `" + tag + "`");
      }
    }
    if (!have_header) throw ParseError(line_no, "missing header");
    if (seen_edges != declared_edges) throw ParseError(line_no, "edge count does not match header");
    return g;
  }

  std::string format() const {
    std::ostringstream out;
    out << "p bip " << n(Side::X) << " " << n(Side::Y) << " " << edge_count() << "\n";
    for (int i = 0; i < n(Side::X); ++i)
      for (int j : neighbors(x_vertex(i))) out << "e " << i + 1 << " " << j + 1 << "\n";
    return out.str();
  }

 private:
  static bool at_end(std::istringstream& ls) {
    std::string rest;
    return !(ls >> rest);
  }

  void check(Vertex v) const {
    if (!has(v)) throw std::invalid_argument("unknown vertex " + to_string(v));
  }

  int flat(Vertex v) const { return v.side == Side::X ? v.index : n(Side::X) + v.index; }

  std::array<std::vector<std::vector<int>>, 2> adj_;
  int edges_ = 0;
};

/// Same-class extension: adds a fresh vertex adjacent to N(v) ∩ N(v2).
/// For a cross-class pair the graph is returned unchanged.
inline BipartiteGraph star_extend(const BipartiteGraph& g, Vertex v, Vertex v2) {
  if (!g.has(v) || !g.has(v2)) throw std::invalid_argument("star_extend: unknown vertex");
  BipartiteGraph out = g;
  if (v.side != v2.side) return out;
  std::vector<int> common = set_intersect(g.neighbors(v), g.neighbors(v2));
  Vertex fresh = out.add_vertex(v.side);
  for (int nb : common) out.add_edge(fresh, {opposite(v.side), nb});
  return out;
}

struct InducedSubgraph {
  BipartiteGraph graph;
  std::array<std::vector<int>, 2> old_index;  // new per-class index -> old index
};

inline InducedSubgraph induced_subgraph(const BipartiteGraph& g, std::span<const Vertex> keep) {
  InducedSubgraph out;
  std::array<std::vector<int>, 2> new_index{std::vector<int>(g.n(Side::X), -1),
                                            std::vector<int>(g.n(Side::Y), -1)};
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted) {
    if (!g.has(v)) throw std::invalid_argument("induced_subgraph: unknown vertex");
    new_index[side_index(v.side)][v.index] = static_cast<int>(out.old_index[side_index(v.side)].size());
    out.old_index[side_index(v.side)].push_back(v.index);
  }
  out.graph = BipartiteGraph(static_cast<int>(out.old_index[0].size()),
                             static_cast<int>(out.old_index[1].size()));
  for (int i = 0; i < g.n(Side::X); ++i) {
    if (new_index[0][i] < 0) continue;
    for (int j : g.neighbors(x_vertex(i)))
      if (new_index[1][j] >= 0) out.graph.add_edge(x_vertex(new_index[0][i]), y_vertex(new_index[1][j]));
  }
  return out;
}

inline BipartiteGraph delete_vertex(const BipartiteGraph& g, Vertex v) {
  std::vector<Vertex> keep;
  for (Vertex w : g.vertices())
    if (w != v) keep.push_back(w);
  return induced_subgraph(g, keep).graph;
}

}  // namespace bdh
