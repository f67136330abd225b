#pragma once

#include <set>

#include "bdh/lattice.hpp"

namespace bdh {

/// Family of subsets of a ground set 0..ground-1; member order is stable and
/// repeats are allowed.
struct Hypergraph {
  int ground = 0;
  std::vector<std::vector<int>> members;  // each sorted ascending

  /// `p hyp |V| k` header, then one member per line: `m v1 v2 ...` (1-based).
  static Hypergraph parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int declared = 0;
    Hypergraph h;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::istringstream ls(line);
      std::string tag;
      if (!(ls >> tag)) continue;
      if (tag == "c") continue;
      if (tag == "p") {
        std::string kind;
        if (have_header || !(ls >> kind >> h.ground >> declared) || kind != "hyp" || h.ground < 0 ||
            declared < 0)
          throw ParseError(line_no, "malformed header, expected `p hyp |V| k`");
        have_header = true;
      } else if (tag == "m") {
        if (!have_header) throw ParseError(line_no, "member before header");
        std::vector<int> member;
        int v;
        while (ls >> v) {
          if (v < 1 || v > h.ground) throw ParseError(line_no, "member vertex out of range");
          member.push_back(v - 1);
        }
        std::sort(member.begin(), member.end());
        if (std::adjacent_find(member.begin(), member.end()) != member.end())
          throw ParseError(line_no, "repeated vertex in member");
        h.members.push_back(std::move(member));
      } else {
        throw ParseError(line_no, "unrecognized line tag `" + tag + "`");
      }
    }
    if (!have_header) throw ParseError(line_no, "missing header");
    if (static_cast<int>(h.members.size()) != declared)
      throw ParseError(line_no, "member count does not match header");
    return h;
  }

  std::string format() const {
    std::ostringstream out;
    out << "p hyp " << ground << " " << members.size() << "\n";
    for (const auto& m : members) {
      out << "m";
      for (int v : m) out << " " << v + 1;
      out << "\n";
    }
    return out.str();
  }
};

/// Plain undirected graph on 0..n-1 with sorted adjacency.
struct SimpleGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;

  explicit SimpleGraph(int nodes = 0) : n(nodes), adj(nodes) {}
  void add_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("bad edge");
    auto& au = adj[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return;
    au.insert(it, v);
    auto& av = adj[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  }
  bool adjacent(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
  }
  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;
};

/// Vertex-member incidence: ground on the X class, members on the Y class.
inline BipartiteGraph incidence_graph(const Hypergraph& h) {
  BipartiteGraph g(h.ground, static_cast<int>(h.members.size()));
  for (int m = 0; m < static_cast<int>(h.members.size()); ++m)
    for (int v : h.members[m]) g.add_edge(x_vertex(v), y_vertex(m));
  return g;
}

/// Two ground vertices are adjacent iff some member contains both.
inline SimpleGraph two_section(const Hypergraph& h) {
  SimpleGraph g(h.ground);
  for (const auto& m : h.members)
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) g.add_edge(m[i], m[j]);
  return g;
}

struct ClosureResult {
  Hypergraph closed;   // all nonempty intersections of members, plus the members
  Hypergraph clutter;  // inclusionwise maximal distinct members
};

/// Intersection closure (empty sets dropped) and the maximal-member clutter.
inline ClosureResult closure_and_maximal(const Hypergraph& h) {
  std::set<std::vector<int>> family;
  for (const auto& m : h.members)
    if (!m.empty()) family.insert(m);
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
  ClosureResult out;
  out.closed.ground = h.ground;
  out.closed.members.assign(family.begin(), family.end());
  out.clutter.ground = h.ground;
  std::vector<std::vector<int>> distinct;
  for (const auto& m : h.members) {
    if (m.empty()) continue;
    if (std::find(distinct.begin(), distinct.end(), m) == distinct.end()) distinct.push_back(m);
  }
  for (const auto& m : distinct) {
    bool maximal = true;
    for (const auto& other : distinct)
      if (other != m && is_subset(m, other)) {
        maximal = false;
        break;
      }
    if (maximal) out.clutter.members.push_back(m);
  }
  std::sort(out.clutter.members.begin(), out.clutter.members.end());
  return out;
}

enum class Acyclicity { gamma_acyclic, totally_balanced_only, neither };

/// Witness for a failed pattern check: the member rows and ground columns of
/// a cyclic incidence pattern, or of a 3x3 crossing pattern.
struct AcyclicityWitness {
  enum class Kind { cyclic_pattern, crossing_pattern };
  Kind kind;
  std::vector<int> member_rows;
  std::vector<int> ground_cols;
};

struct AcyclicityReport {
  Acyclicity verdict;
  std::optional<AcyclicityWitness> witness;
};

/// Matrix-pattern classification through the incidence graph: a hole in the
/// incidence graph is a cyclic submatrix (not totally balanced), an induced
/// domino is the 3x3 crossing pattern (balanced but not gamma-acyclic).
inline AcyclicityReport classify_acyclicity(const Hypergraph& h) {
  if (h.ground > 30 || static_cast<int>(h.members.size()) > 30)
    throw std::invalid_argument("classify_acyclicity: desk-scale size limit exceeded");
  BipartiteGraph inc = incidence_graph(h);
  if (auto hole = find_hole(inc)) {
    AcyclicityWitness w{AcyclicityWitness::Kind::cyclic_pattern, {}, {}};
    for (Vertex v : hole->vertices)
      (v.side == Side::Y ? w.member_rows : w.ground_cols).push_back(v.index);
    return {Acyclicity::neither, w};
  }
  if (auto dom = find_induced_domino(inc)) {
    AcyclicityWitness w{AcyclicityWitness::Kind::crossing_pattern, {}, {}};
    for (Vertex v : dom->vertices)
      (v.side == Side::Y ? w.member_rows : w.ground_cols).push_back(v.index);
    return {Acyclicity::totally_balanced_only, w};
  }
  return {Acyclicity::gamma_acyclic, std::nullopt};
}

struct BachmanDiagram {
  std::vector<std::vector<int>> nodes;  // intersection closure, canonical order
  std::vector<std::pair<int, int>> arcs;
  bool is_tree = false;
  bool is_forest = false;
};

/// Transitive reduction of the intersection closure under inclusion.
inline BachmanDiagram bachman(const Hypergraph& h) {
  if (h.ground > 30 || static_cast<int>(h.members.size()) > 30)
    throw std::invalid_argument("bachman: desk-scale size limit exceeded");
  BachmanDiagram d;
  d.nodes = closure_and_maximal(h).closed.members;
  const int k = static_cast<int>(d.nodes.size());
  LessMatrix less(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && d.nodes[i] != d.nodes[j] && is_subset(d.nodes[i], d.nodes[j])) less[i][j] = true;
  d.arcs = transitive_reduction_arcs(less);
  d.is_forest = underlying_is_forest(k, d.arcs);
  d.is_tree = underlying_is_tree(k, d.arcs);
  return d;
}

/// All maximal cliques by branch and bound with pivoting; desk scale.
inline Hypergraph maximal_cliques(const SimpleGraph& g) {
  if (g.n > 32) throw std::invalid_argument("maximal_cliques: desk-scale size limit exceeded");
  Hypergraph out;
  out.ground = g.n;
  std::vector<std::uint64_t> nb(g.n, 0);
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adj[v]) nb[v] |= 1ull << u;
  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> expand =
      [&](std::uint64_t r, std::uint64_t p, std::uint64_t x) {
        if (p == 0 && x == 0) {
          std::vector<int> clique;
          for (int v = 0; v < g.n; ++v)
            if (r & (1ull << v)) clique.push_back(v);
          out.members.push_back(std::move(clique));
          return;
        }
        std::uint64_t px = p | x;
        int pivot = std::countr_zero(px);
        int best = -1;
        for (int v = 0; v < g.n; ++v)
          if (px & (1ull << v)) {
            int gain = std::popcount(p & nb[v]);
            if (gain > best) best = gain, pivot = v;
          }
        std::uint64_t cand = p & ~nb[pivot];
        while (cand) {
          int v = std::countr_zero(cand);
          cand &= cand - 1;
          expand(r | (1ull << v), p & nb[v], x & nb[v]);
          p &= ~(1ull << v);
          x |= 1ull << v;
        }
      };
  if (g.n > 0) expand(0, (g.n == 64 ? ~0ull : (1ull << g.n) - 1), 0);
  std::sort(out.members.begin(), out.members.end());
  return out;
}

inline bool is_laminar(std::span<const std::vector<int>> sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (set_intersect(sets[i], sets[j]).empty()) continue;
      if (!is_subset(sets[i], sets[j]) && !is_subset(sets[j], sets[i])) return false;
    }
  return true;
}

/// Exact desk-scale chordality test: for a 2-path u-w-v with u,v nonadjacent,
/// any u..v connection avoiding N[w] closes a chordless cycle of length >= 4,
/// and every such cycle is caught this way.
inline bool is_chordal(const SimpleGraph& g) {
  std::vector<char> blocked(g.n);
  std::vector<char> seen(g.n);
  for (int w = 0; w < g.n; ++w)
    for (std::size_t a = 0; a < g.adj[w].size(); ++a)
      for (std::size_t b = a + 1; b < g.adj[w].size(); ++b) {
        int u = g.adj[w][a], v = g.adj[w][b];
        if (g.adjacent(u, v)) continue;
        std::fill(blocked.begin(), blocked.end(), 0);
        blocked[w] = 1;
        for (int t : g.adj[w]) blocked[t] = 1;
        blocked[u] = 0;
        blocked[v] = 0;
        std::fill(seen.begin(), seen.end(), 0);
        std::vector<int> stack{u};
        seen[u] = 1;
        while (!stack.empty()) {
          int cur = stack.back();
          stack.pop_back();
          for (int t : g.adj[cur]) {
            if (blocked[t] || seen[t]) continue;
            if (t == v) return false;
            seen[t] = 1;
            stack.push_back(t);
          }
        }
      }
  return true;
}

/// Nonempty intersections of two or more distinct maximal cliques. The clique
/// family is a clutter, so these are exactly the closure elements that are not
/// cliques themselves.
inline std::vector<std::vector<int>> clique_intersections(const Hypergraph& cliques) {
  std::set<std::vector<int>> members(cliques.members.begin(), cliques.members.end());
  std::vector<std::vector<int>> out;
  for (auto& s : closure_and_maximal(cliques).closed.members)
    if (!members.count(s)) out.push_back(std::move(s));
  return out;
}

/// Chordal distance-hereditary test, computed two independent ways which must
/// agree: gamma-acyclicity of the clique hypergraph, and chordality plus
/// laminarity of the pairwise clique intersections.
inline bool is_ptolemaic(const SimpleGraph& g) {
  Hypergraph cliques = maximal_cliques(g);
  bool gamma = classify_acyclicity(cliques).verdict == Acyclicity::gamma_acyclic;
  bool laminar = is_chordal(g) && is_laminar(clique_intersections(cliques));
  if (gamma != laminar)
    throw std::logic_error("is_ptolemaic: gamma-acyclicity and laminarity disagree");
  return gamma;
}

/// Vertex-clique incidence graph of a Ptolemaic graph (a BDH graph).
inline BipartiteGraph lambda_map(const SimpleGraph& g) {
  if (!is_ptolemaic(g)) throw std::invalid_argument("lambda_map: input must be Ptolemaic");
  return incidence_graph(maximal_cliques(g));
}

/// Neighborhood hypergraph: members are the neighborhoods of `member_side`
/// vertices over the opposite class as ground.
inline Hypergraph neighborhood_hypergraph(const BipartiteGraph& g, Side member_side) {
  Hypergraph h;
  h.ground = g.n(opposite(member_side));
  for (int i = 0; i < g.n(member_side); ++i) {
    auto nb = g.neighbors({member_side, i});
    h.members.emplace_back(nb.begin(), nb.end());
  }
  return h;
}

/// Vertices whose neighborhood is neither maximal among the distinct
/// neighborhoods nor the intersection of two or more other distinct
/// neighborhoods. Deleting them is what the lattice embedding quotients out.
inline std::vector<int> irreducible_deletion_set(const BipartiteGraph& g, Side s) {
  std::set<std::vector<int>> distinct;
  for (int i = 0; i < g.n(s); ++i) {
    auto nb = g.neighbors({s, i});
    distinct.insert(std::vector<int>(nb.begin(), nb.end()));
  }
  std::vector<int> out;
  for (int i = 0; i < g.n(s); ++i) {
    auto nbs = g.neighbors({s, i});
    std::vector<int> mine(nbs.begin(), nbs.end());
    std::vector<const std::vector<int>*> strict_supersets;
    for (const auto& d : distinct)
      if (d != mine && is_subset(mine, d)) strict_supersets.push_back(&d);
    if (strict_supersets.empty()) continue;  // maximal
    if (strict_supersets.size() >= 2) {
      std::vector<int> meet = *strict_supersets[0];
      for (std::size_t t = 1; t < strict_supersets.size(); ++t)
        meet = set_intersect(meet, *strict_supersets[t]);
      if (meet == mine) continue;  // expressible as an intersection of others
    }
    out.push_back(i);
  }
  return out;
}

struct MuResult {
  SimpleGraph mu1;           // 2-section of the Y-side neighborhood hypergraph
  SimpleGraph mu2;           // 2-section of the X-side neighborhood hypergraph
  std::vector<int> i_x;
  std::vector<int> i_y;
};

/// The two Ptolemaic images of a connected BDH graph plus the deletion sets.
inline MuResult mu_maps(const BipartiteGraph& g) {
  if (!g.connected() || !pruning_sequence(g))
    throw std::invalid_argument("mu_maps: input must be a connected BDH graph");
  MuResult out{two_section(neighborhood_hypergraph(g, Side::X)),
               two_section(neighborhood_hypergraph(g, Side::Y)),
               irreducible_deletion_set(g, Side::X), irreducible_deletion_set(g, Side::Y)};
  if (!is_ptolemaic(out.mu1) || !is_ptolemaic(out.mu2))
    throw std::logic_error("mu_maps: image is not Ptolemaic");
  return out;
}

/// Clique lattice element family: the intersection closure of the maximal
/// cliques together with the empty set and the full vertex set.
struct CliqueLattice {
  std::vector<std::vector<int>> elements;  // sorted canonically, includes {} and V
};

inline CliqueLattice clique_lattice(const SimpleGraph& g) {
  CliqueLattice lat;
  std::set<std::vector<int>> family;
  for (auto& m : closure_and_maximal(maximal_cliques(g)).closed.members) family.insert(m);
  family.insert(std::vector<int>{});
  std::vector<int> full(g.n);
  for (int i = 0; i < g.n; ++i) full[i] = i;
  family.insert(full);
  lat.elements.assign(family.begin(), family.end());
  return lat;
}

/// Concrete shore-family identities behind the lattice correspondences:
///  - the x-shore family of the vertex-clique graph of each Ptolemaic image
///    equals that image's clique closure, and
///  - the y-shore family (x-shore family for the mirrored image) of the full
///    lattice after deleting the irreducible set equals the image's clique
///    lattice element family.
inline bool check_bridge(const BipartiteGraph& g) {
  MuResult mu = mu_maps(g);

  auto shore_family_equal = [](std::vector<std::vector<int>> a, std::vector<std::vector<int>> b) {
    std::set<std::vector<int>> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    return sa == sb;
  };

  for (int pass = 0; pass < 2; ++pass) {
    const SimpleGraph& image = pass == 0 ? mu.mu1 : mu.mu2;
    Side deleted_side = pass == 0 ? Side::X : Side::Y;
    const std::vector<int>& del = pass == 0 ? mu.i_x : mu.i_y;

    // vertex-clique graph shores vs clique closure
    Hypergraph cliques = maximal_cliques(image);
    BipartiteGraph lam = incidence_graph(cliques);
    std::vector<std::vector<int>> x_shores;
    for (const auto& b : oracle::brute_maximal_bicliques(lam)) x_shores.push_back(b.x_shore);
    if (!shore_family_equal(x_shores, closure_and_maximal(cliques).closed.members)) return false;

    // shores of the reduced graph's full lattice vs clique lattice elements
    std::vector<Vertex> keep;
    for (Vertex v : g.vertices()) {
      if (v.side != deleted_side || !std::binary_search(del.begin(), del.end(), v.index))
        keep.push_back(v);
    }
    auto sub = induced_subgraph(g, keep);
    Side shore_side = opposite(deleted_side);
    std::vector<std::vector<int>> shores;
    for (const auto& b : oracle::brute_maximal_bicliques(sub.graph)) {
      const auto& shore = shore_side == Side::X ? b.x_shore : b.y_shore;
      std::vector<int> original;
      for (int idx : shore) original.push_back(sub.old_index[side_index(shore_side)][idx]);
      shores.push_back(original);
    }
    shores.push_back({});  // shore of one bound
    std::vector<int> full(g.n(shore_side));
    for (int i = 0; i < g.n(shore_side); ++i) full[i] = i;
    shores.push_back(full);  // shore of the other bound
    if (!shore_family_equal(shores, clique_lattice(image).elements)) return false;
  }
  return true;
}

}  // namespace bdh
