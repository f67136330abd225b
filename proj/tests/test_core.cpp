#include "doctest.h"

#include "bdh/core.hpp"
#include "bdh/forbidden.hpp"
#include "bdh/generator.hpp"
#include "test_util.hpp"

using namespace bdh;

TEST_SUITE_BEGIN("core");

TEST_CASE("parse single edge") {
  auto g = BipartiteGraph::parse("p bip 1 1 1\ne 1 1\n");
  CHECK(g.n(Side::X) == 1);
  CHECK(g.n(Side::Y) == 1);
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(x_vertex(0), y_vertex(0)));
}

TEST_CASE("parse domino file") {
  auto g = BipartiteGraph::parse(
      "c the 6-cycle with a chord between antipodal degree-3 vertices\n"
      "p bip 3 3 7\n"
      "e 1 1\ne 1 2\ne 2 1\ne 2 2\ne 2 3\ne 3 2\ne 3 3\n");
  CHECK(g == testutil::domino());
  std::vector<int> deg_x{g.degree(x_vertex(0)), g.degree(x_vertex(1)), g.degree(x_vertex(2))};
  std::vector<int> deg_y{g.degree(y_vertex(0)), g.degree(y_vertex(1)), g.degree(y_vertex(2))};
  CHECK(deg_x == std::vector<int>{2, 3, 2});
  CHECK(deg_y == std::vector<int>{2, 3, 2});
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(BipartiteGraph::parse("e 1 1\n"), ParseError);
  CHECK_THROWS_AS(BipartiteGraph::parse("p bip 1 1 2\ne 1 1\ne 1 1\n"), ParseError);
  CHECK_THROWS_AS(BipartiteGraph::parse("p bip 1 1 1\ne 1 2\n"), ParseError);
  CHECK_THROWS_AS(BipartiteGraph::parse("p bip 1 1 1\nx 1 1\n"), ParseError);
  CHECK_THROWS_AS(BipartiteGraph::parse("p bip 1 1 2\ne 1 1\n"), ParseError);
  try {
    BipartiteGraph::parse("p bip 2 2 3\ne 1 1\ne 1 bad\n");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("format round-trips") {
  auto g = testutil::domino();
  CHECK(BipartiteGraph::parse(g.format()) == g);
}

TEST_CASE("add_edge rejects same-class and duplicate edges") {
  BipartiteGraph g(2, 2);
  g.add_edge(x_vertex(0), y_vertex(0));
  CHECK_THROWS_AS(g.add_edge(x_vertex(0), x_vertex(1)), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(y_vertex(0), x_vertex(0)), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(x_vertex(0), y_vertex(5)), std::invalid_argument);
}

TEST_CASE("distance") {
  CHECK(testutil::k2().distance(x_vertex(0), y_vertex(0)) == 1);
  // on the 6-cycle a and b sit two steps apart
  CHECK(testutil::c6().distance(x_vertex(0), x_vertex(1)) == 2);
  BipartiteGraph two_edges(2, 2);
  two_edges.add_edge(x_vertex(0), y_vertex(0));
  two_edges.add_edge(x_vertex(1), y_vertex(1));
  CHECK(!two_edges.distance(x_vertex(0), y_vertex(1)).has_value());
  CHECK_THROWS_AS(testutil::k2().distance(x_vertex(0), y_vertex(7)), std::invalid_argument);
}

TEST_CASE("distance is symmetric and triangular per component") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = testutil::random_bipartite(4, 5, 0.4, rng);
    auto vs = g.vertices();
    for (auto u : vs)
      for (auto v : vs) {
        auto duv = g.distance(u, v);
        CHECK(duv == g.distance(v, u));
        for (auto w : vs) {
          auto duw = g.distance(u, w);
          auto dwv = g.distance(w, v);
          if (duw && dwv) {
            REQUIRE(duv.has_value());
            CHECK(*duv <= *duw + *dwv);
          }
        }
      }
  }
}

TEST_CASE("universal vertices") {
  auto both = testutil::k2().universal_vertices();
  CHECK(both == std::vector<Vertex>{x_vertex(0), y_vertex(0)});
  CHECK(testutil::domino().universal_vertices().empty());
  BipartiteGraph star(1, 3);
  for (int j = 0; j < 3; ++j) star.add_edge(x_vertex(0), y_vertex(j));
  CHECK(star.universal_vertices() == std::vector<Vertex>{x_vertex(0)});
}

TEST_CASE("star_extend") {
  auto g = testutil::p4();
  SUBCASE("cross-class pair leaves the graph unchanged") {
    CHECK(star_extend(g, x_vertex(0), y_vertex(1)) == g);
  }
  SUBCASE("same-class pair adds the common neighborhood") {
    auto ext = star_extend(g, x_vertex(0), x_vertex(1));
    CHECK(ext.n(Side::X) == 3);
    auto nb = ext.neighbors(x_vertex(2));
    CHECK(std::vector<int>(nb.begin(), nb.end()) == std::vector<int>{0});
  }
  SUBCASE("self pair adds a twin") {
    auto ext = star_extend(g, x_vertex(1), x_vertex(1));
    auto nb = ext.neighbors(x_vertex(2));
    auto orig = ext.neighbors(x_vertex(1));
    CHECK(std::vector<int>(nb.begin(), nb.end()) == std::vector<int>(orig.begin(), orig.end()));
  }
  SUBCASE("unknown vertex") {
    CHECK_THROWS_AS(star_extend(g, x_vertex(9), x_vertex(0)), std::invalid_argument);
  }
}

TEST_CASE("star_extend vertex count") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = testutil::random_bipartite(3, 4, 0.5, rng);
    auto vs = g.vertices();
    for (auto u : vs)
      for (auto v : vs) {
        auto ext = star_extend(g, u, v);
        int expected = g.total_vertices() + (u.side == v.side ? 1 : 0);
        CHECK(ext.total_vertices() == expected);
      }
  }
}

TEST_CASE("find_forbidden on the named graphs") {
  auto d = find_forbidden(testutil::domino());
  REQUIRE(d.has_value());
  CHECK(d->kind == ForbiddenSubgraph::Kind::domino);
  CHECK(d->vertices.size() == 6);
  CHECK(is_induced_domino(testutil::domino(), std::span(d->vertices).subspan(0, 3),
                          std::span(d->vertices).subspan(3, 3)));

  auto h = find_forbidden(testutil::c6());
  REQUIRE(h.has_value());
  CHECK(h->kind == ForbiddenSubgraph::Kind::hole);
  CHECK(h->vertices.size() == 6);
  CHECK(is_chordless_cycle(testutil::c6(), h->vertices));

  CHECK(!find_forbidden(testutil::p4()).has_value());
}

TEST_CASE("certificates are always valid") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = testutil::random_bipartite(4, 4, 0.35 + 0.1 * (trial % 5), rng);
    if (auto cert = find_forbidden(g)) {
      if (cert->kind == ForbiddenSubgraph::Kind::domino) {
        CHECK(is_induced_domino(g, std::span(cert->vertices).subspan(0, 3),
                                std::span(cert->vertices).subspan(3, 3)));
      } else {
        CHECK(is_chordless_cycle(g, cert->vertices));
      }
    }
  }
}

// reference scan used only here: try all vertex subsets and look for an
// induced domino or chordless cycle directly
namespace {
bool exhaustive_forbidden(const BipartiteGraph& g) {
  auto vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Vertex> sub;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(vs[i]);
    if (sub.size() < 6) continue;
    std::vector<Vertex> xs, ys;
    for (auto v : sub) (v.side == Side::X ? xs : ys).push_back(v);
    if (xs.size() == 3 && ys.size() == 3 && is_induced_domino(g, xs, ys)) return true;
    // chordless cycle = induced 2-regular connected subgraph
    bool two_regular = true;
    for (auto v : sub) {
      int deg = 0;
      for (auto w : sub) deg += g.adjacent(v, w);
      if (deg != 2) two_regular = false;
    }
    if (!two_regular) continue;
    auto ind = induced_subgraph(g, sub);
    if (ind.graph.connected()) return true;
  }
  return false;
}
}  // namespace

TEST_CASE("find_forbidden agrees with subset enumeration") {
  for (int nx = 1; nx <= 4; ++nx)
    for (int ny = nx; nx + ny <= 8; ++ny)
      testutil::for_each_bipartite(nx, ny, [&](const std::vector<std::uint32_t>& rows) {
        auto g = testutil::from_rows(nx, ny, rows);
        CHECK(find_forbidden(g).has_value() == exhaustive_forbidden(g));
      });
}

TEST_CASE("closure under same-class extension") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto inst = generate_bdh(10, seed, 0.5);
    auto vs = inst.graph.vertices();
    for (auto u : vs)
      for (auto v : vs) {
        if (u.side != v.side || v < u) continue;
        CHECK(!find_forbidden(star_extend(inst.graph, u, v)).has_value());
      }
  }
}

TEST_CASE("components and connectivity") {
  BipartiteGraph g(2, 2);
  g.add_edge(x_vertex(0), y_vertex(0));
  CHECK(!g.connected());
  CHECK(g.components().size() == 3);
  g.add_edge(x_vertex(1), y_vertex(0));
  g.add_edge(x_vertex(1), y_vertex(1));
  CHECK(g.connected());
}

TEST_CASE("induced subgraph keeps adjacency") {
  auto g = testutil::domino();
  std::vector<Vertex> keep{x_vertex(0), x_vertex(1), y_vertex(0), y_vertex(2)};
  auto sub = induced_subgraph(g, keep);
  CHECK(sub.graph.n(Side::X) == 2);
  CHECK(sub.graph.n(Side::Y) == 2);
  CHECK(sub.graph.edge_count() == 3);  // a-d, b-d, b-f
  CHECK(sub.old_index[0] == std::vector<int>{0, 1});
  CHECK(sub.old_index[1] == std::vector<int>{0, 2});
}

TEST_SUITE_END();
