#include "doctest.h"

#include "bdh/generator.hpp"
#include "bdh/pruning.hpp"
#include "test_util.hpp"

using namespace bdh;

TEST_SUITE_BEGIN("pruning");

TEST_CASE("single vertex") {
  BipartiteGraph g(1, 0);
  auto seq = pruning_sequence(g);
  REQUIRE(seq.has_value());
  CHECK(seq->steps.size() == 1);
  CHECK(seq->steps[0].kind == PruningStep::Kind::initial);
}

TEST_CASE("four-vertex path replays to itself") {
  auto g = testutil::p4();
  auto seq = pruning_sequence(g);
  REQUIRE(seq.has_value());
  CHECK(seq->steps.size() == 4);
  CHECK(replay(*seq) == g);
}

TEST_CASE("six-cycle has no elimination") {
  CHECK(!pruning_sequence(testutil::c6()).has_value());
}

TEST_CASE("verdicts carry certificates") {
  auto no = is_bdh(testutil::domino());
  CHECK(!no.yes());
  REQUIRE(no.certificate.has_value());
  CHECK(no.certificate->kind == ForbiddenSubgraph::Kind::domino);

  auto yes = is_bdh(testutil::k2());
  CHECK(yes.yes());
  REQUIRE(yes.sequence.has_value());
  CHECK(yes.sequence->steps.size() == 2);
  CHECK(yes.sequence->steps[1].kind == PruningStep::Kind::pendant);
}

TEST_CASE("disconnected input is rejected") {
  BipartiteGraph g(2, 2);
  g.add_edge(x_vertex(0), y_vertex(0));
  g.add_edge(x_vertex(1), y_vertex(1));
  CHECK_THROWS_AS(pruning_sequence(g), std::invalid_argument);
  CHECK_THROWS_AS(is_bdh(g), std::invalid_argument);
}

TEST_CASE("replay validates structure") {
  PruningSequence bad{1, 1, {{PruningStep::Kind::pendant, x_vertex(0), y_vertex(0)}}};
  CHECK_THROWS_AS(replay(bad), std::invalid_argument);
  PruningSequence twice{1, 1,
                        {{PruningStep::Kind::initial, x_vertex(0), {}},
                         {PruningStep::Kind::pendant, y_vertex(0), x_vertex(0)},
                         {PruningStep::Kind::pendant, y_vertex(0), x_vertex(0)}}};
  CHECK_THROWS_AS(replay(twice), std::invalid_argument);
  PruningSequence uncovered{2, 1,
                            {{PruningStep::Kind::initial, x_vertex(0), {}},
                             {PruningStep::Kind::pendant, y_vertex(0), x_vertex(0)}}};
  CHECK_THROWS_AS(replay(uncovered), std::invalid_argument);
}

TEST_CASE("soundness against forbidden subgraphs, exhaustive small") {
  for (int nx = 1; nx <= 4; ++nx)
    for (int ny = nx; nx + ny <= 8; ++ny)
      testutil::for_each_bipartite(nx, ny, [&](const std::vector<std::uint32_t>& rows) {
        if (!testutil::mask_filters(nx, ny, rows).connected) return;
        auto g = testutil::from_rows(nx, ny, rows);
        CHECK(pruning_sequence(g).has_value() == !find_forbidden(g).has_value());
      });
}

TEST_CASE("soundness on random mid-size graphs") {
  SplitMix64 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto g = testutil::random_bipartite(3 + rng.below(4), 3 + rng.below(5), 0.25 + 0.1 * (trial % 6), rng);
    if (!g.connected() || g.total_vertices() > 14) continue;
    ++checked;
    CHECK(pruning_sequence(g).has_value() == !find_forbidden(g).has_value());
  }
  CHECK(checked > 100);
}

TEST_CASE("replay identity on generated instances") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto inst = generate_bdh(2 + static_cast<int>(seed % 39), seed, 0.1 * (seed % 11));
    CHECK(replay(inst.sequence) == inst.graph);
    auto rec = pruning_sequence(inst.graph);
    REQUIRE(rec.has_value());
    CHECK(replay(*rec) == inst.graph);
  }
}

TEST_CASE("generator basics") {
  auto one = generate_bdh(1, 3, 0.5);
  CHECK(one.graph.total_vertices() == 1);
  CHECK(one.sequence.steps.size() == 1);

  // the second step is forced to a pendant, whatever the bias
  auto two = generate_bdh(2, 3, 0.0);
  CHECK(two.graph.edge_count() == 1);
  CHECK(two.graph.connected());

  CHECK_THROWS_AS(generate_bdh(0, 1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(generate_bdh(5, 1, 1.5), std::invalid_argument);
}

TEST_CASE("generator is deterministic in its inputs") {
  auto a = generate_bdh(25, 77, 0.4);
  auto b = generate_bdh(25, 77, 0.4);
  CHECK(a.graph == b.graph);
  CHECK(a.sequence.serialize() == b.sequence.serialize());
  auto c = generate_bdh(25, 78, 0.4);
  CHECK(!(a.graph == c.graph));
}

TEST_CASE("generated instances are connected BDH graphs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int n = 1 + static_cast<int>((seed * 13) % 50);
    auto inst = generate_bdh(n, seed, 0.05 * (seed % 21));
    CHECK(inst.graph.total_vertices() == n);
    CHECK(inst.graph.connected());
    CHECK(is_bdh(inst.graph).yes());
  }
}

TEST_CASE("no-universal generation") {
  CHECK_THROWS_AS(generate_bdh(5, 1, 0.5, true), std::invalid_argument);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    int n = 6 + static_cast<int>((seed * 7) % 35);
    auto inst = generate_bdh(n, seed, 0.1 * (seed % 10), true);
    CHECK(inst.graph.universal_vertices().empty());
    CHECK(inst.graph.connected());
    CHECK(pruning_sequence(inst.graph).has_value());
  }
}

TEST_CASE("sequence serialization round-trips") {
  auto inst = generate_bdh(17, 5, 0.6);
  auto text = inst.sequence.serialize();
  auto back = PruningSequence::parse(text);
  CHECK(back.serialize() == text);
  CHECK(replay(back) == inst.graph);
  CHECK_THROWS_AS(PruningSequence::parse("I zz\n"), ParseError);
  CHECK_THROWS_AS(PruningSequence::parse("P x1\n"), ParseError);
  CHECK_THROWS_AS(PruningSequence::parse("Q x1 y1\n"), ParseError);
}

TEST_SUITE_END();
