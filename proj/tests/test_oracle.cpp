#include "doctest.h"

#include "bdh/oracle.hpp"
#include "test_util.hpp"

using namespace bdh;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("reference bicliques of the named graphs") {
  auto dom = oracle::brute_maximal_bicliques(testutil::domino());
  REQUIRE(dom.size() == 4);
  CHECK(dom[0] == Biclique{{0, 1}, {0, 1}});     // ab|de
  CHECK(dom[1] == Biclique{{0, 1, 2}, {1}});     // abc|e
  CHECK(dom[2] == Biclique{{1}, {0, 1, 2}});     // b|def
  CHECK(dom[3] == Biclique{{1, 2}, {1, 2}});     // bc|ef

  CHECK(oracle::brute_maximal_bicliques(testutil::c6()).size() == 6);
  auto k2 = oracle::brute_maximal_bicliques(testutil::k2());
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == Biclique{{0}, {0}});
}

TEST_CASE("reference bicliques form a polar antichain") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = testutil::random_bipartite(2 + rng.below(4), 2 + rng.below(4), 0.45, rng);
    auto list = oracle::brute_maximal_bicliques(g);
    for (std::size_t i = 0; i < list.size(); ++i) {
      CHECK(satisfies_polarity(g, list[i]));
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        bool dominated = is_subset(list[i].x_shore, list[j].x_shore) &&
                         is_subset(list[i].y_shore, list[j].y_shore);
        bool dominates = is_subset(list[j].x_shore, list[i].x_shore) &&
                         is_subset(list[j].y_shore, list[i].y_shore);
        CHECK(!dominated);
        CHECK(!dominates);
      }
    }
  }
}

TEST_CASE("brute_intersection") {
  auto p4 = testutil::p4();
  std::vector<Vertex> single{x_vertex(1)};
  auto nb = p4.neighbors(x_vertex(1));
  CHECK(oracle::brute_intersection(p4, single) == std::vector<int>(nb.begin(), nb.end()));
  std::vector<Vertex> ends{x_vertex(0), x_vertex(1)};
  CHECK(oracle::brute_intersection(p4, ends) == std::vector<int>{0});

  auto dom = testutil::domino();
  std::vector<Vertex> all_x{x_vertex(0), x_vertex(1), x_vertex(2)};
  CHECK(oracle::brute_intersection(dom, all_x) == std::vector<int>{1});  // {e}

  CHECK_THROWS_AS(oracle::brute_intersection(p4, std::vector<Vertex>{}), std::invalid_argument);
  std::vector<Vertex> mixed{x_vertex(0), y_vertex(0)};
  CHECK_THROWS_AS(oracle::brute_intersection(p4, mixed), std::invalid_argument);
}

namespace {
LessMatrix chain(int k) {
  LessMatrix less(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) less[i][j] = true;
  return less;
}
}  // namespace

TEST_CASE("order dimension oracle") {
  CHECK(oracle::brute_order_dimension_leq(chain(2), 1));
  CHECK(oracle::brute_order_dimension_leq(chain(7), 1));

  // the four-element diamond: bottom, two middles, top
  LessMatrix diamond(4, std::vector<bool>(4, false));
  diamond[0][1] = diamond[0][2] = diamond[0][3] = true;
  diamond[1][3] = diamond[2][3] = true;
  CHECK(!oracle::brute_order_dimension_leq(diamond, 1));
  CHECK(oracle::brute_order_dimension_leq(diamond, 2));

  // standard six-element example: a_i < b_j exactly for i != j
  LessMatrix s3(6, std::vector<bool>(6, false));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) s3[i][3 + j] = true;
  CHECK(!oracle::brute_order_dimension_leq(s3, 2));
  CHECK(oracle::brute_order_dimension_leq(s3, 3));

  LessMatrix antichain(4, std::vector<bool>(4, false));
  CHECK(!oracle::brute_order_dimension_leq(antichain, 1));
  CHECK(oracle::brute_order_dimension_leq(antichain, 2));

  CHECK_THROWS_AS(oracle::brute_order_dimension_leq(chain(11), 2), std::invalid_argument);
  CHECK_THROWS_AS(oracle::brute_order_dimension_leq(chain(3), 4), std::invalid_argument);
}

TEST_CASE("distance-hereditary oracle") {
  CHECK(oracle::brute_distance_hereditary(testutil::p4()));
  CHECK(!oracle::brute_distance_hereditary(testutil::c6()));
  CHECK(!oracle::brute_distance_hereditary(testutil::domino()));
  BipartiteGraph big(8, 8);
  CHECK_THROWS_AS(oracle::brute_distance_hereditary(big), std::invalid_argument);
}

TEST_CASE("distance-hereditary equals hole- and domino-freeness") {
  for (int nx = 1; nx <= 4; ++nx)
    for (int ny = nx; nx + ny <= 8; ++ny)
      testutil::for_each_bipartite(nx, ny, [&](const std::vector<std::uint32_t>& rows) {
        if (!testutil::mask_filters(nx, ny, rows).connected) return;
        auto g = testutil::from_rows(nx, ny, rows);
        CHECK(oracle::brute_distance_hereditary(g) == !find_forbidden(g).has_value());
      });
}

TEST_SUITE_END();
