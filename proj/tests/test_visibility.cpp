#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "tsnet/errors.hpp"
#include "tsnet/series.hpp"
#include "tsnet/visibility.hpp"

using oracles::edge_set;
using oracles::EdgeSet;
using tsnet::errc;
using tsnet::TimeSeries;
using tsnet::VisibilityGraph;
using tsnet::VisibilityMethod;

TEST_CASE("visible(): the valley pair sees over, collinear and flat do not") {
  TimeSeries valley({3, 1, 2});
  CHECK(tsnet::visible(valley, 0, 2));  // line at t=1 is 2.5, above y=1
  CHECK(tsnet::visible(valley, 0, 1));

  TimeSeries ramp({1, 2, 3});
  CHECK_FALSE(tsnet::visible(ramp, 0, 2));  // collinear midpoint blocks

  TimeSeries flat({5, 5, 5});
  CHECK_FALSE(tsnet::visible(flat, 0, 2));
}

TEST_CASE("visible() rejects out-of-contract indices") {
  TimeSeries ts({1, 2, 3});
  CHECK(oracles::thrown_code([&] { tsnet::visible(ts, 1, 1); }) ==
        errc::invalid_parameter);
  CHECK(oracles::thrown_code([&] { tsnet::visible(ts, 2, 1); }) ==
        errc::invalid_parameter);
  CHECK(oracles::thrown_code([&] { tsnet::visible(ts, 0, 3); }) ==
        errc::invalid_parameter);
  CHECK(oracles::thrown_code([&] { tsnet::visible(ts, -1, 1); }) ==
        errc::invalid_parameter);
}

TEST_CASE("small fixtures: triangle, path, flat path") {
  CHECK(edge_set(tsnet::build_visibility_graph(TimeSeries({3, 1, 2}))) ==
        EdgeSet{{0, 1}, {0, 2}, {1, 2}});
  CHECK(edge_set(tsnet::build_visibility_graph(TimeSeries({1, 2, 3}))) ==
        EdgeSet{{0, 1}, {1, 2}});
  CHECK(edge_set(tsnet::build_visibility_graph(TimeSeries({5, 5, 5, 5, 5}))) ==
        EdgeSet{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
}

TEST_CASE("series shorter than 2 samples cannot form a graph") {
  CHECK(oracles::thrown_code([] {
          tsnet::build_visibility_graph(TimeSeries({1.0}));
        }) == errc::invalid_parameter);
}

TEST_CASE("chain property: consecutive samples always see each other") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    TimeSeries ts(oracles::random_values(rng, 2 + trial * 7));
    for (auto method :
         {VisibilityMethod::quadratic, VisibilityMethod::divide_and_conquer}) {
      VisibilityGraph g = tsnet::build_visibility_graph(ts, method);
      for (int i = 0; i + 1 < g.node_count(); ++i) REQUIRE(g.has_edge(i, i + 1));
    }
  }
}

TEST_CASE("convex increments give the complete graph, concave the bare path") {
  const int n = 40;
  std::vector<double> convex(n), concave(n);
  for (int i = 0; i < n; ++i) {
    convex[static_cast<std::size_t>(i)] = static_cast<double>(i) * i;
    concave[static_cast<std::size_t>(i)] =
        2.0 * n * i - static_cast<double>(i) * i;
  }
  VisibilityGraph gc = tsnet::build_visibility_graph(TimeSeries(convex));
  CHECK(gc.edge_count() == n * (n - 1) / 2);

  VisibilityGraph gp = tsnet::build_visibility_graph(TimeSeries(concave));
  CHECK(gp.edge_count() == n - 1);
  for (int i = 0; i + 1 < n; ++i) CHECK(gp.has_edge(i, i + 1));
}

TEST_CASE("quadratic and divide-and-conquer agree on random series") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> len_dist(2, 200);
  for (int trial = 0; trial < 60; ++trial) {
    TimeSeries ts(oracles::random_values(rng, len_dist(rng)));
    auto quad = tsnet::build_visibility_graph(ts, VisibilityMethod::quadratic);
    auto dnc =
        tsnet::build_visibility_graph(ts, VisibilityMethod::divide_and_conquer);
    REQUIRE(edge_set(quad) == edge_set(dnc));
  }
}

TEST_CASE("an edge exists exactly when visible() says so") {
  std::mt19937 rng(83);
  for (int trial = 0; trial < 10; ++trial) {
    TimeSeries ts(oracles::random_values(rng, 40));
    VisibilityGraph g = tsnet::build_visibility_graph(ts);
    for (int i = 0; i < 40; ++i) {
      for (int j = i + 1; j < 40; ++j) {
        REQUIRE(g.has_edge(i, j) == tsnet::visible(ts, i, j));
      }
    }
  }
}

TEST_CASE("builder matches the triple-loop evaluation on short series") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> len_dist(2, 60);
  for (int trial = 0; trial < 60; ++trial) {
    auto values = oracles::random_values(rng, len_dist(rng));
    auto expected = oracles::visibility_edges_triple_loop(values);
    auto got = edge_set(tsnet::build_visibility_graph(TimeSeries(values)));
    REQUIRE(got == expected);
  }
}

TEST_CASE("periodic orbit: the edge pattern repeats with the period") {
  // Tile one settled 16-cycle four times so the series is exactly periodic.
  TimeSeries cycle = tsnet::logistic_series({3.566, 0.4, 16, 5000});
  std::vector<double> tiled;
  for (int rep = 0; rep < 4; ++rep) {
    tiled.insert(tiled.end(), cycle.values().begin(), cycle.values().end());
  }
  VisibilityGraph g = tsnet::build_visibility_graph(TimeSeries(tiled));
  const int n = static_cast<int>(tiled.size());
  for (int i = 0; i + 16 < n; ++i) {
    for (int j = i + 1; j + 16 < n; ++j) {
      REQUIRE(g.has_edge(i, j) == g.has_edge(i + 16, j + 16));
    }
  }
}

TEST_CASE("positive affine maps of integer series keep the edge set") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> a_dist(1, 5);
  std::uniform_int_distribution<int> b_dist(-10, 10);
  for (int trial = 0; trial < 30; ++trial) {
    auto values = oracles::random_integer_values(rng, 30, 0, 20);
    const double a = a_dist(rng);
    const double b = b_dist(rng);
    std::vector<double> mapped(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) mapped[i] = a * values[i] + b;
    auto before = edge_set(tsnet::build_visibility_graph(TimeSeries(values)));
    auto after = edge_set(tsnet::build_visibility_graph(TimeSeries(mapped)));
    REQUIRE(before == after);
  }
}

TEST_CASE("edge list export and re-ingestion") {
  VisibilityGraph g = tsnet::build_visibility_graph(TimeSeries({3, 1, 2}));
  std::ostringstream out;
  tsnet::write_edge_list(g, out);
  CHECK(out.str() == "0 1\n0 2\n1 2\n");

  std::istringstream in(out.str());
  VisibilityGraph back = tsnet::read_edge_list(in);
  CHECK(edge_set(back) == edge_set(g));
  CHECK(back.node_count() == 3);

  SUBCASE("malformed lines are rejected") {
    std::istringstream bad("0 1\n2\n");
    CHECK(oracles::thrown_code([&] { tsnet::read_edge_list(bad); }) ==
          errc::parse_failure);
  }
  SUBCASE("an empty list is rejected") {
    std::istringstream empty("");
    CHECK(oracles::thrown_code([&] { tsnet::read_edge_list(empty); }) ==
          errc::empty_column);
  }
}

TEST_CASE("DOT export names every edge once") {
  VisibilityGraph g = tsnet::build_visibility_graph(TimeSeries({3, 1, 2}));
  std::ostringstream out;
  tsnet::write_dot(g, out);
  const std::string dot = out.str();
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(dot.find("0 -- 2;") != std::string::npos);
  CHECK(dot.find("1 -- 2;") != std::string::npos);
}

TEST_CASE("graph construction validates its edge list") {
  CHECK(oracles::thrown_code([] {
          VisibilityGraph(3, {{0, 0}});
        }) == errc::invalid_parameter);
  CHECK(oracles::thrown_code([] {
          VisibilityGraph(3, {{0, 7}});
        }) == errc::invalid_parameter);

  // duplicates collapse
  VisibilityGraph g(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(g.edge_count() == 1);
}

TEST_CASE("component_count sees isolated vertices") {
  CHECK(tsnet::component_count(VisibilityGraph(3, {{0, 1}})) == 2);
  CHECK(tsnet::component_count(
            tsnet::build_visibility_graph(TimeSeries({1, 2, 3}))) == 1);
}
