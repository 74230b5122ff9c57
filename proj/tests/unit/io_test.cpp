#include <doctest.h>

#include <random>
#include <sstream>

#include "crg/families.hpp"
#include "crg/io.hpp"
#include "helpers.hpp"

using namespace crg;
using namespace test_helpers;

TEST_CASE("graph files round-trip bit-exactly") {
  std::mt19937 rng(606);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_graph(rng, 1 + static_cast<int>(rng() % 12));
    auto text = emit_graph(g);
    auto back = parse_graph_string(text);
    CHECK(back == g);
    CHECK(emit_graph(back) == text);
  }
  CHECK(emit_graph(Graph(1, {})) == "1 0\n");
}

TEST_CASE("malformed graph files are rejected with a line number") {
  auto expect_line = [](const std::string& text, int line) {
    try {
      parse_graph_string(text);
      FAIL("expected parse_error");
    } catch (const parse_error& e) {
      CHECK(e.line == line);
    }
  };
  expect_line("", 1);
  expect_line("2\n", 1);
  expect_line("x y\n", 1);
  expect_line("2 1\n0 0\n", 2);          // loop (u < v fails)
  expect_line("2 1\n1 0\n", 2);          // unordered pair
  expect_line("3 2\n0 1\n0 1\n", 3);     // duplicate / out of order
  expect_line("3 2\n0 2\n0 1\n", 3);     // out of order
  expect_line("2 2\n0 1\n", 3);          // missing edge line
  expect_line("2 1\n0 1\n0 1\n", 3);     // trailing content
  expect_line("2 1\n0 7\n", 2);          // endpoint out of range
}

TEST_CASE("geometry files") {
  auto geom = gq22();
  auto text = emit_geometry(geom);
  std::istringstream is(text);
  auto back = parse_geometry(is);
  CHECK(back.points == geom.points);
  CHECK(back.lines == geom.lines);

  std::istringstream bad("3 1\n0 9\n");
  CHECK_THROWS_AS(parse_geometry(bad), parse_error);
}
