#include <doctest.h>

#include "convrad/manifest.hpp"

using namespace convrad;

namespace {

const char* kExample = R"(# exponential instance
prime = 2

[domain]
kind = annulus
s1 = -2
s2 = 0

[matrix]
rank = 1
entry 1 1 = 1

[triangulation]
marks = -1 -1/2

[run]
N = 64
J = 8
samples = 17
probe 1 -1
probe 3 -1
)";

const char* kGraphExample = R"(prime = 2

[graph]
vertex x
vertex b0 boundary
vertex b1 boundary
vertex b2 boundary
edge x b0 1
edge x b1 1
edge x b2 1 2 2
value x = 1
value b0 = 0
boundary b0 = 0
boundary b1 = 0
boundary b2 = 3
break 1 1/2 = 2
)";

}  // namespace

TEST_CASE("manifest parses module, triangulation and run blocks") {
  Manifest m = parse_manifest(kExample);
  CHECK(m.prime == 2);
  CHECK(m.rank == 1);
  CHECK(m.order == 64);
  CHECK(m.tail == 8);
  CHECK(m.samples == 17);
  REQUIRE(m.probes.size() == 2);
  CHECK(m.probes[1] == std::pair<Rat, Rat>{Rat(3), Rat(-1)});
  DiffModule dm = m.make_module();
  CHECK(dm.rank == 1);
  CHECK(dm.matrix[0][0] == LaurentPoly(Rat(1)));
  CHECK(dm.domain.kind == Domain::Kind::Annulus);
  CHECK(m.make_triangulation().marks == std::vector<Rat>{Rat(-1), Rat(-1, 2)});
}

TEST_CASE("manifest parses graph blocks") {
  Manifest m = parse_manifest(kGraphExample);
  REQUIRE(m.graph.has_value());
  CHECK(m.graph->vertices().size() == 4);
  CHECK(m.graph->edges().size() == 3);
  CHECK(m.graph->edges()[2].weight_u == 2);
  CHECK(m.graph_boundary_values.size() == 3);
  GraphPL f = m.make_graph_pl();
  CHECK(f.vertex_values[0] == Rat(1));
  REQUIRE(f.edge_breaks[0].size() == 1);
  CHECK(f.edge_breaks[0][0].pos == Rat(1, 2));
  CHECK_THROWS_AS(m.make_module(), std::invalid_argument);
}

TEST_CASE("unknown keys are rejected with a line number") {
  try {
    parse_manifest("prime = 2\nbogus = 1\n");
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    CHECK(std::string(e.what()).find("bogus") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_manifest("[nope]\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_manifest("[domain]\nradius = 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_manifest("[run]\nN = 64\nspeed = fast\n"),
                  std::invalid_argument);
}

TEST_CASE("malformed rationals and entries are rejected") {
  CHECK_THROWS_AS(parse_manifest("[domain]\nkind = annulus\ns1 = 1/0\ns2 = 2\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_manifest("[domain]\nkind = annulus\ns1 = 0.5\ns2 = 2\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_manifest("[matrix]\nrank = 1\nentry 1 1 = 1/0*t\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_manifest("[matrix]\nrank = 1\nentry 2 1 = 1\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_manifest("[matrix]\nentry 1 1 = 1\n"),
                  std::invalid_argument);
}

TEST_CASE("serialize round trips") {
  for (const char* text : {kExample, kGraphExample}) {
    Manifest m = parse_manifest(text);
    std::string s = m.serialize();
    Manifest m2 = parse_manifest(s);
    CHECK(m2.serialize() == s);
    CHECK(m2.prime == m.prime);
    CHECK(m2.rank == m.rank);
    CHECK(m2.probes == m.probes);
    CHECK(m2.marks == m.marks);
    CHECK(m2.order == m.order);
  }
}
