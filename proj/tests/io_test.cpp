#include "doctest.h"

#include <algorithm>
#include <sstream>
#include <string>

#include "fkwalk/io.hpp"

using namespace fkwalk;

TEST_CASE("manifold short names parse") {
  CHECK(parse_manifold("line").kind() == ManifoldKind::EuclideanLine);
  CHECK(parse_manifold("euclidean:3").dimension() == 3);
  CHECK(parse_manifold("circle:2.5").radius() == 2.5);
  CHECK(parse_manifold("sphere:1").kind() == ManifoldKind::Sphere2);
  CHECK(parse_manifold("hyperbolic:1.5").kind() == ManifoldKind::HyperbolicPlane);
  CHECK_THROWS_AS(parse_manifold("torus:1"), ParseError);
  CHECK_THROWS_AS(parse_manifold("circle:1,2"), ParseError);
  CHECK_THROWS_AS(parse_manifold("circle:abc"), ParseError);
}

TEST_CASE("manifold JSON round trips through the parser") {
  for (const char* name : {"line", "euclidean:2", "circle:1.5", "sphere:2", "hyperbolic:1"}) {
    const Manifold m = parse_manifold(name);
    const Manifold again = parse_manifold(manifold_json(m));
    CHECK(again.kind() == m.kind());
    CHECK(again.dimension() == m.dimension());
  }
  const Manifold chart = parse_manifold(
      R"({"kind":"chart","metric":"euclidean","box_lo":[-1],"box_hi":[1]})");
  CHECK(chart.kind() == ManifoldKind::Chart);
}

TEST_CASE("potential specs parse with coupling") {
  CHECK(parse_potential("zero").describe() == "zero");
  CHECK(parse_potential("constant:2").base(Point(0.0)) == 2.0);
  CHECK(parse_potential("harmonic:1,0").base(Point(1.0)) == doctest::Approx(0.5));
  CHECK(parse_potential("well:2,0.5,0").base(Point(0.0)) == doctest::Approx(-2.0));
  CHECK(parse_potential("zero", 0.25).curvature_coupling() == 0.25);
  CHECK_THROWS_AS(parse_potential("quartic:1"), ParseError);
  CHECK_THROWS_AS(parse_potential("harmonic"), ParseError);
}

TEST_CASE("estimate serialization is deterministic and embeds provenance") {
  KernelEstimate est;
  est.value = 0.25;
  est.std_error = 0.01;
  est.samples = 100;
  est.grid = HyperfiniteGrid::make(1.0, 64);
  est.method = "bridge";
  const std::string a = estimate_json(est, Manifold::euclidean_line(), Potential::zero(), "cfg");
  const std::string b = estimate_json(est, Manifold::euclidean_line(), Potential::zero(), "cfg");
  CHECK(a == b);
  CHECK(a.find(kLibraryVersion) != std::string::npos);
  CHECK(a.find("cfg") != std::string::npos);
  CHECK(a.back() == '\n');
}

TEST_CASE("walk CSV has a JSON header and one row per lattice point") {
  const HyperfiniteGrid grid = HyperfiniteGrid::make(1.0, 8);
  const WalkPath path = sample_line_walk(0.0, grid, {1, 0});
  std::ostringstream out;
  write_walk_csv(out, path, {1, 0});
  const std::string text = out.str();
  CHECK(text.rfind("# {", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 1 + 9);  // header, columns, rows
}

TEST_CASE("sweep CSV lists one row per n with relative errors") {
  std::vector<long> ns{16, 32};
  std::vector<KernelEstimate> ests(2);
  ests[0].value = 0.5;
  ests[1].value = 0.4;
  std::vector<double> oracles{0.5, 0.5};
  std::ostringstream out;
  write_sweep_csv(out, ns, ests, oracles, "cfg");
  const std::string text = out.str();
  CHECK(text.find("n,estimate,std_error,oracle,rel_error") != std::string::npos);
  CHECK(text.find("\n16,") != std::string::npos);
  const std::size_t row = text.find("\n32,");
  REQUIRE(row != std::string::npos);
  const std::size_t last_comma = text.find_last_of(',', text.find('\n', row + 1));
  CHECK(std::stod(text.substr(last_comma + 1)) == doctest::Approx(-0.2));  // 0.4 / 0.5 - 1
}
