#include "strtop/gysin.hpp"
#include "strtop/serre_string.hpp"

#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <fstream>

using namespace strtop;

namespace {

Json read_fixture(const std::string& name) {
  std::ifstream in(std::string(STRTOP_FIXTURE_DIR) + "/" + name);
  REQUIRE(in);
  return Json::parse(in);
}

// epsilon with s_*[B] = epsilon [A], read from the engine's homology bases.
int engine_epsilon(const GysinData& data, const oracle::FundamentalImage& ref) {
  const auto maps = induced_homology_map(gysin_chain_map(data), data);
  const IntMatrix gB = data.B.homology(2).basis_lift;
  const IntMatrix gA = data.A.homology(1).basis_lift;
  REQUIRE(gB.cols() == 1);
  REQUIRE(gA.cols() == 1);
  const long sigma_b = gB(0, 0).convert_to<long>() * ref.b_cycle[0];
  const long tau_a = gA(0, 0).convert_to<long>() * ref.a_cycle[0] * ref.epsilon;
  REQUIRE(maps[2].matrix.rows() == 1);
  return static_cast<int>(maps[2].matrix(0, 0).convert_to<long>() * sigma_b * tau_a);
}

oracle::FundamentalImage torus_oracle(const Json& j, int n) {
  return oracle::gysin_fundamental(j, {0, n, n + 1}, {{0, n}, {0, n + 1}});
}

oracle::FundamentalImage sphere_oracle(const Json& j) { return oracle::gysin_fundamental(j, {0, 2, 3}, {{1, 2}, {1, 3}}); }

}  // namespace

TEST_CASE("boundaries from vertex lists") {
  auto K = SimplicialComplex::from_simplices({{{0}, {1}, {2}}, {{0, 1}, {0, 2}, {1, 2}}, {{0, 1, 2}}});
  K.validate();
  CHECK(K.homology(0).group == FinAbGroup::free(1));
  CHECK(K.homology(1).group.is_trivial());
  CHECK(K.homology(2).group.is_trivial());
  CHECK_THROWS_AS(SimplicialComplex::from_simplices({{{0}, {1}}, {{0, 2}}}), std::invalid_argument);
}

TEST_CASE("A disjoint from B gives the zero map") {
  auto B = SimplicialComplex::from_simplices({{{0}, {1}, {2}}, {{0, 1}, {0, 2}, {1, 2}}});
  auto A = SimplicialComplex::from_simplices({{{0}}});
  GysinData data{B, A, 1, {}};
  auto s = gysin_chain_map(data);
  for (const auto& m : s.maps) CHECK(m.isZero());
  for (const auto& h : induced_homology_map(s, data)) CHECK(h.matrix.isZero());
}

TEST_CASE("torus and meridian") {
  for (auto [file, n] : {std::pair{"torus_meridian_3x3.json", 3}, std::pair{"torus_meridian_4x5.json", 5}}) {
    const Json j = read_fixture(file);
    const GysinData data = gysin_from_json(j);
    const auto ref = torus_oracle(j, n);
    INFO(file << ": " << ref.detail);
    REQUIRE(ref.ok);
    CHECK(data.B.homology(2).group == FinAbGroup::free(1));
    CHECK(data.B.homology(1).group == FinAbGroup::free(2));
    CHECK(data.A.homology(1).group == FinAbGroup::free(1));
    CHECK(engine_epsilon(data, ref) == ref.epsilon);
    const auto maps = induced_homology_map(gysin_chain_map(data), data);
    CHECK(abs(maps[2].matrix(0, 0)) == 1);
    CHECK(maps[0].matrix.rows() == 0);
  }
  const Json a = read_fixture("torus_meridian_3x3.json"), b = read_fixture("torus_meridian_4x5.json");
  CHECK(torus_oracle(a, 3).epsilon == torus_oracle(b, 5).epsilon);
}

TEST_CASE("sphere and equator, two triangulations") {
  std::vector<int> eps;
  for (auto file : {"sphere_equator_3.json", "sphere_equator_5.json"}) {
    const Json j = read_fixture(file);
    const GysinData data = gysin_from_json(j);
    const auto ref = sphere_oracle(j);
    INFO(file << ": " << ref.detail);
    REQUIRE(ref.ok);
    eps.push_back(engine_epsilon(data, ref));
    CHECK(eps.back() == ref.epsilon);
  }
  CHECK(eps[0] == eps[1]);
}

TEST_CASE("inconsistent tables are located") {
  Json j = read_fixture("sphere_equator_3.json");
  j["intersections"]["2:3"][0]["sign"] = 1;
  try {
    gysin_chain_map(gysin_from_json(j));
    FAIL("expected a Gysin error");
  } catch (const GysinError& e) {
    REQUIRE(e.simplices.size() == 1);
    CHECK(e.simplices[0] == SimplexId{2, 3});
  }
  j = read_fixture("sphere_equator_3.json");
  j["intersections"]["2:3"][0]["cell"] = 7;
  CHECK_THROWS_AS(gysin_chain_map(gysin_from_json(j)), std::invalid_argument);
}

TEST_CASE("fixtures round-trip through JSON") {
  const Json j = read_fixture("torus_meridian_3x3.json");
  CHECK(to_json(gysin_from_json(j)) == j);
  CHECK_THROWS_AS(load_gysin_data("/nonexistent/fixture.json"), std::runtime_error);
}
