#include "strtop/graded_group.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace strtop;

namespace {

FinAbGroup random_group(std::mt19937& rng) {
  std::uniform_int_distribution<int> rank(0, 2), count(0, 2), order(2, 12);
  std::vector<Integer> orders;
  for (int i = count(rng); i > 0; --i) orders.push_back(order(rng));
  return FinAbGroup(static_cast<std::size_t>(rank(rng)), orders);
}

// Order of the torsion subgroup, and the number of elements killed by m, as
// isomorphism invariants that are easy to compute from any decomposition.
Integer torsion_order(const FinAbGroup& g) {
  Integer n = 1;
  for (const auto& t : g.torsion()) n *= t;
  return n;
}

}  // namespace

TEST_CASE("normal form of finitely generated abelian groups") {
  CHECK(FinAbGroup(0, {2, 3}) == FinAbGroup(0, {6}));
  CHECK(FinAbGroup(0, {4, 2}).torsion() == std::vector<Integer>{2, 4});
  CHECK(FinAbGroup(1, {0, 1}).rank() == 2);
  CHECK(FinAbGroup(0, {6, 10}).torsion() == std::vector<Integer>{2, 30});
  CHECK(FinAbGroup(2, {2, 6}).to_string() == "Z^2 + Z/2 + Z/6");
  CHECK(FinAbGroup().to_string() == "0");
  CHECK(FinAbGroup(0, {6}).has_odd_torsion());
  CHECK_FALSE(FinAbGroup(3, {2, 8}).has_odd_torsion());
}

TEST_CASE("tensor products") {
  FinAbGroup G(1, {2, 4});
  CHECK(tensor(FinAbGroup::free(1), G) == G);
  CHECK(tensor(FinAbGroup::cyclic(2), FinAbGroup::cyclic(4)) == FinAbGroup::cyclic(2));
  CHECK(tensor(FinAbGroup::free(2), FinAbGroup::cyclic(3)) == FinAbGroup(0, {3, 3}));
}

TEST_CASE("tor") {
  CHECK(tor(FinAbGroup::free(5), FinAbGroup(1, {7})).is_trivial());
  CHECK(tor(FinAbGroup::cyclic(6), FinAbGroup::cyclic(4)) == FinAbGroup::cyclic(2));
  CHECK(tor(FinAbGroup(1, {2}), FinAbGroup::cyclic(2)) == FinAbGroup::cyclic(2));
}

TEST_CASE("tensor and tor are symmetric, additive and multiply ranks") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_group(rng), b = random_group(rng), c = random_group(rng);
    REQUIRE(tensor(a, b) == tensor(b, a));
    REQUIRE(tor(a, b) == tor(b, a));
    REQUIRE(tensor(direct_sum(a, b), c) == direct_sum(tensor(a, c), tensor(b, c)));
    REQUIRE(tor(direct_sum(a, b), c) == direct_sum(tor(a, c), tor(b, c)));
    REQUIRE(tensor(a, b).rank() == a.rank() * b.rank());
    REQUIRE(torsion_order(tor(a, b)) <= torsion_order(a) * torsion_order(b));
  }
}

TEST_CASE("universal coefficients") {
  GradedGroup sphere(0, 6);
  sphere.set(0, FinAbGroup::free(1));
  sphere.set(4, FinAbGroup::free(1));
  CHECK(uct_row(sphere, FinAbGroup::free(1)) == sphere);
  auto mod5 = uct_row(sphere, FinAbGroup::cyclic(5));
  CHECK(mod5.at(0) == FinAbGroup::cyclic(5));
  CHECK(mod5.at(4) == FinAbGroup::cyclic(5));
  CHECK(mod5.at(5).is_trivial());

  GradedGroup rp(0, 3);
  rp.set(0, FinAbGroup::free(1));
  rp.set(1, FinAbGroup::cyclic(2));
  auto mod2 = uct_row(rp, FinAbGroup::cyclic(2));
  CHECK(mod2.at(1) == FinAbGroup::cyclic(2));
  CHECK(mod2.at(2) == FinAbGroup::cyclic(2));
}

TEST_CASE("graded group window") {
  GradedGroup g(-3, 4);
  CHECK(g.at(-3).is_trivial());
  CHECK_THROWS(g.set(5, FinAbGroup::free(1)));
  g.set(-3, FinAbGroup::free(1));
  auto s = g.shifted(3);
  CHECK(s.min_degree() == 0);
  CHECK(s.at(0) == FinAbGroup::free(1));
}
