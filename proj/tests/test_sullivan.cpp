#include "strtop/sullivan.hpp"

#include <catch_amalgamated.hpp>

using namespace strtop;

namespace {

std::vector<long> head(std::vector<long> v, std::size_t n) {
  v.resize(n);
  return v;
}

}  // namespace

TEST_CASE("cohomology of small algebras") {
  CHECK(dga_cohomology(SullivanAlgebra(std::vector<Generator>{}), 4) == std::vector<long>{1, 0, 0, 0, 0});
  CHECK(dga_cohomology(SullivanAlgebra({make_generator("x", 3)}), 5) == std::vector<long>{1, 0, 0, 1, 0, 0});
  CHECK(dga_cohomology(sphere_model(2), 6) == std::vector<long>{1, 0, 1, 0, 0, 0, 0});
  for (int n = 2; n <= 7; ++n) {
    auto b = dga_cohomology(sphere_model(n), 2 * n);
    for (int k = 0; k <= 2 * n; ++k) CHECK(b[k] == (k == 0 || k == n ? 1 : 0));
  }
}

TEST_CASE("d o d is checked") {
  SullivanAlgebra A({make_generator("x", 2), make_generator("y", 3), make_generator("z", 4)});
  A.set_differential("y", A.monomial({{"x", 2}}));
  A.set_differential("z", A.monomial({{"x", 1}, {"y", 1}}));
  try {
    A.validate();
    FAIL("expected a differential error");
  } catch (const DifferentialError& e) {
    CHECK(e.generator == "z");
  }
  CHECK_THROWS_AS(A.set_differential("x", A.monomial({{"z", 1}})), std::invalid_argument);
}

TEST_CASE("sphere and bundle models") {
  CHECK(sphere_model(3).to_string() == "Lambda(x_3); d = 0");
  CHECK(sphere_model(2).to_string() == "Lambda(x_2, y_3); dy = x^2");
  CHECK_THROWS(sphere_model(1));
  CHECK(bundle_model(3, 5).generators().size() == 2);
  CHECK(bundle_model(3, 8).generators().size() == 3);
  CHECK_THROWS_AS(bundle_model(3, 4), PreconditionError);
  CHECK_THROWS_AS(bundle_model(3, 2), PreconditionError);
  CHECK_THROWS_AS(bundle_model(4, 9), PreconditionError);
  CHECK(dga_cohomology(bundle_model(3, 5), 12) == dga_cohomology(tensor(sphere_model(3), sphere_model(5)), 12));
}

TEST_CASE("loop model of an odd sphere") {
  auto L = vigue_sullivan_loop(SullivanAlgebra({make_generator("x", 3)}));
  CHECK(L.generators().size() == 2);
  CHECK(dga_cohomology(L, 8) == std::vector<long>{1, 0, 1, 1, 1, 1, 1, 1, 1});
}

TEST_CASE("loop model of S^2") {
  auto L = vigue_sullivan_loop(sphere_model(2));
  const auto xbar = L.index("xbar");
  CHECK(L.differential(L.index("ybar")) == L.monomial({{"x", 1}, {"xbar", 1}}, -2));
  CHECK(L.differential(xbar).is_zero());
  CHECK_THROWS_AS(vigue_sullivan_loop(SullivanAlgebra({make_generator("t", 1)})), PreconditionError);
}

TEST_CASE("loop models agree with the integral rings rationally") {
  for (int n = 2; n <= 5; ++n) {
    const auto ring = cjy_sphere_ring(n);
    const auto b = dga_cohomology(vigue_sullivan_loop(sphere_model(n)), 14);
    for (int k = 0; k <= 14; ++k) CHECK(b[k] == ring.component(k - n).rank());
  }
}

TEST_CASE("isomorphic presentations give equal loop tables") {
  SullivanAlgebra A({make_generator("y", 3), make_generator("x", 2)});
  A.set_differential("y", A.monomial({{"x", 2}}, 5));
  CHECK(dga_cohomology(vigue_sullivan_loop(A), 12) == dga_cohomology(vigue_sullivan_loop(sphere_model(2)), 12));
}

TEST_CASE("sphere bundle reports") {
  auto odd = rational_loop_bundle(3, 5, 12);
  CHECK(odd.bundle_betti == odd.product_betti);
  CHECK(odd.torsion_free.status == HypothesisCheck::Status::Confirmed);
  CHECK(odd.integral_lift.status == HypothesisCheck::Status::Assumed);
  auto even = rational_loop_bundle(3, 8, 16);
  CHECK(even.bundle_betti == even.product_betti);
  CHECK(even.torsion_free.status == HypothesisCheck::Status::Violated);
  CHECK(head(even.bundle_betti, 4) == std::vector<long>{1, 0, 1, 1});
}
