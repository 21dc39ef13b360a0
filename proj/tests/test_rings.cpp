#include "strtop/ring_presentation.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace strtop;

namespace {

RingPresentation odd_sphere_like(int n) {
  return RingPresentation({make_generator("a", -n), make_generator("u", n - 1)}, {});
}

RingPresentation even_sphere_like(int n) {
  std::vector<Generator> g = {make_generator("b", -1), make_generator("a", -n), make_generator("v", 2 * n - 2)};
  RingPresentation shell(g, {IntPolynomial::monomial({0, 2, 0})});
  return RingPresentation(g, {shell.monomial({{"a", 2}}), shell.monomial({{"a", 1}, {"b", 1}}),
                              shell.monomial({{"a", 1}, {"v", 1}}, 2)});
}

RingPresentation projective_like(int n, int d) {
  std::vector<Generator> g = {make_generator("w", -1), make_generator("c", -d), make_generator("u", d * (n + 1) - 2)};
  RingPresentation shell(g, {IntPolynomial::monomial({0, n + 1, 0})});
  return RingPresentation(g, {shell.monomial({{"c", n + 1}}), shell.monomial({{"w", 1}, {"c", n}}),
                              shell.monomial({{"c", n}, {"u", 1}}, n + 1)});
}

}  // namespace

TEST_CASE("monomial enumeration") {
  auto P = odd_sphere_like(3);
  CHECK(P.monomials_in_degree(0) == std::vector<Exponent>{{0, 0}});
  CHECK(P.monomials_in_degree(-1) == std::vector<Exponent>{{1, 1}});
  CHECK(P.monomials_in_degree(-4).empty());
  CHECK(P.min_degree() == -3);
}

TEST_CASE("negative generators must be nilpotent") {
  CHECK_THROWS_AS(RingPresentation({make_generator("c", -2)}, {}), PresentationError);
  RingPresentation ok({make_generator("c", -2)}, {IntPolynomial::monomial({3})});
  CHECK(ok.component(-4) == FinAbGroup::free(1));
  CHECK(ok.component(-6).is_trivial());
  CHECK_THROWS_AS(RingPresentation({make_generator("c", -2)}, {IntPolynomial::monomial({3}, Integer(2))}),
                  PresentationError);
}

TEST_CASE("components of the even sphere and projective rings") {
  auto S2 = even_sphere_like(2);
  CHECK(S2.component(0) == FinAbGroup(1, {2}));
  CHECK(S2.monomials_in_degree(0).size() == 2);
  auto CP2 = projective_like(2, 2);
  CHECK(CP2.component(0) == FinAbGroup(1, {3}));
  CHECK(odd_sphere_like(3).component(2) == FinAbGroup::free(1));
  // av^j is 2-torsion in every degree 2j(n-1) - n
  auto S4 = even_sphere_like(4);
  CHECK(S4.component(2).torsion() == std::vector<Integer>{2});
}

TEST_CASE("products and signs") {
  auto CP2 = projective_like(2, 2);
  auto w = CP2.monomial({{"w", 1}});
  CHECK(CP2.product(w, w).is_zero());
  CHECK(CP2.product(CP2.monomial({{"c", 2}}), CP2.monomial({{"c", 1}})).is_zero());
  auto S3 = odd_sphere_like(3);
  for (int k = 0; k < 5; ++k) {
    auto p = S3.product(S3.monomial({{"a", 1}}), S3.monomial({{"u", k}}));
    CHECK(p == S3.monomial({{"a", 1}, {"u", k}}));
  }
  // 3 c^2 u = 0 in degree 0
  CHECK(CP2.product(CP2.monomial({{"c", 2}}), CP2.monomial({{"u", 1}}, 3)).is_zero());
  CHECK_FALSE(CP2.product(CP2.monomial({{"c", 2}}), CP2.monomial({{"u", 1}}, 4)).is_zero());
}

TEST_CASE("graded commutativity and associativity on random monomials") {
  RingPresentation R({make_generator("x", 1), make_generator("y", 3), make_generator("z", 2), make_generator("t", -2)},
                     {IntPolynomial::monomial({0, 0, 0, 2}), IntPolynomial::monomial({1, 0, 1, 0}, Integer(3))});
  REQUIRE(R.graded_commutative());
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> bit(0, 1), small(0, 2);
  auto random_monomial = [&] { return IntPolynomial::monomial({bit(rng), bit(rng), small(rng), bit(rng)}); };
  for (int trial = 0; trial < 200; ++trial) {
    auto x = random_monomial(), y = random_monomial(), z = random_monomial();
    const int sign = (R.degree(x) * R.degree(y)) % 2 == 0 ? 1 : -1;
    REQUIRE(R.product(x, y) == R.normal_form(R.product(y, x) * Integer(sign)));
    REQUIRE(R.product(R.product(x, y), z) == R.product(x, R.product(y, z)));
  }
}

TEST_CASE("tensor products of presentations") {
  RingPresentation A({make_generator("x", 2)}, {IntPolynomial::monomial({3})});
  RingPresentation B({make_generator("x", 3)}, {});
  auto P = A.tensor_product(B);
  CHECK(P.generators()[1].name == "x'");
  for (int n = 0; n <= 12; ++n) {
    std::size_t expected = 0;
    for (int k = 0; k <= n; ++k) expected += A.component(k).rank() * B.component(n - k).rank();
    CHECK(P.component(n).rank() == expected);
  }
}

TEST_CASE("prime coefficients") {
  RingPresentation R({make_generator("x", 2)}, {}, 3);
  CHECK(R.component(4) == FinAbGroup::cyclic(3));
  CHECK(R.product(R.monomial({{"x", 1}}, 2), R.monomial({{"x", 1}}, 2)) == R.monomial({{"x", 2}}, 1));
}

TEST_CASE("rendering") {
  CHECK(even_sphere_like(2).to_string() ==
        "Lambda(b) (x) Z[a,v] / (a^2, b*a, 2*a*v); |b| = -1, |a| = -2, |v| = 2");
}
