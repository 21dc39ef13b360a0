#include "strtop/spectral.hpp"

#include <catch_amalgamated.hpp>

using namespace strtop;

namespace {

IntMatrix scalar(long v) {
  IntMatrix M(1, 1);
  M(0, 0) = v;
  return M;
}

// E^2 of the loop fibration over S^n in the shifted grading: a at (-n,0) with
// a^2 = 0, x at (0,n-1) polynomial.
Page sphere_page(int n, int q_max) {
  std::vector<Generator> gens = {{"a", -n, GeneratorKind::Polynomial, 0}, {"x", n - 1, GeneratorKind::Polynomial, 0}};
  RingPresentation ring(gens, {IntPolynomial::monomial({2, 0})});
  auto bigraded = std::make_shared<BigradedRing>(ring, std::vector<Bidegree>{{-n, 0}, {0, n - 1}});
  Page blank(2, {-n, 0, 0, q_max});
  for (int p : {-n, 0}) {
    for (int q = 0; q <= q_max; q += n - 1) blank.set_group({p, q}, FinAbGroup::free(1));
  }
  return attach_ring(blank, bigraded);
}

Page at_level(Page E, int level) {
  while (E.level() < level) E = turn_page(E);
  return E;
}

}  // namespace

TEST_CASE("zero differentials leave the page unchanged") {
  Page E(2, {0, 3, 0, 6});
  E.set_group({0, 0}, FinAbGroup::free(1));
  E.set_group({3, 2}, FinAbGroup(1, {2}));
  E.set_group({1, 4}, FinAbGroup::cyclic(6));
  Page F = turn_page(E);
  CHECK(F.level() == 3);
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 6; ++q) CHECK(F.group({p, q}) == E.group({p, q}));
}

TEST_CASE("a differential of degree 2 leaves a cokernel") {
  Page E(2, {0, 2, 0, 1});
  E.set_group({2, 0}, FinAbGroup::free(1));
  E.set_group({0, 1}, FinAbGroup::free(1));
  E.set_differential_on_generators({2, 0}, scalar(2));
  Page F = turn_page(E);
  CHECK(F.group({2, 0}).is_trivial());
  CHECK(F.group({0, 1}) == FinAbGroup::cyclic(2));

  E.set_differential_on_generators({2, 0}, scalar(-1));
  Page G = turn_page(E);
  CHECK(G.group({2, 0}).is_trivial());
  CHECK(G.group({0, 1}).is_trivial());
  CHECK(E.euler_characteristic() == G.euler_characteristic());
}

TEST_CASE("nonzero d o d is rejected") {
  Page E(2, {0, 4, 0, 2});
  E.set_group({4, 0}, FinAbGroup::free(1));
  E.set_group({2, 1}, FinAbGroup::free(1));
  E.set_group({0, 2}, FinAbGroup::free(1));
  E.set_differential_on_generators({4, 0}, scalar(1));
  E.set_differential_on_generators({2, 1}, scalar(1));
  CHECK_THROWS_AS(turn_page(E), CompositionError);
}

TEST_CASE("shifts reindex entries") {
  Page E(2, {0, 3, 0, 4});
  E.set_group({3, 2}, FinAbGroup::cyclic(5));
  Page same = shift(E, {0, 0});
  CHECK(same.group({3, 2}) == FinAbGroup::cyclic(5));
  Page moved = shift(E, {3, 0});
  CHECK(moved.window().p_min == -3);
  CHECK(moved.group({0, 2}) == FinAbGroup::cyclic(5));
  Page back = shift(moved, {-3, 0});
  CHECK(back.window() == E.window());
  CHECK(back.group({3, 2}) == FinAbGroup::cyclic(5));
}

TEST_CASE("Leibniz extension on the even sphere page") {
  const int n = 2;
  Page E = at_level(sphere_page(n, 8), n);
  const auto& ring = E.ring()->ring;
  auto d = leibniz_extend(E, {{"x", ring.monomial({{"a", 1}, {"x", 2}}, 2)}});
  CHECK(check_leibniz(d).empty());

  // d(x^2) = d(x) x - x d(x) = 0 for odd |x|, d(x^3) = d(x) x^2 = 2 a x^4
  IntMatrix x2 = d.differential_on_generators({0, 2});
  CHECK(x2.isZero());
  IntMatrix x3 = d.differential_on_generators({0, 3});
  CHECK(x3 == scalar(2));

  Page stable = turn_page(d);
  CHECK(stable.group({-2, 2}) == FinAbGroup::cyclic(2));
  CHECK(stable.group({0, 1}).is_trivial());
  CHECK(stable.group({0, 2}) == FinAbGroup::free(1));
  CHECK(stable.euler_characteristic() == d.euler_characteristic());

  SECTION("wrong bidegree is rejected") {
    CHECK_THROWS_AS(leibniz_extend(E, {{"x", ring.monomial({{"a", 1}, {"x", 1}})}}), BidegreeError);
  }
  SECTION("zero generator differentials give zero differentials") {
    CHECK(leibniz_extend(E, {}).differential_lifts().empty());
  }
  SECTION("corrupting one monomial is located") {
    Page bad = d;
    bad.set_differential_on_generators({0, 2}, scalar(2));
    auto report = check_leibniz(bad);
    REQUIRE_FALSE(report.empty());
    CHECK(report.front().bidegree == Bidegree{0, 2});
  }
}

TEST_CASE("Leibniz on an even generator doubles") {
  // x of even degree: d(x^2) = 2 x d(x)
  std::vector<Generator> gens = {{"a", -3, GeneratorKind::Exterior, 0}, {"x", 2, GeneratorKind::Polynomial, 0}};
  auto bigraded = std::make_shared<BigradedRing>(RingPresentation(gens, {}), std::vector<Bidegree>{{-3, 0}, {0, 2}});
  Page blank(3, {-3, 0, 0, 10});
  for (int p : {-3, 0})
    for (int q = 0; q <= 10; q += 2) blank.set_group({p, q}, FinAbGroup::free(1));
  Page E = attach_ring(blank, bigraded);
  Page d = leibniz_extend(E, {{"x", bigraded->ring.monomial({{"a", 1}, {"x", 2}})}});
  CHECK(d.differential_on_generators({0, 4}) == scalar(2));
  CHECK(check_leibniz(d).empty());
}

TEST_CASE("module pairings") {
  const int n = 2;
  Page E = leibniz_extend(at_level(sphere_page(n, 8), n),
                          {{"x", sphere_page(n, 8).ring()->ring.monomial({{"a", 1}, {"x", 2}}, 2)}});
  SECTION("self action") {
    CHECK(check_module_pairing(E, E, E.product()).empty());
  }
  SECTION("zero pairing") {
    Pairing zero = [&](Bidegree b1, const IntVector&, Bidegree b2, const IntVector&) {
      return IntVector(IntVector::Zero(E.ambient_dim(b1 + b2)));
    };
    CHECK(check_module_pairing(E, E, zero).empty());
  }
  SECTION("corrupted pairing") {
    Pairing bad = [&](Bidegree b1, const IntVector& x, Bidegree b2, const IntVector& y) {
      IntVector v = E.multiply(b1, x, b2, y);
      if (b1 == Bidegree{0, 1} && b2 == Bidegree{0, 1}) v *= Integer(3);
      return v;
    };
    auto report = check_module_pairing(E, E, bad);
    REQUIRE_FALSE(report.empty());
  }
}

TEST_CASE("morphism checks") {
  Page E(2, {0, 2, 0, 1});
  E.set_group({2, 0}, FinAbGroup::free(1));
  E.set_group({0, 1}, FinAbGroup::free(1));
  E.set_differential_on_generators({2, 0}, scalar(1));
  SpectralSequence ss;
  ss.pages = {E, turn_page(E)};

  SSMorphism id{2, {0, 0}, {{2, {{{2, 0}, scalar(1)}, {{0, 1}, scalar(1)}}}, {3, {}}}};
  CHECK(check_morphism(id, ss, ss).empty());
  SSMorphism zero{2, {0, 0}, {}};
  CHECK(check_morphism(zero, ss, ss).empty());

  SSMorphism skewed{2, {0, 0}, {{2, {{{2, 0}, scalar(1)}, {{0, 1}, scalar(2)}}}}};
  auto report = check_morphism(skewed, ss, ss);
  REQUIRE(report.size() == 1);
  CHECK(report[0].bidegree == Bidegree{2, 0});
  CHECK(report[0].level == 2);

  SSMorphism malformed{2, {0, 0}, {{2, {{{2, 0}, IntMatrix::Zero(2, 1)}}}}};
  CHECK_THROWS_AS(check_morphism(malformed, ss, ss), std::invalid_argument);
}

TEST_CASE("induced maps on the next page") {
  Page E(2, {0, 2, 0, 1});
  E.set_group({2, 0}, FinAbGroup::free(1));
  E.set_group({0, 1}, FinAbGroup::free(1));
  E.set_differential_on_generators({2, 0}, scalar(2));
  SpectralSequence ss;
  ss.pages = {E, turn_page(E)};
  SSMorphism triple{2, {0, 0}, {{2, {{{2, 0}, scalar(3)}, {{0, 1}, scalar(3)}}}, {3, {{{0, 1}, scalar(1)}}}}};
  CHECK(check_morphism(triple, ss, ss).empty());
  SSMorphism wrong{2, {0, 0}, {{2, {{{2, 0}, scalar(3)}, {{0, 1}, scalar(3)}}}, {3, {{{0, 1}, scalar(0)}}}}};
  auto report = check_morphism(wrong, ss, ss);
  REQUIRE(report.size() == 1);
  CHECK(report[0].check == "induced");
}
