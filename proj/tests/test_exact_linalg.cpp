#include "strtop/exact_linalg.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace strtop;

namespace {

IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const auto m = static_cast<Eigen::Index>(rows.size());
  const auto n = m == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  IntMatrix A(m, n);
  Eigen::Index i = 0;
  for (auto& r : rows) {
    Eigen::Index j = 0;
    for (long v : r) A(i, j++) = v;
    ++i;
  }
  return A;
}

bool is_smith_form(const IntMatrix& D) {
  const auto k = std::min(D.rows(), D.cols());
  for (Eigen::Index i = 0; i < D.rows(); ++i) {
    for (Eigen::Index j = 0; j < D.cols(); ++j) {
      if (i != j && D(i, j) != 0) return false;
    }
  }
  for (Eigen::Index i = 0; i < k; ++i) {
    if (D(i, i) < 0) return false;
    if (i + 1 < k) {
      if (D(i, i) == 0 && D(i + 1, i + 1) != 0) return false;
      if (D(i, i) != 0 && D(i + 1, i + 1) % D(i, i) != 0) return false;
    }
  }
  return true;
}

// Cofactor expansion; only used on tiny matrices.
Integer determinant(IntMatrix M) {
  const auto n = M.rows();
  if (n == 0) return 1;
  Integer det = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = M(r, c);
      }
    }
    Integer term = M(0, j) * determinant(minor);
    det += (j % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

}  // namespace

TEST_CASE("smith normal form of small matrices") {
  SECTION("identity") {
    IntMatrix I = IntMatrix::Identity(3, 3);
    auto snf = smith_normal_form(I);
    CHECK(snf.D == I);
    CHECK(snf.U == I);
    CHECK(snf.V == I);
    CHECK(snf.rank == 3);
  }
  SECTION("diag(2,3) becomes diag(1,6)") {
    auto snf = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
    CHECK(snf.D == from_rows({{1, 0}, {0, 6}}));
    // determinant divisors: d1 = gcd of entries, d1*d2 = |det|
    CHECK(snf.D(0, 0) == 1);
    CHECK(snf.D(0, 0) * snf.D(1, 1) == 6);
  }
  SECTION("zero matrix") {
    IntMatrix Z = IntMatrix::Zero(2, 2);
    auto snf = smith_normal_form(Z);
    CHECK(snf.D == Z);
    CHECK(snf.rank == 0);
    CHECK(abs(determinant(snf.U)) == 1);
    CHECK(abs(determinant(snf.V)) == 1);
  }
  SECTION("empty matrices") {
    auto snf = smith_normal_form(IntMatrix(0, 3));
    CHECK(snf.rank == 0);
    CHECK(snf.V.rows() == 3);
    auto snf2 = smith_normal_form(IntMatrix(4, 0));
    CHECK(snf2.U.rows() == 4);
  }
  SECTION("deterministic") {
    IntMatrix A = from_rows({{4, 6, 2}, {2, 8, -4}, {6, 0, 10}});
    auto a = smith_normal_form(A);
    auto b = smith_normal_form(A);
    CHECK(a.U == b.U);
    CHECK(a.V == b.V);
  }
}

TEST_CASE("random smith normal forms satisfy all identities") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(0, 5), entry(-6, 6);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix A(dim(rng), dim(rng));
    for (Eigen::Index i = 0; i < A.rows(); ++i)
      for (Eigen::Index j = 0; j < A.cols(); ++j) A(i, j) = entry(rng);
    auto snf = smith_normal_form(A);
    REQUIRE(snf.U * A * snf.V == snf.D);
    REQUIRE(is_smith_form(snf.D));
    REQUIRE(snf.U * snf.U_inv == IntMatrix::Identity(A.rows(), A.rows()));
    REQUIRE(snf.V * snf.V_inv == IntMatrix::Identity(A.cols(), A.cols()));
    REQUIRE(snf.rank == rational_rank(A));
    REQUIRE(kernel_basis(A).cols() + rational_rank(A) == A.cols());
    if (A.rows() > 0) REQUIRE((A * kernel_basis(A)).isZero());
  }
}

TEST_CASE("homology at the middle of a two-step complex") {
  SECTION("cokernel of multiplication by 2") {
    auto h = homology_at(from_rows({{2}}), IntMatrix::Zero(1, 1));
    CHECK(h.group == FinAbGroup::cyclic(2));
    CHECK(h.basis_lift.cols() == 1);
  }
  SECTION("injective outgoing differential") {
    auto h = homology_at(IntMatrix::Zero(2, 1), IntMatrix::Identity(2, 2));
    CHECK(h.group.is_trivial());
  }
  SECTION("zero differentials") {
    auto h = homology_at(IntMatrix::Zero(3, 0), IntMatrix::Zero(0, 3));
    CHECK(h.group == FinAbGroup::free(3));
  }
  SECTION("nonzero composition is rejected") {
    CHECK_THROWS_AS(homology_at(from_rows({{1}}), from_rows({{1}})), CompositionError);
  }
  SECTION("mixed torsion and free part") {
    // Z^3 with kernel Z^2 (first two coords) and image spanned by (2,4,0)
    IntMatrix d_out = from_rows({{0, 0, 1}});
    IntMatrix d_in = from_rows({{2}, {4}, {0}});
    auto h = homology_at(d_in, d_out);
    CHECK(h.group == FinAbGroup(1, {2}));
    auto c = h.module.coordinates(IntVector(h.basis_lift.col(0)));
    REQUIRE(c);
    CHECK((*c)(0) == 1);
  }
  SECTION("permuting bases gives the same group") {
    IntMatrix d_in = from_rows({{2, 0}, {0, 6}, {0, 0}});
    IntMatrix d_out = IntMatrix::Zero(1, 3);
    IntMatrix P = from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    auto h1 = homology_at(d_in, d_out);
    auto h2 = homology_at(P * d_in, d_out * P.transpose());
    CHECK(h1.group == h2.group);
    CHECK(h1.group == FinAbGroup(1, {2, 6}));
  }
}

TEST_CASE("rational rank") {
  CHECK(rational_rank(IntMatrix(IntMatrix::Identity(4, 4))) == 4);
  CHECK(rational_rank(from_rows({{2, 4}, {1, 2}})) == 1);
  CHECK(rational_rank(IntMatrix(IntMatrix::Zero(3, 2))) == 0);
  RatMatrix R(2, 2);
  R << Rational(1, 2), Rational(1, 3), Rational(3, 2), Rational(1);
  CHECK(rational_rank(R) == 1);
}

TEST_CASE("subquotient coordinates reduce torsion") {
  IntMatrix N = IntMatrix::Identity(2, 2);
  IntMatrix R = from_rows({{3}, {0}});
  Subquotient q(N, R);
  CHECK(q.group() == FinAbGroup(1, {3}));
  IntVector v(2);
  v << 7, 0;
  auto c = q.coordinates(v);
  REQUIRE(c);
  CHECK((*c)(0) == 1);
  CHECK(q.in_denominator(IntVector(R.col(0))));
  IntVector outside(2);
  outside << 1, 1;
  CHECK(q.in_numerator(outside));
}

TEST_CASE("echelon reducer gives canonical representatives") {
  IntMatrix L = from_rows({{2, 0}, {1, 3}});
  EchelonReducer red(L);
  CHECK(red.rank() == 2);
  IntVector a(2), b(2);
  a << 5, 4;
  b = a + L.col(0) * Integer(3) - L.col(1) * Integer(2);
  CHECK(red.reduce(a) == red.reduce(b));
  CHECK(red.contains(IntVector(L.col(1))));
}
