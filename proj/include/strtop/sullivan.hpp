#pragma once

#include "strtop/monomial.hpp"
#include "strtop/serre_string.hpp"

#include <map>
#include <string>
#include <vector>

namespace strtop {

using RatPolynomial = Polynomial<Rational>;

/// Raised when d o d is nonzero; `generator` is the first offender.
class DifferentialError : public std::invalid_argument {
 public:
  DifferentialError(const std::string& what, std::string generator)
      : std::invalid_argument(what), generator(std::move(generator)) {}
  std::string generator;
};

/// Free graded-commutative algebra over Q on generators of positive degree,
/// with a differential of degree +1 given on generators.
class SullivanAlgebra {
 public:
  SullivanAlgebra() = default;
  explicit SullivanAlgebra(std::vector<Generator> generators);

  const std::vector<Generator>& generators() const { return gens_; }
  std::size_t index(const std::string& name) const;

  RatPolynomial one() const { return RatPolynomial::monomial(Exponent(gens_.size(), 0)); }
  RatPolynomial monomial(const std::vector<std::pair<std::string, int>>& powers, Rational c = 1) const;

  /// Throws std::invalid_argument if the value is not of degree |g| + 1.
  void set_differential(const std::string& name, RatPolynomial value);
  const RatPolynomial& differential(std::size_t i) const { return d_[i]; }
  RatPolynomial d(const RatPolynomial& x) const;
  RatPolynomial product(const RatPolynomial& x, const RatPolynomial& y) const { return multiply(gens_, x, y); }

  /// Throws DifferentialError naming the first generator with d(d(g)) != 0.
  void validate() const;

  std::vector<Exponent> monomials_in_degree(int n) const;
  std::string to_string() const;

 private:
  std::vector<Generator> gens_;
  std::vector<RatPolynomial> d_;
};

/// Betti numbers b_0 .. b_maxdeg of H(A, d).
std::vector<long> dga_cohomology(const SullivanAlgebra& A, int maxdeg);

/// Lambda(x_n) for odd n; Lambda(x_n, y_{2n-1}) with dy = x_n^2 for even n.
SullivanAlgebra sphere_model(int n);

/// Model of an S^k bundle over S^n with k odd. For even n the bundle needs
/// k != n +- 1 and n - 1 not a multiple of k - 1; the model is then
/// Lambda(x_k) (x) Lambda(x_n, y_{2n-1}) with dy = x_n^2.
SullivanAlgebra bundle_model(int k, int n);

/// Tensor product; clashing names in B get a trailing "'".
SullivanAlgebra tensor(const SullivanAlgebra& A, const SullivanAlgebra& B);

/// Lambda(V + sV) with |sx| = |x| - 1, D x = dx and D(sx) = -s(dx), where s is
/// the degree -1 derivation x -> sx. Generators of degree 1 are rejected.
SullivanAlgebra vigue_sullivan_loop(const SullivanAlgebra& A);

struct LoopBundleReport {
  std::vector<long> bundle_betti;
  std::vector<long> product_betti;
  /// Integral E^2 of LS^k -> LE -> LS^n is torsion-free up to the window.
  HypothesisCheck torsion_free;
  /// Lifting the rational answer to integers.
  HypothesisCheck integral_lift;
};

LoopBundleReport rational_loop_bundle(int k, int n, int maxdeg);

}  // namespace strtop
